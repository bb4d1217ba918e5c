#include "transgress/symfunc.hpp"

#include "transgress/error.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace transgress {

namespace {

std::string chern_name(int i) { return "c_" + std::to_string(2 * i); }

// A symmetric polynomial in r variables, stored by its coefficients in the
// monomial symmetric basis. Keys are partitions padded with zeros to length r.
using Partition = std::vector<int>;
using MonomialSymmetric = std::map<Partition, Integer, std::greater<>>;

std::vector<Partition> partitions_of(int total, int parts, int largest)
{
    std::vector<Partition> out;
    if (parts == 0) {
        if (total == 0)
            out.emplace_back();
        return out;
    }
    for (int first = std::min(total, largest); first >= 0; --first) {
        for (auto& rest : partitions_of(total - first, parts - 1, first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    }
    return out;
}

int degree_of(const MonomialSymmetric& f)
{
    if (f.empty())
        return 0;
    const Partition& p = f.begin()->first;
    int d = 0;
    for (int x : p)
        d += x;
    return d;
}

// f * e_k, by counting for each target exponent vector the k-subsets of
// roots whose removal lands on a term of f.
MonomialSymmetric times_elementary(const MonomialSymmetric& f, int k, int r)
{
    MonomialSymmetric out;
    if (f.empty())
        return out;
    int target = degree_of(f) + k;
    std::vector<int> subset(static_cast<std::size_t>(r), 0);
    std::fill(subset.end() - k, subset.end(), 1);
    for (const Partition& nu : partitions_of(target, r, target)) {
        Integer coeff = 0;
        std::vector<int> mask = subset;
        do {
            Partition mu = nu;
            bool ok = true;
            for (int i = 0; i < r && ok; ++i) {
                mu[static_cast<std::size_t>(i)] -= mask[static_cast<std::size_t>(i)];
                ok = mu[static_cast<std::size_t>(i)] >= 0;
            }
            if (!ok)
                continue;
            std::sort(mu.begin(), mu.end(), std::greater<>());
            auto it = f.find(mu);
            if (it != f.end())
                coeff += it->second;
        } while (std::next_permutation(mask.begin(), mask.end()));
        if (coeff != 0)
            out[nu] = coeff;
    }
    return out;
}

Partition conjugate(const Partition& p)
{
    Partition c;
    int largest = p.empty() ? 0 : p.front();
    for (int j = 1; j <= largest; ++j)
        c.push_back(static_cast<int>(std::count_if(p.begin(), p.end(), [j](int x) { return x >= j; })));
    return c;
}

}  // namespace

SymmetricFunctions::SymmetricFunctions(RingPtr integral, RingPtr rational)
    : integral_(std::move(integral)), rational_(std::move(rational))
{
}

Element SymmetricFunctions::newton(int m) const
{
    if (m < 1)
        throw Error(Errc::InvariantViolation, "newton(" + std::to_string(m) + ")");
    std::lock_guard lock(mutex_);
    while (static_cast<int>(newton_.size()) < m) {
        int n = static_cast<int>(newton_.size()) + 1;
        Element next = Element::generator(integral_, chern_name(n));
        next = scale(Rational((n % 2 == 1) ? n : -n), next);
        for (int i = 1; i < n; ++i) {
            Element term = Element::generator(integral_, chern_name(i)) * newton_[static_cast<std::size_t>(n - i - 1)];
            next = (i % 2 == 1) ? next + term : next - term;
        }
        newton_.push_back(std::move(next));
    }
    return newton_[static_cast<std::size_t>(m - 1)];
}

Element SymmetricFunctions::chern_component(int d) const
{
    if (d % 2 != 0 || d < 0)
        throw Error(Errc::OddDegree, "ch_" + std::to_string(d) + " is not defined");
    if (d == 0)
        return Element::generator(rational_, "ch0");
    int m = d / 2;
    Element sigma = change_coefficients(newton(m), rational_);
    return scale(Rational(1) / Rational(factorial(static_cast<unsigned long>(m))), sigma);
}

Element SymmetricFunctions::roots_oracle(int m, int r) const
{
    if (m < 1 || r < m)
        throw Error(Errc::InsufficientRoots,
                    std::to_string(r) + " roots cannot separate the power sum of degree " + std::to_string(m));

    std::map<Partition, MonomialSymmetric> products;  // e-monomial by conjugate shape
    auto e_product = [&](const Partition& shape) -> const MonomialSymmetric& {
        auto it = products.find(shape);
        if (it != products.end())
            return it->second;
        MonomialSymmetric f;
        f[Partition(static_cast<std::size_t>(r), 0)] = 1;
        for (int k : shape)
            f = times_elementary(f, k, r);
        return products.emplace(shape, std::move(f)).first->second;
    };

    MonomialSymmetric rest;
    Partition power(static_cast<std::size_t>(r), 0);
    power[0] = m;
    rest[power] = 1;

    Terms result;
    while (!rest.empty()) {
        auto [lead, coeff] = *rest.begin();
        Partition trimmed(lead.begin(), std::find(lead.begin(), lead.end(), 0));
        Partition shape = conjugate(trimmed);
        for (const auto& [p, c] : e_product(shape)) {
            Integer& slot = rest[p];
            slot -= coeff * c;
            if (slot == 0)
                rest.erase(p);
        }
        std::vector<Factor> factors;
        for (int k : shape)
            factors.push_back({integral_->index_of(chern_name(k)), 1});
        result[integral_->make_monomial(std::move(factors))] += Rational(coeff);
    }
    return Element::from_terms(integral_, result);
}

bool SymmetricFunctions::revi1_check(int m) const
{
    Element lhs = scale(Rational(factorial(static_cast<unsigned long>(m - 1))), chern_component(2 * m));
    Element generator = change_coefficients(Element::generator(integral_, chern_name(m)), rational_);
    Element diff = lhs - scale(Rational(m % 2 == 1 ? 1 : -1), generator);
    return is_decomposable(diff);
}

}  // namespace transgress
