#include "transgress/algebra.hpp"

#include "transgress/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace transgress {

namespace {

constexpr int kMaxRewriteDepth = 4096;

void require_same_ring(const Element& a, const Element& b)
{
    if (!a.ring().same_as(b.ring()))
        throw Error(Errc::PresentationMismatch, a.ring().id() + " vs " + b.ring().id());
}

}  // namespace

std::string_view kind_name(RingKind kind)
{
    switch (kind) {
    case RingKind::FreePolynomial: return "polynomial";
    case RingKind::Exterior: return "exterior";
    case RingKind::Quotient: return "quotient";
    }
    return "?";
}

std::string Generator::name() const
{
    if (degree == 0)
        return symbol;
    return symbol + "_" + std::to_string(degree);
}

int Monomial::length() const
{
    int n = 0;
    for (const auto& f : factors_)
        n += f.exp;
    return n;
}

int Monomial::exponent(int gen) const
{
    for (const auto& f : factors_)
        if (f.gen == gen)
            return f.exp;
    return 0;
}

bool operator<(const Monomial& a, const Monomial& b)
{
    if (a.degree_ != b.degree_)
        return a.degree_ < b.degree_;
    const auto& fa = a.factors_;
    const auto& fb = b.factors_;
    std::size_t i = 0;
    for (; i < fa.size() && i < fb.size(); ++i) {
        if (fa[i].gen != fb[i].gen)
            return fa[i].gen < fb[i].gen;
        if (fa[i].exp != fb[i].exp)
            return fa[i].exp > fb[i].exp;
    }
    return fa.size() > fb.size() && i < fa.size();
}

// ---------------------------------------------------------------------------
// RingPresentation

RingPtr RingPresentation::create(Spec spec)
{
    auto ring = std::shared_ptr<RingPresentation>(new RingPresentation(std::move(spec)));
    ring->install_relations();
    return ring;
}

RingPresentation::RingPresentation(Spec spec)
    : spec_(spec),
      id_(std::move(spec.id)),
      description_(std::move(spec.description)),
      generators_(std::move(spec.generators)),
      kind_(spec.kind),
      coeff_(spec.coeff),
      torsion_(spec.torsion),
      max_degree_(spec.max_degree),
      graded_signs_(spec.graded_signs.value_or(spec.coeff != CoeffRing::F2))
{
    std::erase_if(generators_, [&](const Generator& g) { return g.degree > max_degree_; });
    std::stable_sort(generators_.begin(), generators_.end(), [](const Generator& a, const Generator& b) {
        if (a.degree != b.degree)
            return a.degree < b.degree;
        return a.symbol < b.symbol;
    });
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const Generator& g = generators_[i];
        if (g.degree < 0)
            throw Error(Errc::InvariantViolation, "negative degree for " + g.name());
        bool odd = g.degree % 2 != 0;
        if (g.degree == 0 ? g.parity != Parity::Even : odd != (g.parity == Parity::Odd))
            throw Error(Errc::InvariantViolation, "parity of " + g.name() + " does not match its degree");
        if (kind_ == RingKind::FreePolynomial && graded_signs_ && g.parity == Parity::Odd)
            throw Error(Errc::InvariantViolation,
                        "odd generator " + g.name() + " in a polynomial ring with graded signs in " + id_);
        if (!index_.emplace(g.name(), static_cast<int>(i)).second)
            throw Error(Errc::InvariantViolation, "duplicate generator " + g.name() + " in " + id_);
    }
}

void RingPresentation::install_relations()
{
    if (spec_.relations.empty())
        return;
    if (kind_ != RingKind::Quotient)
        throw Error(Errc::InvariantViolation, "relations given for non-quotient ring " + id_);
    for (const auto& relation : spec_.relations) {
        Terms terms;
        bool in_range = true;
        for (const auto& t : relation) {
            std::vector<Factor> factors;
            for (const auto& [name, exp] : t.factors) {
                auto gen = find(name);
                if (!gen) {
                    in_range = false;
                    break;
                }
                factors.push_back({*gen, exp});
            }
            if (!in_range)
                break;
            terms[make_monomial(std::move(factors))] += t.coeff;
        }
        // Relations that mention generators beyond the degree cap are not needed.
        if (!in_range)
            continue;
        std::optional<Monomial> square;
        int degree = -1;
        for (const auto& [m, q] : terms) {
            if (degree >= 0 && m.degree() != degree)
                throw Error(Errc::InvariantViolation, "inhomogeneous relation in " + id_);
            degree = m.degree();
            if (m.factors().size() == 1 && m.factors()[0].exp == 2) {
                if (square)
                    throw Error(Errc::InvariantViolation, "relation with two square terms in " + id_);
                square = m;
            }
        }
        if (!square)
            throw Error(Errc::InvariantViolation, "relation without a square term in " + id_);
        Rational lead = terms.at(*square);
        if (coeff_ == CoeffRing::Z && abs(lead) != 1)
            throw Error(Errc::InvariantViolation, "square coefficient not a unit in " + id_);
        int gen = square->factors()[0].gen;
        if (square_rules_.count(gen))
            throw Error(Errc::InvariantViolation, "two relations for the square of " + generator(gen).name());
        Terms replacement;
        for (const auto& [m, q] : terms)
            if (!(m == *square))
                replacement[m] = -q / lead;
        square_rules_[gen] = std::move(replacement);
        relations_.push_back(std::move(terms));
    }
}

std::optional<int> RingPresentation::find(std::string_view name) const
{
    auto it = index_.find(std::string(name));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int RingPresentation::index_of(std::string_view name) const
{
    auto gen = find(name);
    if (!gen)
        throw Error(Errc::UnknownGenerator, "'" + std::string(name) + "' is not a generator of " + id_);
    return *gen;
}

bool RingPresentation::same_as(const RingPresentation& other) const
{
    return this == &other || (id_ == other.id_ && max_degree_ == other.max_degree_);
}

Monomial RingPresentation::make_monomial(std::vector<Factor> factors) const
{
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.gen < b.gen; });
    std::vector<Factor> merged;
    int degree = 0;
    for (const auto& f : factors) {
        if (f.exp <= 0)
            continue;
        if (!merged.empty() && merged.back().gen == f.gen)
            merged.back().exp += f.exp;
        else
            merged.push_back(f);
        degree += f.exp * generator(f.gen).degree;
    }
    return Monomial(std::move(merged), degree);
}

Monomial RingPresentation::generator_monomial(int gen, int exp) const
{
    return make_monomial({Factor{gen, exp}});
}

std::string RingPresentation::monomial_name(const Monomial& m) const
{
    std::string out;
    for (const auto& f : m.factors()) {
        if (!out.empty())
            out += '*';
        out += generator(f.gen).name();
        if (f.exp != 1)
            out += '^' + std::to_string(f.exp);
    }
    return out;
}

bool RingPresentation::admissible(const Monomial& m) const
{
    for (const auto& f : m.factors()) {
        if (f.exp < 2)
            continue;
        if (kind_ == RingKind::Exterior)
            return false;
        if (graded_signs_ && generator(f.gen).parity == Parity::Odd)
            return false;
    }
    return true;
}

std::optional<std::pair<int, Monomial>> RingPresentation::multiply(const Monomial& a, const Monomial& b) const
{
    int sign = 1;
    if (graded_signs_) {
        // Moving each odd factor of b leftwards past the odd factors of a
        // with a larger index.
        long swaps = 0;
        for (const auto& fb : b.factors()) {
            if (generator(fb.gen).parity != Parity::Odd)
                continue;
            for (const auto& fa : a.factors())
                if (fa.gen > fb.gen && generator(fa.gen).parity == Parity::Odd)
                    swaps += static_cast<long>(fa.exp) * fb.exp;
        }
        if (swaps % 2 != 0)
            sign = -1;
    }
    std::vector<Factor> factors = a.factors();
    factors.insert(factors.end(), b.factors().begin(), b.factors().end());
    Monomial product = make_monomial(std::move(factors));
    if (!admissible(product))
        return std::nullopt;
    return std::make_pair(sign, std::move(product));
}

bool RingPresentation::has_square_rule(int gen) const { return square_rules_.count(gen) != 0; }

Terms RingPresentation::normal_form(const Monomial& m, RewriteOrder order) const
{
    if (!admissible(m))
        return {};
    if (square_rules_.empty())
        return Terms{{m, Rational(1)}};
    return rewrite(m, order, 0);
}

Terms RingPresentation::rewrite(const Monomial& m, RewriteOrder order, int depth) const
{
    if (depth > kMaxRewriteDepth)
        throw Error(Errc::NonTerminatingRewrite, "rewriting " + monomial_name(m) + " in " + id_);
    auto& cache = cache_[order == RewriteOrder::HighestSquareFirst ? 0 : 1];
    {
        std::lock_guard lock(cache_mutex_);
        auto it = cache.find(m);
        if (it != cache.end())
            return it->second;
    }

    std::optional<Factor> pick;
    for (const auto& f : m.factors()) {
        if (f.exp < 2 || !has_square_rule(f.gen))
            continue;
        if (!pick || order == RewriteOrder::HighestSquareFirst)
            pick = f;
        if (order == RewriteOrder::LowestSquareFirst)
            break;
    }

    Terms result;
    if (!pick) {
        result[m] = 1;
    } else {
        std::vector<Factor> rest = m.factors();
        for (auto& f : rest)
            if (f.gen == pick->gen)
                f.exp -= 2;
        Monomial cofactor = make_monomial(std::move(rest));
        for (const auto& [rm, rq] : square_rules_.at(pick->gen)) {
            auto product = multiply(rm, cofactor);
            if (!product)
                continue;
            for (const auto& [nm, nq] : rewrite(product->second, order, depth + 1))
                result[nm] += rq * nq * product->first;
        }
        std::erase_if(result, [](const auto& t) { return t.second == 0; });
    }

    std::lock_guard lock(cache_mutex_);
    cache.emplace(m, result);
    return result;
}

std::vector<Monomial> RingPresentation::basis(int degree) const
{
    std::vector<Monomial> out;
    if (degree < 0)
        return out;
    std::vector<Factor> current;
    std::function<void(std::size_t, int)> walk = [&](std::size_t gen, int remaining) {
        if (remaining == 0) {
            Monomial m = make_monomial(current);
            if (normal_form(m) == Terms{{m, Rational(1)}})
                out.push_back(m);
            return;
        }
        if (gen >= generators_.size())
            return;
        const Generator& g = generators_[gen];
        if (g.degree == 0 || g.degree > remaining) {
            walk(gen + 1, remaining);
            return;
        }
        int max_exp = remaining / g.degree;
        bool squarefree = kind_ == RingKind::Exterior || has_square_rule(static_cast<int>(gen)) ||
                          (graded_signs_ && g.parity == Parity::Odd);
        if (squarefree)
            max_exp = std::min(max_exp, 1);
        for (int e = 0; e <= max_exp; ++e) {
            if (e > 0)
                current.push_back({static_cast<int>(gen), e});
            walk(gen + 1, remaining - e * g.degree);
            if (e > 0)
                current.pop_back();
        }
    };
    walk(0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

void RingPresentation::check_confluence(int degree) const
{
    degree = std::min(degree, max_degree_);
    std::vector<Factor> current;
    std::function<void(std::size_t, int)> walk = [&](std::size_t gen, int remaining) {
        if (gen >= generators_.size()) {
            Monomial m = make_monomial(current);
            Terms high = normal_form(m, RewriteOrder::HighestSquareFirst);
            Terms low = normal_form(m, RewriteOrder::LowestSquareFirst);
            if (high != low)
                throw Error(Errc::InvariantViolation,
                            "rewriting of " + monomial_name(m) + " in " + id_ + " is not confluent");
            return;
        }
        const Generator& g = generators_[gen];
        if (g.degree == 0) {
            walk(gen + 1, remaining);
            return;
        }
        for (int e = 0; e * g.degree <= remaining; ++e) {
            if (e > 0)
                current.push_back({static_cast<int>(gen), e});
            walk(gen + 1, remaining - e * g.degree);
            if (e > 0)
                current.pop_back();
        }
    };
    walk(0, degree);

    for (const auto& relation : relations_) {
        if (relation.begin()->first.degree() > degree)
            continue;
        Terms sum;
        for (const auto& [m, q] : relation)
            for (const auto& [nm, nq] : normal_form(m))
                sum[nm] += q * nq;
        std::erase_if(sum, [](const auto& t) { return t.second == 0; });
        if (!sum.empty())
            throw Error(Errc::InvariantViolation, "a relation of " + id_ + " does not normalize to zero");
    }
}

RingPtr RingPresentation::rational_shadow() const
{
    std::call_once(shadow_once_, [this] {
        if (coeff_ == CoeffRing::Q) {
            shadow_ = shared_from_this();
            return;
        }
        Spec spec = spec_;
        spec.id = id_ + "~Q";
        spec.coeff = CoeffRing::Q;
        spec.graded_signs = graded_signs_;
        shadow_ = create(std::move(spec));
    });
    return shadow_;
}

// ---------------------------------------------------------------------------
// Element

Element::Element(RingPtr ring) : ring_(std::move(ring)) {}

Element Element::from_terms(RingPtr ring, const Terms& raw, bool torsion)
{
    if (torsion && ring->torsion_policy() == TorsionPolicy::None)
        throw Error(Errc::TorsionNotAllowed, ring->id() + " does not carry formal 2-torsion");
    Terms acc;
    for (const auto& [m, q] : raw) {
        if (q == 0)
            continue;
        if (m.degree() > ring->max_degree())
            throw Error(Errc::DegreeCapExceeded, "degree " + std::to_string(m.degree()) + " exceeds the cap " +
                                                     std::to_string(ring->max_degree()) + " of " + ring->id());
        for (const auto& [nm, nq] : ring->normal_form(m))
            acc[nm] += q * nq;
    }
    Element e(std::move(ring));
    for (auto& [m, q] : acc) {
        Rational c = normalize_coefficient(q, e.ring_->coeff());
        if (c != 0)
            e.terms_.emplace(m, std::move(c));
    }
    e.torsion_ = torsion;
    return e;
}

Element Element::constant(RingPtr ring, const Rational& value)
{
    return from_terms(std::move(ring), Terms{{Monomial(), value}});
}

Element Element::generator(RingPtr ring, std::string_view name)
{
    int gen = ring->index_of(name);
    Monomial m = ring->generator_monomial(gen);
    return from_terms(std::move(ring), Terms{{m, Rational(1)}});
}

Element Element::monomial(RingPtr ring, const Monomial& m, const Rational& coeff)
{
    return from_terms(std::move(ring), Terms{{m, coeff}});
}

Element Element::torsion_class(RingPtr ring) { return from_terms(std::move(ring), {}, true); }

bool Element::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

std::optional<int> Element::degree() const
{
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return terms_.begin()->first.degree();
}

Rational Element::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Element Element::with_torsion(bool torsion) const
{
    if (torsion && ring_->torsion_policy() == TorsionPolicy::None)
        throw Error(Errc::TorsionNotAllowed, ring_->id() + " does not carry formal 2-torsion");
    Element e = *this;
    e.torsion_ = torsion;
    return e;
}

bool operator==(const Element& a, const Element& b)
{
    return a.ring_->same_as(*b.ring_) && a.torsion_ == b.torsion_ && a.terms_ == b.terms_;
}

Element add(const Element& a, const Element& b)
{
    require_same_ring(a, b);
    Terms sum = a.terms();
    for (const auto& [m, q] : b.terms())
        sum[m] += q;
    return Element::from_terms(a.ring_ptr(), sum, a.torsion() || b.torsion());
}

Element negate(const Element& a) { return scale(Rational(-1), a); }

Element sub(const Element& a, const Element& b) { return add(a, negate(b)); }

Element scale(const Rational& q, const Element& a)
{
    if (a.ring().coeff() == CoeffRing::QmodZ && !is_integer(q))
        throw Error(Errc::NonRingCoefficients, "Q/Z admits only integer scalars, got " + format_rational(q));
    Terms scaled;
    for (const auto& [m, c] : a.terms())
        scaled[m] = q * c;
    // 2 * Tors = 0, and odd factors act invertibly on 2-torsion.
    bool torsion = a.torsion() && mpz_odd_p(q.get_num_mpz_t());
    return Element::from_terms(a.ring_ptr(), scaled, torsion);
}

Element mul(const Element& a, const Element& b)
{
    require_same_ring(a, b);
    if (!is_ring(a.ring().coeff()))
        throw Error(Errc::NonRingCoefficients, "no product on " + a.ring().id());
    const RingPresentation& ring = a.ring();
    Terms product;
    for (const auto& [ma, qa] : a.terms())
        for (const auto& [mb, qb] : b.terms()) {
            auto m = ring.multiply(ma, mb);
            if (!m)
                continue;
            if (m->second.degree() > ring.max_degree())
                throw Error(Errc::DegreeCapExceeded, "product of degree " + std::to_string(m->second.degree()) +
                                                         " in " + ring.id());
            product[m->second] += qa * qb * m->first;
        }
    bool torsion = (a.torsion() && !b.is_zero()) || (b.torsion() && !a.is_zero());
    return Element::from_terms(a.ring_ptr(), product, torsion);
}

Element power(const Element& a, int n)
{
    if (n < 0)
        throw Error(Errc::InvariantViolation, "negative exponent");
    Element result = Element::constant(a.ring_ptr(), 1);
    for (int i = 0; i < n; ++i)
        result = mul(result, a);
    return result;
}

Element normalize(const Element& e) { return Element::from_terms(e.ring_ptr(), e.terms(), e.torsion()); }

Element degree_part(const Element& e, int degree)
{
    Terms part;
    for (const auto& [m, q] : e.terms())
        if (m.degree() == degree)
            part.emplace(m, q);
    bool torsion = e.torsion() && e.is_homogeneous() && (e.free_part_zero() || e.degree() == degree);
    return Element::from_terms(e.ring_ptr(), part, torsion);
}

bool is_decomposable(const Element& e)
{
    return std::all_of(e.terms().begin(), e.terms().end(), [](const auto& t) { return t.first.length() >= 2; });
}

Element change_coefficients(const Element& e, const RingPtr& target)
{
    Terms raw;
    for (const auto& [m, q] : e.terms()) {
        std::vector<Factor> factors;
        for (const auto& f : m.factors())
            factors.push_back({target->index_of(e.ring().generator(f.gen).name()), f.exp});
        raw[target->make_monomial(std::move(factors))] += q;
    }
    bool torsion = e.torsion();
    if (torsion && target->torsion_policy() == TorsionPolicy::None) {
        if (target->coeff() != CoeffRing::Q)
            throw Error(Errc::TorsionNotAllowed, "torsion summand cannot move to " + target->id());
        torsion = false;
    }
    return Element::from_terms(target, raw, torsion);
}

std::string to_text(const Element& e)
{
    std::string out;
    for (const auto& [m, q] : e.terms()) {
        bool negative = q < 0;
        Rational mag = abs(q);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (m.is_unit())
            out += format_rational(mag);
        else if (mag == 1)
            out += e.ring().monomial_name(m);
        else
            out += format_rational(mag) + "*" + e.ring().monomial_name(m);
    }
    if (e.torsion())
        out += out.empty() ? "Tors" : " + Tors";
    return out.empty() ? "0" : out;
}

}  // namespace transgress
