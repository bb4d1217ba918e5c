#include "transgress/universal.hpp"

#include "transgress/error.hpp"

namespace transgress {

namespace {

std::string named(const std::string& symbol, int degree) { return symbol + "_" + std::to_string(degree); }

int target_degree(int n, int k)
{
    if (n < 0 || k < 0)
        throw Error(Errc::InvariantViolation, "n and k must be nonnegative");
    int d = 4 * k + 1 - n;
    if (d < 0)
        throw Error(Errc::DegreeExhausted,
                    "4k+1-n = " + std::to_string(d) + " for n=" + std::to_string(n) + ", k=" + std::to_string(k));
    return d;
}

// Every generator occurring in x pulls back into twice the integral lattice
// (torsion summands aside).
bool doubles_lattice(const GenMap& f, const Element& x)
{
    for (const auto& [m, q] : x.terms()) {
        if (m.is_unit())
            return false;
        for (const auto& factor : m.factors()) {
            if (f.twice_integral.count(factor.gen))
                continue;
            auto it = f.images.find(factor.gen);
            if (it == f.images.end())
                return false;
            for (const auto& [im, iq] : it->second.terms())
                if (!is_integer(iq / 2))
                    return false;
        }
    }
    return true;
}

}  // namespace

int universal_m(int n, int k) { return n % 2 == 0 ? 2 * k + 1 - n / 2 : 2 * k + 1 - (n - 1) / 2; }

Rational universal_factor(int n, int k)
{
    int m = universal_m(n, k);
    if (m < 1)
        throw Error(Errc::DegreeExhausted, "m = " + std::to_string(m));
    Rational f(factorial(static_cast<unsigned long>(m - 1)), factorial(static_cast<unsigned long>(2 * k)));
    f.canonicalize();
    return f;
}

Element transgressed_chern(const Registry& registry, int k)
{
    RingPtr ring = registry.ring_of(SpaceId::U_O, CoeffRing::Q);
    return scale(Rational(1, 2), Element::generator(ring, named("a", 4 * k + 1)));
}

Element omega_iterate(const Maps& maps, int k, int n)
{
    target_degree(n, k);
    RingPtr u = maps.registry().ring_of(SpaceId::U, CoeffRing::Q);
    Element x = scale(universal_factor(n, k), Element::generator(u, named("c", 4 * k + 1)));
    for (int i = 0; i < n; ++i)
        x = maps.loop_apply(x);
    return x;
}

Element omega_closed_form(const Registry& registry, int k, int n)
{
    int d = target_degree(n, k);
    if (n % 2 == 0)
        return Element::generator(registry.ring_of(SpaceId::U, CoeffRing::Q), named("c", d));
    Rational f(factorial(static_cast<unsigned long>(2 * k - (n - 1) / 2)));
    return scale(f, registry.symfunc().chern_component(d));
}

UniversalClassResult d_universal(const Maps& maps, int n, int k)
{
    const Registry& registry = maps.registry();
    const int d = target_degree(n, k);
    const int r = n % 8;
    const SpaceId space = iterated_loop_of_U_O(n);
    RingPtr answer_ring = registry.ring_of(space, CoeffRing::QmodZ);

    std::vector<DerivationStep> steps;
    auto record = [&](std::string action, std::string rule, const Element& value) {
        steps.push_back({std::move(action), std::move(rule), to_text(value)});
    };

    record("transgression", "c_{4k+2} is transgressive and p^* T(c_{4k+2}) = c_{4k+1}", transgressed_chern(registry, k));
    Rational factor = universal_factor(n, k);
    steps.push_back({"factor", "(m-1)!/(2k)! with m = " + std::to_string(universal_m(n, k)), format_rational(factor)});

    if (r == 1 && d > 0) {
        int kk = d / 4;
        Element ww = maps.bockstein_fact(kk).first;
        record("bockstein", "beta(w_{2k} w_{2k+1}) = p^* c_{4k+2}; the class is l_*(w_{2k} w_{2k+1})", ww);
        if (n >= 8)
            steps.push_back({"periodicity", "Omega^8(U/O) = U/O", "n = " + std::to_string(n) + " read as n = 1"});
        Element restricted = apply(maps.get("i"), ww);
        record("restrict", "i^*: w_j -> w_j on U/O", restricted);
        Element looped = maps.loop_apply(restricted);
        record("loop", "the loop map vanishes on decomposables", looped);
        Element value = maps.l_star(looped);
        record("l_*", "Z/2 -> Q/Z, 1 -> 1/2", value);
        return {n, k, space, d, value, looped, std::move(steps)};
    }

    Element x = omega_iterate(maps, k, n);
    record("loop", "Omega^" + std::to_string(n) + " along U -> BUxZ -> U, exact factor tracking", x);

    const GenMap& f = maps.chain_map(n);
    RingPtr lattice = registry.ring_of(n % 2 == 0 ? SpaceId::U : SpaceId::BU, CoeffRing::Z);
    Element xz = change_coefficients(x, lattice);
    record("lattice", "the looped class lies in the integral lattice", xz);

    if (r >= 2 && r <= 4) {
        if (!doubles_lattice(f, xz))
            throw Error(Errc::InvariantViolation, f.name + " does not double the integral lattice on " + to_text(xz));
        steps.push_back({"lattice", f.space_map() + " maps the Chern classes to twice a generator",
                         "1/2 of the pullback is integral"});
        if (r == 3) {
            Element value(answer_ring);
            record("result", "integral classes vanish in Q/Z", value);
            return {n, k, space, d, value, std::nullopt, std::move(steps)};
        }
    }
    if (r == 5)
        steps.push_back({"transgression and loop", "Omega T(x) = T_Omega(Omega x)", "zero after looping the n = 4 class"});

    Element y = apply(f, xz);
    record("pullback", f.name + ": " + f.space_map(), y);

    RingPtr rational = registry.ring_of(space, CoeffRing::Q);
    Element yq = change_coefficients(y, rational);
    if (y.torsion())
        record("lattice axiom", "torsion summands die under 1/2 and Q -> Q/Z", yq);

    Element half = scale(Rational(1, 2), yq);
    record("halve", "divide by 2", half);

    Terms odd_part;
    for (const auto& [m, q] : half.terms()) {
        Rational frac = q - Rational(floor_of(q));
        if (frac == Rational(1, 2))
            odd_part[m] = 1;
        else if (frac != 0)
            throw Error(Errc::InvariantViolation, "coefficient " + format_rational(q) + " is not in (1/2)Z");
    }
    Element hz = change_coefficients(Element::from_terms(rational, odd_part), registry.ring_of(space, CoeffRing::Z));
    record("split", "q = floor(q) + {0, 1/2}; integers die in Q/Z", hz);

    Element f2 = maps.mod2_reduce(hz);
    record("mod 2", "reduction of the integral lattice mod 2", f2);
    Element value = maps.l_star(f2);
    record("l_*", "Z/2 -> Q/Z, 1 -> 1/2", value);
    return {n, k, space, d, value, f2, std::move(steps)};
}

Element d_tilde(const Maps& maps, int k) { return maps.l_star(maps.bockstein_fact(k).first); }

std::pair<Element, Element> restriction_of_d_tilde(const Maps& maps, int k)
{
    Element restricted = maps.l_star(apply(maps.get("i"), maps.bockstein_fact(k).first));
    UniversalClassResult bar = d_universal(maps, 0, k);
    Element reduced = maps.l_star(apply(maps.get("a.mod2"), *bar.mod2_class));
    return {restricted, reduced};
}

Element expected_final_answer(const Registry& registry, int n, int k)
{
    const int d = target_degree(n, k);
    const SpaceId space = iterated_loop_of_U_O(n);
    RingPtr ring = registry.ring_of(space, CoeffRing::QmodZ);
    const Rational half(1, 2);
    auto single = [&](const std::string& name) {
        return Element::monomial(ring, ring->generator_monomial(ring->index_of(name)), half);
    };
    switch (n % 8) {
    case 0:
        return single(named("a", d));
    case 1:
        return d == 0 ? single("ch0") : Element(ring);
    case 6:
        return single(named("y", d));
    case 7: {
        int kk = (d + 6) / 4;
        Terms terms;
        for (int i = 0; i <= kk - 2; ++i) {
            std::vector<Factor> factors{{ring->index_of(named("c", d - 2 * i)), 1}};
            if (i > 0)
                factors.push_back({ring->index_of(named("c", 2 * i)), 1});
            terms[ring->make_monomial(std::move(factors))] += half;
        }
        return Element::from_terms(ring, terms);
    }
    default:
        return Element(ring);
    }
}

std::string ambient_name(const UniversalClassResult& result)
{
    return "H^" + std::to_string(result.degree) + "(" + std::string(display_name(result.space)) + "; Q/Z)";
}

}  // namespace transgress
