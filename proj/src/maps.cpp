#include "transgress/maps.hpp"

#include "transgress/error.hpp"

namespace transgress {

namespace {

constexpr const char* kChain[8] = {"alpha", "Bc", "c", "phi", "beta", "Bj", "j", "I"};

std::string named(const std::string& symbol, int degree) { return symbol + "_" + std::to_string(degree); }

Element zero(const RingPtr& ring) { return Element(ring); }

// sum_{i+j=2k} (-1)^i c_{2i} c_{2j} in H^*(BU), c_0 = 1
Element symplectic_sum(const RingPtr& bu, int k)
{
    auto c = [&](int i) {
        return i == 0 ? Element::constant(bu, 1) : Element::generator(bu, named("c", 2 * i));
    };
    Element sum = zero(bu);
    for (int i = 0; i <= 2 * k; ++i) {
        Element term = c(i) * c(2 * k - i);
        sum = (i % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

Element carry_torsion(Element value, bool torsion)
{
    if (torsion && value.ring().torsion_policy() == TorsionPolicy::Formal2Torsion)
        return value.with_torsion(true);
    return value;
}

}  // namespace

std::string GenMap::space_map() const
{
    return std::string(display_name(from)) + " -> " + std::string(display_name(to));
}

Element apply(const GenMap& map, const Element& e)
{
    if (!e.ring().same_as(*map.domain))
        throw Error(Errc::SourceMismatch, map.name + " acts on " + map.domain->id() + ", not " + e.ring().id());
    Element out = zero(map.codomain);
    for (const auto& [m, q] : e.terms()) {
        if (map.kind == MapKind::AdditiveOnly) {
            auto it = map.terms.find(m);
            if (it == map.terms.end())
                throw Error(Errc::UnregisteredMonomial,
                            map.name + " has no image for " + (m.is_unit() ? "1" : e.ring().monomial_name(m)));
            out = out + scale(q, it->second);
            continue;
        }
        Element image = Element::constant(map.codomain, 1);
        for (const auto& f : m.factors()) {
            const std::string name = e.ring().generator(f.gen).name();
            if (map.twice_integral.count(f.gen))
                throw Error(Errc::UnregisteredMonomial,
                            map.name + " only bounds the image of " + name + " by twice the integral lattice");
            auto it = map.images.find(f.gen);
            if (it == map.images.end())
                throw Error(Errc::UnregisteredMonomial, map.name + " has no image for " + name);
            image = image * power(it->second, f.exp);
        }
        out = out + scale(q, image);
    }
    return carry_torsion(out, e.torsion());
}

const Maps& Maps::standard()
{
    static const Maps maps(Registry::standard());
    return maps;
}

GenMap& Maps::add(std::string name, SpaceId from, SpaceId to, RingPtr domain, RingPtr codomain)
{
    GenMap map;
    map.name = name;
    map.from = from;
    map.to = to;
    map.domain = std::move(domain);
    map.codomain = std::move(codomain);
    order_.push_back(name);
    return maps_.emplace(std::move(name), std::move(map)).first->second;
}

Maps::Maps(const Registry& registry) : registry_(registry)
{
    using S = SpaceId;
    const auto& r = registry_;
    auto Z = [&](S s) { return r.ring_of(s, CoeffRing::Z); };
    auto F2 = [&](S s) { return r.ring_of(s, CoeffRing::F2); };
    auto gen = [](const RingPtr& ring, const std::string& name) { return Element::generator(ring, name); };
    auto tors = [](const RingPtr& ring) { return Element::torsion_class(ring); };
    auto two = [](const Element& e) { return scale(Rational(2), e); };

    // Fill `map.images` from a rule on the domain generators.
    auto define = [](GenMap& map, const std::function<std::optional<Element>(const Generator&)>& rule) {
        const auto& gens = map.domain->generators();
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (auto image = rule(gens[i]))
                map.images.emplace(static_cast<int>(i), std::move(*image));
    };

    {
        GenMap& m = add("alpha", S::U_O, S::U, Z(S::U), Z(S::U_O));
        define(m, [&](const Generator& g) -> std::optional<Element> {
            if (g.degree % 4 == 1)
                return gen(m.codomain, named("a", g.degree)) + tors(m.codomain);
            return tors(m.codomain);
        });
    }
    {
        GenMap& m = add("Bc", S::BO, S::BU, Z(S::BU), Z(S::BO));
        m.note = "c_{4k+2} pulls back to the 2-torsion class w_{2k+1}^2";
        define(m, [&](const Generator& g) -> std::optional<Element> {
            if (g.degree == 0)
                return gen(m.codomain, "ch0");
            if (g.degree % 4 == 0)
                return gen(m.codomain, named("p", g.degree));
            return tors(m.codomain);
        });
    }
    {
        GenMap& m = add("c", S::O, S::U, Z(S::U), Z(S::O));
        define(m, [&](const Generator& g) -> std::optional<Element> {
            if (g.degree % 4 == 3)
                return two(gen(m.codomain, named("v", g.degree))) + tors(m.codomain);
            return tors(m.codomain);
        });
    }
    {
        GenMap& m = add("phi", S::O_U, S::BU, Z(S::BU), Z(S::O_U));
        m.note = "images of c_{4k} lie in twice the integral lattice; not registered";
        const auto& gens = m.domain->generators();
        for (std::size_t i = 0; i < gens.size(); ++i) {
            int d = gens[i].degree;
            if (d % 4 == 2)
                m.images.emplace(static_cast<int>(i), two(gen(m.codomain, named("u", d))));
            else if (d > 0)
                m.twice_integral.insert(static_cast<int>(i));
        }
    }
    {
        GenMap& m = add("beta", S::U_Sp, S::U, Z(S::U), Z(S::U_Sp));
        define(m, [&](const Generator& g) -> std::optional<Element> {
            if (g.degree % 4 == 1)
                return two(gen(m.codomain, named("a", g.degree)));
            return zero(m.codomain);
        });
    }
    {
        GenMap& m = add("Bj", S::BSp, S::BU, Z(S::BU), Z(S::BSp));
        define(m, [&](const Generator& g) -> std::optional<Element> {
            if (g.degree == 0)
                return two(gen(m.codomain, "ch0"));
            if (g.degree % 4 == 0)
                return gen(m.codomain, named("y", g.degree));
            return zero(m.codomain);
        });
    }
    {
        GenMap& m = add("j", S::Sp, S::U, Z(S::U), Z(S::Sp));
        define(m, [&](const Generator& g) -> std::optional<Element> {
            if (g.degree % 4 == 3)
                return gen(m.codomain, named("y", g.degree));
            return zero(m.codomain);
        });
    }
    {
        GenMap& m = add("I", S::Sp_U, S::BU, Z(S::BU), Z(S::Sp_U));
        define(m, [&](const Generator& g) -> std::optional<Element> {
            if (g.degree == 0)
                return std::nullopt;
            return gen(m.codomain, g.name());
        });
    }
    {
        GenMap& m = add("q", S::U, S::Sp, Z(S::Sp), Z(S::U));
        define(m, [&](const Generator& g) -> std::optional<Element> {
            return two(gen(m.codomain, named("c", g.degree)));
        });
    }
    {
        GenMap& m = add("Bq", S::BU, S::BSp, Z(S::BSp), Z(S::BU));
        define(m, [&](const Generator& g) -> std::optional<Element> {
            if (g.degree == 0)
                return std::nullopt;
            return symplectic_sum(m.codomain, g.degree / 4);
        });
    }
    {
        GenMap& m = add("p", S::U, S::U_O, Z(S::U_O), Z(S::U));
        define(m, [&](const Generator& g) -> std::optional<Element> {
            return two(gen(m.codomain, named("c", g.degree)));
        });
    }
    {
        GenMap& m = add("f", S::U, S::O, Z(S::O), Z(S::U));
        define(m, [&](const Generator& g) -> std::optional<Element> {
            return gen(m.codomain, named("c", g.degree));
        });
    }
    {
        GenMap& m = add("Bf", S::BU, S::BO, Z(S::BO), Z(S::BU));
        define(m, [&](const Generator& g) -> std::optional<Element> {
            if (g.degree == 0)
                return std::nullopt;
            return symplectic_sum(m.codomain, g.degree / 4);
        });
    }
    {
        GenMap& m = add("Bf.mod2", S::BU, S::BO, F2(S::BO), r.mod2_target(S::BU));
        define(m, [&](const Generator& g) -> std::optional<Element> {
            if (g.degree == 0)
                return std::nullopt;
            if (g.degree % 2 == 1)
                return zero(m.codomain);
            return gen(m.codomain, named("c", g.degree));
        });
    }
    {
        GenMap& m = add("Bc.mod2", S::BO, S::BU, r.mod2_target(S::BU), F2(S::BO));
        define(m, [&](const Generator& g) -> std::optional<Element> {
            if (g.degree == 0)
                return gen(m.codomain, "ch0");
            return power(gen(m.codomain, named("w", g.degree / 2)), 2);
        });
    }
    {
        GenMap& m = add("i", S::U_O, S::BO, F2(S::BO), F2(S::U_O));
        define(m, [&](const Generator& g) -> std::optional<Element> {
            if (g.degree == 0)
                return std::nullopt;
            return gen(m.codomain, g.name());
        });
    }
    {
        GenMap& m = add("i.int", S::U_O, S::BO, Z(S::BO), Z(S::U_O));
        m.note = "zero mod 2 and zero after pulling back to U";
        define(m, [&](const Generator& g) -> std::optional<Element> {
            if (g.degree == 0)
                return std::nullopt;
            return zero(m.codomain);
        });
    }
    {
        GenMap& m = add("a.mod2", S::U_O, S::U_O, r.mod2_target(S::U_O), F2(S::U_O));
        m.kind = MapKind::AdditiveOnly;
        m.note = "reduction of a_{4k+1} modulo Bockstein images";
        for (const auto& g : m.domain->generators()) {
            int k = (g.degree - 1) / 4;
            Element image = gen(m.codomain, named("w", 2 * k + 1));
            if (k > 0)
                image = gen(m.codomain, named("w", 2 * k)) * image;
            m.terms.emplace(m.domain->generator_monomial(m.domain->index_of(g.name())), std::move(image));
        }
    }

    // Reduction mod 2 of each integral lattice.
    for (SpaceId s : kAllSpaces) {
        RingPtr source = Z(s);
        RingPtr target = r.mod2_target(s);
        GenMap& m = add("mod2." + std::string(space_name(s)), s, s, source, target);
        m.note = "reduction mod 2";
        define(m, [&](const Generator& g) -> std::optional<Element> {
            if (s == S::BO && g.degree > 0)
                return power(gen(target, named("w", g.degree / 2)), 2);
            return gen(target, g.name());
        });
        mod2_.emplace(source->id(), m.name);
    }

    // Loop rules.
    const SymmetricFunctions& sym = r.symfunc();
    for (CoeffRing c : {CoeffRing::Z, CoeffRing::Q}) {
        RingPtr bu = r.ring_of(S::BU, c);
        RingPtr u = r.ring_of(S::U, c);
        loops_.push_back({bu, u, [u](const Generator& g) -> std::optional<Element> {
                              return Element::generator(u, named("c", g.degree - 1));
                          },
                          "c_{2k} -> c_{2k-1}"});
        loops_.push_back({u, bu, [bu, &sym](const Generator& g) -> std::optional<Element> {
                              if (g.degree == 1)
                                  return Element::generator(bu, "ch0");
                              return change_coefficients(sym.newton((g.degree - 1) / 2), bu);
                          },
                          "c_{2k-1} -> (k-1)! ch_{2k-2}"});
        RingPtr bsp = r.ring_of(S::BSp, c);
        RingPtr sp = r.ring_of(S::Sp, c);
        loops_.push_back({bsp, sp, [sp](const Generator& g) -> std::optional<Element> {
                              return Element::generator(sp, named("y", g.degree - 1));
                          },
                          "y_{4k} -> y_{4k-1}"});
    }
    for (CoeffRing c : {CoeffRing::ZHalf, CoeffRing::Q}) {
        RingPtr bo = r.ring_of(S::BO, c);
        RingPtr o = r.ring_of(S::O, c);
        loops_.push_back({bo, o, [o](const Generator& g) -> std::optional<Element> {
                              Element v = scale(Rational(2), Element::generator(o, named("v", g.degree - 1)));
                              if (o->torsion_policy() == TorsionPolicy::Formal2Torsion)
                                  v = v.with_torsion(true);
                              return v;
                          },
                          "p_{4k} -> 2 v_{4k-1} + Tors"});
    }
    auto decomposables_only = [](const Generator&) -> std::optional<Element> { return std::nullopt; };
    loops_.push_back({F2(S::U_O), F2(S::BO), decomposables_only, "kills decomposables; generators unregistered"});
    loops_.push_back({F2(S::BO), F2(S::O), decomposables_only, "kills decomposables; generators unregistered"});
}

const GenMap& Maps::get(std::string_view name) const
{
    auto it = maps_.find(name);
    if (it == maps_.end())
        throw Error(Errc::UnknownMap, "no map named '" + std::string(name) + "'");
    return it->second;
}

std::vector<const GenMap*> Maps::list() const
{
    std::vector<const GenMap*> out;
    for (const auto& name : order_)
        out.push_back(&maps_.at(name));
    return out;
}

const GenMap& Maps::chain_map(int n) const { return get(kChain[((n % 8) + 8) % 8]); }

const LoopRule& Maps::loop_rule(const RingPresentation& source) const
{
    for (const auto& rule : loops_)
        if (rule.source->same_as(source))
            return rule;
    throw Error(Errc::NoLoopRule, "no loop rule on " + source.id());
}

Element Maps::loop_apply(const Element& e) const
{
    const LoopRule& rule = loop_rule(e.ring());
    if (!e.is_homogeneous())
        throw Error(Errc::NotHomogeneous, to_text(e));
    Element out = zero(rule.target);
    for (const auto& [m, q] : e.terms()) {
        if (m.degree() == 0 || m.length() >= 2)
            continue;
        const Generator& g = e.ring().generator(m.factors()[0].gen);
        auto image = rule.image(g);
        if (!image)
            throw Error(Errc::UnregisteredMonomial, "loop of " + g.name() + " on " + e.ring().id() + " is not registered");
        out = out + scale(q, *image);
    }
    return carry_torsion(out, e.torsion());
}

Element Maps::mod2_reduce(const Element& e) const
{
    auto it = mod2_.find(e.ring().id());
    if (it == mod2_.end())
        throw Error(Errc::UnknownEntry, "no reduction mod 2 registered for " + e.ring().id());
    if (e.torsion())
        throw Error(Errc::AmbiguousTorsion, "the 2-torsion summand of " + to_text(e) + " has no determined reduction");
    for (const auto& [m, q] : e.terms())
        if (!is_integer(q))
            throw Error(Errc::NonIntegralCoefficient, to_text(e) + " is not in the integral lattice");
    return apply(get(it->second), e);
}

Element Maps::l_star(const Element& e) const
{
    if (e.ring().coeff() != CoeffRing::F2)
        throw Error(Errc::PresentationMismatch, "l_* expects Z/2 coefficients, got " + e.ring().id());
    RingPtr target = registry_.qmodz_companion(e.ring());
    Element lifted = change_coefficients(e, target->rational_shadow());
    return change_coefficients(scale(Rational(1, 2), lifted), target);
}

std::pair<Element, Element> Maps::bockstein_fact(int k) const
{
    RingPtr f2 = registry_.ring_of(SpaceId::BO, CoeffRing::F2);
    Element ww = Element::generator(f2, named("w", 2 * k)) * Element::generator(f2, named("w", 2 * k + 1));
    Element pc = apply(get("Bc"), Element::generator(get("Bc").domain, named("c", 4 * k + 2)));
    return {ww, pc};
}

}  // namespace transgress
