#include "transgress/spaces.hpp"

#include "transgress/error.hpp"

#include <cstdlib>

namespace transgress {

namespace {

constexpr int kConfluenceDegree = 40;

struct SpaceInfo {
    SpaceId id;
    const char* name;
    const char* display;
    bool has_Z;
    SpaceId successor;
};

constexpr SpaceInfo kSpaces[] = {
    {SpaceId::BO, "BO", "BOxZ", true, SpaceId::O},
    {SpaceId::O, "O", "O", false, SpaceId::O_U},
    {SpaceId::O_U, "O_U", "O/U", false, SpaceId::U_Sp},
    {SpaceId::U_Sp, "U_Sp", "U/Sp", false, SpaceId::BSp},
    {SpaceId::BSp, "BSp", "BSpxZ", true, SpaceId::Sp},
    {SpaceId::Sp, "Sp", "Sp", false, SpaceId::Sp_U},
    {SpaceId::Sp_U, "Sp_U", "Sp/U", false, SpaceId::U_O},
    {SpaceId::U_O, "U_O", "U/O", false, SpaceId::BO},
    {SpaceId::BU, "BU", "BUxZ", true, SpaceId::U},
    {SpaceId::U, "U", "U", false, SpaceId::BU},
};

const SpaceInfo& info(SpaceId s) { return kSpaces[static_cast<int>(s)]; }

std::vector<Generator> strided(const std::string& symbol, int first, int stride, int cap, bool component = false)
{
    std::vector<Generator> gens;
    if (component)
        gens.push_back({"ch0", 0, Parity::Even});
    for (int d = first; d <= cap; d += stride)
        gens.push_back({symbol, d, d % 2 == 0 ? Parity::Even : Parity::Odd});
    return gens;
}

std::string ring_id(SpaceId s, std::string_view suffix) { return std::string(space_name(s)) + ":" + std::string(suffix); }

// sum_{i+j=2k} (-1)^i c_{2i} c_{2j} with c_0 = 1
std::vector<RingPresentation::RelationTerm> symplectic_relation(int k)
{
    std::vector<RingPresentation::RelationTerm> terms;
    for (int i = 0; i <= 2 * k; ++i) {
        int j = 2 * k - i;
        RingPresentation::RelationTerm t;
        t.coeff = (i % 2 == 0) ? 1 : -1;
        if (i > 0)
            t.factors.emplace_back("c_" + std::to_string(2 * i), 1);
        if (j > 0)
            t.factors.emplace_back("c_" + std::to_string(2 * j), 1);
        terms.push_back(std::move(t));
    }
    return terms;
}

}  // namespace

std::string_view space_name(SpaceId s) { return info(s).name; }
std::string_view display_name(SpaceId s) { return info(s).display; }

std::optional<SpaceId> parse_space(std::string_view text)
{
    for (const auto& s : kSpaces)
        if (text == s.name || text == s.display)
            return s.id;
    return std::nullopt;
}

bool has_Z_component(SpaceId s) { return info(s).has_Z; }

SpaceId loop_space(SpaceId s) { return info(s).successor; }

SpaceId iterated_loop_of_U_O(int n)
{
    SpaceId s = SpaceId::U_O;
    for (int i = 0; i < n % 8; ++i)
        s = loop_space(s);
    return s;
}

int default_max_degree()
{
    if (const char* env = std::getenv("TRANSGRESS_MAX_DEGREE")) {
        char* end = nullptr;
        long value = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && value > 0 && value < 10000)
            return static_cast<int>(value);
    }
    return 48;
}

const Registry& Registry::standard()
{
    static const Registry registry;
    return registry;
}

RingPtr Registry::add(RingPresentation::Spec spec)
{
    spec.max_degree = max_degree_;
    RingPtr ring = RingPresentation::create(std::move(spec));
    rings_.emplace(ring->id(), ring);
    return ring;
}

void Registry::add_companion(const RingPtr& f2, const std::string& id)
{
    RingPresentation::Spec spec;
    spec.id = id;
    spec.description = f2->description() + " with Q/Z coefficients";
    spec.generators = f2->generators();
    spec.kind = f2->kind();
    spec.coeff = CoeffRing::QmodZ;
    spec.graded_signs = f2->graded_signs();
    add(std::move(spec));
    companions_.emplace(f2->id(), id);
}

Registry::Registry(int max_degree) : max_degree_(max_degree)
{
    if (max_degree_ < 1)
        throw Error(Errc::InvariantViolation, "degree cap must be positive");
    const int cap = max_degree_;

    auto entry = [&](SpaceId s, CoeffRing coeff, std::string description, std::vector<Generator> gens,
                     RingKind kind, TorsionPolicy torsion = TorsionPolicy::None) {
        RingPresentation::Spec spec;
        spec.id = ring_id(s, coeff_name(coeff));
        spec.description = std::move(description);
        spec.generators = std::move(gens);
        spec.kind = kind;
        spec.coeff = coeff;
        spec.torsion = torsion;
        RingPtr ring = add(std::move(spec));
        table_[{s, coeff}] = ring->id();
        return ring;
    };
    // Z/2 ring with the generators of an integral lattice, plus its Q/Z form.
    auto lattice = [&](SpaceId s, const RingPtr& integral) {
        RingPresentation::Spec spec;
        spec.id = ring_id(s, "F2-lattice");
        spec.description = integral->description() + " mod 2";
        spec.generators = integral->generators();
        spec.kind = integral->kind();
        spec.coeff = CoeffRing::F2;
        RingPtr f2 = add(std::move(spec));
        mod2_targets_[s] = f2->id();
        add_companion(f2, ring_id(s, "QmodZ"));
    };

    const auto Poly = RingKind::FreePolynomial;
    const auto Ext = RingKind::Exterior;
    const auto Tors = TorsionPolicy::Formal2Torsion;

    for (CoeffRing c : {CoeffRing::Z, CoeffRing::Q})
        entry(SpaceId::BU, c, "L(c_2, c_4, ...)", strided("c", 2, 2, cap, true), Poly);
    lattice(SpaceId::BU, ring_of(SpaceId::BU, CoeffRing::Z));

    for (CoeffRing c : {CoeffRing::Z, CoeffRing::Q})
        entry(SpaceId::U, c, "E(c_1, c_3, ...)", strided("c", 1, 2, cap), Ext);
    lattice(SpaceId::U, ring_of(SpaceId::U, CoeffRing::Z));

    for (CoeffRing c : {CoeffRing::Z, CoeffRing::Q})
        entry(SpaceId::BSp, c, "L(y_4, y_8, ...)", strided("y", 4, 4, cap, true), Poly);
    lattice(SpaceId::BSp, ring_of(SpaceId::BSp, CoeffRing::Z));

    for (CoeffRing c : {CoeffRing::Z, CoeffRing::Q})
        entry(SpaceId::Sp, c, "E(y_3, y_7, ...)", strided("y", 3, 4, cap), Ext);
    lattice(SpaceId::Sp, ring_of(SpaceId::Sp, CoeffRing::Z));

    for (CoeffRing c : {CoeffRing::Z, CoeffRing::Q})
        entry(SpaceId::O_U, c, "L(u_2, u_6, ...)", strided("u", 2, 4, cap), Poly);
    lattice(SpaceId::O_U, ring_of(SpaceId::O_U, CoeffRing::Z));

    for (CoeffRing c : {CoeffRing::Z, CoeffRing::Q})
        entry(SpaceId::U_Sp, c, "E(a_1, a_5, ...)", strided("a", 1, 4, cap), Ext);
    lattice(SpaceId::U_Sp, ring_of(SpaceId::U_Sp, CoeffRing::Z));

    // Sp/U: integrally the quotient of L(c_2, c_4, ...) by the symplectic relations.
    for (CoeffRing c : {CoeffRing::Z, CoeffRing::Q}) {
        RingPresentation::Spec spec;
        spec.id = ring_id(SpaceId::Sp_U, coeff_name(c));
        spec.description = "L(c_2, c_4, ...) / (sum_{i+j=2k} (-1)^i c_{2i} c_{2j})";
        spec.generators = strided("c", 2, 2, cap);
        spec.kind = RingKind::Quotient;
        spec.coeff = c;
        for (int k = 1; 4 * k <= cap; ++k)
            spec.relations.push_back(symplectic_relation(k));
        RingPtr ring = add(std::move(spec));
        ring->check_confluence(std::min(kConfluenceDegree, cap));
        table_[{SpaceId::Sp_U, c}] = ring->id();
    }
    entry(SpaceId::Sp_U, CoeffRing::ZHalf, "L(c_2, c_6, ...)", strided("c", 2, 4, cap), Poly);
    {
        RingPtr f2 = entry(SpaceId::Sp_U, CoeffRing::F2, "E(c_2, c_4, ...)", strided("c", 2, 2, cap), Ext);
        mod2_targets_[SpaceId::Sp_U] = f2->id();
        add_companion(f2, ring_id(SpaceId::Sp_U, "QmodZ"));
    }

    // U/O, BO and O: integral requests are served by Z[1/2] with formal 2-torsion.
    entry(SpaceId::U_O, CoeffRing::ZHalf, "E(a_1, a_5, ...) + 2-torsion", strided("a", 1, 4, cap), Ext, Tors);
    entry(SpaceId::U_O, CoeffRing::Q, "E(a_1, a_5, ...)", strided("a", 1, 4, cap), Ext);
    lattice(SpaceId::U_O, ring_of(SpaceId::U_O, CoeffRing::ZHalf));
    {
        RingPtr f2 = entry(SpaceId::U_O, CoeffRing::F2, "E(w_1, w_2, ...)", strided("w", 1, 1, cap), Ext);
        add_companion(f2, ring_id(SpaceId::U_O, "QmodZ-w"));
    }

    entry(SpaceId::BO, CoeffRing::ZHalf, "L(p_4, p_8, ...) + 2-torsion", strided("p", 4, 4, cap, true), Poly, Tors);
    entry(SpaceId::BO, CoeffRing::Q, "L(p_4, p_8, ...)", strided("p", 4, 4, cap, true), Poly);
    {
        RingPtr f2 = entry(SpaceId::BO, CoeffRing::F2, "L(w_1, w_2, ...)", strided("w", 1, 1, cap, true), Poly);
        mod2_targets_[SpaceId::BO] = f2->id();
        add_companion(f2, ring_id(SpaceId::BO, "QmodZ"));
    }

    entry(SpaceId::O, CoeffRing::ZHalf, "E(v_3, v_7, ...) + 2-torsion", strided("v", 3, 4, cap), Ext, Tors);
    entry(SpaceId::O, CoeffRing::Q, "E(v_3, v_7, ...)", strided("v", 3, 4, cap), Ext);
    lattice(SpaceId::O, ring_of(SpaceId::O, CoeffRing::ZHalf));
    {
        RingPtr f2 = entry(SpaceId::O, CoeffRing::F2, "L(d_1, d_3, ...)", strided("d", 1, 2, cap), Poly);
        add_companion(f2, ring_id(SpaceId::O, "QmodZ-d"));
    }

    for (SpaceId s : {SpaceId::U_O, SpaceId::BO, SpaceId::O})
        table_[{s, CoeffRing::Z}] = table_.at({s, CoeffRing::ZHalf});
    for (SpaceId s : kAllSpaces)
        table_[{s, CoeffRing::QmodZ}] = companions_.at(mod2_targets_.at(s));

    symfunc_ = std::make_unique<SymmetricFunctions>(ring_of(SpaceId::BU, CoeffRing::Z),
                                                    ring_of(SpaceId::BU, CoeffRing::Q));
}

RingPtr Registry::ring_of(SpaceId s, CoeffRing coeff) const
{
    auto it = table_.find({s, coeff});
    if (it == table_.end())
        throw Error(Errc::UnknownEntry, "no " + std::string(coeff_name(coeff)) + " cohomology registered for " +
                                            std::string(space_name(s)));
    return rings_.at(it->second);
}

RingPtr Registry::ring(std::string_view id) const
{
    auto it = rings_.find(id);
    if (it == rings_.end())
        throw Error(Errc::UnknownEntry, "no ring '" + std::string(id) + "'");
    return it->second;
}

std::vector<RingPtr> Registry::rings() const
{
    std::vector<RingPtr> out;
    for (const auto& [id, ring] : rings_)
        out.push_back(ring);
    return out;
}

RingPtr Registry::mod2_target(SpaceId s) const { return rings_.at(mod2_targets_.at(s)); }

RingPtr Registry::qmodz_companion(const RingPresentation& f2) const
{
    auto it = companions_.find(f2.id());
    if (it == companions_.end())
        throw Error(Errc::UnknownEntry, f2.id() + " has no Q/Z companion");
    return rings_.at(it->second);
}

Element Registry::h0_class(SpaceId s, const Rational& weight) const
{
    if (!has_Z_component(s))
        throw Error(Errc::NotAComponentSpace, std::string(display_name(s)) + " is connected");
    return scale(weight, Element::generator(ring_of(s, CoeffRing::Q), "ch0"));
}

}  // namespace transgress
