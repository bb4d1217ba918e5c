#pragma once

// Pullbacks along the maps between the Bott spaces, coefficient changes,
// and the loop homomorphism H^*(X) -> H^{*-1}(Omega X).

#include "transgress/spaces.hpp"

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace transgress {

enum class MapKind { RingHom, AdditiveOnly };

/// A map f: X -> Y stored by its effect f^*: H^*(Y) -> H^*(X) on generators.
/// `domain` is the cohomology of Y, `codomain` that of X.
struct GenMap {
    std::string name;
    SpaceId from;
    SpaceId to;
    MapKind kind = MapKind::RingHom;
    RingPtr domain;
    RingPtr codomain;
    std::map<int, Element> images;       // RingHom: generator index -> image
    std::set<int> twice_integral;        // images only known to lie in 2 * (integral lattice)
    std::map<Monomial, Element> terms;   // AdditiveOnly: monomial -> image
    std::string note;

    std::string space_map() const;
};

struct LoopRule {
    RingPtr source;
    RingPtr target;
    /// Image of a generator; nullopt when the rule leaves it unregistered.
    std::function<std::optional<Element>(const Generator&)> image;
    std::string note;
};

Element apply(const GenMap& map, const Element& e);

class Maps {
public:
    explicit Maps(const Registry& registry);

    /// Maps built over Registry::standard().
    static const Maps& standard();

    const Registry& registry() const { return registry_; }

    const GenMap& get(std::string_view name) const;  // UnknownMap
    std::vector<const GenMap*> list() const;
    const std::vector<LoopRule>& loop_rules() const { return loops_; }

    /// Model of Omega^n alpha : Omega^n(U/O) -> Omega^n U.
    const GenMap& chain_map(int n) const;

    const LoopRule& loop_rule(const RingPresentation& source) const;  // NoLoopRule
    Element loop_apply(const Element& e) const;

    /// Integral lattice -> Z/2 with the table's renaming of generators.
    Element mod2_reduce(const Element& e) const;
    /// Z/2 -> Q/Z, 1 |-> 1/2.
    Element l_star(const Element& e) const;

    /// (w_{2k} w_{2k+1} over Z/2 on BO, its Bockstein p^* c_{4k+2} on BO).
    std::pair<Element, Element> bockstein_fact(int k) const;

private:
    GenMap& add(std::string name, SpaceId from, SpaceId to, RingPtr domain, RingPtr codomain);

    const Registry& registry_;
    std::map<std::string, GenMap, std::less<>> maps_;
    std::vector<std::string> order_;
    std::map<std::string, std::string> mod2_;  // source ring id -> map name
    std::vector<LoopRule> loops_;
};

}  // namespace transgress
