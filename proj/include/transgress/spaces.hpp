#pragma once

// The ten spaces of real and complex Bott periodicity and the registered
// presentations of their cohomology rings.

#include "transgress/algebra.hpp"
#include "transgress/symfunc.hpp"

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace transgress {

enum class SpaceId { BO, O, O_U, U_Sp, BSp, Sp, Sp_U, U_O, BU, U };

inline constexpr std::array<SpaceId, 10> kAllSpaces = {SpaceId::BO,   SpaceId::O,  SpaceId::O_U, SpaceId::U_Sp,
                                                       SpaceId::BSp,  SpaceId::Sp, SpaceId::Sp_U, SpaceId::U_O,
                                                       SpaceId::BU,   SpaceId::U};

/// Identifier used in ring ids and on the command line, e.g. "U_O".
std::string_view space_name(SpaceId s);
/// Conventional name, e.g. "U/O", "BOxZ".
std::string_view display_name(SpaceId s);
std::optional<SpaceId> parse_space(std::string_view text);

bool has_Z_component(SpaceId s);

/// Bott successor: U_O -> BO -> O -> O_U -> U_Sp -> BSp -> Sp -> Sp_U -> U_O
/// and BU -> U -> BU.
SpaceId loop_space(SpaceId s);

/// n-fold loop space of U/O.
SpaceId iterated_loop_of_U_O(int n);

/// Cap from TRANSGRESS_MAX_DEGREE, 48 when unset.
int default_max_degree();

class Registry {
public:
    explicit Registry(int max_degree = default_max_degree());

    /// Shared registry built with the default cap.
    static const Registry& standard();

    int max_degree() const { return max_degree_; }

    /// Table lookup; BO, O and U_O over Z give the Z[1/2] entry carrying
    /// formal 2-torsion. Over QmodZ, the Q/Z form of mod2_target(s).
    RingPtr ring_of(SpaceId s, CoeffRing coeff) const;
    /// Lookup by ring id such as "BU:Z" or "U_O:F2-lattice".
    RingPtr ring(std::string_view id) const;
    std::vector<RingPtr> rings() const;

    /// The Z/2 ring that reduction mod 2 of the integral lattice lands in.
    RingPtr mod2_target(SpaceId s) const;
    /// Same generators with Q/Z coefficients; the target of l_*.
    RingPtr qmodz_companion(const RingPresentation& f2) const;

    /// weight * ch0 in H^0(s; Q).
    Element h0_class(SpaceId s, const Rational& weight) const;

    const SymmetricFunctions& symfunc() const { return *symfunc_; }

private:
    RingPtr add(RingPresentation::Spec spec);
    void add_companion(const RingPtr& f2, const std::string& id);

    int max_degree_;
    std::map<std::string, RingPtr, std::less<>> rings_;
    std::map<std::pair<SpaceId, CoeffRing>, std::string> table_;
    std::map<SpaceId, std::string> mod2_targets_;
    std::map<std::string, std::string, std::less<>> companions_;
    std::unique_ptr<SymmetricFunctions> symfunc_;
};

}  // namespace transgress
