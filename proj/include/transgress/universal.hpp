#pragma once

// The universal secondary classes [Omega^n((m-1)!/(2k)! T(c_{4k+2}))] in
// H^{4k+1-n}(Omega^n(U/O); Q/Z), derived step by step from the rules.

#include "transgress/maps.hpp"

#include <optional>
#include <string>
#include <vector>

namespace transgress {

struct DerivationStep {
    std::string action;
    std::string rule;
    std::string value;
};

struct UniversalClassResult {
    int n = 0;
    int k = 0;
    SpaceId space = SpaceId::U_O;
    int degree = 0;
    Element value;
    /// The Z/2 class whose l_* image is `value`, when the pipeline passes through one.
    std::optional<Element> mod2_class;
    std::vector<DerivationStep> derivation;
};

/// m with 2m = 4k+2-n for n even and 2m = 4k+3-n for n odd.
int universal_m(int n, int k);
/// (m-1)!/(2k)!
Rational universal_factor(int n, int k);

/// T(c_{4k+2}) = 1/2 a_{4k+1} in H^{4k+1}(U/O; Q).
Element transgressed_chern(const Registry& registry, int k);

/// Omega^n((m-1)!/(2k)! c_{4k+1}), looped along U -> BU -> U -> ...
Element omega_iterate(const Maps& maps, int k, int n);

/// The displayed case split: c_{4k+1-n} for n even, (2k-(n-1)/2)! ch_{4k+1-n} for n odd.
Element omega_closed_form(const Registry& registry, int k, int n);

UniversalClassResult d_universal(const Maps& maps, int n, int k);

/// l_*(w_{2k} w_{2k+1}) on BO.
Element d_tilde(const Maps& maps, int k);

/// i^* d_tilde(k) and d_universal(0, k), both carried to H^*(U/O; Q/Z) in the w-presentation.
std::pair<Element, Element> restriction_of_d_tilde(const Maps& maps, int k);

/// Closed-form table of d(n, k). Used only for comparison.
Element expected_final_answer(const Registry& registry, int n, int k);

/// "H^3(Sp; Q/Z)"
std::string ambient_name(const UniversalClassResult& result);

}  // namespace transgress
