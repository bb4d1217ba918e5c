#pragma once

#include "transgress/algebra.hpp"

#include <mutex>
#include <vector>

namespace transgress {

/// Newton polynomials and Chern character components in L(c_2, c_4, ...).
/// The generator c_{2i} plays the role of the i-th elementary symmetric
/// function of the formal Chern roots.
class SymmetricFunctions {
public:
    /// `integral` and `rational` are the same presentation of H*(BU) over Z and Q.
    SymmetricFunctions(RingPtr integral, RingPtr rational);

    const RingPtr& integral_ring() const { return integral_; }
    const RingPtr& rational_ring() const { return rational_; }

    /// sigma_m = m! ch_{2m}, the m-th power sum of the roots.
    Element newton(int m) const;

    /// ch_d = newton(d/2) / (d/2)!. ch_0 is the component class ch0.
    Element chern_component(int d) const;

    /// Power sum of r formal roots rewritten in elementary symmetric
    /// functions by leading-term elimination.
    Element roots_oracle(int m, int r) const;

    /// (m-1)! ch_{2m} - (-1)^{m-1} c_{2m} is decomposable.
    bool revi1_check(int m) const;

private:
    RingPtr integral_;
    RingPtr rational_;
    mutable std::mutex mutex_;
    mutable std::vector<Element> newton_;  // newton_[m-1]
};

}  // namespace transgress
