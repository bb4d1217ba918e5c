#pragma once

// Exact scalars for the coefficient systems of the cohomology tables:
// Z, Q, Z/2, Z[1/2] and the group Q/Z.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace transgress {

using Integer = mpz_class;
using Rational = mpq_class;

enum class CoeffRing { Z, Q, F2, ZHalf, QmodZ };

std::string_view coeff_name(CoeffRing ring);
std::optional<CoeffRing> parse_coeff_ring(std::string_view text);

/// Q/Z is a module over Z, not a ring.
constexpr bool is_ring(CoeffRing ring) { return ring != CoeffRing::QmodZ; }

bool is_integer(const Rational& q);
bool is_power_of_two(const Integer& n);
Integer floor_of(const Rational& q);

/// Element of Z/2.
class F2 {
public:
    constexpr F2() = default;
    constexpr explicit F2(bool bit) : bit_(bit) {}
    static F2 from_integer(const Integer& n);

    constexpr bool bit() const { return bit_; }

    friend constexpr F2 operator+(F2 a, F2 b) { return F2(a.bit_ != b.bit_); }
    friend constexpr F2 operator*(F2 a, F2 b) { return F2(a.bit_ && b.bit_); }
    friend constexpr bool operator==(F2 a, F2 b) = default;

private:
    bool bit_ = false;
};

/// Rational with a power-of-two denominator.
class ZHalf {
public:
    ZHalf() = default;
    explicit ZHalf(const Rational& value);

    const Rational& value() const { return value_; }

    friend ZHalf operator+(const ZHalf& a, const ZHalf& b) { return ZHalf(Rational(a.value_ + b.value_)); }
    friend ZHalf operator-(const ZHalf& a, const ZHalf& b) { return ZHalf(Rational(a.value_ - b.value_)); }
    friend ZHalf operator*(const ZHalf& a, const ZHalf& b) { return ZHalf(Rational(a.value_ * b.value_)); }
    friend bool operator==(const ZHalf& a, const ZHalf& b) { return a.value_ == b.value_; }

private:
    Rational value_{0};
};

/// Element of Q/Z, stored by its representative in [0,1).
class QmodZ {
public:
    QmodZ() = default;

    const Rational& representative() const { return rep_; }
    bool is_zero() const { return rep_ == 0; }

    friend QmodZ operator+(const QmodZ& a, const QmodZ& b);
    friend QmodZ operator-(const QmodZ& a, const QmodZ& b);
    friend QmodZ operator-(const QmodZ& a);
    friend QmodZ operator*(const Integer& n, const QmodZ& a);
    friend QmodZ operator*(const QmodZ& a, const Integer& n) { return n * a; }
    friend bool operator==(const QmodZ& a, const QmodZ& b) { return a.rep_ == b.rep_; }

    // Q/Z has no product.
    friend QmodZ operator*(const QmodZ&, const QmodZ&) = delete;

    friend QmodZ reduce_mod_Z(const Rational& q);

private:
    Rational rep_{0};
};

Integer factorial(unsigned long n);

/// Image of q under Q -> Q/Z; canonical representative in [0,1).
QmodZ reduce_mod_Z(const Rational& q);

/// The coefficient map Z/2 -> Q/Z, 1 |-> 1/2.
QmodZ half_lift(F2 b);

/// Brings q into canonical form for `ring`; throws NonIntegralCoefficient
/// when q is not representable there (e.g. 1/2 over Z or Z/2, 1/3 over Z[1/2]).
Rational normalize_coefficient(const Rational& q, CoeffRing ring);

std::string format_rational(const Rational& q);
Rational parse_rational(std::string_view text);

std::string to_string(F2 b);
std::string to_string(const QmodZ& x);
F2 parse_f2(std::string_view text);
QmodZ parse_qmodz(std::string_view text);

}  // namespace transgress
