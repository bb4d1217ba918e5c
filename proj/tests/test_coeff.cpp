#include "support.hpp"

using namespace transgress;
using testing_support::error_of;

TEST(coeff, factorial) {
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(5), 120);
    EXPECT_EQ(factorial(20).get_str(), "2432902008176640000");

    Integer product = 1;
    for (unsigned long i = 2; i <= 40; ++i)
        product *= i;
    EXPECT_EQ(factorial(40), product);
}

TEST(coeff, reduce_mod_Z) {
    EXPECT_EQ(to_string(reduce_mod_Z(Rational(3, 2))), "1/2 mod Z");
    EXPECT_TRUE(reduce_mod_Z(Rational(2)).is_zero());
    EXPECT_EQ(reduce_mod_Z(Rational(-1, 2)), reduce_mod_Z(Rational(1, 2)));
    EXPECT_EQ(reduce_mod_Z(Rational(-1, 3)).representative(), Rational(2, 3));
    EXPECT_EQ(reduce_mod_Z(Rational(7, 6)) + reduce_mod_Z(Rational(5, 6)), QmodZ());
}

TEST(coeff, half_lift) {
    EXPECT_TRUE(half_lift(F2(false)).is_zero());
    EXPECT_EQ(half_lift(F2(true)).representative(), Rational(1, 2));
    EXPECT_TRUE((half_lift(F2(true)) + half_lift(F2(true))).is_zero());
    EXPECT_TRUE((Integer(2) * half_lift(F2(true))).is_zero());
}

TEST(coeff, f2_and_zhalf) {
    EXPECT_EQ(F2(true) + F2(true), F2(false));
    EXPECT_EQ(F2::from_integer(-3), F2(true));
    EXPECT_EQ(parse_f2("0"), F2(false));
    EXPECT_EQ(ZHalf(Rational(3, 4)) * ZHalf(Rational(2)), ZHalf(Rational(3, 2)));
    EXPECT_EQ(error_of([] { ZHalf(Rational(1, 3)); }), Errc::NonIntegralCoefficient);
}

TEST(coeff, normalize_coefficient) {
    EXPECT_EQ(normalize_coefficient(Rational(3), CoeffRing::F2), 1);
    EXPECT_EQ(normalize_coefficient(Rational(-4), CoeffRing::F2), 0);
    EXPECT_EQ(normalize_coefficient(Rational(5, 2), CoeffRing::QmodZ), Rational(1, 2));
    EXPECT_EQ(normalize_coefficient(Rational(3, 8), CoeffRing::ZHalf), Rational(3, 8));
    EXPECT_EQ(error_of([] { normalize_coefficient(Rational(1, 2), CoeffRing::Z); }), Errc::NonIntegralCoefficient);
    EXPECT_EQ(error_of([] { normalize_coefficient(Rational(1, 2), CoeffRing::F2); }), Errc::NonIntegralCoefficient);
    EXPECT_EQ(error_of([] { normalize_coefficient(Rational(1, 6), CoeffRing::ZHalf); }),
              Errc::NonIntegralCoefficient);
}

TEST(coeff, text) {
    for (const char* s : {"0", "7", "-7", "1/2", "-22/7", "123456789012345678901234567890"})
        EXPECT_EQ(format_rational(parse_rational(s)), s);
    EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
    EXPECT_EQ(to_string(parse_qmodz("5/4 mod Z")), "1/4 mod Z");
    EXPECT_EQ(*parse_coeff_ring("Zhalf"), CoeffRing::ZHalf);
    EXPECT_EQ(coeff_name(CoeffRing::QmodZ), "QmodZ");
    EXPECT_FALSE(parse_coeff_ring("R").has_value());
    EXPECT_FALSE(is_ring(CoeffRing::QmodZ));
    EXPECT_EQ(floor_of(Rational(-1, 2)), -1);
}
