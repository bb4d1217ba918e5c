#include "support.hpp"

using namespace transgress;
using namespace testing_support;

namespace {

Element in(SpaceId s, const std::string& text) { return parse(reg().ring_of(s, CoeffRing::QmodZ), text); }

}  // namespace

TEST(universal, transgressed_chern) {
    EXPECT_TEXT(transgressed_chern(reg(), 1), "1/2*a_5");
    EXPECT_TEXT(transgressed_chern(reg(), 0), "1/2*a_1");
    Element twice = scale(Rational(2), transgressed_chern(reg(), 3));
    EXPECT_TEXT(change_coefficients(twice, ring(SpaceId::U_O, CoeffRing::Z)), "a_13");
}

TEST(universal, universal_m) {
    EXPECT_EQ(universal_m(0, 1), 3);
    EXPECT_EQ(universal_m(6, 2), 2);
    EXPECT_EQ(universal_m(7, 2), 2);
    EXPECT_EQ(universal_m(5, 2), 3);
    EXPECT_EQ(universal_factor(0, 1), 1);
}

TEST(universal, omega_iterate) {
    EXPECT_TEXT(omega_iterate(maps(), 1, 0), "c_5");
    // The displayed closed form gives +c_3; the loop rules give the opposite sign.
    EXPECT_TEXT(omega_iterate(maps(), 1, 2), "-c_3");
    EXPECT_TEXT(omega_closed_form(reg(), 1, 2), "c_3");
    EXPECT_TEXT(omega_iterate(maps(), 2, 7), "c_2");
    EXPECT_EQ(omega_iterate(maps(), 2, 6), omega_closed_form(reg(), 2, 6));
    EXPECT_EQ(error_of([] { omega_iterate(maps(), 1, 6); }), Errc::DegreeExhausted);
}

TEST(universal, omega_sign_pattern) {
    for (int n = 0; n <= 15; ++n) {
        int t = n / 2;
        bool flipped = (t * (t + 1) / 2) % 2 == 1;
        for (int k = 1; k <= 4; ++k) {
            if (4 * k + 1 < n)
                continue;
            Element closed = omega_closed_form(reg(), k, n);
            EXPECT_EQ(omega_iterate(maps(), k, n), flipped ? -closed : closed) << "n=" << n << " k=" << k;
        }
    }
}

TEST(universal, d_universal_examples) {
    auto d = [](int n, int k) { return d_universal(maps(), n, k); };
    EXPECT_EQ(d(0, 1).value, in(SpaceId::U_O, "1/2*a_5"));
    EXPECT_EQ(ambient_name(d(0, 1)), "H^5(U/O; Q/Z)");
    EXPECT_EQ(d(6, 2).value, in(SpaceId::Sp, "1/2*y_3"));
    EXPECT_EQ(ambient_name(d(6, 2)), "H^3(Sp; Q/Z)");
    EXPECT_TRUE(d(3, 1).value.is_zero());
    EXPECT_EQ(d(7, 3).value, in(SpaceId::Sp_U, "1/2*c_6 + 1/2*c_2*c_4"));
    EXPECT_EQ(ambient_name(d(7, 3)), "H^6(Sp/U; Q/Z)");
    EXPECT_EQ(d(1, 0).value, in(SpaceId::BO, "1/2*ch0"));
    EXPECT_EQ(ambient_name(d(1, 0)), "H^0(BOxZ; Q/Z)");
    EXPECT_TRUE(d(1, 1).value.is_zero());
    EXPECT_EQ(d(14, 4).value, in(SpaceId::Sp, "1/2*y_3"));
}

TEST(universal, d_universal_value_ring) {
    for (int n = 0; n < 8; ++n) {
        UniversalClassResult r = d_universal(maps(), n, 3);
        EXPECT_EQ(r.space, iterated_loop_of_U_O(n));
        EXPECT_EQ(r.degree, 13 - n);
        EXPECT_EQ(r.value.ring().coeff(), CoeffRing::QmodZ);
        EXPECT_FALSE(r.derivation.empty());
    }
}

TEST(universal, trace_cites_lattice_step) {
    for (int n : {2, 3, 4, 10, 11, 12}) {
        bool cited = false;
        for (const auto& step : d_universal(maps(), n, 3).derivation)
            cited = cited || step.rule.find("maps the Chern classes to twice a generator") != std::string::npos;
        EXPECT_TRUE(cited) << "n = " << n;
    }
    bool looped = false;
    for (const auto& step : d_universal(maps(), 5, 2).derivation)
        looped = looped || step.action == "transgression and loop";
    EXPECT_TRUE(looped);
}

TEST(universal, d_tilde) {
    EXPECT_EQ(d_tilde(maps(), 1), in(SpaceId::BO, "1/2*w_2*w_3"));
    EXPECT_EQ(d_tilde(maps(), 2), in(SpaceId::BO, "1/2*w_4*w_5"));
    for (int k = 1; k <= 5; ++k) {
        Element x = d_tilde(maps(), k);
        EXPECT_TRUE((x + x).is_zero());
        auto [restricted, reduced] = restriction_of_d_tilde(maps(), k);
        EXPECT_EQ(restricted, reduced) << "k = " << k;
    }
}

TEST(universal, expected_final_answer) {
    EXPECT_EQ(expected_final_answer(reg(), 6, 2), in(SpaceId::Sp, "1/2*y_3"));
    EXPECT_TRUE(expected_final_answer(reg(), 2, 3).is_zero());
    EXPECT_EQ(expected_final_answer(reg(), 7, 2), in(SpaceId::Sp_U, "1/2*c_2"));
    EXPECT_EQ(expected_final_answer(reg(), 7, 4),
              in(SpaceId::Sp_U, "1/2*c_10 + 1/2*c_2*c_8 + 1/2*c_4*c_6"));
}

TEST(universal, final_answer_range) {
    for (int n = 0; n <= 15; ++n)
        for (int k = 1; k <= 8; ++k)
            if (4 * k + 1 >= n)
                EXPECT_EQ(d_universal(maps(), n, k).value, expected_final_answer(reg(), n, k))
                    << "n=" << n << " k=" << k;
}
