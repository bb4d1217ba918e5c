#include "support.hpp"

#include <functional>

using namespace transgress;
using namespace testing_support;

namespace {

const SymmetricFunctions& sym() { return reg().symfunc(); }

Element bu(const std::string& s) { return parse(SpaceId::BU, CoeffRing::Z, s); }
Element buq(const std::string& s) { return parse(SpaceId::BU, CoeffRing::Q, s); }

// Power sum p_m in the elementary symmetric functions by the Girard-Waring formula:
// sum over i_1 + 2 i_2 + ... = m of (-1)^(m + |i|) m (|i| - 1)! / prod(i_j!) prod e_j^(i_j).
Element girard_waring(int m)
{
    RingPtr r = sym().integral_ring();
    Terms terms;
    std::vector<int> mult(static_cast<std::size_t>(m + 1), 0);
    std::function<void(int, int)> walk = [&](int part, int rest) {
        if (rest == 0) {
            int len = 0;
            Integer denom = 1;
            std::vector<Factor> factors;
            for (int j = 1; j <= m; ++j) {
                int i = mult[static_cast<std::size_t>(j)];
                if (i == 0)
                    continue;
                len += i;
                denom *= factorial(static_cast<unsigned long>(i));
                factors.push_back({r->index_of("c_" + std::to_string(2 * j)), i});
            }
            Rational q(Integer(m) * factorial(static_cast<unsigned long>(len - 1)), denom);
            q.canonicalize();
            if ((m + len) % 2 == 1)
                q = -q;
            terms[r->make_monomial(std::move(factors))] += q;
            return;
        }
        if (part == 0)
            return;
        for (int i = rest / part; i >= 0; --i) {
            mult[static_cast<std::size_t>(part)] = i;
            walk(part - 1, rest - i * part);
        }
        mult[static_cast<std::size_t>(part)] = 0;
    };
    walk(m, m);
    return Element::from_terms(r, terms);
}

// The closed form as displayed for the odd case: -m sum (-1)^|i| (|i|-1)!/prod(i_j!) prod c^(i_j).
Element displayed_multinomial(int m)
{
    Element g = girard_waring(m);
    return m % 2 == 1 ? g : -g;
}

}  // namespace

TEST(symfunc, newton_small) {
    EXPECT_EQ(sym().newton(1), bu("c_2"));
    EXPECT_EQ(sym().newton(2), bu("c_2^2 - 2*c_4"));
    EXPECT_EQ(sym().newton(3), bu("c_2^3 - 3*c_2*c_4 + 3*c_6"));
    EXPECT_TEXT(sym().newton(3), "c_2^3 - 3*c_2*c_4 + 3*c_6");
    EXPECT_EQ(sym().newton(4).degree(), 8);
}

TEST(symfunc, newton_matches_girard_waring) {
    for (int m = 1; m <= 8; ++m)
        EXPECT_EQ(sym().newton(m), girard_waring(m)) << "m = " << m;
    for (int m = 1; m <= 8; m += 2)
        EXPECT_EQ(sym().newton(m), displayed_multinomial(m)) << "m = " << m;
}

TEST(symfunc, generator_coefficient) {
    RingPtr r = sym().integral_ring();
    for (int m = 1; m <= 10; ++m) {
        Rational c = sym().newton(m).coefficient(r->generator_monomial(r->index_of("c_" + std::to_string(2 * m))));
        EXPECT_EQ(c, m % 2 == 1 ? m : -m) << "m = " << m;
    }
}

TEST(symfunc, chern_component) {
    EXPECT_EQ(sym().chern_component(2), buq("c_2"));
    EXPECT_EQ(sym().chern_component(4), buq("1/2*c_2^2 - c_4"));
    EXPECT_EQ(sym().chern_component(6), buq("1/6*c_2^3 - 1/2*c_2*c_4 + 1/2*c_6"));
    EXPECT_TEXT(sym().chern_component(0), "ch0");
    EXPECT_EQ(error_of([] { sym().chern_component(3); }), Errc::OddDegree);
    EXPECT_EQ(error_of([] { sym().chern_component(-2); }), Errc::OddDegree);
}

TEST(symfunc, roots_oracle) {
    EXPECT_EQ(sym().roots_oracle(1, 2), bu("c_2"));
    EXPECT_EQ(sym().roots_oracle(2, 3), bu("c_2^2 - 2*c_4"));
    EXPECT_EQ(sym().roots_oracle(4, 5), sym().newton(4));
    EXPECT_EQ(sym().roots_oracle(5, 5), sym().roots_oracle(5, 8));
    EXPECT_EQ(error_of([] { sym().roots_oracle(3, 2); }), Errc::InsufficientRoots);
}

TEST(symfunc, chern_character_congruence) {
    EXPECT_TRUE(sym().revi1_check(1));
    EXPECT_TRUE(sym().revi1_check(2));
    EXPECT_TRUE(sym().revi1_check(6));
    Element lhs = change_coefficients(sym().chern_component(4), sym().rational_ring()) +
                  change_coefficients(bu("c_4"), sym().rational_ring());
    EXPECT_EQ(lhs, buq("1/2*c_2^2"));
}
