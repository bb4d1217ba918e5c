#include "support.hpp"

using namespace transgress;
using namespace testing_support;

TEST(spaces, loop_space) {
    EXPECT_EQ(loop_space(SpaceId::U_O), SpaceId::BO);
    EXPECT_EQ(loop_space(SpaceId::BSp), SpaceId::Sp);
    EXPECT_EQ(loop_space(SpaceId::BU), SpaceId::U);
    EXPECT_EQ(loop_space(SpaceId::U), SpaceId::BU);
    EXPECT_EQ(loop_space(SpaceId::Sp_U), SpaceId::U_O);

    SpaceId x = SpaceId::U_O;
    for (int n = 0; n < 16; ++n) {
        EXPECT_EQ(iterated_loop_of_U_O(n), x) << "n = " << n;
        x = loop_space(x);
    }
}

TEST(spaces, names) {
    EXPECT_EQ(display_name(SpaceId::BO), "BOxZ");
    EXPECT_EQ(display_name(SpaceId::Sp_U), "Sp/U");
    EXPECT_EQ(*parse_space("U/O"), SpaceId::U_O);
    EXPECT_EQ(*parse_space("U_O"), SpaceId::U_O);
    EXPECT_FALSE(parse_space("Spin").has_value());
    for (SpaceId s : kAllSpaces)
        EXPECT_EQ(*parse_space(space_name(s)), s);
}

TEST(spaces, ring_of) {
    EXPECT_EQ(ring(SpaceId::BU, CoeffRing::Z)->description().rfind("L(", 0), 0u);
    EXPECT_EQ(ring(SpaceId::BU, CoeffRing::Z)->kind(), RingKind::FreePolynomial);
    EXPECT_EQ(ring(SpaceId::Sp_U, CoeffRing::F2)->kind(), RingKind::Exterior);
    RingPtr usp = ring(SpaceId::U_Sp, CoeffRing::Z);
    EXPECT_EQ(usp->kind(), RingKind::Exterior);
    for (const auto& g : usp->generators())
        EXPECT_EQ(g.degree % 4, 1) << g.name();
    EXPECT_EQ(usp->generators().front().name(), "a_1");
    EXPECT_EQ(usp->generators()[1].name(), "a_5");
    EXPECT_EQ(ring(SpaceId::Sp_U, CoeffRing::Z)->kind(), RingKind::Quotient);
    EXPECT_EQ(error_of([] { ring(SpaceId::O_U, CoeffRing::F2); }), Errc::UnknownEntry);
}

TEST(spaces, h0_class) {
    EXPECT_TEXT(reg().h0_class(SpaceId::BU, 1), "ch0");
    EXPECT_TEXT(reg().h0_class(SpaceId::BO, Rational(1, 2)), "1/2*ch0");
    EXPECT_TEXT(reg().h0_class(SpaceId::BSp, 2), "2*ch0");
    EXPECT_EQ(reg().h0_class(SpaceId::BO, 1).ring().id(), "BO:Q");
    EXPECT_TRUE(has_Z_component(SpaceId::BSp));
    EXPECT_FALSE(has_Z_component(SpaceId::Sp));
    EXPECT_EQ(error_of([] { reg().h0_class(SpaceId::U, 1); }), Errc::NotAComponentSpace);
}

TEST(spaces, degree_cap) {
    Registry small(10);
    EXPECT_EQ(small.max_degree(), 10);
    EXPECT_EQ(small.ring_of(SpaceId::BU, CoeffRing::Z)->generators().back().degree, 10);
    EXPECT_EQ(reg().max_degree(), default_max_degree());
}

TEST(spaces, every_ring_has_a_rational_shadow) {
    for (const auto& r : reg().rings()) {
        RingPtr q = r->rational_shadow();
        EXPECT_EQ(q->coeff(), CoeffRing::Q);
        EXPECT_EQ(q->generators().size(), r->generators().size()) << r->id();
    }
}
