#include "support.hpp"

using namespace transgress;
using namespace testing_support;

namespace {

Element bu(const std::string& s) { return parse(SpaceId::BU, CoeffRing::Z, s); }
Element u(const std::string& s) { return parse(SpaceId::U, CoeffRing::Z, s); }

}  // namespace

TEST(maps, apply_table_rows) {
    EXPECT_TEXT(apply(maps().get("Bc"), bu("c_4")), "p_4");
    EXPECT_TEXT(apply(maps().get("Bc"), bu("c_6")), "Tors");
    EXPECT_TEXT(apply(maps().get("j"), u("c_7")), "y_7");
    EXPECT_TEXT(apply(maps().get("beta"), u("c_5")), "2*a_5");
    EXPECT_TEXT(apply(maps().get("alpha"), u("c_5")), "a_5 + Tors");
    EXPECT_TEXT(apply(maps().get("c"), u("c_7")), "2*v_7 + Tors");
    EXPECT_TEXT(apply(maps().get("phi"), bu("c_6")), "2*u_6");
    EXPECT_TEXT(apply(maps().get("Bj"), bu("ch0 + c_8")), "2*ch0 + y_8");
    EXPECT_TEXT(apply(maps().get("I"), bu("c_2^2")), "2*c_4");
}

TEST(maps, apply_is_multiplicative) {
    const GenMap& bj = maps().get("Bj");
    Element x = bu("c_4 + 3*c_8");
    Element y = bu("c_4*c_8 - c_12");
    EXPECT_EQ(apply(bj, x * y), apply(bj, x) * apply(bj, y));
    EXPECT_EQ(apply(bj, x + y), apply(bj, x) + apply(bj, y));
}

TEST(maps, apply_errors) {
    EXPECT_EQ(error_of([] { apply(maps().get("j"), bu("c_4")); }), Errc::SourceMismatch);
    EXPECT_EQ(error_of([] { apply(maps().get("phi"), bu("c_4")); }), Errc::UnregisteredMonomial);
    EXPECT_EQ(error_of([] { maps().get("nope"); }), Errc::UnknownMap);
}

TEST(maps, loop_apply) {
    EXPECT_TEXT(maps().loop_apply(bu("c_4")), "c_3");
    EXPECT_TRUE(maps().loop_apply(bu("c_2*c_2")).is_zero());
    EXPECT_TEXT(maps().loop_apply(u("c_3")), "c_2");
    EXPECT_TEXT(maps().loop_apply(u("c_1")), "ch0");
    EXPECT_EQ(maps().loop_apply(u("c_7")), reg().symfunc().newton(3));
    EXPECT_TRUE(maps().loop_apply(u("c_1*c_3")).is_zero());
    EXPECT_TRUE(maps().loop_apply(bu("5*ch0")).is_zero());
    EXPECT_EQ(error_of([] { maps().loop_apply(bu("c_2 + c_4")); }), Errc::NotHomogeneous);
    EXPECT_EQ(error_of([] { maps().loop_apply(parse(SpaceId::O_U, CoeffRing::Z, "u_6")); }), Errc::NoLoopRule);
}

TEST(maps, loop_of_symplectic_sum) {
    RingPtr bsp = ring(SpaceId::BSp, CoeffRing::Z);
    for (int k = 1; k <= 6; ++k) {
        Element sum = apply(maps().get("Bq"), Element::generator(bsp, "y_" + std::to_string(4 * k)));
        Element want = scale(Rational(2), Element::generator(ring(SpaceId::U, CoeffRing::Z), "c_" + std::to_string(4 * k - 1)));
        EXPECT_EQ(maps().loop_apply(sum), want) << "k = " << k;
    }
    EXPECT_TEXT(apply(maps().get("Bq"), parse(bsp, "y_4")), "-c_2^2 + 2*c_4");
}

TEST(maps, mod2_reduce) {
    RingPtr bo = ring(SpaceId::BO, CoeffRing::Z);
    EXPECT_TEXT(maps().mod2_reduce(parse(bo, "p_4")), "w_2^2");
    EXPECT_EQ(maps().mod2_reduce(parse(bo, "p_4")).ring().id(), "BO:F2");
    EXPECT_TEXT(maps().mod2_reduce(parse(SpaceId::Sp_U, CoeffRing::Z, "c_4")), "c_4");
    EXPECT_TRUE(maps().mod2_reduce(bu("2*c_6")).is_zero());
    EXPECT_TRUE(maps().mod2_reduce(parse(SpaceId::Sp_U, CoeffRing::Z, "c_2^2")).is_zero());
    EXPECT_EQ(error_of([&] { maps().mod2_reduce(parse(bo, "p_4 + Tors")); }), Errc::AmbiguousTorsion);
    EXPECT_EQ(error_of([&] { maps().mod2_reduce(parse(bo, "1/2*p_4")); }), Errc::NonIntegralCoefficient);
}

TEST(maps, l_star) {
    RingPtr bo = ring(SpaceId::BO, CoeffRing::F2);
    Element x = maps().l_star(parse(bo, "w_2*w_3"));
    EXPECT_TEXT(x, "1/2*w_2*w_3");
    EXPECT_EQ(x.ring().coeff(), CoeffRing::QmodZ);
    EXPECT_TRUE(maps().l_star(Element(bo)).is_zero());
    RingPtr spu = ring(SpaceId::Sp_U, CoeffRing::F2);
    EXPECT_TEXT(maps().l_star(parse(spu, "c_6 + c_2*c_4")), "1/2*c_2*c_4 + 1/2*c_6");
    EXPECT_TRUE((x + x).is_zero());
}

TEST(maps, chain_map) {
    EXPECT_EQ(maps().chain_map(0).name, "alpha");
    EXPECT_EQ(maps().chain_map(6).name, "j");
    EXPECT_EQ(&maps().chain_map(8), &maps().chain_map(0));
    EXPECT_EQ(maps().chain_map(0).space_map(), "U/O -> U");
    const char* names[] = {"alpha", "Bc", "c", "phi", "beta", "Bj", "j", "I"};
    for (int n = 0; n < 8; ++n)
        EXPECT_EQ(maps().chain_map(n).name, names[n]);
}

TEST(maps, bockstein_fact) {
    auto [w1, b1] = maps().bockstein_fact(1);
    EXPECT_TEXT(w1, "w_2*w_3");
    EXPECT_TEXT(b1, "Tors");
    auto [w2, b2] = maps().bockstein_fact(2);
    EXPECT_TEXT(w2, "w_4*w_5");
    EXPECT_TRUE(b2.torsion());
}

TEST(maps, naturality) {
    const std::pair<const char*, const char*> pairs[] = {{"Bc", "c"}, {"Bj", "j"}, {"Bq", "q"}, {"Bf", "f"}};
    for (const auto& [outer, inner] : pairs) {
        const GenMap& f = maps().get(outer);
        for (const auto& g : f.domain->generators()) {
            if (g.degree == 0)
                continue;
            Element x = Element::generator(f.domain, g.name());
            EXPECT_EQ(maps().loop_apply(apply(f, x)), apply(maps().get(inner), maps().loop_apply(x)))
                << outer << " on " << g.name();
        }
    }
}

TEST(maps, list_is_complete) {
    std::set<std::string> names;
    for (const GenMap* m : maps().list())
        names.insert(m->name);
    for (const char* n : {"alpha", "Bc", "c", "phi", "beta", "Bj", "j", "I", "q", "Bq", "p", "f", "Bf", "i"})
        EXPECT_TRUE(names.count(n)) << n;
}
