#include "support.hpp"

#include <transgress/verify.hpp>

using namespace transgress;
using namespace testing_support;

TEST(parse, examples) {
    Element x = parse(SpaceId::BU, CoeffRing::Z, "c_2^2 - 2*c_4");
    RingPtr r = ring(SpaceId::BU, CoeffRing::Z);
    EXPECT_EQ(x.terms().size(), 2u);
    EXPECT_EQ(x.coefficient(r->make_monomial({{r->index_of("c_2"), 2}})), 1);
    EXPECT_EQ(x.coefficient(r->generator_monomial(r->index_of("c_4"))), -2);
    EXPECT_TEXT(parse(SpaceId::BU, CoeffRing::Q, "ch[4]"), "1/2*c_2^2 - c_4");
    EXPECT_TEXT(parse(SpaceId::U_Sp, CoeffRing::Q, "1/2*a_5"), "1/2*a_5");
}

TEST(parse, precedence) {
    RingPtr q = ring(SpaceId::BU, CoeffRing::Q);
    EXPECT_EQ(parse(q, "-c_2^2"), -parse(q, "c_2*c_2"));
    EXPECT_EQ(parse(q, "2*c_2 + 3*c_2*c_4 - c_6"), parse(q, "(c_6 - 3*c_4*c_2 - 2*c_2)*(-1)"));
    EXPECT_EQ(parse(q, "( c_2 + c_4 )^2"), parse(q, "c_2^2+2*c_2*c_4+c_4^2"));
    EXPECT_EQ(parse(q, "1/2 * 4"), parse(q, "2"));
    EXPECT_EQ(parse(q, "ch0*c_2 - - c_2"), parse(q, "ch0*c_2 + c_2"));
}

TEST(parse, torsion_token) {
    Element x = parse(SpaceId::U_O, CoeffRing::Z, "a_5 + Tors");
    EXPECT_TRUE(x.torsion());
    EXPECT_TEXT(x, "a_5 + Tors");
    EXPECT_EQ(error_of([] { parse(SpaceId::BU, CoeffRing::Z, "Tors"); }), Errc::TorsionNotAllowed);
}

TEST(parse, errors) {
    auto position = [](const std::string& text) -> std::size_t {
        try {
            parse(SpaceId::BU, CoeffRing::Z, text);
        } catch (const SyntaxError& e) {
            return e.position();
        }
        return std::string::npos;
    };
    EXPECT_EQ(position("c_2 +"), 5u);
    EXPECT_EQ(position("c_2 $ c_4"), 4u);
    EXPECT_EQ(position("(c_2"), 4u);
    EXPECT_EQ(position("c_"), 2u);
    EXPECT_EQ(position("c_2^c_4"), 4u);
    EXPECT_EQ(error_of([] { parse(SpaceId::BU, CoeffRing::Z, "c_5"); }), Errc::UnknownGenerator);
    EXPECT_EQ(error_of([] { parse(SpaceId::BU, CoeffRing::Z, "c_2^30"); }), Errc::DegreeCapExceeded);
    EXPECT_EQ(error_of([] { parse(SpaceId::BU, CoeffRing::Z, "ch[3]"); }), Errc::OddDegree);
    Registry small(8);
    EXPECT_EQ(error_of([&] { parse_element("c_10", small.ring_of(SpaceId::BU, CoeffRing::Z), small); }),
              Errc::DegreeCapExceeded);
}

TEST(parse, round_trip) {
    std::mt19937_64 rng(7);
    for (const auto& r : reg().rings()) {
        for (int i = 0; i < 50; ++i) {
            Element x = random_element(r, rng, 24);
            EXPECT_EQ(parse(r, to_text(x)), x) << r->id() << ": " << to_text(x);
            EXPECT_EQ(element_from_json(nlohmann::json::parse(to_json(x).dump()), reg()), x) << r->id();
        }
    }
}

TEST(emit, text) {
    EXPECT_EQ(emit_text(d_universal(maps(), 6, 2)), "1/2*y_3 in H^3(Sp; Q/Z)");
    EXPECT_EQ(emit_text(d_universal(maps(), 3, 1)), "0");
    EXPECT_EQ(emit_text(d_universal(maps(), 0, 1)), "1/2*a_5 in H^5(U/O; Q/Z)");
}

TEST(emit, json) {
    nlohmann::json j = emit_json(d_universal(maps(), 7, 3), true);
    EXPECT_EQ(j["value"], "1/2*c_2*c_4 + 1/2*c_6");
    EXPECT_EQ(j["space"], "Sp/U");
    EXPECT_EQ(j["degree"], 6);
    EXPECT_TRUE(j["derivation"].is_array());
    EXPECT_EQ(element_from_json(j["element"], reg()), d_universal(maps(), 7, 3).value);
    EXPECT_FALSE(emit_json(d_universal(maps(), 7, 3), false).contains("derivation"));
    EXPECT_EQ(error_of([] { element_from_json(nlohmann::json::parse("{\"ring\": \"BU:Z\"}"), reg()); }),
              Errc::SyntaxError);
}

TEST(emit, table) {
    std::string md = final_answer_table_md(maps(), 3);
    std::istringstream in(md);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    ASSERT_EQ(lines.size(), 10u);
    EXPECT_EQ(lines[0], "n | class | ambient");
    EXPECT_EQ(lines[8].rfind("6 | k=2: 1/2*y_3", 0), 0u);
    EXPECT_EQ(md, final_answer_table_md(maps(), 3));
    EXPECT_EQ(final_answer_table_json(maps(), 3)["rows"].size(), 8u);
}

TEST(emit, describe_ring) {
    std::string text = describe_ring(*ring(SpaceId::Sp_U, CoeffRing::Z));
    EXPECT_NE(text.find("kind: quotient"), std::string::npos);
    EXPECT_NE(text.find("2*c_4"), std::string::npos);
    EXPECT_EQ(map_to_json(maps().get("j"))["images"]["c_7"], "y_7");
}

TEST(verify, deterministic) {
    auto a = run_verify("roundtrip", maps(), 11);
    auto b = run_verify("roundtrip", maps(), 11);
    ASSERT_EQ(a.size(), 1u);
    ASSERT_EQ(a[0].cases.size(), b[0].cases.size());
    for (std::size_t i = 0; i < a[0].cases.size(); ++i)
        EXPECT_EQ(a[0].cases[i].passed, b[0].cases[i].passed);
    EXPECT_TRUE(a[0].passed());
    EXPECT_EQ(error_of([] { run_verify("bogus", maps()); }), Errc::UnknownEntry);
    EXPECT_EQ(run_verify("all", maps()).size(), suite_names().size());
}

TEST(verify, suites) {
    for (const char* name : {"newton", "revi1", "final-answer", "map-consistency", "registry"}) {
        auto reports = run_verify(name, maps());
        EXPECT_TRUE(reports.front().passed()) << report_text(reports.front(), false);
    }
    EXPECT_GE(run_verify("final-answer", maps()).front().cases.size(), 100u);
}
