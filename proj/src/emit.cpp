#include "transgress/cli.hpp"

#include "transgress/error.hpp"

#include <sstream>

namespace transgress {

namespace {

std::string degree_formula(int n)
{
    int offset = 1 - n;
    if (offset == 0)
        return "4k";
    return offset > 0 ? "4k+" + std::to_string(offset) : "4k" + std::to_string(offset);
}

std::string ambient_formula(int n)
{
    return "H^{" + degree_formula(n) + "}(" + std::string(display_name(iterated_loop_of_U_O(n))) + "; Q/Z)";
}

}  // namespace

nlohmann::json to_json(const Element& e)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, q] : e.terms()) {
        nlohmann::json mono = nlohmann::json::object();
        for (const auto& f : m.factors())
            mono[e.ring().generator(f.gen).name()] = f.exp;
        terms.push_back({{"coeff", format_rational(q)}, {"mono", mono}});
    }
    return {{"ring", e.ring().id()}, {"torsion", e.torsion()}, {"terms", terms}};
}

Element element_from_json(const nlohmann::json& j, const Registry& registry)
{
    try {
        RingPtr ring = registry.ring(j.at("ring").get<std::string>());
        Terms terms;
        for (const auto& t : j.at("terms")) {
            std::vector<Factor> factors;
            for (const auto& [name, exp] : t.at("mono").items())
                factors.push_back({ring->index_of(name), exp.get<int>()});
            terms[ring->make_monomial(std::move(factors))] += parse_rational(t.at("coeff").get<std::string>());
        }
        return Element::from_terms(ring, terms, j.value("torsion", false));
    } catch (const nlohmann::json::exception& ex) {
        throw Error(Errc::SyntaxError, std::string("malformed element JSON: ") + ex.what());
    }
}

std::string emit_text(const UniversalClassResult& result)
{
    if (result.value.is_zero())
        return "0";
    return to_text(result.value) + " in " + ambient_name(result);
}

nlohmann::json emit_json(const UniversalClassResult& result, bool trace)
{
    nlohmann::json j = {
        {"n", result.n},
        {"k", result.k},
        {"space", display_name(result.space)},
        {"degree", result.degree},
        {"ambient", ambient_name(result)},
        {"value", to_text(result.value)},
        {"element", to_json(result.value)},
    };
    if (trace) {
        nlohmann::json steps = nlohmann::json::array();
        for (const auto& s : result.derivation)
            steps.push_back({{"action", s.action}, {"rule", s.rule}, {"value", s.value}});
        j["derivation"] = steps;
    }
    return j;
}

std::string final_answer_table_md(const Maps& maps, int kmax)
{
    std::ostringstream out;
    out << "n | class | ambient\n";
    out << "--- | --- | ---\n";
    for (int n = 0; n < 8; ++n) {
        std::string classes;
        for (int k = 0; k <= kmax; ++k) {
            if (4 * k + 1 - n < 0)
                continue;
            if (!classes.empty())
                classes += "; ";
            classes += "k=" + std::to_string(k) + ": " + to_text(d_universal(maps, n, k).value);
        }
        out << n << " | " << (classes.empty() ? "-" : classes) << " | " << ambient_formula(n) << "\n";
    }
    return out.str();
}

nlohmann::json final_answer_table_json(const Maps& maps, int kmax)
{
    nlohmann::json rows = nlohmann::json::array();
    for (int n = 0; n < 8; ++n) {
        nlohmann::json classes = nlohmann::json::array();
        for (int k = 0; k <= kmax; ++k) {
            if (4 * k + 1 - n < 0)
                continue;
            UniversalClassResult r = d_universal(maps, n, k);
            classes.push_back({{"k", k}, {"degree", r.degree}, {"value", to_text(r.value)}});
        }
        rows.push_back({{"n", n},
                        {"space", display_name(iterated_loop_of_U_O(n))},
                        {"ambient", ambient_formula(n)},
                        {"classes", classes}});
    }
    return {{"table", "final-answer"}, {"kmax", kmax}, {"rows", rows}};
}

std::string describe_ring(const RingPresentation& ring)
{
    std::ostringstream out;
    out << "ring: " << ring.id() << "\n";
    out << "presentation: " << ring.description() << "\n";
    out << "kind: " << kind_name(ring.kind()) << "\n";
    out << "coefficients: " << coeff_name(ring.coeff()) << "\n";
    out << "torsion: " << (ring.torsion_policy() == TorsionPolicy::Formal2Torsion ? "formal 2-torsion" : "none")
        << "\n";
    out << "max degree: " << ring.max_degree() << "\n";
    out << "generators:";
    for (const auto& g : ring.generators())
        out << " " << g.name();
    out << "\n";
    if (!ring.relations().empty()) {
        out << "relations:\n";
        for (const auto& terms : ring.relations()) {
            std::string text;
            for (const auto& [m, q] : terms) {
                bool neg = q < 0;
                Rational mag = abs(q);
                text += text.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
                if (mag != 1)
                    text += format_rational(mag) + "*";
                text += ring.monomial_name(m);
            }
            out << "  " << text << " = 0\n";
        }
    }
    return out.str();
}

nlohmann::json map_to_json(const GenMap& map)
{
    nlohmann::json images = nlohmann::json::object();
    for (const auto& [gen, image] : map.images)
        images[map.domain->generator(gen).name()] = to_text(image);
    for (int gen : map.twice_integral)
        images[map.domain->generator(gen).name()] = "2 * (unregistered integral class)";
    for (const auto& [m, image] : map.terms)
        images[map.domain->monomial_name(m)] = to_text(image);
    nlohmann::json j = {
        {"name", map.name},
        {"space_map", map.space_map()},
        {"kind", map.kind == MapKind::RingHom ? "ring-hom" : "additive"},
        {"domain", map.domain->id()},
        {"codomain", map.codomain->id()},
        {"images", images},
    };
    if (!map.note.empty())
        j["note"] = map.note;
    return j;
}

}  // namespace transgress
