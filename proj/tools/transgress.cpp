// transgress: command line front end.

#include "transgress/error.hpp"
#include "transgress/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>

using namespace transgress;

namespace {

struct Options {
    std::string coeff = "Z";
    int max_degree = default_max_degree();
    std::string format = "text";

    std::string space;
    std::string expr;
    std::string map_name;
    int degree = 0;
    int n = 0;
    int k = 1;
    int kmax = 4;
    bool trace = false;
    bool json = false;
    bool verbose = false;
    std::string suite = "all";
    std::uint64_t seed = kDefaultSeed;
};

class Context {
public:
    explicit Context(int cap) : registry_(cap), maps_(registry_) {}
    const Registry& registry() const { return registry_; }
    const Maps& maps() const { return maps_; }

private:
    Registry registry_;
    Maps maps_;
};

void print_element(const Element& e, const std::string& format)
{
    if (format == "json")
        std::cout << to_json(e).dump(2) << "\n";
    else
        std::cout << to_text(e) << "\n";
}

RingPtr lookup_ring(const Context& ctx, const Options& o)
{
    auto space = parse_space(o.space);
    if (!space)
        throw Error(Errc::UnknownEntry, "unknown space '" + o.space + "'");
    auto coeff = parse_coeff_ring(o.coeff);
    if (!coeff)
        throw Error(Errc::UnknownEntry, "unknown coefficient ring '" + o.coeff + "'");
    return ctx.registry().ring_of(*space, *coeff);
}

int cmd_ring_show(const Context& ctx, const Options& o)
{
    RingPtr ring = lookup_ring(ctx, o);
    if (o.format == "json") {
        nlohmann::json gens = nlohmann::json::array();
        for (const auto& g : ring->generators())
            gens.push_back({{"name", g.name()}, {"degree", g.degree}});
        nlohmann::json rels = nlohmann::json::array();
        for (const auto& r : ring->relations()) {
            nlohmann::json terms = nlohmann::json::object();
            for (const auto& [m, q] : r)
                terms[ring->monomial_name(m)] = format_rational(q);
            rels.push_back(terms);
        }
        std::cout << nlohmann::json{{"ring", ring->id()},
                                    {"presentation", ring->description()},
                                    {"kind", kind_name(ring->kind())},
                                    {"coeff", coeff_name(ring->coeff())},
                                    {"max_degree", ring->max_degree()},
                                    {"generators", gens},
                                    {"relations", rels}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << describe_ring(*ring);
    }
    return 0;
}

int cmd_eval(const Context& ctx, const Options& o)
{
    RingPtr ring = lookup_ring(ctx, o);
    print_element(parse_element(o.expr, ring, ctx.registry()), o.format);
    return 0;
}

int cmd_map_apply(const Context& ctx, const Options& o)
{
    const GenMap& map = ctx.maps().get(o.map_name);
    print_element(apply(map, parse_element(o.expr, map.domain, ctx.registry())), o.format);
    return 0;
}

int cmd_map_list(const Context& ctx, const Options& o)
{
    if (o.format == "json") {
        nlohmann::json all = nlohmann::json::array();
        for (const GenMap* m : ctx.maps().list())
            all.push_back(map_to_json(*m));
        std::cout << all.dump(2) << "\n";
        return 0;
    }
    for (const GenMap* m : ctx.maps().list())
        std::cout << m->name << ": " << m->space_map() << " [" << m->domain->id() << " -> " << m->codomain->id()
                  << "]\n";
    return 0;
}

int cmd_loop(const Context& ctx, const Options& o)
{
    RingPtr ring = lookup_ring(ctx, o);
    print_element(ctx.maps().loop_apply(parse_element(o.expr, ring, ctx.registry())), o.format);
    return 0;
}

int cmd_chern(const Context& ctx, const Options& o)
{
    print_element(ctx.registry().symfunc().chern_component(o.degree), o.format);
    return 0;
}

int cmd_dclass(const Context& ctx, const Options& o)
{
    UniversalClassResult r = d_universal(ctx.maps(), o.n, o.k);
    if (o.json || o.format == "json") {
        std::cout << emit_json(r, o.trace).dump(2) << "\n";
        return 0;
    }
    std::cout << emit_text(r) << "\n";
    if (o.trace)
        for (const auto& step : r.derivation)
            std::cout << "  " << step.action << " [" << step.rule << "]: " << step.value << "\n";
    return 0;
}

int cmd_table(const Context& ctx, const Options& o)
{
    if (o.format == "json")
        std::cout << final_answer_table_json(ctx.maps(), o.kmax).dump(2) << "\n";
    else
        std::cout << final_answer_table_md(ctx.maps(), o.kmax);
    return 0;
}

int cmd_verify(const Context& ctx, const Options& o)
{
    auto reports = run_verify(o.suite, ctx.maps(), o.seed);
    bool ok = true;
    nlohmann::json all = nlohmann::json::array();
    for (const auto& r : reports) {
        ok = ok && r.passed();
        if (o.format == "json")
            all.push_back(report_json(r));
        else
            std::cout << report_text(r, o.verbose);
    }
    if (o.format == "json")
        std::cout << all.dump(2) << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Symbolic cohomology of the Bott periodicity spaces"};
    app.require_subcommand(1);
    app.add_option("--coeff", o.coeff, "Coefficients: Z, Q, F2, Zhalf, QmodZ");
    app.add_option("--max-degree", o.max_degree, "Degree cap")->check(CLI::Range(1, 400));
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "md"}));

    std::function<int(const Context&, const Options&)> action;
    auto bind = [&](CLI::App* sub, int (*fn)(const Context&, const Options&)) {
        sub->callback([&action, fn] { action = fn; });
    };

    auto* ring = app.add_subcommand("ring", "Ring presentations");
    ring->require_subcommand(1);
    auto* ring_show = ring->add_subcommand("show", "Print a registered presentation");
    ring_show->add_option("space", o.space)->required();
    ring_show->add_option("--coeff", o.coeff);
    ring_show->add_option("--max-degree", o.max_degree)->check(CLI::Range(1, 400));
    bind(ring_show, cmd_ring_show);

    auto* eval = app.add_subcommand("eval", "Normalize an expression");
    eval->add_option("--space", o.space)->required();
    eval->add_option("--coeff", o.coeff);
    eval->add_option("expr", o.expr)->required();
    bind(eval, cmd_eval);

    auto* map = app.add_subcommand("map", "Induced maps");
    map->require_subcommand(1);
    auto* map_apply = map->add_subcommand("apply", "Apply a map to an expression in its domain");
    map_apply->add_option("--name", o.map_name)->required();
    map_apply->add_option("expr", o.expr)->required();
    bind(map_apply, cmd_map_apply);
    auto* map_list = map->add_subcommand("list", "List registered maps");
    map_list->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    bind(map_list, cmd_map_list);

    auto* loop = app.add_subcommand("loop", "Loop suspension");
    loop->add_option("--space", o.space)->required();
    loop->add_option("--coeff", o.coeff);
    loop->add_option("expr", o.expr)->required();
    bind(loop, cmd_loop);

    auto* chern = app.add_subcommand("chern", "Chern character component");
    chern->add_option("--degree", o.degree)->required();
    bind(chern, cmd_chern);

    auto* dclass = app.add_subcommand("dclass", "Universal class d(n, k)");
    dclass->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
    dclass->add_option("--k", o.k)->required()->check(CLI::NonNegativeNumber);
    dclass->add_flag("--trace", o.trace);
    dclass->add_flag("--json", o.json);
    bind(dclass, cmd_dclass);

    auto* table = app.add_subcommand("table", "Tables");
    table->require_subcommand(1);
    auto* final_answer = table->add_subcommand("final-answer", "Classes d(n, k) for n = 0..7");
    final_answer->add_option("--kmax", o.kmax)->check(CLI::Range(0, 64));
    final_answer->add_option("--format", o.format)->check(CLI::IsMember({"md", "json", "text"}));
    bind(final_answer, cmd_table);

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", o.suite);
    verify->add_option("--seed", o.seed);
    verify->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_flag("-v,--verbose", o.verbose);
    bind(verify, cmd_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        Context ctx(o.max_degree);
        return action(ctx, o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
