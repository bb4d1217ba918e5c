#include "transgress/verify.hpp"

#include "transgress/error.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

namespace transgress {

namespace {

constexpr int kAuditDegree = 24;

std::string named(const std::string& symbol, int degree) { return symbol + "_" + std::to_string(degree); }

class Suite {
public:
    explicit Suite(std::string name) { report_.suite = std::move(name); }

    void check(std::string name, bool ok, std::string detail = {})
    {
        report_.cases.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
    }

    // Runs `body`, turning an exception into a failed case.
    void attempt(const std::string& name, const std::function<void()>& body)
    {
        try {
            body();
        } catch (const std::exception& ex) {
            check(name, false, ex.what());
        }
    }

    VerifyReport finish(std::chrono::steady_clock::time_point start)
    {
        report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return std::move(report_);
    }

private:
    VerifyReport report_;
};

template <class Body>
VerifyReport run(std::string name, Body body)
{
    auto start = std::chrono::steady_clock::now();
    Suite suite(std::move(name));
    body(suite);
    return suite.finish(start);
}

std::string mismatch(const Element& got, const Element& want)
{
    return "got " + to_text(got) + " [" + got.ring().id() + "], expected " + to_text(want) + " [" +
           want.ring().id() + "]";
}

template <class F>
void for_each_case(F f)
{
    for (int n = 0; n <= 15; ++n)
        for (int k = 1; k <= 8; ++k)
            if (4 * k + 1 - n >= 0)
                f(n, k);
}

VerifyReport newton_suite(const Maps& maps)
{
    return run("newton", [&](Suite& s) {
        const SymmetricFunctions& sym = maps.registry().symfunc();
        for (int m = 1; m <= 10; ++m) {
            s.attempt("newton " + std::to_string(m), [&] {
                Element recursion = sym.newton(m);
                Element oracle = sym.roots_oracle(m, m + 2);
                s.check("newton " + std::to_string(m) + " = roots oracle", recursion == oracle,
                        mismatch(recursion, oracle));
                Rational lead = recursion.coefficient(
                    sym.integral_ring()->generator_monomial(sym.integral_ring()->index_of(named("c", 2 * m))));
                s.check("newton " + std::to_string(m) + " generator coefficient", lead == (m % 2 == 1 ? m : -m),
                        format_rational(lead));
            });
        }
    });
}

VerifyReport revi1_suite(const Maps& maps)
{
    return run("revi1", [&](Suite& s) {
        for (int m = 1; m <= 10; ++m)
            s.attempt("revi1 " + std::to_string(m), [&] {
                s.check("revi1 " + std::to_string(m), maps.registry().symfunc().revi1_check(m));
            });
    });
}

VerifyReport mod2_newton_suite(const Maps& maps)
{
    return run("mod2-newton", [&](Suite& s) {
        const Registry& reg = maps.registry();
        RingPtr f2 = reg.ring_of(SpaceId::Sp_U, CoeffRing::F2);
        for (int k = 2; k <= 8; ++k) {
            s.attempt("k=" + std::to_string(k), [&] {
                Element reduced = change_coefficients(reg.symfunc().newton(2 * k - 3), f2);
                int top = 4 * k - 6;
                Terms want;
                for (int i = 0; i <= k - 2; ++i) {
                    std::vector<Factor> factors{{f2->index_of(named("c", top - 2 * i)), 1}};
                    if (i > 0)
                        factors.push_back({f2->index_of(named("c", 2 * i)), 1});
                    want[f2->make_monomial(std::move(factors))] += 1;
                }
                Element expected = Element::from_terms(f2, want);
                s.check("newton(" + std::to_string(2 * k - 3) + ") mod 2", reduced == expected,
                        mismatch(reduced, expected));
            });
        }
    });
}

VerifyReport final_answer_suite(const Maps& maps)
{
    return run("final-answer", [&](Suite& s) {
        for_each_case([&](int n, int k) {
            std::string name = "n=" + std::to_string(n) + " k=" + std::to_string(k);
            s.attempt(name, [&] {
                UniversalClassResult r = d_universal(maps, n, k);
                Element want = expected_final_answer(maps.registry(), n, k);
                s.check(name, r.value == want, mismatch(r.value, want));
            });
        });
    });
}

VerifyReport derivation_suite(const Maps& maps)
{
    return run("derivation", [&](Suite& s) {
        for_each_case([&](int n, int k) {
            int r = n % 8;
            if (r < 2 || r > 4)
                return;
            std::string name = "trace n=" + std::to_string(n) + " k=" + std::to_string(k);
            s.attempt(name, [&] {
                UniversalClassResult res = d_universal(maps, n, k);
                bool cited = false;
                for (const auto& step : res.derivation)
                    cited = cited || step.rule.find("twice a generator") != std::string::npos;
                s.check(name, cited, "no lattice step in the derivation");
            });
        });
        for (int k = 1; k <= 8; ++k) {
            std::string name = "i^* d_tilde = d_bar k=" + std::to_string(k);
            s.attempt(name, [&] {
                auto [restricted, reduced] = restriction_of_d_tilde(maps, k);
                s.check(name, restricted == reduced, mismatch(restricted, reduced));
            });
        }
    });
}

VerifyReport torsion_suite(const Maps& maps)
{
    return run("torsion", [&](Suite& s) {
        for_each_case([&](int n, int k) {
            std::string name = "2 d(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ") = 0";
            s.attempt(name, [&] {
                Element v = d_universal(maps, n, k).value;
                Element twice = v + v;
                s.check(name, twice.is_zero(), to_text(twice));
            });
        });
        for (int k = 1; k <= 8; ++k) {
            std::string name = "2 d_tilde(" + std::to_string(k) + ") = 0";
            s.attempt(name, [&] {
                Element d = d_tilde(maps, k);
                s.check(name, (d + d).is_zero() && !d.is_zero(), to_text(d));
                Element b = maps.bockstein_fact(k).second;
                s.check("2 p^*c_" + std::to_string(4 * k + 2) + " = 0",
                        scale(Rational(2), b).is_zero() && b.torsion(), to_text(b));
            });
        }
    });
}

VerifyReport omega_suite(const Maps& maps, bool signed_variant)
{
    return run(signed_variant ? "omega-signed" : "omega", [&](Suite& s) {
        for_each_case([&](int n, int k) {
            std::string name = "omega n=" + std::to_string(n) + " k=" + std::to_string(k);
            s.attempt(name, [&] {
                Element got = omega_iterate(maps, k, n);
                Element want = omega_closed_form(maps.registry(), k, n);
                if (signed_variant) {
                    int t = n / 2;
                    if ((t * (t + 1) / 2) % 2 == 1)
                        want = -want;
                }
                s.check(name, got == want, mismatch(got, want));
            });
        });
    });
}

VerifyReport map_consistency_suite(const Maps& maps, std::uint64_t seed)
{
    return run("map-consistency", [&](Suite& s) {
        const Registry& reg = maps.registry();
        const std::pair<const char*, const char*> pairs[] = {{"Bc", "c"}, {"Bj", "j"}, {"Bq", "q"}, {"Bf", "f"}};
        for (const auto& [outer, inner] : pairs) {
            const GenMap& f = maps.get(outer);
            const GenMap& g = maps.get(inner);
            for (const auto& gen : f.domain->generators()) {
                if (gen.degree == 0)
                    continue;
                std::string name = std::string("Omega ") + outer + "^*(" + gen.name() + ") = " + inner + "^* Omega(" +
                                   gen.name() + ")";
                s.attempt(name, [&] {
                    Element x = Element::generator(f.domain, gen.name());
                    Element lhs = maps.loop_apply(apply(f, x));
                    Element rhs = apply(g, maps.loop_apply(x));
                    s.check(name, lhs == rhs, mismatch(lhs, rhs));
                });
            }
        }

        RingPtr bu = reg.ring_of(SpaceId::BU, CoeffRing::Z);
        RingPtr u = reg.ring_of(SpaceId::U, CoeffRing::Z);
        for (int k = 1; k <= 6 && 4 * k <= reg.max_degree(); ++k) {
            std::string name = "Omega sum (-1)^i c_{2i} c_{2j} = 2 c_" + std::to_string(4 * k - 1);
            s.attempt(name, [&] {
                RingPtr bsp = reg.ring_of(SpaceId::BSp, CoeffRing::Z);
                Element sum = apply(maps.get("Bq"), Element::generator(bsp, named("y", 4 * k)));
                Element got = maps.loop_apply(sum);
                Element want = scale(Rational(2), Element::generator(u, named("c", 4 * k - 1)));
                s.check(name, got == want, mismatch(got, want));
            });
        }

        for (int n = 0; n < 8; ++n) {
            std::string name = "chain " + std::to_string(n) + " source";
            s.attempt(name, [&] {
                const GenMap& f = maps.chain_map(n);
                SpaceId space = iterated_loop_of_U_O(n);
                bool ok = f.from == space && f.codomain->same_as(*reg.ring_of(space, CoeffRing::Z)) &&
                          f.to == (n % 2 == 0 ? SpaceId::U : SpaceId::BU) && &maps.chain_map(n + 8) == &f;
                s.check(name, ok, f.name + " is " + f.space_map());
            });
        }

        std::mt19937_64 rng(seed);
        for (RingPtr ring : {bu, u, reg.ring_of(SpaceId::BSp, CoeffRing::Z), reg.ring_of(SpaceId::BO, CoeffRing::Z),
                             reg.ring_of(SpaceId::BO, CoeffRing::F2), reg.ring_of(SpaceId::U_O, CoeffRing::F2)}) {
            int cases = 0;
            int failures = 0;
            std::string detail;
            for (int trial = 0; trial < 200 && cases < 40; ++trial) {
                int d = 2 + static_cast<int>(rng() % 29);
                auto basis = ring->basis(std::min(d, reg.max_degree()));
                Terms terms;
                for (const auto& m : basis)
                    if (m.length() >= 2 && rng() % 3 == 0)
                        terms[m] = Rational(static_cast<long>(rng() % 7) - 3);
                Element x = Element::from_terms(ring, terms);
                if (x.is_zero())
                    continue;
                ++cases;
                try {
                    if (!maps.loop_apply(x).is_zero()) {
                        ++failures;
                        detail = to_text(x);
                    }
                } catch (const std::exception& ex) {
                    ++failures;
                    detail = ex.what();
                }
            }
            s.check("loop kills decomposables on " + ring->id(), failures == 0 && cases > 0, detail);
        }
    });
}

std::vector<int> product_series(const std::vector<int>& degrees, bool exterior, int top)
{
    std::vector<int> series(static_cast<std::size_t>(top + 1), 0);
    series[0] = 1;
    for (int d : degrees) {
        if (d <= 0 || d > top)
            continue;
        if (exterior) {
            for (int i = top; i >= d; --i)
                series[static_cast<std::size_t>(i)] += series[static_cast<std::size_t>(i - d)];
        } else {
            for (int i = d; i <= top; ++i)
                series[static_cast<std::size_t>(i)] += series[static_cast<std::size_t>(i - d)];
        }
    }
    return series;
}

std::vector<int> stride(int first, int step, int top)
{
    std::vector<int> out;
    for (int d = first; d <= top; d += step)
        out.push_back(d);
    return out;
}

VerifyReport registry_suite(const Maps& maps)
{
    return run("registry", [&](Suite& s) {
        const Registry& reg = maps.registry();
        const int top = std::min(kAuditDegree, reg.max_degree());

        auto period = [](SpaceId start) {
            SpaceId x = loop_space(start);
            int n = 1;
            while (x != start && n < 100) {
                x = loop_space(x);
                ++n;
            }
            return n;
        };
        s.check("real Bott cycle has period 8", period(SpaceId::U_O) == 8);
        s.check("complex Bott cycle has period 2", period(SpaceId::BU) == 2);
        bool bijective = true;
        for (SpaceId x : kAllSpaces) {
            int expected = (x == SpaceId::BU || x == SpaceId::U) ? 2 : 8;
            bijective = bijective && period(x) == expected;
        }
        s.check("every space returns to itself", bijective);

        // The algebras the Z/2 tables name, as (ring id, generator degrees, exterior).
        struct Audit {
            std::string id;
            std::vector<int> degrees;
            bool exterior;
        };
        const Audit audits[] = {
            {"BO:F2", stride(1, 1, top), false},
            {"O:F2", stride(1, 2, top), false},
            {"Sp_U:F2", stride(2, 2, top), true},
            {"U_O:F2", stride(1, 1, top), true},
            {"BU:F2-lattice", stride(2, 2, top), false},
            {"U:F2-lattice", stride(1, 2, top), true},
            {"BSp:F2-lattice", stride(4, 4, top), false},
            {"Sp:F2-lattice", stride(3, 4, top), true},
            {"O_U:F2-lattice", stride(2, 4, top), false},
            {"U_Sp:F2-lattice", stride(1, 4, top), true},
            {"U_O:F2-lattice", stride(1, 4, top), true},
            {"O:F2-lattice", stride(3, 4, top), true},
        };
        std::size_t f2_rings = 0;
        for (const auto& ring : reg.rings())
            if (ring->coeff() == CoeffRing::F2)
                ++f2_rings;
        s.check("every Z/2 ring is audited", f2_rings == std::size(audits),
                std::to_string(f2_rings) + " Z/2 rings registered");
        for (const auto& a : audits) {
            std::string name = "Poincare series of " + a.id;
            s.attempt(name, [&] {
                RingPtr ring = reg.ring(a.id);
                auto series = product_series(a.degrees, a.exterior, top);
                std::string detail;
                for (int d = 0; d <= top; ++d) {
                    int rank = static_cast<int>(ring->basis(d).size());
                    if (rank != series[static_cast<std::size_t>(d)] && detail.empty())
                        detail = "degree " + std::to_string(d) + ": rank " + std::to_string(rank) + ", expected " +
                                 std::to_string(series[static_cast<std::size_t>(d)]);
                }
                s.check(name, detail.empty(), detail);
            });
        }

        s.attempt("Sp/U rank", [&] {
            RingPtr spu = reg.ring_of(SpaceId::Sp_U, CoeffRing::Z);
            auto distinct = product_series(stride(1, 1, top), true, top);
            std::string detail;
            for (int d = 0; 2 * d <= top; ++d) {
                int rank = static_cast<int>(spu->basis(2 * d).size());
                if (rank != distinct[static_cast<std::size_t>(d)] && detail.empty())
                    detail = "degree " + std::to_string(2 * d) + ": rank " + std::to_string(rank);
            }
            s.check("Sp/U integral rank = partitions into distinct parts", detail.empty(), detail);
        });

        s.attempt("Sp/U mod 2", [&] {
            RingPtr spu = reg.ring_of(SpaceId::Sp_U, CoeffRing::Z);
            RingPtr f2 = reg.ring_of(SpaceId::Sp_U, CoeffRing::F2);
            std::string detail;
            for (int d = 0; d <= top && detail.empty(); d += 2) {
                std::set<std::string> images;
                for (const auto& m : spu->basis(d)) {
                    Element image = maps.mod2_reduce(Element::monomial(spu, m));
                    if (image.terms().size() == 1)
                        images.insert(to_text(image));
                }
                if (images.size() != f2->basis(d).size())
                    detail = "degree " + std::to_string(d);
            }
            s.check("Sp/U squarefree basis reduces onto the exterior basis", detail.empty(), detail);
        });

        s.attempt("Sp/U confluence", [&] {
            reg.ring_of(SpaceId::Sp_U, CoeffRing::Z)->check_confluence(std::min(40, reg.max_degree()));
            s.check("Sp/U rewriting is confluent", true);
        });

        for (SpaceId x : kAllSpaces)
            s.check(std::string("Q/Z ring of ") + std::string(space_name(x)),
                    reg.ring_of(x, CoeffRing::QmodZ)->same_as(*reg.qmodz_companion(*reg.mod2_target(x))));
        bool blank = false;
        try {
            reg.ring_of(SpaceId::O_U, CoeffRing::F2);
        } catch (const Error& e) {
            blank = e.code() == Errc::UnknownEntry;
        }
        s.check("blank table cells are unknown", blank);
    });
}

VerifyReport roundtrip_suite(const Maps& maps, std::uint64_t seed)
{
    return run("roundtrip", [&](Suite& s) {
        const Registry& reg = maps.registry();
        std::mt19937_64 rng(seed);
        for (const auto& ring : reg.rings()) {
            int text_failures = 0;
            int json_failures = 0;
            std::string detail;
            for (int i = 0; i < 500; ++i) {
                Element x = random_element(ring, rng, kAuditDegree);
                std::string text = to_text(x);
                try {
                    if (!(parse_element(text, ring, reg) == x)) {
                        ++text_failures;
                        detail = text;
                    }
                } catch (const std::exception& ex) {
                    ++text_failures;
                    detail = text + ": " + ex.what();
                }
                try {
                    std::string dumped = to_json(x).dump();
                    if (!(element_from_json(nlohmann::json::parse(dumped), reg) == x)) {
                        ++json_failures;
                        detail = dumped;
                    }
                } catch (const std::exception& ex) {
                    ++json_failures;
                    detail = ex.what();
                }
            }
            s.check("text round trip on " + ring->id(), text_failures == 0, detail);
            s.check("json round trip on " + ring->id(), json_failures == 0, detail);
        }
    });
}

}  // namespace

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const
{
    std::size_t n = 0;
    for (const auto& c : cases)
        n += c.passed ? 0 : 1;
    return n;
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"newton",   "revi1",  "mod2-newton", "final-answer",
                                                   "derivation", "torsion", "map-consistency", "omega",
                                                   "omega-signed", "registry", "roundtrip"};
    return names;
}

std::vector<VerifyReport> run_verify(std::string_view suite, const Maps& maps, std::uint64_t seed)
{
    if (suite == "all") {
        std::vector<VerifyReport> out;
        for (const auto& name : suite_names())
            out.push_back(run_verify(name, maps, seed).front());
        return out;
    }
    if (suite == "newton") return {newton_suite(maps)};
    if (suite == "revi1") return {revi1_suite(maps)};
    if (suite == "mod2-newton") return {mod2_newton_suite(maps)};
    if (suite == "final-answer") return {final_answer_suite(maps)};
    if (suite == "derivation") return {derivation_suite(maps)};
    if (suite == "torsion") return {torsion_suite(maps)};
    if (suite == "map-consistency") return {map_consistency_suite(maps, seed)};
    if (suite == "omega") return {omega_suite(maps, false)};
    if (suite == "omega-signed") return {omega_suite(maps, true)};
    if (suite == "registry") return {registry_suite(maps)};
    if (suite == "roundtrip") return {roundtrip_suite(maps, seed)};
    throw Error(Errc::UnknownEntry, "no verification suite '" + std::string(suite) + "'");
}

Element random_element(const RingPtr& ring, std::mt19937_64& rng, int max_degree)
{
    max_degree = std::min(max_degree, ring->max_degree());
    auto pick = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    std::optional<int> ch0 = ring->find("ch0");

    Terms terms;
    long count = pick(0, 4);
    for (long t = 0; t < count; ++t) {
        int d = static_cast<int>(pick(0, max_degree));
        auto basis = ring->basis(d);
        if (basis.empty())
            continue;
        Monomial m = basis[static_cast<std::size_t>(pick(0, static_cast<long>(basis.size()) - 1))];
        if (ch0 && pick(0, 2) == 0) {
            std::vector<Factor> factors = m.factors();
            factors.push_back({*ch0, static_cast<int>(pick(1, 2))});
            m = ring->make_monomial(std::move(factors));
        }
        Rational q;
        switch (ring->coeff()) {
        case CoeffRing::Z: q = pick(-9, 9); break;
        case CoeffRing::Q: q = Rational(pick(-9, 9), pick(1, 7)); break;
        case CoeffRing::F2: q = 1; break;
        case CoeffRing::ZHalf: q = Rational(pick(-9, 9), 1L << pick(0, 3)); break;
        case CoeffRing::QmodZ: q = Rational(pick(1, 11), pick(2, 12)); break;
        }
        q.canonicalize();
        terms[m] += q;
    }
    bool torsion = ring->torsion_policy() == TorsionPolicy::Formal2Torsion && pick(0, 1) == 1;
    return Element::from_terms(ring, terms, torsion);
}

std::string report_text(const VerifyReport& report, bool verbose)
{
    std::ostringstream out;
    out << (report.passed() ? "PASS " : "FAIL ") << report.suite << ": " << report.cases.size() - report.failures()
        << "/" << report.cases.size() << " cases";
    out.precision(3);
    out << std::fixed << " (" << report.seconds << " s)\n";
    for (const auto& c : report.cases)
        if (!c.passed || verbose)
            out << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail)
                << "\n";
    return out.str();
}

nlohmann::json report_json(const VerifyReport& report)
{
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : report.cases) {
        nlohmann::json j = {{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty())
            j["counterexample"] = c.detail;
        cases.push_back(j);
    }
    return {{"suite", report.suite}, {"passed", report.passed()}, {"seconds", report.seconds}, {"cases", cases}};
}

}  // namespace transgress
