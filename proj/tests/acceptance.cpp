// Acceptance run: one line per criterion, exact comparisons throughout.

#include <transgress/verify.hpp>

#include <cstdio>
#include <iostream>

using namespace transgress;

namespace {

struct Criterion {
    int number;
    const char* title;
    const char* suite;
    double budget_seconds;
};

const Criterion kCriteria[] = {
    {1, "final-answer reproduction", "final-answer", 10},
    {2, "Newton oracle", "newton", 30},
    {3, "ch congruence", "revi1", 0},
    {4, "mod-2 Newton simplification", "mod2-newton", 0},
    {5, "2-torsion of the invariant", "torsion", 0},
    {6, "map table / loop consistency", "map-consistency", 0},
    {7, "Omega closed form", "omega", 0},
    {8, "registry audits", "registry", 0},
    {9, "parser and JSON round trip", "roundtrip", 0},
};

}  // namespace

int main()
{
    const Maps& maps = Maps::standard();
    int failed = 0;
    for (const auto& c : kCriteria) {
        VerifyReport r = run_verify(c.suite, maps).front();
        bool in_time = c.budget_seconds == 0 || r.seconds < c.budget_seconds;
        bool ok = r.passed() && in_time && !r.cases.empty();
        failed += ok ? 0 : 1;
        std::printf("criterion %d (%s): %s [%zu/%zu cases, %.3f s]\n", c.number, c.title, ok ? "PASS" : "FAIL",
                    r.cases.size() - r.failures(), r.cases.size(), r.seconds);
        if (!in_time)
            std::printf("  over the %.0f s budget\n", c.budget_seconds);
        for (const auto& kase : r.cases)
            if (!kase.passed) {
                std::printf("  first failure: %s: %s\n", kase.name.c_str(), kase.detail.c_str());
                break;
            }
    }
    VerifyReport signed_omega = run_verify("omega-signed", maps).front();
    std::printf("info: Omega closed form with sign (-1)^(t(t+1)/2), t = floor(n/2): %s [%zu/%zu cases]\n",
                signed_omega.passed() ? "PASS" : "FAIL", signed_omega.cases.size() - signed_omega.failures(),
                signed_omega.cases.size());
    std::printf("%d of %zu criteria failed\n", failed, std::size(kCriteria));
    return failed == 0 ? 0 : 1;
}
