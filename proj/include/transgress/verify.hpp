#pragma once

#include "transgress/cli.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace transgress {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct VerifyCase {
    std::string name;
    bool passed = false;
    std::string detail;  // counterexample or note
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCase> cases;
    double seconds = 0;

    bool passed() const;
    std::size_t failures() const;
};

/// Named suites in the order `all` runs them.
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". Unknown names throw UnknownEntry.
std::vector<VerifyReport> run_verify(std::string_view suite, const Maps& maps, std::uint64_t seed = kDefaultSeed);

/// Random element of total degree <= max_degree with coefficients valid in `ring`.
Element random_element(const RingPtr& ring, std::mt19937_64& rng, int max_degree);

std::string report_text(const VerifyReport& report, bool verbose);
nlohmann::json report_json(const VerifyReport& report);

}  // namespace transgress
