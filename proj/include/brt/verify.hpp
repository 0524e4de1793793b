#pragma once

#include "brt/combinat.hpp"
#include "brt/scalar.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace brt {

struct VerifyOptions {
    ChainKind kind = ChainKind::Brauer;
    int n = 3;
    Scalar q{10, 3};
    std::uint64_t seed = 1;
    int trials = 20;
};

struct SuiteResult {
    std::string name;
    bool skipped = false;
    std::string summary;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// relations, factor-set, hom-counts, hom-ratio, roundtrip, bounds, semisimple
const std::vector<std::string>& suite_names();
// throws std::invalid_argument for an unknown suite
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

} // namespace brt
