#pragma once

#include "qtoda/rational.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qtoda {

struct RunConfig {
    enum class Command { FA, FB, BranchCoeffs, Verify };
    enum class Format { Json, Csv };

    Command command = Command::Verify;
    int n = 2;
    long order = 4;
    std::optional<Rational> q;                // drawn from seed when absent
    std::optional<std::vector<Rational>> s;   // drawn from seed when absent
    std::uint64_t seed = 0;
    int points = 3;
    Format format = Format::Json;
    std::vector<std::string> checks; // verify only; empty = all applicable
};

// Executes one command, writing the artifact to `out` and diagnostics to
// `err`. Output is byte-identical for identical configurations.
// Exit codes: 0 success (verify: all checks pass), 1 verification failure,
// 2 genericity failure (bad explicit point, or retries exhausted),
// 3 invalid configuration.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace qtoda
