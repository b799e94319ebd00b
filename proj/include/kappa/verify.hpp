#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kappa {

// One verification suite per library module, plus the aggregate.
enum class Suite { algebra, functions, calculus, trig, laplace, stat, all };

// The strict profile tightens closed-form checks tenfold; quadrature- and
// finite-difference-limited checks keep their default tolerances.
enum class Profile { defaults, strict };

struct CheckResult {
    std::string anchor;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Runs every identity check of the given suite with a deterministic seed.
// Results come back in a fixed order; a check that throws unexpectedly is
// reported as failed with an infinite residual.
std::vector<CheckResult> run_suite(Suite suite, std::uint64_t seed,
                                   Profile profile = Profile::defaults);

const char* suite_name(Suite suite);

// Parses "algebra", "functions", ... , "all". Returns false on unknown names.
bool parse_suite(const std::string& text, Suite& out);

} // namespace kappa
