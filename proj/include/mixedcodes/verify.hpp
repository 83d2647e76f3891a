#ifndef MIXEDCODES_VERIFY_HPP
#define MIXEDCODES_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mixedcodes {

// Self-check suites exercising the library's cross-cutting invariants on
// small fixed catalogs: every bound against the brute-force oracle, every
// identity against an independent computation route. The CLI's verify
// subcommand and the test binaries share this code.

struct CheckResult {
    std::string suite;
    std::string name;
    bool pass = false;
    std::string detail;  // one line: the values that decided the outcome
};

struct SuiteOptions {
    std::uint64_t max_space = 1296;  // skip dense-space checks beyond this
    double budget_seconds = 2.0;     // per oracle search
};

// Suite names accepted by run_suite, in canonical order: sphere, johnson,
// bounds, fourier, spectral, conjecture. The conjecture suite is report-only
// and never fails; it exists to surface the open monotonicity question's
// data without asserting it.
const std::vector<std::string>& suite_names();

// Runs one suite; throws ArgOutOfRange for an unknown name.
std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& options = {});

// All suites in canonical order.
std::vector<CheckResult> run_all_suites(const SuiteOptions& options = {});

} // namespace mixedcodes

#endif
