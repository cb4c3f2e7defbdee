#ifndef NCMOT_VERIFY_HPP
#define NCMOT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ncmot {

// Seeded property suites over the bundled fixture corpus. Each suite is
// deterministic in (fixture corpus, seed): reports are reproducible
// byte for byte.

struct SuiteReport {
    std::string suite;
    std::size_t assertions = 0;
    std::size_t failures = 0;
    // Deterministic notes: per-fixture summaries and, on failure, the
    // first counterexamples.
    std::vector<std::string> details;

    bool passed() const { return failures == 0; }
};

struct VerifyOptions {
    std::string fixture_dir = "fixtures";
    std::uint64_t seed = 1;
    std::size_t cutoff = 4;  // bar-complex truncation for trace agreement
};

// suite: ideal | largest | trace-agreement | construction-order | conservativity |
// nilpotent. Throws BadRequest for unknown names.
SuiteReport verify_suite(const std::string& suite, const VerifyOptions& opt);

// All suites in a fixed order.
std::vector<SuiteReport> verify_all(const VerifyOptions& opt);

}  // namespace ncmot

#endif
