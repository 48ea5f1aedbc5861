// One line per acceptance criterion; exits nonzero if any fails.
#include <hamcensus/fixtures.hpp>
#include <hamcensus/verify.hpp>

#include <cstdio>
#include <exception>
#include <map>

namespace
{
    // Bound arithmetic compares floating point values; every other criterion is exact.
    auto tolerance(int id) -> const char * { return id == 10 ? "1 ulp" : "exact"; }
}

int main()
{
    hamcensus::VerifyOptions opts;
    opts.level = hamcensus::VerifyLevel::full;
    opts.fixtures = HAMCENSUS_TEST_FIXTURE_DIR;
    opts.on_result = [](const hamcensus::CriterionResult & r)
    {
        std::printf("%s criterion %d %s [tolerance %s, %.1f s of %.0f s]: %s\n", r.passed ? "PASS" : "FAIL", r.id,
            r.title.c_str(), tolerance(r.id), r.seconds, r.budget_seconds, r.detail.c_str());
        std::fflush(stdout);
    };
    try {
        auto results = hamcensus::verify_paper(opts);
        int failed = 0;
        for (auto & r : results)
            failed += ! r.passed;
        std::printf("%d of %zu criteria passed\n", int(results.size()) - failed, results.size());
        return failed == 0 ? 0 : 1;
    }
    catch (const std::exception & e) {
        std::printf("FAIL acceptance could not run: %s\n", e.what());
        return 1;
    }
}
