#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "lw/verify.hpp"

using namespace lw;

// The structure theorems hold for every irrational theta in (1,2), not just
// the bundled constants; sample the space of periodic continued fractions.
TEST_CASE("verification suite passes on random periodic continued fractions") {
    std::mt19937 rng(20130302);
    std::uniform_int_distribution<long long> term(1, 4);
    std::uniform_int_distribution<int> pre_len(0, 2), per_len(1, 3);

    for (int trial = 0; trial < 6; ++trial) {
        std::vector<long long> preperiod{1};
        for (int m = pre_len(rng); m > 0; --m) preperiod.push_back(term(rng));
        std::vector<long long> period;
        for (int m = per_len(rng); m > 0; --m) period.push_back(term(rng));
        ThetaSpec theta = ThetaSpec::periodic(preperiod, period);

        std::string label = "periodic:";
        for (long long t : preperiod) label += std::to_string(t) + ",";
        label += "/";
        for (long long t : period) label += std::to_string(t) + ",";

        auto results = run_verification(theta, 100);
        for (const auto& r : results) {
            INFO(label, " -> ", r.name, ": ", r.detail);
            CHECK(r.passed);
        }
    }
}
