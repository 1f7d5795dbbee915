#include <doctest.h>

#include <atomic>
#include <thread>
#include <vector>

#include "interval_oracle.hpp"
#include "lw/theta.hpp"

using namespace lw;

namespace {

ThetaSpec vartheta() { return ThetaSpec::log_ratio(2, 3); }

long long ipow(long long base, int exp) {
    long long r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace

TEST_CASE("partial quotients of the bundled constants") {
    CHECK(ThetaSpec::parse("cf:1,7,15,1,292").partial_quotients(5) ==
          std::vector<long long>{1, 7, 15, 1, 292});
    CHECK(ThetaSpec::golden_ratio().partial_quotients(6) ==
          std::vector<long long>{1, 1, 1, 1, 1, 1});
    CHECK(vartheta().partial_quotients(6) == std::vector<long long>{1, 1, 1, 2, 2, 3});
    CHECK(vartheta().partial_quotients(10) ==
          std::vector<long long>{1, 1, 1, 2, 2, 3, 1, 5, 2, 23});
}

TEST_CASE("explicit lists fail loudly when exhausted") {
    ThetaSpec spec = ThetaSpec::explicit_terms({1, 7, 15});
    CHECK(spec.partial_quotient(2) == 15);
    CHECK_THROWS_AS(spec.partial_quotient(3), PrecisionExhausted);
    CHECK_THROWS_AS(spec.partial_quotients(4), PrecisionExhausted);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(ThetaSpec::explicit_terms({}), InvalidThetaSpec);
    CHECK_THROWS_AS(ThetaSpec::explicit_terms({2, 1}), InvalidThetaSpec);  // theta >= 2
    CHECK_THROWS_AS(ThetaSpec::explicit_terms({1, 0, 3}), InvalidThetaSpec);
    CHECK_THROWS_AS(ThetaSpec::periodic({1}, {}), InvalidThetaSpec);
    CHECK_THROWS_AS(ThetaSpec::log_ratio(2, 4), InvalidThetaSpec);   // rational (power)
    CHECK_THROWS_AS(ThetaSpec::log_ratio(4, 8), InvalidThetaSpec);   // rational (common root)
    CHECK_THROWS_AS(ThetaSpec::log_ratio(2, 5), InvalidThetaSpec);   // theta > 2
    CHECK_THROWS_AS(ThetaSpec::log_ratio(3, 2), InvalidThetaSpec);   // theta < 1
    CHECK_THROWS_AS(ThetaSpec::parse("nonsense"), InvalidThetaSpec);
    CHECK_THROWS_AS(ThetaSpec::parse("log:2"), InvalidThetaSpec);
    CHECK_THROWS_AS(ThetaSpec::parse("cf:1,x"), InvalidThetaSpec);
}

TEST_CASE("log stream respects its bit budget") {
    ThetaSpec small = ThetaSpec::log_ratio(2, 3, 256);
    CHECK_THROWS_AS(small.partial_quotients(40), BudgetExceeded);
}

TEST_CASE("sign_of_form examples") {
    ThetaSpec t = vartheta();
    // power oracle: 3^2 > 2^3, so 2*theta - 3 > 0
    REQUIRE(ipow(3, 2) > ipow(2, 3));
    CHECK(sign_of_form(t, {-3, 2}) == Ordering::Greater);
    CHECK(sign_of_form(t, {0, 0}) == Ordering::Equal);
    // power oracle: 3^12 = 531441 > 2^19 = 524288, so 12*theta - 19 > 0
    REQUIRE(ipow(3, 12) > ipow(2, 19));
    CHECK(sign_of_form(t, {-19, 12}) == Ordering::Greater);
}

TEST_CASE("sign_of_form agrees with the decimal-bracket oracle") {
    using testing::DecimalBracket;
    struct Case {
        ThetaSpec spec;
        DecimalBracket oracle;
    };
    std::vector<Case> cases;
    cases.push_back({vartheta(), DecimalBracket(testing::kThetaLog23Digits)});
    cases.push_back({ThetaSpec::golden_ratio(), DecimalBracket(testing::kPhiDigits)});
    cases.push_back({ThetaSpec::parse("pi-2"), DecimalBracket(testing::kPiMinus2Digits)});

    for (auto& c : cases) {
        // every rational p/q with q <= 64 in (0, 3): sign of q*theta - p
        for (long long q = 1; q <= 64; ++q) {
            for (long long p = 1; p <= 3 * q; ++p) {
                int expected = c.oracle.sign_of_form(-p, q);
                REQUIRE(expected != 0);
                CHECK(c.oracle.expected(sign_of_form(c.spec, {-p, q})) == expected);
            }
        }
    }
}

TEST_CASE("antisymmetry of sign_of_form") {
    ThetaSpec t = vartheta();
    for (long long c1 = -8; c1 <= 8; ++c1) {
        for (long long c0 = -20; c0 <= 20; ++c0) {
            if (c0 == 0 && c1 == 0) continue;
            Ordering forward = sign_of_form(t, {c0, c1});
            Ordering backward = sign_of_form(t, {-c0, -c1});
            CHECK(forward == flip(backward));
            CHECK(forward != Ordering::Equal);
        }
    }
}

TEST_CASE("floor_theta examples and monotonicity") {
    ThetaSpec t = vartheta();
    CHECK(floor_theta(t, 1, FloorMode::TimesTheta) == 1);
    // power oracle: 2^3 < 3^2 and 3^2 < 2^4 bracket 2*theta in (3, 4)
    REQUIRE(ipow(2, 3) < ipow(3, 2));
    REQUIRE(ipow(3, 2) < ipow(2, 4));
    CHECK(floor_theta(t, 2, FloorMode::TimesTheta) == 3);
    // power oracle: 3^2 < 2^4 gives 2*theta < 4; 3^3 > 2^4 gives 3*theta > 4
    REQUIRE(ipow(3, 3) > ipow(2, 4));
    CHECK(floor_theta(t, 4, FloorMode::OverTheta) == 2);

    for (ThetaSpec spec : {vartheta(), ThetaSpec::golden_ratio(), ThetaSpec::parse("pi-2")}) {
        long long prev_minus = 0, prev_plus = 0;
        for (long long k = 1; k <= 64; ++k) {
            long long km = floor_theta(spec, k, FloorMode::TimesTheta) + k;
            long long kp = floor_theta(spec, k, FloorMode::OverTheta) + k;
            CHECK(km > prev_minus);
            CHECK(kp > prev_plus);
            prev_minus = km;
            prev_plus = kp;
        }
    }
}

TEST_CASE("floor_theta brackets via sign_of_form") {
    ThetaSpec t = ThetaSpec::golden_ratio();
    for (long long k = 1; k <= 40; ++k) {
        long long m = floor_theta(t, k, FloorMode::TimesTheta);
        CHECK(sign_of_form(t, {-m, k}) == Ordering::Greater);
        CHECK(sign_of_form(t, {-(m + 1), k}) == Ordering::Less);
    }
}

TEST_CASE("theta spec string round trips") {
    CHECK(ThetaSpec::parse("phi").partial_quotients(4) ==
          std::vector<long long>{1, 1, 1, 1});
    CHECK(ThetaSpec::parse("periodic:1/1").partial_quotients(4) ==
          std::vector<long long>{1, 1, 1, 1});
    CHECK(ThetaSpec::parse("periodic:/1").partial_quotients(3) ==
          std::vector<long long>{1, 1, 1});
    CHECK(ThetaSpec::parse("log:2,3").partial_quotients(4) ==
          std::vector<long long>{1, 1, 1, 2});
}

TEST_CASE("periodic respects the leading-term rule") {
    CHECK_THROWS_AS(ThetaSpec::parse("periodic:/2"), InvalidThetaSpec);
    CHECK(ThetaSpec::parse("periodic:1/2").partial_quotients(4) ==
          std::vector<long long>{1, 2, 2, 2});
}

TEST_CASE("pi-2 fixture matches the bundled prefix") {
    ThetaSpec pi2 = ThetaSpec::parse("pi-2");
    CHECK(pi2.partial_quotients(5) == std::vector<long long>{1, 7, 15, 1, 292});
    CHECK(pi2.name() == "pi-2");
    // the same file through the generic path
    ThetaSpec via_file = ThetaSpec::parse("cffile:" + data_directory() + "/pi_minus_2.cf");
    CHECK(via_file.partial_quotient(4) == 292);
    CHECK_THROWS_AS(ThetaSpec::parse("cffile:/nonexistent.cf"), InvalidThetaSpec);
}

TEST_CASE("log stream is safe to share across threads") {
    // power comparisons grow with the continuants, so terms past ~12 cost
    // more bits than the default budget allows
    ThetaSpec t = ThetaSpec::log_ratio(2, 3, 100'000'000);
    std::vector<long long> reference = t.partial_quotients(12);
    ThetaSpec shared = ThetaSpec::log_ratio(2, 3, 100'000'000);
    std::atomic<bool> ok{true};
    std::vector<std::thread> workers;
    for (int w = 0; w < 4; ++w) {
        workers.emplace_back([&shared, &reference, &ok, w] {
            for (std::size_t k = 0; k < reference.size(); ++k) {
                std::size_t idx = (k + static_cast<std::size_t>(w) * 5) % reference.size();
                if (shared.partial_quotient(idx) != reference[idx]) ok = false;
            }
        });
    }
    for (auto& worker : workers) worker.join();
    CHECK(ok.load());
}
