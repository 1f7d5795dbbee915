#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "lw/errors.hpp"

namespace lw {

enum class Ordering { Less, Equal, Greater };

inline Ordering flip(Ordering o) {
    if (o == Ordering::Less) return Ordering::Greater;
    if (o == Ordering::Greater) return Ordering::Less;
    return Ordering::Equal;
}

// Integer linear form c0 + c1*theta. Equality is componentwise; the value is
// irrational whenever c1 != 0, so componentwise equality is value equality.
struct LinearForm {
    long long c0 = 0;
    long long c1 = 0;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    LinearForm operator-() const { return {-c0, -c1}; }
    friend LinearForm operator+(const LinearForm& a, const LinearForm& b) {
        return {a.c0 + b.c0, a.c1 + b.c1};
    }
    friend LinearForm operator-(const LinearForm& a, const LinearForm& b) {
        return {a.c0 - b.c0, a.c1 - b.c1};
    }
};

namespace detail {
class PartialQuotientSource;
}

// An irrational theta in (1,2), held exactly as its continued fraction
// [1; t1, t2, ...]. Theta is never stored as a float; every question about it
// is answered from the partial-quotient stream. Instances are immutable and
// cheap to copy; streamed sources memoize behind an internal lock, so shared
// read-only use across threads is safe.
class ThetaSpec {
public:
    static constexpr long long default_bit_budget = 1'000'000;

    // Preperiod then infinitely repeated period, e.g. ({}, {1}) for the
    // golden ratio. The period must be non-empty.
    static ThetaSpec periodic(std::vector<long long> preperiod, std::vector<long long> period);

    // A finite list of known terms. Requests past the end raise
    // PrecisionExhausted rather than guessing.
    static ThetaSpec explicit_terms(std::vector<long long> terms);

    // theta = log_base(argument), streamed by big-integer power comparison.
    // Requires base < argument < base^2 and that the logarithm is irrational.
    static ThetaSpec log_ratio(long long base, long long argument,
                               long long bit_budget = default_bit_budget);

    static ThetaSpec golden_ratio();

    // Spec-string syntax: "phi", "pi-2", "log:2,3", "cf:1,7,15,1,292",
    // "periodic:1/1" (preperiod/period), "cffile:PATH".
    static ThetaSpec parse(std::string_view text);

    // One integer per line, '#' comments and blank lines allowed.
    static ThetaSpec from_fixture_file(const std::string& path, std::string name = "");

    long long partial_quotient(std::size_t k) const;
    std::vector<long long> partial_quotients(std::size_t n) const;

    const std::string& name() const { return name_; }

private:
    ThetaSpec(std::shared_ptr<const detail::PartialQuotientSource> source, std::string name);

    std::shared_ptr<const detail::PartialQuotientSource> source_;
    std::string name_;
};

// Directory the bundled data files are resolved from: $LW_DATA_DIR if set,
// otherwise the build-time default.
std::string data_directory();

// Exact ordering of p/q (p >= 0, q >= 1) against theta by termwise
// continued-fraction comparison. Never returns Equal for the bundled
// irrational sources.
Ordering compare_rational_to_theta(const ThetaSpec& theta, long long p, long long q);

// Exact sign of c0 + c1*theta relative to zero.
Ordering sign_of_form(const ThetaSpec& theta, const LinearForm& f);

enum class FloorMode { TimesTheta, OverTheta };

// floor(k*theta) or floor(k/theta) for k >= 1, located by bisection over
// exact sign queries.
long long floor_theta(const ThetaSpec& theta, long long k, FloorMode mode);

}  // namespace lw
