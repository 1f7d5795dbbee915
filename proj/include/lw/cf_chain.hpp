#pragma once

#include <cstddef>
#include <vector>

#include "lw/theta.hpp"

namespace lw {

enum class Side { Left, Right };

enum class ConvergentKind { Formal, Principal, Intermediate };

struct Fraction {
    long long num = 0;
    long long den = 0;

    friend bool operator==(const Fraction&, const Fraction&) = default;
};

// One rung of the convergent ladder. depth is the Stern-Brocot row of a/b
// and doubles as the ladder index: entry d of the ladder has depth d.
struct Convergent {
    long long a = 0;  // numerator
    long long b = 0;  // denominator
    ConvergentKind kind = ConvergentKind::Formal;
    long long stage = -1;  // continued-fraction stage k; -1 for the formal 1/0
    long long step = 0;    // position t within the stage, 1 <= t <= t_k
    Side side = Side::Right;
    std::size_t depth = 0;

    Fraction fraction() const { return {a, b}; }
};

// A Farey pair straddling theta: left < theta < right with
// left.den*right.num - left.num*right.den = 1.
struct HurwitzPair {
    Fraction left;
    Fraction right;
};

// The first n convergents (principal and intermediate) in order of strictly
// decreasing |a - b*theta|, starting 1/0, 1/1. Produced by the Stern-Brocot
// descent toward theta; each emitted fraction is checked against
// sign_of_form, so a stage/side mismatch aborts with ConsistencyError.
std::vector<Convergent> convergent_ladder(const ThetaSpec& theta, std::size_t n);

// Sum of the partial quotients of a/b written with leading term 1
// (0 for the formal 1/0); equals the Stern-Brocot row of a/b.
// Requires gcd(a,b) = 1 and (a,b) = (1,0) or 1 <= a/b <= 2.
long long stern_brocot_depth(long long a, long long b);

// Principal convergent c_k (c_{-1} = 1/0).
Fraction principal_convergent(const ThetaSpec& theta, long long k);

// First n best left-right approximation pairs, refined by mediants.
std::vector<HurwitzPair> hurwitz_chain(const ThetaSpec& theta, std::size_t n);

enum class ApproxSide { TwoSided, Left, Right };

// Brute-force oracle: p/q beats every fraction with denominator q' <= q on
// the requested side. Exhaustive over denominators, so independent of the
// ladder construction.
bool is_best_approx_second_kind(const ThetaSpec& theta, long long p, long long q,
                                ApproxSide side);

}  // namespace lw
