#pragma once

#include <cstddef>
#include <vector>

#include "lw/cf_chain.hpp"
#include "lw/theta.hpp"

namespace lw {

// A point i + j*theta of S(theta), i, j >= 0.
struct SElement {
    long long i = 0;
    long long j = 0;

    friend bool operator==(const SElement&, const SElement&) = default;
};

using LetterWord = std::vector<long long>;

// A coded difference |a - b*theta|. Side::Left means the difference is
// b*theta - a (the fraction a/b lies left of theta).
struct DifferenceCode {
    long long a = 0;
    long long b = 0;
    Side side = Side::Right;
    long long letter = 0;  // = stern_brocot_depth(a, b)

    // The difference as a signed linear form (always positive in value).
    LinearForm form() const {
        return side == Side::Left ? LinearForm{-a, b} : LinearForm{a, -b};
    }
};

// The gap to - from of two consecutive elements of S_theta, normalized and
// coded by its Stern-Brocot depth.
DifferenceCode difference_code(const SElement& from, const SElement& to);

// Letters of the consecutive gaps of an ascending run of S-elements.
LetterWord delta_letters(const std::vector<SElement>& elements);

// First n elements of S_theta in strictly ascending order, starting (0,0).
// A min-heap over rows of fixed j, rows activated lazily; every comparison
// goes through sign_of_form.
std::vector<SElement> generate_s(const ThetaSpec& theta, std::size_t n);

struct LambdaWord {
    LetterWord word;
    std::vector<DifferenceCode> codebook;  // indexed by letter
};

// First n letters of the Lambda word. Letters are assigned in first-occurrence
// order and cross-checked against stern_brocot_depth; disagreement raises
// ConsistencyError.
LambdaWord lambda_word(const ThetaSpec& theta, std::size_t n);

// Total number of occurrences of a letter in the whole infinite word: p*q of
// the partner convergent (the principal convergent that follows a principal,
// or precedes an intermediate).
long long letter_count(const ThetaSpec& theta, long long letter);

struct IntRange {
    long long lo = 0;  // inclusive
    long long hi = 0;  // exclusive

    long long size() const { return hi - lo; }
    bool contains(long long v) const { return lo <= v && v < hi; }
};

// The set of S-elements whose following gap is the given letter, as a product
// of half-open integer ranges in (i, j).
struct OccurrenceRectangle {
    IntRange a_range;
    IntRange b_range;

    bool contains(const SElement& s) const {
        return a_range.contains(s.i) && b_range.contains(s.j);
    }
    long long size() const { return a_range.size() * b_range.size(); }
    SElement max_element() const { return {a_range.hi - 1, b_range.hi - 1}; }
};

OccurrenceRectangle occurrence_rectangle(const ThetaSpec& theta, long long letter);

// Largest t with letter^t a factor: 1 for intermediates, and governed by the
// next partial quotient for principals.
long long max_run(const ThetaSpec& theta, long long letter);

// Whether the two-letter word uv occurs (in either order for u != v):
// true iff the coded fractions straddle theta with unit determinant, i.e.
// form a Hurwitz pair; for u = v, true iff max_run(u) >= 2.
bool is_two_letter_factor(const ThetaSpec& theta, long long u, long long v);

}  // namespace lw
