#pragma once

#include <cstddef>
#include <vector>

#include "lw/lambda_word.hpp"
#include "lw/theta.hpp"

namespace lw {

struct BeattyPair {
    std::vector<long long> k_minus;  // floor(k*theta) + k
    std::vector<long long> k_plus;   // floor(k/theta) + k
};

// First n terms of each indexing sequence; together they partition the
// positive integers.
BeattyPair beatty_sequences(const ThetaSpec& theta, std::size_t n);

// True iff for every element c the complement (first + last - c) is also in
// the list; equivalently the difference word is a palindrome. The list must
// be strictly ascending (NotSorted otherwise).
bool is_complement_sequence(const ThetaSpec& theta, const std::vector<SElement>& ascending);

enum class WindowKind { Minus, Plus };

// The contiguous run of S_theta pinched between an integer and the matching
// theta-multiple; complements are taken with respect to bound_a + bound_b*theta.
struct NuclearWindow {
    long long K = 0;
    WindowKind kind = WindowKind::Minus;
    long long k = 0;  // Beatty index with K = floor(k*theta)+k or floor(k/theta)+k
    std::vector<SElement> elements;
    long long bound_a = 0;
    long long bound_b = 0;

    LetterWord delta() const { return delta_letters(elements); }
};

// Classifies K as Minus or Plus (exactly one, every time) and extracts the
// window. The complement property is asserted at runtime.
NuclearWindow nuclear_window(const ThetaSpec& theta, long long K);

// The nuclear window extended symmetrically: tail runs to the next window's
// maximum, head mirrors it by complementation.
struct MaximalWindow {
    long long K = 0;
    NuclearWindow core;
    std::vector<SElement> head;  // complements of tail, ascending
    std::vector<SElement> tail;  // from max(core) up to (excl.) the next window's max
    std::vector<SElement> elements;  // head, core, tail merged ascending

    LetterWord delta() const { return delta_letters(elements); }
};

MaximalWindow maximal_window(const ThetaSpec& theta, long long K);

// The symmetric window of s_n inside its maximal sequence: every s_n > 0
// lies in exactly one tail run, and the window from the complement of s_n up
// to s_n has a palindromic difference word equal to the uni-occurrent
// palindromic suffix of the length-n prefix of the Lambda word.
struct UpsWindow {
    long long K = 0;
    std::vector<SElement> window;
    LetterWord delta;
};

UpsWindow ups_window(const ThetaSpec& theta, std::size_t n);

}  // namespace lw
