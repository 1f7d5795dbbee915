#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lw/lambda_word.hpp"
#include "lw/theta.hpp"

namespace lw {

// Value of the three-letter projection at a ladder fraction a/b. Seeds:
// gamma(1/0) = 0, gamma(1/1) = 1; thereafter each mediant takes
// 3 - (sum of the two fractions it is composed from), memoized along the
// ladder. Throws UnknownConvergent when a/b is not a ladder fraction.
long long gamma_of_convergent(const ThetaSpec& theta, long long a, long long b);

// gamma for ladder entries 0..n-1, indexed by depth (= lambda letter).
std::vector<long long> gamma_ladder(const ThetaSpec& theta, std::size_t n);

// Letterwise image of the Lambda word under the ladder projection;
// a word over {0,1,2}.
LetterWord gamma_word(const ThetaSpec& theta, std::size_t n);

struct PreservationCheck {
    bool preserved = true;
    // (position, length) of the first factor whose palindromicity differs
    // between the two words.
    std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

// Checks, over every factor of length <= max_factor_len of the length
// prefix_len prefixes, that the Lambda factor is a palindrome exactly when
// the Gamma factor at the same position is.
PreservationCheck check_palindrome_preservation(const ThetaSpec& theta,
                                                std::size_t prefix_len,
                                                std::size_t max_factor_len);

struct NonRichPrefix {
    std::size_t index = 0;  // 0-based position of the first prefix lacking a ups
    LetterWord offending_factor;
};

// Streams the Gamma word through the richness checker; absent when every
// prefix within the horizon is rich.
std::optional<NonRichPrefix> first_non_rich_prefix(const ThetaSpec& theta,
                                                   std::size_t horizon = 4096);

}  // namespace lw
