#include "lw/gamma_word.hpp"

#include <algorithm>
#include <string>

#include "lw/eertree.hpp"

namespace lw {

std::vector<long long> gamma_ladder(const ThetaSpec& theta, std::size_t n) {
    if (n < 1) throw OutOfRange("gamma_ladder wants n >= 1");
    std::vector<long long> out;
    out.reserve(n);
    out.push_back(0);                   // 1/0
    if (out.size() < n) out.push_back(1);  // 1/1
    long long before_prev = 0;  // value at the principal two stages back
    long long prev = 1;         // value at the previous principal
    for (long long stage = 1; out.size() < n; ++stage) {
        long long tk = theta.partial_quotient(static_cast<std::size_t>(stage));
        long long current = before_prev;
        for (long long t = 1; t <= tk && out.size() < n; ++t) {
            current = 3 - prev - current;
            out.push_back(current);
        }
        before_prev = prev;
        prev = current;
    }
    return out;
}

long long gamma_of_convergent(const ThetaSpec& theta, long long a, long long b) {
    // Denominators along the ladder never decrease, so the scan can stop as
    // soon as both coordinates are overtaken.
    for (std::size_t len = 8;; len *= 2) {
        auto ladder = convergent_ladder(theta, len);
        for (const Convergent& c : ladder) {
            if (c.a == a && c.b == b)
                return gamma_ladder(theta, c.depth + 1)[c.depth];
        }
        const Convergent& back = ladder.back();
        if (back.a > a && back.b > b)
            throw UnknownConvergent(std::to_string(a) + "/" + std::to_string(b) +
                                    " is not a convergent of " + theta.name());
    }
}

LetterWord gamma_word(const ThetaSpec& theta, std::size_t n) {
    LambdaWord lambda = lambda_word(theta, n);
    long long top = *std::max_element(lambda.word.begin(), lambda.word.end());
    auto gamma = gamma_ladder(theta, static_cast<std::size_t>(top) + 1);
    LetterWord out;
    out.reserve(n);
    for (long long letter : lambda.word) out.push_back(gamma[static_cast<std::size_t>(letter)]);
    return out;
}

namespace {

bool palindrome_at(const LetterWord& w, std::size_t pos, std::size_t len) {
    for (std::size_t d = 0; d < len / 2; ++d)
        if (w[pos + d] != w[pos + len - 1 - d]) return false;
    return true;
}

}  // namespace

PreservationCheck check_palindrome_preservation(const ThetaSpec& theta,
                                                std::size_t prefix_len,
                                                std::size_t max_factor_len) {
    if (max_factor_len > prefix_len)
        throw OutOfRange("max_factor_len must not exceed prefix_len");
    LetterWord lambda = lambda_word(theta, prefix_len).word;
    LetterWord gamma = gamma_word(theta, prefix_len);
    for (std::size_t len = 2; len <= max_factor_len; ++len) {
        for (std::size_t pos = 0; pos + len <= prefix_len; ++pos) {
            if (palindrome_at(lambda, pos, len) != palindrome_at(gamma, pos, len))
                return {false, std::make_pair(pos, len)};
        }
    }
    return {true, std::nullopt};
}

std::optional<NonRichPrefix> first_non_rich_prefix(const ThetaSpec& theta,
                                                   std::size_t horizon) {
    if (horizon < 1) throw OutOfRange("first_non_rich_prefix wants a positive horizon");
    LetterWord gamma = gamma_word(theta, horizon);
    Eertree tree;
    for (std::size_t m = 0; m < gamma.size(); ++m) {
        if (tree.append_letter(gamma[m]) == 0)
            return NonRichPrefix{m, LetterWord(gamma.begin(),
                                               gamma.begin() + static_cast<long long>(m) + 1)};
    }
    return std::nullopt;
}

}  // namespace lw
