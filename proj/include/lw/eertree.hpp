#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "lw/lambda_word.hpp"

namespace lw {

// Palindromic tree over an unbounded integer alphabet. Edge maps are keyed by
// letter value, so the alphabet may grow without bound. Single writer; a
// finished tree may be inspected from any thread.
class Eertree {
public:
    Eertree();

    // Appends one letter and returns the number of new distinct palindromic
    // factors this created: 1 iff the longest palindromic suffix of the
    // extended word is uni-occurrent, 0 otherwise.
    int append_letter(long long letter);

    std::size_t size() const { return word_.size(); }
    const LetterWord& word() const { return word_; }

    // Number of distinct non-empty palindromic factors appended so far.
    long long distinct_palindromes() const {
        return static_cast<long long>(nodes_.size()) - 2;
    }

    long long longest_suffix_length() const { return nodes_[last_].length; }
    LetterWord longest_palindromic_suffix() const;
    bool last_append_created_node() const { return last_created_; }

    // One (end_position, length) sample per distinct palindromic factor,
    // taken at first occurrence.
    std::vector<std::pair<std::size_t, std::size_t>> palindrome_samples() const;

private:
    struct Node {
        long long length;
        int suffix_link;
        std::size_t sample_end;  // position of the first occurrence's last letter
        std::unordered_map<long long, int> edges;
    };

    int extend_suffix(int from, long long letter) const;

    std::vector<Node> nodes_;  // 0: length -1 root, 1: length 0 root
    LetterWord word_;
    int last_ = 1;
    bool last_created_ = false;
};

struct RichnessReport {
    bool rich = true;
    // 0-based position of the first prefix that lacks a uni-occurrent
    // palindromic suffix; absent when the word is rich.
    std::optional<std::size_t> first_violation;
};

RichnessReport is_rich(const LetterWord& word);

struct UpsReport {
    std::size_t prefix_length = 0;
    // The longest palindromic suffix when it occurs exactly once in the
    // prefix; absent otherwise (no shorter suffix can be uni-occurrent then).
    std::optional<LetterWord> ups;
    bool is_uni_occurrent = false;
    LetterWord longest_palindromic_suffix;
};

// Analysis of the k-prefix of word, 1 <= k <= |word|.
UpsReport ups_of_prefix(const LetterWord& word, std::size_t k);

// Maximum number of distinct letters over all palindromic factors.
long long palindrome_alphabet_bound(const LetterWord& word);

}  // namespace lw
