#include "lw/eertree.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace lw {

Eertree::Eertree() {
    nodes_.push_back({-1, 0, 0, {}});  // imaginary root, length -1
    nodes_.push_back({0, 0, 0, {}});   // empty-word root
    last_ = 1;
}

// Walks suffix links from `from` until the palindrome can be extended by
// `letter` on both sides.
int Eertree::extend_suffix(int from, long long letter) const {
    const long long pos = static_cast<long long>(word_.size()) - 1;
    int x = from;
    while (true) {
        long long mirror = pos - 1 - nodes_[x].length;
        if (mirror >= 0 && word_[static_cast<std::size_t>(mirror)] == letter) return x;
        x = nodes_[x].suffix_link;
    }
}

int Eertree::append_letter(long long letter) {
    word_.push_back(letter);
    int x = extend_suffix(last_, letter);
    auto found = nodes_[x].edges.find(letter);
    if (found != nodes_[x].edges.end()) {
        last_ = found->second;
        last_created_ = false;
        return 0;
    }
    Node node;
    node.length = nodes_[x].length + 2;
    node.sample_end = word_.size() - 1;
    if (node.length == 1) {
        node.suffix_link = 1;
    } else {
        int y = extend_suffix(nodes_[x].suffix_link, letter);
        node.suffix_link = nodes_[y].edges.at(letter);
    }
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(std::move(node));
    nodes_[x].edges.emplace(letter, id);
    last_ = id;
    last_created_ = true;
    return 1;
}

LetterWord Eertree::longest_palindromic_suffix() const {
    long long len = nodes_[last_].length;
    if (len <= 0) return {};
    return LetterWord(word_.end() - len, word_.end());
}

std::vector<std::pair<std::size_t, std::size_t>> Eertree::palindrome_samples() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(nodes_.size() - 2);
    for (std::size_t id = 2; id < nodes_.size(); ++id)
        out.emplace_back(nodes_[id].sample_end, static_cast<std::size_t>(nodes_[id].length));
    return out;
}

RichnessReport is_rich(const LetterWord& word) {
    Eertree tree;
    for (std::size_t m = 0; m < word.size(); ++m)
        if (tree.append_letter(word[m]) == 0) return {false, m};
    return {true, std::nullopt};
}

UpsReport ups_of_prefix(const LetterWord& word, std::size_t k) {
    if (k < 1 || k > word.size())
        throw OutOfRange("ups_of_prefix wants 1 <= k <= |word|, got k = " + std::to_string(k));
    Eertree tree;
    for (std::size_t m = 0; m < k; ++m) tree.append_letter(word[m]);
    UpsReport report;
    report.prefix_length = k;
    report.longest_palindromic_suffix = tree.longest_palindromic_suffix();
    report.is_uni_occurrent = tree.last_append_created_node();
    // If the longest palindromic suffix repeats, every shorter palindromic
    // suffix repeats too, so there is no ups at all.
    if (report.is_uni_occurrent) report.ups = report.longest_palindromic_suffix;
    return report;
}

long long palindrome_alphabet_bound(const LetterWord& word) {
    Eertree tree;
    for (long long letter : word) tree.append_letter(letter);
    long long best = 0;
    for (auto [end, len] : tree.palindrome_samples()) {
        std::set<long long> alphabet(word.begin() + static_cast<long long>(end - len + 1),
                                     word.begin() + static_cast<long long>(end + 1));
        best = std::max<long long>(best, static_cast<long long>(alphabet.size()));
    }
    return best;
}

}  // namespace lw
