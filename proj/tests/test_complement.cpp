#include <doctest.h>

#include <algorithm>
#include <set>

#include "lw/complement.hpp"
#include "lw/eertree.hpp"

using namespace lw;

namespace {

ThetaSpec vartheta() { return ThetaSpec::log_ratio(2, 3); }

bool palindromic(const LetterWord& w) {
    return std::equal(w.begin(), w.begin() + static_cast<long long>(w.size() / 2), w.rbegin());
}

}  // namespace

TEST_CASE("beatty index sequences") {
    BeattyPair t = beatty_sequences(vartheta(), 4);
    CHECK(t.k_minus == std::vector<long long>{2, 5, 7, 10});
    CHECK(t.k_plus == std::vector<long long>{1, 3, 4, 6});

    BeattyPair p = beatty_sequences(ThetaSpec::golden_ratio(), 3);
    CHECK(p.k_minus == std::vector<long long>{2, 5, 7});
    CHECK(p.k_plus == std::vector<long long>{1, 3, 4});

    CHECK(beatty_sequences(ThetaSpec::parse("pi-2"), 1).k_plus.front() == 1);
}

TEST_CASE("beatty families partition the positive integers") {
    for (ThetaSpec theta : {vartheta(), ThetaSpec::golden_ratio(), ThetaSpec::parse("pi-2")}) {
        BeattyPair pair = beatty_sequences(theta, 700);
        std::set<long long> seen;
        auto absorb = [&](const std::vector<long long>& seq) {
            for (long long v : seq) {
                if (v > 1000) break;
                CHECK(seen.insert(v).second);
            }
        };
        absorb(pair.k_minus);
        absorb(pair.k_plus);
        for (long long v = 1; v <= 1000; ++v) CHECK(seen.count(v) == 1);
    }
}

TEST_CASE("complement-sequence predicate") {
    ThetaSpec t = vartheta();
    CHECK(is_complement_sequence(t, {{1, 0}, {0, 1}}));
    CHECK_FALSE(is_complement_sequence(t, {{1, 0}, {2, 0}, {0, 2}}));
    CHECK(is_complement_sequence(t, {{3, 0}, {0, 2}}));
    CHECK(is_complement_sequence(t, {}));
    CHECK_THROWS_AS(is_complement_sequence(t, {{0, 1}, {1, 0}}), NotSorted);
}

TEST_CASE("nuclear windows classify and extract") {
    ThetaSpec t = vartheta();

    NuclearWindow w2 = nuclear_window(t, 2);
    CHECK(w2.kind == WindowKind::Minus);
    CHECK(w2.k == 1);
    CHECK(w2.elements == std::vector<SElement>{{1, 0}, {0, 1}});
    CHECK(w2.delta() == LetterWord{1});
    CHECK(w2.bound_a == 1);
    CHECK(w2.bound_b == 1);

    NuclearWindow w5 = nuclear_window(t, 5);
    CHECK(w5.kind == WindowKind::Minus);
    CHECK(w5.k == 2);
    CHECK(w5.elements == std::vector<SElement>{{3, 0}, {0, 2}});
    CHECK(w5.delta() == LetterWord{3});

    NuclearWindow w3 = nuclear_window(t, 3);
    CHECK(w3.kind == WindowKind::Plus);
    CHECK(w3.k == 2);
    CHECK(w3.elements == std::vector<SElement>{{0, 1}, {2, 0}});
    CHECK(w3.delta() == LetterWord{2});

    CHECK_THROWS_AS(nuclear_window(t, 0), OutOfRange);
}

TEST_CASE("maximal windows extend symmetrically") {
    ThetaSpec t = vartheta();

    MaximalWindow m5 = maximal_window(t, 5);
    CHECK(m5.head == std::vector<SElement>{{1, 1}, {3, 0}});
    CHECK(m5.tail == std::vector<SElement>{{0, 2}, {2, 1}});
    CHECK(m5.elements == std::vector<SElement>{{1, 1}, {3, 0}, {0, 2}, {2, 1}});
    CHECK(m5.delta() == LetterWord{2, 3, 2});

    MaximalWindow m2 = maximal_window(t, 2);
    CHECK(m2.elements == std::vector<SElement>{{1, 0}, {0, 1}});
    CHECK(m2.delta() == LetterWord{1});

    for (long long K = 1; K <= 50; ++K) {
        MaximalWindow w = maximal_window(t, K);
        CHECK(w.head.size() == w.tail.size());
        CHECK(palindromic(w.delta()));
        CHECK(palindromic(w.core.delta()));
    }
}

TEST_CASE("windows stay complement-closed for every bundled theta") {
    for (ThetaSpec theta : {vartheta(), ThetaSpec::golden_ratio(), ThetaSpec::parse("pi-2")}) {
        for (long long K = 1; K <= 50; ++K) {
            // construction asserts closure and palindromicity internally
            NuclearWindow n = nuclear_window(theta, K);
            CHECK(n.bound_a + n.bound_b == K);
            CHECK(is_complement_sequence(theta, n.elements));
            MaximalWindow m = maximal_window(theta, K);
            CHECK(is_complement_sequence(theta, m.elements));
        }
    }
}

TEST_CASE("ups windows reproduce the underlined suffixes") {
    ThetaSpec t = vartheta();
    CHECK(ups_window(t, 4).delta == LetterWord{1, 2, 1});
    CHECK(ups_window(t, 7).delta == LetterWord{2, 3, 2});
    CHECK(ups_window(t, 12).delta == LetterWord{4});
    CHECK_THROWS_AS(ups_window(t, 0), OutOfRange);
}

TEST_CASE("window construction and palindromic tree agree everywhere") {
    for (ThetaSpec theta : {vartheta(), ThetaSpec::golden_ratio(), ThetaSpec::parse("pi-2")}) {
        LetterWord word = lambda_word(theta, 120).word;
        for (std::size_t n = 1; n <= 120; ++n) {
            UpsWindow window = ups_window(theta, n);
            UpsReport report = ups_of_prefix(word, n);
            REQUIRE(report.ups.has_value());
            CHECK(window.delta == *report.ups);
        }
    }
}
