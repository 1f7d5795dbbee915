#include <doctest.h>

#include <vector>

#include "lw/bfile.hpp"
#include "lw/interspersion.hpp"

using namespace lw;

namespace {

ThetaSpec vartheta() { return ThetaSpec::log_ratio(2, 3); }

const std::vector<std::vector<long long>> kArray55 = {
    {0, 1, 3, 5, 8, 12, 16, 21, 27, 33, 40, 47},
    {2, 4, 7, 10, 14, 19, 24, 30, 37, 44, 52},
    {6, 9, 13, 17, 22, 28, 34, 41, 49},
    {11, 15, 20, 25, 31, 38, 45, 53},
    {18, 23, 29, 35, 42, 50},
    {26, 32, 39, 46, 54},
    {36, 43, 51},
    {48},
};

}  // namespace

TEST_CASE("signature sequences") {
    CHECK(signature_sequence(vartheta(), 8, SignatureKind::IOfTheta) ==
          std::vector<long long>{0, 1, 0, 2, 1, 3, 0, 2});
    CHECK(signature_sequence(vartheta(), 8, SignatureKind::JOfThetaInverse) ==
          std::vector<long long>{0, 0, 1, 0, 1, 0, 2, 1});
    CHECK(signature_sequence(ThetaSpec::golden_ratio(), 2, SignatureKind::IOfTheta) ==
          std::vector<long long>{0, 1});
}

TEST_CASE("occurrence-indexed array rows") {
    InterspersionArray one = interspersion_array(vartheta(), 1, 60);
    CHECK(one.rows[0] == std::vector<long long>{0, 1, 3, 5, 8, 12, 16, 21, 27, 33, 40, 47, 55});

    InterspersionArray two = interspersion_array(vartheta(), 2, 60);
    CHECK(two.rows[1] == std::vector<long long>{2, 4, 7, 10, 14, 19, 24, 30, 37, 44, 52});

    InterspersionArray eight = interspersion_array(vartheta(), 8, 60);
    CHECK(eight.rows[7] == std::vector<long long>{48, 56});

    // the 55-element truncation is exactly the reference table
    InterspersionArray array = interspersion_array(vartheta(), 8, 55);
    CHECK(array.rows == kArray55);

    CHECK_THROWS_AS(interspersion_array(vartheta(), 9, 20), InsufficientBudget);
}

TEST_CASE("axiom checks on the materialized portion") {
    InterspersionArray reference{kArray55};
    CHECK(verify_axioms(reference).ok);

    InterspersionArray single{{{0, 1, 2, 3, 4}}};
    CHECK(verify_axioms(single).ok);

    // interleaving violated inside the materialized region (axioms 1-3 hold)
    InterspersionArray bad{{{0, 2, 3}, {1, 4}}};
    AxiomCheck check = verify_axioms(bad);
    CHECK_FALSE(check.ok);
    REQUIRE(check.first_violation.has_value());
    CHECK(check.first_violation->axiom == 4);

    // extendable truncation: nothing materialized disproves it
    InterspersionArray truncated{{{0, 2}, {1, 3}}};
    CHECK(verify_axioms(truncated).ok);

    InterspersionArray duplicated{{{0, 2}, {2, 5}}};
    AxiomCheck dup = verify_axioms(duplicated);
    CHECK_FALSE(dup.ok);
    CHECK(dup.first_violation->axiom == 1);

    InterspersionArray decreasing{{{3, 1}}};
    CHECK(verify_axioms(decreasing).first_violation->axiom == 2);

    InterspersionArray bad_column{{{5, 8}, {2, 9}}};
    CHECK(verify_axioms(bad_column).first_violation->axiom == 3);
}

TEST_CASE("generated arrays satisfy the axioms at scale") {
    for (ThetaSpec theta : {vartheta(), ThetaSpec::golden_ratio(), ThetaSpec::parse("pi-2")}) {
        InterspersionArray array = interspersion_array(theta, 8, 500);
        CHECK(verify_axioms(array).ok);
        InterspersionArray other = interspersion_array(theta, 8, 500, SignatureKind::IOfTheta);
        CHECK(verify_axioms(other).ok);
    }
}

TEST_CASE("swapping the signature transposes the array") {
    InterspersionArray rows = interspersion_array(vartheta(), 10, 400);
    InterspersionArray cols = interspersion_array(vartheta(), 24, 400, SignatureKind::IOfTheta);
    for (std::size_t r = 0; r < rows.rows.size(); ++r)
        for (std::size_t c = 0; c < rows.rows[r].size(); ++c)
            if (c < cols.rows.size() && r < cols.rows[c].size())
                CHECK(rows.rows[r][c] == cols.rows[c][r]);
}

TEST_CASE("vector path codes the word") {
    VectorPath path = vector_path(vartheta(), 9);
    const std::vector<std::pair<long long, long long>> expected = {
        {1, 0}, {-1, 1}, {2, -1}, {-1, 1}, {2, -1}, {-3, 2}, {2, -1}, {2, -1}};
    CHECK(path.vectors == expected);
    CHECK(path.word == LetterWord{0, 1, 2, 1, 2, 3, 2, 2});

    CHECK(vector_path(ThetaSpec::golden_ratio(), 5).word == LetterWord{0, 1, 2, 1});

    VectorPath tiny = vector_path(ThetaSpec::parse("pi-2"), 2);
    CHECK(tiny.vectors == std::vector<std::pair<long long, long long>>{{1, 0}});
    CHECK(tiny.word == LetterWord{0});
}

TEST_CASE("column-one and row-one offsets reproduce the bundled prefixes") {
    InterspersionArray array = interspersion_array(vartheta(), 8, 55);
    BFileSequence col_ref = read_bfile(data_directory() + "/A022330.bfile");
    std::vector<long long> col_plus_one;
    for (const auto& row : array.rows) col_plus_one.push_back(row.front() + 1);
    CHECK(col_plus_one == col_ref.values);

    BFileSequence row_ref = read_bfile(data_directory() + "/A022331.bfile");
    std::vector<long long> row_plus_one;
    for (long long v : array.rows.front()) row_plus_one.push_back(v + 1);
    CHECK(row_plus_one == row_ref.values);
}

TEST_CASE("vector coding equals the gap coding") {
    for (ThetaSpec theta : {vartheta(), ThetaSpec::golden_ratio(), ThetaSpec::parse("pi-2")}) {
        VectorPath path = vector_path(theta, 151);
        CHECK(path.word == lambda_word(theta, 150).word);
    }
}
