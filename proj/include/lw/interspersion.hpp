#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lw/lambda_word.hpp"
#include "lw/theta.hpp"

namespace lw {

enum class SignatureKind { IOfTheta, JOfThetaInverse };

// The i (resp. j) coordinates of S_theta in sorted order.
std::vector<long long> signature_sequence(const ThetaSpec& theta, std::size_t n,
                                          SignatureKind which);

// Rows partition the indices of the signature sequence: row i collects, in
// order, the positions at which value i occurs. Truncation at a finite budget
// leaves the rows ragged.
struct InterspersionArray {
    std::vector<std::vector<long long>> rows;
};

// Builds `rows` rows from the first `budget` signature values. Throws
// InsufficientBudget when the last requested row would be empty.
InterspersionArray interspersion_array(const ThetaSpec& theta, std::size_t rows,
                                       std::size_t budget,
                                       SignatureKind which = SignatureKind::JOfThetaInverse);

struct AxiomViolation {
    int axiom = 0;  // 1 partition, 2 rows increase, 3 columns increase, 4 interleaving
    std::string detail;
};

struct AxiomCheck {
    bool ok = true;
    std::optional<AxiomViolation> first_violation;
};

// Checks the four interspersion axioms on the materialized portion. Checks
// quantify only over entries that are present, so truncating a valid array
// never produces a violation.
AxiomCheck verify_axioms(const InterspersionArray& array);

// The moves between consecutive elements of S_theta in (i, j) coordinates,
// with distinct vectors coded by first occurrence. The coded word equals the
// Lambda word.
struct VectorPath {
    std::vector<std::pair<long long, long long>> vectors;
    LetterWord word;
};

VectorPath vector_path(const ThetaSpec& theta, std::size_t n);

}  // namespace lw
