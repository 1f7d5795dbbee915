#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "lw/errors.hpp"

namespace lw {

// OEIS b-file content: `index value` pairs with ascending contiguous indices.
struct BFileSequence {
    long long first_index = 0;
    std::vector<long long> values;
};

// Parses b-file lines; '#' comments and blank lines are allowed. Gaps,
// retrograde indices, or junk raise MalformedBFile.
BFileSequence read_bfile(std::istream& in);
BFileSequence read_bfile(const std::string& path);

// One "index value" pair per line, LF endings.
void write_bfile(std::ostream& out, long long first_index,
                 const std::vector<long long>& values);

struct SequenceDiff {
    std::optional<long long> first_mismatch_index;  // absent when overlap agrees
    std::size_t compared = 0;                       // size of the index overlap
};

SequenceDiff diff_sequences(const BFileSequence& a, const BFileSequence& b);

}  // namespace lw
