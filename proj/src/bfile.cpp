#include "lw/bfile.hpp"

#include <fstream>
#include <sstream>
#include <string>

namespace lw {

BFileSequence read_bfile(std::istream& in) {
    BFileSequence seq;
    std::string line;
    bool have_first = false;
    long long expected = 0;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long index, value;
        if (!(ls >> index)) {
            std::string junk;
            ls.clear();
            if (ls >> junk)
                throw MalformedBFile("line " + std::to_string(line_no) + ": not an index/value pair");
            continue;  // blank or comment-only
        }
        if (!(ls >> value))
            throw MalformedBFile("line " + std::to_string(line_no) + ": missing value");
        std::string junk;
        if (ls >> junk)
            throw MalformedBFile("line " + std::to_string(line_no) + ": trailing junk '" + junk + "'");
        if (!have_first) {
            seq.first_index = index;
            expected = index;
            have_first = true;
        }
        if (index != expected)
            throw MalformedBFile("line " + std::to_string(line_no) + ": index " +
                                 std::to_string(index) + " breaks contiguity (expected " +
                                 std::to_string(expected) + ")");
        seq.values.push_back(value);
        ++expected;
    }
    return seq;
}

BFileSequence read_bfile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedBFile("cannot open b-file: " + path);
    return read_bfile(in);
}

void write_bfile(std::ostream& out, long long first_index,
                 const std::vector<long long>& values) {
    for (std::size_t m = 0; m < values.size(); ++m)
        out << (first_index + static_cast<long long>(m)) << ' ' << values[m] << '\n';
}

SequenceDiff diff_sequences(const BFileSequence& a, const BFileSequence& b) {
    long long lo = std::max(a.first_index, b.first_index);
    long long hi = std::min(a.first_index + static_cast<long long>(a.values.size()),
                            b.first_index + static_cast<long long>(b.values.size()));
    SequenceDiff diff;
    if (hi <= lo) return diff;
    diff.compared = static_cast<std::size_t>(hi - lo);
    for (long long idx = lo; idx < hi; ++idx) {
        long long va = a.values[static_cast<std::size_t>(idx - a.first_index)];
        long long vb = b.values[static_cast<std::size_t>(idx - b.first_index)];
        if (va != vb) {
            diff.first_mismatch_index = idx;
            break;
        }
    }
    return diff;
}

}  // namespace lw
