#include "lw/interspersion.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace lw {

std::vector<long long> signature_sequence(const ThetaSpec& theta, std::size_t n,
                                          SignatureKind which) {
    auto elements = generate_s(theta, n);
    std::vector<long long> out;
    out.reserve(n);
    for (const SElement& e : elements)
        out.push_back(which == SignatureKind::IOfTheta ? e.i : e.j);
    return out;
}

InterspersionArray interspersion_array(const ThetaSpec& theta, std::size_t rows,
                                       std::size_t budget, SignatureKind which) {
    if (rows < 1) throw OutOfRange("interspersion_array wants rows >= 1");
    auto signature = signature_sequence(theta, budget, which);
    InterspersionArray array;
    array.rows.assign(rows, {});
    for (std::size_t n = 0; n < signature.size(); ++n) {
        long long value = signature[n];
        if (value >= 0 && value < static_cast<long long>(rows))
            array.rows[static_cast<std::size_t>(value)].push_back(static_cast<long long>(n));
    }
    if (array.rows.back().empty())
        throw InsufficientBudget("budget " + std::to_string(budget) +
                                 " leaves row " + std::to_string(rows - 1) + " empty");
    return array;
}

AxiomCheck verify_axioms(const InterspersionArray& array) {
    auto fail = [](int axiom, std::string detail) {
        return AxiomCheck{false, AxiomViolation{axiom, std::move(detail)}};
    };

    // 1: rows partition the non-negative integers. On a truncation only a
    // duplicate can disprove this; a gap may belong to a row not yet seen.
    std::map<long long, std::size_t> owner;
    for (std::size_t r = 0; r < array.rows.size(); ++r) {
        for (long long v : array.rows[r]) {
            if (v < 0) return fail(1, "negative entry " + std::to_string(v));
            auto [it, inserted] = owner.emplace(v, r);
            if (!inserted)
                return fail(1, "entry " + std::to_string(v) + " appears in rows " +
                                   std::to_string(it->second) + " and " + std::to_string(r));
        }
    }

    // 2: rows strictly increase.
    for (std::size_t r = 0; r < array.rows.size(); ++r)
        for (std::size_t c = 0; c + 1 < array.rows[r].size(); ++c)
            if (array.rows[r][c] >= array.rows[r][c + 1])
                return fail(2, "row " + std::to_string(r) + " is not increasing at column " +
                                   std::to_string(c));

    // 3: columns strictly increase where present.
    for (std::size_t r = 0; r + 1 < array.rows.size(); ++r) {
        std::size_t shared = std::min(array.rows[r].size(), array.rows[r + 1].size());
        for (std::size_t c = 0; c < shared; ++c)
            if (array.rows[r][c] >= array.rows[r + 1][c])
                return fail(3, "column " + std::to_string(c) + " is not increasing at row " +
                                   std::to_string(r));
    }

    // 4: whenever u_p < v_q < u_{p+1}, the next terms interleave the same
    // way. Sub-inequalities whose entries are truncated away are skipped.
    for (std::size_t ur = 0; ur < array.rows.size(); ++ur) {
        for (std::size_t vr = 0; vr < array.rows.size(); ++vr) {
            if (ur == vr) continue;
            const auto& u = array.rows[ur];
            const auto& v = array.rows[vr];
            for (std::size_t p = 0; p + 1 < u.size(); ++p) {
                for (std::size_t q = 0; q < v.size(); ++q) {
                    if (!(u[p] < v[q] && v[q] < u[p + 1])) continue;
                    if (q + 1 >= v.size()) continue;
                    if (u[p + 1] >= v[q + 1])
                        return fail(4, "rows " + std::to_string(ur) + "," + std::to_string(vr) +
                                           ": expected " + std::to_string(u[p + 1]) + " < " +
                                           std::to_string(v[q + 1]));
                    if (p + 2 < u.size() && v[q + 1] >= u[p + 2])
                        return fail(4, "rows " + std::to_string(ur) + "," + std::to_string(vr) +
                                           ": expected " + std::to_string(v[q + 1]) + " < " +
                                           std::to_string(u[p + 2]));
                }
            }
        }
    }
    return {true, std::nullopt};
}

VectorPath vector_path(const ThetaSpec& theta, std::size_t n) {
    if (n < 1) throw OutOfRange("vector_path wants n >= 1");
    auto elements = generate_s(theta, n);
    VectorPath path;
    if (n == 1) return path;
    path.vectors.reserve(n - 1);
    path.word.reserve(n - 1);
    std::map<std::pair<long long, long long>, long long> letters;
    for (std::size_t m = 0; m + 1 < elements.size(); ++m) {
        std::pair<long long, long long> v{elements[m + 1].i - elements[m].i,
                                          elements[m + 1].j - elements[m].j};
        path.vectors.push_back(v);
        auto [it, inserted] = letters.try_emplace(v, static_cast<long long>(letters.size()));
        path.word.push_back(it->second);
    }
    return path;
}

}  // namespace lw
