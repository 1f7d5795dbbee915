#include "lw/lambda_word.hpp"

#include <map>
#include <queue>
#include <string>

#include "lw/checked.hpp"

namespace lw {

namespace {

std::string elem_str(const SElement& e) {
    return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
}

struct LetterGeometry {
    Convergent conv;
    Fraction partner;  // p/q paired with the letter's fraction
};

// The letter's ladder entry plus the principal convergent it counts against:
// the one that follows a principal, the one that precedes an intermediate.
LetterGeometry letter_geometry(const ThetaSpec& theta, long long letter) {
    if (letter < 0) throw UnknownLetter("letters are non-negative");
    auto ladder = convergent_ladder(theta, static_cast<std::size_t>(letter) + 1);
    const Convergent& conv = ladder[static_cast<std::size_t>(letter)];
    Fraction partner = conv.kind == ConvergentKind::Intermediate
                           ? principal_convergent(theta, conv.stage - 1)
                           : principal_convergent(theta, conv.stage + 1);
    return {conv, partner};
}

}  // namespace

DifferenceCode difference_code(const SElement& from, const SElement& to) {
    long long di = to.i - from.i;
    long long dj = to.j - from.j;
    long long a, b;
    Side side;
    if (dj > 0) {
        a = -di; b = dj; side = Side::Left;  // value b*theta - a
    } else {
        a = di; b = -dj; side = Side::Right;  // value a - b*theta
    }
    if (a < 0 || b < 0)
        throw ConsistencyError("gap " + elem_str(from) + " -> " + elem_str(to) +
                               " is not a convergent difference");
    return {a, b, side, stern_brocot_depth(a, b)};
}

LetterWord delta_letters(const std::vector<SElement>& elements) {
    LetterWord out;
    if (elements.empty()) return out;
    out.reserve(elements.size() - 1);
    for (std::size_t m = 0; m + 1 < elements.size(); ++m)
        out.push_back(difference_code(elements[m], elements[m + 1]).letter);
    return out;
}

std::vector<SElement> generate_s(const ThetaSpec& theta, std::size_t n) {
    if (n < 1) throw OutOfRange("generate_s wants n >= 1");
    auto later = [&theta](const SElement& x, const SElement& y) {
        Ordering o = sign_of_form(theta, {x.i - y.i, x.j - y.j});
        if (o == Ordering::Equal)
            throw ConsistencyError("coincident S elements; theta is not irrational");
        return o == Ordering::Greater;
    };
    std::priority_queue<SElement, std::vector<SElement>, decltype(later)> frontier(later);
    std::vector<SElement> out;
    out.reserve(n);
    frontier.push({0, 0});
    while (out.size() < n) {
        SElement e = frontier.top();
        frontier.pop();
        out.push_back(e);
        frontier.push({checked_add(e.i, 1), e.j});
        // row j+1 starts at (0, j+1), strictly above (0, j)
        if (e.i == 0) frontier.push({0, checked_add(e.j, 1)});
    }
    return out;
}

LambdaWord lambda_word(const ThetaSpec& theta, std::size_t n) {
    if (n < 1) throw OutOfRange("lambda_word wants n >= 1");
    auto elements = generate_s(theta, n + 1);
    LambdaWord out;
    out.word.reserve(n);
    std::map<std::pair<long long, long long>, long long> letters;  // (di,dj) -> letter
    for (std::size_t m = 0; m < n; ++m) {
        long long di = elements[m + 1].i - elements[m].i;
        long long dj = elements[m + 1].j - elements[m].j;
        auto [it, inserted] = letters.try_emplace({di, dj},
                                                  static_cast<long long>(letters.size()));
        if (inserted) {
            // First occurrence: the coding by appearance order must agree
            // with the Stern-Brocot depth of the normalized difference.
            DifferenceCode code = difference_code(elements[m], elements[m + 1]);
            if (code.letter != it->second)
                throw ConsistencyError(
                    "letter coding mismatch at position " + std::to_string(m) +
                    ": first-occurrence index " + std::to_string(it->second) +
                    " vs depth " + std::to_string(code.letter));
            out.codebook.push_back(code);
        }
        out.word.push_back(it->second);
    }
    return out;
}

long long letter_count(const ThetaSpec& theta, long long letter) {
    auto geo = letter_geometry(theta, letter);
    return checked_mul(geo.partner.num, geo.partner.den);
}

OccurrenceRectangle occurrence_rectangle(const ThetaSpec& theta, long long letter) {
    auto geo = letter_geometry(theta, letter);
    long long A = geo.conv.a, B = geo.conv.b;
    long long p = geo.partner.num, q = geo.partner.den;
    if (geo.conv.side == Side::Left)
        return {{A, checked_add(A, p)}, {0, q}};
    return {{0, p}, {B, checked_add(B, q)}};
}

long long max_run(const ThetaSpec& theta, long long letter) {
    auto geo = letter_geometry(theta, letter);
    switch (geo.conv.kind) {
        case ConvergentKind::Intermediate:
            return 1;
        case ConvergentKind::Formal:
            return theta.partial_quotient(0);
        case ConvergentKind::Principal:
            if (geo.conv.stage == 0) return theta.partial_quotient(1);
            return checked_add(
                1, theta.partial_quotient(static_cast<std::size_t>(geo.conv.stage) + 1));
    }
    throw ConsistencyError("unreachable convergent kind");
}

bool is_two_letter_factor(const ThetaSpec& theta, long long u, long long v) {
    if (u < 0 || v < 0) throw UnknownLetter("letters are non-negative");
    if (u == v) return max_run(theta, u) >= 2;
    auto ladder = convergent_ladder(theta, static_cast<std::size_t>(std::max(u, v)) + 1);
    const Convergent& cu = ladder[static_cast<std::size_t>(u)];
    const Convergent& cv = ladder[static_cast<std::size_t>(v)];
    if (cu.side == cv.side) return false;
    long long det = checked_sub(checked_mul(cu.a, cv.b), checked_mul(cu.b, cv.a));
    return det == 1 || det == -1;
}

}  // namespace lw
