#include "lw/complement.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "lw/checked.hpp"

namespace lw {

namespace {

Ordering compare_elements(const ThetaSpec& theta, const SElement& x, const SElement& y) {
    return sign_of_form(theta, {x.i - y.i, x.j - y.j});
}

struct WindowBounds {
    WindowKind kind;
    long long k;
    long long bound_a;  // complements are taken w.r.t. bound_a + bound_b*theta
    long long bound_b;
    SElement lo;
    SElement hi;
};

// Locates k with floor(k*theta) + k = K (Minus) or floor(k/theta) + k = K
// (Plus). Exactly one of the two families contains every K >= 1.
WindowBounds classify_window(const ThetaSpec& theta, long long K) {
    if (K < 1) throw OutOfRange("window index K must be positive");
    auto search = [&](FloorMode mode) -> std::optional<long long> {
        long long lo = 1, hi = K;
        while (lo <= hi) {
            long long mid = lo + (hi - lo) / 2;
            long long value = checked_add(floor_theta(theta, mid, mode), mid);
            if (value == K) return mid;
            if (value < K) lo = mid + 1; else hi = mid - 1;
        }
        return std::nullopt;
    };
    auto minus = search(FloorMode::TimesTheta);
    auto plus = search(FloorMode::OverTheta);
    if (minus.has_value() == plus.has_value())
        throw ConsistencyError("index " + std::to_string(K) +
                               " is not in exactly one Beatty family");
    if (minus) {
        long long k = *minus;
        long long A = floor_theta(theta, k, FloorMode::TimesTheta);
        return {WindowKind::Minus, k, A, k, {A, 0}, {0, k}};
    }
    long long k = *plus;
    long long B = floor_theta(theta, k, FloorMode::OverTheta);
    return {WindowKind::Plus, k, k, B, {0, B}, {k, 0}};
}

// S prefix guaranteed to reach `target`, grown by doubling.
std::vector<SElement> grow_s_until(const ThetaSpec& theta, const SElement& target) {
    std::size_t n = 64;
    while (true) {
        auto elements = generate_s(theta, n);
        if (compare_elements(theta, elements.back(), target) != Ordering::Less) return elements;
        n *= 2;
    }
}

// Index of `target` in an ascending prefix (must be present).
std::size_t locate(const ThetaSpec& theta, const std::vector<SElement>& elements,
                   const SElement& target) {
    auto it = std::lower_bound(elements.begin(), elements.end(), target,
                               [&](const SElement& x, const SElement& y) {
                                   return compare_elements(theta, x, y) == Ordering::Less;
                               });
    if (it == elements.end() || !(*it == target))
        throw ConsistencyError("expected S element not found in generated prefix");
    return static_cast<std::size_t>(it - elements.begin());
}

bool word_is_palindrome(const LetterWord& w) {
    return std::equal(w.begin(), w.begin() + static_cast<long long>(w.size() / 2), w.rbegin());
}

NuclearWindow build_nuclear(const ThetaSpec& theta, long long K,
                            const std::vector<SElement>& elements,
                            const WindowBounds& bounds) {
    std::size_t first = locate(theta, elements, bounds.lo);
    std::size_t last = locate(theta, elements, bounds.hi);
    NuclearWindow window;
    window.K = K;
    window.kind = bounds.kind;
    window.k = bounds.k;
    window.bound_a = bounds.bound_a;
    window.bound_b = bounds.bound_b;
    window.elements.assign(elements.begin() + static_cast<long long>(first),
                           elements.begin() + static_cast<long long>(last) + 1);
    if (checked_add(window.bound_a, window.bound_b) != K)
        throw ConsistencyError("window bounds do not sum to K");
    if (!is_complement_sequence(theta, window.elements))
        throw ConsistencyError("nuclear window of K=" + std::to_string(K) +
                               " is not complement-closed");
    if (!word_is_palindrome(window.delta()))
        throw ConsistencyError("nuclear difference word of K=" + std::to_string(K) +
                               " is not a palindrome");
    return window;
}

}  // namespace

BeattyPair beatty_sequences(const ThetaSpec& theta, std::size_t n) {
    if (n < 1) throw OutOfRange("beatty_sequences wants n >= 1");
    BeattyPair out;
    out.k_minus.reserve(n);
    out.k_plus.reserve(n);
    for (long long k = 1; k <= static_cast<long long>(n); ++k) {
        out.k_minus.push_back(checked_add(floor_theta(theta, k, FloorMode::TimesTheta), k));
        out.k_plus.push_back(checked_add(floor_theta(theta, k, FloorMode::OverTheta), k));
    }
    return out;
}

bool is_complement_sequence(const ThetaSpec& theta, const std::vector<SElement>& ascending) {
    if (ascending.empty()) return true;
    std::set<std::pair<long long, long long>> members;
    for (std::size_t m = 0; m < ascending.size(); ++m) {
        if (m + 1 < ascending.size() &&
            compare_elements(theta, ascending[m], ascending[m + 1]) != Ordering::Less)
            throw NotSorted("complement test wants a strictly ascending list");
        members.emplace(ascending[m].i, ascending[m].j);
    }
    long long hi_i = ascending.front().i + ascending.back().i;
    long long hi_j = ascending.front().j + ascending.back().j;
    for (const SElement& e : ascending) {
        long long ci = hi_i - e.i, cj = hi_j - e.j;
        if (ci < 0 || cj < 0 || !members.count({ci, cj})) return false;
    }
    return true;
}

NuclearWindow nuclear_window(const ThetaSpec& theta, long long K) {
    WindowBounds bounds = classify_window(theta, K);
    auto elements = grow_s_until(theta, bounds.hi);
    return build_nuclear(theta, K, elements, bounds);
}

MaximalWindow maximal_window(const ThetaSpec& theta, long long K) {
    WindowBounds bounds = classify_window(theta, K);
    WindowBounds next = classify_window(theta, K + 1);
    auto elements = grow_s_until(theta, next.hi);

    MaximalWindow window;
    window.K = K;
    window.core = build_nuclear(theta, K, elements, bounds);

    // tail: from max(core) inclusive up to the next window's maximum, exclusive
    std::size_t tail_first = locate(theta, elements, bounds.hi);
    std::size_t tail_end = locate(theta, elements, next.hi);
    window.tail.assign(elements.begin() + static_cast<long long>(tail_first),
                       elements.begin() + static_cast<long long>(tail_end));

    // head: complements of the tail w.r.t. bound_a + bound_b*theta
    window.head.reserve(window.tail.size());
    for (auto it = window.tail.rbegin(); it != window.tail.rend(); ++it) {
        SElement c{bounds.bound_a - it->i, bounds.bound_b - it->j};
        if (c.i < 0 || c.j < 0)
            throw ConsistencyError("tail complement left S; K=" + std::to_string(K));
        window.head.push_back(c);
    }

    auto append_skipping_duplicate = [&](const std::vector<SElement>& part) {
        for (const SElement& e : part) {
            if (!window.elements.empty() && window.elements.back() == e) continue;
            window.elements.push_back(e);
        }
    };
    append_skipping_duplicate(window.head);
    append_skipping_duplicate(window.core.elements);
    append_skipping_duplicate(window.tail);

    if (window.head.size() != window.tail.size())
        throw ConsistencyError("head/tail size mismatch; K=" + std::to_string(K));
    if (!is_complement_sequence(theta, window.elements))
        throw ConsistencyError("maximal window of K=" + std::to_string(K) +
                               " is not complement-closed");
    LetterWord full = window.delta();
    LetterWord core_delta = window.core.delta();
    if (!word_is_palindrome(full))
        throw ConsistencyError("maximal difference word of K=" + std::to_string(K) +
                               " is not a palindrome");
    // The core's difference word must sit centered inside the full one.
    std::size_t wing = window.tail.size() - 1;
    if (core_delta.size() + 2 * wing != full.size() ||
        !std::equal(core_delta.begin(), core_delta.end(),
                    full.begin() + static_cast<long long>(wing)))
        throw ConsistencyError("nuclear difference word is not medial in K=" +
                               std::to_string(K));
    return window;
}

UpsWindow ups_window(const ThetaSpec& theta, std::size_t n) {
    if (n < 1) throw OutOfRange("ups_window wants n >= 1");
    auto elements = generate_s(theta, n + 1);
    const SElement s = elements.back();

    // Every positive element lies in exactly one run [max(N_K), max(N_{K+1})).
    std::optional<WindowBounds> home;
    WindowBounds bounds = classify_window(theta, 1);
    for (long long K = 1;; ++K) {
        WindowBounds next = classify_window(theta, K + 1);
        bool above_lo = compare_elements(theta, s, bounds.hi) != Ordering::Less;
        bool below_hi = compare_elements(theta, s, next.hi) == Ordering::Less;
        if (above_lo && below_hi) {
            home = bounds;
            break;
        }
        if (!above_lo)
            throw ConsistencyError("element fell below every tail run");
        bounds = next;
    }

    UpsWindow out;
    out.K = checked_add(home->bound_a, home->bound_b);
    SElement complement{home->bound_a - s.i, home->bound_b - s.j};
    if (complement.i < 0 || complement.j < 0)
        throw ConsistencyError("window complement left S at n=" + std::to_string(n));
    std::size_t first = locate(theta, elements, complement);
    out.window.assign(elements.begin() + static_cast<long long>(first), elements.end());
    if (!is_complement_sequence(theta, out.window))
        throw ConsistencyError("ups window is not complement-closed at n=" + std::to_string(n));
    out.delta = delta_letters(out.window);
    if (!word_is_palindrome(out.delta))
        throw ConsistencyError("ups window difference word is not a palindrome at n=" +
                               std::to_string(n));
    return out;
}

}  // namespace lw
