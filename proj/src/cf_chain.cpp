#include "lw/cf_chain.hpp"

#include <numeric>
#include <string>

#include "lw/checked.hpp"

namespace lw {

namespace {

std::string frac_str(long long a, long long b) {
    return std::to_string(a) + "/" + std::to_string(b);
}

// Side a stage's fractions fall on: even stages approach from below.
Side stage_side(long long stage) { return stage % 2 == 0 ? Side::Left : Side::Right; }

Ordering expected_sign(Side side) {
    // sign of a - b*theta
    return side == Side::Left ? Ordering::Less : Ordering::Greater;
}

}  // namespace

std::vector<Convergent> convergent_ladder(const ThetaSpec& theta, std::size_t n) {
    if (n < 1) throw OutOfRange("convergent_ladder wants n >= 1");
    std::vector<Convergent> out;
    out.reserve(n);
    out.push_back({1, 0, ConvergentKind::Formal, -1, 0, Side::Right, 0});

    // Stern-Brocot descent: each stage k walks t_k mediants from c_{k-2}
    // toward theta past c_{k-1}.
    long long pm2a = 0, pm2b = 1;  // c_{k-2}
    long long pm1a = 1, pm1b = 0;  // c_{k-1}
    std::size_t depth = 0;
    for (long long stage = 0; out.size() < n; ++stage) {
        long long tk = theta.partial_quotient(static_cast<std::size_t>(stage));
        long long a = pm2a, b = pm2b;
        for (long long t = 1; t <= tk && out.size() < n; ++t) {
            a = checked_add(a, pm1a);
            b = checked_add(b, pm1b);
            ++depth;
            Side side = stage_side(stage);
            if (sign_of_form(theta, {a, -b}) != expected_sign(side))
                throw ConsistencyError("ladder fraction " + frac_str(a, b) +
                                       " landed on the wrong side of theta");
            ConvergentKind kind =
                t == tk ? ConvergentKind::Principal : ConvergentKind::Intermediate;
            out.push_back({a, b, kind, stage, t, side, depth});
        }
        pm2a = pm1a; pm2b = pm1b;
        pm1a = a; pm1b = b;
    }
    return out;
}

long long stern_brocot_depth(long long a, long long b) {
    if (a == 1 && b == 0) return 0;
    if (b < 1 || a < b || a > 2 * b)
        throw InvalidFraction("stern_brocot_depth wants 1/0 or a/b with 1 <= a/b <= 2, got " +
                              frac_str(a, b));
    if (std::gcd(a, b) != 1)
        throw InvalidFraction("stern_brocot_depth wants a reduced fraction, got " +
                              frac_str(a, b));
    // a/b = [1; terms of b/(a-b)]; the depth is the sum of all terms.
    long long depth = 1;
    long long p = b, q = a - b;
    while (q != 0) {
        depth = checked_add(depth, p / q);
        long long r = p % q;
        p = q;
        q = r;
    }
    return depth;
}

Fraction principal_convergent(const ThetaSpec& theta, long long k) {
    if (k < -1) throw OutOfRange("principal_convergent wants k >= -1");
    long long pm2a = 0, pm2b = 1;
    long long pm1a = 1, pm1b = 0;
    for (long long i = 0; i <= k; ++i) {
        long long t = theta.partial_quotient(static_cast<std::size_t>(i));
        long long a = checked_add(checked_mul(t, pm1a), pm2a);
        long long b = checked_add(checked_mul(t, pm1b), pm2b);
        pm2a = pm1a; pm2b = pm1b;
        pm1a = a; pm1b = b;
    }
    return {pm1a, pm1b};
}

std::vector<HurwitzPair> hurwitz_chain(const ThetaSpec& theta, std::size_t n) {
    if (n < 1) throw OutOfRange("hurwitz_chain wants n >= 1");
    std::vector<HurwitzPair> out;
    out.reserve(n);
    Fraction left{1, 1}, right{1, 0};
    out.push_back({left, right});
    while (out.size() < n) {
        Fraction mediant{checked_add(left.num, right.num), checked_add(left.den, right.den)};
        switch (sign_of_form(theta, {mediant.num, -mediant.den})) {
            case Ordering::Greater: right = mediant; break;
            case Ordering::Less: left = mediant; break;
            case Ordering::Equal:
                throw ConsistencyError("mediant " + frac_str(mediant.num, mediant.den) +
                                       " equals theta; theta is not irrational");
        }
        out.push_back({left, right});
    }
    return out;
}

bool is_best_approx_second_kind(const ThetaSpec& theta, long long p, long long q,
                                ApproxSide side) {
    if (q < 1 || p < 0) throw InvalidFraction("is_best_approx_second_kind wants p >= 0, q >= 1");

    Ordering own = sign_of_form(theta, {-p, q});  // sign of q*theta - p
    if (own == Ordering::Equal) throw ConsistencyError("rational theta in best-approx oracle");
    bool below = own == Ordering::Greater;  // p/q < theta
    if (side == ApproxSide::Left && !below) return false;
    if (side == ApproxSide::Right && below) return false;

    LinearForm own_abs = below ? LinearForm{-p, q} : LinearForm{p, -q};

    // |q'*theta - p'| is minimized per denominator by p' = floor(q'*theta)
    // below and that plus one above; no other numerator can beat those.
    auto beats = [&](long long pp, long long qq, bool candidate_below) {
        if (pp == p && qq == q) return true;  // a fraction does not compete with itself
        LinearForm cand_abs =
            candidate_below ? LinearForm{-pp, qq} : LinearForm{pp, -qq};
        return sign_of_form(theta, cand_abs - own_abs) == Ordering::Greater;
    };

    for (long long qq = 1; qq <= q; ++qq) {
        long long lo = floor_theta(theta, qq, FloorMode::TimesTheta);
        if (side != ApproxSide::Right && !beats(lo, qq, true)) return false;
        if (side != ApproxSide::Left && !beats(lo + 1, qq, false)) return false;
    }
    return true;
}

}  // namespace lw
