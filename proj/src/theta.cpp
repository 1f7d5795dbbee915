#include "lw/theta.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <utility>

#include "lw/checked.hpp"

namespace lw {
namespace detail {

class PartialQuotientSource {
public:
    virtual ~PartialQuotientSource() = default;
    virtual long long term(std::size_t k) const = 0;
};

}  // namespace detail

namespace {

using BigInt = boost::multiprecision::cpp_int;

void validate_terms(const std::vector<long long>& terms, std::size_t offset) {
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (terms[k] < 1)
            throw InvalidThetaSpec("partial quotients must be positive integers");
        if (offset + k == 0 && terms[k] != 1)
            throw InvalidThetaSpec("the leading partial quotient must be 1 (theta in (1,2))");
    }
}

class ExplicitSource final : public detail::PartialQuotientSource {
public:
    explicit ExplicitSource(std::vector<long long> terms) : terms_(std::move(terms)) {
        if (terms_.empty()) throw InvalidThetaSpec("empty partial-quotient list");
        validate_terms(terms_, 0);
    }

    long long term(std::size_t k) const override {
        if (k >= terms_.size())
            throw PrecisionExhausted("partial-quotient list exhausted: index " +
                                     std::to_string(k) + " requested, " +
                                     std::to_string(terms_.size()) + " terms available");
        return terms_[k];
    }

private:
    std::vector<long long> terms_;
};

class PeriodicSource final : public detail::PartialQuotientSource {
public:
    PeriodicSource(std::vector<long long> preperiod, std::vector<long long> period)
        : preperiod_(std::move(preperiod)), period_(std::move(period)) {
        if (period_.empty()) throw InvalidThetaSpec("periodic source needs a non-empty period");
        validate_terms(preperiod_, 0);
        validate_terms(period_, preperiod_.size());
    }

    long long term(std::size_t k) const override {
        if (k < preperiod_.size()) return preperiod_[k];
        return period_[(k - preperiod_.size()) % period_.size()];
    }

private:
    std::vector<long long> preperiod_;
    std::vector<long long> period_;
};

// Smallest m with m^e = n for some e >= 1.
long long multiplicative_root(long long n) {
    for (long long r = 2; r * r <= n; ++r) {
        long long p = r;
        while (p <= n / r) {
            p *= r;
            if (p == n) return r;
        }
    }
    return n;
}

// Streams the continued fraction of log_u(v). The k-th tail value is kept as
// a quotient of integer forms in L = ln u and M = ln v:
//     value = (num_l*L + num_m*M) / (den_l*L + den_m*M)
// so floors reduce to signs of x*L + y*M, i.e. to comparisons u^x <=> v^(-y)
// on big integers. The matrix entries are continuants of the expansion and
// the power sizes stack up quickly; all big-integer work is charged against
// a bit budget so a pathological spec fails instead of spinning.
class LogRatioSource final : public detail::PartialQuotientSource {
public:
    LogRatioSource(long long u, long long v, long long bit_budget)
        : u_(u), v_(v), bit_budget_(bit_budget) {
        if (u < 2) throw InvalidThetaSpec("log base must be at least 2");
        if (v <= u) throw InvalidThetaSpec("log argument must exceed the base");
        if (v >= u * u) throw InvalidThetaSpec("log argument must be below base^2 (theta < 2)");
        if (bit_budget < 64) throw InvalidThetaSpec("bit budget too small");
        if (multiplicative_root(u) == multiplicative_root(v))
            throw InvalidThetaSpec("log_" + std::to_string(u) + "(" + std::to_string(v) +
                                   ") is rational");
        num_l_ = 0; num_m_ = 1;  // ln v
        den_l_ = 1; den_m_ = 0;  // ln u
    }

    long long term(std::size_t k) const override {
        std::scoped_lock lock(mutex_);
        while (cache_.size() <= k) advance();
        return cache_[k];
    }

private:
    // Sign of x*ln(u) + y*ln(v). Zero would mean u^x = v^(-y), excluded by the
    // irrationality check at construction.
    int sign_linear(const BigInt& x, const BigInt& y) const {
        if (x >= 0 && y >= 0) {
            if (x == 0 && y == 0)
                throw ConsistencyError("vanishing log form; source is not irrational");
            return 1;
        }
        if (x <= 0 && y <= 0) return -1;
        const bool u_positive = x > 0;
        BigInt eu = u_positive ? x : -x;
        BigInt ev = u_positive ? -y : y;
        charge(eu * bit_length(u_) + ev * bit_length(v_));
        BigInt pu = boost::multiprecision::pow(BigInt(u_), to_exponent(eu));
        BigInt pv = boost::multiprecision::pow(BigInt(v_), to_exponent(ev));
        int cmp = pu.compare(pv);
        if (cmp == 0)
            throw ConsistencyError("equal powers in log comparison; source is not irrational");
        return u_positive ? cmp : -cmp;
    }

    static long long bit_length(long long n) {
        long long bits = 0;
        while (n > 0) { ++bits; n >>= 1; }
        return bits;
    }

    unsigned to_exponent(const BigInt& e) const {
        if (e > std::numeric_limits<unsigned>::max())
            throw BudgetExceeded("log-ratio exponent exceeds representable range");
        return static_cast<unsigned>(e);
    }

    void charge(const BigInt& bits) const {
        bits_used_ += bits;
        if (bits_used_ > bit_budget_)
            throw BudgetExceeded("log-ratio stream exceeded its bit budget (" +
                                 std::to_string(bit_budget_) + " bits)");
    }

    // Extracts the next partial quotient: the largest t with value > t, then
    // replaces the state by 1/(value - t).
    void advance() const {
        auto tail_sign = [&](const BigInt& t) {
            return sign_linear(num_l_ - t * den_l_, num_m_ - t * den_m_);
        };
        if (tail_sign(1) <= 0 && !cache_.empty())
            throw ConsistencyError("continued-fraction tail fell below 1");
        BigInt lo = cache_.empty() ? BigInt(0) : BigInt(1);
        BigInt hi = lo + 1;
        while (tail_sign(hi) > 0) {
            lo = hi;
            hi <<= 1;
        }
        while (hi - lo > 1) {
            BigInt mid = (lo + hi) >> 1;
            if (tail_sign(mid) > 0) lo = mid; else hi = mid;
        }
        BigInt next_l = num_l_ - lo * den_l_;
        BigInt next_m = num_m_ - lo * den_m_;
        num_l_ = den_l_; num_m_ = den_m_;
        den_l_ = next_l; den_m_ = next_m;
        if (lo > std::numeric_limits<long long>::max())
            throw Overflow("partial quotient exceeds machine width");
        cache_.push_back(static_cast<long long>(lo));
    }

    long long u_;
    long long v_;
    long long bit_budget_;
    mutable std::mutex mutex_;
    mutable std::vector<long long> cache_;
    mutable BigInt num_l_, num_m_, den_l_, den_m_;
    mutable BigInt bits_used_ = 0;
};

std::vector<long long> parse_int_list(std::string_view text) {
    std::vector<long long> out;
    std::string token;
    std::istringstream in{std::string(text)};
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            long long v = std::stoll(token, &used);
            while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
                ++used;
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InvalidThetaSpec("bad integer '" + token + "' in theta spec");
        }
    }
    return out;
}

}  // namespace

ThetaSpec::ThetaSpec(std::shared_ptr<const detail::PartialQuotientSource> source,
                     std::string name)
    : source_(std::move(source)), name_(std::move(name)) {}

ThetaSpec ThetaSpec::periodic(std::vector<long long> preperiod, std::vector<long long> period) {
    std::string name = "periodic";
    auto src = std::make_shared<PeriodicSource>(std::move(preperiod), std::move(period));
    return ThetaSpec(std::move(src), std::move(name));
}

ThetaSpec ThetaSpec::explicit_terms(std::vector<long long> terms) {
    auto src = std::make_shared<ExplicitSource>(std::move(terms));
    return ThetaSpec(std::move(src), "cf-list");
}

ThetaSpec ThetaSpec::log_ratio(long long base, long long argument, long long bit_budget) {
    auto src = std::make_shared<LogRatioSource>(base, argument, bit_budget);
    return ThetaSpec(std::move(src),
                     "log:" + std::to_string(base) + "," + std::to_string(argument));
}

ThetaSpec ThetaSpec::golden_ratio() {
    auto src = std::make_shared<PeriodicSource>(std::vector<long long>{},
                                                std::vector<long long>{1});
    return ThetaSpec(std::move(src), "phi");
}

ThetaSpec ThetaSpec::from_fixture_file(const std::string& path, std::string name) {
    std::ifstream in(path);
    if (!in) throw InvalidThetaSpec("cannot open partial-quotient fixture: " + path);
    std::vector<long long> terms;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long v;
        if (ls >> v) {
            terms.push_back(v);
            std::string rest;
            if (ls >> rest) throw InvalidThetaSpec("trailing junk in fixture line: " + line);
        } else {
            ls.clear();
            std::string rest;
            if (ls >> rest) throw InvalidThetaSpec("bad fixture line: " + line);
        }
    }
    auto src = std::make_shared<ExplicitSource>(std::move(terms));
    return ThetaSpec(std::move(src), name.empty() ? "cffile:" + path : std::move(name));
}

std::string data_directory() {
    if (const char* env = std::getenv("LW_DATA_DIR")) return env;
#ifdef LW_DATA_DIR
    return LW_DATA_DIR;
#else
    return "data";
#endif
}

ThetaSpec ThetaSpec::parse(std::string_view text) {
    auto starts = [&](std::string_view prefix) {
        return text.size() > prefix.size() && text.substr(0, prefix.size()) == prefix;
    };
    if (text == "phi") return golden_ratio();
    if (text == "pi-2" || text == "pi2")
        return from_fixture_file(data_directory() + "/pi_minus_2.cf", "pi-2");
    if (starts("log:")) {
        auto nums = parse_int_list(text.substr(4));
        if (nums.size() != 2) throw InvalidThetaSpec("log spec wants base,argument");
        return log_ratio(nums[0], nums[1]);
    }
    if (starts("cf:")) return explicit_terms(parse_int_list(text.substr(3)));
    if (starts("periodic:")) {
        auto body = text.substr(9);
        auto slash = body.find('/');
        if (slash == std::string_view::npos)
            throw InvalidThetaSpec("periodic spec wants preperiod/period");
        auto pre = slash == 0 ? std::vector<long long>{} : parse_int_list(body.substr(0, slash));
        auto per = parse_int_list(body.substr(slash + 1));
        return periodic(std::move(pre), std::move(per));
    }
    if (starts("cffile:")) return from_fixture_file(std::string(text.substr(7)));
    throw InvalidThetaSpec("unrecognized theta spec: '" + std::string(text) + "'");
}

long long ThetaSpec::partial_quotient(std::size_t k) const { return source_->term(k); }

std::vector<long long> ThetaSpec::partial_quotients(std::size_t n) const {
    if (n < 1) throw OutOfRange("partial_quotients wants n >= 1");
    std::vector<long long> out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(partial_quotient(k));
    return out;
}

Ordering compare_rational_to_theta(const ThetaSpec& theta, long long p, long long q) {
    if (q < 1 || p < 0) throw InvalidFraction("compare_rational_to_theta wants p >= 0, q >= 1");
    // Termwise walk of the canonical continued fractions. After the first
    // differing term the larger term wins at even indices and loses at odd
    // ones; an exactly exhausted rational acts as an infinite term one past
    // its end.
    for (std::size_t k = 0;; ++k) {
        long long u = p / q;
        long long r = p % q;
        long long t = theta.partial_quotient(k);
        if (u != t) {
            bool rational_larger = u > t;
            if (k % 2 != 0) rational_larger = !rational_larger;
            return rational_larger ? Ordering::Greater : Ordering::Less;
        }
        if (r == 0) return (k + 1) % 2 == 0 ? Ordering::Greater : Ordering::Less;
        p = q;
        q = r;
    }
}

Ordering sign_of_form(const ThetaSpec& theta, const LinearForm& f) {
    if (f.c1 == 0) {
        if (f.c0 > 0) return Ordering::Greater;
        if (f.c0 < 0) return Ordering::Less;
        return Ordering::Equal;
    }
    if (f.c1 < 0) return flip(sign_of_form(theta, -f));
    if (f.c0 >= 0) return Ordering::Greater;  // c1 >= 1, theta > 0
    // c0 + c1*theta <> 0  <=>  theta <> (-c0)/c1
    Ordering rational_vs_theta = compare_rational_to_theta(theta, -f.c0, f.c1);
    return rational_vs_theta == Ordering::Less ? Ordering::Greater : Ordering::Less;
}

long long floor_theta(const ThetaSpec& theta, long long k, FloorMode mode) {
    if (k < 1) throw OutOfRange("floor_theta wants k >= 1");
    if (mode == FloorMode::TimesTheta) {
        // floor(k*theta) in [k, 2k-1]; largest m with k*theta - m > 0
        long long lo = k, hi = checked_mul(2, k) - 1;
        while (lo < hi) {
            long long mid = lo + (hi - lo + 1) / 2;
            if (sign_of_form(theta, {-mid, k}) == Ordering::Greater) lo = mid; else hi = mid - 1;
        }
        return lo;
    }
    // floor(k/theta) in [0, k-1]; largest m with k - m*theta > 0
    long long lo = 0, hi = k - 1;
    while (lo < hi) {
        long long mid = lo + (hi - lo + 1) / 2;
        if (sign_of_form(theta, {k, -mid}) == Ordering::Greater) lo = mid; else hi = mid - 1;
    }
    return lo;
}

}  // namespace lw
