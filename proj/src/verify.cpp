#include "lw/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "lw/cf_chain.hpp"
#include "lw/complement.hpp"
#include "lw/eertree.hpp"
#include "lw/gamma_word.hpp"
#include "lw/interspersion.hpp"
#include "lw/lambda_word.hpp"

namespace lw {

namespace {

struct Context {
    const ThetaSpec& theta;
    std::size_t n;
    std::vector<SElement> elements;  // n+1 elements
    LambdaWord lambda;
    long long top_letter;
};

using Check = std::function<std::string(Context&)>;  // returns detail, throws on failure

struct Failure : Error {
    using Error::Error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

// Letters whose full occurrence rectangle fits inside the generated prefix;
// exact statements about counts and runs apply only to those.
std::vector<long long> complete_letters(Context& ctx) {
    std::vector<long long> out;
    for (long long letter = 0; letter <= ctx.top_letter; ++letter) {
        SElement corner = occurrence_rectangle(ctx.theta, letter).max_element();
        const SElement& last = ctx.elements[ctx.n - 1];
        if (sign_of_form(ctx.theta, {corner.i - last.i, corner.j - last.j}) != Ordering::Greater)
            out.push_back(letter);
    }
    return out;
}

std::string first_occurrence_coding(Context& ctx) {
    std::map<long long, std::size_t> first;
    for (std::size_t m = 0; m < ctx.lambda.word.size(); ++m)
        first.try_emplace(ctx.lambda.word[m], m);
    require(static_cast<long long>(first.size()) == ctx.top_letter + 1,
            "letters are not contiguous");
    for (long long letter = 1; letter <= ctx.top_letter; ++letter)
        require(first.at(letter - 1) < first.at(letter),
                "letter " + std::to_string(letter) + " appeared before its predecessor");
    return std::to_string(first.size()) + " letters in appearance order";
}

std::string gap_correspondence(Context& ctx) {
    for (std::size_t m = 0; m < ctx.n; ++m) {
        const DifferenceCode& code =
            ctx.lambda.codebook[static_cast<std::size_t>(ctx.lambda.word[m])];
        LinearForm gap{ctx.elements[m + 1].i - ctx.elements[m].i,
                       ctx.elements[m + 1].j - ctx.elements[m].j};
        require(gap == code.form(), "gap at position " + std::to_string(m) +
                                        " differs from its codebook form");
    }
    return std::to_string(ctx.n) + " gaps match their codes";
}

std::string distinct_differences_are_ladder(Context& ctx) {
    auto ladder = convergent_ladder(ctx.theta, static_cast<std::size_t>(ctx.top_letter) + 1);
    for (long long letter = 0; letter <= ctx.top_letter; ++letter) {
        const auto& code = ctx.lambda.codebook[static_cast<std::size_t>(letter)];
        const auto& rung = ladder[static_cast<std::size_t>(letter)];
        require(code.a == rung.a && code.b == rung.b && code.side == rung.side,
                "codebook letter " + std::to_string(letter) + " is not ladder entry");
    }
    return "codebook equals ladder prefix of length " + std::to_string(ctx.top_letter + 1);
}

std::string differences_pass_best_approx_oracle(Context& ctx) {
    for (long long letter = 1; letter <= ctx.top_letter; ++letter) {
        const auto& code = ctx.lambda.codebook[static_cast<std::size_t>(letter)];
        ApproxSide side = code.side == Side::Left ? ApproxSide::Left : ApproxSide::Right;
        require(is_best_approx_second_kind(ctx.theta, code.a, code.b, side),
                "difference of letter " + std::to_string(letter) +
                    " fails the best-approximation oracle");
    }
    // Converse sweep up to the largest denominator that appeared.
    long long q_max = ctx.lambda.codebook.back().b;
    std::set<std::pair<long long, long long>> ladder_set;
    for (const auto& code : ctx.lambda.codebook) ladder_set.emplace(code.a, code.b);
    for (long long q = 1; q <= q_max; ++q) {
        long long lo = floor_theta(ctx.theta, q, FloorMode::TimesTheta);
        for (long long p : {lo, lo + 1}) {
            ApproxSide side = p == lo ? ApproxSide::Left : ApproxSide::Right;
            if (std::gcd(p, q) != 1) continue;
            if (is_best_approx_second_kind(ctx.theta, p, q, side))
                require(ladder_set.count({p, q}) == 1,
                        std::to_string(p) + "/" + std::to_string(q) +
                            " passes the oracle but never appeared");
        }
    }
    return "both directions hold through denominator " + std::to_string(q_max);
}

std::string letter_counts(Context& ctx) {
    auto complete = complete_letters(ctx);
    std::map<long long, long long> seen;
    for (long long letter : ctx.lambda.word) ++seen[letter];
    for (long long letter : complete) {
        long long expected = letter_count(ctx.theta, letter);
        require(seen[letter] == expected,
                "letter " + std::to_string(letter) + ": counted " +
                    std::to_string(seen[letter]) + ", product rule says " +
                    std::to_string(expected));
    }
    return std::to_string(complete.size()) + " complete letters counted exactly";
}

std::string occurrence_rectangles(Context& ctx) {
    auto complete = complete_letters(ctx);
    for (long long letter : complete) {
        OccurrenceRectangle rect = occurrence_rectangle(ctx.theta, letter);
        long long inside = 0;
        for (std::size_t m = 0; m < ctx.n; ++m) {
            bool here = ctx.lambda.word[m] == letter;
            bool predicted = rect.contains(ctx.elements[m]);
            require(here == predicted, "rectangle of letter " + std::to_string(letter) +
                                           " misses position " + std::to_string(m));
            if (here) ++inside;
        }
        require(inside == rect.size(), "rectangle size mismatch for letter " +
                                           std::to_string(letter));
    }
    return "rectangles locate every occurrence of " + std::to_string(complete.size()) +
           " complete letters";
}

std::string max_runs(Context& ctx) {
    auto complete = complete_letters(ctx);
    for (long long letter : complete) {
        long long best = 0, run = 0;
        for (long long x : ctx.lambda.word) {
            run = x == letter ? run + 1 : 0;
            best = std::max(best, run);
        }
        long long expected = max_run(ctx.theta, letter);
        require(best == expected, "letter " + std::to_string(letter) + ": observed run " +
                                      std::to_string(best) + ", formula says " +
                                      std::to_string(expected));
    }
    return std::to_string(complete.size()) + " complete letters match the run formula";
}

std::string two_letter_factors(Context& ctx) {
    std::set<std::pair<long long, long long>> observed;
    for (std::size_t m = 0; m + 1 < ctx.lambda.word.size(); ++m) {
        long long u = ctx.lambda.word[m], v = ctx.lambda.word[m + 1];
        observed.emplace(std::min(u, v), std::max(u, v));
    }
    for (const auto& [u, v] : observed)
        require(is_two_letter_factor(ctx.theta, u, v),
                "observed factor " + std::to_string(u) + "," + std::to_string(v) +
                    " is not predicted");
    auto complete = complete_letters(ctx);
    for (long long u : complete)
        for (long long v : complete) {
            if (u > v) continue;
            if (is_two_letter_factor(ctx.theta, u, v))
                require(observed.count({u, v}) == 1,
                        "predicted factor " + std::to_string(u) + "," + std::to_string(v) +
                            " was never observed");
        }
    return std::to_string(observed.size()) + " observed pairs, complete range exact";
}

std::string richness(Context& ctx) {
    RichnessReport report = is_rich(ctx.lambda.word);
    require(report.rich, "prefix is not rich at position " +
                             std::to_string(report.first_violation.value_or(0)));
    return "every prefix ends in a uni-occurrent palindromic suffix";
}

std::string alphabet_bound(Context& ctx) {
    long long bound = palindrome_alphabet_bound(ctx.lambda.word);
    require(bound <= 3, "palindromic factor over " + std::to_string(bound) + " letters");
    return "palindromic factors use at most " + std::to_string(bound) + " letters";
}

std::string beatty_partition(Context& ctx) {
    const long long limit = 1000;
    BeattyPair pair = beatty_sequences(ctx.theta, static_cast<std::size_t>(limit));
    std::set<long long> seen;
    auto take = [&](const std::vector<long long>& seq) {
        for (long long v : seq) {
            if (v > limit) break;
            require(seen.insert(v).second, "Beatty families overlap at " + std::to_string(v));
        }
    };
    take(pair.k_minus);
    take(pair.k_plus);
    for (long long v = 1; v <= limit; ++v)
        require(seen.count(v) == 1, "Beatty families miss " + std::to_string(v));
    return "1.." + std::to_string(limit) + " covered exactly once";
}

std::string nuclear_windows(Context& ctx) {
    for (long long K = 1; K <= 50; ++K) {
        NuclearWindow w = nuclear_window(ctx.theta, K);  // asserts internally
        require(w.K == K && !w.elements.empty(), "bad window at K=" + std::to_string(K));
    }
    return "K=1..50 complement-closed with palindromic difference words";
}

std::string maximal_windows(Context& ctx) {
    for (long long K = 1; K <= 50; ++K) {
        MaximalWindow w = maximal_window(ctx.theta, K);  // asserts internally
        require(w.head.size() == w.tail.size(), "asymmetric window at K=" + std::to_string(K));
    }
    return "K=1..50 extend symmetrically";
}

std::string ups_window_agreement(Context& ctx) {
    std::size_t limit = std::min<std::size_t>(ctx.n, 200);
    for (std::size_t m = 1; m <= limit; ++m) {
        UpsWindow window = ups_window(ctx.theta, m);
        UpsReport report = ups_of_prefix(ctx.lambda.word, m);
        require(report.ups.has_value(), "prefix " + std::to_string(m) + " lacks a ups");
        require(window.delta == *report.ups,
                "window construction disagrees with the palindromic tree at n=" +
                    std::to_string(m));
    }
    return "construction matches the palindromic tree for n=1.." + std::to_string(limit);
}

std::string gamma_projection(Context& ctx) {
    LetterWord gamma = gamma_word(ctx.theta, ctx.n);
    auto by_depth = gamma_ladder(ctx.theta, static_cast<std::size_t>(ctx.top_letter) + 1);
    for (std::size_t m = 0; m < ctx.n; ++m)
        require(gamma[m] == by_depth[static_cast<std::size_t>(ctx.lambda.word[m])],
                "projection mismatch at position " + std::to_string(m));
    for (long long g : gamma)
        require(0 <= g && g <= 2, "projected letter outside {0,1,2}");
    return "projection consistent over " + std::to_string(ctx.n) + " letters";
}

std::string gamma_triples(Context& ctx) {
    auto chain = hurwitz_chain(ctx.theta, 10);
    std::size_t tested = 0;
    for (const HurwitzPair& pair : chain) {
        Fraction mediant{pair.left.num + pair.right.num, pair.left.den + pair.right.den};
        long long gx = gamma_of_convergent(ctx.theta, pair.left.num, pair.left.den);
        long long gy = gamma_of_convergent(ctx.theta, pair.right.num, pair.right.den);
        long long gz = gamma_of_convergent(ctx.theta, mediant.num, mediant.den);
        require(gx + gy + gz == 3, "triple sum failed at mediant " +
                                       std::to_string(mediant.num) + "/" +
                                       std::to_string(mediant.den));
        long long wa = std::llabs(pair.left.num - pair.right.num);
        long long wb = std::llabs(pair.left.den - pair.right.den);
        if (!(wa == 0 && wb == 1)) {  // the seed pair subtracts to the excluded 0/1
            long long gw = gamma_of_convergent(ctx.theta, wa, wb);
            require(gw == gz, "difference fraction " + std::to_string(wa) + "/" +
                                  std::to_string(wb) + " disagrees with the mediant");
            ++tested;
        }
    }
    return std::to_string(tested) + " chain members satisfy both identities";
}

std::string gamma_preservation(Context& ctx) {
    std::size_t factor_len = std::min<std::size_t>(30, ctx.n);
    PreservationCheck check = check_palindrome_preservation(ctx.theta, ctx.n, factor_len);
    if (!check.preserved) {
        auto [pos, len] = *check.counterexample;
        throw Failure("palindromicity differs at position " + std::to_string(pos) +
                      ", length " + std::to_string(len));
    }
    return "factors to length " + std::to_string(factor_len) + " agree";
}

std::string gamma_non_richness(Context& ctx) {
    auto witness = first_non_rich_prefix(ctx.theta, 4096);
    if (!witness) return "no violation within horizon 4096 (richness of the projection open)";
    RichnessReport again = is_rich(witness->offending_factor);
    require(!again.rich && again.first_violation == witness->index,
            "witness window does not reproduce the violation");
    return "first prefix without a ups at index " + std::to_string(witness->index);
}

std::string interspersion_axioms(Context& ctx) {
    InterspersionArray array = interspersion_array(ctx.theta, 8, 500);
    AxiomCheck check = verify_axioms(array);
    require(check.ok, check.first_violation
                          ? ("axiom " + std::to_string(check.first_violation->axiom) + ": " +
                             check.first_violation->detail)
                          : "axiom check failed");
    // Swapping the signature transposes the array on the shared region.
    InterspersionArray other = interspersion_array(ctx.theta, 16, 500, SignatureKind::IOfTheta);
    for (std::size_t r = 0; r < array.rows.size(); ++r)
        for (std::size_t c = 0; c < array.rows[r].size(); ++c) {
            if (c < other.rows.size() && r < other.rows[c].size())
                require(array.rows[r][c] == other.rows[c][r],
                        "transpose mismatch at (" + std::to_string(r) + "," +
                            std::to_string(c) + ")");
        }
    return "axioms hold at budget 500; transpose agrees";
}

std::string vector_path_contract(Context& ctx) {
    VectorPath path = vector_path(ctx.theta, ctx.n + 1);
    require(path.word == ctx.lambda.word, "vector coding differs from the gap coding");
    return "vector coding reproduces all " + std::to_string(ctx.n) + " letters";
}

std::string ladder_structure(Context& ctx) {
    std::size_t len = static_cast<std::size_t>(ctx.top_letter) + 2;
    auto ladder = convergent_ladder(ctx.theta, len);
    for (std::size_t d = 0; d < ladder.size(); ++d)
        require(ladder[d].depth == d, "ladder depth is not the index at " + std::to_string(d));
    auto chain = hurwitz_chain(ctx.theta, len);
    for (std::size_t m = 0; m < chain.size(); ++m) {
        const auto& pair = chain[m];
        require(pair.left.den * pair.right.num - pair.left.num * pair.right.den == 1,
                "unimodularity failed at chain index " + std::to_string(m));
        if (m + 1 < chain.size()) {
            const auto& next = chain[m + 1];
            Fraction mediant{pair.left.num + pair.right.num, pair.left.den + pair.right.den};
            bool replaced_left = next.left == mediant && next.right == pair.right;
            bool replaced_right = next.right == mediant && next.left == pair.left;
            require(replaced_left || replaced_right,
                    "chain step " + std::to_string(m) + " is not a mediant move");
            long long d_new = stern_brocot_depth(mediant.num, mediant.den);
            long long d_left = stern_brocot_depth(pair.left.num, pair.left.den);
            long long d_right = stern_brocot_depth(pair.right.num, pair.right.den);
            require(d_new == 1 + std::max(d_left, d_right),
                    "mediant depth rule failed at chain index " + std::to_string(m));
        }
    }
    return "depths are bijective; chain refines by unimodular mediants";
}

}  // namespace

std::vector<CheckResult> run_verification(const ThetaSpec& theta, std::size_t n) {
    if (n < 2) throw OutOfRange("run_verification wants n >= 2");
    Context ctx{theta, n, generate_s(theta, n + 1), lambda_word(theta, n), 0};
    ctx.top_letter = *std::max_element(ctx.lambda.word.begin(), ctx.lambda.word.end());

    const std::vector<std::pair<std::string, Check>> checks = {
        {"first-occurrence-coding", first_occurrence_coding},
        {"gap-correspondence", gap_correspondence},
        {"distinct-differences-are-ladder", distinct_differences_are_ladder},
        {"best-approximation-oracle", differences_pass_best_approx_oracle},
        {"letter-counts", letter_counts},
        {"occurrence-rectangles", occurrence_rectangles},
        {"max-runs", max_runs},
        {"two-letter-factors", two_letter_factors},
        {"richness", richness},
        {"palindrome-alphabet-bound", alphabet_bound},
        {"beatty-partition", beatty_partition},
        {"nuclear-windows", nuclear_windows},
        {"maximal-windows", maximal_windows},
        {"ups-window-agreement", ups_window_agreement},
        {"gamma-projection", gamma_projection},
        {"gamma-triple-identities", gamma_triples},
        {"gamma-palindrome-preservation", gamma_preservation},
        {"gamma-non-richness", gamma_non_richness},
        {"interspersion-axioms", interspersion_axioms},
        {"vector-path", vector_path_contract},
        {"ladder-structure", ladder_structure},
    };

    std::vector<CheckResult> results;
    results.reserve(checks.size());
    for (const auto& [name, check] : checks) {
        try {
            std::string detail = check(ctx);
            results.push_back({name, true, std::move(detail)});
        } catch (const PrecisionExhausted&) {
            throw;
        } catch (const BudgetExceeded&) {
            throw;
        } catch (const Error& e) {
            results.push_back({name, false, e.what()});
        }
    }
    return results;
}

}  // namespace lw
