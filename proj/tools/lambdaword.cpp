// Command-line front end: word generation, structural verification, b-file
// import/export/diff, and CSV/SVG plots.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "lw/bfile.hpp"
#include "lw/cf_chain.hpp"
#include "lw/complement.hpp"
#include "lw/eertree.hpp"
#include "lw/gamma_word.hpp"
#include "lw/interspersion.hpp"
#include "lw/lambda_word.hpp"
#include "lw/theta.hpp"
#include "lw/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string theta = "log:2,3";
    std::size_t n = 20;
    std::string format = "text";
    std::string output;
    std::string word = "lambda";
    std::string bfile_path;
    long long window_index = 1;
    std::size_t rows = 8;
    std::size_t budget = 500;
    std::string signature = "j";
    bool gamma = false;
};

std::ostream& open_output(const Options& opt, std::ofstream& file) {
    if (opt.output.empty()) return std::cout;
    file.open(opt.output);
    if (!file) throw lw::Error("cannot open output file: " + opt.output);
    return file;
}

lw::LetterWord make_word(const Options& opt, const lw::ThetaSpec& theta) {
    if (opt.word == "gamma") return lw::gamma_word(theta, opt.n);
    if (opt.word == "lambda") return lw::lambda_word(theta, opt.n).word;
    throw lw::Error("unknown word kind: " + opt.word);
}

void emit_word(const lw::LetterWord& word, const Options& opt, std::ostream& out) {
    if (opt.format == "text") {
        for (std::size_t m = 0; m < word.size(); ++m)
            out << (m ? " " : "") << word[m];
        out << '\n';
    } else if (opt.format == "csv") {
        out << "n,letter\n";
        for (std::size_t m = 0; m < word.size(); ++m) out << m << ',' << word[m] << '\n';
    } else if (opt.format == "bfile") {
        lw::write_bfile(out, 0, word);
    } else {
        throw lw::Error("unsupported format for words: " + opt.format);
    }
}

void emit_svg(const lw::LetterWord& word, std::ostream& out) {
    const double width = 800, height = 300, margin = 40;
    long long top = 1;
    for (long long v : word) top = std::max(top, v);
    auto x_of = [&](std::size_t m) {
        return margin + (width - 2 * margin) * static_cast<double>(m) /
                            static_cast<double>(word.size());
    };
    auto y_of = [&](long long v) {
        return height - margin -
               (height - 2 * margin) * static_cast<double>(v) / static_cast<double>(top);
    };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "  <line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\""
        << width - margin << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    out << "  <line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin
        << "\" y2=\"" << height - margin << "\" stroke=\"black\"/>\n";
    out << "  <path fill=\"none\" stroke=\"steelblue\" stroke-width=\"1.5\" d=\"";
    for (std::size_t m = 0; m < word.size(); ++m) {
        out << (m == 0 ? "M" : "L") << x_of(m) << ' ' << y_of(word[m]) << ' ';
        out << "L" << x_of(m + 1) << ' ' << y_of(word[m]) << ' ';
    }
    out << "\"/>\n";
    for (long long v = 0; v <= top; ++v)
        out << "  <text x=\"" << margin - 25 << "\" y=\"" << y_of(v) + 4
            << "\" font-size=\"10\">" << v << "</text>\n";
    out << "</svg>\n";
}

const char* side_name(lw::Side s) { return s == lw::Side::Left ? "left" : "right"; }

const char* kind_name(lw::ConvergentKind k) {
    switch (k) {
        case lw::ConvergentKind::Formal: return "formal";
        case lw::ConvergentKind::Principal: return "principal";
        case lw::ConvergentKind::Intermediate: return "intermediate";
    }
    return "?";
}

int run(const std::string& command, const Options& opt) {
    lw::ThetaSpec theta = lw::ThetaSpec::parse(opt.theta);
    std::ofstream file;
    std::ostream& out = open_output(opt, file);

    if (command == "lambda" || command == "gamma") {
        Options local = opt;
        local.word = command;
        emit_word(make_word(local, theta), opt, out);
        return kExitOk;
    }
    if (command == "s-seq") {
        auto elements = lw::generate_s(theta, opt.n);
        if (opt.format == "csv") {
            out << "n,i,j\n";
            for (std::size_t m = 0; m < elements.size(); ++m)
                out << m << ',' << elements[m].i << ',' << elements[m].j << '\n';
        } else {
            for (const auto& e : elements) out << e.i << ' ' << e.j << '\n';
        }
        return kExitOk;
    }
    if (command == "convergents") {
        auto ladder = lw::convergent_ladder(theta, opt.n);
        if (opt.format == "csv") {
            out << "depth,a,b,kind,side\n";
            for (const auto& c : ladder)
                out << c.depth << ',' << c.a << ',' << c.b << ',' << kind_name(c.kind) << ','
                    << side_name(c.side) << '\n';
        } else {
            for (const auto& c : ladder)
                out << c.depth << ": " << c.a << '/' << c.b << ' ' << kind_name(c.kind) << ' '
                    << side_name(c.side) << '\n';
        }
        return kExitOk;
    }
    if (command == "hurwitz") {
        for (const auto& pair : lw::hurwitz_chain(theta, opt.n))
            out << pair.left.num << '/' << pair.left.den << ' ' << pair.right.num << '/'
                << pair.right.den << '\n';
        return kExitOk;
    }
    if (command == "rich") {
        lw::LetterWord word = make_word(opt, theta);
        lw::RichnessReport report = lw::is_rich(word);
        if (report.rich) {
            out << "rich (" << word.size() << " letters)\n";
        } else {
            out << "not rich: first prefix without a uni-occurrent palindromic suffix ends at "
                   "position "
                << *report.first_violation << '\n';
        }
        return kExitOk;
    }
    if (command == "ups") {
        lw::LetterWord word = make_word(opt, theta);
        for (std::size_t k = 1; k <= word.size(); ++k) {
            lw::UpsReport report = lw::ups_of_prefix(word, k);
            out << k << ':';
            if (report.ups) {
                for (long long v : *report.ups) out << ' ' << v;
            } else {
                out << " (none)";
            }
            out << '\n';
        }
        return kExitOk;
    }
    if (command == "nuclear") {
        lw::MaximalWindow window = lw::maximal_window(theta, opt.window_index);
        out << "K=" << window.K << " kind="
            << (window.core.kind == lw::WindowKind::Minus ? "minus" : "plus")
            << " k=" << window.core.k << " bound=" << window.core.bound_a << "+"
            << window.core.bound_b << "t\n";
        auto print_elems = [&out](const char* label, const std::vector<lw::SElement>& es) {
            out << label << ':';
            for (const auto& e : es) out << " (" << e.i << ',' << e.j << ')';
            out << '\n';
        };
        print_elems("core", window.core.elements);
        print_elems("window", window.elements);
        out << "delta-core:";
        for (long long v : window.core.delta()) out << ' ' << v;
        out << "\ndelta:";
        for (long long v : window.delta()) out << ' ' << v;
        out << '\n';
        return kExitOk;
    }
    if (command == "ups-window") {
        lw::UpsWindow window = lw::ups_window(theta, opt.n);
        out << "K=" << window.K << " ups:";
        for (long long v : window.delta) out << ' ' << v;
        out << '\n';
        return kExitOk;
    }
    if (command == "interspersion") {
        lw::SignatureKind which = opt.signature == "i" ? lw::SignatureKind::IOfTheta
                                                       : lw::SignatureKind::JOfThetaInverse;
        lw::InterspersionArray array = lw::interspersion_array(theta, opt.rows, opt.budget, which);
        for (const auto& row : array.rows) {
            for (std::size_t c = 0; c < row.size(); ++c)
                out << (c ? (opt.format == "csv" ? "," : " ") : "") << row[c];
            out << '\n';
        }
        return kExitOk;
    }
    if (command == "plot") {
        lw::LetterWord word = make_word(opt, theta);
        if (opt.format == "svg") {
            emit_svg(word, out);
        } else {
            out << "n,letter\n";
            for (std::size_t m = 0; m < word.size(); ++m) out << m << ',' << word[m] << '\n';
        }
        return kExitOk;
    }
    if (command == "oeis-diff") {
        lw::BFileSequence reference = lw::read_bfile(opt.bfile_path);
        Options local = opt;
        if (local.n == 0) local.n = reference.values.size();
        lw::BFileSequence generated{0, make_word(local, theta)};
        lw::SequenceDiff diff = lw::diff_sequences(generated, reference);
        if (diff.compared == 0) {
            out << "no overlapping indices\n";
            return kExitVerificationFailure;
        }
        if (diff.first_mismatch_index) {
            long long idx = *diff.first_mismatch_index;
            out << "mismatch at index " << idx << ": generated "
                << generated.values[static_cast<std::size_t>(idx - generated.first_index)]
                << ", reference "
                << reference.values[static_cast<std::size_t>(idx - reference.first_index)]
                << '\n';
            return kExitVerificationFailure;
        }
        out << "match over " << diff.compared << " terms\n";
        return kExitOk;
    }
    if (command == "verify") {
        auto results = lw::run_verification(theta, opt.n);
        bool all = true;
        for (const auto& r : results) {
            out << (r.passed ? "PASS" : "FAIL") << "  " << r.name;
            if (!r.detail.empty()) out << "  (" << r.detail << ")";
            out << '\n';
            all = all && r.passed;
        }
        out << (all ? "all checks passed" : "some checks FAILED") << " for theta="
            << theta.name() << " n=" << opt.n << '\n';
        return all ? kExitOk : kExitVerificationFailure;
    }
    throw lw::Error("unknown command: " + command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generator and verifier for gap-coded words of i + j*theta"};
    app.require_subcommand(1);

    Options opt;
    std::string command;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--theta", opt.theta,
                        "theta spec: phi | pi-2 | log:B,A | cf:t0,t1,... | periodic:pre/per | "
                        "cffile:PATH");
        sub->add_option("-o,--output", opt.output, "write to a file instead of stdout");
        sub->callback([&command, sub] { command = sub->get_name(); });
        return sub;
    };
    auto add_n = [&](CLI::App* sub, const char* what) {
        sub->add_option("--n", opt.n, what)->check(CLI::PositiveNumber);
        return sub;
    };
    auto add_format = [&](CLI::App* sub, const char* formats) {
        sub->add_option("--format", opt.format, formats);
        return sub;
    };

    add_format(add_n(add_common(app.add_subcommand("lambda", "Lambda word prefix")),
                     "number of letters"),
               "text|csv|bfile");
    add_format(add_n(add_common(app.add_subcommand("gamma", "Gamma word prefix")),
                     "number of letters"),
               "text|csv|bfile");
    add_format(add_n(add_common(app.add_subcommand("s-seq", "sorted i + j*theta elements")),
                     "number of elements"),
               "text|csv");
    add_format(add_n(add_common(app.add_subcommand("convergents", "convergent ladder")),
                     "number of rungs"),
               "text|csv");
    add_n(add_common(app.add_subcommand("hurwitz", "best left-right approximation pairs")),
          "number of pairs");
    {
        auto* sub = add_n(add_common(app.add_subcommand("rich", "richness of a word prefix")),
                          "prefix length");
        sub->add_option("--word", opt.word, "lambda|gamma");
    }
    {
        auto* sub = add_n(add_common(app.add_subcommand(
                              "ups", "uni-occurrent palindromic suffixes of all prefixes")),
                          "prefix length");
        sub->add_option("--word", opt.word, "lambda|gamma");
    }
    add_common(app.add_subcommand("nuclear", "nuclear and maximal windows at an index"))
        ->add_option("--K", opt.window_index, "window index")
        ->check(CLI::PositiveNumber);
    add_n(add_common(app.add_subcommand("ups-window",
                                        "palindromic window construction at element n")),
          "element index");
    {
        auto* sub = add_common(app.add_subcommand("interspersion", "interspersion array"));
        sub->add_option("--rows", opt.rows, "rows to materialize")->check(CLI::PositiveNumber);
        sub->add_option("--budget", opt.budget, "elements to generate")
            ->check(CLI::PositiveNumber);
        sub->add_option("--signature", opt.signature, "i|j (default j)");
        add_format(sub, "text|csv");
    }
    {
        auto* sub = add_n(add_common(app.add_subcommand("plot", "step plot of a word prefix")),
                          "number of letters");
        sub->add_option("--word", opt.word, "lambda|gamma");
        add_format(sub, "csv|svg");
    }
    {
        auto* sub = add_common(app.add_subcommand("oeis-diff",
                                                  "compare a generated word against a b-file"));
        sub->add_option("--bfile", opt.bfile_path, "reference b-file")->required();
        sub->add_option("--n", opt.n, "terms to generate (default: reference length)");
        sub->add_option("--word", opt.word, "lambda|gamma");
    }
    add_n(add_common(app.add_subcommand("verify", "run the structural check suite")),
          "prefix length");

    opt.n = 0;  // oeis-diff defaults to the reference length
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (opt.n == 0) {
        if (command != "oeis-diff") opt.n = 20;
    }

    try {
        return run(command, opt);
    } catch (const lw::PrecisionExhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << '\n';
        return kExitUsage;
    } catch (const lw::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitUsage;
    } catch (const lw::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
