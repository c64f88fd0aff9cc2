// cutgen: vertex enumeration for CUT(n) and 1-CUT(n) from the closed form,
// with a brute-force cross-check (verify), alternating-cycle tables (sn) and
// scaled/residual CSV export (analyze). Data goes to stdout (or --out),
// diagnostics to stderr. Exit codes: 0 ok, 1 invariant/runtime failure,
// 2 usage error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cutgen/altcycle.hpp"
#include "cutgen/analysis.hpp"
#include "cutgen/bitcodec.hpp"
#include "cutgen/lambda_map.hpp"
#include "cutgen/vertexgen.hpp"

namespace {

using cutgen::Code;

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitUsage = 2;

Code parse_code(const std::string& text) {
    try {
        return Code(text);
    } catch (const std::exception&) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
}

std::pair<Code, Code> parse_range(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == text.size())
        throw std::invalid_argument("range must have the form lo:hi");
    return {parse_code(text.substr(0, colon)), parse_code(text.substr(colon + 1))};
}

// Output sink: stdout by default, a file when --out is given.
class OutputTarget {
public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
            stream_ = &file_;
        }
    }
    std::ostream& stream() { return *stream_; }
    void finish() {
        stream_->flush();
        if (!*stream_) throw std::runtime_error("write failed; output is incomplete");
    }

private:
    std::ofstream file_;
    std::ostream* stream_ = &std::cout;
};

struct GenOptions {
    int n = 0;
    std::string polytope = "one-cut";
    std::string format = "dec";
    std::string range;
    std::string out;
};

int run_gen(const GenOptions& opt) {
    cutgen::GeneratorParams params = cutgen::GeneratorParams::full(opt.n);
    if (!opt.range.empty()) {
        auto [lo, hi] = parse_range(opt.range);
        params.k_lo = std::move(lo);
        params.k_hi = std::move(hi);
    }
    const auto polytope = opt.polytope == "cut" ? cutgen::Polytope::Cut : cutgen::Polytope::OneCut;
    const std::size_t m = cutgen::choose2(static_cast<std::size_t>(opt.n));
    const bool with_coords = opt.format != "dec";

    OutputTarget target(opt.out);
    std::ostream& out = target.stream();

    if (opt.format == "ext") {
        out << "V-representation\nbegin\n"
            << (params.k_hi - params.k_lo + 1) << ' ' << m + 1 << " integer\n";
    } else if (opt.format == "csv") {
        out << "n,k,code,coords\n";
    }

    cutgen::vertices_stream(params, polytope, [&](const cutgen::VertexRecord& rec) {
        if (opt.format == "dec") {
            out << rec.code << '\n';
        } else if (opt.format == "bin") {
            out << rec.coords->str() << '\n';
        } else if (opt.format == "coords") {
            const auto& bits = rec.coords->bits();
            for (std::size_t i = 0; i < bits.size(); ++i) {
                if (i) out << ' ';
                out << static_cast<int>(bits[i]);
            }
            out << '\n';
        } else if (opt.format == "csv") {
            out << rec.n << ',' << rec.k << ',' << rec.code << ',' << rec.coords->str() << '\n';
        } else {  // ext
            out << 1;
            for (std::uint8_t b : rec.coords->bits()) out << ' ' << static_cast<int>(b);
            out << '\n';
        }
    }, with_coords);

    if (opt.format == "ext") out << "end\n";
    target.finish();
    return kExitOk;
}

struct VerifyOptions {
    int n_max = 8;
};

int verify_fail(int n, const Code& k, const std::string& check, const Code& expected, const Code& got) {
    std::cerr << "FAIL n=" << n << " k=" << k << ' ' << check << ": expected " << expected
              << ", got " << got << '\n';
    return kExitInvariant;
}

// Cross-checks the closed form against the recursion and the brute-force
// enumeration for every vertex, plus ordering, bounds, boundary values and
// the CUT(n) complement identity.
int run_verify(const VerifyOptions& opt) {
    if (opt.n_max < 2 || opt.n_max > cutgen::kOracleCap)
        throw std::invalid_argument("--n-max must lie in [2, " + std::to_string(cutgen::kOracleCap) + "]");
    Code total = 0;
    for (int n = 2; n <= opt.n_max; ++n) {
        const auto oracle = cutgen::oracle_vertices(n);
        const std::size_t e = cutgen::choose2(static_cast<std::size_t>(n - 1));
        const Code top = cutgen::pow2(cutgen::choose2(static_cast<std::size_t>(n))) - 1;
        Code prev = -1;
        for (const auto& rec : oracle) {
            const Code closed = cutgen::vertex_code_closed(n, rec.k);
            if (closed != rec.code) return verify_fail(n, rec.k, "closed form", rec.code, closed);
            const Code recursive = cutgen::vertex_code_recursive(n, rec.k);
            if (recursive != rec.code) return verify_fail(n, rec.k, "recursion", rec.code, recursive);
            if (closed <= prev) return verify_fail(n, rec.k, "monotonicity", prev + 1, closed);
            const Code lo = (rec.k - 1) << e;
            const Code hi = rec.k << e;
            if (closed < lo || closed >= hi) return verify_fail(n, rec.k, "almost-linear bound", lo, closed);
            const Code sum = closed + cutgen::cut_vertex_code(n, rec.k);
            if (sum != top) return verify_fail(n, rec.k, "complement identity", top, sum);
            prev = closed;
        }
        if (oracle.front().code != cutgen::pow2(e) - 1)
            return verify_fail(n, 1, "first-vertex identity", cutgen::pow2(e) - 1, oracle.front().code);
        if (oracle.back().code != top)
            return verify_fail(n, oracle.back().k, "last-vertex identity", top, oracle.back().code);
        std::cout << "n=" << n << ": " << oracle.size() << " vertices ok\n";
        total += oracle.size();
    }
    std::cout << "verified " << total << " vertices for n=2.." << opt.n_max
              << "; all invariants hold\n";
    return kExitOk;
}

struct SnOptions {
    std::vector<std::string> amplitudes;
    std::uint64_t k_max = 16;
    std::string format = "text";
    std::string out;
};

int run_sn(const SnOptions& opt) {
    if (opt.k_max < 1) throw std::invalid_argument("-k must be >= 1");
    std::vector<Code> amps;
    for (const auto& text : opt.amplitudes) {
        Code amp = parse_code(text);
        if (amp < 2) throw std::invalid_argument("-N entries must be >= 2");
        amps.push_back(std::move(amp));
    }

    OutputTarget target(opt.out);
    std::ostream& out = target.stream();

    if (opt.format == "csv") {
        out << 'N';
        for (std::uint64_t k = 1; k <= opt.k_max; ++k) out << ',' << k;
        out << '\n';
        for (const Code& amp : amps) {
            out << amp;
            for (std::uint64_t k = 1; k <= opt.k_max; ++k) out << ',' << cutgen::alt_cycle(amp, k);
            out << '\n';
        }
    } else {
        std::size_t label_width = 1;  // column of S^N labels
        std::size_t cell_width = std::to_string(opt.k_max).size();
        for (const Code& amp : amps) {
            label_width = std::max(label_width, amp.str().size() + 2);
            cell_width = std::max(cell_width, amp.str().size());
        }
        out << std::setw(static_cast<int>(label_width)) << 'k';
        for (std::uint64_t k = 1; k <= opt.k_max; ++k)
            out << ' ' << std::setw(static_cast<int>(cell_width)) << k;
        out << '\n';
        for (const Code& amp : amps) {
            out << std::setw(static_cast<int>(label_width)) << ("S^" + amp.str());
            for (std::uint64_t k = 1; k <= opt.k_max; ++k)
                out << ' ' << std::setw(static_cast<int>(cell_width)) << cutgen::alt_cycle(amp, k);
            out << '\n';
        }
    }
    target.finish();
    return kExitOk;
}

struct AnalyzeOptions {
    int n = 0;
    int precision = cutgen::kDefaultPrecision;
    std::string out;
};

int run_analyze(const AnalyzeOptions& opt) {
    OutputTarget target(opt.out);
    cutgen::write_residual_csv(target.stream(), opt.n, opt.precision);
    target.finish();

    const auto report = cutgen::check_bounds(opt.n);
    std::cerr << "bounds " << (report.pass ? "pass" : "FAIL") << ": n=" << report.n << ", "
              << report.rows << " rows, max |residual| = "
              << cutgen::dyadic_decimal(report.max_abs_residual_num, report.residual_den_exp,
                                        opt.precision)
              << " at k=" << report.argmax_k << '\n';
    return report.pass ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closed-form vertex enumeration for CUT(n) and 1-CUT(n)"};
    app.require_subcommand(1);

    GenOptions gen;
    auto* gen_cmd = app.add_subcommand("gen", "Stream vertices in ascending k");
    gen_cmd->add_option("-n", gen.n, "complete-graph size n (vertices live in dimension n(n-1)/2)")
        ->required();
    gen_cmd->add_option("--polytope", gen.polytope, "which polytope to enumerate")
        ->check(CLI::IsMember({"one-cut", "cut"}));
    gen_cmd->add_option("--format", gen.format, "output format")
        ->check(CLI::IsMember({"dec", "bin", "coords", "ext", "csv"}));
    gen_cmd->add_option("--range", gen.range, "1-based inclusive vertex range lo:hi");
    gen_cmd->add_option("--out", gen.out, "write to PATH instead of stdout");

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check the generator routes");
    verify_cmd->add_option("--n-max", verify.n_max, "check every n from 2 up to this value");

    SnOptions sn;
    auto* sn_cmd = app.add_subcommand("sn", "Print alternating cycle function tables");
    sn_cmd->add_option("-N", sn.amplitudes, "comma-separated amplitudes")->required()->delimiter(',');
    sn_cmd->add_option("-k", sn.k_max, "largest argument to tabulate");
    sn_cmd->add_option("--format", sn.format, "table format")->check(CLI::IsMember({"text", "csv"}));
    sn_cmd->add_option("--out", sn.out, "write to PATH instead of stdout");

    AnalyzeOptions analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Export scaled vertices and residuals as CSV");
    analyze_cmd->add_option("-n", analyze.n, "complete-graph size n")->required();
    analyze_cmd->add_option("--precision", analyze.precision, "significant digits for decimals")
        ->check(CLI::PositiveNumber);
    analyze_cmd->add_option("--out", analyze.out, "write to PATH instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (verify_cmd->parsed()) return run_verify(verify);
        if (sn_cmd->parsed()) return run_sn(sn);
        if (analyze_cmd->parsed()) return run_analyze(analyze);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitOk;
}
