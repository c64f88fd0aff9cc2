#include "cutgen/analysis.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

#include "cutgen/vertexgen.hpp"

namespace cutgen {

namespace {

template <typename RowFn>
void for_each_row(int n, int cap, RowFn&& fn) {
    if (n < 2) throw std::invalid_argument("analysis: n must be >= 2");
    if (n > cap) throw std::invalid_argument("analysis: n exceeds the materialization cap");
    const auto e = static_cast<unsigned>(choose2(static_cast<std::size_t>(n - 1)));
    GeneratorParams params = GeneratorParams::full(n);
    vertices_stream(params, Polytope::OneCut, [&](const VertexRecord& rec) {
        ResidualRow row;
        row.k = rec.k;
        row.code = rec.code;
        row.scaled_num = rec.code;
        row.scaled_den_exp = e;
        // scaled - (k - 1/2) over the common denominator 2^{e+1}
        row.residual_num = 2 * rec.code - ((2 * rec.k - 1) << e);
        row.residual_den_exp = e + 1;
        fn(std::move(row));
    });
}

}  // namespace

std::vector<ResidualRow> residual_table(int n, int cap) {
    std::vector<ResidualRow> rows;
    if (n >= 2 && n <= cap && n < 60) rows.reserve(static_cast<std::size_t>(1) << (n - 1));
    for_each_row(n, cap, [&](ResidualRow row) { rows.push_back(std::move(row)); });
    return rows;
}

BoundsReport check_bounds(int n, int cap) {
    BoundsReport report;
    report.n = n;
    report.pass = true;
    report.max_abs_residual_num = 0;
    report.argmax_k = 0;
    for_each_row(n, cap, [&](const ResidualRow& row) {
        const Code lo = (row.k - 1) << row.scaled_den_exp;
        const Code hi = row.k << row.scaled_den_exp;
        if (row.code < lo || row.code >= hi) report.pass = false;
        report.residual_den_exp = row.residual_den_exp;
        const Code a = boost::multiprecision::abs(row.residual_num);
        if (a > report.max_abs_residual_num) {
            report.max_abs_residual_num = a;
            report.argmax_k = row.k;
        }
        ++report.rows;
    });
    return report;
}

std::string dyadic_decimal(const Code& num, unsigned den_exp, int sig_digits) {
    if (sig_digits < 1) throw std::invalid_argument("dyadic_decimal: need at least 1 significant digit");
    if (num == 0) return "0";
    const bool negative = num < 0;
    // num / 2^e == num * 5^e / 10^e: an integer string with an implicit
    // decimal point den_exp places from the right.
    Code scaled = boost::multiprecision::abs(num) * boost::multiprecision::pow(Code(5), den_exp);
    std::string digits = scaled.str();
    if (digits.size() > static_cast<std::size_t>(sig_digits)) {
        const auto drop = static_cast<unsigned>(digits.size() - static_cast<std::size_t>(sig_digits));
        const Code p = boost::multiprecision::pow(Code(10), drop);
        Code q = scaled / p;
        if (2 * (scaled % p) >= p) ++q;  // half away from zero
        digits = Code(q * p).str();      // may gain a digit on carry
    }
    std::string out;
    if (digits.size() > den_exp) {
        out = digits.substr(0, digits.size() - den_exp);
        std::string frac = digits.substr(digits.size() - den_exp);
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        if (!frac.empty()) out += '.' + frac;
    } else {
        std::string frac = std::string(den_exp - digits.size(), '0') + digits;
        while (!frac.empty() && frac.back() == '0') frac.pop_back();
        out = "0." + frac;
    }
    return negative ? "-" + out : out;
}

void write_residual_csv(std::ostream& out, int n, int precision, int cap) {
    out << "n,k,v,scaled_num,scaled_den_exp,scaled_decimal,residual_decimal\n";
    for_each_row(n, cap, [&](const ResidualRow& row) {
        out << n << ',' << row.k << ',' << row.code << ',' << row.scaled_num << ','
            << row.scaled_den_exp << ','
            << dyadic_decimal(row.scaled_num, row.scaled_den_exp, precision) << ','
            << dyadic_decimal(row.residual_num, row.residual_den_exp, precision) << '\n';
    });
}

}  // namespace cutgen
