#include "kstab/cli.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "kstab/certificate.hpp"
#include "kstab/error.hpp"

namespace kstab::cli {

namespace {

/// Failure that maps onto a specific exit code with a one-line message.
struct CommandFailure {
    int code;
    std::string message;
};

std::string trim(std::string_view text) {
    auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    auto end = text.find_last_not_of(" \t\r");
    return std::string(text.substr(begin, end - begin + 1));
}

std::vector<long> parse_weights(const std::string& text, const char* flag) {
    std::vector<long> out;
    std::stringstream stream(text);
    std::string token;
    while (std::getline(stream, token, ',')) {
        token = trim(token);
        try {
            std::size_t used = 0;
            long value = std::stol(token, &used);
            if (used != token.size()) throw std::invalid_argument(token);
            out.push_back(value);
        } catch (const std::exception&) {
            throw CommandFailure{kUsageError, std::string("invalid weight '") + token + "' in " + flag};
        }
    }
    return out;
}

std::string join(const std::vector<long>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

std::string show(const Rational& value, bool decimal) {
    std::string out = value.to_string();
    if (decimal) out += " (~" + value.to_decimal_string(6) + ", approximate)";
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CommandFailure{kUsageError, "cannot read '" + path + "'"};
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

NormalForm make_normal_form(unsigned m, unsigned n, unsigned r) {
    try {
        return NormalForm(AmbientShape(m, n), r);
    } catch (const Error& err) {
        throw CommandFailure{kUsageError, err.what()};
    }
}

Polarization make_polarization(unsigned d, unsigned e) {
    try {
        return Polarization(d, e);
    } catch (const Error& err) {
        throw CommandFailure{kUsageError, err.what()};
    }
}

// ---------------------------------------------------------------------------

struct AnalyzeOptions {
    unsigned m = 0;
    unsigned n = 0;
    std::optional<unsigned> r;
    std::string matrix;
};

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err) {
    std::optional<NormalForm> nf;
    if (!opt.matrix.empty()) {
        try {
            nf = normalize(parse_matrix_csv(read_file(opt.matrix)));
        } catch (const Error& e) {
            throw CommandFailure{kUsageError, e.what()};
        }
    } else {
        if (opt.m == 0 || opt.n == 0 || !opt.r) {
            throw CommandFailure{kUsageError, "analyze needs --matrix FILE or all of --m, --n, --r"};
        }
        nf = make_normal_form(opt.m, opt.n, *opt.r);
    }

    const bool normal = is_normal(*nf);
    const bool smooth = is_smooth(*nf);
    out << "m: " << nf->shape.m << "\n";
    out << "n: " << nf->shape.n << "\n";
    out << "r: " << nf->r << "\n";
    out << "normal: " << (normal ? "yes" : "no (r=0)");
    out << ", smooth: " << (smooth ? "yes" : "no");
    out << ", theorem applies: ";
    if (!normal) {
        out << "no (not normal)";
        err << "warning: X is not normal (r=0); the instability method does not apply\n";
    } else if (!instability_hypothesis_holds(*nf)) {
        out << "no (m=n, smooth)";
    } else {
        out << "yes";
    }
    out << "\n";
    return kSuccess;
}

// ---------------------------------------------------------------------------

struct DfOptions {
    unsigned m = 0;
    unsigned n = 0;
    std::optional<unsigned> r;
    unsigned d = 0;
    unsigned e = 0;
    std::string u;
    std::string v;
    bool decimal = false;
};

int cmd_df(const DfOptions& opt, std::ostream& out, std::ostream&) {
    const NormalForm nf = make_normal_form(opt.m, opt.n, opt.r.value_or(std::min(opt.m, opt.n)));
    const Polarization pol = make_polarization(opt.d, opt.e);
    if (!is_normal(nf)) throw CommandFailure{kMathFailure, "not normal: r=0"};

    const OneParameterSubgroup lambda(parse_weights(opt.u, "--u"), parse_weights(opt.v, "--v"));
    if (!lambda.fits(nf.shape)) {
        throw CommandFailure{kUsageError, "expected " + std::to_string(nf.shape.x_count()) + " weights for --u and " +
                                              std::to_string(nf.shape.y_count()) + " for --v"};
    }
    if (auto violation = lambda.special_linear_violation()) {
        throw CommandFailure{kMathFailure, "SL condition violated: " + *violation};
    }
    long alpha = 0;
    try {
        alpha = semiinvariant_alpha(nf, lambda).alpha;
    } catch (const NotPreserved& e) {
        throw CommandFailure{kMathFailure, e.what()};
    }

    const ExpansionCoefficients c = expansion(nf.shape, pol, lambda, alpha);
    const DFValue general = df_general(c);
    const DFValue closed = df_closed(nf.shape, pol, alpha);
    out << "alpha=" << alpha << "\n";
    out << "a0=" << show(c.a0, opt.decimal) << "\n";
    out << "a1=" << show(c.a1, opt.decimal) << "\n";
    out << "b0=" << show(c.b0, opt.decimal) << "\n";
    out << "b1=" << show(c.b1, opt.decimal) << "\n";
    out << "DF(definition)=" << show(general.value, opt.decimal) << "\n";
    out << "DF(closed form)=" << show(closed.value, opt.decimal) << "\n";
    if (general != closed) {
        out << "alpha=" << alpha << " DF=" << general.value << " (paths DISAGREE)\n";
        return kMathFailure;
    }
    out << "alpha=" << alpha << " DF=" << general.value << " (paths agree)\n";
    return kSuccess;
}

// ---------------------------------------------------------------------------

struct DestabilizeOptions {
    unsigned m = 0;
    unsigned n = 0;
    unsigned r = 0;
    unsigned d = 0;
    unsigned e = 0;
    std::string out_path;
};

Certificate certify(const NormalForm& nf, const Polarization& pol) {
    InstabilityDecision decision;
    try {
        decision = decide_instability(nf, pol);
    } catch (const NotNormal&) {
        throw CommandFailure{kMathFailure, "not normal: r=0"};
    }
    if (std::holds_alternative<Inconclusive>(decision)) {
        throw CommandFailure{kMathFailure, "inconclusive: m=n and X smooth"};
    }
    return std::get<Certificate>(std::move(decision));
}

int cmd_destabilize(const DestabilizeOptions& opt, std::ostream& out, std::ostream& err) {
    const NormalForm nf = make_normal_form(opt.m, opt.n, opt.r);
    const Polarization pol = make_polarization(opt.d, opt.e);
    const Certificate cert = certify(nf, pol);
    const std::string text = emit(cert);
    if (opt.out_path.empty()) {
        out << text;
        return kSuccess;
    }
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file || !(file << text)) throw CommandFailure{kUsageError, "cannot write '" + opt.out_path + "'"};
    out << "DF=" << cert.df << "\n";
    out << "lambda: u=" << join(cert.lambda_u) << " v=" << join(cert.lambda_v) << "\n";
    out << "factor_swapped: " << (cert.factor_swapped ? "true" : "false") << "\n";
    err << "wrote " << opt.out_path << "\n";
    return kSuccess;
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
    const std::string text = read_file(path);
    Verdict verdict;
    try {
        verdict = verify(std::string_view(text));
    } catch (const ParseError& e) {
        throw CommandFailure{kUsageError, e.what()};
    }
    for (const auto& note : verdict.notes) err << "note: " << note << "\n";
    if (verdict.ok()) {
        out << "OK\n";
        return kSuccess;
    }
    for (const auto& failure : verdict.failures) {
        out << "FAIL " << failure.check << ": expected " << failure.expected << ", found " << failure.found << "\n";
    }
    return kMathFailure;
}

// ---------------------------------------------------------------------------

struct SweepOptions {
    unsigned m = 0;
    unsigned n = 0;
    unsigned r = 0;
    unsigned d_max = 0;
    unsigned e_max = 0;
    std::size_t parallel = 1;
    bool decimal = false;
};

int cmd_sweep(const SweepOptions& opt, std::ostream& out, std::ostream&) {
    const NormalForm nf = make_normal_form(opt.m, opt.n, opt.r);
    if (opt.d_max == 0 || opt.e_max == 0) throw CommandFailure{kUsageError, "--dmax and --emax must be >= 1"};
    if (!is_normal(nf)) throw CommandFailure{kMathFailure, "not normal: r=0"};
    if (!instability_hypothesis_holds(nf)) throw CommandFailure{kMathFailure, "inconclusive: m=n and X smooth"};

    const auto cells = sweep({nf, opt.d_max, opt.e_max}, opt.parallel);

    std::vector<std::string> texts;
    std::size_t width = 3;
    for (const auto& cell : cells) {
        texts.push_back(show(cell.df, opt.decimal));
        width = std::max(width, texts.back().size());
    }
    width += 2;

    out << "DF of the destabilizer for m=" << nf.shape.m << " n=" << nf.shape.n << " r=" << nf.r
        << " (rows d, columns e)\n";
    auto emit_row = [&](const std::string& label, const std::vector<std::string>& entries) {
        std::ostringstream row;
        row << std::left << std::setw(static_cast<int>(width)) << label;
        for (const auto& entry : entries) row << std::setw(static_cast<int>(width)) << entry;
        std::string line = row.str();
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << "\n";
    };
    std::vector<std::string> header;
    for (unsigned e = 1; e <= opt.e_max; ++e) header.push_back(std::to_string(e));
    emit_row("d\\e", header);
    for (unsigned d = 1; d <= opt.d_max; ++d) {
        emit_row(std::to_string(d), std::vector<std::string>(texts.begin() + (d - 1) * opt.e_max,
                                                             texts.begin() + d * opt.e_max));
    }
    const bool all_negative =
        std::all_of(cells.begin(), cells.end(), [](const SweepCell& c) { return c.df.sign() < 0; });
    out << "all cells negative: " << (all_negative ? "yes" : "no") << "\n";
    return all_negative ? kSuccess : kMathFailure;
}

}  // namespace

std::vector<SweepCell> sweep(const SweepRequest& request, std::size_t workers) {
    std::vector<SweepCell> cells;
    for (unsigned d = 1; d <= request.d_max; ++d) {
        for (unsigned e = 1; e <= request.e_max; ++e) cells.push_back({d, e, Rational()});
    }
    std::vector<std::exception_ptr> errors(cells.size());
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) {
            try {
                auto decision = decide_instability(request.nf, Polarization(cells[i].d, cells[i].e));
                if (auto* inconclusive = std::get_if<Inconclusive>(&decision)) {
                    throw MethodInapplicable(inconclusive->reason);
                }
                cells[i].df = std::get<Certificate>(decision).df;
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const std::size_t count = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(cells.size(), 1));
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < count; ++t) pool.emplace_back(work);
        work();
    }
    for (const auto& error : errors) {
        if (error) std::rethrow_exception(error);
    }
    return cells;
}

BilinearForm parse_matrix_csv(std::string_view text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream stream{std::string(text)};
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(stream, line)) {
        ++line_number;
        const std::string content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        std::vector<Rational> row;
        std::stringstream cells(content);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            try {
                row.push_back(Rational::parse(trim(cell)));
            } catch (const ParseError& err) {
                throw ParseError("line " + std::to_string(line_number) + ": " + err.what());
            }
        }
        if (content.back() == ',') throw ParseError("line " + std::to_string(line_number) + ": trailing comma");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError("matrix file is empty");
    return BilinearForm(std::move(rows));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Donaldson-Futaki invariants and K-instability certificates for (1,1) hypersurfaces in P^m x P^n",
                 "kstab"};
    app.require_subcommand(1);

    AnalyzeOptions analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "Normal-form rank, smoothness and normality of a (1,1) hypersurface");
    analyze_cmd->add_option("--m", analyze.m, "Dimension of the first factor P^m");
    analyze_cmd->add_option("--n", analyze.n, "Dimension of the second factor P^n");
    analyze_cmd->add_option("--r", analyze.r, "Normal form f = x0*y0 + ... + xr*yr");
    analyze_cmd->add_option("--matrix", analyze.matrix, "CSV coefficient matrix (rows x_i, columns y_j)");

    DfOptions df;
    auto* df_cmd = app.add_subcommand("df", "Donaldson-Futaki invariant of the product test configuration of a subgroup");
    df_cmd->add_option("--m", df.m, "Dimension of P^m")->required();
    df_cmd->add_option("--n", df.n, "Dimension of P^n")->required();
    df_cmd->add_option("--r", df.r, "Normal form index (default min(m, n), smooth)");
    df_cmd->add_option("--d", df.d, "Polarization degree on P^m")->required();
    df_cmd->add_option("--e", df.e, "Polarization degree on P^n")->required();
    df_cmd->add_option("--u", df.u, "Comma-separated weights on x_0..x_m")->required()->allow_extra_args(false);
    df_cmd->add_option("--v", df.v, "Comma-separated weights on y_0..y_n")->required()->allow_extra_args(false);
    df_cmd->add_flag("--decimal", df.decimal, "Append approximate decimal values");

    DestabilizeOptions destab;
    auto* destab_cmd = app.add_subcommand("destabilize", "Build the destabilizing subgroup and emit a certificate");
    destab_cmd->add_option("--m", destab.m, "Dimension of P^m")->required();
    destab_cmd->add_option("--n", destab.n, "Dimension of P^n")->required();
    destab_cmd->add_option("--r", destab.r, "Normal form index")->required();
    destab_cmd->add_option("--d", destab.d, "Polarization degree on P^m")->required();
    destab_cmd->add_option("--e", destab.e, "Polarization degree on P^n")->required();
    destab_cmd->add_option("--out", destab.out_path, "Certificate file (default: standard output)");

    std::string verify_path;
    auto* verify_cmd = app.add_subcommand("verify", "Re-derive and check a certificate");
    verify_cmd->add_option("certificate", verify_path, "Certificate JSON file")->required();

    SweepOptions sweep_opt;
    auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate DF over polarizations O(d, e)");
    sweep_cmd->add_option("--m", sweep_opt.m, "Dimension of P^m")->required();
    sweep_cmd->add_option("--n", sweep_opt.n, "Dimension of P^n")->required();
    sweep_cmd->add_option("--r", sweep_opt.r, "Normal form index")->required();
    sweep_cmd->add_option("--dmax", sweep_opt.d_max, "Largest d")->required();
    sweep_cmd->add_option("--emax", sweep_opt.e_max, "Largest e")->required();
    sweep_cmd->add_option("--parallel", sweep_opt.parallel, "Worker threads")->check(CLI::PositiveNumber);
    sweep_cmd->add_flag("--decimal", sweep_opt.decimal, "Append approximate decimal values");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsageError;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(analyze, out, err);
        if (*df_cmd) return cmd_df(df, out, err);
        if (*destab_cmd) return cmd_destabilize(destab, out, err);
        if (*verify_cmd) return cmd_verify(verify_path, out, err);
        if (*sweep_cmd) return cmd_sweep(sweep_opt, out, err);
    } catch (const CommandFailure& failure) {
        err << failure.message << "\n";
        return failure.code;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kMathFailure;
    }
    return kUsageError;
}

}  // namespace kstab::cli
