// ccdim: covering dimension of linear codes from the command line.
//
//   ccdim analyze FILE [--json] [--charpoly] [--swd R] [--witness]
//   ccdim construct FAMILY [--q Q] [--k K] [--n N] [--m M] [-o PATH] [--verify]
//   ccdim search --q Q --k-max K --n-max N [--simple] [--workers W] [--report PATH]
//   ccdim verify-paper [--only ID]... [--list] [--seed S]
//
// Exit codes: 0 success, 1 parse or usage error, 2 internal cross-check
// mismatch, 3 enumeration cap exceeded, 4 search found a VIOLATION.
// An interrupted search writes its partial report and exits with 130.

#include <atomic>
#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <ccdim/ccdim.hpp>

namespace {

using namespace ccdim;

enum Exit : int { kOk = 0, kParse = 1, kCrossCheck = 2, kCap = 3, kViolation = 4, kInterrupted = 130 };

std::atomic<bool> g_stop{false};

extern "C" void on_sigint(int) { g_stop = true; }

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::string matrix_text(const Matrix& m, const std::string& indent = "  ") {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += indent;
        for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? " " : "") + std::to_string(m(i, j));
        out += '\n';
    }
    return out;
}

// ---- analyze ---------------------------------------------------------------

struct AnalyzeOptions {
    std::string file;
    bool json = false;
    bool charpoly = false;
    std::optional<std::size_t> swd;
    bool witness = false;
};

int cmd_analyze(const AnalyzeOptions& o) {
    const Caps& caps = default_caps();
    const LinearCode c = read_code_file(o.file, caps);
    const auto by_subcode = covering_dimension_subcode(c, caps);
    const auto by_avoidance = covering_dimension_avoidance(c, caps);
    if (by_subcode.value != by_avoidance.value)
        throw CrossCheckFailure("gamma by subcodes (" + claims::gamma_str(by_subcode.value) + ") != gamma by avoidance (" +
                                claims::gamma_str(by_avoidance.value) + ")");
    const auto mv = MatroidView::of_code(c);
    const CharPoly p = characteristic_polynomial(mv, caps);
    const auto exponent = critical_exponent(mv, caps);
    if (exponent != by_subcode.value)
        throw CrossCheckFailure("critical exponent (" + claims::gamma_str(exponent) + ") != gamma (" +
                                claims::gamma_str(by_subcode.value) + ")");
    const CodeVerdict v = classify(c, caps);
    const std::size_t d = min_weight(c, caps);
    std::optional<SupportWeightTable> table;
    if (o.swd) {
        if (*o.swd < 1 || *o.swd > c.k()) throw DomainError("--swd needs 1 <= r <= k");
        table = support_weight_distribution(c, *o.swd, caps);
    }

    if (o.json) {
        Json j;
        j["n"] = c.n();
        j["k"] = c.k();
        j["q"] = c.q();
        j["d"] = d;
        j["d_perp"] = v.d_perp;
        j["gamma"] = gamma_json(by_subcode.value);
        j["critical_exponent"] = gamma_json(exponent);
        j["kung_slack"] = v.kung_slack;
        j["class"] = std::string(to_string(v.cls));
        j["regime"] = v.unresolved_regime ? "unresolved-regime" : "resolved";
        if (o.charpoly) {
            j["charpoly"] = p.to_string();
            j["charpoly_coeffs"] = p.coeffs;
        }
        if (table) {
            j["swd"] = {{"r", table->r}, {"counts", table->counts}};
        }
        if (o.witness) {
            j["witness_subcode"] = by_subcode.witness ? matrix_json(*by_subcode.witness) : Json(nullptr);
            j["witness_subspace"] = by_avoidance.witness ? matrix_json(*by_avoidance.witness) : Json(nullptr);
        }
        std::cout << j.dump(1) << '\n';
        return kOk;
    }

    std::cout << "n = " << c.n() << "\nk = " << c.k() << "\nq = " << c.q() << "\nd = " << d << "\nd_perp = " << v.d_perp
              << "\ngamma = " << claims::gamma_str(by_subcode.value) << " (subcodes), "
              << claims::gamma_str(by_avoidance.value) << " (avoidance)"
              << "\ncritical exponent = " << claims::gamma_str(exponent) << "\nkung slack = " << v.kung_slack
              << "\nclass = " << to_string(v.cls) << (v.unresolved_regime ? " (unresolved-regime)" : "") << '\n';
    if (o.charpoly) std::cout << "charpoly = " << p.to_string() << '\n';
    if (table) {
        std::cout << "A_i^(" << table->r << "):\n";
        for (std::size_t i = 0; i <= c.n(); ++i)
            if (table->at(i)) std::cout << "  " << i << ' ' << table->at(i) << '\n';
    }
    if (o.witness) {
        if (by_subcode.witness) std::cout << "full-support subcode:\n" << matrix_text(*by_subcode.witness);
        if (by_avoidance.witness) {
            std::cout << "subspace of dimension " << c.k() - *by_avoidance.value << " missing every column:\n"
                      << (by_avoidance.witness->rows() ? matrix_text(*by_avoidance.witness) : "  (zero subspace)\n");
        }
        if (!by_subcode.witness) std::cout << "no witness: the code has a zero column\n";
    }
    return kOk;
}

// ---- construct -------------------------------------------------------------

struct ConstructOptions {
    std::string family;
    std::uint64_t q = 2;
    std::size_t k = 0;
    std::size_t n = 0;
    std::size_t m = 0;
    std::string output;
    bool verify = false;
};

int cmd_construct(const ConstructOptions& o) {
    const Caps& caps = default_caps();
    auto need = [](std::size_t v, const char* flag) {
        if (v == 0) throw DomainError(std::string("missing ") + flag);
    };
    std::ostringstream file;
    std::ostringstream report;
    if (o.family == "dual-hamming") {
        need(o.k, "--k");
        const auto c = dual_hamming(Field::of_order(o.q, caps), o.k, caps);
        write_code(file, c, "dual Hamming code, q = " + std::to_string(o.q) + ", k = " + std::to_string(o.k));
        if (o.verify) report << "gamma = " << claims::gamma_str(covering_dimension_subcode(c, caps).value) << '\n';
    } else if (o.family == "rs") {
        need(o.k, "--k");
        need(o.n, "--n");
        const auto c = reed_solomon(Field::of_order(o.q, caps), o.n, o.k, caps);
        write_code(file, c,
                   std::string(o.n == o.q + 1 ? "extended " : "") + "Reed-Solomon code, q = " + std::to_string(o.q) +
                       ", n = " + std::to_string(o.n) + ", k = " + std::to_string(o.k));
        if (o.verify) report << "gamma = " << claims::gamma_str(covering_dimension_subcode(c, caps).value) << '\n';
    } else if (o.family == "parity-dual") {
        need(o.n, "--n");
        const auto c = binary_parity_dual(o.n);
        write_code(file, c, "binary [n, n-1] even-weight code, n = " + std::to_string(o.n));
        if (o.verify) report << "gamma = " << claims::gamma_str(covering_dimension_subcode(c, caps).value) << '\n';
    } else if (o.family == "block") {
        need(o.k, "--k");
        need(o.m, "--m");
        const Field f = Field::of_order(o.q, caps);
        const auto spec = BlockSpec::with_defaults(f, o.k, o.m);
        const auto pts = block_points(spec);
        const auto c = code_from_points(pts);
        std::string comment = "block construction, q = " + std::to_string(o.q) + ", k = " + std::to_string(o.k) +
                              ", m = " + std::to_string(o.m) + "\n" + std::to_string(pts.size()) + " points:";
        for (const auto& x : pts.points()) {
            comment += "\n ";
            for (auto e : x) comment += " " + std::to_string(e);
        }
        write_code(file, c, comment);
        if (o.verify) {
            const std::size_t r = o.k - o.m;
            if (r == 0) throw DomainError("block verification needs m < k");
            const auto mb = is_minimal_block(pts, r, caps);
            report << "r = k - m = " << r << '\n'
                   << "is (k-m)-block: " << (mb.is_block ? "true" : "false")
                   << "; minimal: " << (mb.minimal ? "true" : "false") << '\n'
                   << "gamma = " << claims::gamma_str(covering_dimension_subcode(c, caps).value) << '\n';
        }
    } else {
        throw DomainError("unknown family '" + o.family + "'");
    }
    write_text(o.output, file.str());
    // keep stdout parseable when the code itself goes there
    (o.output.empty() || o.output == "-" ? std::cerr : std::cout) << report.str();
    return kOk;
}

// ---- search ----------------------------------------------------------------

struct SearchOptions {
    int q = 2;
    std::size_t k_max = 3;
    std::size_t n_max = 7;
    bool simple = false;
    unsigned workers = 0;
    std::string report;
    std::string csv;
    std::string resume;
};

int cmd_search(const SearchOptions& o) {
    const Caps& caps = default_caps();
    SearchParams params{o.q, o.k_max, o.n_max, o.simple};
    if (o.k_max < 1 || o.n_max < 1) throw DomainError("--k-max and --n-max must be positive");
    std::optional<SearchReport> head;
    std::optional<SearchCursor> start;
    if (!o.resume.empty()) {
        Json j;
        try {
            j = Json::parse(read_text(o.resume));
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(o.resume + ": " + e.what());
        }
        head = report_from_json(j, caps);
        const auto& hp = head->params;
        if (hp.q != params.q || hp.k_max != params.k_max || hp.n_max != params.n_max || hp.simple_only != params.simple_only)
            throw ParseError(o.resume + ": report parameters differ from the command line");
        if (!head->resume) {
            std::cerr << "report is already complete\n";
            start = SearchCursor{params.k_max + 1, 0, 0};
        } else {
            start = head->resume;
        }
    }

    const unsigned workers = o.workers ? o.workers : std::max(1u, std::thread::hardware_concurrency());
    std::signal(SIGINT, on_sigint);
    SearchReport report = run_search(params, workers, &g_stop, start, caps);
    std::signal(SIGINT, SIG_DFL);
    if (head) report = merge_reports(std::move(*head), report);

    write_text(o.report, report_text(report));
    if (!o.csv.empty()) {
        std::ofstream out(o.csv, std::ios::binary);
        if (!out) throw ParseError("cannot write " + o.csv);
        write_report_csv(out, report);
    }
    std::cerr << report.examined() << " codes in " << report.seconds << " s";
    for (auto c : kAllClasses) std::cerr << ", " << to_string(c) << " " << report.counts.at(c);
    std::cerr << '\n';
    if (report.resume) {
        std::cerr << "interrupted; resume with --resume " << (o.report.empty() ? "<report>" : o.report) << '\n';
        return kInterrupted;
    }
    return report.violations.empty() ? kOk : kViolation;
}

// ---- verify-paper ----------------------------------------------------------

struct VerifyOptions {
    std::vector<std::string> only;
    bool list = false;
    std::uint64_t seed = kDefaultSeed;
    unsigned workers = 4;
};

int cmd_verify(const VerifyOptions& o) {
    const auto all = all_claims();
    if (o.list) {
        for (const auto& c : all) std::cout << c.id << "  " << c.title << '\n';
        return kOk;
    }
    for (const auto& id : o.only)
        if (std::none_of(all.begin(), all.end(), [&](const Claim& c) { return c.id == id; }))
            throw ParseError("unknown claim '" + id + "' (see --list)");
    ClaimContext ctx;
    ctx.seed = o.seed;
    ctx.workers = o.workers;
    ctx.caps = default_caps();
    return run_claims(std::cout, ctx, o.only) ? kOk : kCrossCheck;
}

template <class Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const CrossCheckFailure& e) {
        std::cerr << "cross-check failed: " << e.what() << '\n';
        return kCrossCheck;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << " (raise it with CCDIM_CAPS)\n";
        return kCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Covering dimension of linear codes over finite fields"};
    app.set_version_flag("--version", std::string(ccdim::kVersion));
    app.require_subcommand(1);
    app.footer("CCDIM_CAPS=\"codewords=N,subspaces=N,subsets=N\" overrides enumeration caps.");

    AnalyzeOptions ao;
    auto* analyze = app.add_subcommand("analyze", "Report n, k, d, d_perp, gamma and the conjecture class of a code file");
    analyze->add_option("file", ao.file, "Code file: header 'q k n', then k rows of n entries")->required();
    analyze->add_flag("--json", ao.json, "Print a JSON object");
    analyze->add_flag("--charpoly", ao.charpoly, "Print the characteristic polynomial of the code's matroid");
    analyze->add_option("--swd", ao.swd, "Print the support weight distribution A_i^(r)");
    analyze->add_flag("--witness", ao.witness, "Print the full-support subcode and the avoiding subspace");

    ConstructOptions co;
    auto* construct = app.add_subcommand("construct", "Write a code file for a standard family");
    construct->add_option("family", co.family, "dual-hamming | rs | parity-dual | block")
        ->required()
        ->check(CLI::IsMember({"dual-hamming", "rs", "parity-dual", "block"}));
    construct->add_option("--q", co.q, "Field order");
    construct->add_option("--k", co.k, "Dimension");
    construct->add_option("--n", co.n, "Length (rs, parity-dual)");
    construct->add_option("--m", co.m, "Size of T (block)");
    construct->add_option("-o,--output", co.output, "Output path (default stdout)");
    construct->add_flag("--verify", co.verify, "Also report gamma; for block, the block and minimality verdicts");

    SearchOptions so;
    auto* search = app.add_subcommand("search", "Classify every small code against the covering-dimension bounds");
    search->add_option("--q", so.q, "Field order")->required();
    search->add_option("--k-max", so.k_max, "Largest dimension")->required();
    search->add_option("--n-max", so.n_max, "Largest length")->required();
    search->add_flag("--simple", so.simple, "Distinct projective points only (d_perp >= 3)");
    search->add_option("--workers", so.workers, "Worker threads (default: hardware concurrency)");
    search->add_option("--report", so.report, "JSON report path (default stdout)");
    search->add_option("--csv", so.csv, "Also write verdict rows as CSV");
    search->add_option("--resume", so.resume, "Continue an interrupted report")->check(CLI::ExistingFile);

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify-paper", "Run the reproduction checks and print PASS/FAIL per claim");
    verify->add_option("--only", vo.only, "Run only this claim (repeatable)");
    verify->add_flag("--list", vo.list, "List claim identifiers and exit");
    verify->add_option("--seed", vo.seed, "Seed for the randomized suites");
    verify->add_option("--workers", vo.workers, "Parallel side of the determinism check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    if (*analyze) return guarded([&] { return cmd_analyze(ao); });
    if (*construct) return guarded([&] { return cmd_construct(co); });
    if (*search) return guarded([&] { return cmd_search(so); });
    return guarded([&] { return cmd_verify(vo); });
}
