// modcat: compute modular data and run the verification suite.
#include <chrono>
#include <fstream>
#include <iostream>
#include <algorithm>

#include <CLI11.hpp>

#include "modcat/fusion.hpp"
#include "modcat/io.hpp"
#include "modcat/parallel.hpp"
#include "modcat/quantum.hpp"
#include "modcat/symbols.hpp"
#include "modcat/verify.hpp"

using namespace modcat;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;

struct JobConfig {
    std::string command;
    std::string target;
    int n = 0;
    int d = 0;
    std::string type = "A";
    int rank = 0;
    int l = 0;
    int u = 1;
    std::string format = "json";
    std::string out;
    int jobs = 0;
    std::string check;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const auto g_start = std::chrono::steady_clock::now();

// Data goes to --out; timing and settings go to a separate sidecar.
void emit(const JobConfig& cfg, const std::string& text, Json meta) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << text;
    meta["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - g_start).count();
    std::ofstream side(cfg.out + ".meta.json");
    side << meta.dump(2) << "\n";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void require_nd(const JobConfig& cfg) {
    if (cfg.n < 1) throw UsageError("--n >= 1 required");
    if (cfg.d < cfg.n + 1) throw UsageError("d >= n+1 required (n = " + std::to_string(cfg.n) + ", d = " + std::to_string(cfg.d) + ")");
}

int run_datum(const JobConfig& cfg, const ModularDatum& md, Json& meta) {
    std::string text;
    if (cfg.format == "json")
        text = dump(datum_to_json(md));
    else if (cfg.format == "csv")
        text = datum_to_csv(md);
    else
        text = datum_to_latex(md);
    meta["labels"] = md.size();
    emit(cfg, text, meta);
    return 0;
}

int run_report(const JobConfig& cfg, const Report& r, Json& meta) {
    if (cfg.format != "json") throw UsageError("reports are emitted as json only");
    meta["passed"] = r.passed;
    emit(cfg, dump(to_json(r)), meta);
    if (!r.passed) std::cerr << r.check << ": FAILED with " << r.violation_count << " violation(s)\n";
    return r.passed ? 0 : kExitFailed;
}

int run(JobConfig cfg) {
    // "--out json" names a format, not a file.
    if (cfg.out == "json" || cfg.out == "csv" || cfg.out == "latex") {
        cfg.format = cfg.out;
        cfg.out.clear();
    }
    if (cfg.jobs > 0) set_default_jobs(cfg.jobs);
    Json meta = {{"command", cfg.command}, {"jobs", resolve_jobs(cfg.jobs)}};

    if (cfg.command == "malle") {
        require_nd(cfg);
        meta["params"] = {{"n", cfg.n}, {"d", cfg.d}, {"u", cfg.u}};
        return run_datum(cfg, malle_datum(cfg.n, cfg.d, cfg.u, cfg.jobs), meta);
    }
    if (cfg.command == "quantum") {
        LieType type = parse_lie_type(cfg.type);
        int rank = cfg.rank ? cfg.rank : cfg.n;
        if (rank < 1) throw UsageError("--rank >= 1 required");
        int d = cfg.d;
        if (cfg.l) {
            if (cfg.l % 2) throw UsageError("l must be even (l = 2d)");
            if (d && d != cfg.l / 2) throw UsageError("--l and --d disagree: l = 2d required");
            d = cfg.l / 2;
        }
        if (d < 1) throw UsageError("--d or --l required");
        QuantumContext ctx = make_context(type, rank, d);
        auto simples = enumerate_simples(ctx);
        meta["params"] = {{"type", cfg.type}, {"rank", rank}, {"l", ctx.l}};
        return run_datum(cfg, quantum_datum(ctx, simples, cfg.jobs), meta);
    }
    if (cfg.command == "fusion") {
        require_nd(cfg);
        meta["params"] = {{"n", cfg.n}, {"d", cfg.d}};
        if (cfg.check == "cuntz") return run_report(cfg, verify_cuntz(cfg.n, cfg.d, cfg.jobs), meta);
        if (cfg.check == "sl2z") return run_report(cfg, verify_sl2z(cfg.n, cfg.d, cfg.jobs), meta);
        if (!cfg.check.empty()) throw UsageError("unknown --check " + cfg.check + " (cuntz, sl2z)");
        ModularDatum md = malle_datum(cfg.n, cfg.d, 1, cfg.jobs);
        auto syms = enumerate_symbols(cfg.n, cfg.d);
        auto sp = special_symbols(cfg.n, cfg.d).first;
        auto unit = static_cast<std::size_t>(std::find(syms.begin(), syms.end(), sp) - syms.begin());
        FusionRing ring;
        try {
            ring = verlinde(md, unit, cfg.jobs);
        } catch (const NonIntegralCoefficient& e) {
            Report r;
            r.check = "verlinde";
            r.params = meta["params"];
            r.fail({{"f", e.f}, {"g", e.g}, {"h", e.h}, {"value", e.value}});
            return run_report(cfg, r, meta);
        }
        if (cfg.format == "latex") throw UsageError("fusion output supports json and csv");
        emit(cfg, cfg.format == "csv" ? fusion_to_csv(ring) : dump(fusion_to_json(ring)), meta);
        return 0;
    }
    // verify
    const std::string& t = cfg.target;
    meta["target"] = t;
    auto nd = [&] { require_nd(cfg); };
    if (t == "main") return nd(), run_report(cfg, verify_main_theorem(cfg.n, cfg.d, cfg.jobs), meta);
    if (t == "ennola") return nd(), run_report(cfg, verify_ennola(cfg.n, cfg.d), meta);
    if (t == "sl2z") return nd(), run_report(cfg, verify_sl2z(cfg.n, cfg.d, cfg.jobs), meta);
    if (t == "cuntz") return nd(), run_report(cfg, verify_cuntz(cfg.n, cfg.d, cfg.jobs), meta);
    if (t == "counts") return nd(), run_report(cfg, verify_counts(cfg.n, cfg.d, cfg.jobs), meta);
    if (t == "g27") return run_report(cfg, verify_g27(cfg.jobs), meta);
    if (t == "g24") return run_report(cfg, verify_g24(cfg.jobs), meta);
    if (t == "g4") return run_report(cfg, verify_g4(cfg.jobs), meta);
    if (t == "cyclic3") return run_report(cfg, verify_cyclic3(cfg.jobs), meta);
    throw UsageError("unknown verify target " + t);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Modular data of quantum doubles at roots of unity and Malle's Z-modular data"};
    app.require_subcommand(1);
    JobConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "latex"}));
        sub->add_option("--out", cfg.out, "Output file (stdout if omitted)");
        sub->add_option("--jobs", cfg.jobs, "Worker threads (default: MODCAT_JOBS or all cores)")->check(CLI::NonNegativeNumber);
    };
    auto add_nd = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "Rank n of A_n / size parameter of Psi#");
        sub->add_option("--d", cfg.d, "d, with l = 2d");
    };

    auto* malle = app.add_subcommand("malle", "Malle's Z-modular datum for G(d,1,n(n+1)/2)");
    add_nd(malle);
    malle->add_option("--u", cfg.u, "zeta = zeta_d^u");
    add_common(malle);

    auto* quantum = app.add_subcommand("quantum", "Unnormalized S, T of the integral quantum category");
    add_nd(quantum);
    quantum->add_option("--type", cfg.type, "Lie type")->check(CLI::IsMember({"A", "B"}));
    quantum->add_option("--rank", cfg.rank, "Rank (defaults to --n)");
    quantum->add_option("--l", cfg.l, "Order of xi, l = 2d");
    add_common(quantum);

    auto* fusion = app.add_subcommand("fusion", "Verlinde fusion ring of the Malle datum");
    add_nd(fusion);
    fusion->add_option("--check", cfg.check, "Run a check instead of emitting the ring")->check(CLI::IsMember({"cuntz", "sl2z"}));
    add_common(fusion);

    auto* verify = app.add_subcommand("verify", "Theorem-level checks");
    verify->add_option("target", cfg.target, "main|ennola|g27|g24|g4|sl2z|cuntz|counts|cyclic3")
        ->required()
        ->check(CLI::IsMember({"main", "ennola", "g27", "g24", "g4", "sl2z", "cuntz", "counts", "cyclic3"}));
    add_nd(verify);
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    for (auto* sub : {malle, quantum, fusion, verify})
        if (sub->parsed()) cfg.command = sub->get_name();

    try {
        return run(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        // Precondition failures from the library (QuantumError, SymbolError, LatticeError, ...).
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailed;
    }
}
