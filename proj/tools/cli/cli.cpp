#include "cli/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "carlitz/annihilator.hpp"
#include "carlitz/carlitz.hpp"
#include "carlitz/cyclosplit.hpp"
#include "carlitz/factor.hpp"
#include "carlitz/mersenne.hpp"
#include "carlitz/parallel.hpp"
#include "carlitz/suites.hpp"
#include "carlitz/wieferich.hpp"
#include "cli/errors.hpp"
#include "cli/records.hpp"
#include "cli/scan_driver.hpp"

namespace carlitz::cli {

namespace {

std::atomic<bool> g_stop{false};

const std::vector<std::string> kSuites = {"fermat",           "eisenstein", "shape-lemma", "divisor-congruence",
                                          "twins-composite",  "non-wieferich", "annihilator", "norm",
                                          "split",            "primality"};

// Values shared by every subcommand; each leaf registers the ones it uses.
struct Options {
    std::uint64_t q = 0;
    std::string modulus;
    std::string m, x, mod, f, prime;
    std::size_t deg = 0, dmin = 0, dmax = 0, alpha_deg = 2;
    std::uint64_t shard_start = 0;
    std::uint64_t shard_end = std::numeric_limits<std::uint64_t>::max();
    unsigned jobs = default_jobs();
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::string format = "jsonl";
    std::string out;
    std::string checkpoint;
    std::uint64_t checkpoint_every = 1024;
    std::uint64_t stop_after = 0;
    std::uint64_t bound = kDefaultExpansionBound;
    bool show_witnesses = false;
    std::string config;
    std::string suite;
};

struct Leaf {
    CLI::App* app = nullptr;
    std::vector<CLI::Option*> required;
};

std::string env_name(const std::string& key) {
    std::string n = "CARLITZ_";
    for (char c : key) n += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return n;
}

std::map<std::string, std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("--config: cannot read " + path);
    std::map<std::string, std::string> values;
    CLI::ConfigTOML parser;
    for (const auto& item : parser.from_config(in)) {
        if (item.inputs.empty()) continue;
        values[item.name] = item.inputs.front();
    }
    return values;
}

// Flags win, then CARLITZ_* variables, then the config file.
void fill_defaults(const Leaf& leaf, const Options& opt) {
    std::map<std::string, std::string> config;
    if (!opt.config.empty()) config = read_config(opt.config);
    for (CLI::Option* o : leaf.app->get_options()) {
        if (o->count() > 0 || o->get_lnames().empty()) continue;
        const std::string key = o->get_lnames().front();
        if (key == "help" || key == "config") continue;
        std::string value;
        if (const char* env = std::getenv(env_name(key).c_str()); env && *env)
            value = env;
        else if (auto it = config.find(key); it != config.end())
            value = it->second;
        else
            continue;
        try {
            o->add_result(value);
            o->run_callback();
        } catch (const CLI::Error& e) {
            throw usage_error("--" + key + ": " + e.what());
        }
    }
    for (CLI::Option* o : leaf.required)
        if (o->count() == 0) throw usage_error(o->get_name() + " is required");
}

FieldPtr make_field(const Options& opt) {
    std::optional<std::vector<std::uint32_t>> modulus;
    if (!opt.modulus.empty()) {
        std::vector<std::uint32_t> digits;
        std::stringstream ss(opt.modulus);
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                digits.push_back(static_cast<std::uint32_t>(std::stoul(part)));
            } catch (const std::exception&) {
                throw usage_error("--modulus expects comma-separated digits c0,c1,...,cs");
            }
        }
        modulus = std::move(digits);
    }
    return GaloisField::of_order(opt.q, modulus);
}

Poly poly_flag(const FieldPtr& F, const std::string& flag, const std::string& text) {
    try {
        return parse_poly(F, text);
    } catch (const Error& e) {
        throw usage_error(flag + ": " + e.what());
    }
}

std::pair<std::size_t, std::size_t> degree_range(const Options& opt, std::size_t default_min) {
    if (opt.deg > 0) return {opt.deg, opt.deg};
    const std::size_t lo = opt.dmin > 0 ? opt.dmin : default_min;
    if (opt.dmax == 0) throw usage_error("--deg or --dmax is required");
    return {lo, opt.dmax};
}

void emit(const Options& opt, std::ostream& out, const std::vector<Row>& rows, const std::vector<std::string>& cols) {
    const OutputFormat format = parse_format(opt.format);
    if (opt.out.empty()) {
        write_rows(out, rows, cols, format);
        return;
    }
    std::ofstream file(opt.out, std::ios::binary | std::ios::trunc);
    if (!file) throw usage_error("--out: cannot write " + opt.out);
    write_rows(file, rows, cols, format);
}

ScanSettings scan_settings(const Options& opt, std::string task, const FieldPtr& F, std::size_t dmin,
                           std::size_t dmax) {
    ScanSettings s;
    s.task = std::move(task);
    s.field = F;
    s.dmin = dmin;
    s.dmax = dmax;
    s.shard = Shard{opt.shard_start, opt.shard_end};
    s.jobs = std::max(1u, opt.jobs);
    s.seed = opt.seed;
    if (!opt.checkpoint.empty()) s.checkpoint = opt.checkpoint;
    s.block = opt.checkpoint_every;
    if (opt.stop_after > 0) s.stop_after = opt.stop_after;
    return s;
}

int finish_scan(const Options& opt, std::ostream& out, std::ostream& err, const ScanResult& r,
                const std::vector<std::string>& cols) {
    if (!r.complete) {
        Row note{{"stopped", true}, {"processed", r.processed}, {"found", r.rows.size()}};
        if (!opt.checkpoint.empty()) note["checkpoint"] = opt.checkpoint;
        err << note.dump() << '\n';
        return kSuccess;
    }
    emit(opt, out, r.rows, cols);
    return kSuccess;
}

int cmd_mersenne(const Options& opt, std::ostream& out, std::ostream& err) {
    const FieldPtr F = make_field(opt);
    require_q_above_two(*F);
    const auto [lo, hi] = degree_range(opt, 1);
    const std::uint64_t seed = opt.seed;
    const auto r = run_scan(scan_settings(opt, "mersenne", F, lo, hi),
                            [&](std::size_t d, std::uint64_t i) -> std::optional<Row> {
                                auto rec = mersenne_candidate(F, d, i, seed);
                                if (!rec) return std::nullopt;
                                return mersenne_row(*rec);
                            });
    return finish_scan(opt, out, err, r, kMersenneColumns);
}

int cmd_wieferich(const Options& opt, std::ostream& out, std::ostream& err) {
    const FieldPtr F = make_field(opt);
    require_q_above_two(*F);
    const auto [lo, hi] = degree_range(opt, 1);
    const auto r = run_scan(scan_settings(opt, "wieferich", F, lo, hi),
                            [&](std::size_t d, std::uint64_t i) -> std::optional<Row> {
                                auto rec = wieferich_candidate(F, d, i);
                                if (!rec) return std::nullopt;
                                return wieferich_row(*rec);
                            });
    return finish_scan(opt, out, err, r, kWieferichColumns);
}

int cmd_twins(const Options& opt, std::ostream& out, std::ostream& err) {
    const FieldPtr F = make_field(opt);
    const auto [lo, hi] = degree_range(opt, 1);
    const Poly one = Poly::one(F);
    const auto r = run_scan(scan_settings(opt, "twins", F, lo, hi),
                            [&](std::size_t d, std::uint64_t i) -> std::optional<Row> {
                                const Poly w = monic_from_index(F, d, i);
                                if (!is_irreducible(w) || !is_irreducible(w + one)) return std::nullopt;
                                Row row;
                                row["q"] = F->q();
                                row["wp"] = to_string(w);
                                row["wp_plus_one"] = to_string(w + one);
                                return row;
                            });
    return finish_scan(opt, out, err, r, kTwinColumns);
}

int cmd_eval(const Options& opt, std::ostream& out) {
    const FieldPtr F = make_field(opt);
    const Poly m = poly_flag(F, "--m", opt.m);
    const Poly x = poly_flag(F, "--x", opt.x);
    std::optional<Poly> modulus;
    if (!opt.mod.empty()) modulus = poly_flag(F, "--mod", opt.mod);
    out << to_string(carlitz_eval(m, x, modulus)) << '\n';
    return kSuccess;
}

int cmd_coeffs(const Options& opt, std::ostream& out) {
    const FieldPtr F = make_field(opt);
    const TwistedPoly op = carlitz_coeffs(poly_flag(F, "--m", opt.m));
    for (const auto& c : op.coeffs()) out << to_string(c) << '\n';
    return kSuccess;
}

int cmd_phi(const Options& opt, std::ostream& out) {
    const FieldPtr F = make_field(opt);
    out << to_string(cyclotomic_xpoly(poly_flag(F, "--m", opt.m), opt.bound)) << '\n';
    return kSuccess;
}

int cmd_factor(const Options& opt, std::ostream& out) {
    const FieldPtr F = make_field(opt);
    const Factorization fac = factorize(poly_flag(F, "--f", opt.f), opt.seed);
    Row row;
    row["f"] = opt.f;
    row["unit"] = fac.unit.value();
    row["factors"] = factorization_json(fac);
    out << row.dump() << '\n';
    return kSuccess;
}

int cmd_annihilator(const Options& opt, std::ostream& out) {
    const FieldPtr F = make_field(opt);
    const AnnihilatorRecord rec = carlitz_annihilator(poly_flag(F, "--P", opt.prime), opt.seed);
    Row row;
    row["P"] = to_string(rec.prime);
    row["annihilator"] = to_string(rec.annihilator);
    out << row.dump() << '\n';
    return kSuccess;
}

VerificationReport run_suite(const std::string& suite, const Options& opt, const FieldPtr& F) {
    auto deg = [&](std::size_t def) { return opt.deg > 0 ? opt.deg : def; };
    auto trials = [&](std::size_t def) { return opt.trials > 0 ? opt.trials : def; };
    const unsigned jobs = std::max(1u, opt.jobs);
    if (suite == "fermat") return verify_fermat(F, deg(5), trials(200), opt.seed);
    if (suite == "eisenstein") return verify_eisenstein(F, deg(4));
    if (suite == "shape-lemma") return verify_shape_lemma(F, deg(3), opt.alpha_deg);
    if (suite == "divisor-congruence") return verify_divisor_congruence_range(F, deg(4), jobs, opt.seed);
    if (suite == "twins-composite") return composite_from_twins(F, opt.dmin > 0 ? opt.dmin : 2, deg(4));
    if (suite == "non-wieferich") return mersenne_nonwieferich(F, deg(4), jobs);
    if (suite == "annihilator") {
        VerificationReport r = verify_annihilator_oracle(F, std::min<std::size_t>(deg(3), 4), opt.seed);
        r.merge(verify_divisor_annihilators(F, deg(3), jobs, opt.seed));
        r.suite = "annihilator";
        return r;
    }
    if (suite == "norm") return verify_norm(F, deg(2), opt.bound);
    if (suite == "split") return verify_split(F, deg(2), trials(20), opt.seed, opt.bound);
    if (suite == "primality") return verify_primality_criterion(F, deg(2), opt.seed, opt.bound);
    throw usage_error("unknown suite '" + suite + "'");
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
    const FieldPtr F = make_field(opt);
    std::vector<std::string> suites;
    if (opt.suite == "all")
        suites = kSuites;
    else if (std::find(kSuites.begin(), kSuites.end(), opt.suite) != kSuites.end())
        suites = {opt.suite};
    else
        throw usage_error("unknown suite '" + opt.suite + "'");

    bool ok = true;
    for (const auto& name : suites) {
        const VerificationReport report = run_suite(name, opt, F);
        out << report_json(report, F->q()).dump() << '\n';
        if (opt.show_witnesses)
            for (const auto& w : report.witnesses) out << witness_json(w).dump() << '\n';
        for (const auto& f : report.failures) {
            Row row{{"suite", report.suite}, {"failure", witness_json(f)}};
            err << row.dump() << '\n';
        }
        ok = ok && report.passed();
    }
    return ok ? kSuccess : kAssertionFailure;
}

void add_field_options(CLI::App* app, Options& opt, Leaf& leaf) {
    leaf.required.push_back(app->add_option("--q", opt.q, "Field order q = p^s"));
    app->add_option("--modulus", opt.modulus, "Defining polynomial of GF(q) as digits c0,c1,...,cs");
    app->add_option("--config", opt.config, "TOML/INI file with the same keys as the flags");
}

void add_scan_options(CLI::App* app, Options& opt) {
    app->add_option("--deg", opt.deg, "Scan exactly this degree");
    app->add_option("--dmin", opt.dmin, "Lowest degree (default 1)");
    app->add_option("--dmax", opt.dmax, "Highest degree");
    app->add_option("--shard-start", opt.shard_start, "First enumeration index within each degree");
    app->add_option("--shard-end", opt.shard_end, "One past the last enumeration index within each degree");
    app->add_option("--jobs", opt.jobs, "Worker threads (default: available parallelism)");
    app->add_option("--seed", opt.seed, "Global seed");
    app->add_option("--format", opt.format, "jsonl | csv | table");
    app->add_option("--out", opt.out, "Write records here instead of stdout");
    app->add_option("--checkpoint", opt.checkpoint, "Checkpoint file; resumed from when present");
    app->add_option("--checkpoint-every", opt.checkpoint_every, "Candidates per block between checkpoints");
    app->add_option("--stop-after", opt.stop_after, "Stop (as if interrupted) after this many candidates");
}

}  // namespace

void request_stop() noexcept { g_stop.store(true); }
void clear_stop() noexcept { g_stop.store(false); }
bool stop_requested() noexcept { return g_stop.load(); }

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Carlitz-module arithmetic over F_q[T]", "carlitz"};
    app.require_subcommand(1);

    std::map<CLI::App*, Leaf> leaves;
    auto leaf = [&](CLI::App* sub) -> Leaf& {
        Leaf& l = leaves[sub];
        l.app = sub;
        add_field_options(sub, opt, l);
        return l;
    };

    auto* eval = app.add_subcommand("eval", "C_m(x), optionally mod --mod");
    {
        Leaf& l = leaf(eval);
        l.required.push_back(eval->add_option("--m", opt.m, "m in F_q[T]"));
        l.required.push_back(eval->add_option("--x", opt.x, "x in F_q[T]"));
        eval->add_option("--mod", opt.mod, "Reduce modulo this polynomial");
    }
    auto* coeffs = app.add_subcommand("coeffs", "Coefficients [m,i] of C_m, one per line from i = 0");
    leaf(coeffs).required.push_back(coeffs->add_option("--m", opt.m, "m in F_q[T]"));

    auto* phi = app.add_subcommand("phi", "Cyclotomic polynomial Phi_m(x)");
    leaf(phi).required.push_back(phi->add_option("--m", opt.m, "m in F_q[T]"));
    phi->add_option("--bound", opt.bound, "Largest allowed q^deg(m)");

    auto* factor = app.add_subcommand("factor", "Factor a polynomial; prints JSON");
    leaf(factor).required.push_back(factor->add_option("--f", opt.f, "Polynomial to factor"));
    factor->add_option("--seed", opt.seed, "Seed for equal-degree splitting");

    auto* ann = app.add_subcommand("annihilator", "Carlitz annihilator of a monic prime; prints JSON");
    leaf(ann).required.push_back(ann->add_option("--P", opt.prime, "Monic prime"));
    ann->add_option("--seed", opt.seed, "Seed for factoring P - 1");

    auto* mersenne = app.add_subcommand("mersenne", "Mersenne numbers C_P(1)");
    mersenne->require_subcommand(1);
    auto* mscan = mersenne->add_subcommand(
        "scan", "Scan monic primes P by degree. csv columns: q,P,value,monic,unit,prime,factors");
    leaf(mscan);
    add_scan_options(mscan, opt);

    auto* wieferich = app.add_subcommand("wieferich", "Wieferich classification");
    wieferich->require_subcommand(1);
    auto* wscan = wieferich->add_subcommand(
        "scan", "Classify monic primes by degree. csv columns: P,residue,wieferich,deg,deg_div_by_p");
    leaf(wscan);
    add_scan_options(wscan, opt);

    auto* twins = app.add_subcommand("twins", "Twin prime pairs (w, w + 1). csv columns: q,wp,wp_plus_one");
    leaf(twins);
    add_scan_options(twins, opt);

    auto* verify = app.add_subcommand("verify", "Run a theorem suite over a bounded range");
    {
        Leaf& l = leaf(verify);
        std::string names = "all";
        for (const auto& s : kSuites) names += ", " + s;
        l.required.push_back(verify->add_option("suite", opt.suite, "One of: " + names));
        verify->add_option("--deg", opt.deg, "Largest degree (suite-specific default)");
        verify->add_option("--dmin", opt.dmin, "Smallest degree for twins-composite (default 2)");
        verify->add_option("--alpha-deg", opt.alpha_deg, "Largest deg alpha for shape-lemma");
        verify->add_option("--trials", opt.trials, "Random trials (fermat: 200, split: 20 per P)");
        verify->add_option("--seed", opt.seed, "Seed for random trials");
        verify->add_option("--jobs", opt.jobs, "Worker threads");
        verify->add_option("--bound", opt.bound, "Largest allowed q^deg(P) for x-expansions");
        verify->add_flag("--show-witnesses", opt.show_witnesses, "Also print witness cases");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        CLI::App* target = &app;
        for (CLI::App* sub = &app; sub;) {
            auto chosen = sub->get_subcommands();
            if (chosen.empty()) break;
            target = sub = chosen.front();
        }
        out << target->help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << Row{{"error", "UsageError"}, {"message", e.what()}}.dump() << '\n';
        return kUsage;
    }

    CLI::App* chosen = app.get_subcommands().front();
    CLI::App* leaf_app = chosen;
    if (!chosen->get_subcommands().empty()) leaf_app = chosen->get_subcommands().front();

    try {
        fill_defaults(leaves.at(leaf_app), opt);
        if (opt.q == 0) throw usage_error("--q is required");
        if (leaf_app == eval) return cmd_eval(opt, out);
        if (leaf_app == coeffs) return cmd_coeffs(opt, out);
        if (leaf_app == phi) return cmd_phi(opt, out);
        if (leaf_app == factor) return cmd_factor(opt, out);
        if (leaf_app == ann) return cmd_annihilator(opt, out);
        if (leaf_app == mscan) return cmd_mersenne(opt, out, err);
        if (leaf_app == wscan) return cmd_wieferich(opt, out, err);
        if (leaf_app == twins) return cmd_twins(opt, out, err);
        if (leaf_app == verify) return cmd_verify(opt, out, err);
        throw usage_error("no command");
    } catch (const CliError& e) {
        err << Row{{"error", e.kind()}, {"message", e.what()}}.dump() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << Row{{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}}.dump() << '\n';
        return e.code() == ErrorCode::InvariantViolation ? kAssertionFailure : kUsage;
    }
}

}  // namespace carlitz::cli
