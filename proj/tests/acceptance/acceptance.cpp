// Acceptance run: one PASS/FAIL line per criterion with its wall time and
// limit. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "carlitz/annihilator.hpp"
#include "carlitz/cyclosplit.hpp"
#include "carlitz/mersenne.hpp"
#include "carlitz/parallel.hpp"
#include "carlitz/suites.hpp"
#include "carlitz/wieferich.hpp"
#include "cli/cli.hpp"

using namespace carlitz;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

struct Cli {
    int code;
    std::string out;
    std::string err;
};

Cli cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

void require_report(Outcome& o, const VerificationReport& r, const std::string& label) {
    if (!r.passed()) {
        std::string w;
        for (const auto& [k, v] : r.failures.front().fields) w += k + "=" + v + " ";
        o.require(false, label + ": " + std::to_string(r.failures.size()) + " failures, first: " + w);
    }
}

Outcome mersenne_example() {
    Outcome o;
    const Cli r = cli({"mersenne", "scan", "--q", "3", "--deg", "2"});
    o.require(r.code == 0, "exit code " + std::to_string(r.code));
    std::set<std::string> primes;
    for (const auto& l : lines(r.out)) {
        const auto j = nlohmann::json::parse(l);
        if (j["prime"].get<bool>()) primes.insert(j["monic"].get<std::string>());
    }
    o.require(primes == std::set<std::string>{"T^3+T^2+T+2", "T^3+T^2+2", "T^3+T^2+2*T+1"},
              "found " + std::to_string(primes.size()) + " Mersenne primes");
    return o;
}

Outcome fermat() {
    Outcome o;
    for (std::uint64_t q : {3, 4, 5}) {
        const auto r = verify_fermat(GaloisField::of_order(q), 5, 200, 2024 + q);
        o.require(r.cases == 200, "q=" + std::to_string(q) + ": expected 200 trials");
        require_report(o, r, "q=" + std::to_string(q));
    }
    return o;
}

Outcome eisenstein() {
    Outcome o;
    for (std::uint64_t q : {3, 4, 5}) {
        const auto F = GaloisField::of_order(q);
        const auto r = verify_eisenstein(F, 4);
        std::size_t expected = 0;
        for (std::size_t d = 1; d <= 4; ++d) expected += monic_primes(F, d).size();
        o.require(r.cases == expected, "q=" + std::to_string(q) + ": not every monic prime was checked");
        require_report(o, r, "q=" + std::to_string(q));
    }
    return o;
}

Outcome shape_lemma() {
    Outcome o;
    const auto r = verify_shape_lemma(GaloisField::of_order(3), 3, 2);
    require_report(o, r, "q=3");
    o.require(!r.witnesses.empty(), "no witness case");
    return o;
}

Outcome divisor_congruence() {
    Outcome o;
    const auto r = verify_divisor_congruence_range(GaloisField::of_order(3), 4, default_jobs());
    require_report(o, r, "q=3");
    o.require(r.cases > 0, "no cases");
    return o;
}

Outcome twin_composites() {
    Outcome o;
    for (std::uint64_t q : {3, 4, 5}) require_report(o, composite_from_twins(GaloisField::of_order(q), 2, 4), "q=" + std::to_string(q));
    return o;
}

Outcome non_wieferich() {
    Outcome o;
    for (std::uint64_t q : {3, 4, 5}) {
        const auto r = mersenne_nonwieferich(GaloisField::of_order(q), 4, default_jobs());
        require_report(o, r, "q=" + std::to_string(q));
        o.require(r.cases > 0, "q=" + std::to_string(q) + ": no Mersenne primes");
    }
    return o;
}

Outcome annihilator() {
    Outcome o;
    for (std::uint64_t q : {3, 4}) require_report(o, verify_annihilator_oracle(GaloisField::of_order(q), 3), "oracle q=" + std::to_string(q));
    require_report(o, verify_divisor_annihilators(GaloisField::of_order(3), 4, default_jobs()), "divisors q=3");
    return o;
}

Outcome norm_identity() {
    Outcome o;
    const auto F = GaloisField::of_order(3);
    require_report(o, verify_norm(F, 2), "q=3");
    o.require(norm_of_one_minus_lambda(parse_poly(F, "T")) == parse_poly(F, "T+1"), "P = T does not give T+1");
    return o;
}

Outcome splitting() {
    Outcome o;
    const auto r = verify_split(GaloisField::of_order(3), 2, 20, 11);
    require_report(o, r, "q=3");
    o.require(r.witnesses.size() == 6, "expected 6 Mersenne primes with deg P <= 2");
    return o;
}

Outcome resume_determinism() {
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / "carlitz-acceptance";
    fs::create_directories(dir);
    const std::vector<std::string> base = {"wieferich", "scan", "--q", "3", "--dmax", "5", "--seed", "17"};
    auto with = [&](std::vector<std::string> extra) {
        auto a = base;
        a.insert(a.end(), extra.begin(), extra.end());
        return a;
    };
    const Cli full = cli(with({"--jobs", "1"}));
    o.require(full.code == 0 && !full.out.empty(), "uninterrupted run failed");
    int n = 0;
    for (const char* jobs : {"1", "2", "4", "7"}) {
        for (const char* stop : {"3", "50", "200"}) {
            const std::string cp = (dir / ("cp" + std::to_string(n++) + ".json")).string();
            fs::remove(cp);
            const Cli a = cli(with({"--jobs", jobs, "--checkpoint", cp, "--checkpoint-every", "16", "--stop-after", stop}));
            o.require(a.code == 0 && a.out.empty(), "interrupted run misbehaved");
            const Cli b = cli(with({"--jobs", jobs, "--checkpoint", cp}));
            o.require(b.code == 0 && b.out == full.out,
                      std::string("resumed output differs at jobs=") + jobs + " stop-after=" + stop);
        }
    }
    fs::remove_all(dir);
    return o;
}

Outcome conjecture_report() {
    Outcome o;
    const Cli r = cli({"wieferich", "scan", "--q", "3", "--dmax", "6"});
    o.require(r.code == 0, "scan failed: " + r.err);
    std::size_t wieferich = 0, flagged = 0;
    for (const auto& l : lines(r.out)) {
        const auto j = nlohmann::json::parse(l);
        o.require(j.contains("deg_div_by_p"), "record without deg_div_by_p");
        if (j["wieferich"].get<bool>()) {
            ++wieferich;
            flagged += j["deg_div_by_p"].is_boolean();
        }
    }
    o.require(flagged == wieferich, "Wieferich record without a flag");
    o.detail = std::to_string(wieferich) + " Wieferich prime(s) found" + (o.ok ? "" : "; " + o.detail);
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "mersenne scan q=3 deg 2 reproduces the three Mersenne primes", 1, mersenne_example},
        {2, "Fermat congruence, 200 random trials per q in {3,4,5}", 5, fermat},
        {3, "Eisenstein shape of C_P for q in {3,4,5}, deg P <= 4", 10, eisenstein},
        {4, "prime values C_m(alpha) force constant alpha and prime m", 30, shape_lemma},
        {5, "prime divisors of C_P(1) are 1 mod P, q=3, deg P <= 4", 60, divisor_congruence},
        {6, "twin primes give composite Mersenne numbers, 2 <= deg <= 4", 30, twin_composites},
        {7, "Mersenne primes are non-Wieferich, q in {3,4,5}, deg P <= 4", 30, non_wieferich},
        {8, "annihilator matches brute force; divisors of C_P(1) have annihilator P", 60, annihilator},
        {9, "norm of 1 - lambda equals C_P(1), q=3, deg P <= 2", 10, norm_identity},
        {10, "complete splitting iff 1 mod P, q=3, deg P <= 2", 30, splitting},
        {11, "interrupted wieferich scan resumes byte-identically at any --jobs", 60, resume_determinism},
        {12, "wieferich scan q=3 to degree 6 reports deg_div_by_p", 300, conjecture_report},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = o.ok && in_time;
        failed += !pass;
        std::printf("[%s] criterion %2d: %s (%.3fs, limit %.0fs)%s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                    c.limit_seconds, o.detail.empty() ? "" : " -- ", o.detail.c_str());
        if (!in_time) std::printf("         over the time limit\n");
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
