// Command-line front end: reproducible, scriptable access to the exact
// verification suite, periodic-orbit data, orbit counts, Hesse-pencil
// fiber certificates, and the statistical and p-adic probes.

#include "hessdyn/experiments.hpp"
#include "hessdyn/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace hessdyn;

namespace {

constexpr const char* kSchemaVersion = "hessdyn/1";

unsigned default_precision() {
    if (const char* env = std::getenv("HESSDYN_PRECISION")) {
        int v = std::atoi(env);
        if (v >= 64) return static_cast<unsigned>(v);
    }
    return 256;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << text;
    if (!text.empty() && text.back() != '\n') f << '\n';
}

std::string cplx_str(const Cplx& z, unsigned digits) {
    std::string s = z.re.str(digits);
    if (z.im >= 0) s += "+";
    return s + z.im.str(digits) + "i";
}

json orbit_record_json(const hmap::OrbitRecord& rec, unsigned digits) {
    json points = json::array();
    for (const auto& p : rec.points) {
        if (p.inf)
            points.push_back("inf");
        else
            points.push_back(cplx_str(p.v, digits));
    }
    return json{{"points", points},
                {"exact_period", rec.exact_period},
                {"multiplier", cplx_str(rec.multiplier, digits)},
                {"classification", hmap::to_string(rec.classification)}};
}

int cmd_verify(const std::string& out_path) {
    auto report = verify::run_suite(hmap::hmap());
    std::ostringstream os;
    for (const auto& c : report.checks)
        os << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "\n";
    os << (report.all_passed() ? "all checks passed" : "FAILURE: " + report.first_failure()->name)
       << "\n";
    emit(os.str(), out_path);
    return report.all_passed() ? 0 : 1;
}

int cmd_periodic(unsigned n, unsigned precision, const std::string& format,
                 const std::string& out_path) {
    auto records = hmap::group_orbits(n, precision);
    records.push_back(hmap::fixed_point_extras());
    unsigned digits = PrecisionGuard::digits10(precision);
    if (format == "json") {
        json doc{{"schema", kSchemaVersion},
                 {"command", "periodic"},
                 {"n", n},
                 {"precision_bits", precision},
                 {"orbits", json::array()}};
        for (const auto& r : records) doc["orbits"].push_back(orbit_record_json(r, digits));
        emit(doc.dump(2), out_path);
    } else {
        std::ostringstream os;
        for (const auto& r : records) {
            os << "period " << r.exact_period << "  multiplier " << cplx_str(r.multiplier, 20)
               << "  " << hmap::to_string(r.classification) << "\n";
            for (const auto& p : r.points)
                os << "  " << (p.inf ? "inf" : cplx_str(p.v, 20)) << "\n";
        }
        emit(os.str(), out_path);
    }
    return 0;
}

int cmd_orbits(unsigned max_n, const std::string& format, const std::string& out_path) {
    std::ostringstream os;
    if (format == "json") {
        json doc{{"schema", kSchemaVersion}, {"command", "orbits"}, {"counts", json::array()}};
        for (unsigned n = 1; n <= max_n; ++n)
            doc["counts"].push_back(
                json{{"n", n}, {"B_n", orbits::count_orbits_closed(n).str()}});
        emit(doc.dump(2), out_path);
    } else {
        os << "n,B_n\n";
        for (unsigned n = 1; n <= max_n; ++n)
            os << n << "," << orbits::count_orbits_closed(n) << "\n";
        emit(os.str(), out_path);
    }
    return 0;
}

json certificate_json(const cubics::FiberOrbitCertificate& cert) {
    json per_factor = json::array();
    for (const auto& f : cert.per_factor) {
        json fr{{"modulus", f.modulus}};
        if (f.orbit_length)
            fr["orbit_length"] = *f.orbit_length;
        else
            fr["orbit_length"] = nullptr;
        fr["hits_infinity"] = f.hits_infinity;
        if (!f.note.empty()) fr["note"] = f.note;
        per_factor.push_back(std::move(fr));
    }
    return json{{"schema", kSchemaVersion},
                {"command", "pencil"},
                {"modulus", cert.modulus},
                {"max_n", cert.max_n},
                {"squarefree_reduced", cert.squarefree_reduced},
                {"split_occurred", cert.split_occurred},
                {"split_factors", cert.split_factors},
                {"per_factor_results", per_factor},
                {"notes", cert.notes}};
}

int cmd_pencil(const std::string& minpoly_path, const std::string& builtin, unsigned max_n,
               const std::string& out_path) {
    RatPoly m;
    std::vector<std::string> extra_notes;
    if (!builtin.empty()) {
        if (builtin == "order2") {
            m = RatPoly(std::vector<Rational>{-8, 0, 0, -20, 0, 0, 1});  // t^6 - 20t^3 - 8
        } else if (builtin == "order3") {
            m = cubics::order3_condition();
        } else if (builtin == "order4") {
            auto res = cubics::resolve_order2_pair();
            m = cubics::pullback_j_condition(res.minimal_polynomial);
            extra_notes.push_back("verified period-2 pair: " + res.verified_pair);
            extra_notes.push_back("source discrepancy: " + res.discrepancy);
        } else if (builtin == "order6") {
            m = cubics::pullback_j_condition(cubics::order6_j_quartic());
        } else {
            std::cerr << "unknown builtin condition: " << builtin << "\n";
            return 2;
        }
    } else {
        std::ifstream f(minpoly_path);
        if (!f) {
            std::cerr << "cannot read minpoly file: " << minpoly_path << "\n";
            return 2;
        }
        std::stringstream ss;
        ss << f.rdbuf();
        try {
            m = poly_from_string(ss.str());
        } catch (const std::exception& e) {
            std::cerr << "malformed minpoly file: " << e.what() << "\n";
            return 2;
        }
    }
    auto cert = cubics::fiber_orbit(m, max_n);
    for (auto& note : extra_notes) cert.notes.push_back(note);
    emit(certificate_json(cert).dump(2), out_path);
    return 0;
}

int cmd_stats(std::uint64_t seed, unsigned n, unsigned precision, unsigned runs, double lo,
              double hi, const std::string& format, const std::string& out_path) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    std::ostringstream os;
    json doc{{"schema", kSchemaVersion}, {"command", "stats"}, {"runs", json::array()}};
    if (format != "json")
        os << "seed,run,j0,n,precision_bits,Lp,Lpp,Mp,Mpp,Rp,Rpp,boundary_hits,stable\n";
    for (unsigned r = 0; r < runs; ++r) {
        double j0 = dist(rng);
        while (j0 == 0) j0 = dist(rng);
        auto st = experiments::real_orbit_stats(MpFloat(j0), n, precision);
        if (format == "json") {
            doc["runs"].push_back(json{{"seed", seed},
                                       {"run", r},
                                       {"j0", j0},
                                       {"n", st.n},
                                       {"precision_bits", st.precision_bits},
                                       {"Lp", st.lp},
                                       {"Lpp", st.lpp},
                                       {"Mp", st.mp},
                                       {"Mpp", st.mpp},
                                       {"Rp", st.rp},
                                       {"Rpp", st.rpp},
                                       {"boundary_hits", st.boundary_hits},
                                       {"stable", st.stable}});
        } else {
            os << seed << "," << r << "," << j0 << "," << st.n << "," << st.precision_bits << ","
               << st.lp << "," << st.lpp << "," << st.mp << "," << st.mpp << "," << st.rp << ","
               << st.rpp << "," << st.boundary_hits << "," << (st.stable ? 1 : 0) << "\n";
        }
    }
    emit(format == "json" ? doc.dump(2) : os.str(), out_path);
    return 0;
}

int cmd_padic(const std::string& j0_text, long p_in, unsigned n, std::size_t bit_cap,
              const std::string& out_path) {
    Rational j0;
    try {
        j0 = parse_rational(j0_text);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    if (!is_prime(Int(p_in))) {
        std::cerr << "p must be prime, got " << p_in << "\n";
        return 2;
    }
    auto trace = experiments::padic_orbit(j0, Int(p_in), n, bit_cap);
    auto vals = [](const std::vector<std::optional<long>>& v) {
        json a = json::array();
        for (const auto& x : v) {
            if (x)
                a.push_back(*x);
            else
                a.push_back("+inf");
        }
        return a;
    };
    json doc{{"schema", kSchemaVersion},
             {"command", "padic"},
             {"j0", j0_text},
             {"p", p_in},
             {"valuations", vals(trace.valuations)},
             {"diff_valuations", vals(trace.diff_valuations)},
             {"hit_infinity", trace.hit_infinity},
             {"blowup", trace.blowup},
             {"cauchy_trend", trace.cauchy_trend}};
    emit(doc.dump(2), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hessdyn: dynamics of the Hesse derivative on j-invariants"};
    app.require_subcommand(1);

    std::string out_path;
    app.add_option("-o,--output", out_path, "write output to a file instead of stdout");

    auto* verify_cmd = app.add_subcommand("verify", "run the exact verification suite");

    unsigned per_n = 1, per_precision = default_precision();
    auto* periodic = app.add_subcommand("periodic", "periodic orbits, multipliers, stability");
    periodic->add_option("--n", per_n, "period bound (exact periods dividing n)")
        ->check(CLI::Range(1u, hmap::kNumericCap));
    periodic->add_option("--precision", per_precision, "working precision in bits")
        ->check(CLI::Range(64u, 1u << 20));
    std::string per_format = "json";
    periodic->add_option("--format", per_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    unsigned orb_max = 6;
    std::string orb_format = "csv";
    auto* orbits_cmd = app.add_subcommand("orbits", "orbit-count table B_n");
    orbits_cmd->add_option("--max", orb_max, "largest n")->check(CLI::Range(1u, 500u));
    orbits_cmd->add_option("--format", orb_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::string minpoly_path, builtin;
    unsigned pencil_max_n = 24;
    auto* pencil = app.add_subcommand("pencil", "exact fiber-orbit certificate in Q[t]/(m)");
    pencil->add_option("--minpoly", minpoly_path, "file with the defining polynomial of t");
    pencil->add_option("--builtin", builtin,
                       "one of order2, order3, order4, order6 (built-in torsion conditions)");
    pencil->add_option("--max-n", pencil_max_n, "iteration bound");

    std::uint64_t seed = 1;
    unsigned stats_n = 10000, stats_precision = 512, stats_runs = 1;
    double lo = -1e6, hi = 1e6;
    std::string stats_format = "csv";
    auto* stats = app.add_subcommand("stats", "interval-frequency statistics of real orbits");
    stats->add_option("--seed", seed, "RNG seed for drawing j0");
    stats->add_option("--n", stats_n, "iterations per run");
    stats->add_option("--precision", stats_precision, "working precision in bits")
        ->check(CLI::Range(64u, 1u << 20));
    stats->add_option("--runs", stats_runs, "number of seeded runs");
    stats->add_option("--lo", lo, "lower bound of the seed interval");
    stats->add_option("--hi", hi, "upper bound of the seed interval");
    stats->add_option("--format", stats_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    std::string j0_text = "2";
    long p = 2;
    unsigned padic_n = 20;
    std::size_t bit_cap = 1000000;
    auto* padic = app.add_subcommand("padic", "p-adic valuation trace of an exact orbit");
    padic->add_option("--j0", j0_text, "starting rational, e.g. 3456/7");
    padic->add_option("--p", p, "prime");
    padic->add_option("--n", padic_n, "iterations");
    padic->add_option("--bit-cap", bit_cap,
                      "stop and flag blowup once an iterate exceeds this bit size");

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify_cmd->parsed()) return cmd_verify(out_path);
        if (periodic->parsed()) return cmd_periodic(per_n, per_precision, per_format, out_path);
        if (orbits_cmd->parsed()) return cmd_orbits(orb_max, orb_format, out_path);
        if (pencil->parsed()) {
            if (minpoly_path.empty() && builtin.empty()) {
                std::cerr << "pencil requires --minpoly or --builtin\n";
                return 2;
            }
            return cmd_pencil(minpoly_path, builtin, pencil_max_n, out_path);
        }
        if (stats->parsed())
            return cmd_stats(seed, stats_n, stats_precision, stats_runs, lo, hi, stats_format,
                             out_path);
        if (padic->parsed()) return cmd_padic(j0_text, p, padic_n, bit_cap, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
