// Command-line front end: sphere-size tables, finite bound reports,
// asymptotic rate curves as CSV (plus a gnuplot script), and the built-in
// verification suites.

#include "mixedcodes/asymptotic.hpp"
#include "mixedcodes/distribution.hpp"
#include "mixedcodes/errors.hpp"
#include "mixedcodes/finite_bounds.hpp"
#include "mixedcodes/oracle.hpp"
#include "mixedcodes/profile.hpp"
#include "mixedcodes/spectral.hpp"
#include "mixedcodes/sphere.hpp"
#include "mixedcodes/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace mixedcodes;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitResource = 3;

std::string nine_digits(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string profile_text(const AlphabetProfile& p) {
    std::ostringstream os;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i) os << ',';
        os << p.size_at(i);
    }
    return os.str();
}

std::string rat_text(const Rat& v) {
    std::string s = v.str();
    if (boost::multiprecision::denominator(v) != 1) {
        s += " (approx. " + nine_digits(rat_as_double(v)) + ")";
    }
    return s;
}

AlphabetProfile resolve_profile(const std::string& alphabets, const std::string& dist,
                                std::size_t n) {
    if (!alphabets.empty()) {
        if (n != 0)
            throw ArgOutOfRange("--n applies only together with --dist");
        return parse_profile(alphabets);
    }
    if (!dist.empty()) {
        if (n == 0) throw ArgOutOfRange("--dist needs --n to fix the length");
        return parse_distribution(dist).instantiate(n);
    }
    throw ArgOutOfRange("give a space via --alphabets or via --dist with --n");
}

AlphabetDistribution resolve_distribution(const std::string& alphabets,
                                          const std::string& dist) {
    if (!dist.empty()) return parse_distribution(dist);
    if (!alphabets.empty()) return AlphabetDistribution::from_profile(parse_profile(alphabets));
    throw ArgOutOfRange("give alphabet fractions via --dist or a profile via --alphabets");
}

// ----------------------------------------------------------------- sphere --

int cmd_sphere(const AlphabetProfile& profile, std::optional<std::size_t> radius) {
    const SphereSizeTable table = sphere_sizes(profile);
    std::cout << "profile: " << profile_text(profile) << " (n=" << profile.length() << ")\n";
    std::cout << "space size: " << profile.space_size().str() << "\n";
    if (radius) {
        std::cout << "s[" << *radius << "] = " << table.sphere(*radius).str() << "\n";
        std::cout << "ball[" << *radius << "] = " << table.ball(*radius).str() << "\n";
    } else {
        for (std::size_t r = 0; r <= table.max_radius(); ++r) {
            std::cout << "s[" << r << "] = " << table.sphere(r).str() << "\n";
        }
    }
    return kExitOk;
}

// ----------------------------------------------------------------- bounds --

int cmd_bounds(const AlphabetProfile& profile, std::size_t d,
               std::optional<std::size_t> radius, std::uint64_t max_space,
               double budget_seconds) {
    std::cout << "profile: " << profile_text(profile) << " (n=" << profile.length()
              << ", space " << profile.space_size().str() << ")\n";
    std::cout << "distance: " << d << "\n";

    const auto bounds = all_finite_bounds(profile, d);
    const Rat upper = min_upper_bound(bounds);
    const Int gv = gv_lower(profile, d);
    for (const BoundResult& b : bounds) {
        switch (b.kind) {
            case FiniteBoundKind::GilbertVarshamovLower:
                std::cout << "gilbert-varshamov lower: " << rat_text(b.value) << "\n";
                break;
            case FiniteBoundKind::SpherePackingUpper:
                std::cout << "sphere-packing upper: " << rat_text(b.value) << "\n";
                break;
            case FiniteBoundKind::SingletonUpper:
                std::cout << "singleton upper: " << rat_text(b.value) << "\n";
                break;
            case FiniteBoundKind::EliasBassalygoUpper:
                if (b.applicable) {
                    std::cout << "elias-bassalygo upper: " << rat_text(b.value)
                              << " at radius " << *b.radius << "\n";
                } else {
                    std::cout << "elias-bassalygo upper: not applicable\n";
                }
                break;
        }
    }
    std::cout << "least upper bound: " << rat_text(upper) << "\n";

    bool consistent = Rat(gv) <= upper;
    if (profile.space_size() <= Int(max_space)) {
        MaxCodeOptions opts;
        opts.budget_seconds = budget_seconds;
        opts.max_points = max_space;
        const MaxCodeResult found =
            max_code(profile, d, Ambient::WholeSpace, std::nullopt, opts);
        const Int size(found.code.elements.size());
        if (found.exact) {
            std::cout << "search optimum: " << size.str() << " (exact, " << found.nodes
                      << " nodes)\n";
        } else {
            std::cout << "search lower bound: " << size.str() << " (budget hit)\n";
        }
        consistent = consistent && gv <= size && Rat(size) <= upper;
    }

    if (radius) {
        const EvCertificate cert = bound_by_ev_certificate(profile, d, *radius);
        if (cert.lambda_available) {
            std::cout << "ball eigenvalue (r=" << *radius << "): " << nine_digits(cert.lambda)
                      << (cert.lambda_is_exact ? " [exact]" : " [iterated]") << "\n";
        } else {
            std::cout << "ball eigenvalue (r=" << *radius << "): analytic route inapplicable\n";
        }
        if (cert.fired) {
            std::cout << "eigenvalue certificate: fired, code size <= "
                      << cert.bound.str() << "\n";
        } else {
            std::cout << "eigenvalue certificate: not fired (threshold "
                      << nine_digits(cert.threshold) << ")\n";
        }
    }

    std::cout << "consistency: " << (consistent ? "ok" : "violated") << "\n";
    return consistent ? kExitOk : kExitVerification;
}

// ------------------------------------------------------------------ curve --

const std::vector<std::pair<std::string, CurveKind>>& curve_columns() {
    static const std::vector<std::pair<std::string, CurveKind>> columns = {
        {"gv", CurveKind::GilbertVarshamov},   {"sp", CurveKind::SpherePacking},
        {"eb", CurveKind::EliasBassalygo},     {"lp", CurveKind::LinearProgramming},
        {"singleton", CurveKind::Singleton},
    };
    return columns;
}

std::vector<bool> parse_kinds(const std::string& kinds) {
    std::vector<bool> selected(curve_columns().size(), kinds.empty());
    std::stringstream ss(kinds);
    std::string token;
    while (std::getline(ss, token, ',')) {
        bool known = false;
        for (std::size_t c = 0; c < curve_columns().size(); ++c) {
            if (curve_columns()[c].first == token) {
                selected[c] = true;
                known = true;
            }
        }
        if (!known) throw ArgOutOfRange("unknown curve kind '" + token + "'");
    }
    return selected;
}

void write_gnuplot_script(const std::string& csv_path, const std::vector<bool>& selected) {
    std::ofstream script(csv_path + ".gnuplot");
    script << "# plot the rate curves written to " << csv_path << "\n";
    script << "set datafile separator ','\n";
    script << "set xlabel 'normalized minimum distance'\n";
    script << "set ylabel 'rate'\n";
    script << "set xrange [0:1]\n";
    script << "set yrange [0:1]\n";
    script << "set key top right\n";
    script << "set grid\n";
    script << "plot ";
    bool first = true;
    for (std::size_t c = 0; c < curve_columns().size(); ++c) {
        if (!selected[c]) continue;
        if (!first) script << ", \\\n     ";
        script << "'" << csv_path << "' using 1:" << c + 2 << " with lines title '"
               << curve_columns()[c].first << "'";
        first = false;
    }
    script << "\n";
}

int cmd_curve(const AlphabetDistribution& dist, const std::string& kinds, double grid_step,
              const std::string& out_path, unsigned threads) {
    const std::vector<bool> selected = parse_kinds(kinds);
    const std::vector<double> grid = uniform_grid(grid_step);

    std::vector<RateCurve> curves(curve_columns().size());
    for (std::size_t c = 0; c < curve_columns().size(); ++c) {
        if (selected[c]) {
            curves[c] = rate_curve(dist, curve_columns()[c].second, grid, threads);
        }
    }

    std::ostringstream csv;
    csv << "delta,gv,sp,eb,lp,singleton\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
        csv << nine_digits(grid[i]);
        for (std::size_t c = 0; c < curve_columns().size(); ++c) {
            csv << ',';
            if (!selected[c]) continue;
            const RatePoint& point = curves[c].samples[i];
            if (point.rate) csv << nine_digits(point.exhausted ? 0.0 : *point.rate);
        }
        csv << '\n';
    }

    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream out(out_path);
        if (!out) throw ArgOutOfRange("cannot open '" + out_path + "' for writing");
        out << csv.str();
        write_gnuplot_script(out_path, selected);
        std::cout << "wrote " << grid.size() << " samples to " << out_path << "\n";
        std::cout << "wrote plot script to " << out_path << ".gnuplot\n";
    }
    return kExitOk;
}

// ----------------------------------------------------------------- verify --

int cmd_verify(const std::string& suite, std::uint64_t max_space, double budget_seconds) {
    SuiteOptions options;
    options.max_space = max_space;
    options.budget_seconds = budget_seconds;

    const std::vector<CheckResult> results =
        suite.empty() ? run_all_suites(options) : run_suite(suite, options);

    std::size_t failed = 0;
    std::map<std::string, std::pair<std::size_t, std::size_t>> per_suite;
    for (const CheckResult& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.suite << "/" << r.name;
        if (!r.detail.empty()) std::cout << ": " << r.detail;
        std::cout << "\n";
        ++per_suite[r.suite].first;
        if (!r.pass) {
            ++per_suite[r.suite].second;
            ++failed;
        }
    }

    nlohmann::json summary;
    summary["total"] = results.size();
    summary["passed"] = results.size() - failed;
    summary["failed"] = failed;
    for (const auto& [name, counts] : per_suite) {
        summary["suites"][name] = {{"checks", counts.first}, {"failed", counts.second}};
    }
    std::cout << "summary: " << summary.dump() << "\n";
    return failed == 0 ? kExitOk : kExitVerification;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounds on code sizes and rates over mixed finite alphabets"};
    app.require_subcommand(1);

    std::string alphabets;
    std::string dist;
    std::size_t n = 0;
    std::size_t d = 1;
    std::size_t r_value = 0;
    std::string kinds;
    double grid_step = 0.005;
    std::string out_path;
    std::string suite;
    std::uint64_t max_space = 1296;
    double budget_seconds = 2.0;
    unsigned threads = 1;

    CLI::App* sphere = app.add_subcommand("sphere", "sphere and ball sizes of a profile");
    sphere->add_option("--alphabets", alphabets, "explicit alphabet sizes, e.g. 2,3,5,7");
    sphere->add_option("--dist", dist, "alphabet fractions, e.g. 2:1/4,3:3/4");
    sphere->add_option("--n", n, "length used to realize --dist");
    CLI::Option* sphere_r = sphere->add_option("--r", r_value, "report a single radius");

    CLI::App* bounds = app.add_subcommand("bounds", "finite bounds at one distance");
    bounds->add_option("--alphabets", alphabets, "explicit alphabet sizes, e.g. 2,3,5,7");
    bounds->add_option("--dist", dist, "alphabet fractions, e.g. 2:1/4,3:3/4");
    bounds->add_option("--n", n, "length used to realize --dist");
    bounds->add_option("--d", d, "minimum distance")->required();
    CLI::Option* bounds_r =
        bounds->add_option("--r", r_value, "also evaluate the eigenvalue certificate at this radius");
    bounds->add_option("--max-space", max_space, "largest space searched exhaustively");
    bounds->add_option("--budget-seconds", budget_seconds, "search time budget");

    CLI::App* curve = app.add_subcommand("curve", "asymptotic rate curves as CSV");
    curve->add_option("--alphabets", alphabets, "profile whose empirical fractions are used");
    curve->add_option("--dist", dist, "alphabet fractions, e.g. 2:1/4,3:1/4,5:1/4,7:1/4");
    curve->add_option("--kinds", kinds, "comma list from gv,sp,eb,lp,singleton (default all)");
    curve->add_option("--grid-step", grid_step, "delta grid step (default 0.005)");
    curve->add_option("--out", out_path, "CSV output path (stdout when omitted)");
    curve->add_option("--threads", threads, "worker threads for curve evaluation");

    CLI::App* verify = app.add_subcommand("verify", "run the built-in verification suites");
    verify->add_option("--suite", suite, "one suite name (default: all)");
    verify->add_option("--max-space", max_space, "largest space enumerated in checks");
    verify->add_option("--budget-seconds", budget_seconds, "search time budget per call");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sphere->parsed()) {
            std::optional<std::size_t> radius;
            if (sphere_r->count() > 0) radius = r_value;
            return cmd_sphere(resolve_profile(alphabets, dist, n), radius);
        }
        if (bounds->parsed()) {
            std::optional<std::size_t> radius;
            if (bounds_r->count() > 0) radius = r_value;
            return cmd_bounds(resolve_profile(alphabets, dist, n), d, radius, max_space,
                              budget_seconds);
        }
        if (curve->parsed()) {
            return cmd_curve(resolve_distribution(alphabets, dist), kinds, grid_step, out_path,
                             threads);
        }
        if (verify->parsed()) {
            return cmd_verify(suite, max_space, budget_seconds);
        }
        std::cerr << "error: no subcommand selected\n";
        return kExitUsage;
    } catch (const SpaceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
