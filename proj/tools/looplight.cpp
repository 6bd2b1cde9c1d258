#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>

#include "looplight/broadening.hpp"
#include "looplight/config.hpp"
#include "looplight/oracle.hpp"
#include "looplight/presets.hpp"
#include "looplight/propagation.hpp"
#include "looplight/response.hpp"

namespace {

using namespace looplight;

constexpr int kExitConfig = 1;
constexpr int kExitSingular = 2;
constexpr int kExitVerify = 3;

struct CommonArgs {
    std::string configPath;
    std::string presetName;
    std::string gridSpec;
    std::string outPath;
    int nodes = 64;
    int maxOrder = 3;
    std::string chiUnits = "gamma";  // gamma -> plot normalization, si -> absolute
    double velocityScale = -1.0;     // override of the preset's Doppler fraction
};

void add_common(CLI::App* cmd, CommonArgs& a, bool withGrid = true) {
    cmd->add_option("--config", a.configPath, "JSON configuration file");
    cmd->add_option("--preset", a.presetName, "figure preset instead of a config file");
    if (withGrid)
        cmd->add_option("--grid", a.gridSpec, "detuning grid start:stop:points");
    cmd->add_option("--out", a.outPath, "output file (default: stdout)");
    cmd->add_option("--nodes", a.nodes, "velocity quadrature nodes")->check(CLI::PositiveNumber);
    cmd->add_option("--max-order", a.maxOrder, "highest perturbative order")
        ->check(CLI::Range(1, 15));
    cmd->add_option("--units", a.chiUnits, "chi column units: gamma (plot normalization) or si")
        ->check(CLI::IsMember({"gamma", "si"}));
    cmd->add_option("--velocity-scale", a.velocityScale,
                    "fraction of the thermal speed used for Doppler averaging");
}

struct Resolved {
    ModelConfig model;
    std::vector<double> grid;
    bool dopplerDefault = false;
    double velocityScale = 1.0;
};

std::vector<double> make_grid(double start, double stop, int points) {
    if (points < 1) throw ConfigError("grid needs at least one point");
    if (points == 1) {
        if (stop != start) throw ConfigError("single-point grid needs start == stop");
        return {start};
    }
    if (!(stop > start)) throw ConfigError("grid stop must exceed start");
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i)
        g[i] = start + (stop - start) * static_cast<double>(i) / (points - 1);
    return g;
}

std::vector<double> parse_grid_spec(const std::string& spec) {
    double start = 0, stop = 0;
    int points = 0;
    char c1 = 0, c2 = 0;
    std::istringstream is(spec);
    if (!(is >> start >> c1 >> stop >> c2 >> points) || c1 != ':' || c2 != ':' ||
        !is.eof())
        throw ConfigError("grid spec must be start:stop:points");
    return make_grid(start, stop, points);
}

Resolved resolve_inputs(const CommonArgs& a, bool needGrid) {
    Resolved r;
    const bool haveConfig = !a.configPath.empty();
    const bool havePreset = !a.presetName.empty();
    if (haveConfig == havePreset)
        throw ConfigError("give exactly one of --config or --preset");

    if (havePreset) {
        const Preset ps = figure_preset(a.presetName);
        r.model = ps.model;
        r.dopplerDefault = ps.dopplerAveraged;
        r.velocityScale = ps.velocityScale;
        if (a.gridSpec.empty())
            r.grid = make_grid(ps.gridStart, ps.gridStop, ps.gridPoints);
    } else {
        r.model = load_config(a.configPath);
    }
    if (!a.gridSpec.empty()) r.grid = parse_grid_spec(a.gridSpec);
    if (a.velocityScale >= 0.0) r.velocityScale = a.velocityScale;
    if (needGrid && r.grid.empty())
        throw ConfigError("this mode needs --grid (or a preset with a default grid)");
    if (a.chiUnits == "si" && r.model.gammaUnits)
        throw ConfigError("absolute chi output needs an si-units configuration");
    return r;
}

ScanOptions scan_options(const CommonArgs& a) {
    ScanOptions o;
    o.maxOrder = a.maxOrder;
    o.paperNormalized = (a.chiUnits == "gamma");
    return o;
}

VelocityQuadrature quadrature_for(const Resolved& r, int nodes) {
    const MediumParams& m = r.model.requireMedium();
    const double vm =
        r.velocityScale * most_probable_speed(m.temperature, m.atomMass);
    return gauss_hermite_rule(vm, vm == 0.0 ? 1 : nodes);
}

void write_curve_csv(const ResponseCurve& c, std::ostream& os) {
    os << "delta41,re_chi1,im_chi1,re_chi3s,im_chi3s\n";
    os.precision(17);
    for (std::size_t i = 0; i < c.size(); ++i) {
        os << c.grid[i] << ',' << c.chi1[i].real() << ',' << c.chi1[i].imag() << ','
           << c.chi3Scaled[i].real() << ',' << c.chi3Scaled[i].imag() << '\n';
    }
}

int emit_curve(const ResponseCurve& curve, const std::string& outPath) {
    if (curve.allGaps()) {
        std::cerr << "error: singular generator on every grid point\n";
        return kExitSingular;
    }
    if (outPath.empty()) {
        write_curve_csv(curve, std::cout);
    } else {
        std::ofstream os(outPath);
        if (!os) throw ConfigError("cannot write " + outPath);
        write_curve_csv(curve, os);
    }
    return 0;
}

int run_scan(const CommonArgs& a, bool forceDoppler) {
    const Resolved r = resolve_inputs(a, true);
    const bool doppler = forceDoppler || r.dopplerDefault;
    ResponseCurve curve;
    if (doppler) {
        DopplerOptions opts;
        opts.scan = scan_options(a);
        curve = doppler_average_scan(r.model.system, r.model.probe,
                                     r.model.requireMedium(), r.grid,
                                     quadrature_for(r, a.nodes), opts);
    } else {
        curve = scan(r.model.system, r.model.probe, r.model.requireMedium(), r.grid,
                     scan_options(a));
    }
    return emit_curve(curve, a.outPath);
}

nlohmann::json report_json(const PropagationReport& rep) {
    nlohmann::json j;
    auto opt = [](const std::optional<double>& v) {
        return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
    };
    j["n2I"] = rep.n2I;
    j["phasePerMeter"] = rep.phasePerMeter;
    j["Lpi"] = opt(rep.Lpi);
    j["linearAbsorptionLength"] = opt(rep.linearAbsorptionLength);
    j["nonlinearGainLength"] = opt(rep.nonlinearGainLength);
    j["linearFieldAmplitudeLength"] = opt(rep.linearFieldAmplitudeLength);
    j["nonlinearFieldAmplitudeLength"] = opt(rep.nonlinearFieldAmplitudeLength);
    j["linearAbsorptive"] = rep.linearAbsorptive;
    j["nonlinearAbsorptive"] = rep.nonlinearAbsorptive;
    return j;
}

int run_lpi(const CommonArgs& a, double delta41, bool haveDelta) {
    if (!haveDelta) throw ConfigError("lpi needs --delta41");
    const Resolved r = resolve_inputs(a, false);
    if (r.model.gammaUnits)
        throw ConfigError("lpi needs an si-units configuration (absolute susceptibilities)");
    const MediumParams& m = r.model.requireMedium();

    DopplerOptions opts;
    opts.scan.maxOrder = a.maxOrder;
    opts.scan.paperNormalized = false;
    const ResponseCurve pt =
        doppler_average_scan(r.model.system, r.model.probe, m, {delta41},
                             quadrature_for(r, a.nodes), opts);
    if (pt.isGap(0)) {
        std::cerr << "error: singular generator at the requested detuning\n";
        return kExitSingular;
    }
    const PropagationReport rep = selfphase_report(pt.chi1[0], pt.chi3Scaled[0], m);

    nlohmann::json j = report_json(rep);
    j["delta41"] = delta41;
    j["chi1"] = {{"re", pt.chi1[0].real()}, {"im", pt.chi1[0].imag()}};
    j["chi3Scaled"] = {{"re", pt.chi3Scaled[0].real()}, {"im", pt.chi3Scaled[0].imag()}};
    const MeanFreePathDiagnostic mfp = mean_free_path_diagnostic(m);
    j["meanFreePath"] = mfp.lambdaMFP ? nlohmann::json(*mfp.lambdaMFP) : nlohmann::json(nullptr);
    j["dickeRegime"] = mfp.dickeRegime;

    const std::string text = j.dump(2) + "\n";
    if (a.outPath.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(a.outPath);
        if (!os) throw ConfigError("cannot write " + a.outPath);
        os << text;
    }
    return 0;
}

// Hierarchy vs direct time integration at a handful of grid points.
int run_verify(const CommonArgs& a, const std::string& dumpPath) {
    const Resolved r = resolve_inputs(a, true);
    const double tol = 1e-3;

    std::vector<std::size_t> picks;
    const std::size_t n = r.grid.size();
    for (std::size_t frac : {0UL, 1UL, 2UL, 3UL, 4UL}) {
        const std::size_t idx = (n - 1) * frac / 4;
        if (picks.empty() || picks.back() != idx) picks.push_back(idx);
    }

    double worst = 0.0;
    SystemParams p = r.model.system;
    const double phi = p.loopPhase();
    for (std::size_t idx : picks) {
        p.delta41 = r.grid[idx];
        const double Delta = p.multiphotonDetuning();
        const double omega41 = r.model.probe.resolve(p);

        const DecomposedLiouvillian L = build_liouvillian(p);
        const FloquetSolution sol = solve_hierarchy(L, Delta, phi, {a.maxOrder});
        Complex hier = 0.0;
        double wn = omega41;
        for (int order = 1; order <= sol.maxOrder(); order += 2) {
            hier += sol.coefficient(order, 1)(kProbeCoherence) * wn;
            wn *= omega41 * omega41;
        }

        const double gMin = std::min(std::min(p.gamma31, p.gamma32),
                                     std::min(p.gamma41, p.gamma42));
        double dt = max_time_step(p, omega41);
        double tFinal = 25.0 / gMin;
        if (Delta != 0.0) {
            const double period = 2.0 * M_PI / std::abs(Delta);
            dt = period / std::ceil(period / dt);
            tFinal = std::max(tFinal, 15.0 * period / 0.4);
        }
        const Trajectory tr = integrate(p, ProbeSpec::absolute(omega41), tFinal, dt);
        if (!dumpPath.empty() && idx == picks.back())
            write_trajectory_csv(tr, dumpPath);
        const auto harmonics = extract_harmonics(tr, Delta, phi, 1);
        const Complex oracle = harmonics.at(1)(kProbeCoherence);

        const double rel = std::abs(hier - oracle) / std::abs(oracle);
        worst = std::max(worst, rel);
        std::cout << "delta41 = " << r.grid[idx] << ": relative deviation " << rel
                  << "\n";
    }
    std::cout << "max relative deviation: " << worst << " (tolerance " << tol << ")\n";
    return worst <= tol ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Probe response of a closed-loop four-level double-Lambda medium"};
    app.require_subcommand(1);

    CommonArgs scanArgs, dopArgs, lpiArgs, verArgs, preArgs;
    double delta41 = 0.0;

    CLI::App* cmdScan = app.add_subcommand("scan", "unbroadened detuning scan to CSV");
    add_common(cmdScan, scanArgs);

    CLI::App* cmdDop =
        app.add_subcommand("doppler-scan", "thermally averaged detuning scan to CSV");
    add_common(cmdDop, dopArgs);

    CLI::App* cmdLpi =
        app.add_subcommand("lpi", "self-phase-modulation report at one detuning");
    add_common(cmdLpi, lpiArgs, false);
    CLI::Option* optDelta =
        cmdLpi->add_option("--delta41", delta41, "probe detuning, rad/s");

    CLI::App* cmdVer =
        app.add_subcommand("verify", "hierarchy vs time-domain integration check");
    add_common(cmdVer, verArgs);
    std::string dumpPath;
    cmdVer->add_option("--dump-trajectory", dumpPath,
                       "write the last sampled point's trajectory as CSV");

    CLI::App* cmdPre = app.add_subcommand("preset", "run a published-figure preset");
    std::string presetName;
    cmdPre->add_option("name", presetName, "one of: fig2 fig3a-d fig4a-d")->required();
    add_common(cmdPre, preArgs);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitConfig : 0;
    }

    try {
        if (cmdScan->parsed()) return run_scan(scanArgs, false);
        if (cmdDop->parsed()) return run_scan(dopArgs, true);
        if (cmdLpi->parsed()) return run_lpi(lpiArgs, delta41, optDelta->count() > 0);
        if (cmdVer->parsed()) return run_verify(verArgs, dumpPath);
        if (cmdPre->parsed()) {
            preArgs.presetName = presetName;
            return run_scan(preArgs, false);
        }
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
    return 0;
}
