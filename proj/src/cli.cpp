#include "greenchain/cli.hpp"

#include "greenchain/chain.hpp"
#include "greenchain/config.hpp"
#include "greenchain/csv.hpp"
#include "greenchain/errors.hpp"
#include "greenchain/specfun.hpp"
#include "greenchain/spectrum.hpp"

#include <CLI11.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>

namespace greenchain {

namespace {

// Reference levels for a box of one oscillator length, in units of hbar omega0.
constexpr std::array<double, 6> kTable1Reference = {4.951, 19.774, 44.452,
                                                    78.996, 123.410, 177.693};

struct UnitFlags {
    std::optional<double> hbar;
    std::optional<double> mass;
    std::optional<double> omega0;

    void add_to(CLI::App& app)
    {
        app.add_option("--hbar", hbar, "Reduced Planck constant (default 1)");
        app.add_option("--mass", mass, "Particle mass (default 1)");
        app.add_option("--omega0", omega0, "Oscillator frequency (default 1)");
    }

    UnitSystem apply(UnitSystem units) const
    {
        if (hbar) units.hbar = *hbar;
        if (mass) units.mass = *mass;
        if (omega0) units.omega0 = *omega0;
        try {
            units.validate();
        } catch (const DomainError& e) {
            throw ConfigError(e.what());
        }
        return units;
    }
};

/// Thread count from --threads, else GREENCHAIN_THREADS, else the hardware.
unsigned resolve_threads(std::optional<int> flag)
{
    if (flag) {
        if (*flag < 1) {
            throw ConfigError("--threads must be a positive integer");
        }
        return static_cast<unsigned>(*flag);
    }
    if (const char* env = std::getenv("GREENCHAIN_THREADS")) {
        char* end = nullptr;
        const long value = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || value < 1) {
            throw ConfigError("GREENCHAIN_THREADS must be a positive integer");
        }
        return static_cast<unsigned>(value);
    }
    return default_thread_count();
}


/// Writes to --out when given, otherwise to `out`.
void emit(const CsvTable& table, const std::optional<std::string>& path, std::ostream& out)
{
    if (!path) {
        table.write(out);
        return;
    }
    std::ofstream file(*path, std::ios::binary);
    if (!file) {
        throw ConfigError("cannot write output file '" + *path + "'");
    }
    table.write(file);
    if (!file) {
        throw ConfigError("failed while writing '" + *path + "'");
    }
}

// ------------------------------------------------------------- greens

struct GreensArgs {
    std::string config;
    double x = 0.0;
    double xp = 0.0;
    double param = 0.0;
    bool strong = false;
    UnitFlags units;
};

int cmd_greens(const GreensArgs& args, std::ostream& out)
{
    auto config = load_chain_config(args.config);
    config.units = args.units.apply(config.units);
    const auto setup = build_chain(config);
    const bool strong = args.strong || setup.chain.all_infinite();
    const double g = strong ? greens_strong(setup.chain, setup.g0, args.x, args.xp, args.param)
                            : greens_finite(setup.chain, setup.g0, args.x, args.xp, args.param);
    out << format_number(g) << '\n';
    return kExitOk;
}

// --------------------------------------------------------------- scan

struct ScanArgs {
    std::string geometry = "oscillator";
    std::optional<std::string> config;
    double box_length = 1.0;
    double lo = 0.0;
    double hi = 200.0;
    double step = 0.01;
    std::optional<std::string> out;
    std::optional<int> threads;
    UnitFlags units;
};

int cmd_scan(const ScanArgs& args, std::ostream& out)
{
    const unsigned threads = resolve_threads(args.threads);
    if (args.lo > args.hi || !(args.step > 0.0)) {
        throw ConfigError("scan: requires lo <= hi and step > 0");
    }
    if (args.config) {
        const auto setup = build_chain(load_chain_config(*args.config));
        const RealFunction f = [&setup](double p) {
            return char_func(setup.chain, setup.g0, p).value_or_inf();
        };
        CsvTable table({"param", "abs_char", "sign"});
        for (const auto& row : char_scan_table(f, args.lo, args.hi, args.step, threads)) {
            table.add_row({format_number(row.param), format_number(row.abs_value),
                           std::to_string(row.sign)});
        }
        emit(table, args.out, out);
        return kExitOk;
    }
    if (args.geometry != "oscillator") {
        throw ConfigError("scan: use --config for geometries other than oscillator");
    }
    const OscillatorProblem problem(args.box_length, args.units.apply({}));
    CsvTable table({"v", "abs_reduced", "abs_full"});
    for (const auto& row : oscillator_scan_table(problem, args.lo, args.hi, args.step, threads)) {
        table.add_row({format_number(row.v), format_number(row.abs_reduced),
                       row.abs_full ? format_number(*row.abs_full) : std::string{}});
    }
    emit(table, args.out, out);
    return kExitOk;
}

// ----------------------------------------------------------- spectrum

struct SpectrumArgs {
    std::string geometry;
    int n_roots = 6;
    std::optional<double> tol;
    double box_length = 1.0;
    double radius = 1.0;
    std::optional<double> inner_radius;
    int mode = 0;
    double mu = -1.0;
    bool include_nodes = false;
    std::optional<int> threads;
    UnitFlags units;
};

void add_level(CsvTable& table, std::size_t index, const Root& root, double energy)
{
    table.add_row({std::to_string(index), format_number(root.value), format_number(energy),
                   format_number(root.residual), std::string(to_string(root.classification))});
}

int cmd_spectrum(const SpectrumArgs& args, std::ostream& out, std::ostream& err)
{
    const UnitSystem units = args.units.apply({});
    const double tol = args.tol.value_or(1e-10);
    if (!(tol > 0.0)) {
        throw ConfigError("--tol must be positive");
    }
    if (args.n_roots < 0) {
        throw ConfigError("--n-roots must be non-negative");
    }
    CsvTable table({"index", "root_param", "energy", "residual", "classification"});
    std::size_t requested = static_cast<std::size_t>(args.n_roots);
    std::size_t found = 0;

    const auto radial_energy = [&units](double kappa) {
        return units.hbar * units.hbar * kappa * kappa / (2.0 * units.mass);
    };

    if (args.geometry == "oscillator") {
        OscillatorOptions options;
        options.tol = tol;
        options.include_node_factor = args.include_nodes;
        options.threads = resolve_threads(args.threads);
        const OscillatorProblem problem(args.box_length, units);
        const auto levels = oscillator_spectrum(problem, args.n_roots, options);
        for (std::size_t i = 0; i < levels.size(); ++i) {
            add_level(table, i, levels[i].root, levels[i].energy);
            found += levels[i].root.classification != RootClass::node_factor;
        }
    } else if (args.geometry == "box") {
        const auto levels = box_spectrum_rect(args.box_length, args.n_roots, units, tol);
        for (std::size_t i = 0; i < levels.size(); ++i) {
            add_level(table, i, levels[i].root, levels[i].energy);
        }
        found = levels.size();
    } else if (args.geometry == "cylinder" || args.geometry == "sphere") {
        const bool cylinder = args.geometry == "cylinder";
        std::vector<Root> roots;
        if (args.inner_radius) {
            roots = cylinder ? cyl_annulus_spectrum(*args.inner_radius, args.radius, args.mode,
                                                    args.n_roots, tol)
                             : sph_shell_spectrum(*args.inner_radius, args.radius, args.mode,
                                                  args.n_roots, tol);
        } else {
            roots = cylinder ? cyl_dirichlet_spectrum(args.radius, args.mode, args.n_roots, tol)
                             : sph_dirichlet_spectrum(args.radius, args.mode, args.n_roots, tol);
        }
        for (std::size_t i = 0; i < roots.size(); ++i) {
            add_level(table, i, roots[i], radial_energy(roots[i].value));
        }
        found = roots.size();
    } else if (args.geometry == "delta-well") {
        requested = 1;
        if (const auto level = delta_well_bound_state(args.mu, units)) {
            add_level(table, 0, level->root, level->energy);
            found = 1;
        } else {
            requested = 0;
        }
    } else {
        throw ConfigError("spectrum: unknown geometry '" + args.geometry + "'");
    }

    table.write(out);
    if (found < requested) {
        err << "note: found " << found << " of " << requested << " requested roots\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------- table1

int cmd_table1(double tol, std::optional<int> threads_flag, std::ostream& out, std::ostream& err)
{
    OscillatorOptions options;
    options.threads = resolve_threads(threads_flag);
    const OscillatorProblem problem(1.0);
    const auto levels = oscillator_spectrum(problem, static_cast<int>(kTable1Reference.size()), options);

    char line[128];
    std::snprintf(line, sizeof line, "%-6s %14s %12s %12s\n", "level", "computed", "reference",
                  "abs_diff");
    out << line;
    bool ok = levels.size() == kTable1Reference.size();
    for (std::size_t i = 0; i < levels.size(); ++i) {
        const double diff = std::fabs(levels[i].energy - kTable1Reference[i]);
        ok = ok && diff <= tol;
        std::snprintf(line, sizeof line, "E%-5zu %14.6f %12.3f %12.6f\n", i, levels[i].energy,
                      kTable1Reference[i], diff);
        out << line;
    }
    if (!ok) {
        err << "table1: computed levels differ from the reference by more than " << tol << '\n';
        return kExitNumeric;
    }
    return kExitOk;
}

// ------------------------------------------------------------ specfun

struct SpecfunArgs {
    std::string function;
    double order = 0.0;
    double x = 1.0;
    double b = 0.5;
};

int cmd_specfun(const SpecfunArgs& args, std::ostream& out)
{
    const auto& f = args.function;
    const int n = static_cast<int>(args.order);
    const auto integer_order = [&] {
        if (std::floor(args.order) != args.order) {
            throw ConfigError("specfun: '" + f + "' needs an integer --order");
        }
    };
    const auto print_pair = [&out](const specfun::BesselPair& p) {
        out << format_number(p.regular) << ',' << format_number(p.irregular) << '\n';
    };
    if (f == "gamma") {
        out << format_number(specfun::gamma(args.x)) << '\n';
    } else if (f == "bessel_i") {
        integer_order();
        out << format_number(specfun::bessel_i(n, args.x)) << '\n';
    } else if (f == "bessel_k") {
        integer_order();
        out << format_number(specfun::bessel_k(n, args.x)) << '\n';
    } else if (f == "bessel_jy") {
        integer_order();
        print_pair(specfun::bessel_jy(n, args.x));
    } else if (f == "sph_modified") {
        integer_order();
        print_pair(specfun::sph_modified(n, args.x));
    } else if (f == "sph_ordinary") {
        integer_order();
        print_pair(specfun::sph_ordinary(n, args.x));
    } else if (f == "kummer_m") {
        out << format_number(specfun::kummer_m(args.order, args.b, args.x)) << '\n';
    } else if (f == "pcf_d") {
        out << format_number(specfun::pcf_d(args.order, args.x)) << '\n';
    } else if (f == "pcf_d_signlog") {
        const auto s = specfun::pcf_d_signlog(args.order, args.x);
        out << s.sign << ',' << (s.sign == 0 ? std::string{} : format_number(s.log_mag)) << '\n';
    } else if (f == "hermite") {
        integer_order();
        out << format_number(specfun::hermite(n, args.x)) << '\n';
    } else {
        throw ConfigError("specfun: unknown function '" + f + "'");
    }
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Green's functions of delta-potential chains and their spectra", "greenchain"};
    app.require_subcommand(1);

    GreensArgs greens;
    auto* greens_cmd = app.add_subcommand("greens", "Evaluate g(x, x') for a configured chain");
    greens_cmd->add_option("--config", greens.config, "Chain configuration (JSON)")->required();
    greens_cmd->add_option("--x", greens.x, "First argument")->required();
    greens_cmd->add_option("--xp", greens.xp, "Second argument")->required();
    greens_cmd->add_option("--param", greens.param, "k0, or v for the oscillator")->required();
    greens_cmd->add_flag("--strong", greens.strong, "Use the impenetrable-wall limit");
    greens.units.add_to(*greens_cmd);

    ScanArgs scan;
    auto* scan_cmd = app.add_subcommand("scan", "Tabulate a characteristic function as CSV");
    scan_cmd->add_option("--geometry", scan.geometry, "Only 'oscillator' without --config");
    scan_cmd->add_option("--config", scan.config, "Scan det G0 of a configured chain instead");
    scan_cmd->add_option("--a", scan.box_length, "Oscillator box length");
    scan_cmd->add_option("--lo", scan.lo, "Start of the scan");
    scan_cmd->add_option("--hi", scan.hi, "End of the scan");
    scan_cmd->add_option("--step", scan.step, "Grid step");
    scan_cmd->add_option("--out", scan.out, "Output CSV file (stdout when omitted)");
    scan_cmd->add_option("--threads", scan.threads, "Worker threads");
    scan.units.add_to(*scan_cmd);

    SpectrumArgs spectrum;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Locate constrained eigenvalues");
    spectrum_cmd->add_option("--geometry", spectrum.geometry,
                             "oscillator | box | cylinder | sphere | delta-well")
        ->required();
    spectrum_cmd->add_option("--n-roots", spectrum.n_roots, "Number of roots");
    spectrum_cmd->add_option("--tol", spectrum.tol, "Root tolerance (default 1e-10)");
    spectrum_cmd->add_option("--a", spectrum.box_length, "Box length (oscillator, box)");
    spectrum_cmd->add_option("--radius", spectrum.radius, "Outer radius (cylinder, sphere)");
    spectrum_cmd->add_option("--inner-radius", spectrum.inner_radius,
                             "Inner radius: annulus or shell");
    spectrum_cmd->add_option("--mode", spectrum.mode, "Azimuthal m or angular l");
    spectrum_cmd->add_option("--mu", spectrum.mu, "Raw delta strength (delta-well)");
    spectrum_cmd->add_flag("--include-nodes", spectrum.include_nodes,
                           "Also list zeros of D_v(alpha) (oscillator)");
    spectrum_cmd->add_option("--threads", spectrum.threads, "Worker threads");
    spectrum.units.add_to(*spectrum_cmd);

    double table_tol = 0.01;
    std::optional<int> table_threads;
    auto* table_cmd = app.add_subcommand("table1", "Confined oscillator levels vs reference data");
    table_cmd->add_option("--tol", table_tol, "Allowed absolute difference (default 0.01)");
    table_cmd->add_option("--threads", table_threads, "Worker threads");

    SpecfunArgs fn;
    auto* fn_cmd = app.add_subcommand("specfun", "Evaluate a special function (debugging aid)");
    fn_cmd->add_option("--fn", fn.function,
                       "gamma | bessel_i | bessel_k | bessel_jy | sph_modified | sph_ordinary | "
                       "kummer_m | pcf_d | pcf_d_signlog | hermite")
        ->required();
    fn_cmd->add_option("--order", fn.order, "Order (m, l, n, v) or a for kummer_m");
    fn_cmd->add_option("--x", fn.x, "Argument");
    fn_cmd->add_option("--b", fn.b, "Second Kummer parameter");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*greens_cmd) return cmd_greens(greens, out);
        if (*scan_cmd) return cmd_scan(scan, out);
        if (*spectrum_cmd) return cmd_spectrum(spectrum, out, err);
        if (*table_cmd) return cmd_table1(table_tol, table_threads, out, err);
        if (*fn_cmd) return cmd_specfun(fn, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ContractError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "numeric error: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitUsage;
}

} // namespace greenchain
