#include "greenchain/chain.hpp"
#include "greenchain/cli.hpp"
#include "greenchain/config.hpp"
#include "greenchain/errors.hpp"
#include "greenchain/greens.hpp"
#include "greenchain/specfun.hpp"
#include "greenchain/spectrum.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace greenchain;

namespace {

py::tuple signlog_tuple(const SignLog& s)
{
    return py::make_tuple(s.sign, s.log_mag);
}

py::tuple pair_tuple(const specfun::BesselPair& p)
{
    return py::make_tuple(p.regular, p.irregular);
}

} // namespace

PYBIND11_MODULE(_greenchain, m)
{
    m.doc() = "Green's functions of delta-potential chains and the spectra they constrain";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", error.ptr());
    py::register_exception<RangeError>(m, "RangeError", error.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", error.ptr());
    py::register_exception<ContractError>(m, "ContractError", error.ptr());
    auto numeric = py::register_exception<NumericError>(m, "NumericError", error.ptr());
    py::register_exception<NearPoleError>(m, "NearPoleError", numeric.ptr());
    py::register_exception<SingularMatrixError>(m, "SingularMatrixError", numeric.ptr());
    py::register_exception<RootNotConverged>(m, "RootNotConverged", numeric.ptr());

    // special functions
    m.def("gamma", &specfun::gamma, py::arg("x"));
    m.def("gamma_signlog", [](double x) { return signlog_tuple(specfun::gamma_signlog(x)); },
          py::arg("x"), "(sign, log|Gamma(x)|)");
    m.def("bessel_i", &specfun::bessel_i, py::arg("m"), py::arg("x"));
    m.def("bessel_k", &specfun::bessel_k, py::arg("m"), py::arg("x"));
    m.def("bessel_jy", [](int order, double x) { return pair_tuple(specfun::bessel_jy(order, x)); },
          py::arg("m"), py::arg("x"), "(J_m(x), Y_m(x))");
    m.def("sph_modified", [](int l, double x) { return pair_tuple(specfun::sph_modified(l, x)); },
          py::arg("l"), py::arg("x"), "(i_l(x), k_l(x))");
    m.def("sph_ordinary", [](int l, double x) { return pair_tuple(specfun::sph_ordinary(l, x)); },
          py::arg("l"), py::arg("x"), "(j_l(x), y_l(x))");
    m.def("kummer_m", &specfun::kummer_m, py::arg("a"), py::arg("b"), py::arg("x"));
    m.def("pcf_d", &specfun::pcf_d, py::arg("v"), py::arg("y"));
    m.def("pcf_d_signlog", [](double v, double y) { return signlog_tuple(specfun::pcf_d_signlog(v, y)); },
          py::arg("v"), py::arg("y"), "(sign, log|D_v(y)|)");
    m.def("hermite", &specfun::hermite, py::arg("n"), py::arg("x"));

    // free Green's functions
    py::enum_<Geometry>(m, "Geometry")
        .value("rectangular", Geometry::rectangular)
        .value("cylindrical", Geometry::cylindrical)
        .value("spherical", Geometry::spherical)
        .value("oscillator", Geometry::oscillator)
        .value("custom", Geometry::custom);

    py::class_<UnitSystem>(m, "UnitSystem")
        .def(py::init([](double hbar, double mass, double omega0) {
                 UnitSystem u{hbar, mass, omega0};
                 u.validate();
                 return u;
             }),
             py::arg("hbar") = 1.0, py::arg("mass") = 1.0, py::arg("omega0") = 1.0)
        .def_readonly("hbar", &UnitSystem::hbar)
        .def_readonly("mass", &UnitSystem::mass)
        .def_readonly("omega0", &UnitSystem::omega0)
        .def("rescale_coupling", &UnitSystem::rescale_coupling, py::arg("mu"))
        .def("__repr__", [](const UnitSystem& u) {
            std::ostringstream os;
            os << "UnitSystem(hbar=" << u.hbar << ", mass=" << u.mass << ", omega0=" << u.omega0 << ")";
            return os.str();
        });

    m.def("g0_rect", [](double z, double zp, double k0) { return g0_rect(z, zp, Wavenumber(k0)); },
          py::arg("z"), py::arg("zp"), py::arg("k0"));
    m.def("g0_cyl",
          [](double rho, double rhop, double k0, int mode) { return g0_cyl(rho, rhop, Wavenumber(k0), mode); },
          py::arg("rho"), py::arg("rhop"), py::arg("k0"), py::arg("mode"));
    m.def("g0_sph", [](double r, double rp, double k0, int mode) { return g0_sph(r, rp, Wavenumber(k0), mode); },
          py::arg("r"), py::arg("rp"), py::arg("k0"), py::arg("mode"));
    m.def("g0_osc", &g0_osc, py::arg("z"), py::arg("zp"), py::arg("v"),
          py::arg("units") = UnitSystem{}, py::arg("center") = 0.0);

    py::class_<FreeGreens>(m, "FreeGreens")
        .def_static("rectangular", &FreeGreens::rectangular)
        .def_static("cylindrical", &FreeGreens::cylindrical, py::arg("mode"))
        .def_static("spherical", &FreeGreens::spherical, py::arg("mode"))
        .def_static("oscillator", &FreeGreens::oscillator, py::arg("units") = UnitSystem{},
                    py::arg("center") = 0.0)
        .def("__call__", &FreeGreens::evaluate, py::arg("x"), py::arg("xp"), py::arg("param"))
        .def("weight", &FreeGreens::weight, py::arg("position"))
        .def_property_readonly("geometry", &FreeGreens::geometry)
        .def_property_readonly("mode", &FreeGreens::mode);

    // chains
    py::class_<DeltaChain>(m, "DeltaChain")
        .def_static("finite", &DeltaChain::finite, py::arg("geometry"), py::arg("positions"),
                    py::arg("couplings"), py::arg("units") = UnitSystem{},
                    "Walls with raw strengths mu (lambda = 2 m mu / hbar^2).")
        .def_static("rescaled", &DeltaChain::rescaled, py::arg("geometry"), py::arg("positions"),
                    py::arg("lambdas"), py::arg("units") = UnitSystem{})
        .def_static("impenetrable", &DeltaChain::impenetrable, py::arg("geometry"),
                    py::arg("positions"), py::arg("units") = UnitSystem{})
        .def_property_readonly("geometry", &DeltaChain::geometry)
        .def_property_readonly("positions", [](const DeltaChain& c) {
            return std::vector<double>(c.positions().begin(), c.positions().end());
        })
        .def_property_readonly("lambdas", [](const DeltaChain& c) {
            return std::vector<double>(c.lambdas().begin(), c.lambdas().end());
        })
        .def_property_readonly("all_infinite", &DeltaChain::all_infinite)
        .def("__len__", &DeltaChain::size);

    m.def("greens_finite", &greens_finite, py::arg("chain"), py::arg("g0"), py::arg("x"),
          py::arg("xp"), py::arg("param"));
    m.def("greens_strong", &greens_strong, py::arg("chain"), py::arg("g0"), py::arg("x"),
          py::arg("xp"), py::arg("param"));
    m.def("char_func",
          [](const DeltaChain& c, const FreeGreens& g0, double param) {
              return signlog_tuple(char_func(c, g0, param));
          },
          py::arg("chain"), py::arg("g0"), py::arg("param"), "(sign, log|det G0|)");
    m.def("boundary_matrix",
          [](const DeltaChain& c, const FreeGreens& g0, double param) {
              const auto b = boundary_matrix(c, g0, param);
              std::vector<std::vector<double>> rows(b.entries.size());
              for (std::size_t i = 0; i < rows.size(); ++i)
                  for (std::size_t j = 0; j < rows.size(); ++j) rows[i].push_back(b.entries(i, j));
              return rows;
          },
          py::arg("chain"), py::arg("g0"), py::arg("param"));

    // spectra
    py::enum_<RootClass>(m, "RootClass")
        .value("generic", RootClass::generic)
        .value("even_bracket", RootClass::even_bracket)
        .value("odd_bracket", RootClass::odd_bracket)
        .value("node_factor", RootClass::node_factor);

    py::class_<Root>(m, "Root")
        .def_readonly("value", &Root::value)
        .def_readonly("residual", &Root::residual)
        .def_readonly("width", &Root::width)
        .def_readonly("iterations", &Root::iterations)
        .def_readonly("classification", &Root::classification)
        .def_property_readonly("bracket", [](const Root& r) {
            return py::make_tuple(r.bracket.lo, r.bracket.hi);
        });
    py::class_<Level>(m, "Level")
        .def_readonly("root", &Level::root)
        .def_readonly("energy", &Level::energy);

    m.def("brent",
          [](const std::function<double(double)>& f, double lo, double hi, double tol) {
              return brent(f, Bracket{lo, hi, f(lo), f(hi)}, tol);
          },
          py::arg("f"), py::arg("lo"), py::arg("hi"), py::arg("tol") = 1e-12);
    m.def("oscillator_spectrum",
          [](double box_length, int n_roots, const UnitSystem& units, double tol,
             bool include_node_factor, unsigned threads) {
              OscillatorOptions options;
              options.tol = tol;
              options.include_node_factor = include_node_factor;
              options.threads = threads;
              py::gil_scoped_release release;
              return oscillator_spectrum(OscillatorProblem(box_length, units), n_roots, options);
          },
          py::arg("box_length") = 1.0, py::arg("n_roots") = 6, py::arg("units") = UnitSystem{},
          py::arg("tol") = 1e-10, py::arg("include_node_factor") = false, py::arg("threads") = 1);
    m.def("oscillator_char_reduced",
          [](double v, double box_length, const UnitSystem& units) {
              return oscillator_char_reduced(v, OscillatorProblem(box_length, units));
          },
          py::arg("v"), py::arg("box_length") = 1.0, py::arg("units") = UnitSystem{});
    m.def("oscillator_char_full",
          [](double v, double box_length, const UnitSystem& units) {
              return oscillator_char_full(v, OscillatorProblem(box_length, units));
          },
          py::arg("v"), py::arg("box_length") = 1.0, py::arg("units") = UnitSystem{});
    m.def("box_spectrum_rect", &box_spectrum_rect, py::arg("box_length"), py::arg("n"),
          py::arg("units") = UnitSystem{}, py::arg("tol") = 1e-12);
    m.def("cyl_dirichlet_spectrum", &cyl_dirichlet_spectrum, py::arg("radius"), py::arg("mode"),
          py::arg("n"), py::arg("tol") = 1e-13);
    m.def("cyl_annulus_spectrum", &cyl_annulus_spectrum, py::arg("inner"), py::arg("outer"),
          py::arg("mode"), py::arg("n"), py::arg("tol") = 1e-13);
    m.def("sph_dirichlet_spectrum", &sph_dirichlet_spectrum, py::arg("radius"), py::arg("mode"),
          py::arg("n"), py::arg("tol") = 1e-13);
    m.def("sph_shell_spectrum", &sph_shell_spectrum, py::arg("inner"), py::arg("outer"),
          py::arg("mode"), py::arg("n"), py::arg("tol") = 1e-13);
    m.def("delta_well_bound_state", &delta_well_bound_state, py::arg("mu"),
          py::arg("units") = UnitSystem{});

    // configuration files and the command line
    m.def("load_chain",
          [](const std::string& path) {
              auto setup = build_chain(load_chain_config(path));
              return py::make_tuple(setup.chain, setup.g0);
          },
          py::arg("path"), "(DeltaChain, FreeGreens) from a JSON configuration file");
    m.def("run_cli",
          [](std::vector<std::string> args) {
              args.insert(args.begin(), "greenchain");
              std::ostringstream out;
              std::ostringstream err;
              const int code = run_cli(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), "Run the command-line tool in-process: (exit code, stdout, stderr)");
}
