#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>

#include "gradplate/dispersion.hpp"
#include "gradplate/ellipticity.hpp"
#include "gradplate/fracture.hpp"
#include "gradplate/kinematics.hpp"
#include "gradplate/lattice.hpp"
#include "gradplate/material.hpp"
#include "gradplate/motion.hpp"
#include "gradplate/reduction.hpp"
#include "gradplate/wavesim.hpp"

namespace py = pybind11;
using namespace gradplate;

namespace {

SurfaceGeometry flat_geometry() {
  return strain_state(SurfaceMotion::identity(), 0.0, 0.0, 0.0).geo;
}

py::tuple v3_tuple(const V3& v) { return py::make_tuple(v.x, v.y, v.z); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "midsurface theory toolkit for thin gradient-elastic plates";
  m.attr("__version__") = "1.0.0";

  // ------------------------------------------------------------ material --
  py::class_<MaterialSpec>(m, "MaterialSpec")
      .def(py::init<>())
      .def_readwrite("E", &MaterialSpec::E)
      .def_readwrite("nu", &MaterialSpec::nu)
      .def_readwrite("rho_R", &MaterialSpec::rho_R)
      .def_readwrite("h", &MaterialSpec::h)
      .def_readwrite("d", &MaterialSpec::d)
      .def_readwrite("ell_s", &MaterialSpec::ell_s)
      .def_readwrite("ell_k", &MaterialSpec::ell_k)
      .def("__repr__", [](const MaterialSpec& s) {
        return "MaterialSpec(E=" + std::to_string(s.E) + ", nu=" + std::to_string(s.nu) +
               ", rho_R=" + std::to_string(s.rho_R) + ", h=" + std::to_string(s.h) +
               ", d=" + std::to_string(s.d) + ")";
      });

  py::class_<DerivedCoeffs>(m, "DerivedCoeffs")
      .def_readonly("lambda_", &DerivedCoeffs::lambda)
      .def_readonly("mu", &DerivedCoeffs::mu)
      .def_readonly("a", &DerivedCoeffs::a)
      .def_readonly("b", &DerivedCoeffs::b)
      .def_readonly("c", &DerivedCoeffs::c)
      .def_readonly("ell_s", &DerivedCoeffs::ell_s)
      .def_readonly("ell_k", &DerivedCoeffs::ell_k)
      .def_readonly("ell_s2", &DerivedCoeffs::ell_s2)
      .def_readonly("ell_k2", &DerivedCoeffs::ell_k2)
      .def_readonly("rho_s", &DerivedCoeffs::rho_s)
      .def_readonly("E", &DerivedCoeffs::E)
      .def_readonly("nu", &DerivedCoeffs::nu)
      .def_readonly("rho_R", &DerivedCoeffs::rho_R)
      .def_readonly("h", &DerivedCoeffs::h)
      .def_readonly("d", &DerivedCoeffs::d);

  m.def("derive_coefficients", &derive_coefficients, py::arg("spec"),
        "Midsurface energy coefficients for a material and plate geometry.");
  m.def("classical_limit", &classical_limit, py::arg("spec"),
        "Same material with both microstructure lengths set to zero.");
  m.def("load_material", &load_material, py::arg("path"));
  m.def("parse_material_text", &parse_material_text, py::arg("text"));

  // --------------------------------------------------------- ellipticity --
  py::enum_<EllipticityClass>(m, "EllipticityClass")
      .value("StronglyElliptic", EllipticityClass::StronglyElliptic)
      .value("LegendreHadamardOnly", EllipticityClass::LegendreHadamardOnly)
      .value("Indefinite", EllipticityClass::Indefinite);

  py::class_<EllipticityReport>(m, "EllipticityReport")
      .def_readonly("classification", &EllipticityReport::cls)
      .def_readonly("min_value", &EllipticityReport::min_value)
      .def_readonly("tangent_min", &EllipticityReport::tangent_min)
      .def_readonly("samples", &EllipticityReport::samples)
      .def_readonly("seed", &EllipticityReport::seed)
      .def_property_readonly(
          "min_a", [](const EllipticityReport& r) { return py::make_tuple(r.min_a.x, r.min_a.y); })
      .def_property_readonly("min_b",
                             [](const EllipticityReport& r) { return v3_tuple(r.min_b); });

  m.def(
      "acoustic_contraction_flat",
      [](const DerivedCoeffs& co, std::array<double, 2> a, std::array<double, 3> b) {
        return acoustic_contraction(flat_geometry(), co, V2{a[0], a[1]}, V3{b[0], b[1], b[2]});
      },
      py::arg("co"), py::arg("a"), py::arg("b"),
      "Principal-symbol quadratic form at the flat rest state.");
  m.def(
      "classify_ellipticity_flat",
      [](const DerivedCoeffs& co, int samples, unsigned long long seed) {
        return classify_ellipticity(flat_geometry(), co, samples, seed);
      },
      py::arg("co"), py::arg("samples") = 512, py::arg("seed") = 1ull);

  // ---------------------------------------------------------- dispersion --
  py::class_<DispersionSample>(m, "DispersionSample")
      .def_readonly("k", &DispersionSample::k)
      .def_readonly("cL2", &DispersionSample::cL2)
      .def_readonly("cT2", &DispersionSample::cT2)
      .def_readonly("cN2", &DispersionSample::cN2)
      .def("__repr__", [](const DispersionSample& s) {
        return "DispersionSample(k=" + std::to_string(s.k) + ", cL2=" + std::to_string(s.cL2) +
               ", cT2=" + std::to_string(s.cT2) + ", cN2=" + std::to_string(s.cN2) + ")";
      });

  m.def("dispersion_point", &dispersion_point, py::arg("co"), py::arg("k"),
        "Squared phase velocities of the three branches at wavenumber k.");
  m.def("dispersion_sweep", &dispersion_sweep, py::arg("co"), py::arg("kmin"), py::arg("kmax"),
        py::arg("n"), py::arg("logspace") = false);
  m.def("normal_crossing_k2", &normal_crossing_k2, py::arg("co"));
  m.def("longitudinal_crossing_k2", &longitudinal_crossing_k2, py::arg("co"));

  // ------------------------------------------------------------ wavesim ---
  py::class_<WaveSimulation>(m, "WaveSimulation")
      .def(py::init<const DerivedCoeffs&, int>(), py::arg("co"), py::arg("N"))
      .def("size", &WaveSimulation::size)
      .def("time", &WaveSimulation::time)
      .def("add_displacement", &WaveSimulation::add_displacement, py::arg("comp"),
           py::arg("k1"), py::arg("k2"), py::arg("amp"), py::arg("phase") = 0.0)
      .def("add_velocity", &WaveSimulation::add_velocity, py::arg("comp"), py::arg("k1"),
           py::arg("k2"), py::arg("amp"), py::arg("phase") = 0.0)
      .def("add_force", &WaveSimulation::add_force, py::arg("comp"), py::arg("k1"),
           py::arg("k2"), py::arg("amp"), py::arg("phase") = 0.0)
      .def("max_frequency", &WaveSimulation::max_frequency)
      .def("advance_exact", &WaveSimulation::advance_exact, py::arg("dt"))
      .def("advance_rk4", &WaveSimulation::advance_rk4, py::arg("dt"), py::arg("nsub"))
      .def("energy", &WaveSimulation::energy)
      .def("energy_with_forcing", &WaveSimulation::energy_with_forcing)
      .def("momentum", [](const WaveSimulation& s) { return v3_tuple(s.momentum()); })
      .def("displacement",
           [](const WaveSimulation& s, double Y1, double Y2) {
             return v3_tuple(s.displacement(Y1, Y2));
           })
      .def("spectrum", [](const WaveSimulation& s, int k1, int k2) {
        auto a = s.spectrum(k1, k2);
        return py::make_tuple(a.x, a.y, a.z);
      });

  m.def(
      "measure_phase_velocity",
      [](const DerivedCoeffs& co, int k1, int k2, const std::string& branch, bool use_rk4,
         int grid) {
        if (branch.size() != 1) throw std::invalid_argument("branch must be 'L', 'T' or 'N'");
        return measure_phase_velocity(co, k1, k2, branch[0], use_rk4, nullptr, grid);
      },
      py::arg("co"), py::arg("k1"), py::arg("k2"), py::arg("branch"),
      py::arg("use_rk4") = false, py::arg("grid") = 0,
      "Seed one branch at an integer wavevector, evolve, fit omega / |k|.");

  // ------------------------------------------------------------- lattice --
  py::class_<ChainSpec>(m, "ChainSpec")
      .def(py::init<>())
      .def_readwrite("N_p", &ChainSpec::N_p)
      .def_readwrite("d", &ChainSpec::d)
      .def_readwrite("M", &ChainSpec::M)
      .def_readwrite("k_d", &ChainSpec::k_d);

  py::class_<ShearCoeffs>(m, "ShearCoeffs")
      .def_readonly("cT2", &ShearCoeffs::cT2)
      .def_readonly("ell_s2", &ShearCoeffs::ell_s2)
      .def_readonly("ell_k2", &ShearCoeffs::ell_k2);

  m.def("shear_coeffs", &shear_coeffs, py::arg("spec"));
  m.def("discrete_dispersion", &discrete_dispersion, py::arg("spec"), py::arg("k"));
  m.def("continuum_dispersion", &continuum_dispersion, py::arg("co"), py::arg("k"));
  m.def("identify_lengths", &identify_lengths, py::arg("spec"), py::arg("kd_grid"),
        "Fit the two squared lengths from the discrete dispersion; returns "
        "(ell_s2, ell_k2).");

  // ----------------------------------------------------------- reduction --
  py::enum_<MotionFamily>(m, "MotionFamily")
      .value("Stretch", MotionFamily::Stretch)
      .value("Bend", MotionFamily::Bend)
      .value("Mixed", MotionFamily::Mixed);

  py::class_<ConvergenceReport>(m, "ConvergenceReport")
      .def_readonly("h", &ConvergenceReport::h)
      .def_readonly("stored_err", &ConvergenceReport::stored_err)
      .def_readonly("kinetic_err", &ConvergenceReport::kinetic_err)
      .def_readonly("stored_slope", &ConvergenceReport::stored_slope)
      .def_readonly("kinetic_slope", &ConvergenceReport::kinetic_slope)
      .def_readonly("stored_monotone", &ConvergenceReport::stored_monotone)
      .def_readonly("kinetic_monotone", &ConvergenceReport::kinetic_monotone);

  m.def("convergence_study", &convergence_study, py::arg("base"), py::arg("family"),
        py::arg("h_list"), py::arg("quad_order") = 12,
        "Fiber integrals against the midsurface densities as h shrinks (d = h).");

  // ------------------------------------------------------------ fracture --
  py::class_<CrackConfig>(m, "CrackConfig")
      .def(py::init<>())
      .def_readwrite("alpha", &CrackConfig::alpha)
      .def_readwrite("beta", &CrackConfig::beta)
      .def_readwrite("gamma", &CrackConfig::gamma)
      .def_readwrite("N", &CrackConfig::N);

  py::class_<CrackProfile>(m, "CrackProfile")
      .def_readonly("config", &CrackProfile::config)
      .def_readonly("n_used", &CrackProfile::n_used)
      .def_readonly("coeff", &CrackProfile::coeff)
      .def_readonly("residual", &CrackProfile::residual)
      .def_readonly("cond", &CrackProfile::cond)
      .def("eval", &CrackProfile::eval, py::arg("x"), py::arg("deriv") = 0)
      .def("sup_norm", &CrackProfile::sup_norm, py::arg("deriv"), py::arg("lo") = -1.0,
           py::arg("hi") = 1.0);

  py::class_<FieldSample>(m, "FieldSample")
      .def_readonly("v", &FieldSample::v)
      .def_readonly("vx", &FieldSample::vx)
      .def_readonly("vz", &FieldSample::vz);

  m.def("solve_crack", &solve_crack, py::arg("config"),
        "Clamped spectral solve of the gradient crack-opening problem.");
  m.def("classical_reference", &classical_reference, py::arg("gamma"), py::arg("x"));
  m.def("finite_hilbert", &finite_hilbert, py::arg("g"), py::arg("x"),
        py::arg("panel_order") = 20,
        "Principal-value transform (1/pi) p.v. int g(s)/(x - s) ds over (-1, 1).");
  m.def("crack_basis_hilbert", &crack_basis_hilbert, py::arg("k"), py::arg("n_basis"),
        py::arg("x"));
  m.def("reconstruct_field", &reconstruct_field, py::arg("profile"), py::arg("x"),
        py::arg("z"), "Half-plane harmonic extension of the opening and its gradient.");
  m.def("tip_diagnostics", &tip_diagnostics, py::arg("profile"));
}
