#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sphfir/filtering.hpp"
#include "sphfir/io.hpp"
#include "sphfir/spharm.hpp"
#include "sphfir/verify.hpp"

namespace py = pybind11;
using namespace sphfir;

namespace {

using RowMajorXcd =
    Eigen::Matrix<complexd, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

RowMajorXcd field_values(const SampledField& f) {
  return Eigen::Map<const RowMajorXcd>(f.values.data(), f.grid.n_beta(),
                                       f.grid.n_alpha());
}

SampledField make_field(const SphereGrid& g, const RowMajorXcd& values, bool real_hint) {
  if (values.rows() != g.n_beta() || values.cols() != g.n_alpha())
    throw std::invalid_argument("values shape does not match grid");
  SampledField f{g};
  f.real_hint = real_hint;
  Eigen::Map<RowMajorXcd>(f.values.data(), g.n_beta(), g.n_alpha()) = values;
  return f;
}

}  // namespace

PYBIND11_MODULE(_sphfir, m) {
  m.doc() = "spherical-harmonic transforms and phase-sensitive FIR filtering";

  py::class_<EulerAngles>(m, "EulerAngles")
      .def(py::init<double, double, double>(), py::arg("alpha"), py::arg("beta"),
           py::arg("gamma") = 0.0)
      .def_readonly("alpha", &EulerAngles::alpha)
      .def_readonly("beta", &EulerAngles::beta)
      .def_readonly("gamma", &EulerAngles::gamma);

  py::class_<Rotation>(m, "Rotation")
      .def(py::init<>())
      .def_static("from_euler", &Rotation::from_euler)
      .def_static("from_matrix", [](const Eigen::Matrix3d& m3) { return Rotation(m3); })
      .def("matrix", &Rotation::matrix, py::return_value_policy::copy)
      .def("inverse", &Rotation::inverse)
      .def("euler", &Rotation::euler)
      .def("__mul__", [](const Rotation& a, const Rotation& b) { return a * b; });

  py::enum_<SphereGrid::Scheme>(m, "Scheme")
      .value("GaussLegendre", SphereGrid::Scheme::GaussLegendre)
      .value("Equiangular", SphereGrid::Scheme::Equiangular);

  py::class_<SphereGrid>(m, "SphereGrid")
      .def_property_readonly("n_beta", &SphereGrid::n_beta)
      .def_property_readonly("n_alpha", &SphereGrid::n_alpha)
      .def_readonly("beta_nodes", &SphereGrid::beta_nodes)
      .def_readonly("alpha_nodes", &SphereGrid::alpha_nodes)
      .def_readonly("beta_weights", &SphereGrid::beta_weights)
      .def_readonly("alpha_weights", &SphereGrid::alpha_weights)
      .def("node_weight", &SphereGrid::node_weight)
      .def("weight_sum", &SphereGrid::weight_sum)
      .def("exact_bandwidth", &SphereGrid::exact_bandwidth);

  m.def("make_grid", &make_grid, py::arg("L"), py::arg("oversample") = 2,
        py::arg("scheme") = SphereGrid::Scheme::GaussLegendre);
  m.def("make_equiangular_grid", &make_equiangular_grid);
  m.def("make_gauss_legendre_grid", &make_gauss_legendre_grid);
  m.def("unit_vector", &unit_vector);

  m.def("assoc_legendre", &assoc_legendre);
  m.def("norm_const", &norm_const);
  m.def("eval_Y", &eval_Y, py::arg("l"), py::arg("m"), py::arg("beta"), py::arg("alpha"));
  m.def("eval_Y_column",
        py::overload_cast<int, double, double>(&eval_Y_column));

  m.def("little_d", &little_d);
  m.def("wigner_D", &wigner_D);
  m.def("wigner_D_from_rotation", &wigner_D_from_rotation);

  py::class_<Spectrum>(m, "Spectrum")
      .def(py::init<int, bool>(), py::arg("bandwidth"), py::arg("real_valued") = false)
      .def_property_readonly("bandwidth", &Spectrum::bandwidth)
      .def_property_readonly("real_valued", &Spectrum::real_valued)
      .def("coeff", &Spectrum::coeff)
      .def("set_coeff", &Spectrum::set_coeff)
      .def("degree", [](const Spectrum& s, int l) { return Eigen::RowVectorXcd(s[l]); })
      .def("degree_norm", &Spectrum::degree_norm)
      .def("total_energy", &Spectrum::total_energy)
      .def("max_abs_diff", &Spectrum::max_abs_diff)
      .def("axially_symmetric", &Spectrum::axially_symmetric, py::arg("tol") = 1e-10)
      .def("conjugate_symmetric", &Spectrum::conjugate_symmetric, py::arg("tol") = 1e-10);

  m.def("delta_spectrum", &delta_spectrum);
  m.def("fisher_von_mises_spectrum", &fisher_von_mises_spectrum);
  m.def("fvm_bessel_ratio", &fvm_bessel_ratio);
  m.def("magnitude_only_spectrum", &magnitude_only_spectrum);
  m.def("phase_swap", &phase_swap);
  m.def("random_spectrum", &random_spectrum, py::arg("L"), py::arg("seed"),
        py::arg("real_valued") = false);
  m.def("magnitude_phase", [](const Eigen::RowVectorXcd& f) {
    const MagnitudePhase mp = magnitude_phase(f);
    return py::make_tuple(mp.magnitude, Eigen::RowVectorXcd(mp.phase));
  });

  py::class_<DofCounts>(m, "DofCounts")
      .def_readonly("total", &DofCounts::total)
      .def_readonly("magnitude", &DofCounts::magnitude)
      .def_readonly("phase", &DofCounts::phase)
      .def_readonly("percent_phase", &DofCounts::percent_phase);
  m.def("dof_counts", &dof_counts, py::arg("L"), py::arg("real_valued") = true);

  py::class_<SampledField>(m, "SampledField")
      .def(py::init(&make_field), py::arg("grid"), py::arg("values"),
           py::arg("real_hint") = false)
      .def_readonly("grid", &SampledField::grid)
      .def_readonly("real_hint", &SampledField::real_hint)
      .def_property_readonly("values", &field_values)
      .def("energy", &SampledField::energy);

  m.def("synthesize", &synthesize);
  m.def("synth_at", py::overload_cast<const Spectrum&, double, double>(&synth_at));
  m.def("analyze_quadrature", &analyze_quadrature);
  m.def("analyze_irf", &analyze_irf, py::arg("field"), py::arg("L"),
        py::arg("window") = std::vector<double>{});

  py::class_<FirTap>(m, "FirTap")
      .def(py::init([](complexd w, const Rotation& r) {
             return FirTap{w, r};
           }),
           py::arg("weight"), py::arg("rotation"))
      .def_readonly("weight", &FirTap::weight)
      .def_readonly("rotation", &FirTap::rotation);

  py::class_<TransferFunction>(m, "TransferFunction")
      .def_static("identity", &TransferFunction::identity)
      .def_property_readonly("bandwidth", &TransferFunction::bandwidth)
      .def("matrix", [](const TransferFunction& h, int l) { return Eigen::MatrixXcd(h[l]); });

  m.def("fir_transfer", &fir_transfer);
  m.def("axisym_transfer", &axisym_transfer);
  m.def("rotation_transfer", &rotation_transfer);
  m.def("apply", &apply);
  m.def("rotate_spectrum", &rotate_spectrum);
  m.def("cascade", &cascade);
  m.def("left_convolve", &left_convolve);
  m.def("rotation_convolve", &rotation_convolve);
  m.def("five_point_taps", &five_point_taps);
  m.def("five_point_lowpass", &five_point_lowpass);
  m.def("three_point_lowpass", &three_point_lowpass);

  py::class_<ButterflyParams>(m, "ButterflyParams")
      .def(py::init<>())
      .def_readwrite("sigma", &ButterflyParams::sigma)
      .def_readwrite("lambda_", &ButterflyParams::lambda)
      .def_readwrite("n_beta", &ButterflyParams::n_beta)
      .def_readwrite("n_alpha", &ButterflyParams::n_alpha)
      .def_readwrite("beta_max", &ButterflyParams::beta_max)
      .def_readwrite("orthogonal", &ButterflyParams::orthogonal);
  m.def("butterfly_taps", &butterfly_taps);

  m.def("transfer_norms",
        [](const TransferFunction& h) { return transfer_norms(h); });
  m.def("delta_normalized_response", &delta_normalized_response);
  m.def("impulse_response", &impulse_response);

  py::class_<SurfaceSamples>(m, "SurfaceSamples")
      .def_readonly("x", &SurfaceSamples::x)
      .def_readonly("y", &SurfaceSamples::y)
      .def_readonly("z", &SurfaceSamples::z);

  py::enum_<AnalysisMethod>(m, "AnalysisMethod")
      .value("Quadrature", AnalysisMethod::Quadrature)
      .value("Irf", AnalysisMethod::Irf);

  py::class_<SpharmSpectrum>(m, "SpharmSpectrum")
      .def_property_readonly("bandwidth", &SpharmSpectrum::bandwidth)
      .def_readonly("x", &SpharmSpectrum::x)
      .def_readonly("y", &SpharmSpectrum::y)
      .def_readonly("z", &SpharmSpectrum::z)
      .def("block", &SpharmSpectrum::block);

  m.def("spharm_analyze", &spharm_analyze, py::arg("fx"), py::arg("fy"), py::arg("fz"),
        py::arg("L"), py::arg("method") = AnalysisMethod::Quadrature);
  m.def("spharm_filter", &spharm_filter);
  m.def("spharm_synthesize", &spharm_synthesize);
  m.def("bumpy_sphere", &bumpy_sphere, py::arg("grid"), py::arg("L"), py::arg("seed"),
        py::arg("amplitude") = 0.15);
  m.def("radial_variance", &radial_variance);
  m.def("surface_area", &surface_area);

  m.def("read_pgm", &read_pgm);
  m.def("write_pgm", [](const std::string& p, const SampledField& f) { write_pgm(p, f); });
  m.def("read_coefficients",
        py::overload_cast<const std::string&>(&read_coefficients));
  m.def("write_coefficients",
        py::overload_cast<const std::string&, const Spectrum&>(&write_coefficients));
  m.def("read_field", py::overload_cast<const std::string&>(&read_field));
  m.def("write_field", py::overload_cast<const std::string&, const SampledField&>(&write_field));
  m.def("write_obj", &write_obj);

  m.def("verify", [](const std::string& level) {
    const VerifyReport rep =
        run_verify(level == "full" ? VerifyLevel::Full : VerifyLevel::Quick);
    py::list out;
    for (const auto& c : rep.checks)
      out.append(py::make_tuple(c.name, c.pass, c.measured, c.tolerance));
    return out;
  }, py::arg("level") = "quick");
}
