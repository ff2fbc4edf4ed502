#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qsdiag/bloch.hpp"
#include "qsdiag/channels.hpp"
#include "qsdiag/cli.hpp"
#include "qsdiag/composite.hpp"
#include "qsdiag/diagram.hpp"
#include "qsdiag/error.hpp"
#include "qsdiag/purify.hpp"
#include "qsdiag/render.hpp"

namespace py = pybind11;
using qsd::cplx;

namespace {

using CArray = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

qsd::ComplexMatrix to_matrix(const CArray& a) {
  if (a.ndim() != 2) throw qsd::DimensionError("expected a 2-D array");
  const auto r = static_cast<std::size_t>(a.shape(0));
  const auto c = static_cast<std::size_t>(a.shape(1));
  return qsd::ComplexMatrix::from_row_major(r, c, std::vector<cplx>(a.data(), a.data() + r * c));
}

CArray to_array(const qsd::ComplexMatrix& m) {
  CArray out({m.rows(), m.cols()});
  std::copy(m.data().begin(), m.data().end(), out.mutable_data());
  return out;
}

CArray to_array(const std::vector<cplx>& v) {
  CArray out(v.size());
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

qsd::DensityMatrix to_density(const CArray& a, double tol) {
  return qsd::DensityMatrix::from_matrix(to_matrix(a), {tol, tol});
}

py::array_t<double> to_array(const Eigen::Matrix3d& m) {
  py::array_t<double> out({3, 3});
  auto w = out.mutable_unchecked<2>();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) w(i, j) = m(i, j);
  return out;
}

py::list operators(const qsd::KrausChannel& ch) {
  py::list out;
  for (const auto& f : ch.operators()) out.append(to_array(f));
  return out;
}

qsd::KrausChannel channel_arg(const py::object& spec) {
  if (py::isinstance<py::str>(spec))
    return qsd::make_channel(qsd::parse_channel_spec(spec.cast<std::string>()));
  std::vector<qsd::ComplexMatrix> ops;
  for (const auto& item : spec) ops.push_back(to_matrix(item.cast<CArray>()));
  return qsd::KrausChannel(std::move(ops));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "density matrices, single-qubit channels, Bloch maps and diagrams of states";

  py::register_exception<qsd::InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<qsd::DomainError>(m, "DomainError", PyExc_ValueError);

  m.def(
      "validate_density",
      [](const CArray& a, double tol) {
        const auto r = qsd::validate_density(to_matrix(a), tol);
        py::dict d;
        d["hermiticity_defect"] = r.hermiticity_defect;
        d["trace_defect"] = r.trace_defect;
        d["min_eigenvalue"] = r.min_eigenvalue;
        d["passed"] = r.passed;
        return d;
      },
      py::arg("matrix"), py::arg("tol") = 1e-10);

  m.def(
      "dm_from_pure",
      [](const CArray& amps) {
        std::vector<cplx> v(amps.data(), amps.data() + amps.size());
        return to_array(qsd::dm_from_pure(qsd::PureState::from_amplitudes(std::move(v))).matrix());
      },
      py::arg("amplitudes"));

  m.def(
      "spectral_decompose",
      [](const CArray& rho, double tol) {
        py::list out;
        for (const auto& t : qsd::spectral_decompose(to_density(rho, tol)))
          out.append(py::make_tuple(t.eigenvalue, to_array(t.eigenvector.amplitudes())));
        return out;
      },
      py::arg("rho"), py::arg("tol") = 1e-10);

  m.def(
      "partial_trace",
      [](const CArray& rho, std::vector<int> traced, double tol) {
        const auto d = to_density(rho, tol);
        return to_array(
            qsd::partial_trace(d, qsd::QubitSubset::of(d.n_qubits(), std::move(traced))).matrix());
      },
      py::arg("rho"), py::arg("traced"), py::arg("tol") = 1e-10);

  m.def(
      "purify",
      [](const CArray& rho, double tol) {
        const auto d = to_density(rho, tol);
        const auto p = qsd::purify_single_qubit(d);
        py::dict out;
        out["state"] = to_array(p.state.amplitudes());
        out["theta1"] = p.theta1;
        out["theta2"] = p.theta2;
        out["phi"] = p.phi;
        out["circuit"] = qsd::to_dsl(qsd::synthesize_purification_circuit(d));
        return out;
      },
      py::arg("rho"), py::arg("tol") = 1e-10);

  m.def(
      "channel_operators", [](const std::string& spec) { return operators(channel_arg(py::str(spec))); },
      py::arg("spec"));

  m.def(
      "apply_channel",
      [](const py::object& channel, const CArray& rho, std::size_t steps, double tol) {
        const auto ch = channel_arg(channel);
        auto d = to_density(rho, tol);
        for (std::size_t k = 0; k < steps; ++k) d = qsd::apply_channel(ch, d, tol);
        return to_array(d.matrix());
      },
      py::arg("channel"), py::arg("rho"), py::arg("steps") = 1, py::arg("tol") = 1e-10);

  m.def(
      "bloch_map",
      [](const py::object& channel) {
        const auto map = qsd::affine_map_of_channel(channel_arg(channel));
        return py::make_tuple(to_array(map.m), py::make_tuple(map.c.x(), map.c.y(), map.c.z()));
      },
      py::arg("channel"));

  m.def(
      "ellipsoid",
      [](const py::object& channel, std::size_t n_lat, std::size_t n_lon) {
        const auto pts = qsd::ellipsoid_samples(qsd::affine_map_of_channel(channel_arg(channel)),
                                                n_lat, n_lon);
        py::array_t<double> out({pts.size(), std::size_t{3}});
        auto w = out.mutable_unchecked<2>();
        for (std::size_t i = 0; i < pts.size(); ++i) {
          w(i, 0) = pts[i].x;
          w(i, 1) = pts[i].y;
          w(i, 2) = pts[i].z;
        }
        return out;
      },
      py::arg("channel"), py::arg("n_lat") = 9, py::arg("n_lon") = 16);

  m.def(
      "simulate",
      [](const std::string& dsl) {
        return to_array(qsd::simulate(qsd::parse_circuit(dsl)).amplitudes());
      },
      py::arg("circuit"));

  m.def(
      "active_lines",
      [](const std::string& dsl, const std::string& mode) {
        const auto d = qsd::build_diagram(qsd::parse_circuit(dsl), qsd::mode_from_name(mode));
        std::vector<std::vector<std::size_t>> out;
        for (std::size_t t = 0; t <= d.layers.size(); ++t) out.push_back(d.active_lines(t));
        return out;
      },
      py::arg("circuit"), py::arg("mode") = "simplified");

  m.def(
      "render_diagram",
      [](const std::string& dsl, const std::string& mode, const std::string& format) {
        const auto d = qsd::build_diagram(qsd::parse_circuit(dsl), qsd::mode_from_name(mode));
        if (format == "svg") return qsd::render_svg(d);
        if (format == "text") return qsd::render_text(d);
        throw qsd::InputError("unknown format '" + format + "'");
      },
      py::arg("circuit"), py::arg("mode") = "simplified", py::arg("format") = "text");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = qsd::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
