// SPDX-License-Identifier: Apache-2.0

#include "mnofdm/error.hpp"
#include "mnofdm/ini.hpp"
#include "mnofdm/numerology.hpp"
#include "mnofdm/oracle.hpp"
#include "mnofdm/report.hpp"
#include "mnofdm/sim.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace mnofdm;

namespace {

Mode parse_mode(const std::string& name)
{
    if (name == "continuous") return Mode::Continuous;
    if (name == "discrete") return Mode::Discrete;
    throw Error(Errc::InvalidArgument, "unknown mode '" + name + "' (expected continuous|discrete)");
}

Direction parse_direction(const std::string& name)
{
    if (name == "wide<-narrow") return Direction::WideFromNarrow;
    if (name == "narrow<-wide") return Direction::NarrowFromWide;
    throw Error(Errc::InvalidArgument, "unknown direction '" + name + "' (expected wide<-narrow|narrow<-wide)");
}

template <class F>
std::string capture(F&& write)
{
    std::ostringstream out;
    write(out);
    return out.str();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Inter-numerology interference analysis for mixed-numerology OFDM";

    py::object error = py::module_::import("builtins").attr("type")(
        "Error", py::make_tuple(py::handle(PyExc_ValueError)), py::dict());
    error.attr("__module__") = "mnofdm";
    error.attr("code") = py::none();
    m.attr("Error") = error;

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object cls = py::module_::import("mnofdm._core").attr("Error");
            py::object inst = cls(e.what());
            inst.attr("code") = to_string(e.code());
            inst.attr("numeric_domain") = is_numeric_domain(e.code());
            PyErr_SetObject(cls.ptr(), inst.ptr());
        }
    });

    py::class_<Numerology>(m, "Numerology")
        .def_readonly("index", &Numerology::index)
        .def_readonly("subcarrier_spacing_hz", &Numerology::subcarrier_spacing_hz)
        .def_readonly("symbol_duration_s", &Numerology::symbol_duration_s)
        .def_readonly("num_subcarriers", &Numerology::num_subcarriers);

    py::class_<NumerologyPair>(m, "NumerologyPair")
        .def_static("make", &NumerologyPair::make, py::arg("bandwidth_hz"), py::arg("delta_f_wide"),
                    py::arg("delta_f_narrow"))
        .def_static("from_counts", &NumerologyPair::from_counts, py::arg("nu"), py::arg("n1"))
        .def_property_readonly("wide", &NumerologyPair::wide)
        .def_property_readonly("narrow", &NumerologyPair::narrow)
        .def_property_readonly("nu", &NumerologyPair::nu)
        .def_property_readonly("mu", &NumerologyPair::mu)
        .def_property_readonly("n1", &NumerologyPair::n1)
        .def_property_readonly("n2", &NumerologyPair::n2)
        .def_property_readonly("bandwidth_hz", &NumerologyPair::bandwidth_hz)
        .def_property_readonly("sampling_duration_s", &NumerologyPair::sampling_duration_s)
        .def("to_json", [](const NumerologyPair& p) {
            return capture([&](std::ostream& out) { write_pair_json(p, out); });
        })
        .def("__repr__", [](const NumerologyPair& p) {
            return "NumerologyPair(nu=" + std::to_string(p.nu()) + ", n1=" + std::to_string(p.n1()) + ")";
        });

    py::class_<InnerProduct>(m, "InnerProduct")
        .def_readonly("value", &InnerProduct::value)
        .def_readonly("magnitude", &InnerProduct::magnitude)
        .def_readonly("d", &InnerProduct::d)
        .def_readonly("n1", &InnerProduct::n1)
        .def_property_readonly("kind", [](const InnerProduct& ip) { return to_string(ip.kind); })
        .def_property_readonly("direction", [](const InnerProduct& ip) { return to_string(ip.direction); })
        .def("to_json", [](const InnerProduct& ip) {
            return capture([&](std::ostream& out) { write_inner_product_json(ip, out); });
        });

    m.def("relative_distance", &relative_distance, py::arg("m"), py::arg("n"), py::arg("nu"));
    m.def("magnitude_continuous_at", &magnitude_continuous_at, py::arg("d"), py::arg("nu"));
    m.def("magnitude_discrete_at", &magnitude_discrete_at, py::arg("d"), py::arg("nu"), py::arg("n1"));
    m.def("rho_continuous", &rho_continuous, py::arg("pair"), py::arg("m"), py::arg("n"));
    m.def("rho_discrete", &rho_discrete, py::arg("pair"), py::arg("m"), py::arg("n"));
    m.def("rho_continuous_reverse", &rho_continuous_reverse, py::arg("pair"), py::arg("n"), py::arg("m"));
    m.def("rho_discrete_reverse", &rho_discrete_reverse, py::arg("pair"), py::arg("n"), py::arg("m"));
    m.def(
        "rho",
        [](const NumerologyPair& pair, std::int64_t wide_m, std::int64_t n, const std::string& mode) {
            return rho(pair, parse_mode(mode), wide_m, n);
        },
        py::arg("pair"), py::arg("m"), py::arg("n"), py::arg("mode") = "discrete");
    m.def("beta", &beta, py::arg("d"), py::arg("n1"));
    m.def("discretization_error_pct", &discretization_error_pct, py::arg("d"), py::arg("n1"));
    m.def("min_samples_for_tolerance", &min_samples_for_tolerance, py::arg("d"), py::arg("tol_pct"));
    m.def("is_orthogonal", &is_orthogonal, py::arg("m"), py::arg("n"), py::arg("nu"));

    py::class_<SubcarrierSubset>(m, "SubcarrierSubset")
        .def_readonly("name", &SubcarrierSubset::name)
        .def_readonly("wide", &SubcarrierSubset::wide)
        .def_readonly("narrow", &SubcarrierSubset::narrow)
        .def_property_readonly("co_located",
                               [](const SubcarrierSubset& s) {
                                   std::vector<std::pair<std::int64_t, std::int64_t>> out;
                                   for (const auto& c : s.co_located) out.emplace_back(c.m, c.n);
                                   return out;
                               })
        .def_readonly("max_cross_magnitude", &SubcarrierSubset::max_cross_magnitude)
        .def_readonly("certified", &SubcarrierSubset::certified);
    m.def("orthogonal_subsets", &orthogonal_subsets, py::arg("pair"));

    m.def(
        "ini_matrix",
        [](const NumerologyPair& pair, const std::string& mode, const std::string& direction, std::int64_t cap) {
            IniMatrix mat = ini_matrix(pair, parse_mode(mode), parse_direction(direction), cap);
            std::vector<std::vector<std::complex<double>>> rows(static_cast<std::size_t>(mat.rows()));
            for (std::int64_t r = 0; r < mat.rows(); ++r) {
                rows[static_cast<std::size_t>(r)].reserve(static_cast<std::size_t>(mat.cols()));
                for (std::int64_t c = 0; c < mat.cols(); ++c) rows[static_cast<std::size_t>(r)].push_back(mat.at(r, c).value);
            }
            return rows;
        },
        py::arg("pair"), py::arg("mode") = "discrete", py::arg("direction") = "wide<-narrow",
        py::arg("cap") = kDefaultMatrixCap);

    m.def("rho_continuous_quadrature", &oracle::rho_continuous_quadrature, py::arg("pair"), py::arg("m"),
          py::arg("n"), py::arg("tol") = 1e-11);
    m.def("rho_discrete_soe", &oracle::rho_discrete_soe, py::arg("pair"), py::arg("m"), py::arg("n"));
    m.def("segment_rho_soe", &oracle::segment_rho_soe, py::arg("pair"), py::arg("m"), py::arg("n"), py::arg("q"));

    m.def(
        "magnitude_curve_csv",
        [](const std::vector<std::int64_t>& nus, const std::string& d, std::optional<std::int64_t> n1) {
            CurveSpec spec{nus, DRange::parse(d), n1};
            return capture([&](std::ostream& out) { write_magnitude_curve(spec, out); });
        },
        py::arg("nus"), py::arg("d"), py::arg("n1") = py::none());
    m.def(
        "beta_surface_csv",
        [](const std::vector<std::int64_t>& n1s, const std::string& d, bool by_samples) {
            return capture([&](std::ostream& out) { write_beta_surface(n1s, DRange::parse(d), by_samples, out); });
        },
        py::arg("n1s"), py::arg("d"), py::arg("by_samples") = false);

    m.def(
        "simulate_json",
        [](std::int64_t nu, std::int64_t n1, std::int64_t narrow_symbols, const std::string& constellation,
           const std::string& active, std::uint64_t seed) {
            ExperimentConfig cfg;
            cfg.nu = nu;
            cfg.n1 = n1;
            cfg.narrow_symbols = narrow_symbols;
            cfg.constellation = parse_constellation(constellation);
            cfg.active = parse_active_set(active);
            cfg.seed = seed;
            IniReport report;
            {
                py::gil_scoped_release release;
                report = run_experiment(cfg);
            }
            return capture([&](std::ostream& out) { write_report_json(report, out); });
        },
        py::arg("nu") = 2, py::arg("n1") = 64, py::arg("narrow_symbols") = 4, py::arg("constellation") = "qpsk",
        py::arg("active") = "all", py::arg("seed") = 42);
}
