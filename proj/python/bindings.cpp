#include "whg/bargmann.hpp"
#include "whg/coherent.hpp"
#include "whg/fock.hpp"
#include "whg/grassmann.hpp"
#include "whg/qukit.hpp"
#include "whg/report_io.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>
#include <vector>

namespace py = pybind11;

using whg::CheckReport;
using whg::Radical;
using whg::Rational;
using whg::RelationResult;
namespace fk = whg::fock;
namespace gr = whg::grassmann;
namespace qk = whg::qukit;
namespace bgm = whg::bargmann;
namespace co = whg::coherent;

namespace {

// Exact values cross the boundary as text; python callers can feed the
// rational ones to fractions.Fraction directly.
std::vector<std::tuple<int, int, std::string>> operator_entries(const fk::SparseOperator& op) {
    std::vector<std::tuple<int, int, std::string>> entries;
    entries.reserve(op.entries().size());
    for (const auto& [pos, value] : op.entries()) {
        entries.emplace_back(pos.first, pos.second, value.str());
    }
    return entries;
}

fk::FockBasis make_basis(int rank, int level) { return fk::FockBasis(rank, level); }

py::dict spin_operator_entries(int two_j) {
    const auto ops = co::spin_operators(two_j);
    py::dict out;
    out["plus"] = operator_entries(ops.plus);
    out["minus"] = operator_entries(ops.minus);
    out["z"] = operator_entries(ops.z);
    out["squared"] = operator_entries(ops.squared);
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact representations of the generalized Weyl-Heisenberg algebra A(r), "
              "commuting Grassmann calculus, and Barut-Girardello coherent states.";

    py::class_<Radical>(m, "Radical")
        .def(py::init<int>(), py::arg("value"))
        .def(py::init([](int num, int den) { return Radical(Rational(num, den)); }),
             py::arg("numerator"), py::arg("denominator"))
        .def_static(
            "sqrt", [](int radicand) { return Radical::sqrt_int(1, radicand); },
            py::arg("radicand"))
        .def_static(
            "sqrt_fraction",
            [](int num, int den) { return Radical::sqrt_rational(Rational(num, den)); },
            py::arg("numerator"), py::arg("denominator"))
        .def("is_zero", &Radical::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &Radical::str)
        .def("__repr__", [](const Radical& r) { return "Radical(" + r.str() + ")"; });

    py::class_<RelationResult>(m, "RelationResult")
        .def_readonly("relation", &RelationResult::relation)
        .def_readonly("passed", &RelationResult::passed)
        .def_readonly("witness", &RelationResult::witness)
        .def("__repr__", [](const RelationResult& r) {
            return "<" + std::string(r.passed ? "PASS " : "FAIL ") + r.relation + ">";
        });

    py::class_<CheckReport>(m, "CheckReport")
        .def_readonly("check", &CheckReport::check)
        .def_readonly("rank", &CheckReport::rank)
        .def_readonly("level", &CheckReport::level)
        .def_readonly("details", &CheckReport::details)
        .def_readonly("notes", &CheckReport::notes)
        .def("passed", &CheckReport::passed)
        .def("max_deviation", &CheckReport::max_deviation)
        .def("__repr__", [](const CheckReport& r) {
            return "<CheckReport " + r.check + " rank=" + std::to_string(r.rank) +
                   " level=" + std::to_string(r.level) +
                   (r.passed() ? " PASS>" : " FAIL>");
        });

    m.def("reports_text", &whg::reports_text, py::arg("reports"));
    m.def("reports_json", &whg::reports_json, py::arg("reports"));

    // Fock representation of A(r).
    m.def(
        "fock_dimension", [](int rank, int level) { return make_basis(rank, level).size(); },
        py::arg("rank"), py::arg("level"));
    m.def(
        "fock_basis",
        [](int rank, int level) {
            const fk::FockBasis basis = make_basis(rank, level);
            std::vector<std::vector<int>> states;
            for (const auto& state : basis.states()) states.push_back(state.n);
            return states;
        },
        py::arg("rank"), py::arg("level"));
    m.def(
        "annihilation_entries",
        [](int mode, int rank, int level) {
            return operator_entries(fk::annihilation(mode, make_basis(rank, level)));
        },
        py::arg("mode"), py::arg("rank"), py::arg("level"));
    m.def(
        "creation_entries",
        [](int mode, int rank, int level) {
            return operator_entries(fk::creation(mode, make_basis(rank, level)));
        },
        py::arg("mode"), py::arg("rank"), py::arg("level"));
    m.def(
        "number_entries",
        [](int mode, int rank, int level) {
            return operator_entries(fk::number(mode, make_basis(rank, level)));
        },
        py::arg("mode"), py::arg("rank"), py::arg("level"));
    m.def(
        "structure_function",
        [](int mode, const std::vector<int>& occupations, int level) {
            return whg::to_string(fk::structure_function(mode, fk::MultiIndex{occupations}, level));
        },
        py::arg("mode"), py::arg("occupations"), py::arg("level"));
    m.def("cartan_matrix", &fk::cartan_matrix, py::arg("rank"));

    m.def("basis_check", &fk::basis_check, py::arg("rank"), py::arg("level"));
    m.def("verify_wh_relations", &fk::verify_wh_relations, py::arg("rank"), py::arg("level"));
    m.def("su_generators_check", &fk::su_generators_check, py::arg("rank"), py::arg("level"));
    m.def("serre_check", &fk::serre_check, py::arg("rank"), py::arg("level"));
    m.def("commuting_ladders_check", &fk::commuting_ladders_check, py::arg("rank"),
          py::arg("level"));
    m.def(
        "large_k_deviation",
        [](int rank, int level, int n_max) {
            return whg::to_string(fk::large_k_deviation(rank, level, n_max));
        },
        py::arg("rank"), py::arg("level"), py::arg("n_max"));
    m.def("large_k_check", &fk::large_k_check, py::arg("rank"), py::arg("level"),
          py::arg("n_max"));
    m.def("verify_algebra", &fk::algebra_reports, py::arg("rank"), py::arg("level"),
          "Every fock-side suite at one (rank, level)");

    // Multi-qubit realization.
    m.def("verify_qukit", &qk::verify_qukit, py::arg("level"),
          py::arg("cap") = qk::kDefaultCap);
    m.def(
        "dicke_state",
        [](int k, int n) {
            const qk::MultiQubitVector state = qk::dicke_state(k, n);
            py::dict amplitudes;
            for (const auto& [bits, value] : state.amplitudes()) {
                amplitudes[py::str(qk::bitstring_str(bits, k))] = value.str();
            }
            return amplitudes;
        },
        py::arg("level"), py::arg("excitations"));

    // Grassmann calculus.
    py::class_<gr::GrassmannElement>(m, "Grassmann")
        .def_static("constant",
                    [](int k, const Radical& c) { return gr::GrassmannElement::constant(k, c); })
        .def_static("theta", &gr::GrassmannElement::theta, py::arg("order"), py::arg("index"))
        .def_static("theta_bar", &gr::GrassmannElement::theta_bar, py::arg("order"),
                    py::arg("index"))
        .def_static("eta", &gr::eta, py::arg("order"))
        .def_static("eta_bar", &gr::eta_bar, py::arg("order"))
        .def_static("sym_poly", &gr::sym_poly, py::arg("order"), py::arg("degree"))
        .def_static("dicke_poly", &gr::dicke_poly, py::arg("order"), py::arg("degree"))
        .def_static("sigma_measure", &gr::sigma_measure, py::arg("order"))
        .def("order", &gr::GrassmannElement::order)
        .def("is_zero", &gr::GrassmannElement::is_zero)
        .def("scaled", &gr::GrassmannElement::scaled)
        .def("derivative",
             [](const gr::GrassmannElement& x) { return gr::eta_derivative(x); })
        .def(
            "berezin",
            [](const gr::GrassmannElement& x, const std::string& side) {
                if (side != "theta" && side != "theta_bar") {
                    throw std::invalid_argument("side must be 'theta' or 'theta_bar'");
                }
                return gr::berezin(x, side == "theta" ? gr::Side::theta : gr::Side::theta_bar);
            },
            py::arg("side"))
        .def("constant_term", &gr::GrassmannElement::constant_term)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def("__mul__", [](const gr::GrassmannElement& a,
                           const gr::GrassmannElement& b) { return gr::g_mul(a, b); })
        .def("__pow__",
             [](const gr::GrassmannElement& a, int n) { return gr::g_pow(a, n); })
        .def(py::self == py::self)
        .def("__str__", &gr::GrassmannElement::str)
        .def("__repr__", &gr::GrassmannElement::str);

    // Analytic (Bargmann) realization.
    m.def("verify_bargmann", &bgm::verify_bargmann, py::arg("rank"), py::arg("level"));
    m.def(
        "bargmann_basis_function",
        [](const std::vector<int>& occupations, int level) {
            std::vector<std::pair<std::vector<int>, std::string>> terms;
            const auto f = bgm::basis_function(fk::MultiIndex{occupations}, level);
            for (const auto& [mon, coeff] : f.terms()) {
                terms.emplace_back(mon.exponents, coeff.str());
            }
            return terms;
        },
        py::arg("occupations"), py::arg("level"));

    // Barut-Girardello coherent states.
    m.def(
        "bg_coefficients",
        [](int rank, int level) {
            py::dict coeffs;
            for (const auto& [index, value] : co::bg_coefficients(rank, level)) {
                coeffs[py::tuple(py::cast(index.n))] = value.str();
            }
            return coeffs;
        },
        py::arg("rank"), py::arg("level"));
    m.def(
        "coherent_state_entries",
        [](int rank, int level) {
            py::list entries;
            const auto state = co::build_coherent_state(rank, level);
            for (const auto& entry : co::state_entries(state)) {
                py::dict d;
                d["index"] = entry.index.n;
                d["coefficient"] = entry.coefficient.str();
                d["eta_power"] = entry.eta_power;
                d["z_monomial"] = entry.z_monomial;
                entries.append(std::move(d));
            }
            return entries;
        },
        py::arg("rank"), py::arg("level"));
    m.def(
        "gaussian_moment",
        [](int n, int m2) { return whg::to_string(co::gaussian_moment(n, m2)); },
        py::arg("n"), py::arg("m"));
    m.def("spin_operators", &spin_operator_entries, py::arg("two_j"));
    m.def("eigen_check", &co::eigen_check, py::arg("rank"), py::arg("level"));
    m.def("resolution_check", &co::resolution_check, py::arg("rank"), py::arg("level"));
    m.def("recurrence_check", &co::recurrence_check, py::arg("rank"), py::arg("level"));
}
