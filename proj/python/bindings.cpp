#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gbslocc/catalog.hpp"
#include "gbslocc/cli.hpp"
#include "gbslocc/clifford.hpp"
#include "gbslocc/discriminator.hpp"
#include "gbslocc/equivalence.hpp"
#include "gbslocc/numerics.hpp"
#include "gbslocc/report.hpp"

namespace py = pybind11;
using namespace gbslocc;

namespace {

py::object slope_value(const Slope &s) {
    if (s.is_infinite()) {
        return py::str("inf");
    }
    return py::int_(s.value());
}

py::list slopes(const std::set<Slope> &set) {
    py::list out;
    for (const auto &s : set) {
        out.append(slope_value(s));
    }
    return out;
}

std::vector<std::string> members(const std::set<CanonicalSet> &m) {
    std::vector<std::string> out;
    for (const auto &c : m) {
        out.push_back(c.str());
    }
    return out;
}

py::object witness(const Witness &w) {
    if (const auto *g = std::get_if<Gpm>(&w)) {
        return py::make_tuple(g->m, g->n);
    }
    if (const auto *f = std::get_if<FactorPair>(&w)) {
        return py::make_tuple(f->s, f->t);
    }
    return py::none();
}

}  // namespace

PYBIND11_MODULE(_gbs_locc, m) {
    m.doc() = "Local distinguishability of generalized Bell state sets";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ModulusMismatch>(m, "ModulusMismatch", PyExc_ValueError);
    py::register_exception<NumericsError>(m, "NumericsError", PyExc_RuntimeError);

    py::class_<Gpm>(m, "Gpm")
        .def(py::init<std::int64_t, std::int64_t, int>(), py::arg("m"), py::arg("n"), py::arg("d"))
        .def_readonly("m", &Gpm::m)
        .def_readonly("n", &Gpm::n)
        .def_readonly("d", &Gpm::d)
        .def("is_identity", &Gpm::is_identity)
        .def("__eq__", [](const Gpm &a, const Gpm &b) { return a == b; })
        .def("__hash__", [](const Gpm &g) { return py::hash(py::make_tuple(g.m, g.n, g.d)); })
        .def("__iter__", [](const Gpm &g) { return py::iter(py::make_tuple(g.m, g.n)); })
        .def("__repr__", [](const Gpm &g) { return "Gpm(" + g.str() + ", d=" + std::to_string(g.d) + ")"; });

    py::class_<GbsSet>(m, "GbsSet")
        .def(py::init([](int d, const std::vector<std::pair<std::int64_t, std::int64_t>> &pairs) {
                 std::vector<Gpm> el;
                 for (const auto &[a, b] : pairs) {
                     el.emplace_back(a, b, d);
                 }
                 return GbsSet(d, el);
             }),
             py::arg("d"), py::arg("elements"))
        .def_static("parse", &GbsSet::parse, py::arg("text"), py::arg("d"))
        .def_property_readonly("d", &GbsSet::modulus)
        .def_property_readonly("elements", [](const GbsSet &s) { return s.elements(); })
        .def("is_standard", &GbsSet::is_standard)
        .def("__len__", &GbsSet::size)
        .def("__str__", &GbsSet::str)
        .def("__repr__", [](const GbsSet &s) { return "GbsSet(d=" + std::to_string(s.modulus()) + ", " + s.str() + ")"; })
        .def("__eq__", [](const GbsSet &a, const GbsSet &b) { return a == b; });

    py::enum_<Verdict>(m, "Verdict")
        .value("DISTINGUISHABLE", Verdict::Distinguishable)
        .value("INDISTINGUISHABLE", Verdict::Indistinguishable)
        .value("INCONCLUSIVE", Verdict::Inconclusive);
    py::enum_<Mode>(m, "Mode").value("ONE_WAY", Mode::OneWay).value("FULL_LOCC", Mode::FullLocc);
    py::enum_<Condition>(m, "Condition")
        .value("T1_C1", Condition::T1C1)
        .value("T1_C2", Condition::T1C2)
        .value("T1_C3", Condition::T1C3)
        .value("THM2", Condition::Thm2)
        .value("THM3", Condition::Thm3)
        .value("SMALL_SET", Condition::SmallSet)
        .value("TOO_MANY", Condition::TooMany);

    py::class_<DecisionReport>(m, "DecisionReport")
        .def_readonly("set", &DecisionReport::set)
        .def_readonly("verdict", &DecisionReport::verdict)
        .def_readonly("mode", &DecisionReport::mode)
        .def_readonly("condition", &DecisionReport::condition)
        .def_readonly("index_cardinality", &DecisionReport::index_cardinality)
        .def_property_readonly("witness", [](const DecisionReport &r) { return witness(r.witness); })
        .def_property_readonly("wang_gap", [](const DecisionReport &r) { return slopes(r.wang_gap); })
        .def("to_json", [](const DecisionReport &r) { return report_json(r); })
        .def("__str__", &report_text);

    m.def("decide", &decide, py::arg("s"));
    m.def("check", [](const std::string &text, int d) { return decide(GbsSet::parse(text, d)); }, py::arg("text"),
          py::arg("d"));
    m.def("difference_set", [](const GbsSet &s) { return difference_set(s).elements; }, py::arg("s"));
    m.def("discriminant_set", [](const GbsSet &s) { return discriminant_set(s).witnesses; }, py::arg("s"));
    m.def("index_set", [](const GbsSet &s) { return slopes(index_set(s)); }, py::arg("s"));
    m.def(
        "wang_gap",
        [](const GbsSet &s) {
            const auto g = wang_gap(s);
            py::dict out;
            out["admissible"] = slopes(g.admissible);
            out["nonadmissible"] = slopes(g.nonadmissible);
            out["gap"] = slopes(g.gap);
            return out;
        },
        py::arg("s"));
    m.def("condition_commutative", &condition_commutative, py::arg("s"));
    m.def("condition_invertible", &condition_invertible, py::arg("s"));
    m.def("commutes", &commutes, py::arg("a"), py::arg("b"));
    m.def("weyl_exponent", [](const Gpm &a, const Gpm &b) { return weyl_exponent(a, b).value(); }, py::arg("a"),
          py::arg("b"));
    m.def(
        "solve_weyl_congruence",
        [](std::int64_t mm, std::int64_t n, int d) { return solve_weyl_congruence(Residue(mm, d), Residue(n, d)).pairs; },
        py::arg("m"), py::arg("n"), py::arg("d"));

    m.def(
        "enumerate_symplectic",
        [](int d) {
            std::vector<std::tuple<int, int, int, int>> out;
            for (const auto &w : enumerate_symplectic(d)) {
                out.emplace_back(w.a1(), w.b1(), w.a2(), w.b2());
            }
            return out;
        },
        py::arg("d"));
    m.def("symplectic_group_order", &symplectic_group_order, py::arg("d"));

    m.def("orbit", [](const GbsSet &s) { return members(orbit(s).members); }, py::arg("s"));
    m.def("canonical_form", [](const GbsSet &s) { return canonical_form(s).str(); }, py::arg("s"));
    m.def("membership", &membership, py::arg("s"), py::arg("rep"));
    m.def(
        "classify",
        [](int d, int k) {
            const auto fam = representatives(d, k);
            const auto c = classify(d, k, fam.sets(), fam.labels());
            py::list classes;
            for (std::size_t i = 0; i < c.classes.size(); ++i) {
                py::dict e;
                e["label"] = c.classes[i].label;
                e["representative"] = c.classes[i].orbit.representative.str();
                e["size"] = c.classes[i].orbit.size();
                e["verdict"] = fam.entries[i].verdict == KnownVerdict::Dist ? "DIST" : "INDIST";
                classes.append(e);
            }
            py::dict out;
            out["classes"] = classes;
            out["total_standard"] = c.coverage.total_standard;
            out["covered"] = c.coverage.covered;
            return out;
        },
        py::arg("d"), py::arg("k"));
    m.def("golden_table2_fixture", [] { return std::string(golden_table2_fixture()); });

    m.def("gpm_matrix", [](const Gpm &g) { return gpm_matrix(g).entries(); }, py::arg("g"));
    m.def("weyl_relation_check", &weyl_relation_check, py::arg("a"), py::arg("b"));
    m.def("one_way_gram_check", &one_way_gram_check, py::arg("s"), py::arg("t"));
    m.def("commuting_witness", [](const GbsSet &s) { return commuting_witness(s).amplitudes(); }, py::arg("s"));
    m.def("composite_witness", [](const GbsSet &s) { return composite_witness(s).amplitudes(); }, py::arg("s"));
    m.def(
        "witness_deviation",
        [](const GbsSet &s, const Eigen::VectorXcd &psi) { return witness_deviation(s, StateVector(psi)); },
        py::arg("s"), py::arg("psi"));
    m.attr("VERIFY_TOLERANCE") = kVerifyTolerance;

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "gbs-locc");
            std::vector<const char *> argv;
            for (const auto &a : args) {
                argv.push_back(a.c_str());
            }
            std::ostringstream out, err;
            const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
