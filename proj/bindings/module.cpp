#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "ezdop/engine.hpp"
#include "ezdop/homotopy.hpp"
#include "ezdop/operators.hpp"
#include "ezdop/resolution.hpp"
#include "ezdop/worked_example.hpp"

namespace py = pybind11;
using namespace ezdop;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null:
            return py::none();
        case nlohmann::json::value_t::boolean:
            return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer:
            return py::int_(j.get<int64_t>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<uint64_t>());
        case nlohmann::json::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            return py::none();
    }
}

struct PyRing {
    RingPtr R;
};
struct PyComplex {
    ComplexPtr F;
};
struct PyBundle {
    OperatorBundle B;
};
struct PyMap {
    ComplexMap g;
};

LiftPolicy parse_policy(const std::string& name) {
    if (name == "canonical") return LiftPolicy::Canonical;
    if (name == "randomized") return LiftPolicy::Randomized;
    throw std::invalid_argument("policy must be 'canonical' or 'randomized'");
}

py::list matrix_list(const FreeModuleMap& f) {
    py::list rows;
    for (int r = 0; r < f.target().rank(); ++r) {
        py::list row;
        for (int c = 0; c < f.source().rank(); ++c) row.append(f.entry(r, c).str());
        rows.append(row);
    }
    return rows;
}

py::dict homotopy_result(const HomotopyOutcome& outcome) {
    py::dict d;
    d["found"] = homotopy_found(outcome);
    if (homotopy_found(outcome)) {
        const auto& cert = std::get<HomotopyCertificate>(outcome);
        d["equations"] = cert.equations;
        py::dict comps;
        for (const auto& [i, m] : cert.theta.components())
            comps[py::str(std::to_string(i))] = matrix_list(m);
        d["theta"] = comps;
    } else {
        const auto& cert = std::get<InfeasibilityCertificate>(outcome);
        d["bounded_only"] = cert.bounded_only;
        py::list witness;
        for (size_t r = 0; r < cert.witness.size(); ++r)
            if (cert.witness[r] != 0)
                witness.append(py::make_tuple(static_cast<int>(r), to_string(cert.witness[r])));
        d["witness"] = witness;
        d["system_rows"] = cert.system.rows();
        d["system_cols"] = cert.system.cols();
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact computer algebra for cohomological operators on complexes over "
              "quotients by an exact zero divisor.";

    py::register_exception<ParseError>(m, "JobParseError");

    py::class_<PyRing>(m, "Ring")
        .def_static(
            "make",
            [](std::vector<std::string> vars, std::vector<int> degrees,
               std::vector<std::string> relations, bool graded) {
                return PyRing{PresentedRing::make(std::move(vars), std::move(degrees),
                                                  relations, TermOrder::grevlex(), graded)};
            },
            py::arg("vars"), py::arg("degrees"), py::arg("relations"),
            py::arg("graded") = true)
        .def("parse",
             [](const PyRing& R, const std::string& text) { return RingElem::parse(R.R, text); })
        .def("normal_form",
             [](const PyRing& R, const std::string& text) {
                 return R.R->normal_form(Polynomial::parse(R.R->ambient(), text)).str();
             })
        .def("graded_dimension",
             [](const PyRing& R, int64_t d) { return R.R->graded_dimension(d); })
        .def("graded_basis",
             [](const PyRing& R, int64_t d) {
                 std::vector<std::string> out;
                 for (const Monomial& mono : R.R->graded_basis(d).monomials)
                     out.push_back(Polynomial::monomial(R.R->ambient(), Rational(1), mono).str());
                 return out;
             })
        .def("groebner_basis",
             [](const PyRing& R) {
                 std::vector<std::string> out;
                 for (const Polynomial& p : R.R->basis().elements()) out.push_back(p.str());
                 return out;
             })
        .def("__repr__", [](const PyRing& R) {
            std::string s = "Ring(";
            const auto& names = R.R->ambient()->names();
            for (size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
            return s + "; " + std::to_string(R.R->ideal().generators.size()) + " relations)";
        });

    py::class_<RingElem>(m, "Elem")
        .def("__add__", &RingElem::operator+)
        .def("__sub__", static_cast<RingElem (RingElem::*)(const RingElem&) const>(
                            &RingElem::operator-))
        .def("__mul__", static_cast<RingElem (RingElem::*)(const RingElem&) const>(
                            &RingElem::operator*))
        .def("__neg__", static_cast<RingElem (RingElem::*)() const>(&RingElem::operator-))
        .def("__eq__", &RingElem::operator==)
        .def("__pow__", &RingElem::pow)
        .def("is_zero", &RingElem::is_zero)
        .def("degree", [](const RingElem& e) { return e.degree(); })
        .def("__str__", &RingElem::str)
        .def("__repr__", [](const RingElem& e) { return "Elem(" + e.str() + ")"; });

    m.def(
        "quotient",
        [](const PyRing& S, const RingElem& x) { return PyRing{quotient_by(S.R, x)}; },
        py::arg("ring"), py::arg("elem"), "Quotient of a presented ring by a principal ideal.");
    m.def(
        "project",
        [](const PyRing& R, const RingElem& s) { return project(R.R, s); },
        py::arg("ring"), py::arg("elem"));
    m.def(
        "lift", [](const PyRing& S, const RingElem& r) { return lift(S.R, r); },
        py::arg("ring"), py::arg("elem"));
    m.def(
        "annihilator",
        [](const PyRing& R, const RingElem& a) {
            std::vector<std::string> out;
            for (const Polynomial& p : annihilator(R.R, a).generators) out.push_back(p.str());
            return out;
        },
        py::arg("ring"), py::arg("elem"));
    m.def(
        "check_exact_pair",
        [](const PyRing& S, const RingElem& x, const RingElem& y) {
            ExactPairReport rep = check_exact_pair(S.R, x, y);
            py::dict d;
            d["ok"] = rep.ok;
            d["product_zero"] = rep.product_zero;
            d["ann_x_in_y"] = rep.ann_x_in_y;
            d["ann_y_in_x"] = rep.ann_y_in_x;
            d["summary"] = rep.summary();
            return d;
        },
        py::arg("ring"), py::arg("x"), py::arg("y"));

    py::class_<PyComplex>(m, "Complex")
        .def_static(
            "build",
            [](const PyRing& R, int lo, std::vector<std::vector<int>> twists,
               std::map<int, std::vector<std::vector<std::string>>> maps) {
                std::vector<GradedFreeModule> modules;
                for (auto& tw : twists)
                    modules.push_back(GradedFreeModule{R.R, std::move(tw)});
                std::map<int, FreeModuleMap> diffs;
                for (auto& [i, rows] : maps) {
                    const GradedFreeModule& src = modules.at(static_cast<size_t>(i - lo));
                    const GradedFreeModule& tgt = modules.at(static_cast<size_t>(i - 1 - lo));
                    std::vector<Polynomial> entries;
                    for (auto& row : rows)
                        for (auto& s : row)
                            entries.push_back(Polynomial::parse(R.R->ambient(), s));
                    diffs.emplace(i, FreeModuleMap(src, tgt, std::move(entries), -1, 0));
                }
                return PyComplex{GradedComplex::create(R.R, lo, std::move(modules),
                                                       std::move(diffs))};
            },
            py::arg("ring"), py::arg("lo"), py::arg("twists"), py::arg("maps"))
        .def("validate",
             [](const PyComplex& c) {
                 ComplexValidation v = validate_complex(*c.F);
                 return py::make_tuple(v.ok, v.violations);
             })
        .def_property_readonly("lo", [](const PyComplex& c) { return c.F->lo(); })
        .def_property_readonly("hi", [](const PyComplex& c) { return c.F->hi(); });

    m.def(
        "minimal_resolution",
        [](const PyRing& R, const std::vector<RingElem>& gens, int hmax, int64_t dmax) {
            ResolutionResult res =
                minimal_resolution(R.R, ModulePresentation::cyclic(R.R, gens), hmax, dmax);
            py::dict d;
            py::dict betti;
            for (const auto& [i, tw] : res.betti) betti[py::str(std::to_string(i))] = tw;
            d["betti"] = betti;
            d["truncated"] = res.truncated;
            d["warnings"] = res.warnings;
            py::dict cert;
            for (const auto& [i, info] : res.steps)
                cert[py::str(std::to_string(i))] = info.certified_degree;
            d["certified_degree"] = cert;
            return py::make_tuple(d, PyComplex{res.complex});
        },
        py::arg("ring"), py::arg("ideal_gens"), py::arg("hmax"), py::arg("dmax"));

    py::class_<PyMap>(m, "Map")
        .def_property_readonly("hdeg", [](const PyMap& g) { return g.g.hdeg(); })
        .def_property_readonly("ideg", [](const PyMap& g) { return g.g.ideg(); })
        .def("component", [](const PyMap& g, int i) { return matrix_list(g.g.component(i)); })
        .def("is_chain_map", [](const PyMap& g) { return is_chain_map(g.g).ok; });

    py::class_<PyBundle>(m, "Bundle")
        .def_property_readonly("phi",
                               [](const PyBundle& b) {
                                   if (!b.B.phi)
                                       throw std::runtime_error("no phi on this window");
                                   return PyMap{*b.B.phi};
                               })
        .def("psi_z",
             [](const PyBundle& b, size_t k) {
                 if (k >= b.B.psi_z.size()) throw std::out_of_range("psi_z index");
                 return PyMap{b.B.psi_z[k].second};
             })
        .def("psi_tilde",
             [](const PyBundle& b, int i) { return matrix_list(b.B.psi_tilde.at(i)); })
        .def("phi_tilde",
             [](const PyBundle& b, int i) { return matrix_list(b.B.phi_tilde.at(i)); })
        .def_property_readonly("notes", [](const PyBundle& b) { return b.B.notes; });

    m.def(
        "operators",
        [](const PyComplex& F, const PyRing& S, const RingElem& x, const RingElem& y,
           const std::vector<RingElem>& zs, const std::string& policy, uint64_t seed) {
            return PyBundle{operator_pipeline(F.F, S.R, x, y, zs, parse_policy(policy), seed)};
        },
        py::arg("complex"), py::arg("ring"), py::arg("x"), py::arg("y"), py::arg("zs"),
        py::arg("policy") = "canonical", py::arg("seed") = 0);

    m.def(
        "homotopic",
        [](const PyMap& a, const PyMap& b, int lo, int hi) {
            return homotopy_result(homotopic(a.g, b.g, lo, hi));
        },
        py::arg("g1"), py::arg("g2"), py::arg("window_lo"), py::arg("window_hi"));
    m.def(
        "ext_class_nonzero",
        [](const PyMap& g, int lo, int hi) {
            ExtClassResult res = ext_class_nonzero(g.g, lo, hi);
            py::dict d = homotopy_result(res.outcome);
            d["nonzero"] = res.nonzero;
            return d;
        },
        py::arg("map"), py::arg("window_lo"), py::arg("window_hi"));

    m.def(
        "run_job",
        [](const std::string& text, uint64_t seed) {
            Report rep = run_job_text(text, seed);
            py::dict d;
            d["report"] = json_to_py(rep.doc);
            d["exit_code"] = rep.exit_code;
            return d;
        },
        py::arg("text"), py::arg("seed") = 0);
    m.def("reproduce_example", []() {
        Report rep = run_reproduce_example();
        py::dict d;
        d["report"] = json_to_py(rep.doc);
        d["exit_code"] = rep.exit_code;
        return d;
    });
    m.def("example_job_text", []() { return std::string(worked_example_job_text()); });

    m.attr("__version__") = version_string();
}
