#include "newstein/algebra_io.hpp"
#include "newstein/algebras.hpp"
#include "newstein/cohomology.hpp"
#include "newstein/extensions.hpp"
#include "newstein/group_law.hpp"
#include "newstein/oscillator.hpp"
#include "newstein/verification.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace newstein;

namespace {

LieAlgebra select(const std::string& name) {
    if (name == "newstein") return build_newstein();
    if (name == "newstein2") return build_newstein2();
    if (name == "h3") return build_heisenberg3();
    if (name == "sl2") return build_sl2();
    if (name.rfind("newstein-ext:", 0) == 0) return build_extended(representative_class(std::stoi(name.substr(13))));
    throw std::invalid_argument("unknown algebra '" + name + "'");
}

py::dict cohomology(const std::string& name, const std::string& coeffs, int degree, bool modular) {
    const LieAlgebra g = select(name);
    BettiOptions o;
    if (modular) o.rank.method = RankMethod::Modular;
    if (coeffs != "trivial" && coeffs != "adjoint") throw std::invalid_argument("coeffs must be trivial or adjoint");
    const auto r = betti(g, coeffs == "adjoint" ? CoefficientModule::adjoint(g) : CoefficientModule::trivial(g), degree, o);
    py::dict d;
    d["betti"] = r.betti;
    d["dim_k"] = r.dim_k;
    d["rank_prev"] = r.rank_prev;
    d["rank_k"] = r.rank_k;
    d["method"] = method_name(r.method);
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Lie algebra, cohomology and representation checks.";

    m.def("dimension", [](const std::string& name) { return select(name).dimension(); });
    m.def("labels", [](const std::string& name) {
        const LieAlgebra g = select(name);
        std::vector<std::string> out;
        for (const auto& l : g.labels()) out.push_back(l.name());
        return out;
    });
    m.def("jacobi_violations", [](const std::string& name) { return jacobi_check(select(name)).size(); },
          py::arg("algebra"));
    m.def("export_json", [](const std::string& name) { return algebra_to_json(select(name)); });
    m.def("cohomology", &cohomology, py::arg("algebra"), py::arg("coeffs") = "trivial", py::arg("degree") = 1,
          py::arg("modular") = false);

    m.def("classify", [](const Eigen::Matrix2d& l) {
        const auto c = classify(ExtensionMatrix(l));
        py::dict d;
        d["case"] = c.case_id;
        d["jordan"] = jordan_name(c.jordan);
        d["rescale"] = c.rescale;
        if (c.zeta2) d["zeta2"] = *c.zeta2;
        if (c.phi) d["phi"] = *c.phi;
        return d;
    });

    py::class_<GroupElement>(m, "GroupElement")
        .def(py::init<>())
        .def_readwrite("t", &GroupElement::t)
        .def_readwrite("tp", &GroupElement::tp)
        .def_readwrite("c", &GroupElement::c)
        .def_readwrite("a", &GroupElement::a)
        .def_readwrite("q", &GroupElement::q)
        .def_readwrite("lam", &GroupElement::lambda)
        .def_readwrite("r", &GroupElement::r);
    m.def("random_group_element", [](unsigned seed) {
        std::mt19937 rng(seed);
        return random_group_element(rng);
    });
    m.def("compose", &compose);
    m.def("inverse", &inverse);
    m.def("deviation", py::overload_cast<const GroupElement&, const GroupElement&>(&deviation));
    m.def("identity_element", &identity_element);
    m.def("vector_rep", &vector_rep);

    m.def(
        "spectrum",
        [](double m0, double alpha, double ell, int cutoff) {
            RepParams p;
            p.m0 = m0;
            p.alpha = alpha;
            p.ell = ell;
            p.validate();
            std::vector<std::pair<double, int>> out;
            for (const auto& l : spectrum(p, FockBasis(cutoff)))
                if (l.interior) out.emplace_back(l.eigenvalue, l.multiplicity);
            return out;
        },
        py::arg("m0") = 1.0, py::arg("alpha") = 1.0, py::arg("ell") = 0.0, py::arg("cutoff") = 8);

    m.def(
        "run_criterion",
        [](int id) {
            const auto r = run_criterion(id);
            py::dict d;
            d["id"] = r.id;
            d["claim"] = r.key;
            d["expected"] = r.expected;
            d["computed"] = r.computed;
            d["status"] = r.status();
            return d;
        },
        py::arg("id"));
    m.attr("criterion_count") = criterion_count;
}
