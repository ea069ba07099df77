#include "orbilat/errors.hpp"
#include "orbilat/json_io.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace orbilat;

namespace {

// Structured results cross the boundary as JSON text; the Python side decodes them.
std::string dumped(const Json& j) { return j.dump(); }

std::vector<std::vector<std::string>> matrixText(const IntMatrix& m)
{
    std::vector<std::vector<std::string>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i].push_back(toString(m(i, j)));
    return rows;
}

IntMatrix matrixFrom(const std::vector<std::vector<py::int_>>& rows)
{
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == m.cols(), "rows have different lengths");
        for (std::size_t j = 0; j < m.cols(); ++j)
            m(i, j) = Int(py::str(rows[i][j]).cast<std::string>());
    }
    return m;
}

std::size_t shellCount(const GramLattice& l, std::int64_t norm)
{
    const auto s = shortVectorsCached(l, norm);
    const auto it = s->find(norm);
    return it == s->end() ? 0 : it->second.count();
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact lattice and orbifold computations";

    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<InconsistencyError>(m, "InconsistencyError", PyExc_RuntimeError);

    py::class_<GramLattice>(m, "Lattice")
        .def(py::init([](const std::vector<std::vector<py::int_>>& gram, const std::string& name) {
                 return GramLattice(matrixFrom(gram), name);
             }),
             py::arg("gram"), py::arg("name") = "")
        .def_property_readonly("rank", &GramLattice::rank)
        .def_property_readonly("name", &GramLattice::name)
        .def_property_readonly("_gram", [](const GramLattice& l) { return matrixText(l.gram()); })
        .def_property_readonly("_determinant", [](const GramLattice& l) { return toString(l.determinant()); })
        .def("shell_count", &shellCount, py::arg("norm"))
        .def("discriminant_group", [](const GramLattice& l) { return discriminantGroup(l).toString(); })
        .def("is_even", [](const GramLattice& l) { return checkEven(l); })
        .def("_json", [](const GramLattice& l) { return dumped(toJson(l)); });

    py::class_<Isometry>(m, "Isometry")
        .def(py::init([](const GramLattice& l, const std::vector<std::vector<py::int_>>& matrix) {
                 return Isometry(l, matrixFrom(matrix));
             }),
             py::arg("lattice"), py::arg("matrix"))
        .def_property_readonly("order", &Isometry::order)
        .def_property_readonly("profile", [](const Isometry& g) { return g.profile().toString(); })
        .def_property_readonly("lattice", &Isometry::lattice)
        .def_property_readonly("_matrix", [](const Isometry& g) { return matrixText(g.matrix()); })
        .def_property_readonly("_trace", [](const Isometry& g) { return toString(g.trace()); })
        .def("is_cfpf", [](const Isometry& g) { return g.order() > 1 && isCompletelyFixedPointFree(g); })
        .def("_verdict", [](const Isometry& g) { return dumped(toJson(admissibilityVerdict(g))); })
        .def("_trace_on_vplus_two", [](const Isometry& g) { return dumped(toJson(traceOnVPlusTwo(g))); })
        .def("_epsilon", [](const Isometry& g, std::uint64_t s) { return epsilonOf(g, s).toString(); })
        .def("_twisted_top_dim", [](const Isometry& g, std::int64_t s) { return dumped(toJson(twistedTopDim(g, s))); });

    m.def("named_lattice", &namedLattice, py::arg("name"));
    m.def("leech_from_golay", &leechFromGolay);
    m.def("negation", &Isometry::negation, py::arg("lattice"));
    m.def("simple_reflections", [](const GramLattice& l) {
        std::vector<std::vector<std::vector<std::string>>> out;
        for (const auto& r : simpleReflections(l))
            out.push_back(matrixText(r));
        return out;
    });
    m.def(
        "find_isometry",
        [](const GramLattice& l, const std::string& profile, std::optional<std::uint64_t> negativePower,
           std::uint64_t seed, std::uint64_t budget) -> std::optional<Isometry> {
            IsometryConstraints c;
            c.profile = parseProfile(profile);
            c.negativePower = negativePower;
            SearchOptions o;
            o.seed = seed;
            o.budget = budget;
            return findIsometryWithProfile(l, simpleReflections(l), c, o).isometry;
        },
        py::arg("lattice"), py::arg("profile"), py::arg("negative_power") = py::none(), py::arg("seed") = 271828,
        py::arg("budget") = 1000000);

    m.def("case1_non_prime_power", &case1NonPrimePowerSearch, py::arg("bound") = 1000);
    m.def("_case1_prime_power", [](std::uint64_t bound) {
        Json j = Json::array();
        for (const auto& c : case1PrimePowerSearch(bound))
            j.push_back(toJson(c));
        return dumped(j);
    });
    m.def("case2", [](std::uint64_t bound) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        for (const auto& e : case2Search(bound))
            out.emplace_back(e.m, e.ell);
        return out;
    }, py::arg("bound") = 1000);
    m.def("_case_i", [](std::uint64_t n) { return dumped(toJson(caseIFeasible(n))); });
    m.def("_epsilon_cfpf", [](std::uint64_t ell, std::uint64_t n, std::uint64_t s) {
        return epsilonCFPF(ell, n, s).toString();
    });
    m.def("_self_dual_check", [](std::uint64_t ell, std::uint64_t n) {
        return dumped(toJson(orbifoldSelfDualCheck(ell, n)));
    });
    m.def("_construction_a", [](const std::string& code) {
        const GlueLattice a = constructionA(loadCode(code));
        return a.lattice;
    });
}
