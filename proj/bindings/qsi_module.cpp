#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsi/json_io.hpp"
#include "qsi/semiinvariants.hpp"

namespace py = pybind11;
using namespace qsi;

namespace {

std::string pair_json(const LinkedPair& p) { return pair_bundle_to_json(p).dump(2); }

}  // namespace

PYBIND11_MODULE(_qsi, m) {
    m.doc() = "exact quiver semi-invariants, linked tableaux and SAGBI bases";

    py::register_exception<BudgetError>(m, "BudgetError");

    py::class_<Quiver>(m, "Quiver")
        .def(py::init([](int vertices, const std::vector<std::tuple<int, int, int>>& arrows) {
                 std::vector<Arrow> as;
                 for (auto& [id, s, t] : arrows) as.push_back({id, s, t});
                 return Quiver(vertices, std::move(as));
             }),
             py::arg("vertices"), py::arg("arrows"))
        .def_static("kronecker", &Quiver::kronecker)
        .def_property_readonly("vertex_count", &Quiver::vertex_count)
        .def("arrows", [](const Quiver& q) {
            std::vector<std::tuple<int, int, int>> out;
            for (const Arrow& a : q.arrows()) out.push_back({a.id, a.source, a.target});
            return out;
        });

    py::class_<Path>(m, "Path")
        .def_readonly("index", &Path::index)
        .def_readonly("arrows", &Path::arrows)
        .def_readonly("source", &Path::source)
        .def_readonly("target", &Path::target)
        .def("__repr__", [](const Path& p) {
            std::string s = "Path(" + std::to_string(p.index) + ", arrows=[";
            for (std::size_t i = 0; i < p.arrows.size(); ++i)
                s += (i ? "," : "") + std::to_string(p.arrows[i]);
            return s + "])";
        });

    m.def("enumerate_paths", [](const Quiver& q) { return enumerate_paths(q); });

    struct PyContext {
        Ctx ctx;
    };
    py::class_<PyContext>(m, "QuiverContext")
        .def(py::init([](const Quiver& q, const std::vector<int>& dims) {
                 return PyContext{QuiverContext::make(q, DimensionVector{dims})};
             }),
             py::arg("quiver"), py::arg("dims"))
        .def_property_readonly("paths", [](const PyContext& c) { return c.ctx->paths(); });

    py::class_<LinkedPair>(m, "LinkedPair")
        .def_property_readonly("weight", [](const LinkedPair& p) { return p.weight().w; })
        .def_property_readonly("degree", &LinkedPair::degree)
        .def("is_semistandard_pair", &LinkedPair::is_semistandard_pair)
        .def("tplus_rows",
             [](const LinkedPair& p) {
                 std::vector<std::vector<std::pair<int, int>>> rows;
                 for (const RectTableau& t : p.tplus_tuple())
                     for (int r = 1; r <= t.rows(); ++r) {
                         std::vector<std::pair<int, int>> row;
                         for (int c = 1; c <= t.cols(); ++c)
                             row.push_back({t.at(r, c).path, t.at(r, c).slot});
                         rows.push_back(std::move(row));
                     }
                 return rows;
             })
        .def("to_json", &pair_json)
        .def("__repr__", [](const LinkedPair& p) { return "LinkedPair(" + p.str() + ")"; })
        .def("__eq__", [](const LinkedPair& a, const LinkedPair& b) { return a == b; });

    m.def("pair_from_json", [](const std::string& text) {
        return pair_bundle_from_json(Json::parse(text));
    });

    m.def("mon_plus", [](const LinkedPair& p) { return mon_plus(p).str(); });
    m.def("f_det_rows", [](const LinkedPair& p) { return f_det_rows(p).str(); });
    m.def("f_det_cols", [](const LinkedPair& p) { return f_det_cols(p).str(); });
    m.def("f_direct",
          [](const LinkedPair& p, std::size_t budget) { return f_direct(p, budget).str(); },
          py::arg("pair"), py::arg("budget") = std::size_t{1} << 20);
    m.def("check_semi_invariance",
          [](const std::string& poly, const std::vector<int>& w, const LinkedPair& p) {
              return check_semi_invariance(SparsePolynomial::parse(poly), Weight{w},
                                           p.ctx()->quiver(), p.ctx()->dims());
          });
    m.def("express_weakly_semistandard", [](const LinkedPair& p) {
        std::vector<std::pair<std::string, LinkedPair>> out;
        for (const PairTerm& t : express_weakly_semistandard(p)) out.push_back({t.coeff.str(), t.pair});
        return out;
    });

    py::class_<KroneckerContext>(m, "KroneckerContext")
        .def(py::init<int, int, int>(), py::arg("K"), py::arg("r0"), py::arg("r1"))
        .def_property_readonly("K", &KroneckerContext::arrow_count)
        .def("weight", [](const KroneckerContext& k, int d) { return k.weight(d).w; });

    m.def("enumerate_ss_pairs",
          [](const KroneckerContext& k, int d, int threads) {
              return enumerate_ss_pairs(k, d, threads);
          },
          py::arg("kctx"), py::arg("d"), py::arg("threads") = 0);
    m.def("leading_monomial_of_pair",
          [](const LinkedPair& p) { return leading_monomial_of_pair(p).str(); });
    m.def("primitive_generators",
          [](const KroneckerContext& k, int max_d, int threads) {
              auto gens = primitive_generators(k, max_d, threads);
              std::vector<std::vector<LinkedPair>> out = gens.by_degree;
              return out;
          },
          py::arg("kctx"), py::arg("max_d"), py::arg("threads") = 0);
    m.def("kronecker22_family", &kronecker22_family);
    m.def("subduce", [](const std::string& poly, const std::vector<LinkedPair>& gens) {
        auto res = subduce(SparsePolynomial::parse(poly), gens);
        return std::pair{res.remainder.str(), res.remainder.is_zero()};
    });

    py::class_<LatticePolytope>(m, "LatticePolytope")
        .def(py::init<int, std::vector<LatticeVec>, bool>(), py::arg("dim"), py::arg("vertices"),
             py::arg("check_vertices") = true)
        .def_property_readonly("dim", &LatticePolytope::dim)
        .def_property_readonly("vertices", &LatticePolytope::vertices);

    py::class_<LaurentPolynomial>(m, "LaurentPolynomial")
        .def(py::init([](int dim, const std::vector<std::pair<LatticeVec, long long>>& terms) {
                 std::vector<std::pair<LatticeVec, Int>> ts;
                 for (auto& [e, c] : terms) ts.push_back({e, Int(c)});
                 return LaurentPolynomial(dim, std::move(ts));
             }),
             py::arg("dim"), py::arg("terms"))
        .def_property_readonly("dim", &LaurentPolynomial::dim)
        .def("newton_vertices", &LaurentPolynomial::newton_vertices);

    m.def("lattice_points", [](const LatticePolytope& p) { return lattice_points(p); });
    m.def("classical_period", [](const LaurentPolynomial& f, int nmax) {
        std::vector<std::string> out;
        for (const Int& c : classical_period(f, nmax)) out.push_back(c.str());
        return out;
    });
    m.def("builtin_fano_example", []() { return builtin_fano_example(); });
}
