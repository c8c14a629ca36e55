#include "qsi/json_io.hpp"

#include <stdexcept>

namespace qsi {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("malformed JSON: " + what);
}

int get_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string(key) + " missing");
    return j[key].get<int>();
}

}  // namespace

Json quiver_to_json(const Quiver& q, const DimensionVector& d) {
    Json arrows = Json::array();
    for (const Arrow& a : q.arrows()) arrows.push_back({{"id", a.id}, {"s", a.source}, {"t", a.target}});
    return Json{{"vertices", q.vertex_count()}, {"dims", d.ranks}, {"arrows", arrows}};
}

std::pair<Quiver, DimensionVector> quiver_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("dims") || !j.contains("arrows"))
        bad("quiver needs vertices, dims, arrows");
    std::vector<Arrow> arrows;
    for (const Json& a : j["arrows"])
        arrows.push_back({get_int(a, "id"), get_int(a, "s"), get_int(a, "t")});
    DimensionVector d{j["dims"].get<std::vector<int>>()};
    Quiver q(get_int(j, "vertices"), std::move(arrows));
    validate(q, d);
    return {std::move(q), std::move(d)};
}

Json lifted_path_to_json(const LiftedPath& p) {
    return Json{{"arrows", p.arrows}, {"lifts", p.lifts}};
}

LiftedPath lifted_path_from_json(const Json& j) {
    if (!j.contains("arrows") || !j.contains("lifts")) bad("lifted path needs arrows and lifts");
    return LiftedPath{j["arrows"].get<std::vector<int>>(), j["lifts"].get<std::vector<int>>()};
}

Json tableau_to_json(const RectTableau& t) {
    Json rows = Json::array();
    for (int r = 1; r <= t.rows(); ++r) {
        Json row = Json::array();
        for (int c = 1; c <= t.cols(); ++c) row.push_back({t.at(r, c).path, t.at(r, c).slot});
        rows.push_back(std::move(row));
    }
    return Json{{"vertex", t.vertex()}, {"rows", t.rows()}, {"cols", t.cols()}, {"entries", rows}};
}

RectTableau tableau_from_json(const Json& j) {
    int rows = get_int(j, "rows"), cols = get_int(j, "cols");
    std::vector<Label> entries;
    if (!j.contains("entries")) bad("tableau needs entries");
    for (const Json& row : j["entries"])
        for (const Json& e : row) {
            if (!e.is_array() || e.size() != 2) bad("tableau entry must be [path, slot]");
            entries.push_back({e[0].get<int>(), e[1].get<int>()});
        }
    return RectTableau(get_int(j, "vertex"), rows, cols, std::move(entries));
}

namespace {

Json boxpos_to_json(const BoxPos& p) { return Json::array({p.vertex, p.row, p.col}); }

BoxPos boxpos_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 3) bad("box position must be [vertex, row, col]");
    return BoxPos{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

}  // namespace

Json pair_to_json(const LinkedPair& p) {
    Json tplus = Json::array(), tminus = Json::array(), link = Json::array();
    for (const RectTableau& t : p.tplus_tuple()) tplus.push_back(tableau_to_json(t));
    for (const RectTableau& t : p.tminus_tuple()) tminus.push_back(tableau_to_json(t));
    for (auto& [a, b] : p.link()) link.push_back(Json::array({boxpos_to_json(a), boxpos_to_json(b)}));
    return Json{{"tplus", tplus}, {"tminus", tminus}, {"link", link}, {"weight", p.weight().w}};
}

LinkedPair pair_from_json(const Ctx& ctx, const Json& j) {
    if (!j.contains("tplus") || !j.contains("tminus") || !j.contains("link"))
        bad("linked pair needs tplus, tminus, link");
    std::vector<RectTableau> tplus, tminus;
    for (const Json& t : j["tplus"]) tplus.push_back(tableau_from_json(t));
    for (const Json& t : j["tminus"]) tminus.push_back(tableau_from_json(t));
    Link link;
    for (const Json& e : j["link"]) {
        if (!e.is_array() || e.size() != 2) bad("link entry must be a pair of positions");
        link.push_back({boxpos_from_json(e[0]), boxpos_from_json(e[1])});
    }
    return pair_from_tableaux(ctx, tplus, tminus, link);
}

Json pair_bundle_to_json(const LinkedPair& p) {
    return Json{{"quiver", quiver_to_json(p.ctx()->quiver(), p.ctx()->dims())},
                {"pair", pair_to_json(p)}};
}

LinkedPair pair_bundle_from_json(const Json& j) {
    if (!j.contains("quiver") || !j.contains("pair")) bad("bundle needs quiver and pair");
    auto [q, d] = quiver_from_json(j["quiver"]);
    Ctx ctx = QuiverContext::make(std::move(q), std::move(d));
    return pair_from_json(ctx, j["pair"]);
}

Json monomial_to_json(const Monomial& m) {
    Json factors = Json::array();
    for (auto& [key, e] : m.factors()) {
        Variable v = var_of_key(key);
        factors.push_back(Json::array({v.arrow, v.row, v.col, e}));
    }
    return factors;
}

Json polynomial_to_json(const SparsePolynomial& f) {
    Json terms = Json::array();
    for (const Term& t : f.terms())
        terms.push_back({{"c", t.coeff.str()}, {"m", monomial_to_json(t.monomial)}});
    return Json{{"text", f.str()}, {"terms", terms}};
}

SparsePolynomial polynomial_from_json(const Json& j) {
    if (j.is_string()) return SparsePolynomial::parse(j.get<std::string>());
    if (j.is_object() && j.contains("terms")) {
        std::vector<Term> terms;
        for (const Json& t : j["terms"]) {
            if (!t.contains("c") || !t.contains("m")) bad("polynomial term needs c and m");
            std::vector<std::pair<VarKey, int>> factors;
            for (const Json& f : t["m"]) {
                if (!f.is_array() || f.size() != 4) bad("monomial factor must be [a, row, col, e]");
                factors.push_back(
                    {var_key(Variable{f[0].get<int>(), f[1].get<int>(), f[2].get<int>()}),
                     f[3].get<int>()});
            }
            std::sort(factors.begin(), factors.end());
            terms.push_back({Monomial(std::move(factors)), Int(t["c"].get<std::string>())});
        }
        return SparsePolynomial::from_terms(std::move(terms));
    }
    if (j.is_object() && j.contains("text")) return SparsePolynomial::parse(j["text"].get<std::string>());
    bad("polynomial must be text or a term list");
}

Json polytope_to_json(const LatticePolytope& p) {
    return Json{{"dim", p.dim()}, {"vertices", p.vertices()}};
}

LatticePolytope polytope_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("vertices")) bad("polytope needs dim and vertices");
    return LatticePolytope(get_int(j, "dim"), j["vertices"].get<std::vector<LatticeVec>>());
}

Json laurent_to_json(const LaurentPolynomial& f) {
    Json terms = Json::array();
    for (auto& [e, c] : f.terms()) terms.push_back({{"c", c.str()}, {"e", e}});
    return Json{{"dim", f.dim()}, {"terms", terms}};
}

LaurentPolynomial laurent_from_json(const Json& j) {
    if (!j.contains("dim") || !j.contains("terms")) bad("laurent polynomial needs dim and terms");
    std::vector<std::pair<LatticeVec, Int>> terms;
    for (const Json& t : j["terms"]) {
        if (!t.contains("c") || !t.contains("e")) bad("laurent term needs c and e");
        terms.push_back({t["e"].get<LatticeVec>(), Int(t["c"].get<std::string>())});
    }
    return LaurentPolynomial(get_int(j, "dim"), std::move(terms));
}

Json period_to_json(const std::vector<Int>& cs) {
    Json out = Json::array();
    for (const Int& c : cs) out.push_back(c.str());
    return out;
}

}  // namespace qsi
