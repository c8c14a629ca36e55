#include "qsi/tableaux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsi {

RectTableau::RectTableau(int vertex, int rows, int cols, std::vector<Label> entries)
    : vertex_(vertex), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ < 1 || cols_ < 1) throw std::invalid_argument("tableau shape must be positive");
    if (entries_.size() != static_cast<std::size_t>(rows_) * cols_)
        throw std::invalid_argument("tableau entry count does not match shape");
}

const Label& RectTableau::at(int row, int col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_)
        throw std::out_of_range("tableau position");
    return entries_[(row - 1) * cols_ + (col - 1)];
}

std::vector<Label> RectTableau::column(int col) const {
    std::vector<Label> out;
    for (int r = 1; r <= rows_; ++r) out.push_back(at(r, col));
    return out;
}

std::string RectTableau::str() const {
    std::ostringstream os;
    os << "[";
    for (int r = 1; r <= rows_; ++r) {
        if (r > 1) os << ",";
        os << "[";
        for (int c = 1; c <= cols_; ++c) {
            if (c > 1) os << ",";
            os << at(r, c).path << " " << at(r, c).slot;
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

bool is_semistandard(const RectTableau& t) {
    for (int r = 1; r <= t.rows(); ++r)
        for (int c = 1; c < t.cols(); ++c)
            if (t.at(r, c + 1) < t.at(r, c)) return false;
    for (int c = 1; c <= t.cols(); ++c)
        for (int r = 1; r < t.rows(); ++r)
            if (!(t.at(r, c) < t.at(r + 1, c))) return false;
    return true;
}

bool is_weakly_semistandard(const RectTableau& t) {
    for (int r = 1; r <= t.rows(); ++r)
        for (int c = 1; c < t.cols(); ++c)
            if (t.at(r, c + 1).path < t.at(r, c).path) return false;
    for (int c = 1; c <= t.cols(); ++c)
        for (int r = 1; r < t.rows(); ++r)
            if (t.at(r + 1, c).path < t.at(r, c).path) return false;
    return true;
}

QuiverContext::QuiverContext(Quiver q, DimensionVector d)
    : quiver_(std::move(q)), dims_(std::move(d)) {
    validate(quiver_, dims_);
    paths_ = enumerate_paths(quiver_);
    matrices_.reserve(paths_.size());
    for (const Path& p : paths_) {
        PolyMatrix m = PolyMatrix::arrow_matrix(p.arrows[0], dims_.rank(quiver_.arrow(p.arrows[0]).target),
                                                dims_.rank(quiver_.arrow(p.arrows[0]).source));
        for (std::size_t i = 1; i < p.arrows.size(); ++i) {
            const Arrow& a = quiver_.arrow(p.arrows[i]);
            m = PolyMatrix::arrow_matrix(a.id, dims_.rank(a.target), dims_.rank(a.source)) * m;
        }
        matrices_.push_back(std::move(m));
    }
}

std::shared_ptr<const QuiverContext> QuiverContext::make(Quiver q, DimensionVector d) {
    return std::shared_ptr<const QuiverContext>(new QuiverContext(std::move(q), std::move(d)));
}

const Path& QuiverContext::path(int index) const {
    if (index < 1 || index > static_cast<int>(paths_.size()))
        throw std::out_of_range("path index out of range");
    return paths_[index - 1];
}

int QuiverContext::path_index(const std::vector<int>& arrows) const {
    for (const Path& p : paths_)
        if (p.arrows == arrows) return p.index;
    return 0;
}

const PolyMatrix& QuiverContext::path_matrix(int index) const {
    if (index < 1 || index > static_cast<int>(matrices_.size()))
        throw std::out_of_range("path index out of range");
    return matrices_[index - 1];
}

namespace {

struct SideView {
    // per vertex: columns, each column maps row -> box index
    std::vector<int> width;
};

}  // namespace

LinkedPair::LinkedPair(Ctx ctx, std::vector<PairBox> boxes)
    : ctx_(std::move(ctx)), boxes_(std::move(boxes)) {
    if (!ctx_) throw std::invalid_argument("linked pair needs a context");
    const Quiver& q = ctx_->quiver();
    int nv = q.vertex_count();

    for (const PairBox& b : boxes_) {
        const Path& p = ctx_->path(b.path);
        if (b.source_lift < 1 || b.source_lift > ctx_->rank(p.source) || b.target_lift < 1 ||
            b.target_lift > ctx_->rank(p.target))
            throw std::invalid_argument("box lift out of range");
        if (b.plus_col < 1 || b.minus_col < 1) throw std::invalid_argument("box column out of range");
    }

    // every (vertex,row,col) position on both sides occupied exactly once,
    // shapes exactly r_p x w
    for (int side = 0; side < 2; ++side) {
        std::vector<std::map<std::pair<int, int>, int>> seen(nv);
        std::vector<int> width(nv, 0), count(nv, 0);
        for (const PairBox& b : boxes_) {
            const Path& p = ctx_->path(b.path);
            int v = side == 0 ? p.target : p.source;
            int row = side == 0 ? b.target_lift : b.source_lift;
            int col = side == 0 ? b.plus_col : b.minus_col;
            if (seen[v].count({row, col}))
                throw std::invalid_argument("two boxes share a tableau position");
            seen[v][{row, col}] = 1;
            width[v] = std::max(width[v], col);
            count[v] += 1;
        }
        for (int v = 0; v < nv; ++v) {
            if (count[v] != width[v] * ctx_->rank(v))
                throw std::invalid_argument("tableau is not a full rectangle");
        }
    }

    // canonical display order of the columns; the column order never enters
    // the semi-invariant, it is a product over columns
    auto renumber = [&](bool plus_side) {
        const int side_nv = nv;
        for (int v = 0; v < side_nv; ++v) {
            std::vector<int> cols;
            std::map<int, std::vector<const PairBox*>> by_col;
            for (const PairBox& b : boxes_) {
                const Path& p = ctx_->path(b.path);
                int bv = plus_side ? p.target : p.source;
                if (bv != v) continue;
                by_col[plus_side ? b.plus_col : b.minus_col].push_back(&b);
            }
            if (by_col.empty()) continue;
            // first digits take priority so that a weakly semi-standard
            // arrangement stays weakly semi-standard after renumbering
            using Key = std::tuple<std::vector<int>, std::vector<Label>, std::vector<int>>;
            std::vector<std::pair<Key, int>> keyed;
            for (auto& [c, list] : by_col) {
                std::vector<const PairBox*> sorted = list;
                std::sort(sorted.begin(), sorted.end(), [&](const PairBox* a, const PairBox* b2) {
                    return (plus_side ? a->target_lift : a->source_lift) <
                           (plus_side ? b2->target_lift : b2->source_lift);
                });
                std::vector<int> first_digits, opposite;
                std::vector<Label> labels;
                for (const PairBox* b : sorted) {
                    Label lab = plus_side ? Label{b->path, b->source_lift}
                                          : Label{b->path, b->target_lift};
                    first_digits.push_back(lab.path);
                    labels.push_back(lab);
                    opposite.push_back(plus_side ? b->minus_col : b->plus_col);
                }
                keyed.push_back({Key{std::move(first_digits), std::move(labels), std::move(opposite)}, c});
            }
            std::sort(keyed.begin(), keyed.end());
            std::map<int, int> remap;
            for (std::size_t i = 0; i < keyed.size(); ++i) remap[keyed[i].second] = static_cast<int>(i) + 1;
            for (PairBox& b : boxes_) {
                const Path& p = ctx_->path(b.path);
                int bv = plus_side ? p.target : p.source;
                if (bv != v) continue;
                (plus_side ? b.plus_col : b.minus_col) = remap.at(plus_side ? b.plus_col : b.minus_col);
            }
        }
    };
    renumber(true);
    renumber(false);
    std::sort(boxes_.begin(), boxes_.end());
}

std::vector<int> LinkedPair::wplus() const {
    std::vector<int> w(ctx_->quiver().vertex_count(), 0);
    for (const PairBox& b : boxes_)
        w[ctx_->path(b.path).target] = std::max(w[ctx_->path(b.path).target], b.plus_col);
    return w;
}

std::vector<int> LinkedPair::wminus() const {
    std::vector<int> w(ctx_->quiver().vertex_count(), 0);
    for (const PairBox& b : boxes_)
        w[ctx_->path(b.path).source] = std::max(w[ctx_->path(b.path).source], b.minus_col);
    return w;
}

Weight LinkedPair::weight() const {
    auto p = wplus();
    auto m = wminus();
    Weight w;
    w.w.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) w.w[i] = p[i] - m[i];
    return w;
}

RectTableau LinkedPair::tplus(int vertex) const {
    int r = ctx_->rank(vertex);
    int w = wplus()[vertex];
    if (w == 0) throw std::invalid_argument("empty tableau at vertex");
    std::vector<Label> entries(static_cast<std::size_t>(r) * w);
    for (const PairBox& b : boxes_) {
        if (ctx_->path(b.path).target != vertex) continue;
        entries[(b.target_lift - 1) * w + (b.plus_col - 1)] = {b.path, b.source_lift};
    }
    return RectTableau(vertex, r, w, std::move(entries));
}

RectTableau LinkedPair::tminus(int vertex) const {
    int r = ctx_->rank(vertex);
    int w = wminus()[vertex];
    if (w == 0) throw std::invalid_argument("empty tableau at vertex");
    std::vector<Label> entries(static_cast<std::size_t>(r) * w);
    for (const PairBox& b : boxes_) {
        if (ctx_->path(b.path).source != vertex) continue;
        entries[(b.source_lift - 1) * w + (b.minus_col - 1)] = {b.path, b.target_lift};
    }
    return RectTableau(vertex, r, w, std::move(entries));
}

std::vector<RectTableau> LinkedPair::tplus_tuple() const {
    std::vector<RectTableau> out;
    auto w = wplus();
    for (int v = 0; v < ctx_->quiver().vertex_count(); ++v)
        if (w[v] > 0) out.push_back(tplus(v));
    return out;
}

std::vector<RectTableau> LinkedPair::tminus_tuple() const {
    std::vector<RectTableau> out;
    auto w = wminus();
    for (int v = 0; v < ctx_->quiver().vertex_count(); ++v)
        if (w[v] > 0) out.push_back(tminus(v));
    return out;
}

Link LinkedPair::link() const {
    Link out;
    for (const PairBox& b : boxes_) {
        const Path& p = ctx_->path(b.path);
        out.push_back({BoxPos{p.target, b.target_lift, b.plus_col},
                       BoxPos{p.source, b.source_lift, b.minus_col}});
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool LinkedPair::tableaux_semistandard() const {
    for (const RectTableau& t : tplus_tuple())
        if (!is_semistandard(t)) return false;
    for (const RectTableau& t : tminus_tuple())
        if (!is_semistandard(t)) return false;
    return true;
}

bool LinkedPair::link_semistandard() const {
    // boxes with the same (path, j, l) must be matched order preservingly:
    // ascending plus columns against ascending minus columns
    std::map<std::tuple<int, int, int>, std::vector<std::pair<int, int>>> groups;
    for (const PairBox& b : boxes_)
        groups[{b.path, b.source_lift, b.target_lift}].push_back({b.plus_col, b.minus_col});
    for (auto& [k, v] : groups) {
        auto sorted = v;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i].second < sorted[i - 1].second) return false;
    }
    return true;
}

bool LinkedPair::is_semistandard_pair() const {
    return tableaux_semistandard() && link_semistandard();
}

std::vector<LiftedPath> LinkedPair::path_multiset() const {
    std::vector<LiftedPath> out;
    for (const PairBox& b : boxes_) {
        const Path& p = ctx_->path(b.path);
        LiftedPath lp;
        lp.arrows = p.arrows;
        // interior lifts of longer paths are not tracked by the pair; they
        // are irrelevant to the weight, fix them to 1
        lp.lifts.assign(p.arrows.size() + 1, 1);
        lp.lifts.front() = b.source_lift;
        lp.lifts.back() = b.target_lift;
        out.push_back(std::move(lp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string LinkedPair::canonical_key() const {
    std::ostringstream os;
    for (const PairBox& b : boxes_)
        os << b.path << "," << b.source_lift << "," << b.target_lift << "," << b.plus_col << ","
           << b.minus_col << ";";
    return os.str();
}

std::string LinkedPair::str() const {
    std::ostringstream os;
    os << "T+:";
    for (const RectTableau& t : tplus_tuple()) os << " v" << t.vertex() << t.str();
    os << "  T-:";
    for (const RectTableau& t : tminus_tuple()) os << " v" << t.vertex() << t.str();
    return os.str();
}

namespace {

struct KeyedBox {
    std::tuple<int, int, int> key;  // (path, source slot, target slot)
    BoxPos pos;
};

// collect (key, position) for every box of a tuple; side selects how the
// labels are read
std::vector<KeyedBox> keyed_boxes(const Ctx& ctx, const std::vector<RectTableau>& tuple,
                                  bool plus_side) {
    std::vector<KeyedBox> out;
    for (const RectTableau& t : tuple) {
        for (int r = 1; r <= t.rows(); ++r)
            for (int c = 1; c <= t.cols(); ++c) {
                Label lab = t.at(r, c);
                const Path& p = ctx->path(lab.path);
                if (plus_side) {
                    if (p.target != t.vertex())
                        throw std::invalid_argument("label path does not target the tableau vertex");
                    out.push_back({{lab.path, lab.slot, r}, {t.vertex(), r, c}});
                } else {
                    if (p.source != t.vertex())
                        throw std::invalid_argument("label path does not start at the tableau vertex");
                    out.push_back({{lab.path, r, lab.slot}, {t.vertex(), r, c}});
                }
            }
    }
    return out;
}

}  // namespace

std::vector<Link> enumerate_links(const Ctx& ctx, const std::vector<RectTableau>& tplus,
                                  const std::vector<RectTableau>& tminus) {
    auto plus = keyed_boxes(ctx, tplus, true);
    auto minus = keyed_boxes(ctx, tminus, false);
    std::map<std::tuple<int, int, int>, std::pair<std::vector<BoxPos>, std::vector<BoxPos>>> groups;
    for (auto& kb : plus) groups[kb.key].first.push_back(kb.pos);
    for (auto& kb : minus) groups[kb.key].second.push_back(kb.pos);
    for (auto& [k, g] : groups) {
        if (g.first.size() != g.second.size()) return {};
        std::sort(g.first.begin(), g.first.end());
        std::sort(g.second.begin(), g.second.end());
    }
    std::vector<Link> links{{}};
    for (auto& [k, g] : groups) {
        std::vector<int> perm(g.second.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<Link> extended;
        do {
            for (const Link& base : links) {
                Link l = base;
                for (std::size_t i = 0; i < perm.size(); ++i)
                    l.push_back({g.first[i], g.second[perm[i]]});
                extended.push_back(std::move(l));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        links = std::move(extended);
    }
    for (Link& l : links) std::sort(l.begin(), l.end());
    std::sort(links.begin(), links.end());
    links.erase(std::unique(links.begin(), links.end()), links.end());
    return links;
}

Link canonical_semistandard_link(const Ctx& ctx, const std::vector<RectTableau>& tplus,
                                 const std::vector<RectTableau>& tminus) {
    auto plus = keyed_boxes(ctx, tplus, true);
    auto minus = keyed_boxes(ctx, tminus, false);
    std::map<std::tuple<int, int, int>, std::pair<std::vector<BoxPos>, std::vector<BoxPos>>> groups;
    for (auto& kb : plus) groups[kb.key].first.push_back(kb.pos);
    for (auto& kb : minus) groups[kb.key].second.push_back(kb.pos);
    Link out;
    for (auto& [k, g] : groups) {
        if (g.first.size() != g.second.size())
            throw std::invalid_argument("tableaux tuples admit no link");
        std::sort(g.first.begin(), g.first.end());
        std::sort(g.second.begin(), g.second.end());
        for (std::size_t i = 0; i < g.first.size(); ++i) out.push_back({g.first[i], g.second[i]});
    }
    std::sort(out.begin(), out.end());
    return out;
}

LinkedPair pair_from_tableaux(const Ctx& ctx, const std::vector<RectTableau>& tplus,
                              const std::vector<RectTableau>& tminus, const Link& link) {
    std::map<BoxPos, Label> plus_labels, minus_labels;
    for (const RectTableau& t : tplus)
        for (int r = 1; r <= t.rows(); ++r)
            for (int c = 1; c <= t.cols(); ++c) plus_labels[{t.vertex(), r, c}] = t.at(r, c);
    for (const RectTableau& t : tminus)
        for (int r = 1; r <= t.rows(); ++r)
            for (int c = 1; c <= t.cols(); ++c) minus_labels[{t.vertex(), r, c}] = t.at(r, c);
    if (link.size() != plus_labels.size() || link.size() != minus_labels.size())
        throw std::invalid_argument("link does not cover the tableaux");
    std::vector<PairBox> boxes;
    for (auto& [ppos, mpos] : link) {
        Label pl = plus_labels.at(ppos);
        Label ml = minus_labels.at(mpos);
        if (pl.path != ml.path || ml.slot != ppos.row || pl.slot != mpos.row)
            throw std::invalid_argument("link violates the linked pair conditions");
        const Path& p = ctx->path(pl.path);
        if (p.target != ppos.vertex || p.source != mpos.vertex)
            throw std::invalid_argument("link endpoints do not match the path");
        boxes.push_back({pl.path, pl.slot, ppos.row, ppos.col, mpos.col});
    }
    return LinkedPair(ctx, std::move(boxes));
}

LinkedPair linked_pair_from_path_set(const Ctx& ctx, const std::vector<LiftedPath>& paths) {
    AbQuiver ab(ctx->quiver(), ctx->dims());
    auto wi = weight_of_path_set(ab, paths);
    if (!wi.weyl_invariant) throw std::invalid_argument("path set is not Weyl-invariant");
    if (!is_bipartite(ab, paths)) throw std::invalid_argument("path set is not bipartite");

    struct Slot {
        int path;
        int source_lift;
        int target_lift;
    };
    std::vector<Slot> slots;
    for (const LiftedPath& lp : paths) {
        int idx = ctx->path_index(lp.arrows);
        if (idx == 0) throw std::invalid_argument("arrow sequence is not a path of the quiver");
        slots.push_back({idx, lp.source_lift(), lp.target_lift()});
    }
    // columns: sort each row's labels and left-align; equal labels keep a
    // deterministic order so the link is the order preserving one
    std::vector<PairBox> boxes;
    for (auto& s : slots) boxes.push_back({s.path, s.source_lift, s.target_lift, 0, 0});
    std::sort(boxes.begin(), boxes.end());

    const Quiver& q = ctx->quiver();
    for (int v = 0; v < q.vertex_count(); ++v) {
        for (int row = 1; row <= ctx->rank(v); ++row) {
            std::vector<PairBox*> in_row;
            for (PairBox& b : boxes)
                if (ctx->path(b.path).target == v && b.target_lift == row) in_row.push_back(&b);
            std::stable_sort(in_row.begin(), in_row.end(), [](const PairBox* a, const PairBox* b) {
                return Label{a->path, a->source_lift} < Label{b->path, b->source_lift};
            });
            for (std::size_t i = 0; i < in_row.size(); ++i) in_row[i]->plus_col = static_cast<int>(i) + 1;

            std::vector<PairBox*> in_row_m;
            for (PairBox& b : boxes)
                if (ctx->path(b.path).source == v && b.source_lift == row) in_row_m.push_back(&b);
            std::stable_sort(in_row_m.begin(), in_row_m.end(), [](const PairBox* a, const PairBox* b) {
                return Label{a->path, a->target_lift} < Label{b->path, b->target_lift};
            });
            for (std::size_t i = 0; i < in_row_m.size(); ++i)
                in_row_m[i]->minus_col = static_cast<int>(i) + 1;
        }
    }
    return LinkedPair(ctx, std::move(boxes));
}

ArrowDiagram arrow_diagram(const LinkedPair& pair) {
    const Ctx& ctx = pair.ctx();
    for (const Path& p : ctx->paths())
        if (p.arrows.size() != 1)
            throw std::invalid_argument("arrow diagrams are defined for Kronecker-type pairs only");
    ArrowDiagram d;
    auto wp = pair.wplus();
    auto wm = pair.wminus();
    // chains in T+ indexed by the columns of T-
    for (int v = 0; v < ctx->quiver().vertex_count(); ++v) {
        for (int c = 1; c <= wm[v]; ++c) {
            std::vector<const PairBox*> col;
            for (const PairBox& b : pair.boxes())
                if (ctx->path(b.path).source == v && b.minus_col == c) col.push_back(&b);
            std::sort(col.begin(), col.end(),
                      [](const PairBox* a, const PairBox* b) { return a->source_lift < b->source_lift; });
            std::vector<Pos2> chain;
            for (const PairBox* b : col) chain.push_back({b->target_lift, b->plus_col});
            d.plus_chains.push_back(std::move(chain));
        }
        for (int c = 1; c <= wp[v]; ++c) {
            std::vector<const PairBox*> col;
            for (const PairBox& b : pair.boxes())
                if (ctx->path(b.path).target == v && b.plus_col == c) col.push_back(&b);
            std::sort(col.begin(), col.end(),
                      [](const PairBox* a, const PairBox* b) { return a->target_lift < b->target_lift; });
            std::vector<Pos2> chain;
            for (const PairBox* b : col) chain.push_back({b->source_lift, b->minus_col});
            d.minus_chains.push_back(std::move(chain));
        }
    }
    return d;
}

bool has_backwards_arrow(const std::vector<std::vector<Pos2>>& chains) {
    for (auto& chain : chains)
        for (std::size_t i = 1; i < chain.size(); ++i)
            if (chain[i].col < chain[i - 1].col) return true;
    return false;
}

bool has_downwards_arrow(const std::vector<std::vector<Pos2>>& chains) {
    // vertical arrows inside one column are the single-column base case and
    // do not count
    for (auto& chain : chains)
        for (std::size_t i = 1; i < chain.size(); ++i)
            if (chain[i].row > chain[i - 1].row && chain[i].col != chain[i - 1].col) return true;
    return false;
}

}  // namespace qsi
