#include "qsi/semiinvariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace qsi {

namespace {

int row_of(const PairBox& b, Side s) { return s == Side::Plus ? b.target_lift : b.source_lift; }
int opposite_col(const PairBox& b, Side s) { return s == Side::Plus ? b.minus_col : b.plus_col; }

Label label_of(const PairBox& b, Side s) {
    return s == Side::Plus ? Label{b.path, b.source_lift} : Label{b.path, b.target_lift};
}

int side_vertex(const Ctx& ctx, const PairBox& b, Side s) {
    const Path& p = ctx->path(b.path);
    return s == Side::Plus ? p.target : p.source;
}

void set_row(PairBox& b, Side s, int row) {
    (s == Side::Plus ? b.target_lift : b.source_lift) = row;
}

void set_col(PairBox& b, Side s, int col) {
    (s == Side::Plus ? b.plus_col : b.minus_col) = col;
}

struct PermSet {
    std::vector<std::vector<int>> perms;  // 1-based images
    std::vector<int> signs;
};

const PermSet& sym_group(int n) {
    static std::map<int, PermSet> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    PermSet ps;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        ps.perms.push_back(perm);
        ps.signs.push_back(inv % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    cache[n] = std::move(ps);
    return cache.at(n);
}

// columns of one tableau: box indices keyed by (col, row)
struct TableauView {
    int vertex = 0;
    int rows = 0;
    int width = 0;
    std::vector<std::vector<int>> cols;  // [col-1][row-1] -> box index
};

std::vector<TableauView> side_views(const LinkedPair& pair, Side s) {
    const Ctx& ctx = pair.ctx();
    int nv = ctx->quiver().vertex_count();
    std::vector<TableauView> views(nv);
    for (int v = 0; v < nv; ++v) {
        views[v].vertex = v;
        views[v].rows = ctx->rank(v);
    }
    for (std::size_t i = 0; i < pair.boxes().size(); ++i) {
        const PairBox& b = pair.boxes()[i];
        int v = side_vertex(ctx, b, s);
        TableauView& view = views[v];
        int col = s == Side::Plus ? b.plus_col : b.minus_col;
        view.width = std::max(view.width, col);
        if (static_cast<int>(view.cols.size()) < col) view.cols.resize(col);
        auto& column = view.cols[col - 1];
        column.resize(view.rows, -1);
        column[row_of(b, s) - 1] = static_cast<int>(i);
    }
    return views;
}

}  // namespace

SparsePolynomial mon_plus(const LinkedPair& pair) {
    const Ctx& ctx = pair.ctx();
    SparsePolynomial out = SparsePolynomial::constant(1);
    for (const PairBox& b : pair.boxes())
        out = out * ctx->path_matrix(b.path).at(b.target_lift, b.source_lift);
    return out;
}

SparsePolynomial mon_minus(const LinkedPair& pair) {
    // Mon(T-) reads entry (l, j) off the same path matrices, so the two sides
    // agree box by box; kept separate to exercise both definitions.
    return mon_plus(pair);
}

namespace {

// Enumeration state over a product of symmetric groups, one factor per
// tableau column.
struct OdometerSpec {
    std::vector<int> ranks;  // per column: r, factor Sym_r
};

// plus columns get global ids; boxes know their column id
struct GroupIndex {
    std::vector<int> column_rank;                 // per column id
    std::vector<int> box_column;                  // per box index
};

GroupIndex group_index(const LinkedPair& pair, Side s) {
    const Ctx& ctx = pair.ctx();
    GroupIndex g;
    std::map<std::pair<int, int>, int> ids;  // (vertex, col) -> id
    g.box_column.resize(pair.boxes().size());
    for (std::size_t i = 0; i < pair.boxes().size(); ++i) {
        const PairBox& b = pair.boxes()[i];
        int v = side_vertex(ctx, b, s);
        int col = s == Side::Plus ? b.plus_col : b.minus_col;
        auto [it, inserted] = ids.try_emplace({v, col}, static_cast<int>(g.column_rank.size()));
        if (inserted) g.column_rank.push_back(ctx->rank(v));
        g.box_column[i] = it->second;
    }
    return g;
}

std::size_t group_size(const GroupIndex& g) {
    std::size_t n = 1;
    for (int r : g.column_rank) {
        std::size_t f = 1;
        for (int i = 2; i <= r; ++i) f *= i;
        n *= f;
    }
    return n;
}

// iterate all tuples of permutations; fn(perm_index_per_column, sign)
template <typename Fn>
void for_each_tuple(const GroupIndex& g, Fn&& fn) {
    std::size_t ncols = g.column_rank.size();
    std::vector<std::size_t> idx(ncols, 0);
    while (true) {
        int sign = 1;
        for (std::size_t c = 0; c < ncols; ++c) sign *= sym_group(g.column_rank[c]).signs[idx[c]];
        fn(idx, sign);
        std::size_t c = 0;
        for (; c < ncols; ++c) {
            if (++idx[c] < sym_group(g.column_rank[c]).perms.size()) break;
            idx[c] = 0;
        }
        if (c == ncols) break;
    }
}

}  // namespace

SparsePolynomial f_det_rows(const LinkedPair& pair) {
    const Ctx& ctx = pair.ctx();
    GroupIndex gplus = group_index(pair, Side::Plus);
    auto minus_views = side_views(pair, Side::Minus);

    struct MinusCol {
        int vertex;
        std::vector<int> boxes;  // by row
        std::map<std::vector<int>, SparsePolynomial> det_memo;
    };
    std::vector<MinusCol> cols;
    for (auto& view : minus_views)
        for (auto& col : view.cols) cols.push_back({view.vertex, col, {}});

    PolyBuilder acc;
    for_each_tuple(gplus, [&](const std::vector<std::size_t>& idx, int sign) {
        SparsePolynomial prod = SparsePolynomial::constant(1);
        for (auto& mc : cols) {
            std::vector<int> digits;
            digits.reserve(mc.boxes.size());
            for (int bi : mc.boxes) {
                const PairBox& b = pair.boxes()[bi];
                const auto& perm =
                    sym_group(ctx->rank(ctx->path(b.path).target)).perms[idx[gplus.box_column[bi]]];
                digits.push_back(perm[b.target_lift - 1]);
            }
            auto it = mc.det_memo.find(digits);
            if (it == mc.det_memo.end()) {
                int r = static_cast<int>(mc.boxes.size());
                PolyMatrix m(r, r);
                for (int row = 1; row <= r; ++row) {
                    const PairBox& b = pair.boxes()[mc.boxes[row - 1]];
                    const PolyMatrix& mp = ctx->path_matrix(b.path);
                    for (int k = 1; k <= r; ++k) m.at(row, k) = mp.at(digits[row - 1], k);
                }
                it = mc.det_memo.emplace(digits, determinant(m)).first;
            }
            prod = prod * it->second;
            if (prod.is_zero()) break;
        }
        acc.add(prod, sign);
    });
    return std::move(acc).build();
}

SparsePolynomial f_det_cols(const LinkedPair& pair) {
    const Ctx& ctx = pair.ctx();
    GroupIndex gminus = group_index(pair, Side::Minus);
    auto plus_views = side_views(pair, Side::Plus);

    struct PlusCol {
        int vertex;
        std::vector<int> boxes;
        std::map<std::vector<int>, SparsePolynomial> det_memo;
    };
    std::vector<PlusCol> cols;
    for (auto& view : plus_views)
        for (auto& col : view.cols) cols.push_back({view.vertex, col, {}});

    PolyBuilder acc;
    for_each_tuple(gminus, [&](const std::vector<std::size_t>& idx, int sign) {
        SparsePolynomial prod = SparsePolynomial::constant(1);
        for (auto& pc : cols) {
            std::vector<int> digits;
            digits.reserve(pc.boxes.size());
            for (int bi : pc.boxes) {
                const PairBox& b = pair.boxes()[bi];
                const auto& perm =
                    sym_group(ctx->rank(ctx->path(b.path).source)).perms[idx[gminus.box_column[bi]]];
                digits.push_back(perm[b.source_lift - 1]);
            }
            auto it = pc.det_memo.find(digits);
            if (it == pc.det_memo.end()) {
                int r = static_cast<int>(pc.boxes.size());
                PolyMatrix m(r, r);
                for (int mcol = 1; mcol <= r; ++mcol) {
                    const PairBox& b = pair.boxes()[pc.boxes[mcol - 1]];
                    const PolyMatrix& mp = ctx->path_matrix(b.path);
                    for (int row = 1; row <= r; ++row) m.at(row, mcol) = mp.at(row, digits[mcol - 1]);
                }
                it = pc.det_memo.emplace(digits, determinant(m)).first;
            }
            prod = prod * it->second;
            if (prod.is_zero()) break;
        }
        acc.add(prod, sign);
    });
    return std::move(acc).build();
}

SparsePolynomial f_direct(const LinkedPair& pair, std::size_t budget) {
    const Ctx& ctx = pair.ctx();
    GroupIndex gplus = group_index(pair, Side::Plus);
    GroupIndex gminus = group_index(pair, Side::Minus);
    std::size_t total = group_size(gplus) * group_size(gminus);
    if (total > budget)
        throw BudgetError("|G+| * |G-| = " + std::to_string(total) +
                          " exceeds the direct-sum budget; use the determinant form");

    PolyBuilder acc;
    for_each_tuple(gplus, [&](const std::vector<std::size_t>& pi, int psign) {
        for_each_tuple(gminus, [&](const std::vector<std::size_t>& mi, int msign) {
            SparsePolynomial monomial = SparsePolynomial::constant(1);
            for (std::size_t i = 0; i < pair.boxes().size(); ++i) {
                const PairBox& b = pair.boxes()[i];
                const Path& p = ctx->path(b.path);
                const auto& sigma = sym_group(ctx->rank(p.target)).perms[pi[gplus.box_column[i]]];
                const auto& tau = sym_group(ctx->rank(p.source)).perms[mi[gminus.box_column[i]]];
                monomial =
                    monomial * ctx->path_matrix(b.path).at(sigma[b.target_lift - 1], tau[b.source_lift - 1]);
                if (monomial.is_zero()) break;
            }
            acc.add(monomial, psign * msign);
        });
    });
    return std::move(acc).build();
}

namespace {

std::vector<std::vector<int>> monomial_flows(const Monomial& m, const Quiver& q,
                                             const DimensionVector& d) {
    std::vector<std::vector<int>> flow(q.vertex_count());
    for (int v = 0; v < q.vertex_count(); ++v) flow[v].assign(d.rank(v), 0);
    for (auto& [key, e] : m.factors()) {
        Variable var = var_of_key(key);
        const Arrow& a = q.arrow(var.arrow);
        flow[a.target][var.row - 1] += e;
        flow[a.source][var.col - 1] -= e;
    }
    return flow;
}

}  // namespace

bool check_semi_invariance(const SparsePolynomial& f, const Weight& w, const Quiver& q,
                           const DimensionVector& d) {
    validate(q, d);
    if (static_cast<int>(w.w.size()) != q.vertex_count())
        throw std::invalid_argument("weight length does not match vertex count");
    if (f.is_zero()) return true;

    // homogeneity in each arrow block
    std::vector<int> block_deg(q.arrows().size() + 1, -1);
    bool first = true;
    for (auto& t : f.terms()) {
        std::vector<int> deg(q.arrows().size() + 1, 0);
        for (auto& [key, e] : t.monomial.factors()) deg[var_of_key(key).arrow] += e;
        if (first) {
            block_deg = deg;
            first = false;
        } else if (deg != block_deg) {
            throw std::invalid_argument("polynomial is not homogeneous in the arrow blocks");
        }
    }

    // torus weights, constant over the lifts and equal to w
    for (auto& t : f.terms()) {
        auto flow = monomial_flows(t.monomial, q, d);
        for (int v = 0; v < q.vertex_count(); ++v)
            for (int i = 0; i < d.rank(v); ++i)
                if (flow[v][i] != w.w[v]) return false;
    }

    // off-diagonal derivations annihilate f
    for (int p = 0; p < q.vertex_count(); ++p) {
        int r = d.rank(p);
        for (int u = 1; u <= r; ++u) {
            for (int v = 1; v <= r; ++v) {
                if (u == v) continue;
                PolyBuilder b;
                for (auto& t : f.terms()) {
                    for (auto& [key, e] : t.monomial.factors()) {
                        Variable var = var_of_key(key);
                        const Arrow& a = q.arrow(var.arrow);
                        if (a.target == p && var.row == u) {
                            Monomial shifted = Monomial::of(var)
                                                   .divide_into(t.monomial)
                                                   .times(Monomial::of(Variable{var.arrow, v, var.col}));
                            b.add(shifted, t.coeff * e);
                        }
                        if (a.source == p && var.col == v) {
                            Monomial shifted = Monomial::of(var)
                                                   .divide_into(t.monomial)
                                                   .times(Monomial::of(Variable{var.arrow, var.row, u}));
                            b.add(shifted, -t.coeff * e);
                        }
                    }
                }
                if (!std::move(b).build().is_zero()) return false;
            }
        }
    }
    return true;
}

namespace {

// sign of the permutation that stable-sorts v by key; small n
template <typename T, typename KeyFn>
int sort_sign(std::vector<T>& v, KeyFn key) {
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        for (std::size_t j = i; j > 0 && key(v[j]) < key(v[j - 1]); --j) {
            std::swap(v[j], v[j - 1]);
            sign = -sign;
        }
    }
    return sign;
}

int shuffle_sign(const std::vector<int>& positions) {
    int inv = 0;
    for (std::size_t i = 0; i < positions.size(); ++i)
        for (std::size_t j = i + 1; j < positions.size(); ++j)
            if (positions[i] > positions[j]) ++inv;
    return inv % 2 == 0 ? 1 : -1;
}

struct WorkBox {
    PairBox box;
    Label label;
    int tie;
};

// reassign the rows 1..n of one column, stable by (label, opposite column);
// returns the sorting sign
int assign_rows_sorted(std::vector<WorkBox>& column, Side s) {
    int sign = sort_sign(column, [](const WorkBox& wb) { return std::pair(wb.label, wb.tie); });
    for (std::size_t i = 0; i < column.size(); ++i)
        set_row(column[i].box, s, static_cast<int>(i) + 1);
    return sign;
}

WorkBox work_box(const PairBox& b, Side s) { return {b, label_of(b, s), opposite_col(b, s)}; }

}  // namespace

std::optional<StraighteningRelation> straighten_pair_step(const LinkedPair& pair, Side side,
                                                          int vertex) {
    const Ctx& ctx = pair.ctx();
    auto views = side_views(pair, side);
    const TableauView& view = views.at(vertex);
    if (view.width == 0) return std::nullopt;

    // pass 1: are all columns sorted?
    bool sorted = true;
    for (auto& col : view.cols) {
        for (std::size_t r = 1; r < col.size() && sorted; ++r)
            if (label_of(pair.boxes()[col[r]], side) < label_of(pair.boxes()[col[r - 1]], side))
                sorted = false;
        if (!sorted) break;
    }
    if (!sorted) {
        std::vector<PairBox> boxes = pair.boxes();
        int sign = 1;
        for (auto& col : view.cols) {
            std::vector<WorkBox> wb;
            for (int bi : col) wb.push_back(work_box(pair.boxes()[bi], side));
            sign *= assign_rows_sorted(wb, side);
            for (std::size_t r = 0; r < col.size(); ++r) boxes[col[r]] = wb[r].box;
        }
        StraighteningRelation rel{pair, side, vertex, {}};
        rel.terms.push_back({Int(sign), LinkedPair(ctx, std::move(boxes))});
        return rel;
    }

    // pass 2: first violating adjacent column pair, leftmost column then
    // topmost row
    int vc = -1, vk = -1;
    for (int c = 0; c + 1 < view.width && vc < 0; ++c) {
        for (int k = 0; k < view.rows; ++k) {
            Label left = label_of(pair.boxes()[view.cols[c][k]], side);
            Label right = label_of(pair.boxes()[view.cols[c + 1][k]], side);
            if (right < left) {
                vc = c;
                vk = k;
                break;
            }
        }
    }
    if (vc < 0) return std::nullopt;

    const auto& colI = view.cols[vc];
    const auto& colJ = view.cols[vc + 1];
    int r = view.rows;
    int k = vk + 1;  // 1-based violation row

    std::vector<PairBox> alpha, beta, slots;
    for (int m = 0; m < k - 1; ++m) alpha.push_back(pair.boxes()[colI[m]]);
    for (int m = k; m < r; ++m) beta.push_back(pair.boxes()[colJ[m]]);
    for (int m = 0; m < k; ++m) slots.push_back(pair.boxes()[colJ[m]]);
    for (int m = k - 1; m < r; ++m) slots.push_back(pair.boxes()[colI[m]]);
    int nslots = static_cast<int>(slots.size());  // r + 1
    int asize = r - k + 1;

    // w0: the last `asize` slots return to the left column
    std::vector<int> w0(nslots);
    for (int i = 0; i < asize; ++i) w0[i] = k + i;
    for (int i = 0; i < k; ++i) w0[asize + i] = i;
    int sign_w0 = shuffle_sign(w0);

    std::map<std::string, PairTerm> merged;
    std::string input_key = pair.canonical_key();

    std::vector<int> choose(asize);
    std::iota(choose.begin(), choose.end(), 0);
    bool more = true;
    while (more) {
        bool original = true;
        for (int i = 0; i < asize; ++i)
            if (choose[i] != k + i) original = false;

        if (!original) {
            std::vector<int> positions;
            std::vector<bool> in_a(nslots, false);
            for (int i : choose) {
                positions.push_back(i);
                in_a[i] = true;
            }
            for (int i = 0; i < nslots; ++i)
                if (!in_a[i]) positions.push_back(i);
            int sign = shuffle_sign(positions);

            std::vector<WorkBox> left, right;
            for (const PairBox& b : alpha) left.push_back(work_box(b, side));
            for (int i : choose) left.push_back(work_box(slots[i], side));
            for (int i = 0; i < nslots; ++i)
                if (!in_a[i]) right.push_back(work_box(slots[i], side));
            for (const PairBox& b : beta) right.push_back(work_box(b, side));

            sign *= assign_rows_sorted(left, side);
            sign *= assign_rows_sorted(right, side);
            for (auto& wb : left) set_col(wb.box, side, vc + 1);
            for (auto& wb : right) set_col(wb.box, side, vc + 2);

            std::vector<PairBox> boxes;
            for (const PairBox& b : pair.boxes()) {
                bool replaced = false;
                for (int m = 0; m < r && !replaced; ++m)
                    if (b == pair.boxes()[colI[m]] || b == pair.boxes()[colJ[m]]) replaced = true;
                if (!replaced) boxes.push_back(b);
            }
            for (auto& wb : left) boxes.push_back(wb.box);
            for (auto& wb : right) boxes.push_back(wb.box);

            LinkedPair term_pair(ctx, std::move(boxes));
            Int coeff = Int(-sign_w0 * sign);
            std::string key = term_pair.canonical_key();
            if (key == input_key)
                throw std::logic_error("exchange reproduced the source pair");
            auto it = merged.find(key);
            if (it == merged.end())
                merged.emplace(key, PairTerm{coeff, std::move(term_pair)});
            else
                it->second.coeff += coeff;
        }

        // next combination
        int i = asize - 1;
        while (i >= 0 && choose[i] == nslots - asize + i) --i;
        if (i < 0)
            more = false;
        else {
            ++choose[i];
            for (int j = i + 1; j < asize; ++j) choose[j] = choose[j - 1] + 1;
        }
    }

    StraighteningRelation rel{pair, side, vertex, {}};
    for (auto& [key, term] : merged)
        if (term.coeff != 0) rel.terms.push_back(std::move(term));
    return rel;
}

StraighteningRelation lift_straightening(const LinkedPair& pair, Side side, int vertex,
                                         bool verify) {
    auto rel = straighten_pair_step(pair, side, vertex);
    if (!rel) {
        StraighteningRelation trivial{pair, side, vertex, {}};
        trivial.terms.push_back({Int(1), pair});
        rel = trivial;
    }
    if (verify) {
        SparsePolynomial lhs = f_det_rows(pair);
        SparsePolynomial rhs;
        for (const PairTerm& t : rel->terms) rhs = rhs + f_det_rows(t.pair).times_scalar(t.coeff);
        if (!(lhs == rhs))
            throw std::logic_error("straightening identity failed to verify");
    }
    return *rel;
}

std::vector<PairTerm> express_weakly_semistandard(const LinkedPair& pair) {
    const Ctx& ctx = pair.ctx();
    int nv = ctx->quiver().vertex_count();

    struct Item {
        Int coeff;
        LinkedPair pair;
        int stage;  // 0: straighten targets, 1: straighten sources
    };
    std::vector<Item> work{{Int(1), pair, 0}};
    std::map<std::string, PairTerm> out;
    std::size_t fuel = 2'000'000;

    while (!work.empty()) {
        if (fuel-- == 0) throw std::logic_error("straightening did not terminate");
        Item item = std::move(work.back());
        work.pop_back();

        std::optional<StraighteningRelation> rel;
        int stage = item.stage;
        for (; stage < 2 && !rel; ++stage) {
            Side side = stage == 0 ? Side::Plus : Side::Minus;
            for (int v = 0; v < nv && !rel; ++v) rel = straighten_pair_step(item.pair, side, v);
            if (rel) break;
        }
        if (!rel) {
            auto it = out.find(item.pair.canonical_key());
            if (it == out.end())
                out.emplace(item.pair.canonical_key(), PairTerm{item.coeff, item.pair});
            else
                it->second.coeff += item.coeff;
            continue;
        }
        for (const PairTerm& t : rel->terms)
            work.push_back({item.coeff * t.coeff, t.pair, stage});
    }

    std::vector<PairTerm> terms;
    for (auto& [key, t] : out)
        if (t.coeff != 0) terms.push_back(std::move(t));
    return terms;
}

bool verify_expression(const LinkedPair& pair, const std::vector<PairTerm>& terms) {
    SparsePolynomial lhs = f_det_rows(pair);
    SparsePolynomial rhs;
    for (const PairTerm& t : terms) rhs = rhs + f_det_rows(t.pair).times_scalar(t.coeff);
    return lhs == rhs;
}

namespace {

std::vector<Label> sorted_column(const RectTableau& t, int col) {
    auto c = t.column(col);
    std::sort(c.begin(), c.end());
    return c;
}

bool has_duplicate(const std::vector<Label>& col) {
    for (std::size_t i = 1; i < col.size(); ++i)
        if (col[i] == col[i - 1]) return true;
    return false;
}

RectTableau tableau_from_columns(int vertex, int rows, std::vector<std::vector<Label>> cols) {
    std::sort(cols.begin(), cols.end());
    int width = static_cast<int>(cols.size());
    std::vector<Label> entries(static_cast<std::size_t>(rows) * width);
    for (int c = 0; c < width; ++c)
        for (int r = 0; r < rows; ++r) entries[r * width + c] = cols[c][r];
    return RectTableau(vertex, rows, width, std::move(entries));
}

}  // namespace

std::optional<TableauRelation> straighten_columns(const RectTableau& t) {
    int r = t.rows();
    // normalize columns; a duplicate label in a column kills the minor
    std::vector<std::vector<Label>> cols;
    int sort_parity = 1;
    bool changed = false;
    for (int c = 1; c <= t.cols(); ++c) {
        auto col = t.column(c);
        std::vector<Label> sorted = col;
        int sign = sort_sign(sorted, [](const Label& l) { return l; });
        if (sorted != col) changed = true;
        if (has_duplicate(sorted)) return TableauRelation{t, {}};
        sort_parity *= sign;
        cols.push_back(std::move(sorted));
    }
    std::sort(cols.begin(), cols.end());

    // first violating adjacent pair
    int vc = -1, vk = -1;
    for (std::size_t c = 0; c + 1 < cols.size() && vc < 0; ++c)
        for (int k = 0; k < r; ++k)
            if (cols[c + 1][k] < cols[c][k]) {
                vc = static_cast<int>(c);
                vk = k;
                break;
            }
    if (vc < 0) {
        if (!changed && sort_parity == 1) return std::nullopt;
        TableauRelation rel{t, {}};
        rel.terms.push_back({Int(sort_parity), tableau_from_columns(t.vertex(), r, cols)});
        return rel;
    }

    int k = vk + 1;
    const auto& I = cols[vc];
    const auto& J = cols[vc + 1];
    std::vector<Label> alpha(I.begin(), I.begin() + (k - 1));
    std::vector<Label> beta(J.begin() + k, J.end());
    std::vector<Label> slots;
    for (int m = 0; m < k; ++m) slots.push_back(J[m]);
    for (int m = k - 1; m < r; ++m) slots.push_back(I[m]);
    int nslots = r + 1;
    int asize = r - k + 1;

    std::vector<int> w0(nslots);
    for (int i = 0; i < asize; ++i) w0[i] = k + i;
    for (int i = 0; i < k; ++i) w0[asize + i] = i;
    int sign_w0 = shuffle_sign(w0);

    std::map<std::pair<std::vector<Label>, std::vector<Label>>, Int> merged;
    std::vector<int> choose(asize);
    std::iota(choose.begin(), choose.end(), 0);
    bool more = true;
    while (more) {
        bool original = true;
        for (int i = 0; i < asize; ++i)
            if (choose[i] != k + i) original = false;
        if (!original) {
            std::vector<int> positions;
            std::vector<bool> in_a(nslots, false);
            for (int i : choose) {
                positions.push_back(i);
                in_a[i] = true;
            }
            for (int i = 0; i < nslots; ++i)
                if (!in_a[i]) positions.push_back(i);
            int sign = shuffle_sign(positions);

            std::vector<Label> left = alpha, right;
            for (int i : choose) left.push_back(slots[i]);
            for (int i = 0; i < nslots; ++i)
                if (!in_a[i]) right.push_back(slots[i]);
            right.insert(right.end(), beta.begin(), beta.end());
            sign *= sort_sign(left, [](const Label& l) { return l; });
            sign *= sort_sign(right, [](const Label& l) { return l; });
            if (has_duplicate(left) || has_duplicate(right)) {
                // vanishing minor
            } else {
                merged[{left, right}] += Int(-sign_w0 * sign);
            }
        }
        int i = asize - 1;
        while (i >= 0 && choose[i] == nslots - asize + i) --i;
        if (i < 0)
            more = false;
        else {
            ++choose[i];
            for (int j = i + 1; j < asize; ++j) choose[j] = choose[j - 1] + 1;
        }
    }

    TableauRelation rel{t, {}};
    for (auto& [key, coeff] : merged) {
        if (coeff == 0) continue;
        std::vector<std::vector<Label>> new_cols;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (static_cast<int>(c) == vc)
                new_cols.push_back(key.first);
            else if (static_cast<int>(c) == vc + 1)
                new_cols.push_back(key.second);
            else
                new_cols.push_back(cols[c]);
        }
        rel.terms.push_back(
            {coeff * sort_parity, tableau_from_columns(t.vertex(), r, std::move(new_cols))});
    }
    return rel;
}

}  // namespace qsi
