#include "qsi/toric.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace qsi {

namespace {

// phase-1 simplex on: find lambda >= 0 with P^T lambda = x, sum lambda = 1.
// Rows are the dim coordinate equations plus the affine one.
bool feasible(const std::vector<Rat>& rhs_in, const std::vector<std::vector<Rat>>& cols) {
    std::size_t rows = rhs_in.size();
    std::size_t nvars = cols.size();
    // tableau: nvars structural columns + rows artificial columns
    std::vector<std::vector<Rat>> tab(rows, std::vector<Rat>(nvars + rows, 0));
    std::vector<Rat> rhs = rhs_in;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < nvars; ++j) tab[i][j] = cols[j][i];
        if (rhs[i] < 0) {
            rhs[i] = -rhs[i];
            for (std::size_t j = 0; j < nvars; ++j) tab[i][j] = -tab[i][j];
        }
        tab[i][nvars + i] = 1;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = nvars + i;

    // objective: minimize the sum of artificials; reduced costs start as the
    // column sums over the constraint rows
    std::vector<Rat> obj(nvars + rows, 0);
    Rat obj_rhs = 0;
    for (std::size_t j = 0; j < nvars; ++j)
        for (std::size_t i = 0; i < rows; ++i) obj[j] += tab[i][j];
    for (std::size_t i = 0; i < rows; ++i) obj_rhs += rhs[i];

    while (true) {
        // Bland: smallest improving column
        std::size_t enter = nvars + rows;
        for (std::size_t j = 0; j < nvars + rows; ++j)
            if (obj[j] > 0) {
                enter = j;
                break;
            }
        if (enter == nvars + rows) break;
        std::size_t leave = rows;
        Rat best = 0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (tab[i][enter] <= 0) continue;
            Rat ratio = rhs[i] / tab[i][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                best = ratio;
                leave = i;
            }
        }
        if (leave == rows) return false;  // unbounded cannot happen here
        Rat pivot = tab[leave][enter];
        for (auto& v : tab[leave]) v /= pivot;
        rhs[leave] /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || tab[i][enter] == 0) continue;
            Rat factor = tab[i][enter];
            for (std::size_t j = 0; j < nvars + rows; ++j) tab[i][j] -= factor * tab[leave][j];
            rhs[i] -= factor * rhs[leave];
        }
        Rat ofactor = obj[enter];
        if (ofactor != 0) {
            for (std::size_t j = 0; j < nvars + rows; ++j) obj[j] -= ofactor * tab[leave][j];
            obj_rhs -= ofactor * rhs[leave];
        }
        basis[leave] = enter;
    }
    return obj_rhs == 0;
}

}  // namespace

bool in_convex_hull(const LatticeVec& x, const std::vector<LatticeVec>& points) {
    if (points.empty()) return false;
    std::size_t dim = x.size();
    std::vector<std::vector<Rat>> cols;
    for (const LatticeVec& p : points) {
        if (p.size() != dim) throw std::invalid_argument("dimension mismatch");
        std::vector<Rat> col(dim + 1);
        for (std::size_t i = 0; i < dim; ++i) col[i] = p[i];
        col[dim] = 1;
        cols.push_back(std::move(col));
    }
    std::vector<Rat> rhs(dim + 1);
    for (std::size_t i = 0; i < dim; ++i) rhs[i] = x[i];
    rhs[dim] = 1;
    return feasible(rhs, cols);
}

LatticePolytope::LatticePolytope(int dim, std::vector<LatticeVec> vertices, bool check_vertices)
    : dim_(dim), vertices_(std::move(vertices)) {
    if (dim_ < 1) throw std::invalid_argument("polytope dimension must be positive");
    if (vertices_.empty()) throw std::invalid_argument("polytope needs at least one vertex");
    std::set<LatticeVec> seen;
    for (const LatticeVec& v : vertices_) {
        if (static_cast<int>(v.size()) != dim_)
            throw std::invalid_argument("vertex dimension mismatch");
        if (!seen.insert(v).second) throw std::invalid_argument("duplicate vertex");
    }
    if (check_vertices && vertices_.size() > 1) {
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            std::vector<LatticeVec> others;
            for (std::size_t j = 0; j < vertices_.size(); ++j)
                if (j != i) others.push_back(vertices_[j]);
            if (in_convex_hull(vertices_[i], others))
                throw std::invalid_argument("listed point is not a vertex of the hull");
        }
    }
}

std::vector<LatticeVec> lattice_points(const LatticePolytope& p) {
    if (p.dim() > 8) throw std::invalid_argument("lattice point scan limited to dimension 8");
    LatticeVec lo(p.dim()), hi(p.dim());
    for (int i = 0; i < p.dim(); ++i) {
        lo[i] = hi[i] = p.vertices()[0][i];
        for (const LatticeVec& v : p.vertices()) {
            lo[i] = std::min(lo[i], v[i]);
            hi[i] = std::max(hi[i], v[i]);
        }
    }
    long long cells = 1;
    for (int i = 0; i < p.dim(); ++i) {
        cells *= hi[i] - lo[i] + 1;
        if (cells > 50'000'000) throw std::invalid_argument("bounding box too large to scan");
    }
    std::vector<LatticeVec> out;
    LatticeVec x = lo;
    while (true) {
        if (in_convex_hull(x, p.vertices())) out.push_back(x);
        int i = 0;
        for (; i < p.dim(); ++i) {
            if (++x[i] <= hi[i]) break;
            x[i] = lo[i];
        }
        if (i == p.dim()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

LaurentPolynomial::LaurentPolynomial(int dim, std::vector<std::pair<LatticeVec, Int>> terms)
    : dim_(dim), terms_(std::move(terms)) {
    std::set<LatticeVec> seen;
    for (auto& [e, c] : terms_) {
        if (static_cast<int>(e.size()) != dim_)
            throw std::invalid_argument("exponent dimension mismatch");
        if (c == 0) throw std::invalid_argument("zero coefficient term");
        if (!seen.insert(e).second) throw std::invalid_argument("duplicate exponent vector");
    }
    std::sort(terms_.begin(), terms_.end());
}

std::vector<LatticeVec> LaurentPolynomial::newton_vertices() const {
    std::vector<LatticeVec> exps;
    for (auto& [e, c] : terms_) exps.push_back(e);
    std::vector<LatticeVec> verts;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        std::vector<LatticeVec> others;
        for (std::size_t j = 0; j < exps.size(); ++j)
            if (j != i) others.push_back(exps[j]);
        if (others.empty() || !in_convex_hull(exps[i], others)) verts.push_back(exps[i]);
    }
    std::sort(verts.begin(), verts.end());
    return verts;
}

namespace {

struct VecHash {
    std::size_t operator()(const LatticeVec& v) const {
        std::size_t h = 1469598103934665603ull;
        for (long long x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

using PowerMap = std::unordered_map<LatticeVec, Int, VecHash>;

Int paired_constant_term(const PowerMap& a, const PowerMap& b) {
    Int total = 0;
    for (auto& [v, c] : a) {
        LatticeVec neg(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
        auto it = b.find(neg);
        if (it != b.end()) total += c * it->second;
    }
    return total;
}

}  // namespace

std::vector<Int> classical_period(const LaurentPolynomial& f, int nmax) {
    if (nmax < 0) throw std::invalid_argument("nmax must be >= 0");
    std::vector<Int> out(nmax + 1, 0);
    out[0] = 1;
    if (nmax == 0) return out;

    PowerMap prev;  // f^0
    prev.emplace(LatticeVec(f.dim(), 0), 1);
    PowerMap cur;
    for (auto& [e, c] : f.terms()) cur.emplace(e, c);  // f^1

    for (int j = 1;; ++j) {
        // c_{2j-1} from f^{j-1} and f^j, c_{2j} from f^j alone
        if (2 * j - 1 <= nmax) out[2 * j - 1] = paired_constant_term(prev, cur);
        if (2 * j <= nmax) out[2 * j] = paired_constant_term(cur, cur);
        if (2 * j + 1 > nmax) break;
        PowerMap next;
        next.reserve(cur.size() * 2);
        for (auto& [v, c] : cur) {
            for (auto& [e, ce] : f.terms()) {
                LatticeVec sum(v.size());
                for (std::size_t i = 0; i < v.size(); ++i) sum[i] = v[i] + e[i];
                auto [it, inserted] = next.try_emplace(std::move(sum), 0);
                it->second += c * ce;
            }
        }
        for (auto it = next.begin(); it != next.end();) {
            if (it->second == 0)
                it = next.erase(it);
            else
                ++it;
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return out;
}

std::pair<LatticePolytope, LaurentPolynomial> builtin_fano_example() {
    std::vector<LatticeVec> verts = {
        {2, -1, 2, 0, -1, 0}, {2, -1, 2, 1, -1, -1}, {1, 0, 1, 0, -1, 0}, {1, 0, 1, 1, -1, -1},
        {0, 0, 0, 0, 0, 1},   {0, 0, 0, 0, 1, 0},    {0, 0, 0, 1, 0, 0},  {0, 0, 1, 0, 0, 0},
        {1, -1, 0, -1, 0, 0}, {2, -1, 1, 0, 0, 0},   {1, -1, 1, -1, -1, 0},
        {-1, 1, -1, 0, 1, 0}, {-1, 0, -1, 0, 0, 0}};
    std::vector<std::pair<LatticeVec, Int>> terms;
    for (const LatticeVec& v : verts) terms.push_back({v, 1});
    LatticePolytope p(6, verts);
    LaurentPolynomial f(6, std::move(terms));
    return {std::move(p), std::move(f)};
}

}  // namespace qsi
