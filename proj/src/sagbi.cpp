#include "qsi/sagbi.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace qsi {

KroneckerContext::KroneckerContext(int arrow_count, int r0, int r1)
    : arrow_count_(arrow_count), r0_(r0), r1_(r1), gcd_(std::gcd(r0, r1)) {
    if (arrow_count < 1 || r0 < 1 || r1 < 1)
        throw std::invalid_argument("Kronecker context needs K, r0, r1 >= 1");
    ctx_ = QuiverContext::make(Quiver::kronecker(arrow_count), DimensionVector{{r0, r1}});
}

Weight KroneckerContext::weight(int d) const { return Weight{{-wminus(d), wplus(d)}}; }

namespace {

// Row-major backtracking fill of T+ with labels (arrow, source slot); rows
// weakly increase, columns strictly increase, and every source slot j has to
// appear exactly wminus times in total.
struct SsEnumerator {
    const KroneckerContext& kctx;
    int d;
    int rows, cols, wminus;
    std::vector<Label> alphabet;
    std::vector<Label> grid;           // row-major
    std::vector<int> slot_count;
    std::vector<LinkedPair>* out;

    SsEnumerator(const KroneckerContext& k, int degree, std::vector<LinkedPair>* sink)
        : kctx(k), d(degree) {
        rows = k.r1();
        cols = k.wplus(d);
        wminus = k.wminus(d);
        for (int i = 1; i <= k.arrow_count(); ++i)
            for (int j = 1; j <= k.r0(); ++j) alphabet.push_back({i, j});
        grid.assign(static_cast<std::size_t>(rows) * cols, Label{});
        slot_count.assign(k.r0() + 1, 0);
        out = sink;
    }

    Label& at(int r, int c) { return grid[static_cast<std::size_t>(r) * cols + c]; }

    void fill(std::size_t cell) {
        if (cell == grid.size()) {
            emit();
            return;
        }
        int r = static_cast<int>(cell) / cols;
        int c = static_cast<int>(cell) % cols;
        for (const Label& lab : alphabet) {
            if (c > 0 && lab < at(r, c - 1)) continue;
            if (r > 0 && !(at(r - 1, c) < lab)) continue;
            if (slot_count[lab.slot] == wminus) continue;
            at(r, c) = lab;
            ++slot_count[lab.slot];
            fill(cell + 1);
            --slot_count[lab.slot];
        }
    }

    // restrict the first cell; used to partition the search
    void fill_with_first(const Label& first) {
        if (slot_count[first.slot] == wminus) return;
        at(0, 0) = first;
        ++slot_count[first.slot];
        fill(1);
        --slot_count[first.slot];
    }

    void emit() {
        // derive the source tableau rows and check they are semi-standard
        // after sorting; the balance is already exact
        std::vector<std::vector<std::pair<Label, int>>> minus_rows(kctx.r0() + 1);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) {
                const Label& lab = at(r, c);
                minus_rows[lab.slot].push_back({Label{lab.path, r + 1}, c + 1});
            }
        for (int j = 1; j <= kctx.r0(); ++j) {
            auto& row = minus_rows[j];
            std::sort(row.begin(), row.end());
            // columns of T- must be strictly increasing
        }
        for (int c = 0; c < wminus; ++c)
            for (int j = 1; j < kctx.r0(); ++j)
                if (!(minus_rows[j][c].first < minus_rows[j + 1][c].first)) return;

        std::vector<PairBox> boxes;
        for (int j = 1; j <= kctx.r0(); ++j)
            for (int c = 0; c < wminus; ++c) {
                const auto& [lab, plus_col] = minus_rows[j][c];
                boxes.push_back({lab.path, j, lab.slot, plus_col, c + 1});
            }
        out->push_back(LinkedPair(kctx.ctx(), std::move(boxes)));
    }
};

}  // namespace

std::vector<LinkedPair> enumerate_ss_pairs(const KroneckerContext& kctx, int d, int threads) {
    if (d < 1) throw std::invalid_argument("degree index must be positive");
    if ((d * kctx.r0()) % kctx.gcd() != 0 || (d * kctx.r1()) % kctx.gcd() != 0)
        throw std::invalid_argument("degree index does not give integral shapes");

    std::vector<Label> alphabet;
    for (int i = 1; i <= kctx.arrow_count(); ++i)
        for (int j = 1; j <= kctx.r0(); ++j) alphabet.push_back({i, j});

    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 1 || alphabet.size() < 2) {
        std::vector<LinkedPair> out;
        SsEnumerator e(kctx, d, &out);
        e.fill(0);
        return out;
    }

    // one partition per first label, merged in label order
    std::vector<std::future<std::vector<LinkedPair>>> futures;
    for (const Label& first : alphabet) {
        futures.push_back(std::async(std::launch::async, [&kctx, d, first]() {
            std::vector<LinkedPair> part;
            SsEnumerator e(kctx, d, &part);
            e.fill_with_first(first);
            return part;
        }));
    }
    std::vector<LinkedPair> out;
    for (auto& f : futures) {
        auto part = f.get();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

Monomial leading_monomial_of_pair(const LinkedPair& pair) {
    if (!pair.is_semistandard_pair())
        throw std::invalid_argument("leading monomial shortcut needs a semi-standard pair");
    SparsePolynomial m = mon_plus(pair);
    if (m.term_count() != 1 || m.leading_term().coeff != 1)
        throw std::invalid_argument("Mon(T+) is not a monomial; quiver has composite paths");
    return m.leading_term().monomial;
}

const SsPairTables::Table& SsPairTables::table(int d) {
    auto it = tables_.find(d);
    if (it != tables_.end()) return it->second;
    Table t;
    t.pairs = enumerate_ss_pairs(kctx_, d, threads_);
    t.lms.reserve(t.pairs.size());
    for (std::size_t i = 0; i < t.pairs.size(); ++i) {
        t.lms.push_back(leading_monomial_of_pair(t.pairs[i]));
        t.by_lm.emplace(t.lms.back().str(), static_cast<int>(i));
    }
    return tables_.emplace(d, std::move(t)).first->second;
}

const std::vector<LinkedPair>& SsPairTables::pairs(int d) { return table(d).pairs; }
const std::vector<Monomial>& SsPairTables::leading_monomials(int d) { return table(d).lms; }

std::optional<int> SsPairTables::pair_with_lm(int d, const Monomial& m) {
    const Table& t = table(d);
    auto it = t.by_lm.find(m.str());
    if (it == t.by_lm.end()) return std::nullopt;
    return it->second;
}

std::optional<Splitting> find_splitting(const LinkedPair& pair, int d, SsPairTables& tables) {
    Monomial lm = leading_monomial_of_pair(pair);
    for (int d1 = 1; d1 <= d - d1; ++d1) {
        int d2 = d - d1;
        const auto& lms = tables.leading_monomials(d1);
        const auto& pairs1 = tables.pairs(d1);
        for (std::size_t i = 0; i < lms.size(); ++i) {
            if (!lms[i].divides(lm)) continue;
            auto j = tables.pair_with_lm(d2, lms[i].divide_into(lm));
            if (j) return Splitting{pairs1[i], tables.pairs(d2)[*j]};
        }
    }
    return std::nullopt;
}

bool is_primitive(const LinkedPair& pair, int d, SsPairTables& tables) {
    return !find_splitting(pair, d, tables).has_value();
}

std::vector<LinkedPair> GeneratorSet::all() const {
    std::vector<LinkedPair> out;
    for (const auto& v : by_degree) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<std::pair<Weight, int>> GeneratorSet::counts() const {
    std::vector<std::pair<Weight, int>> out;
    for (int d = 1; d <= max_d; ++d)
        out.push_back({kctx.weight(d), static_cast<int>(by_degree[d - 1].size())});
    return out;
}

GeneratorSet primitive_generators(const KroneckerContext& kctx, int max_d, int threads) {
    SsPairTables tables(kctx, threads);
    GeneratorSet out{kctx, max_d, {}};
    for (int d = 1; d <= max_d; ++d) {
        std::vector<LinkedPair> prim;
        for (const LinkedPair& p : tables.pairs(d))
            if (is_primitive(p, d, tables)) prim.push_back(p);
        out.by_degree.push_back(std::move(prim));
    }
    return out;
}

std::vector<LinkedPair> kronecker22_family(int arrow_count) {
    KroneckerContext kctx(arrow_count, 2, 2);
    const Ctx& ctx = kctx.ctx();
    std::vector<LinkedPair> out;
    int K = arrow_count;

    // single columns: the polarized 2x2 determinants
    for (int x = 1; x <= K; ++x)
        for (int y = x; y <= K; ++y)
            out.push_back(LinkedPair(ctx, {{x, 1, 1, 1, 1}, {y, 2, 2, 1, 1}}));

    // interleaved chains a < c_1 < b_2 < ... and a < b_1 < c_2 < ..., shape
    // 2 x (len+1); finite because len + 2 <= K
    for (int len = 1; len + 2 <= K; ++len) {
        std::vector<int> b(len + 1), c(len + 1);
        int a, dd;
        std::function<void(int)> rec = [&](int m) {
            if (m > len) {
                for (dd = std::max(b[len], c[len]) + 1; dd <= K; ++dd) {
                    std::vector<PairBox> boxes;
                    boxes.push_back({a, 1, 1, 1, 1});
                    for (int i = 1; i <= len; ++i) {
                        boxes.push_back({b[i], 1, 2, i, i + 1});
                        boxes.push_back({c[i], 2, 1, i + 1, i});
                    }
                    boxes.push_back({dd, 2, 2, len + 1, len + 1});
                    out.push_back(LinkedPair(ctx, std::move(boxes)));
                }
                return;
            }
            int bmin = m == 1 ? a + 1 : std::max(b[m - 1], c[m - 1] + 1);
            for (b[m] = bmin; b[m] <= K; ++b[m]) {
                int cmin = m == 1 ? a + 1 : std::max(c[m - 1], b[m - 1] + 1);
                for (c[m] = cmin; c[m] <= K; ++c[m]) rec(m + 1);
            }
        };
        for (a = 1; a <= K; ++a) rec(1);
    }
    std::sort(out.begin(), out.end(),
              [](const LinkedPair& p, const LinkedPair& q) { return p.boxes() < q.boxes(); });
    return out;
}

namespace {

// multiset of generator leading monomials whose product is m; indices are
// non-decreasing, failures are memoized
bool factor_over_lms(const Monomial& m, const std::vector<Monomial>& lms, std::size_t min_idx,
                     std::vector<int>& picked, std::unordered_set<std::string>* dead) {
    if (m.is_one()) return true;
    std::string key = m.str() + "@" + std::to_string(min_idx);
    if (dead->count(key)) return false;
    for (std::size_t i = min_idx; i < lms.size(); ++i) {
        if (!lms[i].divides(m)) continue;
        picked.push_back(static_cast<int>(i));
        if (factor_over_lms(lms[i].divide_into(m), lms, i, picked, dead)) return true;
        picked.pop_back();
    }
    dead->insert(std::move(key));
    return false;
}

}  // namespace

SubductionResult subduce(const SparsePolynomial& f, const std::vector<LinkedPair>& generators,
                         std::size_t max_steps) {
    std::vector<Monomial> lms;
    std::vector<SparsePolynomial> polys;
    std::vector<Int> lcs;
    for (const LinkedPair& g : generators) {
        polys.push_back(f_det_rows(g));
        if (polys.back().is_zero()) throw std::invalid_argument("generator has zero semi-invariant");
        lms.push_back(polys.back().leading_term().monomial);
        lcs.push_back(polys.back().leading_term().coeff);
    }

    SubductionResult res;
    res.remainder = f;
    std::unordered_set<std::string> dead;
    while (!res.remainder.is_zero()) {
        if (res.trace.size() >= max_steps)
            throw std::logic_error("subduction exceeded the step budget");
        const Term& lead = res.remainder.leading_term();
        std::vector<int> picked;
        if (!factor_over_lms(lead.monomial, lms, 0, picked, &dead)) break;

        SparsePolynomial prod = SparsePolynomial::constant(1);
        Int prod_lc = 1;
        for (int i : picked) {
            prod = prod * polys[i];
            prod_lc *= lcs[i];
        }
        Int g = boost::multiprecision::gcd(abs(lead.coeff), prod_lc);
        Int f_scale = prod_lc / g;
        Int prod_scale = lead.coeff / g;
        res.remainder = res.remainder.times_scalar(f_scale) - prod.times_scalar(prod_scale);
        res.accumulated_scale *= f_scale;
        res.trace.push_back({picked, f_scale, prod_scale});
    }
    return res;
}

}  // namespace qsi
