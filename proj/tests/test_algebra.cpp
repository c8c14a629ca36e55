#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "qsi/algebra.hpp"
#include "qsi/json_io.hpp"
#include "qsi/tableaux.hpp"

using namespace qsi;

namespace {

Variable v(int a, int r, int c) { return Variable{a, r, c}; }

SparsePolynomial xvar(int a, int r, int c) { return SparsePolynomial::variable(v(a, r, c)); }

SparsePolynomial random_poly(std::mt19937& rng, int max_terms) {
    std::uniform_int_distribution<int> nterms(1, max_terms), coeff(-9, 9), idx(1, 3), exp(1, 3),
        nvars(0, 3);
    std::vector<Term> terms;
    for (int t = nterms(rng); t > 0; --t) {
        std::map<VarKey, int> factors;
        for (int k = nvars(rng); k > 0; --k)
            factors[var_key(v(idx(rng), idx(rng), idx(rng)))] += exp(rng);
        std::vector<std::pair<VarKey, int>> fv(factors.begin(), factors.end());
        int c = coeff(rng);
        if (c == 0) c = 1;
        terms.push_back({Monomial(std::move(fv)), c});
    }
    return SparsePolynomial::from_terms(std::move(terms));
}

Monomial random_monomial(std::mt19937& rng) {
    std::uniform_int_distribution<int> idx(1, 3), exp(1, 4), nvars(0, 4);
    std::map<VarKey, int> factors;
    for (int k = nvars(rng); k > 0; --k)
        factors[var_key(v(idx(rng), idx(rng), idx(rng)))] += exp(rng);
    return Monomial(std::vector<std::pair<VarKey, int>>(factors.begin(), factors.end()));
}

// term-by-term accumulation into a map keyed by the printed monomial
std::map<std::string, Int> naive_product(const SparsePolynomial& f, const SparsePolynomial& g) {
    std::map<std::string, Int> acc;
    for (auto& a : f.terms())
        for (auto& b : g.terms()) acc[a.monomial.times(b.monomial).str()] += a.coeff * b.coeff;
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second == 0 ? acc.erase(it) : std::next(it);
    return acc;
}

std::map<std::string, Int> as_map(const SparsePolynomial& f) {
    std::map<std::string, Int> acc;
    for (auto& t : f.terms()) acc[t.monomial.str()] = t.coeff;
    return acc;
}

}  // namespace

TEST_CASE("multiply against the naive double-loop oracle") {
    std::mt19937 rng(20240811);
    CHECK((xvar(1, 1, 1) * SparsePolynomial::constant(1)) == xvar(1, 1, 1));
    // (x+y)(x-y) = x^2 - y^2
    auto x = xvar(1, 1, 1), y = xvar(1, 1, 2);
    CHECK(((x + y) * (x - y)) == (x * x - y * y));
    for (int i = 0; i < 50; ++i) {
        auto f = random_poly(rng, 20), g = random_poly(rng, 20);
        CHECK(as_map(f * g) == naive_product(f, g));
    }
}

TEST_CASE("multiplication keeps the canonical form") {
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        auto f = random_poly(rng, 10) * random_poly(rng, 10);
        for (std::size_t t = 1; t < f.terms().size(); ++t) {
            CHECK(term_order().compare(f.terms()[t - 1].monomial, f.terms()[t].monomial) > 0);
            CHECK(f.terms()[t].coeff != 0);
        }
    }
}

TEST_CASE("determinant: identity, 2x2, Leibniz oracle") {
    PolyMatrix id(3, 3);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) id.at(i, j) = SparsePolynomial::constant(i == j ? 1 : 0);
    CHECK(determinant(id) == SparsePolynomial::constant(1));

    PolyMatrix m2 = PolyMatrix::arrow_matrix(1, 2, 2);
    auto det2 = determinant(m2);
    auto expected = xvar(1, 1, 1) * xvar(1, 2, 2) - xvar(1, 1, 2) * xvar(1, 2, 1);
    CHECK(det2 == expected);

    // random single-variable entries vs the 6-term signed permutation sum
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> idx(1, 4);
    for (int trial = 0; trial < 20; ++trial) {
        PolyMatrix m(3, 3);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) m.at(i, j) = xvar(idx(rng), idx(rng), idx(rng));
        int perm[3] = {0, 1, 2};
        SparsePolynomial leibniz;
        do {
            int inv = 0;
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b)
                    if (perm[a] > perm[b]) ++inv;
            SparsePolynomial prod = SparsePolynomial::constant(inv % 2 ? -1 : 1);
            for (int i = 0; i < 3; ++i) prod = prod * m.at(i + 1, perm[i] + 1);
            leibniz = leibniz + prod;
        } while (std::next_permutation(perm, perm + 3));
        CHECK(determinant(m) == leibniz);
    }
}

TEST_CASE("determinant is alternating under row swaps") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> idx(1, 3);
    for (int trial = 0; trial < 10; ++trial) {
        PolyMatrix m(3, 3), swapped(3, 3);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) m.at(i, j) = xvar(idx(rng), idx(rng), idx(rng));
        for (int j = 1; j <= 3; ++j) {
            swapped.at(1, j) = m.at(2, j);
            swapped.at(2, j) = m.at(1, j);
            swapped.at(3, j) = m.at(3, j);
        }
        CHECK(determinant(swapped) == -determinant(m));
    }
}

TEST_CASE("term order is total and multiplicative") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Monomial a = random_monomial(rng), b = random_monomial(rng), w = random_monomial(rng);
        int ab = term_order().compare(a, b);
        CHECK(ab == -term_order().compare(b, a));
        if (ab == 0) CHECK(a == b);
        // multiplicative: u < v implies uw < vw
        CHECK(term_order().compare(a.times(w), b.times(w)) == ab);
    }
}

TEST_CASE("leading monomial: scan oracle and LM(fg) = LM(f) LM(g)") {
    std::mt19937 rng(40);
    for (int trial = 0; trial < 50; ++trial) {
        auto f = random_poly(rng, 10);
        auto [lm, lc] = leading_monomial(f, term_order());
        for (auto& t : f.terms()) CHECK(term_order().compare(lm, t.monomial) >= 0);
        CHECK(f.leading_term().monomial == lm);
        CHECK(f.leading_term().coeff == lc);

        auto g = random_poly(rng, 10);
        CHECK((f * g).leading_term().monomial == lm.times(g.leading_term().monomial));
    }
    auto single = SparsePolynomial::from_monomial(random_monomial(rng), 7);
    CHECK(leading_monomial(single, term_order()).first == single.terms()[0].monomial);
    CHECK_THROWS_AS(leading_monomial(SparsePolynomial::zero(), term_order()),
                    std::invalid_argument);
}

TEST_CASE("leading term of a full-size minor of A_R is the diagonal") {
    // A_R = [M_1 | M_2] for a Kronecker quiver with r = (2, 2): any 2x2 minor
    // with strictly increasing column picks has the diagonal as leading term
    std::vector<PolyMatrix> ms = {PolyMatrix::arrow_matrix(1, 2, 2),
                                  PolyMatrix::arrow_matrix(2, 2, 2)};
    auto column = [&](int j) {  // 1..4 across the concatenation
        int arrow = (j - 1) / 2, col = (j - 1) % 2 + 1;
        return std::pair{arrow, col};
    };
    for (int j1 = 1; j1 <= 4; ++j1)
        for (int j2 = j1 + 1; j2 <= 4; ++j2) {
            PolyMatrix m(2, 2);
            auto [a1, c1] = column(j1);
            auto [a2, c2] = column(j2);
            for (int r = 1; r <= 2; ++r) {
                m.at(r, 1) = ms[a1].at(r, c1);
                m.at(r, 2) = ms[a2].at(r, c2);
            }
            auto det = determinant(m);
            auto diag = m.at(1, 1).leading_term().monomial.times(m.at(2, 2).leading_term().monomial);
            CHECK(det.leading_term().monomial == diag);
        }
}

TEST_CASE("path matrices: single arrows, composition, the 3-vertex example") {
    // quiver 0 -> 1 -> 2 with the example's seven arrows
    Quiver q(3, {{1, 0, 1}, {2, 0, 1}, {3, 0, 2}, {4, 0, 2}, {5, 0, 2}, {6, 0, 2}, {7, 1, 2}});
    DimensionVector d{{2, 2, 3}};
    Ctx ctx = QuiverContext::make(q, d);

    CHECK(ctx->paths().size() == 9);
    // single arrow: matrix of variables
    const PolyMatrix& m1 = ctx->path_matrix(1);
    CHECK(m1.rows() == 2);
    CHECK(m1.cols() == 2);
    CHECK(m1.at(1, 2) == xvar(1, 1, 2));

    // path 8 = arrows (1, 7): entry (l, m) = sum_k x7[l,k] x1[k,m]
    CHECK(ctx->path(8).arrows == std::vector<int>{1, 7});
    const PolyMatrix& m8 = ctx->path_matrix(8);
    CHECK(m8.rows() == 3);
    CHECK(m8.cols() == 2);
    for (int l = 1; l <= 3; ++l)
        for (int m = 1; m <= 2; ++m) {
            SparsePolynomial sum;
            for (int k = 1; k <= 2; ++k) sum = sum + xvar(7, l, k) * xvar(1, k, m);
            CHECK(m8.at(l, m) == sum);
        }
}

TEST_CASE("path matrix composition is associative on a 3-step chain") {
    Quiver q(4, {{1, 0, 1}, {2, 1, 2}, {3, 2, 3}});
    DimensionVector d{{2, 3, 2, 2}};
    Ctx ctx = QuiverContext::make(q, d);
    int full = ctx->path_index({1, 2, 3});
    REQUIRE(full != 0);
    int front = ctx->path_index({1, 2});
    int back = ctx->path_index({2, 3});
    REQUIRE(front != 0);
    REQUIRE(back != 0);
    // M_{(1,2,3)} = M_3 * M_{(1,2)} = M_{(2,3)} * M_1
    PolyMatrix lhs = ctx->path_matrix(3) * ctx->path_matrix(front);
    PolyMatrix rhs = ctx->path_matrix(back) * ctx->path_matrix(1);
    const PolyMatrix& m = ctx->path_matrix(full);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
            CHECK(m.at(i, j) == lhs.at(i, j));
            CHECK(m.at(i, j) == rhs.at(i, j));
        }
}

TEST_CASE("polynomial text and JSON round-trips are bit exact") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        auto f = random_poly(rng, 12);
        CHECK(SparsePolynomial::parse(f.str()) == f);
        CHECK(polynomial_from_json(polynomial_to_json(f)) == f);
        CHECK(polynomial_to_json(f).dump() == polynomial_to_json(f).dump());
    }
    CHECK(SparsePolynomial::parse("0") == SparsePolynomial::zero());
    CHECK(SparsePolynomial::zero().str() == "0");
    auto f = SparsePolynomial::parse("-2*x[1,1,1]^2*x[2,1,2] + 5 - x[1,2,2]");
    CHECK(f.terms().size() == 3);
    CHECK(f.str() == "-2*x[1,1,1]^2*x[2,1,2] - x[1,2,2] + 5");
}
