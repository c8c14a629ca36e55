#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "qsi/ints.hpp"

namespace qsi {

// Coordinate x^a_{jk}: entry (j,k) of the matrix attached to arrow a, so
// row indexes the target vertex lifts and col the source vertex lifts.
// All three indices are 1-based.
struct Variable {
    int arrow = 0;
    int row = 0;
    int col = 0;

    bool operator==(const Variable&) const = default;
};

// Packed so that ascending key = ascending position in the variable order
// (along the rows of M_1, then M_2, ...). Earlier position = higher weight.
using VarKey = std::uint32_t;

VarKey var_key(const Variable& v);
Variable var_of_key(VarKey k);

// Exponent vector, sparse, sorted by VarKey, no zero exponents.
class Monomial {
  public:
    Monomial() = default;
    static Monomial one() { return Monomial(); }
    static Monomial of(const Variable& v, int exp = 1);

    // factors must be sorted by key with positive exponents; checked.
    explicit Monomial(std::vector<std::pair<VarKey, int>> factors);

    bool is_one() const { return e_.empty(); }
    int degree() const;
    int exponent(VarKey k) const;
    const std::vector<std::pair<VarKey, int>>& factors() const { return e_; }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;  // this | o
    Monomial divide_into(const Monomial& o) const;  // o / this, requires divides

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    std::string str() const;  // e.g. "x[1,1,1]^2*x[2,3,2]"

  private:
    std::vector<std::pair<VarKey, int>> e_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

// Pure lexicographic order: compare exponents variable by variable along
// the fixed variable order; first difference wins, larger exponent first.
// Total and multiplicative.
class TermOrder {
  public:
    // <0 if a < b, 0 if equal, >0 if a > b
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

const TermOrder& term_order();

struct Term {
    Monomial monomial;
    Int coeff;
};

// Exact integer-coefficient sparse polynomial, canonical form: terms sorted
// descending in the term order, no zero coefficients.
class SparsePolynomial {
  public:
    SparsePolynomial() = default;
    static SparsePolynomial zero() { return SparsePolynomial(); }
    static SparsePolynomial constant(Int c);
    static SparsePolynomial variable(const Variable& v);
    static SparsePolynomial from_monomial(Monomial m, Int c = 1);
    // Accumulates duplicates, drops zeros, sorts.
    static SparsePolynomial from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // Leading term under the canonical order; polynomial must be nonzero.
    const Term& leading_term() const;

    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator-() const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial times_scalar(const Int& c) const;
    SparsePolynomial times_monomial(const Monomial& m, const Int& c = 1) const;
    bool operator==(const SparsePolynomial& o) const { return terms_ == o.terms_; }

    int total_degree() const;  // max over terms; -1 for zero

    // Canonical text form: terms in descending order, "c*x[a,j,k]^e*..." with
    // explicit sign on every term after the first.
    std::string str() const;
    static SparsePolynomial parse(const std::string& text);

  private:
    std::vector<Term> terms_;
};

inline bool operator==(const Term& a, const Term& b) {
    return a.coeff == b.coeff && a.monomial == b.monomial;
}

// Incremental accumulator used by the expansion-heavy routines; converts to
// canonical form once at the end.
class PolyBuilder {
  public:
    void add(const Monomial& m, const Int& c);
    void add(const SparsePolynomial& p, const Int& scale = 1);
    void add_scaled(const SparsePolynomial& p, const Monomial& shift, const Int& scale);
    SparsePolynomial build() &&;

  private:
    std::unordered_map<Monomial, Int, MonomialHash> acc_;
};

// Dense matrix of polynomials, 1-based accessors to match the math indices.
class PolyMatrix {
  public:
    PolyMatrix(int rows, int cols);
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    SparsePolynomial& at(int r, int c);
    const SparsePolynomial& at(int r, int c) const;

    static PolyMatrix arrow_matrix(int arrow, int target_rank, int source_rank);
    PolyMatrix operator*(const PolyMatrix& o) const;

  private:
    int rows_, cols_;
    std::vector<SparsePolynomial> m_;
};

SparsePolynomial multiply(const SparsePolynomial& f, const SparsePolynomial& g);

// Cofactor expansion; exact. Throws std::invalid_argument on non-square input.
SparsePolynomial determinant(const PolyMatrix& m);

std::pair<Monomial, Int> leading_monomial(const SparsePolynomial& f, const TermOrder& ord);

std::ostream& operator<<(std::ostream& os, const Monomial& m);
std::ostream& operator<<(std::ostream& os, const SparsePolynomial& p);

}  // namespace qsi
