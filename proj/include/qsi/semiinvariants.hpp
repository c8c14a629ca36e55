#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "qsi/algebra.hpp"
#include "qsi/quiver.hpp"
#include "qsi/tableaux.hpp"

namespace qsi {

// The double sum over G+ x G- is for cross-validation; it grows factorially.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Side { Plus, Minus };

// Mon(T+) / Mon(T-): product of path matrix entries read off the labels.
// A monomial when every path is a single arrow, a polynomial in general.
SparsePolynomial mon_plus(const LinkedPair& pair);
SparsePolynomial mon_minus(const LinkedPair& pair);

// Signed double sum over G- x G+ of Mon of the acted pairs.
SparsePolynomial f_direct(const LinkedPair& pair, std::size_t budget = 1u << 20);

// Single sums of determinant products; rows is the default construction.
SparsePolynomial f_det_rows(const LinkedPair& pair);
SparsePolynomial f_det_cols(const LinkedPair& pair);
inline SparsePolynomial f_semiinvariant(const LinkedPair& pair) { return f_det_rows(pair); }

// Infinitesimal semi-invariance: every monomial sits in the w-weight space of
// the torus and every off-diagonal change-of-basis derivation kills f.
// Sufficient and exact for the connected groups GL(r).
bool check_semi_invariance(const SparsePolynomial& f, const Weight& w, const Quiver& q,
                           const DimensionVector& d);

// One classical Pluecker exchange on a single tableau, the tableau viewed as
// a product of full-size minors. Terms whose minors vanish are dropped.
struct TableauRelation {
    RectTableau source;
    std::vector<std::pair<Int, RectTableau>> terms;
};

// nullopt when the tableau is already semi-standard (up to column sorting).
std::optional<TableauRelation> straighten_columns(const RectTableau& t);

struct PairTerm {
    Int coeff;
    LinkedPair pair;
};

// One straightening step lifted to linked pairs: f_source = sum coeff * f_pair.
struct StraighteningRelation {
    LinkedPair source;
    Side side = Side::Plus;
    int vertex = 0;
    std::vector<PairTerm> terms;
};

// One exchange (or column sort) applied to the tableau of `side` at `vertex`.
// nullopt when that tableau needs no step.
std::optional<StraighteningRelation> straighten_pair_step(const LinkedPair& pair, Side side,
                                                          int vertex);

// As above but verifies the exact polynomial identity among the f's;
// a failure is an implementation bug and throws std::logic_error.
StraighteningRelation lift_straightening(const LinkedPair& pair, Side side, int vertex,
                                         bool verify = true);

// Full rewriting: straighten every target tableau, then every source tableau.
// The result is a list of weakly semi-standard pairs with
// f(pair) = sum coeff * f(term).
std::vector<PairTerm> express_weakly_semistandard(const LinkedPair& pair);

// Exact check of sum coeff * f(term) == f(pair), with f_det_rows.
bool verify_expression(const LinkedPair& pair, const std::vector<PairTerm>& terms);

}  // namespace qsi
