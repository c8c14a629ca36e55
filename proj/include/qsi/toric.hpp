#pragma once

#include <utility>
#include <vector>

#include "qsi/ints.hpp"

namespace qsi {

using LatticeVec = std::vector<long long>;

// Integer-vertex polytope; every listed point must be a genuine vertex.
class LatticePolytope {
  public:
    LatticePolytope(int dim, std::vector<LatticeVec> vertices, bool check_vertices = true);

    int dim() const { return dim_; }
    const std::vector<LatticeVec>& vertices() const { return vertices_; }

  private:
    int dim_;
    std::vector<LatticeVec> vertices_;
};

// Exact rational feasibility of x in conv(points); phase-1 simplex with
// Bland's rule, no floating point anywhere.
bool in_convex_hull(const LatticeVec& x, const std::vector<LatticeVec>& points);

// All lattice points of the hull by a bounding-box scan; dim <= 8.
std::vector<LatticeVec> lattice_points(const LatticePolytope& p);

class LaurentPolynomial {
  public:
    LaurentPolynomial(int dim, std::vector<std::pair<LatticeVec, Int>> terms);

    int dim() const { return dim_; }
    const std::vector<std::pair<LatticeVec, Int>>& terms() const { return terms_; }

    // vertex set of the Newton polytope
    std::vector<LatticeVec> newton_vertices() const;

  private:
    int dim_;
    std::vector<std::pair<LatticeVec, Int>> terms_;
};

// c_k = constant term of f^k for k = 0..nmax, exact. Powers are built
// incrementally and paired head-to-tail, so only f^ceil(nmax/2) is expanded.
std::vector<Int> classical_period(const LaurentPolynomial& f, int nmax);

// The 13-vertex Fano polytope and the Laurent polynomial supported on its
// vertices with all coefficients 1.
std::pair<LatticePolytope, LaurentPolynomial> builtin_fano_example();

}  // namespace qsi
