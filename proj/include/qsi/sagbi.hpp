#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "qsi/semiinvariants.hpp"
#include "qsi/tableaux.hpp"

namespace qsi {

// Kronecker quiver 0 ==K==> 1 with dimension vector (r0, r1). Degrees are
// indexed by the positive integer d with a = d / gcd(r0, r1); the shapes are
// T- of r0 x (a r1) and T+ of r1 x (a r0), the weight is (-a r1, a r0).
class KroneckerContext {
  public:
    KroneckerContext(int arrow_count, int r0, int r1);

    int arrow_count() const { return arrow_count_; }
    int r0() const { return r0_; }
    int r1() const { return r1_; }
    int gcd() const { return gcd_; }
    const Ctx& ctx() const { return ctx_; }

    int wplus(int d) const { return d * r0_ / gcd_; }
    int wminus(int d) const { return d * r1_ / gcd_; }
    Weight weight(int d) const;

  private:
    int arrow_count_, r0_, r1_, gcd_;
    Ctx ctx_;
};

// All semi-standard pairs (tableaux and link) of degree d, in lexicographic
// order of the T+ entries. Partitions the search by the first label and can
// run the partitions concurrently; the order does not depend on `threads`.
std::vector<LinkedPair> enumerate_ss_pairs(const KroneckerContext& kctx, int d, int threads = 0);

// Mon(T+) without expanding f; the pair must be semi-standard.
Monomial leading_monomial_of_pair(const LinkedPair& pair);

struct Splitting {
    LinkedPair factor1;
    LinkedPair factor2;
};

// Cached per-degree enumerations plus leading-monomial lookup tables.
class SsPairTables {
  public:
    SsPairTables(KroneckerContext kctx, int threads = 0) : kctx_(std::move(kctx)), threads_(threads) {}

    const KroneckerContext& kctx() const { return kctx_; }
    const std::vector<LinkedPair>& pairs(int d);
    const std::vector<Monomial>& leading_monomials(int d);
    std::optional<int> pair_with_lm(int d, const Monomial& m);

  private:
    struct Table {
        std::vector<LinkedPair> pairs;
        std::vector<Monomial> lms;
        std::unordered_map<std::string, int> by_lm;
    };
    const Table& table(int d);
    KroneckerContext kctx_;
    int threads_;
    std::map<int, Table> tables_;
};

// A pair is primitive when its leading monomial is not a product of leading
// monomials of two semi-standard pairs of smaller degrees.
std::optional<Splitting> find_splitting(const LinkedPair& pair, int d, SsPairTables& tables);
bool is_primitive(const LinkedPair& pair, int d, SsPairTables& tables);

struct GeneratorSet {
    KroneckerContext kctx;
    int max_d = 0;
    std::vector<std::vector<LinkedPair>> by_degree;  // index d-1

    std::vector<LinkedPair> all() const;
    std::vector<std::pair<Weight, int>> counts() const;
};

GeneratorSet primitive_generators(const KroneckerContext& kctx, int max_d, int threads = 0);

// The explicit finite family for r0 = r1 = 2: single columns plus the
// 2 x (l+1) interleaved-chain pairs with l + 2 <= K.
std::vector<LinkedPair> kronecker22_family(int arrow_count);

struct SubductionStep {
    std::vector<int> generators;  // indices into the generator list
    Int f_scale;                  // f <- f_scale * f - prod_scale * prod(gens)
    Int prod_scale;
};

struct SubductionResult {
    SparsePolynomial remainder;
    std::vector<SubductionStep> trace;
    Int accumulated_scale = 1;  // product of all f_scale factors applied
};

// Repeatedly cancel LM(f) against products of generator leading monomials.
// Remainder 0 iff f lies in the subalgebra with compatible leading terms at
// every step (membership over the rationals; integer scalings are recorded).
SubductionResult subduce(const SparsePolynomial& f, const std::vector<LinkedPair>& generators,
                         std::size_t max_steps = 1u << 20);

}  // namespace qsi
