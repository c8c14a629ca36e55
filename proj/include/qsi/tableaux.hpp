#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qsi/algebra.hpp"
#include "qsi/quiver.hpp"

namespace qsi {

// Tableau entry "i j": a path index and a lift slot.
// Label order: ij <= kl iff i < k, or i = k and j <= l.
struct Label {
    int path = 0;
    int slot = 0;
    bool operator==(const Label&) const = default;
    auto operator<=>(const Label&) const = default;
};

// Rectangular tableau attached to one vertex, shape rows x cols, row-major.
class RectTableau {
  public:
    RectTableau(int vertex, int rows, int cols, std::vector<Label> entries);

    int vertex() const { return vertex_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Label& at(int row, int col) const;  // 1-based
    std::vector<Label> column(int col) const;
    const std::vector<Label>& entries() const { return entries_; }

    bool operator==(const RectTableau&) const = default;
    std::string str() const;

  private:
    int vertex_, rows_, cols_;
    std::vector<Label> entries_;
};

// Rows weakly increasing, columns strictly increasing in the label order.
bool is_semistandard(const RectTableau& t);
// Only the first digits are required to weakly increase along rows and columns.
bool is_weakly_semistandard(const RectTableau& t);

// Shared immutable context a linked pair lives in: the quiver, the dimension
// vector, the global path order and the path matrices.
class QuiverContext {
  public:
    static std::shared_ptr<const QuiverContext> make(Quiver q, DimensionVector d);

    const Quiver& quiver() const { return quiver_; }
    const DimensionVector& dims() const { return dims_; }
    const std::vector<Path>& paths() const { return paths_; }
    const Path& path(int index) const;
    int path_index(const std::vector<int>& arrows) const;  // 0 if absent
    int rank(int vertex) const { return dims_.rank(vertex); }
    const PolyMatrix& path_matrix(int index) const;

  private:
    QuiverContext(Quiver q, DimensionVector d);
    Quiver quiver_;
    DimensionVector dims_;
    std::vector<Path> paths_;
    std::vector<PolyMatrix> matrices_;
};

using Ctx = std::shared_ptr<const QuiverContext>;

// One box of a linked pair. It appears in T+_{t(P)} at (row target_lift,
// col plus_col) with label (path, source_lift), and in T-_{s(P)} at
// (row source_lift, col minus_col) with label (path, target_lift). The link
// is exactly this double bookkeeping.
struct PairBox {
    int path = 0;
    int source_lift = 0;
    int target_lift = 0;
    int plus_col = 0;
    int minus_col = 0;
    bool operator==(const PairBox&) const = default;
    auto operator<=>(const PairBox&) const = default;
};

struct BoxPos {
    int vertex = 0;
    int row = 0;
    int col = 0;
    bool operator==(const BoxPos&) const = default;
    auto operator<=>(const BoxPos&) const = default;
};

// A link as a bijection between box positions of T+ and T-.
using Link = std::vector<std::pair<BoxPos, BoxPos>>;

class LinkedPair {
  public:
    // Validates shapes and normalizes the display order of columns.
    LinkedPair(Ctx ctx, std::vector<PairBox> boxes);

    const Ctx& ctx() const { return ctx_; }
    const std::vector<PairBox>& boxes() const { return boxes_; }

    std::vector<int> wplus() const;   // columns of T+_p per vertex
    std::vector<int> wminus() const;  // columns of T-_p per vertex
    Weight weight() const;
    int degree() const { return static_cast<int>(boxes_.size()); }

    RectTableau tplus(int vertex) const;
    RectTableau tminus(int vertex) const;
    std::vector<RectTableau> tplus_tuple() const;   // only nonempty tableaux
    std::vector<RectTableau> tminus_tuple() const;
    Link link() const;

    bool tableaux_semistandard() const;
    bool link_semistandard() const;
    // Both tableaux semi-standard and the link order preserving.
    bool is_semistandard_pair() const;

    std::vector<LiftedPath> path_multiset() const;

    bool operator==(const LinkedPair& o) const { return boxes_ == o.boxes_; }
    std::string canonical_key() const;
    std::string str() const;

  private:
    Ctx ctx_;
    std::vector<PairBox> boxes_;
};

// All links between the two tuples, i.e. all bijections matching each
// (path, source slot, target slot) class; empty if the contents mismatch.
std::vector<Link> enumerate_links(const Ctx& ctx, const std::vector<RectTableau>& tplus,
                                  const std::vector<RectTableau>& tminus);

// The unique order-preserving link (equal labels matched left to right).
// Throws std::invalid_argument if no link exists.
Link canonical_semistandard_link(const Ctx& ctx, const std::vector<RectTableau>& tplus,
                                 const std::vector<RectTableau>& tminus);

LinkedPair pair_from_tableaux(const Ctx& ctx, const std::vector<RectTableau>& tplus,
                              const std::vector<RectTableau>& tminus, const Link& link);

// Bipartite Weyl-invariant path set -> linked pair, rows sorted and
// left-aligned, link given by the paths themselves.
LinkedPair linked_pair_from_path_set(const Ctx& ctx, const std::vector<LiftedPath>& paths);

struct Pos2 {
    int row = 0;
    int col = 0;
    bool operator==(const Pos2&) const = default;
    auto operator<=>(const Pos2&) const = default;
};

// Kronecker reformulation of the link: every column of T- traces a chain
// through r_0 boxes of T+ (second digits 1..r_0), and symmetrically.
struct ArrowDiagram {
    std::vector<std::vector<Pos2>> plus_chains;   // one chain per T- column
    std::vector<std::vector<Pos2>> minus_chains;  // one chain per T+ column
};

ArrowDiagram arrow_diagram(const LinkedPair& pair);

bool has_backwards_arrow(const std::vector<std::vector<Pos2>>& chains);
bool has_downwards_arrow(const std::vector<std::vector<Pos2>>& chains);

}  // namespace qsi
