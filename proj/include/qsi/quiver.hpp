#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qsi {

struct Arrow {
    int id = 0;      // contiguous 1..|Q_1|
    int source = 0;  // vertices 0..rho, source < target
    int target = 0;

    bool operator==(const Arrow&) const = default;
};

// Acyclic quiver with vertices ordered so every arrow goes forward.
class Quiver {
  public:
    Quiver(int vertex_count, std::vector<Arrow> arrows);

    static Quiver kronecker(int arrow_count);

    int vertex_count() const { return vertex_count_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int id) const;

    bool operator==(const Quiver&) const = default;

  private:
    int vertex_count_;
    std::vector<Arrow> arrows_;  // sorted by id
};

struct DimensionVector {
    std::vector<int> ranks;  // one positive rank per vertex

    int rank(int vertex) const { return ranks.at(vertex); }
    bool operator==(const DimensionVector&) const = default;
};

void validate(const Quiver& q, const DimensionVector& d);

// Path in Q, indexed by its position in the global path order
// (length ascending, then lexicographic on the arrow-id sequence).
struct Path {
    int index = 0;  // 1-based
    std::vector<int> arrows;
    int source = 0;
    int target = 0;

    bool operator==(const Path&) const = default;
};

std::vector<Path> enumerate_paths(const Quiver& q);

struct LiftedVertex {
    int vertex = 0;
    int lift = 0;  // 1..r_vertex
    bool operator==(const LiftedVertex&) const = default;
    auto operator<=>(const LiftedVertex&) const = default;
};

struct LiftedArrow {
    int arrow = 0;
    int source_lift = 0;
    int target_lift = 0;
    bool operator==(const LiftedArrow&) const = default;
    auto operator<=>(const LiftedArrow&) const = default;
};

// Abelianization: vertex p splits into lifts p_1..p_{r_p}, arrow a into
// a_{ij} for all lift pairs. The lift map back to Q is the projection
// encoded in the member ids.
class AbQuiver {
  public:
    AbQuiver(Quiver q, DimensionVector d);

    const Quiver& base() const { return base_; }
    const DimensionVector& dims() const { return dims_; }
    std::vector<LiftedVertex> lifted_vertices() const;
    std::vector<LiftedArrow> lifted_arrows() const;
    std::size_t lifted_vertex_count() const;
    std::size_t lifted_arrow_count() const;
    bool contains(const LiftedArrow& a) const;

  private:
    Quiver base_;
    DimensionVector dims_;
};

AbQuiver abelianize(const Quiver& q, const DimensionVector& d);

// Path in Q^ab: arrow-id sequence plus the lift index at every vertex
// along the way (lifts.size() == arrows.size() + 1).
struct LiftedPath {
    std::vector<int> arrows;
    std::vector<int> lifts;

    int source_lift() const { return lifts.front(); }
    int target_lift() const { return lifts.back(); }
    bool operator==(const LiftedPath&) const = default;
    auto operator<=>(const LiftedPath&) const = default;
};

void validate(const AbQuiver& ab, const LiftedPath& p);

// Character of GL(r), an integer per vertex; the componentwise-minimal
// split into nonnegative parts is derived.
struct Weight {
    std::vector<int> w;

    std::vector<int> wplus() const;
    std::vector<int> wminus() const;
    bool operator==(const Weight&) const = default;
};

struct PathSetWeight {
    bool weyl_invariant = false;
    Weight weight;  // valid only when weyl_invariant
};

// Net flow per lifted vertex; Weyl-invariant iff constant over the lifts of
// each vertex. For bipartite sets the weight split counts paths per lift.
PathSetWeight weight_of_path_set(const AbQuiver& ab, const std::vector<LiftedPath>& paths);

bool is_bipartite(const AbQuiver& ab, const std::vector<LiftedPath>& paths);
bool is_weyl_invariant_arrows(const AbQuiver& ab, const std::vector<LiftedArrow>& arrows);

// Deterministic greedy pairing: walk the lifted vertices in order and join
// incoming to outgoing arrows in (arrow id, lift) order until the flow at
// every lifted vertex is one-sided. Flattening the result recovers the input.
std::vector<LiftedPath> partition_into_bipartite_paths(const AbQuiver& ab,
                                                       const std::vector<LiftedArrow>& arrows,
                                                       bool require_weyl_invariant = true);

}  // namespace qsi
