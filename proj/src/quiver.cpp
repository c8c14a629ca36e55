#include "qsi/quiver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qsi {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)) {
    if (vertex_count_ < 1) throw std::invalid_argument("quiver needs at least one vertex");
    std::sort(arrows_.begin(), arrows_.end(),
              [](const Arrow& a, const Arrow& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        const Arrow& a = arrows_[i];
        if (a.id != static_cast<int>(i) + 1)
            throw std::invalid_argument("arrow ids must be contiguous 1..n");
        if (a.source < 0 || a.target >= vertex_count_ || a.source >= a.target)
            throw std::invalid_argument("arrows must satisfy 0 <= source < target < vertices");
    }
}

Quiver Quiver::kronecker(int arrow_count) {
    if (arrow_count < 1) throw std::invalid_argument("Kronecker quiver needs K >= 1");
    std::vector<Arrow> arrows;
    for (int i = 1; i <= arrow_count; ++i) arrows.push_back({i, 0, 1});
    return Quiver(2, std::move(arrows));
}

const Arrow& Quiver::arrow(int id) const {
    if (id < 1 || id > static_cast<int>(arrows_.size()))
        throw std::out_of_range("arrow id out of range");
    return arrows_[id - 1];
}

void validate(const Quiver& q, const DimensionVector& d) {
    if (static_cast<int>(d.ranks.size()) != q.vertex_count())
        throw std::invalid_argument("dimension vector length does not match vertex count");
    for (int r : d.ranks)
        if (r < 1) throw std::invalid_argument("dimension vector entries must be >= 1");
}

std::vector<Path> enumerate_paths(const Quiver& q) {
    // by length, then lex on arrow ids; so for edge-only quivers the paths
    // are the arrows in id order
    std::vector<std::vector<int>> current;
    for (const Arrow& a : q.arrows()) current.push_back({a.id});
    std::vector<Path> out;
    while (!current.empty()) {
        std::sort(current.begin(), current.end());
        std::vector<std::vector<int>> next;
        for (auto& arrows : current) {
            Path p;
            p.arrows = arrows;
            p.source = q.arrow(arrows.front()).source;
            p.target = q.arrow(arrows.back()).target;
            p.index = static_cast<int>(out.size()) + 1;
            out.push_back(p);
            for (const Arrow& a : q.arrows()) {
                if (a.source == p.target) {
                    auto longer = arrows;
                    longer.push_back(a.id);
                    next.push_back(std::move(longer));
                }
            }
        }
        current = std::move(next);
    }
    return out;
}

AbQuiver::AbQuiver(Quiver q, DimensionVector d) : base_(std::move(q)), dims_(std::move(d)) {
    validate(base_, dims_);
}

AbQuiver abelianize(const Quiver& q, const DimensionVector& d) { return AbQuiver(q, d); }

std::vector<LiftedVertex> AbQuiver::lifted_vertices() const {
    std::vector<LiftedVertex> out;
    for (int p = 0; p < base_.vertex_count(); ++p)
        for (int i = 1; i <= dims_.rank(p); ++i) out.push_back({p, i});
    return out;
}

std::vector<LiftedArrow> AbQuiver::lifted_arrows() const {
    std::vector<LiftedArrow> out;
    for (const Arrow& a : base_.arrows())
        for (int i = 1; i <= dims_.rank(a.source); ++i)
            for (int j = 1; j <= dims_.rank(a.target); ++j) out.push_back({a.id, i, j});
    return out;
}

std::size_t AbQuiver::lifted_vertex_count() const {
    std::size_t n = 0;
    for (int r : dims_.ranks) n += r;
    return n;
}

std::size_t AbQuiver::lifted_arrow_count() const {
    std::size_t n = 0;
    for (const Arrow& a : base_.arrows())
        n += static_cast<std::size_t>(dims_.rank(a.source)) * dims_.rank(a.target);
    return n;
}

bool AbQuiver::contains(const LiftedArrow& a) const {
    if (a.arrow < 1 || a.arrow > static_cast<int>(base_.arrows().size())) return false;
    const Arrow& base = base_.arrow(a.arrow);
    return a.source_lift >= 1 && a.source_lift <= dims_.rank(base.source) && a.target_lift >= 1 &&
           a.target_lift <= dims_.rank(base.target);
}

void validate(const AbQuiver& ab, const LiftedPath& p) {
    if (p.arrows.empty() || p.lifts.size() != p.arrows.size() + 1)
        throw std::invalid_argument("lifted path needs k arrows and k+1 lifts");
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        LiftedArrow a{p.arrows[i], p.lifts[i], p.lifts[i + 1]};
        if (!ab.contains(a)) throw std::invalid_argument("lifted arrow not in abelianized quiver");
        if (i + 1 < p.arrows.size()) {
            if (ab.base().arrow(p.arrows[i]).target != ab.base().arrow(p.arrows[i + 1]).source)
                throw std::invalid_argument("lifted path arrows do not compose");
        }
    }
}

std::vector<int> Weight::wplus() const {
    std::vector<int> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = std::max(w[i], 0);
    return out;
}

std::vector<int> Weight::wminus() const {
    std::vector<int> out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = std::max(-w[i], 0);
    return out;
}

PathSetWeight weight_of_path_set(const AbQuiver& ab, const std::vector<LiftedPath>& paths) {
    const Quiver& q = ab.base();
    const DimensionVector& d = ab.dims();
    // net flow in - out at every lifted vertex
    std::map<LiftedVertex, int> flow;
    for (const LiftedPath& p : paths) {
        validate(ab, p);
        int sv = q.arrow(p.arrows.front()).source;
        int tv = q.arrow(p.arrows.back()).target;
        flow[{sv, p.source_lift()}] -= 1;
        flow[{tv, p.target_lift()}] += 1;
    }
    PathSetWeight result;
    result.weight.w.assign(q.vertex_count(), 0);
    for (int p = 0; p < q.vertex_count(); ++p) {
        int common = 0;
        for (int i = 1; i <= d.rank(p); ++i) {
            auto it = flow.find({p, i});
            int n = it == flow.end() ? 0 : it->second;
            if (i == 1)
                common = n;
            else if (n != common)
                return PathSetWeight{false, {}};
        }
        result.weight.w[p] = common;
    }
    result.weyl_invariant = true;
    return result;
}

bool is_bipartite(const AbQuiver& ab, const std::vector<LiftedPath>& paths) {
    const Quiver& q = ab.base();
    std::map<LiftedVertex, std::pair<int, int>> in_out;
    for (const LiftedPath& p : paths) {
        int sv = q.arrow(p.arrows.front()).source;
        int tv = q.arrow(p.arrows.back()).target;
        in_out[{sv, p.source_lift()}].second += 1;
        in_out[{tv, p.target_lift()}].first += 1;
    }
    for (auto& [v, io] : in_out)
        if (io.first > 0 && io.second > 0) return false;
    return true;
}

bool is_weyl_invariant_arrows(const AbQuiver& ab, const std::vector<LiftedArrow>& arrows) {
    std::vector<LiftedPath> paths;
    for (const LiftedArrow& a : arrows) paths.push_back({{a.arrow}, {a.source_lift, a.target_lift}});
    return weight_of_path_set(ab, paths).weyl_invariant;
}

std::vector<LiftedPath> partition_into_bipartite_paths(const AbQuiver& ab,
                                                       const std::vector<LiftedArrow>& arrows,
                                                       bool require_weyl_invariant) {
    for (const LiftedArrow& a : arrows)
        if (!ab.contains(a)) throw std::invalid_argument("lifted arrow not in abelianized quiver");
    if (require_weyl_invariant && !is_weyl_invariant_arrows(ab, arrows))
        throw std::invalid_argument("arrow multiset is not Weyl-invariant");

    const Quiver& q = ab.base();
    std::vector<LiftedPath> paths;
    for (LiftedArrow a : arrows) paths.push_back({{a.arrow}, {a.source_lift, a.target_lift}});
    std::sort(paths.begin(), paths.end());

    // paths only run forward, so a single sweep over the vertices suffices
    for (int p = 0; p < q.vertex_count(); ++p) {
        for (int lift = 1; lift <= ab.dims().rank(p); ++lift) {
            std::vector<std::size_t> in, out;
            for (std::size_t i = 0; i < paths.size(); ++i) {
                if (q.arrow(paths[i].arrows.back()).target == p && paths[i].target_lift() == lift)
                    in.push_back(i);
                if (q.arrow(paths[i].arrows.front()).source == p && paths[i].source_lift() == lift)
                    out.push_back(i);
            }
            std::size_t joins = std::min(in.size(), out.size());
            if (joins == 0) continue;
            // indices are sorted because `paths` is kept sorted
            std::vector<LiftedPath> joined;
            for (std::size_t k = 0; k < joins; ++k) {
                LiftedPath merged = paths[in[k]];
                const LiftedPath& tail = paths[out[k]];
                merged.arrows.insert(merged.arrows.end(), tail.arrows.begin(), tail.arrows.end());
                merged.lifts.insert(merged.lifts.end(), tail.lifts.begin() + 1, tail.lifts.end());
                joined.push_back(std::move(merged));
            }
            std::vector<bool> dead(paths.size(), false);
            for (std::size_t k = 0; k < joins; ++k) dead[in[k]] = dead[out[k]] = true;
            std::vector<LiftedPath> rest;
            for (std::size_t i = 0; i < paths.size(); ++i)
                if (!dead[i]) rest.push_back(std::move(paths[i]));
            rest.insert(rest.end(), joined.begin(), joined.end());
            paths = std::move(rest);
            std::sort(paths.begin(), paths.end());
        }
    }
    return paths;
}

}  // namespace qsi
