#pragma once

#include <nlohmann/json.hpp>

#include "qsi/quiver.hpp"
#include "qsi/sagbi.hpp"
#include "qsi/tableaux.hpp"
#include "qsi/toric.hpp"

namespace qsi {

using Json = nlohmann::ordered_json;

Json quiver_to_json(const Quiver& q, const DimensionVector& d);
std::pair<Quiver, DimensionVector> quiver_from_json(const Json& j);

Json lifted_path_to_json(const LiftedPath& p);
LiftedPath lifted_path_from_json(const Json& j);

Json tableau_to_json(const RectTableau& t);
RectTableau tableau_from_json(const Json& j);

Json pair_to_json(const LinkedPair& p);
LinkedPair pair_from_json(const Ctx& ctx, const Json& j);

// {"quiver": ..., "pair": ...} bundles carry their own context
Json pair_bundle_to_json(const LinkedPair& p);
LinkedPair pair_bundle_from_json(const Json& j);

Json polynomial_to_json(const SparsePolynomial& f);
SparsePolynomial polynomial_from_json(const Json& j);

Json monomial_to_json(const Monomial& m);

Json polytope_to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const Json& j);

Json laurent_to_json(const LaurentPolynomial& f);
LaurentPolynomial laurent_from_json(const Json& j);

Json period_to_json(const std::vector<Int>& cs);

}  // namespace qsi
