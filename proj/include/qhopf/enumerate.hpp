#pragma once

#include "qhopf/element.hpp"

#include <vector>

namespace qhopf {

// Every distinct necklace with 1..max_edges letters (plus the vertex
// idempotents first when included), sorted.
std::vector<Necklace> all_necklaces(const DoubleQuiver& dq, int max_edges,
                                    bool include_idempotents = true);

// Every monomial with total edge count <= max_edges and at most
// max_idem_factors idempotent factors, unit included, sorted.
std::vector<NecklaceMonomial> monomials_up_to_edges(const DoubleQuiver& dq, int max_edges,
                                                    int max_idem_factors);

// Every monomial of degree <= max_degree, where degree counts edges plus one
// per idempotent factor. Finite because idempotents now carry weight.
std::vector<NecklaceMonomial> monomials_up_to_degree(const DoubleQuiver& dq, int max_degree);

}  // namespace qhopf
