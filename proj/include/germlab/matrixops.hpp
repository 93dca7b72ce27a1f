#pragma once

#include <vector>

#include "germlab/poly.hpp"

namespace germlab {

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Entry (i,j) = d funcs[i] / d vars[j], rows in the given function order.
PolyMatrix jacobian_matrix(const std::vector<Poly>& funcs, const std::vector<int>& vars);

/// Exact determinant by cofactor expansion; matrices here are at most 5x5.
Poly determinant(const PolyMatrix& m);

/// All k x k minors, enumerated lexicographically by (row subset, column
/// subset) so generated ideal bases are reproducible.
std::vector<Poly> minors_ideal(const PolyMatrix& m, int k);

} // namespace germlab
