#pragma once

#include "vbs/numerics.hpp"

#include <map>
#include <vector>

namespace vbs {

using Config = std::vector<int>;

// Sparse rational row/column, indexed by occupation configuration.
using SparseVec = std::map<Config, Rational>;

// Rank of the matrix whose rows are given sparsely over arbitrary column keys.
// Denominators are cleared per row, then single-step fraction-free elimination
// keeps every intermediate entry an exact integer minor.
long rank_fraction_free(const std::vector<SparseVec>& rows);

// Basis of { x : sum_i x[i] * cols[i] = 0 }, exact.
std::vector<std::vector<Rational>> nullspace_of_columns(const std::vector<SparseVec>& cols);

// Whether target is a rational linear combination of the given columns.
bool in_span(const std::vector<const SparseVec*>& cols, const SparseVec& target);

}  // namespace vbs
