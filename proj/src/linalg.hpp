#pragma once

// Sparse exact rank over GF(p) or Q. Internal to the library.

#include <cstdint>
#include <utility>
#include <vector>

#include "gorlab/field.hpp"

namespace gorlab::detail {

using SparseRow = std::vector<std::pair<std::uint32_t, int>>;  // (column, small integer entry), sorted by column

std::size_t matrix_rank(const std::vector<SparseRow>& rows, const Field& field);

}  // namespace gorlab::detail
