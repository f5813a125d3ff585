#pragma once

#include <gmpxx.h>

#include <vector>

namespace exalg {

using QMatrix = std::vector<std::vector<mpq_class>>;

size_t matrix_rank(QMatrix m);
/// Determinant of a square matrix; throws on non-square input.
mpq_class matrix_det(QMatrix m);

}  // namespace exalg
