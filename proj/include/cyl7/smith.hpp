#pragma once

#include <vector>

namespace cyl7 {

using IntMatrix = std::vector<std::vector<long long>>;

// Diagonalization of a square integer matrix by unimodular row and column
// operations: S = U * V * W with S diagonal and |det U| = |det W| = 1.
// (Divisibility of the diagonal is not normalized; solving binomial systems
// over the exponent lattice only needs the diagonal and the transforms.)
struct IntegerDiagonalization {
    IntMatrix S, U, W;
};

IntegerDiagonalization diagonalize_integer_matrix(IntMatrix V);

long long integer_determinant(const IntMatrix& V);

} // namespace cyl7
