#include "cyl7/smith.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

namespace cyl7 {

IntegerDiagonalization diagonalize_integer_matrix(IntMatrix V) {
    const std::size_t n = V.size();
    IntMatrix U(n, std::vector<long long>(n, 0)), W(n, std::vector<long long>(n, 0));
    for (std::size_t i = 0; i < n; ++i) U[i][i] = W[i][i] = 1;

    auto swap_cols = [&](IntMatrix& M, std::size_t a, std::size_t b) {
        for (std::size_t r = 0; r < n; ++r) std::swap(M[r][a], M[r][b]);
    };

    std::size_t k = 0;
    while (k < n) {
        // smallest nonzero pivot in the trailing block
        std::size_t pi = n, pj = n;
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < n; ++j)
                if (V[i][j] != 0 &&
                    (pi == n || std::llabs(V[i][j]) < std::llabs(V[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == n) break; // trailing block is zero; diagonal entries stay 0
        std::swap(V[k], V[pi]);
        std::swap(U[k], U[pi]);
        swap_cols(V, k, pj);
        swap_cols(W, k, pj);

        bool clean = true;
        for (std::size_t i = k + 1; i < n; ++i) {
            long long q = V[i][k] / V[k][k];
            if (q != 0)
                for (std::size_t c = 0; c < n; ++c) {
                    V[i][c] -= q * V[k][c];
                    U[i][c] -= q * U[k][c];
                }
            if (V[i][k] != 0) clean = false;
        }
        for (std::size_t j = k + 1; j < n; ++j) {
            long long q = V[k][j] / V[k][k];
            if (q != 0)
                for (std::size_t r = 0; r < n; ++r) {
                    V[r][j] -= q * V[r][k];
                    W[r][j] -= q * W[r][k];
                }
            if (V[k][j] != 0) clean = false;
        }
        if (clean) ++k;
    }
    return {std::move(V), std::move(U), std::move(W)};
}

long long integer_determinant(const IntMatrix& V) {
    IntegerDiagonalization d = diagonalize_integer_matrix(V);
    long long det = 1;
    for (std::size_t i = 0; i < V.size(); ++i) det *= d.S[i][i];
    return det; // unimodular transforms change at most the sign
}

} // namespace cyl7
