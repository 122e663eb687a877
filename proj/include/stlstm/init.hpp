#pragma once

#include "stlstm/matrix.hpp"
#include "stlstm/rng.hpp"

namespace stlstm {

// Uniform on [-L, L] with L = sqrt(6 / (fan_in + fan_out)).
// Returned matrix has shape (fan_out x fan_in), i.e. applies as y = W x.
Matrix glorot_uniform(int fan_in, int fan_out, Rng& rng);

// n x m matrix with orthonormal columns when n >= m, orthonormal rows
// otherwise. A Gaussian draw is orthonormalized (two Gram-Schmidt passes,
// positive diagonal) so the result is unique given the draw.
Matrix orthogonal(int n, int m, Rng& rng);

}  // namespace stlstm
