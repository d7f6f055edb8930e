#pragma once

#include <cstddef>

#include "qwalk/graph.hpp"
#include "qwalk/int_matrix.hpp"

namespace qwalk {

/// W(M) = [e, Me, ..., M^{n-1} e] together with its generator M.
struct WalkMatrix {
  IntMatrix base;
  IntMatrix matrix;

  std::size_t columns() const noexcept { return matrix.cols(); }
};

/// Columns are built by repeated matrix-vector products. Throws
/// std::invalid_argument for non-square or empty m.
WalkMatrix walk_matrix(const IntMatrix& m);

/// W_Q(G), the walk matrix of the signless Laplacian.
WalkMatrix q_walk_matrix(const Graph& g);
/// W_A(G), the adjacency walk matrix.
WalkMatrix a_walk_matrix(const Graph& g);

/// Leading ceil(n/2) x ceil(n/2) block of W_Q(A_n). Throws for n == 0.
IntMatrix reduced_q_walk_matrix(std::size_t n);

/// B + D-bar for A_n, the generator whose walk matrix equals the reduced
/// Q-walk matrix. B comes from the quotient by partition_pi(n).
IntMatrix reduced_generator(std::size_t n);

}  // namespace qwalk
