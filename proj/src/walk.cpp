#include "qwalk/walk.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace qwalk {

WalkMatrix walk_matrix(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("walk_matrix: generator must be square");
  const std::size_t n = m.rows();
  if (n == 0) throw std::invalid_argument("walk_matrix: generator must be non-empty");

  IntMatrix w(n, n);
  std::vector<BigInt> cur(n, BigInt(1)), next(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) w(i, j) = cur[i];
    if (j + 1 == n) break;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(m(i, k)) != 0) next[i] += m(i, k) * cur[k];
    }
    std::swap(cur, next);
  }
  return {m, std::move(w)};
}

WalkMatrix q_walk_matrix(const Graph& g) { return walk_matrix(signless_laplacian(g)); }

WalkMatrix a_walk_matrix(const Graph& g) { return walk_matrix(adjacency_matrix(g)); }

IntMatrix reduced_q_walk_matrix(std::size_t n) {
  const auto w = q_walk_matrix(dynkin_a(n));
  return principal_submatrix(w.matrix, (n + 1) / 2);
}

IntMatrix reduced_generator(std::size_t n) {
  const auto q = quotient(dynkin_a(n), partition_pi(n));
  return q.divisor + reduced_degree_matrix(n);
}

}  // namespace qwalk
