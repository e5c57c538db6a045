#pragma once

// Algebraic degree of semidefinite programming delta(m, n, r) through the
// Pfaffian formula, and the critical-point count of the rank-r
// Burer-Monteiro factorization.

#include <cstdint>
#include <functional>
#include <vector>

#include "orthodeg/bigint.hpp"
#include "orthodeg/int_matrix.hpp"

namespace orthodeg::sdp {

struct DeltaQuery {
  std::int64_t m = 0;  // number of linear constraints
  std::int64_t n = 1;  // matrix size
  std::int64_t r = 0;  // rank

  void validate() const;
};

/// Strictly increasing indices in 1..n.
using IndexSeq = std::vector<std::int64_t>;

BigInt psi_single(std::int64_t i);

/// sum_{k=i}^{j-1} C(i+j-2, k); requires 1 <= i < j.
BigInt psi_pair(std::int64_t i, std::int64_t j);

/// Antisymmetric matrix whose Pfaffian is psi_I. Odd-length sequences get an
/// extra leading index 0 with psi_{0,k} = psi_{i_k}.
IntMatrix psi_matrix(const IndexSeq& seq);

/// psi_I; the empty sequence gives 1.
BigInt psi_seq(const IndexSeq& seq);

/// Sum over I subset {1..n}, |I| = n - r, sum(I) = m of psi_I * psi_{I^c}.
BigInt delta(const DeltaQuery& q);

/// Calls fn(I) for every admissible I in lexicographic order.
void for_each_index_set(std::int64_t n, std::int64_t size, std::int64_t sum,
                        const std::function<void(const IndexSeq&)>& fn);

/// 2 deg SO(r) delta(m, n, r); requires r >= 1.
BigInt critical_count(const DeltaQuery& q);

}  // namespace orthodeg::sdp
