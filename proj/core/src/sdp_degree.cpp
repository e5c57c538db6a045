#include "orthodeg/sdp_degree.hpp"

#include <stdexcept>
#include <string>

#include "orthodeg/group_degree.hpp"

namespace orthodeg::sdp {

void DeltaQuery::validate() const {
  if (n < 1) throw std::invalid_argument("delta query: n must be >= 1");
  if (m < 0) throw std::invalid_argument("delta query: m must be >= 0");
  if (r < 0 || r > n) throw std::invalid_argument("delta query: r must lie in 0..n");
}

BigInt psi_single(std::int64_t i) {
  if (i < 1) throw std::invalid_argument("psi_single: index must be >= 1");
  return pow2(static_cast<std::uint64_t>(i - 1));
}

BigInt psi_pair(std::int64_t i, std::int64_t j) {
  if (i < 1 || i >= j) throw std::invalid_argument("psi_pair: requires 1 <= i < j");
  BigInt s = 0;
  for (std::int64_t k = i; k <= j - 1; ++k) s += binomial(i + j - 2, k);
  return s;
}

namespace {
void check_increasing(const IndexSeq& seq) {
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (seq[k] < 1) throw std::invalid_argument("index sequence entries must be >= 1");
    if (k > 0 && seq[k] <= seq[k - 1]) {
      throw std::invalid_argument("index sequence must be strictly increasing");
    }
  }
}
}  // namespace

IntMatrix psi_matrix(const IndexSeq& seq) {
  check_increasing(seq);
  // Index 0 stands for the auxiliary row of single psi values.
  IndexSeq idx;
  if (seq.size() % 2 == 1) idx.push_back(0);
  idx.insert(idx.end(), seq.begin(), seq.end());
  const std::size_t d = idx.size();
  IntMatrix m(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = k + 1; l < d; ++l) {
      BigInt v = idx[k] == 0 ? psi_single(idx[l]) : psi_pair(idx[k], idx[l]);
      m(l, k) = -v;
      m(k, l) = std::move(v);
    }
  }
  return m;
}

BigInt psi_seq(const IndexSeq& seq) {
  if (seq.empty()) return 1;
  return pfaffian(psi_matrix(seq));
}

void for_each_index_set(std::int64_t n, std::int64_t size, std::int64_t sum,
                        const std::function<void(const IndexSeq&)>& fn) {
  if (size < 0 || size > n) return;
  IndexSeq cur;
  cur.reserve(static_cast<std::size_t>(size));
  // Choosing `left` more entries from (lo..n] sums to at least
  // left*lo + left(left+1)/2 and at most left*n - left(left-1)/2.
  auto rec = [&](auto&& self, std::int64_t next, std::int64_t left, std::int64_t remaining) -> void {
    if (left == 0) {
      if (remaining == 0) fn(cur);
      return;
    }
    for (std::int64_t v = next; v <= n - left + 1; ++v) {
      const std::int64_t after = left - 1;
      const std::int64_t min_rest = after * v + after * (after + 1) / 2;
      const std::int64_t max_rest = after * n - after * (after - 1) / 2;
      const std::int64_t need = remaining - v;
      if (need < min_rest) break;
      if (need > max_rest) continue;
      cur.push_back(v);
      self(self, v + 1, left - 1, need);
      cur.pop_back();
    }
  };
  rec(rec, 1, size, sum);
}

BigInt delta(const DeltaQuery& q) {
  q.validate();
  BigInt total = 0;
  for_each_index_set(q.n, q.n - q.r, q.m, [&](const IndexSeq& seq) {
    IndexSeq comp;
    std::size_t p = 0;
    for (std::int64_t v = 1; v <= q.n; ++v) {
      if (p < seq.size() && seq[p] == v) {
        ++p;
      } else {
        comp.push_back(v);
      }
    }
    total += psi_seq(seq) * psi_seq(comp);
  });
  return total;
}

BigInt critical_count(const DeltaQuery& q) {
  q.validate();
  if (q.r < 1) throw std::invalid_argument("critical_count: r must be >= 1");
  return 2 * deg_so(q.r) * delta(q);
}

}  // namespace orthodeg::sdp
