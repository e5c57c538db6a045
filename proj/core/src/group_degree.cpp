#include "orthodeg/group_degree.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace orthodeg {

std::string to_string(GroupFamily f) {
  switch (f) {
    case GroupFamily::SO: return "SO";
    case GroupFamily::O: return "O";
    case GroupFamily::Sp: return "Sp";
  }
  return "?";
}

GroupFamily parse_group_family(const std::string& s) {
  std::string lower = s;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "so") return GroupFamily::SO;
  if (lower == "o") return GroupFamily::O;
  if (lower == "sp") return GroupFamily::Sp;
  throw std::invalid_argument("unknown group family '" + s + "' (expected so, o or sp)");
}

namespace {
void require_positive(std::int64_t v, const char* what) {
  if (v < 1) throw std::invalid_argument(std::string(what) + " must be >= 1");
}
}  // namespace

IntMatrix so_degree_matrix(std::int64_t n) {
  require_positive(n, "n");
  const std::int64_t h = n / 2;
  IntMatrix m(static_cast<std::size_t>(h), static_cast<std::size_t>(h));
  for (std::int64_t i = 1; i <= h; ++i) {
    for (std::int64_t j = 1; j <= h; ++j) {
      m(i - 1, j - 1) = binomial(2 * n - 2 * i - 2 * j, n - 2 * i);
    }
  }
  return m;
}

IntMatrix sp_degree_matrix(std::int64_t r) {
  require_positive(r, "r");
  IntMatrix m(static_cast<std::size_t>(r), static_cast<std::size_t>(r));
  for (std::int64_t i = 1; i <= r; ++i) {
    for (std::int64_t j = 1; j <= r; ++j) {
      m(i - 1, j - 1) = binomial(2 * i + 2 * j - 2, 2 * i - 1);
    }
  }
  return m;
}

BigInt deg_so(std::int64_t n) {
  require_positive(n, "n");
  return pow2(static_cast<std::uint64_t>(n - 1)) * det_exact(so_degree_matrix(n));
}

BigInt deg_o(std::int64_t n) { return 2 * deg_so(n); }

BigInt deg_sp(std::int64_t r) { return det_exact(sp_degree_matrix(r)); }

BigInt group_degree(const GroupId& g) {
  switch (g.family) {
    case GroupFamily::SO: return deg_so(g.parameter);
    case GroupFamily::O: return deg_o(g.parameter);
    case GroupFamily::Sp: return deg_sp(g.parameter);
  }
  throw std::logic_error("group_degree: bad family");
}

}  // namespace orthodeg
