#pragma once

#include <cstdint>
#include <string>

#include "orthodeg/bigint.hpp"
#include "orthodeg/int_matrix.hpp"

namespace orthodeg {

enum class GroupFamily { SO, O, Sp };

struct GroupId {
  GroupFamily family;
  std::int64_t parameter;  // n for SO/O, r for Sp
};

std::string to_string(GroupFamily f);

/// Parses "so", "o", "sp" (case-insensitive); throws std::invalid_argument.
GroupFamily parse_group_family(const std::string& s);

/// The floor(n/2)-square matrix with entries C(2n-2i-2j, n-2i), 1-based i, j.
IntMatrix so_degree_matrix(std::int64_t n);

/// The r-square matrix with entries C(2i+2j-2, 2i-1).
IntMatrix sp_degree_matrix(std::int64_t r);

/// deg SO(n) = 2^(n-1) det(so_degree_matrix(n)); SO(1) has degree 1.
BigInt deg_so(std::int64_t n);

/// deg O(n) = 2 deg SO(n).
BigInt deg_o(std::int64_t n);

/// deg Sp(r) = det(sp_degree_matrix(r)).
BigInt deg_sp(std::int64_t r);

BigInt group_degree(const GroupId& g);

}  // namespace orthodeg
