#pragma once

// Integer presentation matrices and the order of the first homology group
// they present: |det|, with determinant zero reported as infinite order.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dehn/rational.hpp"

namespace dehn {

using IntMatrix = std::vector<std::vector<Int>>;

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
inline Int determinant(IntMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  if (n == 0) return 1;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// Order of a first homology group: a positive integer or INFINITE.
class H1Order {
public:
  static H1Order infinite() { return H1Order(std::nullopt); }

  static H1Order finite(Int n) {
    if (n <= 0) throw std::invalid_argument("finite homology order must be positive");
    return H1Order(std::move(n));
  }

  static H1Order from_determinant(const Int& det) {
    return det == 0 ? infinite() : finite(boost::multiprecision::abs(det));
  }

  bool is_infinite() const { return !order_.has_value(); }

  const Int& value() const {
    if (is_infinite()) throw std::domain_error("infinite homology order");
    return *order_;
  }

  bool operator==(const H1Order&) const = default;

  std::string to_string() const { return is_infinite() ? "infinite" : order_->str(); }

private:
  explicit H1Order(std::optional<Int> order) : order_(std::move(order)) {}

  std::optional<Int> order_;
};

inline std::string to_string(const H1Order& h) { return h.to_string(); }

}  // namespace dehn
