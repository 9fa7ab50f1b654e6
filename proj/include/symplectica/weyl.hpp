// Weyl dimension formula for sp_2n.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace symplectica {

/// dim V(lambda), lambda in Λ-coordinates. Roots e_i - e_j, e_i + e_j (i < j)
/// and 2e_i; <rho, e_i> = n - i + 1.
inline boost::multiprecision::cpp_int weyl_dimension(const std::vector<int>& lambda) {
  using boost::multiprecision::cpp_int;
  const int n = static_cast<int>(lambda.size());
  std::vector<long> shifted(static_cast<std::size_t>(n)), rho(static_cast<std::size_t>(n));
  long tail = 0;
  for (int i = n - 1; i >= 0; --i) {
    if (lambda[static_cast<std::size_t>(i)] < 0) throw std::invalid_argument("weyl_dimension: negative coefficient");
    tail += lambda[static_cast<std::size_t>(i)];
    rho[static_cast<std::size_t>(i)] = n - i;
    shifted[static_cast<std::size_t>(i)] = tail + rho[static_cast<std::size_t>(i)];
  }
  cpp_int num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= shifted[i] - shifted[j];
      den *= rho[i] - rho[j];
      num *= shifted[i] + shifted[j];
      den *= rho[i] + rho[j];
    }
    num *= shifted[i];
    den *= rho[i];
  }
  if (num % den != 0) throw std::logic_error("weyl_dimension: non-integral quotient");
  return num / den;
}

}  // namespace symplectica
