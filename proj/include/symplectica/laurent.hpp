// Exact Laurent polynomials in Z[q, q^-1].

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symplectica {

using Integer = boost::multiprecision::cpp_int;

/// Raised when a division that must be exact leaves a remainder. Seeing it
/// means an operator was applied incorrectly upstream.
class InexactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Element of Z[q, q^-1], kept as (exponent, coefficient) pairs sorted by
/// exponent with no zero coefficient stored. Equality is therefore structural.
class LaurentPoly {
 public:
  using Term = std::pair<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT: implicit on purpose, 0 and 1 read naturally
  explicit LaurentPoly(std::vector<Term> terms);

  static LaurentPoly monomial(int exponent, Integer coefficient = 1);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Smallest / largest exponent carried. Precondition: non-zero.
  int min_exponent() const;
  int max_exponent() const;
  Integer coefficient(int exponent) const;

  /// True when every coefficient is positive (membership in N[q, q^-1]).
  bool has_nonnegative_coefficients() const;
  /// True when every exponent is >= 0 (membership in Z[q]).
  bool is_polynomial() const;

  /// Multiplication by q^shift.
  LaurentPoly shifted(int shift) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add_scaled(const LaurentPoly& other, int sign);
  std::vector<Term> terms_;
};

/// Bar involution q -> q^-1.
LaurentPoly bar(const LaurentPoly& a);

/// q_i = q for i < rank, q^2 for i == rank.
int q_scale(int color, int rank);

/// Quantum integer [m]_i. Throws std::invalid_argument for m < 0.
LaurentPoly quantum_int(int m, int color, int rank);
/// Signed variant: [-m]_i = -[m]_i.
LaurentPoly quantum_int_signed(int m, int color, int rank);
LaurentPoly quantum_factorial(int m, int color, int rank);
/// Quantum binomial [top choose k]_i for 0 <= k <= top.
LaurentPoly quantum_binomial(int top, int k, int color, int rank);

/// c with b*c == a, or nullopt when no such c exists in Z[q, q^-1].
std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& a, const LaurentPoly& b);
/// As try_exact_divide, but throws InexactDivision when the quotient is not exact
/// and std::domain_error when b is zero.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// The unique bar-fixed gamma with a - gamma in qZ[q]:
/// gamma = a_0 + sum_{j<0} a_j (q^j + q^-j).
LaurentPoly fold_bar_symmetric(const LaurentPoly& a);

/// Human-readable form: "2q^5+q^7", "-q^4", "1", "q^-2"; zero prints as ".".
std::string to_string(const LaurentPoly& a);
/// Parses the to_string form (also accepts "0", whitespace and unsorted terms).
LaurentPoly parse_laurent(std::string_view text);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& a);

}  // namespace symplectica
