// Marsh paths, G(C) for fundamental modules, the monomial vectors A(T) and the
// canonical basis G(T) of one weight space.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symplectica/combinatorics.hpp"
#include "symplectica/laurent.hpp"
#include "symplectica/wmodule.hpp"

namespace symplectica {

struct Step {
  int color;
  int exponent;
  friend bool operator==(const Step&, const Step&) = default;
};

/// f_{i_1}^{(r_1)} ... f_{i_s}^{(r_s)}, steps[0] leftmost. Applied to a
/// highest weight vector the last step acts first.
struct MonomialWord {
  std::vector<Step> steps;
  friend bool operator==(const MonomialWord&, const MonomialWord&) = default;
};

/// "f2 f1^(3) f3", "1" for the empty word.
std::string to_string(const MonomialWord& w);
/// Colors of the e-chain from the column back to the highest one, each repeated
/// `exponent` times: 2,3,2,1,1,2,3,2.
std::vector<int> e_chain(const MonomialWord& w);

/// Smallest letter z of C (in C_n order) whose predecessor is not in C.
std::optional<Letter> lowest_movable(const Column& c, int rank);

/// Throws std::invalid_argument on non-admissible input.
MonomialWord marsh_path(const Column& c, int rank);

WVector g_fundamental_closed(const Column& c, int rank);
WVector g_fundamental_monomial(const Column& c, int rank);

/// Apply w to v_{T_lambda}.
WVector apply_word(const MonomialWord& w, const Shape& shape);

/// Throws std::invalid_argument if T is not symplectic.
MonomialWord a_monomial_word(const Tabloid& t, int rank);
WVector a_vector(const Tabloid& t, int rank);

struct BasisOptions {
  unsigned jobs = 1;
  bool all_rows = false;  // rows: every tabloid of the weight, not only supports
};

struct BasisMatrix {
  int rank = 0;
  Shape shape;
  Weight weight;
  std::vector<Tabloid> columns;  // symplectic tableaux of the weight
  std::vector<Tabloid> rows;     // tabloids
  /// entries[c] = sparse column c as (row index, d), row indices increasing
  std::vector<std::vector<std::pair<std::size_t, LaurentPoly>>> entries;
  bool descending = false;

  LaurentPoly at(std::size_t row, std::size_t col) const;
  /// Rows and columns sorted the other way round.
  BasisMatrix reversed() const;

  friend bool operator==(const BasisMatrix&, const BasisMatrix&) = default;
};

/// Everything produced for one weight class, ascending by ⊴.
struct CanonicalBasis {
  BasisMatrix matrix;
  std::vector<WVector> a_vectors;
  std::vector<MonomialWord> a_words;
  std::vector<WVector> g_vectors;
  /// beta[s][t]: G(T_t) = sum_s beta[s][t] A(T_s)
  std::vector<std::vector<LaurentPoly>> beta;
};

/// Throws InternalError when one of the basis theorems fails on the computed data.
CanonicalBasis canonical_basis(const Shape& shape, const Weight& weight, const BasisOptions& opts = {});

/// Independent re-check of the basis properties; empty string when all hold.
struct PropertyReport {
  bool ok = true;
  std::size_t checks = 0;
  std::string detail;
};
PropertyReport check_properties(const CanonicalBasis& b);

/// Contents of symplectic tableaux of the shape, lexicographically descending.
std::vector<Weight> weight_classes(const Shape& shape);

}  // namespace symplectica
