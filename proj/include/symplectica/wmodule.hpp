// The modules W(Λ_p) and W(λ): sparse vectors over tabloids and the action of
// e_i, f_i, q^{h_i}.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symplectica/combinatorics.hpp"
#include "symplectica/laurent.hpp"

namespace symplectica {

/// Column as a bit set over C_n: letter k sits at bit k-1, kbar at bit 2n-k, so
/// bit order is C_n order.
using ColumnMask = std::uint32_t;

int letter_bit(Letter x, int rank);
Letter bit_letter(int bit, int rank);
ColumnMask mask_of(const Column& c, int rank);
Column column_of(ColumnMask m, int rank);
/// Lexicographic order on the sorted letters; only meaningful for equal heights.
bool mask_less(ColumnMask a, ColumnMask b);

/// Column masks in tensor-factor order: key[0] is the rightmost column C_r.
/// Lexicographic comparison of keys is ⊴.
using TabloidKey = std::vector<ColumnMask>;

struct KeyLess {
  bool operator()(const TabloidKey& a, const TabloidKey& b) const;
};

TabloidKey key_of(const Tabloid& t, int rank);
Tabloid tabloid_of(const TabloidKey& k, int rank);
Weight key_weight(const TabloidKey& k, int rank);

/// <h_i, mu>: c_i - c_{i+1} for i < n, c_n for i = n.
int h_pairing(const Weight& mu, int color);
/// Exponent of the t_i eigenvalue on a column: <h_i, wt> for i < n, 2<h_n, wt> for i = n.
int t_exponent(ColumnMask c, int color, int rank);
/// <h_i, alpha_j>.
int cartan(int i, int j, int rank);

struct ColumnTerm {
  ColumnMask column;
  int q_exponent;
};

/// Image of one basis column: zero, one or two terms with coefficient q^k.
struct ColumnImage {
  int size = 0;
  ColumnTerm terms[2]{};

  void push(ColumnMask c, int e) { terms[size++] = {c, e}; }
  const ColumnTerm* begin() const { return terms; }
  const ColumnTerm* end() const { return terms + size; }
};

ColumnImage act_f_column(ColumnMask c, int color, int rank);
ColumnImage act_e_column(ColumnMask c, int color, int rank);
std::vector<std::pair<Column, LaurentPoly>> act_f_column(const Column& c, int color, int rank);
std::vector<std::pair<Column, LaurentPoly>> act_e_column(const Column& c, int color, int rank);

/// Single-column action tables; replaceable for fault injection.
struct ColumnActions {
  std::function<ColumnImage(ColumnMask, int, int)> f = [](ColumnMask c, int i, int n) { return act_f_column(c, i, n); };
  std::function<ColumnImage(ColumnMask, int, int)> e = [](ColumnMask c, int i, int n) { return act_e_column(c, i, n); };
};

/// Finitely supported map tabloid -> Laurent polynomial.
class WVector {
 public:
  using Map = std::map<TabloidKey, LaurentPoly, KeyLess>;

  WVector() = default;
  explicit WVector(int rank) : rank_(rank) {}
  static WVector basis(const Tabloid& t, int rank);
  static WVector basis(TabloidKey k, int rank);

  int rank() const { return rank_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  LaurentPoly coefficient(const TabloidKey& k) const;
  LaurentPoly coefficient(const Tabloid& t) const { return coefficient(key_of(t, rank_)); }

  void add(const TabloidKey& k, const LaurentPoly& c);
  WVector& operator+=(const WVector& other);
  WVector& operator-=(const WVector& other);
  WVector scaled(const LaurentPoly& c) const;
  /// Subtract c * other.
  void subtract_scaled(const LaurentPoly& c, const WVector& other);

  std::vector<std::pair<Tabloid, LaurentPoly>> entries() const;

  friend bool operator==(const WVector& a, const WVector& b) { return a.terms_ == b.terms_; }

 private:
  int rank_ = 0;
  Map terms_;
};

WVector act_f(const WVector& v, int color, const ColumnActions& actions = {});
WVector act_e(const WVector& v, int color, const ColumnActions& actions = {});
WVector act_f_divided(const WVector& v, int color, int m, const ColumnActions& actions = {});
WVector act_e_divided(const WVector& v, int color, int m, const ColumnActions& actions = {});
/// q^{power * h_i}.
WVector act_k(const WVector& v, int color, int power);
/// t_i^power.
WVector act_t(const WVector& v, int color, int power);

struct RelationReport {
  bool ok = true;
  std::size_t checks = 0;
  std::string relation;             // first violated relation
  std::optional<Column> witness;    // basis column on which it fails
  std::string detail;
};

/// Weight relations, [e_i, f_j], quantum Serre relations and nilpotency on the
/// full basis of W(Λ_p).
RelationReport verify_defining_relations(int rank, int p, const ColumnActions& actions = {});

struct CrystalReport {
  bool ok = true;
  std::size_t checks = 0;
  std::string detail;
};

/// Kashiwara operator f_i (or e_i) on v_C, computed from the i-string
/// decomposition, then reduced mod q. nullopt when the result lies in qL;
/// throws InternalError if it leaves L or is not a basis vector mod q.
std::optional<ColumnMask> kashiwara_limit(ColumnMask c, int color, int rank, bool lower);

/// For every column of height p and every color: the q = 0 limit of the
/// Kashiwara operators agrees with the signature rule on readings.
CrystalReport verify_crystal_compatibility(int rank, int p);

}  // namespace symplectica
