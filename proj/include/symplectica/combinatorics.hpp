// The alphabet C_n = {1 < ... < n < nbar < ... < 1bar}, columns, tabloids and
// symplectic (De Concini) tableaux.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symplectica {

/// Raised when an algorithm's postcondition (a theorem) fails. Distinct from
/// std::invalid_argument, which signals bad user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A letter of C_n in signed encoding: k > 0 is the unbarred letter k, -k is
/// kbar. Ordering follows C_n, independent of the rank.
class Letter {
 public:
  constexpr Letter() = default;
  constexpr explicit Letter(int code) : code_(static_cast<std::int8_t>(code)) {}

  static constexpr Letter unbarred(int k) { return Letter(k); }
  static constexpr Letter barred(int k) { return Letter(-k); }

  constexpr int code() const { return code_; }
  constexpr int index() const { return code_ > 0 ? code_ : -code_; }
  constexpr bool is_barred() const { return code_ < 0; }
  constexpr Letter bar() const { return Letter(-code_); }
  constexpr bool valid_for(int rank) const { return code_ != 0 && index() <= rank; }

  /// Position key realizing 1 < 2 < ... < n < nbar < ... < 1bar.
  constexpr int order_key() const { return code_ > 0 ? code_ : 256 + code_; }

  friend constexpr std::strong_ordering operator<=>(Letter a, Letter b) {
    return a.order_key() <=> b.order_key();
  }
  friend constexpr bool operator==(Letter a, Letter b) { return a.code_ == b.code_; }

 private:
  std::int8_t code_ = 1;
};

/// Largest letter of C_n smaller than x; nullopt for x = 1.
std::optional<Letter> pred(Letter x, int rank);

std::string to_string(Letter x);
Letter parse_letter(std::string_view text);

using Word = std::vector<Letter>;
std::string to_string(std::span<const Letter> word);

/// ε-coordinate content: c_i = #i - #ibar.
struct Weight {
  std::vector<int> content;

  Weight() = default;
  explicit Weight(std::vector<int> c) : content(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

  int rank() const { return static_cast<int>(content.size()); }
  void add(Letter x);
  Weight& operator+=(const Weight& other);

  friend auto operator<=>(const Weight&, const Weight&) = default;
};

Weight content_of(std::span<const Letter> word, int rank);
std::string to_string(const Weight& w);
Weight parse_weight(std::string_view text);

/// Strictly increasing filling of a column. Height 0 only appears internally.
class Column {
 public:
  Column() = default;
  /// Throws std::invalid_argument unless the letters strictly increase.
  explicit Column(std::vector<Letter> letters);
  Column(std::initializer_list<int> codes);
  /// Sorts; throws on repeated letters.
  static Column from_unsorted(std::vector<Letter> letters);
  /// C_p^0 = (1, 2, ..., p).
  static Column highest(int height);

  int height() const { return static_cast<int>(letters_.size()); }
  const std::vector<Letter>& letters() const { return letters_; }
  Letter operator[](std::size_t k) const { return letters_[k]; }
  bool contains(Letter x) const;
  bool contains_pair(int k) const { return contains(Letter::unbarred(k)) && contains(Letter::barred(k)); }
  bool valid_for(int rank) const;
  bool is_highest() const;

  /// Copy with `from` removed and `to` inserted in order. Throws if `from` is
  /// absent or `to` already present.
  Column replaced(Letter from, Letter to) const;

  Weight weight(int rank) const { return content_of(letters_, rank); }

  friend auto operator<=>(const Column& a, const Column& b) = default;
  friend bool operator==(const Column&, const Column&) = default;

 private:
  std::vector<Letter> letters_;
};

std::string to_string(const Column& c);
/// "3,5,6,6b,5b,3b"
Column parse_column(std::string_view text);

/// Result of the admissibility test.
struct Admissibility {
  std::vector<Letter> k_letters;  // K_C: unbarred x with (x, xbar) in C, increasing
  std::vector<Letter> l_letters;  // L_C, paired entrywise with K_C
  std::vector<Letter> z_letters;  // I_C, decreasing
  std::vector<Letter> t_letters;  // J_C, paired entrywise with I_C
};

/// nullopt iff C is not admissible.
std::optional<Admissibility> admissibility(const Column& c, int rank);
bool is_admissible(const Column& c, int rank);

/// rC and lC. Throw std::invalid_argument on non-admissible input.
Column spread_r(const Column& c, int rank);
Column spread_l(const Column& c, int rank);

/// C1 <= C2: h(C1) >= h(C2) and rows of C1C2 weakly increase (top-aligned).
bool column_le(const Column& c1, const Column& c2);

/// Dominant weight in Λ-coordinates; lambda[p-1] columns of height p.
struct Shape {
  std::vector<int> lambda;

  Shape() = default;
  explicit Shape(std::vector<int> l) : lambda(std::move(l)) {}

  int rank() const { return static_cast<int>(lambda.size()); }
  /// Column heights, tallest first.
  std::vector<int> heights() const;
  int columns() const;
  bool is_fundamental() const;

  friend bool operator==(const Shape&, const Shape&) = default;
};

std::string to_string(const Shape& s);
Shape parse_shape(std::string_view text);

/// Column sequence C_1 ... C_r, leftmost (tallest) first. The tensor factor
/// order is the reverse: v_tau = v_{C_r} (x) ... (x) v_{C_1}.
struct Tabloid {
  std::vector<Column> columns;

  Tabloid() = default;
  explicit Tabloid(std::vector<Column> cols) : columns(std::move(cols)) {}

  std::size_t size() const { return columns.size(); }
  std::vector<int> heights() const;
  bool has_shape(const Shape& s) const;

  friend bool operator==(const Tabloid&, const Tabloid&) = default;
};

/// The tableau whose k-th row is filled with k.
Tabloid highest_tableau(const Shape& s);

/// w(tau) = w(C_r) ... w(C_1).
Word reading(const Tabloid& t);
Weight weight(const Tabloid& t, int rank);

/// The order ⊴: lexicographic on readings. Throws on shape mismatch.
std::strong_ordering lex_compare(const Tabloid& a, const Tabloid& b);

/// Comparator for containers keyed by same-shape tabloids.
struct ReadingLess {
  bool operator()(const Tabloid& a, const Tabloid& b) const;
};

bool is_symplectic(const Tabloid& t, int rank);

std::string to_string(const Tabloid& t);
/// "1,3,2b|1,3b,2b|2b,1b|1b"
Tabloid parse_tabloid(std::string_view text);

/// Rows of a tabloid as drawn (row j lists the j-th letter of each column tall
/// enough), e.g. "1 1 2b 1b / 3 3b 1b / 2b 2b".
std::string to_row_string(const Tabloid& t);

std::vector<Column> enumerate_columns(int rank, int height, bool admissible_only);

/// Tabloids (or symplectic tableaux) of the given shape, optionally restricted
/// to one content, sorted ascending by ⊴.
std::vector<Tabloid> enumerate_tabloids(const Shape& shape,
                                        const std::optional<Weight>& weight_filter,
                                        bool symplectic_only);

}  // namespace symplectica
