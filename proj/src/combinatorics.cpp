#include "symplectica/combinatorics.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>

namespace symplectica {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == sep) {
      out.push_back(trim(s.substr(start, k - start)));
      start = k + 1;
    }
  }
  return out;
}

std::string_view strip_parens(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && (s.front() == '(' || s.front() == '[') && (s.back() == ')' || s.back() == ']')) {
    s = s.substr(1, s.size() - 2);
  }
  return trim(s);
}

std::vector<int> parse_int_list(std::string_view text, const char* what) {
  std::vector<int> out;
  auto body = strip_parens(text);
  if (body.empty()) return out;
  for (auto tok : split(body, ',')) {
    std::string t(tok);
    char* end = nullptr;
    long v = std::strtol(t.c_str(), &end, 10);
    if (t.empty() || *end != '\0') {
      throw std::invalid_argument(std::string("cannot parse ") + what + ": " + std::string(text));
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

std::optional<Letter> pred(Letter x, int rank) {
  if (!x.is_barred()) {
    if (x.index() == 1) return std::nullopt;
    return Letter::unbarred(x.index() - 1);
  }
  if (x.index() == rank) return Letter::unbarred(rank);
  return Letter::barred(x.index() + 1);
}

std::string to_string(Letter x) {
  return std::to_string(x.index()) + (x.is_barred() ? "b" : "");
}

Letter parse_letter(std::string_view text) {
  auto s = trim(text);
  bool barred = false;
  if (!s.empty() && s.front() == '-') {
    barred = true;
    s.remove_prefix(1);
  } else if (s.size() > 3 && s.substr(s.size() - 3) == "bar") {
    barred = true;
    s.remove_suffix(3);
  } else if (!s.empty() && (s.back() == 'b' || s.back() == '\'')) {
    barred = true;
    s.remove_suffix(1);
  }
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw std::invalid_argument("cannot parse letter: " + std::string(text));
  }
  int k = std::stoi(std::string(s));
  if (k < 1 || k > 127) throw std::invalid_argument("letter index out of range: " + std::string(text));
  return barred ? Letter::barred(k) : Letter::unbarred(k);
}

std::string to_string(std::span<const Letter> word) {
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ' ';
    out += to_string(word[k]);
  }
  return out;
}

void Weight::add(Letter x) {
  if (x.index() > rank()) throw std::invalid_argument("letter outside weight rank");
  content[static_cast<std::size_t>(x.index() - 1)] += x.is_barred() ? -1 : 1;
}

Weight& Weight::operator+=(const Weight& other) {
  if (other.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t k = 0; k < content.size(); ++k) content[k] += other.content[k];
  return *this;
}

Weight content_of(std::span<const Letter> word, int rank) {
  Weight w = Weight::zero(rank);
  for (Letter x : word) w.add(x);
  return w;
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t k = 0; k < w.content.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(w.content[k]);
  }
  return out + ")";
}

Weight parse_weight(std::string_view text) { return Weight(parse_int_list(text, "weight")); }

Column::Column(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (std::size_t k = 1; k < letters_.size(); ++k) {
    if (!(letters_[k - 1] < letters_[k])) {
      throw std::invalid_argument("column letters must strictly increase: " + to_string(letters_));
    }
  }
}

Column::Column(std::initializer_list<int> codes) {
  std::vector<Letter> letters;
  for (int c : codes) letters.emplace_back(c);
  *this = Column(std::move(letters));
}

Column Column::from_unsorted(std::vector<Letter> letters) {
  std::sort(letters.begin(), letters.end());
  return Column(std::move(letters));
}

Column Column::highest(int height) {
  std::vector<Letter> letters;
  for (int k = 1; k <= height; ++k) letters.push_back(Letter::unbarred(k));
  return Column(std::move(letters));
}

bool Column::contains(Letter x) const {
  return std::binary_search(letters_.begin(), letters_.end(), x);
}

bool Column::valid_for(int rank) const {
  return height() <= 2 * rank &&
         std::all_of(letters_.begin(), letters_.end(), [&](Letter x) { return x.valid_for(rank); });
}

bool Column::is_highest() const { return *this == highest(height()); }

Column Column::replaced(Letter from, Letter to) const {
  if (!contains(from)) throw std::invalid_argument("replaced: letter " + to_string(from) + " not in column");
  if (from == to) return *this;
  if (contains(to)) throw std::invalid_argument("replaced: letter " + to_string(to) + " already in column");
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (Letter x : letters_) {
    if (x != from) out.push_back(x);
  }
  out.insert(std::lower_bound(out.begin(), out.end(), to), to);
  Column c;
  c.letters_ = std::move(out);
  return c;
}

std::string to_string(const Column& c) {
  std::string out;
  for (std::size_t k = 0; k < c.letters().size(); ++k) {
    if (k) out += ',';
    out += to_string(c[k]);
  }
  return out;
}

Column parse_column(std::string_view text) {
  auto body = strip_parens(text);
  std::vector<Letter> letters;
  if (!body.empty()) {
    for (auto tok : split(body, ',')) letters.push_back(parse_letter(tok));
  }
  return Column::from_unsorted(std::move(letters));
}

std::optional<Admissibility> admissibility(const Column& c, int rank) {
  if (!c.valid_for(rank)) throw std::invalid_argument("column " + to_string(c) + " not over C_" + std::to_string(rank));
  Admissibility out;
  for (int k = 1; k <= rank; ++k) {
    if (c.contains_pair(k)) out.k_letters.push_back(Letter::unbarred(k));
  }
  out.z_letters.assign(out.k_letters.rbegin(), out.k_letters.rend());

  // J_C: t_i greatest with t_i < min(t_{i-1}, z_i), t_i and tbar_i outside C
  int bound = rank + 1;
  for (Letter z : out.z_letters) {
    int t = std::min(bound, z.index()) - 1;
    while (t >= 1 && (c.contains(Letter::unbarred(t)) || c.contains(Letter::barred(t)))) --t;
    if (t < 1) return std::nullopt;
    out.t_letters.push_back(Letter::unbarred(t));
    bound = t;
  }

  // L_C: u_j maximal with u_j < x_j, {u_j, ubar_j} outside C and the earlier u's
  std::vector<bool> used(static_cast<std::size_t>(rank + 1), false);
  for (Letter x : out.k_letters) {
    int u = x.index() - 1;
    while (u >= 1 && (used[static_cast<std::size_t>(u)] || c.contains(Letter::unbarred(u)) ||
                      c.contains(Letter::barred(u)))) {
      --u;
    }
    if (u < 1) throw InternalError("L_C does not exist for admissible column " + to_string(c));
    used[static_cast<std::size_t>(u)] = true;
    out.l_letters.push_back(Letter::unbarred(u));
  }

  auto l_sorted = out.l_letters;
  auto t_sorted = out.t_letters;
  std::sort(l_sorted.begin(), l_sorted.end());
  std::sort(t_sorted.begin(), t_sorted.end());
  if (l_sorted != t_sorted) throw InternalError("L_C and J_C differ for column " + to_string(c));
  return out;
}

bool is_admissible(const Column& c, int rank) { return admissibility(c, rank).has_value(); }

namespace {

Column spread(const Column& c, int rank, bool right) {
  auto adm = admissibility(c, rank);
  if (!adm) throw std::invalid_argument("column " + to_string(c) + " is not admissible");
  std::vector<Letter> letters = c.letters();
  for (std::size_t j = 0; j < adm->z_letters.size(); ++j) {
    Letter from = right ? adm->z_letters[j].bar() : adm->z_letters[j];
    Letter to = right ? adm->t_letters[j].bar() : adm->t_letters[j];
    *std::find(letters.begin(), letters.end(), from) = to;
  }
  return Column::from_unsorted(std::move(letters));
}

}  // namespace

Column spread_r(const Column& c, int rank) { return spread(c, rank, true); }
Column spread_l(const Column& c, int rank) { return spread(c, rank, false); }

bool column_le(const Column& c1, const Column& c2) {
  if (c1.height() < c2.height()) return false;
  for (int j = 0; j < c2.height(); ++j) {
    if (c2[static_cast<std::size_t>(j)] < c1[static_cast<std::size_t>(j)]) return false;
  }
  return true;
}

std::vector<int> Shape::heights() const {
  std::vector<int> out;
  for (int p = rank(); p >= 1; --p) {
    for (int k = 0; k < lambda[static_cast<std::size_t>(p - 1)]; ++k) out.push_back(p);
  }
  return out;
}

int Shape::columns() const {
  int total = 0;
  for (int m : lambda) total += m;
  return total;
}

bool Shape::is_fundamental() const { return columns() == 1; }

std::string to_string(const Shape& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.lambda.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(s.lambda[k]);
  }
  return out + ")";
}

Shape parse_shape(std::string_view text) {
  auto v = parse_int_list(text, "dominant weight");
  if (v.empty()) throw std::invalid_argument("empty dominant weight");
  if (std::any_of(v.begin(), v.end(), [](int m) { return m < 0; })) {
    throw std::invalid_argument("dominant weight coefficients must be >= 0: " + std::string(text));
  }
  return Shape(std::move(v));
}

std::vector<int> Tabloid::heights() const {
  std::vector<int> out;
  for (const auto& c : columns) out.push_back(c.height());
  return out;
}

bool Tabloid::has_shape(const Shape& s) const { return heights() == s.heights(); }

Tabloid highest_tableau(const Shape& s) {
  Tabloid t;
  for (int h : s.heights()) t.columns.push_back(Column::highest(h));
  return t;
}

Word reading(const Tabloid& t) {
  Word w;
  for (auto it = t.columns.rbegin(); it != t.columns.rend(); ++it) {
    w.insert(w.end(), it->letters().begin(), it->letters().end());
  }
  return w;
}

Weight weight(const Tabloid& t, int rank) { return content_of(reading(t), rank); }

std::strong_ordering lex_compare(const Tabloid& a, const Tabloid& b) {
  if (a.heights() != b.heights()) throw std::invalid_argument("lex_compare: shape mismatch");
  for (std::size_t k = a.columns.size(); k-- > 0;) {
    const auto& x = a.columns[k].letters();
    const auto& y = b.columns[k].letters();
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (auto c = x[j] <=> y[j]; c != 0) return c;
    }
  }
  return std::strong_ordering::equal;
}

bool ReadingLess::operator()(const Tabloid& a, const Tabloid& b) const { return lex_compare(a, b) < 0; }

bool is_symplectic(const Tabloid& t, int rank) {
  for (std::size_t k = 0; k < t.columns.size(); ++k) {
    if (!t.columns[k].valid_for(rank) || !is_admissible(t.columns[k], rank)) return false;
    if (k > 0) {
      if (t.columns[k - 1].height() < t.columns[k].height()) return false;
      if (!column_le(spread_r(t.columns[k - 1], rank), spread_l(t.columns[k], rank))) return false;
    }
  }
  return true;
}

std::string to_string(const Tabloid& t) {
  std::string out;
  for (std::size_t k = 0; k < t.columns.size(); ++k) {
    if (k) out += '|';
    out += to_string(t.columns[k]);
  }
  return out;
}

Tabloid parse_tabloid(std::string_view text) {
  Tabloid t;
  for (auto tok : split(trim(text), '|')) {
    t.columns.push_back(parse_column(tok));
    if (t.columns.back().height() == 0) throw std::invalid_argument("empty column in tabloid: " + std::string(text));
  }
  for (std::size_t k = 1; k < t.columns.size(); ++k) {
    if (t.columns[k - 1].height() < t.columns[k].height()) {
      throw std::invalid_argument("tabloid column heights must weakly decrease: " + std::string(text));
    }
  }
  return t;
}

std::string to_row_string(const Tabloid& t) {
  std::string out;
  int rows = t.columns.empty() ? 0 : t.columns.front().height();
  for (int j = 0; j < rows; ++j) {
    if (j) out += " / ";
    bool first = true;
    for (const auto& c : t.columns) {
      if (c.height() <= j) break;
      if (!first) out += ' ';
      first = false;
      out += to_string(c[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

std::vector<Column> enumerate_columns(int rank, int height, bool admissible_only) {
  if (rank < 1 || height < 1 || height > 2 * rank) {
    throw std::invalid_argument("column height must lie in [1, 2n]");
  }
  std::vector<Letter> alphabet;
  for (int k = 1; k <= rank; ++k) alphabet.push_back(Letter::unbarred(k));
  for (int k = rank; k >= 1; --k) alphabet.push_back(Letter::barred(k));

  std::vector<Column> out;
  std::vector<Letter> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(cur.size()) == height) {
      Column c(cur);
      if (!admissible_only || is_admissible(c, rank)) out.push_back(std::move(c));
      return;
    }
    std::size_t need = static_cast<std::size_t>(height) - cur.size();
    for (std::size_t k = from; k + need <= alphabet.size(); ++k) {
      cur.push_back(alphabet[k]);
      rec(k + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Tabloid> enumerate_tabloids(const Shape& shape,
                                        const std::optional<Weight>& weight_filter,
                                        bool symplectic_only) {
  const int rank = shape.rank();
  if (weight_filter && weight_filter->rank() != rank) {
    throw std::invalid_argument("weight selector has the wrong rank");
  }
  const auto heights = shape.heights();
  const std::size_t r = heights.size();
  std::vector<Tabloid> out;

  struct Candidate {
    Column column;
    Weight weight;
    Column left, right;  // lC and rC when admissible
  };
  std::vector<std::vector<Candidate>> by_height(static_cast<std::size_t>(rank + 1));
  for (int h = 1; h <= rank; ++h) {
    if (shape.lambda[static_cast<std::size_t>(h - 1)] == 0) continue;
    for (auto& c : enumerate_columns(rank, h, symplectic_only)) {
      Candidate cand{c, c.weight(rank), {}, {}};
      if (symplectic_only) {
        cand.left = spread_l(c, rank);
        cand.right = spread_r(c, rank);
      }
      by_height[static_cast<std::size_t>(h)].push_back(std::move(cand));
    }
  }

  // letters still to be placed in columns 0..k-1
  std::vector<int> remaining(r + 1, 0);
  for (std::size_t k = 0; k < r; ++k) remaining[k + 1] = remaining[k] + heights[k];

  std::vector<const Candidate*> chosen(r, nullptr);
  Weight acc = Weight::zero(rank);

  auto feasible = [&](std::size_t cols_left) {
    if (!weight_filter) return true;
    int dist = 0;
    for (int i = 0; i < rank; ++i) {
      dist += std::abs(weight_filter->content[static_cast<std::size_t>(i)] - acc.content[static_cast<std::size_t>(i)]);
    }
    int left = remaining[cols_left];
    return dist <= left && (left - dist) % 2 == 0;
  };

  // fill from the rightmost column so that output is ascending in reading order
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == 0) {
      if (weight_filter && acc != *weight_filter) return;
      Tabloid t;
      t.columns.reserve(r);
      for (auto* c : chosen) t.columns.push_back(c->column);
      out.push_back(std::move(t));
      return;
    }
    const std::size_t idx = k - 1;
    for (const auto& cand : by_height[static_cast<std::size_t>(heights[idx])]) {
      if (symplectic_only && idx + 1 < r && !column_le(cand.right, chosen[idx + 1]->left)) continue;
      acc += cand.weight;
      if (feasible(idx)) {
        chosen[idx] = &cand;
        rec(idx);
      }
      for (std::size_t i = 0; i < acc.content.size(); ++i) acc.content[i] -= cand.weight.content[i];
    }
  };
  rec(r);
  return out;
}

}  // namespace symplectica
