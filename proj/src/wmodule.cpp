#include "symplectica/wmodule.hpp"

#include "symplectica/crystal.hpp"

#include <algorithm>

namespace symplectica {

int letter_bit(Letter x, int rank) {
  return x.is_barred() ? 2 * rank - x.index() : x.index() - 1;
}

Letter bit_letter(int bit, int rank) {
  return bit < rank ? Letter::unbarred(bit + 1) : Letter::barred(2 * rank - bit);
}

ColumnMask mask_of(const Column& c, int rank) {
  if (rank > 16) throw std::invalid_argument("rank above 16 is not supported");
  ColumnMask m = 0;
  for (Letter x : c.letters()) {
    if (!x.valid_for(rank)) throw std::invalid_argument("letter outside C_n: " + to_string(x));
    m |= ColumnMask{1} << letter_bit(x, rank);
  }
  return m;
}

Column column_of(ColumnMask m, int rank) {
  std::vector<Letter> letters;
  for (int b = 0; b < 2 * rank; ++b) {
    if (m & (ColumnMask{1} << b)) letters.push_back(bit_letter(b, rank));
  }
  return Column(std::move(letters));
}

bool mask_less(ColumnMask a, ColumnMask b) {
  ColumnMask d = a ^ b;
  if (!d) return false;
  return (a & (d & (~d + 1))) != 0;
}

bool KeyLess::operator()(const TabloidKey& a, const TabloidKey& b) const {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), mask_less);
}

TabloidKey key_of(const Tabloid& t, int rank) {
  TabloidKey k;
  k.reserve(t.columns.size());
  for (auto it = t.columns.rbegin(); it != t.columns.rend(); ++it) k.push_back(mask_of(*it, rank));
  return k;
}

Tabloid tabloid_of(const TabloidKey& k, int rank) {
  Tabloid t;
  t.columns.reserve(k.size());
  for (auto it = k.rbegin(); it != k.rend(); ++it) t.columns.push_back(column_of(*it, rank));
  return t;
}

Weight key_weight(const TabloidKey& k, int rank) {
  Weight w = Weight::zero(rank);
  for (ColumnMask m : k) {
    for (int j = 0; j < rank; ++j) {
      w.content[static_cast<std::size_t>(j)] += ((m >> j) & 1) - ((m >> (2 * rank - 1 - j)) & 1);
    }
  }
  return w;
}

int h_pairing(const Weight& mu, int color) {
  const int n = mu.rank();
  if (color < 1 || color > n) throw std::invalid_argument("color out of range");
  const auto& c = mu.content;
  return color < n ? c[static_cast<std::size_t>(color - 1)] - c[static_cast<std::size_t>(color)]
                   : c[static_cast<std::size_t>(n - 1)];
}

namespace {

inline bool has(ColumnMask c, int bit) { return (c >> bit) & 1; }

inline int content_at(ColumnMask c, int k, int rank) {
  return static_cast<int>(has(c, k - 1)) - static_cast<int>(has(c, 2 * rank - k));
}

}  // namespace

int t_exponent(ColumnMask c, int color, int rank) {
  if (color == rank) return 2 * content_at(c, rank, rank);
  return content_at(c, color, rank) - content_at(c, color + 1, rank);
}

int cartan(int i, int j, int rank) {
  Weight alpha = Weight::zero(rank);
  if (j < rank) {
    alpha.content[static_cast<std::size_t>(j - 1)] = 1;
    alpha.content[static_cast<std::size_t>(j)] = -1;
  } else {
    alpha.content[static_cast<std::size_t>(rank - 1)] = 2;
  }
  return h_pairing(alpha, i);
}

ColumnImage act_f_column(ColumnMask c, int i, int n) {
  ColumnImage out;
  if (i == n) {
    const int p = n - 1, m = n;
    if (has(c, p) && !has(c, m)) out.push(c ^ (ColumnMask{1} << p) ^ (ColumnMask{1} << m), 0);
    return out;
  }
  const ColumnMask a = ColumnMask{1} << (i - 1);      // i
  const ColumnMask b = ColumnMask{1} << i;            // i+1
  const ColumnMask B = ColumnMask{1} << (2 * n - i - 1);  // (i+1)bar
  const ColumnMask A = ColumnMask{1} << (2 * n - i);      // ibar
  const ColumnMask e = c & (a | b | A | B);
  const ColumnMask up = c ^ a ^ b;   // i -> i+1
  const ColumnMask bar = c ^ B ^ A;  // (i+1)bar -> ibar
  if (e == a || e == (B | A | a) || e == (A | a)) {
    out.push(up, 0);
  } else if (e == B || e == (B | a | b)) {
    out.push(bar, 0);
  } else if (e == (B | b)) {
    out.push(bar, -1);
  } else if (e == (B | a)) {
    out.push(up, 0);
    out.push(bar, 1);
  }
  return out;
}

ColumnImage act_e_column(ColumnMask c, int i, int n) {
  ColumnImage out;
  if (i == n) {
    const int p = n - 1, m = n;
    if (has(c, m) && !has(c, p)) out.push(c ^ (ColumnMask{1} << p) ^ (ColumnMask{1} << m), 0);
    return out;
  }
  const ColumnMask a = ColumnMask{1} << (i - 1);
  const ColumnMask b = ColumnMask{1} << i;
  const ColumnMask B = ColumnMask{1} << (2 * n - i - 1);
  const ColumnMask A = ColumnMask{1} << (2 * n - i);
  const ColumnMask e = c & (a | b | A | B);
  const ColumnMask down = c ^ a ^ b;  // i+1 -> i
  const ColumnMask bar = c ^ B ^ A;   // ibar -> (i+1)bar
  if (e == b || e == (B | A | b)) {
    out.push(down, 0);
  } else if (e == A || e == (A | a | b) || e == (A | a)) {
    out.push(bar, 0);
  } else if (e == (B | b)) {
    out.push(down, -1);
  } else if (e == (A | b)) {
    out.push(bar, 0);
    out.push(down, 1);
  }
  return out;
}

namespace {

std::vector<std::pair<Column, LaurentPoly>> expand(const ColumnImage& img, int rank) {
  std::vector<std::pair<Column, LaurentPoly>> out;
  for (const auto& t : img) out.emplace_back(column_of(t.column, rank), LaurentPoly::monomial(t.q_exponent));
  return out;
}

void check_color(int color, int rank) {
  if (color < 1 || color > rank) throw std::invalid_argument("color out of range");
}

}  // namespace

std::vector<std::pair<Column, LaurentPoly>> act_f_column(const Column& c, int color, int rank) {
  check_color(color, rank);
  return expand(act_f_column(mask_of(c, rank), color, rank), rank);
}

std::vector<std::pair<Column, LaurentPoly>> act_e_column(const Column& c, int color, int rank) {
  check_color(color, rank);
  return expand(act_e_column(mask_of(c, rank), color, rank), rank);
}

WVector WVector::basis(const Tabloid& t, int rank) { return basis(key_of(t, rank), rank); }

WVector WVector::basis(TabloidKey k, int rank) {
  WVector v(rank);
  v.terms_.emplace(std::move(k), LaurentPoly(1));
  return v;
}

LaurentPoly WVector::coefficient(const TabloidKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void WVector::add(const TabloidKey& k, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WVector& WVector::operator+=(const WVector& other) {
  for (const auto& [k, c] : other.terms_) add(k, c);
  return *this;
}

WVector& WVector::operator-=(const WVector& other) {
  for (const auto& [k, c] : other.terms_) add(k, -c);
  return *this;
}

WVector WVector::scaled(const LaurentPoly& c) const {
  WVector out(rank_);
  if (c.is_zero()) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), k, v * c);
  return out;
}

void WVector::subtract_scaled(const LaurentPoly& c, const WVector& other) {
  if (c.is_zero()) return;
  for (const auto& [k, v] : other.terms_) add(k, -(v * c));
}

std::vector<std::pair<Tabloid, LaurentPoly>> WVector::entries() const {
  std::vector<std::pair<Tabloid, LaurentPoly>> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.emplace_back(tabloid_of(k, rank_), c);
  return out;
}

WVector act_f(const WVector& v, int color, const ColumnActions& actions) {
  const int n = v.rank();
  check_color(color, n);
  WVector out(n);
  for (const auto& [key, coeff] : v.terms()) {
    // f(u (x) w) = f u (x) w + t u (x) f w
    int prefix = 0;
    for (std::size_t k = 0; k < key.size(); ++k) {
      for (const auto& term : actions.f(key[k], color, n)) {
        TabloidKey next = key;
        next[k] = term.column;
        out.add(next, coeff.shifted(prefix + term.q_exponent));
      }
      prefix += t_exponent(key[k], color, n);
    }
  }
  return out;
}

WVector act_e(const WVector& v, int color, const ColumnActions& actions) {
  const int n = v.rank();
  check_color(color, n);
  WVector out(n);
  for (const auto& [key, coeff] : v.terms()) {
    // e(u (x) w) = e u (x) t^-1 w + u (x) e w
    int suffix = 0;
    for (std::size_t k = key.size(); k-- > 0;) {
      for (const auto& term : actions.e(key[k], color, n)) {
        TabloidKey next = key;
        next[k] = term.column;
        out.add(next, coeff.shifted(term.q_exponent - suffix));
      }
      suffix += t_exponent(key[k], color, n);
    }
  }
  return out;
}

namespace {

WVector divide_all(WVector v, const LaurentPoly& d) {
  if (d == LaurentPoly(1)) return v;
  WVector out(v.rank());
  for (const auto& [k, c] : v.terms()) out.add(k, exact_divide(c, d));
  return out;
}

}  // namespace

WVector act_f_divided(const WVector& v, int color, int m, const ColumnActions& actions) {
  if (m < 0) throw std::invalid_argument("divided power exponent must be >= 0");
  WVector cur = v;
  for (int k = 0; k < m && !cur.is_zero(); ++k) cur = act_f(cur, color, actions);
  return divide_all(std::move(cur), quantum_factorial(m, color, v.rank()));
}

WVector act_e_divided(const WVector& v, int color, int m, const ColumnActions& actions) {
  if (m < 0) throw std::invalid_argument("divided power exponent must be >= 0");
  WVector cur = v;
  for (int k = 0; k < m && !cur.is_zero(); ++k) cur = act_e(cur, color, actions);
  return divide_all(std::move(cur), quantum_factorial(m, color, v.rank()));
}

WVector act_k(const WVector& v, int color, int power) {
  const int n = v.rank();
  check_color(color, n);
  WVector out(n);
  for (const auto& [key, coeff] : v.terms()) {
    int h = h_pairing(key_weight(key, n), color);
    out.add(key, coeff.shifted(power * h));
  }
  return out;
}

WVector act_t(const WVector& v, int color, int power) {
  return act_k(v, color, color == v.rank() ? 2 * power : power);
}

namespace {

LaurentPoly q_power(int e) { return LaurentPoly::monomial(e); }

struct RelationChecker {
  int n;
  const ColumnActions& act;
  RelationReport report;

  WVector E(const WVector& v, int i, int m = 1) const { return act_e_divided(v, i, m, act); }
  WVector F(const WVector& v, int i, int m = 1) const { return act_f_divided(v, i, m, act); }

  bool expect(bool ok, const char* name, const Column& c, const std::string& detail) {
    ++report.checks;
    if (!ok && report.ok) {
      report.ok = false;
      report.relation = name;
      report.witness = c;
      report.detail = detail;
    }
    return ok;
  }

  void run(const Column& c) {
    const WVector v = WVector::basis(Tabloid(std::vector<Column>{c}), n);
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        const std::string ij = " (i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")";
        const int a = cartan(i, j, n);
        expect(act_k(E(act_k(v, i, -1), j), i, 1) == E(v, j).scaled(q_power(a)), "q^h_i e_j q^-h_i = q^a_ij e_j", c, ij);
        expect(act_k(F(act_k(v, i, -1), j), i, 1) == F(v, j).scaled(q_power(-a)), "q^h_i f_j q^-h_i = q^-a_ij f_j", c, ij);

        WVector comm = E(F(v, j), i);
        comm -= F(E(v, i), j);
        WVector rhs(n);
        if (i == j) {
          const int s = q_scale(i, n);
          const int t = t_exponent(mask_of(c, n), i, n);
          rhs = v.scaled(exact_divide(q_power(t) - q_power(-t), q_power(s) - q_power(-s)));
        }
        expect(comm == rhs, "[e_i, f_j] = delta_ij (t_i - t_i^-1)/(q_i - q_i^-1)", c, ij);

        if (i != j) {
          const int top = 1 - a;
          WVector se(n), sf(n);
          for (int k = 0; k <= top; ++k) {
            WVector te = E(E(E(v, i, top - k), j), i, k);
            WVector tf = F(F(F(v, i, top - k), j), i, k);
            if (k % 2) {
              se -= te;
              sf -= tf;
            } else {
              se += te;
              sf += tf;
            }
          }
          expect(se.is_zero(), "quantum Serre relation for e", c, ij);
          expect(sf.is_zero(), "quantum Serre relation for f", c, ij);
        }
      }
      const int nil = i == n ? 2 : 3;
      WVector ei = v, fi = v;
      for (int k = 0; k < nil; ++k) {
        ei = act_e(ei, i, act);
        fi = act_f(fi, i, act);
      }
      const std::string si = " (i=" + std::to_string(i) + ")";
      expect(ei.is_zero(), "e_i nilpotency", c, si);
      expect(fi.is_zero(), "f_i nilpotency", c, si);
    }
  }
};

}  // namespace

RelationReport verify_defining_relations(int rank, int p, const ColumnActions& actions) {
  if (p < 1 || p > rank) throw std::invalid_argument("need 1 <= p <= n");
  RelationChecker checker{rank, actions, {}};
  for (const auto& c : enumerate_columns(rank, p, false)) {
    try {
      checker.run(c);
    } catch (const InexactDivision& e) {
      checker.expect(false, "exact divided power", c, e.what());
    }
  }
  return checker.report;
}

namespace {

// numerator / denominator, both over Z[q, q^-1]
struct Fraction {
  WVector num;
  LaurentPoly den;
};

WVector power_f(WVector v, int i, int m) {
  for (int k = 0; k < m && !v.is_zero(); ++k) v = act_f(v, i);
  return v;
}

}  // namespace

std::optional<ColumnMask> kashiwara_limit(ColumnMask c, int color, int rank, bool lower) {
  const WVector v = WVector::basis(TabloidKey{c}, rank);
  const int m = h_pairing(key_weight(TabloidKey{c}, rank), color);

  // v = sum_k f^(k) u_k with e u_k = 0
  std::vector<std::pair<int, Fraction>> parts;
  Fraction rest{v, LaurentPoly(1)};
  for (int guard = 0; !rest.num.is_zero(); ++guard) {
    if (guard > 8) throw InternalError("string decomposition does not terminate");
    std::vector<WVector> powers{rest.num};
    while (true) {
      WVector next = act_e(powers.back(), color);
      if (next.is_zero()) break;
      powers.push_back(std::move(next));
    }
    const int l = static_cast<int>(powers.size()) - 1;
    const LaurentPoly fact = quantum_factorial(l, color, rank);
    const LaurentPoly binom = quantum_binomial(m + 2 * l, l, color, rank);
    parts.push_back({l, Fraction{powers[l], rest.den * fact * binom}});
    WVector back = power_f(powers[l], color, l);
    WVector num = rest.num.scaled(fact * fact * binom);
    num -= back;
    rest = Fraction{std::move(num), rest.den * fact * fact * binom};
  }

  // f u_k -> f^(k+1) u_k, e: f^(k) u_k -> f^(k-1) u_k
  std::vector<Fraction> images;
  for (const auto& [k, u] : parts) {
    const int target = lower ? k + 1 : k - 1;
    if (target < 0) continue;
    images.push_back(Fraction{power_f(u.num, color, target), u.den * quantum_factorial(target, color, rank)});
  }
  LaurentPoly den(1);
  for (const auto& f : images) den *= f.den;
  WVector total(rank);
  for (std::size_t k = 0; k < images.size(); ++k) {
    LaurentPoly others(1);
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (j != k) others *= images[j].den;
    }
    total += images[k].num.scaled(others);
  }

  std::optional<ColumnMask> found;
  const int dlow = den.min_exponent();
  const Integer& dlead = den.terms().front().second;
  for (const auto& [key, coeff] : total.terms()) {
    const int low = coeff.min_exponent();
    if (low < dlow) throw InternalError("Kashiwara operator leaves the lattice at column " + to_string(column_of(c, rank)));
    if (low > dlow) continue;
    if (coeff.terms().front().second != dlead || found) {
      throw InternalError("Kashiwara operator is not a basis vector mod q at column " + to_string(column_of(c, rank)));
    }
    found = key.front();
  }
  return found;
}

CrystalReport verify_crystal_compatibility(int rank, int p) {
  CrystalReport report;
  for (const auto& col : enumerate_columns(rank, p, false)) {
    const ColumnMask c = mask_of(col, rank);
    const Word w = col.letters();
    for (int i = 1; i <= rank; ++i) {
      for (bool lower : {true, false}) {
        ++report.checks;
        std::optional<Word> expected = lower ? f_tilde(w, i, rank) : e_tilde(w, i, rank);
        std::optional<Word> got;
        try {
          if (auto r = kashiwara_limit(c, i, rank, lower)) got = column_of(*r, rank).letters();
        } catch (const InternalError& e) {
          if (report.ok) {
            report.ok = false;
            report.detail = e.what();
          }
          continue;
        }
        if (got != expected && report.ok) {
          report.ok = false;
          report.detail = std::string(lower ? "f" : "e") + "_" + std::to_string(i) + " on column " + to_string(col) +
                          ": signature rule gives " + (expected ? to_string(*expected) : std::string("0")) +
                          ", module gives " + (got ? to_string(*got) : std::string("0"));
        }
      }
    }
  }
  return report;
}

}  // namespace symplectica
