#include "symplectica/global_basis.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "symplectica/crystal.hpp"

namespace symplectica {

std::string to_string(const MonomialWord& w) {
  if (w.steps.empty()) return "1";
  std::string out;
  for (const auto& s : w.steps) {
    if (!out.empty()) out += ' ';
    out += 'f' + std::to_string(s.color);
    if (s.exponent != 1) out += "^(" + std::to_string(s.exponent) + ")";
  }
  return out;
}

std::vector<int> e_chain(const MonomialWord& w) {
  std::vector<int> out;
  for (const auto& s : w.steps) out.insert(out.end(), static_cast<std::size_t>(s.exponent), s.color);
  return out;
}

std::optional<Letter> lowest_movable(const Column& c, int rank) {
  for (Letter z : c.letters()) {
    auto p = pred(z, rank);
    if (p && !c.contains(*p)) return z;
  }
  return std::nullopt;
}

MonomialWord marsh_path(const Column& c, int rank) {
  if (!c.valid_for(rank) || !is_admissible(c, rank)) {
    throw std::invalid_argument("column " + to_string(c) + " is not admissible for n = " + std::to_string(rank));
  }
  MonomialWord out;
  Column cur = c;
  while (!cur.is_highest()) {
    auto z = lowest_movable(cur, rank);
    if (!z) throw InternalError("no movable letter in " + to_string(cur));
    if (!z->is_barred()) {
      const int i = z->index() - 1;
      const Letter ib = Letter::barred(i), i1b = Letter::barred(i + 1);
      if (cur.contains(ib) && !cur.contains(i1b)) {
        cur = cur.replaced(*z, Letter::unbarred(i)).replaced(ib, i1b);
        out.steps.push_back({i, 2});
      } else {
        cur = cur.replaced(*z, Letter::unbarred(i));
        out.steps.push_back({i, 1});
      }
    } else if (z->index() == rank) {
      cur = cur.replaced(*z, Letter::unbarred(rank));
      out.steps.push_back({rank, 1});
    } else {
      const int i = z->index();
      cur = cur.replaced(*z, Letter::barred(i + 1));
      out.steps.push_back({i, 1});
    }
    if (!is_admissible(cur, rank)) throw InternalError("Marsh step left the admissible columns at " + to_string(cur));
    if (out.steps.size() > 4u * static_cast<unsigned>(rank * rank) + 8u) throw InternalError("Marsh path does not terminate");
  }
  return out;
}

WVector g_fundamental_closed(const Column& c, int rank) {
  auto adm = admissibility(c, rank);
  if (!c.valid_for(rank) || !adm) {
    throw std::invalid_argument("column " + to_string(c) + " is not admissible for n = " + std::to_string(rank));
  }
  const auto& k = adm->k_letters;
  const auto& l = adm->l_letters;
  WVector out(rank);
  for (unsigned x = 0; x < (1u << k.size()); ++x) {
    std::vector<Letter> letters;
    for (Letter y : c.letters()) {
      auto pos = std::find(k.begin(), k.end(), Letter::unbarred(y.index()));
      if (pos != k.end() && (x >> (pos - k.begin())) & 1u) {
        Letter u = l[static_cast<std::size_t>(pos - k.begin())];
        letters.push_back(y.is_barred() ? u.bar() : u);
      } else {
        letters.push_back(y);
      }
    }
    Tabloid t(std::vector<Column>{Column::from_unsorted(std::move(letters))});
    out.add(key_of(t, rank), LaurentPoly::monomial(std::popcount(x)));
  }
  return out;
}

WVector apply_word(const MonomialWord& w, const Shape& shape) {
  WVector v = WVector::basis(highest_tableau(shape), shape.rank());
  for (auto it = w.steps.rbegin(); it != w.steps.rend(); ++it) v = act_f_divided(v, it->color, it->exponent);
  return v;
}

WVector g_fundamental_monomial(const Column& c, int rank) {
  auto path = marsh_path(c, rank);
  std::vector<int> lam(static_cast<std::size_t>(rank), 0);
  lam[static_cast<std::size_t>(c.height() - 1)] = 1;
  return apply_word(path, Shape(lam));
}

namespace {

// "+" and "-" letters of color i, and the rewrite - -> +
bool is_minus(Letter x, int i, int n) { return signature_sign(x, i, n) < 0; }
bool is_plus(Letter x, int i, int n) { return signature_sign(x, i, n) > 0; }

Letter raise(Letter x, int i, int n) {
  if (i == n) return Letter::unbarred(n);
  return x.is_barred() ? Letter::barred(i + 1) : Letter::unbarred(i);
}

}  // namespace

MonomialWord a_monomial_word(const Tabloid& t, int rank) {
  if (!is_symplectic(t, rank)) throw std::invalid_argument("tableau " + to_string(t) + " is not symplectic");
  MonomialWord out;
  Tabloid cur = t;
  const std::size_t r = cur.columns.size();
  for (std::size_t guard = 0;; ++guard) {
    std::size_t k = r;
    while (k > 0 && cur.columns[k - 1].is_highest()) --k;
    if (k == 0) break;
    if (guard > 64u * r * static_cast<std::size_t>(rank * rank)) throw InternalError("A(T) word does not terminate");

    const Column& ck = cur.columns[k - 1];
    auto x = lowest_movable(ck, rank);
    if (!x) throw InternalError("no movable letter in column " + to_string(ck));
    const int i = x->is_barred() ? x->index() : x->index() - 1;

    Word w = reading(cur);
    std::size_t start = 0;
    for (std::size_t j = r; j > k; --j) start += cur.columns[j - 1].letters().size();
    start += static_cast<std::size_t>(std::find(ck.letters().begin(), ck.letters().end(), *x) - ck.letters().begin());

    std::size_t last = start;
    for (std::size_t p = start; p < w.size() && !is_plus(w[p], i, rank); ++p) {
      if (is_minus(w[p], i, rank)) last = p;
    }
    int count = 0;
    for (std::size_t p = start; p <= last; ++p) {
      if (is_minus(w[p], i, rank)) {
        w[p] = raise(w[p], i, rank);
        ++count;
      }
    }

    Tabloid next;
    next.columns.resize(r);
    std::size_t pos = 0;
    for (std::size_t j = r; j-- > 0;) {
      const std::size_t h = cur.columns[j].letters().size();
      try {
        next.columns[j] = Column(Word(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos + h)));
      } catch (const std::invalid_argument&) {
        throw InternalError("A(T) step produced an unsorted column from " + to_string(cur));
      }
      pos += h;
    }
    if (!is_symplectic(next, rank)) {
      throw InternalError("A(T) step produced the non-symplectic " + to_string(next) + " from " + to_string(cur));
    }
    out.steps.push_back({i, count});
    cur = std::move(next);
  }
  return out;
}

WVector a_vector(const Tabloid& t, int rank) {
  Shape shape(std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (const auto& c : t.columns) {
    if (c.height() < 1 || c.height() > rank) throw std::invalid_argument("column height out of range");
    shape.lambda[static_cast<std::size_t>(c.height() - 1)] += 1;
  }
  return apply_word(a_monomial_word(t, rank), shape);
}

LaurentPoly BasisMatrix::at(std::size_t row, std::size_t col) const {
  const auto& e = entries.at(col);
  auto it = std::lower_bound(e.begin(), e.end(), row, [](const auto& a, std::size_t r) { return a.first < r; });
  return it != e.end() && it->first == row ? it->second : LaurentPoly{};
}

BasisMatrix BasisMatrix::reversed() const {
  BasisMatrix out = *this;
  std::reverse(out.rows.begin(), out.rows.end());
  std::reverse(out.columns.begin(), out.columns.end());
  std::reverse(out.entries.begin(), out.entries.end());
  const std::size_t last = rows.empty() ? 0 : rows.size() - 1;
  for (auto& col : out.entries) {
    for (auto& [r, d] : col) r = last - r;
    std::reverse(col.begin(), col.end());
  }
  out.descending = !descending;
  return out;
}

namespace {

template <class F>
void parallel_for(std::size_t count, unsigned jobs, F&& body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (jobs <= 1) {
    for (std::size_t k = 0; k < count; ++k) body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) {
    pool.emplace_back([&] {
      for (std::size_t k; (k = next++) < count;) {
        try {
          body(k);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

bool key_le(const TabloidKey& a, const TabloidKey& b) { return !KeyLess{}(b, a); }

}  // namespace

CanonicalBasis canonical_basis(const Shape& shape, const Weight& weight, const BasisOptions& opts) {
  const int n = shape.rank();
  if (weight.rank() != n) throw std::invalid_argument("weight and shape have different ranks");
  CanonicalBasis out;
  BasisMatrix& m = out.matrix;
  m.rank = n;
  m.shape = shape;
  m.weight = weight;
  m.columns = enumerate_tabloids(shape, weight, true);
  const std::size_t t = m.columns.size();

  std::vector<TabloidKey> keys;
  for (const auto& c : m.columns) keys.push_back(key_of(c, n));

  out.a_words.resize(t);
  out.a_vectors.resize(t);
  parallel_for(t, opts.jobs, [&](std::size_t k) {
    out.a_words[k] = a_monomial_word(m.columns[k], n);
    out.a_vectors[k] = apply_word(out.a_words[k], shape);
  });

  for (std::size_t k = 0; k < t; ++k) {
    const WVector& a = out.a_vectors[k];
    if (a.coefficient(keys[k]) != LaurentPoly(1)) {
      throw InternalError("A(T) has coefficient " + to_string(a.coefficient(keys[k])) + " on T = " + to_string(m.columns[k]));
    }
    for (const auto& [key, c] : a.terms()) {
      if (!c.has_nonnegative_coefficients() || !key_le(key, keys[k])) {
        throw InternalError("A(T) for T = " + to_string(m.columns[k]) + " has coefficient " + to_string(c) + " on " +
                            to_string(tabloid_of(key, n)));
      }
    }
  }

  out.g_vectors.reserve(t);
  out.beta.assign(t, std::vector<LaurentPoly>(t));
  for (std::size_t k = 0; k < t; ++k) {
    WVector g = out.a_vectors[k];
    std::vector<LaurentPoly> b(t);
    b[k] = 1;
    for (std::size_t j = k; j-- > 0;) {
      LaurentPoly c = g.coefficient(keys[j]);
      if (c.is_zero()) continue;
      LaurentPoly gamma = fold_bar_symmetric(c);
      if (gamma.is_zero()) continue;
      g.subtract_scaled(gamma, out.g_vectors[j]);
      for (std::size_t s = 0; s <= j; ++s) {
        if (!out.beta[s][j].is_zero()) b[s] -= gamma * out.beta[s][j];
      }
    }
    for (const auto& [key, c] : g.terms()) {
      const bool diag = key == keys[k];
      const bool ok = diag ? c == LaurentPoly(1) : c.is_polynomial() && c.coefficient(0) == 0;
      if (!ok || !key_le(key, keys[k])) {
        throw InternalError("G(T) for T = " + to_string(m.columns[k]) + " has coefficient " + to_string(c) + " on " +
                            to_string(tabloid_of(key, n)));
      }
    }
    if (g.coefficient(keys[k]) != LaurentPoly(1)) throw InternalError("G(T) misses T = " + to_string(m.columns[k]));
    for (std::size_t s = 0; s < t; ++s) out.beta[s][k] = std::move(b[s]);
    out.g_vectors.push_back(std::move(g));
  }

  std::set<TabloidKey, KeyLess> row_keys;
  if (opts.all_rows) {
    for (const auto& r : enumerate_tabloids(shape, weight, false)) row_keys.insert(key_of(r, n));
  } else {
    for (const auto& g : out.g_vectors) {
      for (const auto& [key, c] : g.terms()) row_keys.insert(key);
    }
  }
  std::map<TabloidKey, std::size_t, KeyLess> index;
  for (const auto& key : row_keys) {
    index.emplace(key, m.rows.size());
    m.rows.push_back(tabloid_of(key, n));
  }
  m.entries.resize(t);
  for (std::size_t k = 0; k < t; ++k) {
    for (const auto& [key, c] : out.g_vectors[k].terms()) m.entries[k].emplace_back(index.at(key), c);
  }
  return out;
}

PropertyReport check_properties(const CanonicalBasis& b) {
  PropertyReport rep;
  auto fail = [&](const std::string& what) {
    if (rep.ok) rep.detail = what;
    rep.ok = false;
  };
  const BasisMatrix& m = b.matrix;
  const std::size_t t = m.columns.size();
  const int n = m.rank;
  for (std::size_t k = 0; k < t; ++k) {
    const Tabloid& tk = m.columns[k];
    const auto& key = key_of(tk, n);
    // D
    bool diag_seen = false;
    for (const auto& [r, d] : m.entries[k]) {
      ++rep.checks;
      const Tabloid& tau = m.rows[r];
      if (!d.is_polynomial()) fail("d not in Z[q] at " + to_string(tau) + ", " + to_string(tk));
      if (lex_compare(tau, tk) > 0) fail("support above T at " + to_string(tau) + ", " + to_string(tk));
      if (weight(tau, n) != weight(tk, n)) fail("weight mismatch at " + to_string(tau));
      if (tau == tk) {
        diag_seen = true;
        if (d != LaurentPoly(1)) fail("d_TT != 1 at " + to_string(tk));
      } else if (d.coefficient(0) != 0) {
        fail("d(0) != 0 at " + to_string(tau) + ", " + to_string(tk));
      }
    }
    if (!diag_seen) fail("d_TT missing at " + to_string(tk));
    // A
    ++rep.checks;
    if (b.a_vectors[k].coefficient(key) != LaurentPoly(1)) fail("alpha_TT != 1 at " + to_string(tk));
    for (const auto& [tau, c] : b.a_vectors[k].terms()) {
      ++rep.checks;
      if (!c.has_nonnegative_coefficients()) fail("alpha not in N[q,q^-1] at " + to_string(tk));
      if (KeyLess{}(key, tau)) fail("A(T) support above T at " + to_string(tk));
    }
    // beta
    WVector recombined(n);
    for (std::size_t s = 0; s < t; ++s) {
      ++rep.checks;
      const LaurentPoly& beta = b.beta[s][k];
      if (s > k && !beta.is_zero()) fail("beta not upper triangular at " + to_string(tk));
      if (s == k && beta != LaurentPoly(1)) fail("beta_TT != 1 at " + to_string(tk));
      if (bar(beta) != beta) fail("beta not bar-fixed at " + to_string(m.columns[s]) + ", " + to_string(tk));
      recombined += b.a_vectors[s].scaled(beta);
    }
    ++rep.checks;
    if (recombined != b.g_vectors[k]) fail("sum beta A != G at " + to_string(tk));
  }
  return rep;
}

std::vector<Weight> weight_classes(const Shape& shape) {
  std::set<Weight> out;
  for (const auto& t : enumerate_tabloids(shape, std::nullopt, true)) out.insert(weight(t, shape.rank()));
  return {out.rbegin(), out.rend()};
}

}  // namespace symplectica
