#include "symplectica/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace symplectica {

namespace {

void normalize(std::vector<LaurentPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<LaurentPoly::Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().first == t.first) {
      merged.back().second += t.second;
    } else {
      merged.push_back(std::move(t));
    }
    if (!merged.empty() && merged.back().second == 0) merged.pop_back();
  }
  terms = std::move(merged);
}

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace_back(0, Integer(constant));
}

LaurentPoly::LaurentPoly(std::vector<Term> terms) : terms_(std::move(terms)) {
  normalize(terms_);
}

LaurentPoly LaurentPoly::monomial(int exponent, Integer coefficient) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.emplace_back(exponent, std::move(coefficient));
  return p;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
  return terms_.back().first;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.second > 0; });
}

bool LaurentPoly::is_polynomial() const {
  return terms_.empty() || terms_.front().first >= 0;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.first += shift;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, int sign) {
  if (other.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.emplace_back(b->first, sign > 0 ? b->second : Integer(-b->second));
      ++b;
    } else {
      Integer c = a->second;
      if (sign > 0) c += b->second; else c -= b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.size() == 1) {
    LaurentPoly out = a;
    for (auto& t : out.terms_) {
      t.first += b.terms_[0].first;
      t.second *= b.terms_[0].second;
    }
    return out;
  }
  if (a.size() == 1) return b * a;
  const int lo = a.min_exponent() + b.min_exponent();
  const int hi = a.max_exponent() + b.max_exponent();
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      dense[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    }
  }
  LaurentPoly out;
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (dense[k] != 0) out.terms_.emplace_back(lo + static_cast<int>(k), std::move(dense[k]));
  }
  return out;
}

LaurentPoly bar(const LaurentPoly& a) {
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(a.size());
  for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
    terms.emplace_back(-it->first, it->second);
  }
  return LaurentPoly(std::move(terms));
}

int q_scale(int color, int rank) { return color == rank ? 2 : 1; }

LaurentPoly quantum_int(int m, int color, int rank) {
  if (m < 0) throw std::invalid_argument("quantum_int: negative argument");
  if (color < 1 || color > rank) throw std::invalid_argument("quantum_int: color out of range");
  const int s = q_scale(color, rank);
  std::vector<LaurentPoly::Term> terms;
  for (int k = 0; k < m; ++k) terms.emplace_back(s * (m - 1 - 2 * k), 1);
  return LaurentPoly(std::move(terms));
}

LaurentPoly quantum_int_signed(int m, int color, int rank) {
  return m >= 0 ? quantum_int(m, color, rank) : -quantum_int(-m, color, rank);
}

LaurentPoly quantum_factorial(int m, int color, int rank) {
  if (m < 0) throw std::invalid_argument("quantum_factorial: negative argument");
  LaurentPoly out(1);
  for (int k = 2; k <= m; ++k) out *= quantum_int(k, color, rank);
  return out;
}

LaurentPoly quantum_binomial(int top, int k, int color, int rank) {
  if (k < 0 || k > top) throw std::invalid_argument("quantum_binomial: k out of range");
  LaurentPoly num(1);
  for (int j = 1; j <= k; ++j) num *= quantum_int(top - j + 1, color, rank);
  return exact_divide(num, quantum_factorial(k, color, rank));
}

std::optional<LaurentPoly> try_exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  if (a.is_zero()) return LaurentPoly{};
  const int low_b = b.min_exponent();
  const Integer& lead = b.terms().front().second;
  const int max_q = a.max_exponent() - b.max_exponent();
  LaurentPoly rest = a;
  std::vector<LaurentPoly::Term> quotient;
  while (!rest.is_zero()) {
    const auto& [er, cr] = rest.terms().front();
    const int e = er - low_b;
    if (e > max_q) return std::nullopt;
    if (cr % lead != 0) return std::nullopt;
    LaurentPoly t = LaurentPoly::monomial(e, cr / lead);
    quotient.emplace_back(e, cr / lead);
    rest -= t * b;
  }
  return LaurentPoly(std::move(quotient));
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  auto c = try_exact_divide(a, b);
  if (!c) throw InexactDivision("inexact division: (" + to_string(a) + ") / (" + to_string(b) + ")");
  return *std::move(c);
}

LaurentPoly fold_bar_symmetric(const LaurentPoly& a) {
  std::vector<LaurentPoly::Term> terms;
  for (const auto& [e, c] : a.terms()) {
    if (e > 0) break;
    terms.emplace_back(e, c);
    if (e < 0) terms.emplace_back(-e, c);
  }
  return LaurentPoly(std::move(terms));
}

std::string to_string(const LaurentPoly& a) {
  if (a.is_zero()) return ".";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : a.terms()) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (c < 0) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str();
    out += "q";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly parse_laurent(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '{' && ch != '}') s += ch;
  }
  if (s.empty() || s == "." || s == "0") return {};
  std::vector<LaurentPoly::Term> terms;
  std::size_t pos = 0;
  auto fail = [&] { throw std::invalid_argument("cannot parse Laurent polynomial: " + std::string(text)); };
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!terms.empty()) {
      fail();
    }
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    Integer coeff = pos > start ? Integer(s.substr(start, pos - start)) : Integer(1);
    int exponent = 0;
    if (pos < s.size() && s[pos] == 'q') {
      ++pos;
      exponent = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::size_t es = pos;
        if (pos < s.size() && s[pos] == '-') ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == es || (pos == es + 1 && s[es] == '-')) fail();
        exponent = std::stoi(s.substr(es, pos - es));
      }
    } else if (pos == start) {
      fail();
    }
    terms.emplace_back(exponent, sign * coeff);
  }
  return LaurentPoly(std::move(terms));
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& a) { return os << to_string(a); }

}  // namespace symplectica
