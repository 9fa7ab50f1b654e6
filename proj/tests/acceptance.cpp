// Acceptance suite: one PASS/FAIL line per criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "symplectica/crystal.hpp"
#include "symplectica/global_basis.hpp"
#include "symplectica/io.hpp"
#include "symplectica/weyl.hpp"

using namespace symplectica;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.ok && secs > budget_s) {
    r.ok = false;
    r.detail += " (over the " + std::to_string(budget_s) + " s budget)";
  }
  if (!r.ok) ++failures;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", secs);
  std::cout << (r.ok ? "PASS" : "FAIL") << "  " << id << "  " << name << "  [" << buf << "]  " << r.detail << std::endl;
}

std::string run(const std::string& cmd) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t k = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), k);
  return out;
}

WVector column_vector(const std::vector<std::pair<std::string, int>>& terms, int n) {
  WVector v(n);
  for (const auto& [col, e] : terms) v.add(key_of(Tabloid(std::vector<Column>{parse_column(col)}), n), LaurentPoly::monomial(e));
  return v;
}

// Reduce v against the unitriangular family a (a[k] has 1 on keys[k], support below).
WVector residual(WVector v, const std::vector<WVector>& a, const std::vector<TabloidKey>& keys) {
  for (std::size_t k = keys.size(); k-- > 0;) {
    LaurentPoly c = v.coefficient(keys[k]);
    if (!c.is_zero()) v.subtract_scaled(c, a[k]);
  }
  return v;
}

CanonicalBasis golden_basis;
CanonicalBasis sp8_basis;

}  // namespace

int main() {
  std::cout << "acceptance suite" << std::endl;

  criterion(1, "closed form G(C), C = (3,5,6,6b,5b,3b), n = 6", 1.0, [] {
    std::string out = run(std::string(SYMPLECTICA_CLI) + " gfund -n 6 -c 3,5,6,6b,5b,3b --format json");
    auto j = json::parse(out);
    if (j.size() != 1) return Outcome{false, "expected one expansion"};
    WVector g = wvector_from_json(j[0].at("g"), 6);
    WVector expected = column_vector({{"3,5,6,6b,5b,3b", 0},
                                      {"2,5,6,6b,5b,2b", 1},
                                      {"3,4,6,6b,4b,3b", 1},
                                      {"1,3,5,5b,3b,1b", 1},
                                      {"2,4,6,6b,4b,2b", 2},
                                      {"1,2,5,5b,2b,1b", 2},
                                      {"1,3,4,4b,3b,1b", 2},
                                      {"1,2,4,4b,2b,1b", 3}},
                                     6);
    return Outcome{g == expected, std::to_string(g.size()) + " terms, coefficients 1, q x3, q^2 x3, q^3"};
  });

  criterion(2, "Marsh path of (2b,1b), n = 3", 1.0, [] {
    auto p = marsh_path(parse_column("2b,1b"), 3);
    auto chain = e_chain(p);
    bool ok = chain == std::vector<int>{2, 3, 2, 1, 1, 2, 3, 2};
    return Outcome{ok, to_string(p)};
  });

  criterion(3, "A(T) word of (2,3,3b)(2,3b)(3), n = 3", 1.0, [] {
    auto w = a_monomial_word(parse_tabloid("2,3,3b|2,3b|3"), 3);
    bool ok = w == MonomialWord{{{2, 1}, {1, 3}, {3, 1}, {2, 2}, {3, 1}}};
    return Outcome{ok, to_string(w)};
  });

  criterion(4, "golden matrix n = 3, lambda = (1,1,2), weight (0,-3,0)", 60.0, [] {
    std::ifstream in(std::string(SYMPLECTICA_DATA_DIR) + "/sp6_1_1_2_weight_0_-3_0.json");
    if (!in) return Outcome{false, "golden file missing"};
    json g = json::parse(in);
    const int n = g.at("rank").get<int>();
    Shape shape(g.at("lambda").get<std::vector<int>>());
    Weight wt(g.at("weight").get<std::vector<int>>());
    golden_basis = canonical_basis(shape, wt, BasisOptions{2, false});
    BasisMatrix m = golden_basis.matrix.reversed();

    std::vector<Tabloid> cols, rows;
    for (const auto& c : g.at("columns")) cols.push_back(parse_tabloid(c.get<std::string>()));
    for (const auto& r : g.at("rows")) rows.push_back(parse_tabloid(r.get<std::string>()));
    if (cols != m.columns) return Outcome{false, "column labels differ"};
    if (rows != m.rows) return Outcome{false, "row labels differ"};

    std::map<std::pair<std::size_t, std::size_t>, LaurentPoly> transcribed;
    for (const auto& e : g.at("entries")) {
      transcribed[{e[0].get<std::size_t>(), e[1].get<std::size_t>()}] = parse_laurent(e[2].get<std::string>());
    }
    auto curated = transcribed;

    // each erratum: the transcribed column is not a vector of V(lambda)
    std::vector<TabloidKey> keys;
    std::vector<WVector> a;
    for (std::size_t k = 0; k < golden_basis.matrix.columns.size(); ++k) {
      keys.push_back(key_of(golden_basis.matrix.columns[k], n));
      a.push_back(golden_basis.a_vectors[k]);
    }
    std::map<std::size_t, std::vector<std::size_t>> errata_rows;
    for (const auto& e : g.at("errata")) {
      const auto r = e.at("row").get<std::size_t>(), c = e.at("col").get<std::size_t>();
      if (to_string(transcribed[{r, c}]) != e.at("transcribed").get<std::string>()) return Outcome{false, "errata list out of sync"};
      curated[{r, c}] = parse_laurent(e.at("corrected").get<std::string>());
      errata_rows[c].push_back(r);
    }
    for (const auto& [c, rs] : errata_rows) {
      WVector v(n);
      for (const auto& [rc, d] : transcribed) {
        if (rc.second == c) v.add(key_of(rows[rc.first], n), d);
      }
      WVector res = residual(v, a, keys);
      for (std::size_t r : rs) {
        if (res.coefficient(key_of(rows[r], n)).is_zero()) {
          return Outcome{false, "transcribed column " + std::to_string(c + 1) + " is consistent at row " + std::to_string(r)};
        }
      }
    }

    std::size_t compared = 0, bad = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        ++compared;
        auto it = curated.find({r, c});
        LaurentPoly want = it == curated.end() ? LaurentPoly{} : it->second;
        if (m.at(r, c) != want) ++bad;
      }
    }
    std::size_t bold = 0;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      auto pos = std::find(rows.begin(), rows.end(), cols[c]);
      if (pos != rows.end() && m.at(static_cast<std::size_t>(pos - rows.begin()), c) == LaurentPoly(1)) ++bold;
    }
    std::ostringstream os;
    os << rows.size() << " x " << cols.size() << ", " << compared - bad << "/" << compared << " entries equal, " << bold
       << " unit diagonal rows, " << g.at("errata").size() << " transcribed entries replaced (each shown outside V(lambda))";
    return Outcome{bad == 0 && bold == 12 && cols.size() == 12, os.str()};
  });

  criterion(5, "negative coefficient, n = 4, lambda = 2 Lambda_4, zero weight", 30.0, [] {
    sp8_basis = canonical_basis(Shape({0, 0, 0, 2}), Weight::zero(4), BasisOptions{2, false});
    const auto& m = sp8_basis.matrix;
    auto pos = std::find(m.columns.begin(), m.columns.end(), parse_tabloid("1,3,4,4b|4,4b,3b,1b"));
    if (pos == m.columns.end()) return Outcome{false, "T is not among the symplectic tableaux"};
    const auto col = static_cast<std::size_t>(pos - m.columns.begin());
    std::vector<std::string> negative;
    bool exact = true;
    for (const auto& [r, d] : m.entries[col]) {
      bool neg = false;
      for (const auto& [e, c] : d.terms()) neg = neg || c < 0;
      if (!neg) continue;
      negative.push_back(to_string(m.rows[r]));
      exact = exact && d == -LaurentPoly::monomial(4);
    }
    std::sort(negative.begin(), negative.end());
    std::vector<std::string> expected = {to_string(parse_tabloid("1,4,3b,2b|2,3,4b,1b")), to_string(parse_tabloid("2,3,4b,1b|1,4,3b,2b"))};
    std::sort(expected.begin(), expected.end());
    std::string detail = "-q^4 at";
    for (const auto& s : negative) detail += " (" + s + ")";
    return Outcome{exact && negative == expected, detail};
  });

  criterion(6, "closed form = monomial route, every admissible column, n <= 4", 120.0, [] {
    std::size_t total = 0, bad = 0;
    for (int n = 1; n <= 4; ++n) {
      for (int p = 1; p <= n; ++p) {
        for (const auto& c : enumerate_columns(n, p, true)) {
          ++total;
          if (g_fundamental_closed(c, n) != g_fundamental_monomial(c, n)) ++bad;
        }
      }
    }
    return Outcome{bad == 0, std::to_string(total) + " columns, " + std::to_string(bad) + " mismatches"};
  });

  criterion(7, "defining relations on W(Lambda_p), p <= n, n = 2, 3, 4", 120.0, [] {
    std::size_t checks = 0;
    for (int n = 2; n <= 4; ++n) {
      if (1 - cartan(n - 1, n, n) != 3) return Outcome{false, "Serre exponent at (n-1, n) is not 3"};
      for (int p = 1; p <= n; ++p) {
        auto r = verify_defining_relations(n, p);
        checks += r.checks;
        if (!r.ok) {
          return Outcome{false, r.relation + r.detail + " fails on " + (r.witness ? to_string(*r.witness) : std::string("?"))};
        }
      }
    }
    ColumnActions broken;
    broken.f = [](ColumnMask c, int i, int n) {
      auto img = act_f_column(c, i, n);
      for (auto& t : img.terms) {
        if (t.q_exponent == -1) t.q_exponent = 1;
      }
      return img;
    };
    auto r = verify_defining_relations(3, 2, broken);
    if (r.ok || !r.witness) return Outcome{false, "perturbed action not detected"};
    return Outcome{true, std::to_string(checks) + " relation instances, 0 violations; perturbed action caught on " + to_string(*r.witness)};
  });

  criterion(8, "|ST(n, lambda)| = Weyl dimension, n <= 3, |lambda| <= 3", 120.0, [] {
    std::size_t cases = 0, bad = 0;
    for (int n = 1; n <= 3; ++n) {
      std::vector<int> lam(static_cast<std::size_t>(n), 0);
      std::function<void(int, int)> rec = [&](int i, int budget) {
        if (i == n) {
          ++cases;
          Shape s(lam);
          if (weyl_dimension(lam) != enumerate_tabloids(s, std::nullopt, true).size()) ++bad;
          return;
        }
        for (int m = 0; m <= budget; ++m) {
          lam[static_cast<std::size_t>(i)] = m;
          rec(i + 1, budget - m);
        }
        lam[static_cast<std::size_t>(i)] = 0;
      };
      rec(0, 3);
    }
    bool spot = weyl_dimension({0, 1, 0}) == 14;
    return Outcome{bad == 0 && spot, std::to_string(cases) + " weights, " + std::to_string(bad) + " mismatches, dim V(Lambda_2) = 14"};
  });

  criterion(9, "basis theorems on the matrices of criteria 4 and 5", 10.0, [] {
    if (golden_basis.matrix.columns.empty() || sp8_basis.matrix.columns.empty()) return Outcome{false, "criteria 4/5 produced no data"};
    auto a = check_properties(golden_basis);
    auto b = check_properties(sp8_basis);
    std::string detail = std::to_string(a.checks + b.checks) + " assertions";
    if (!a.ok) detail += "; " + a.detail;
    if (!b.ok) detail += "; " + b.detail;
    return Outcome{a.ok && b.ok, detail};
  });

  criterion(10, "q -> 0 limit of the module action = signature rule, n <= 3", 60.0, [] {
    std::size_t checks = 0;
    for (int n = 1; n <= 3; ++n) {
      for (int p = 1; p <= n; ++p) {
        auto r = verify_crystal_compatibility(n, p);
        checks += r.checks;
        if (!r.ok) return Outcome{false, r.detail};
      }
    }
    return Outcome{true, std::to_string(checks) + " (column, color, e/f) cases, 0 mismatches"};
  });

  std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << std::endl;
  return failures ? 1 : 0;
}
