#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "symplectica/crystal.hpp"

using namespace symplectica;

namespace {

Word W(std::initializer_list<int> codes) {
  Word w;
  for (int c : codes) w.emplace_back(c);
  return w;
}

// Iterated application count, independent of the signature statistics.
int count_e(Word w, int i, int n) {
  int k = 0;
  while (auto next = e_tilde(w, i, n)) {
    w = *next;
    ++k;
  }
  return k;
}

Word random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> idx(1, n), bar(0, 1);
  Word w;
  for (int k = 0; k < len; ++k) w.emplace_back(bar(rng) ? -idx(rng) : idx(rng));
  return w;
}

}  // namespace

TEST_CASE("signature rule") {
  auto s = signature_reduce(W({2, 3}), 2, 3);
  CHECK(s.minus.empty());
  CHECK(s.plus.empty());
  s = signature_reduce(W({1}), 1, 3);
  CHECK(s.minus.empty());
  CHECK(s.plus.size() == 1);
  s = signature_reduce(W({-3, 3}), 3, 3);
  CHECK(s.minus.size() == 1);
  CHECK(s.plus.size() == 1);
}

TEST_CASE("f_tilde and e_tilde") {
  CHECK(f_tilde(W({3}), 3, 3) == W({-3}));
  CHECK(f_tilde(W({1}), 1, 2) == W({2}));
  auto top = W({1, 1, 2, 1, 2, 3});
  for (int i = 1; i <= 3; ++i) CHECK_FALSE(e_tilde(top, i, 3).has_value());

  // the Marsh chain for (2b,1b), n = 3
  std::vector<std::pair<int, Word>> chain = {
      {2, W({-3, -1})}, {3, W({3, -1})}, {2, W({2, -1})}, {1, W({1, -2})},
      {2, W({1, -3})},  {3, W({1, 3})},  {2, W({1, 2})}};
  Word cur = W({-2, -1});
  for (std::size_t k = 0; k < chain.size(); ++k) {
    int times = k == 3 ? 2 : 1;
    auto next = e_tilde_power(cur, chain[k].first, times, 3);
    REQUIRE(next.has_value());
    CHECK(*next == chain[k].second);
    cur = *next;
  }
}

TEST_CASE("epsilon, phi and weights") {
  CHECK(phi(W({1}), 1, 3) == 1);
  CHECK(epsilon(W({1}), 1, 3) == 0);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 2 + trial % 3;
    auto w = random_word(rng, n, 1 + trial % 7);
    auto wt = lambda_coordinates(content_of(w, n));
    for (int i = 1; i <= n; ++i) {
      CHECK(wt[static_cast<std::size_t>(i - 1)] == phi(w, i, n) - epsilon(w, i, n));
      CHECK(epsilon(w, i, n) == count_e(w, i, n));
      if (auto f = f_tilde(w, i, n)) {
        CHECK(e_tilde(*f, i, n) == w);
        auto c0 = content_of(w, n).content, c1 = content_of(*f, n).content;
        if (i < n) {
          c0[static_cast<std::size_t>(i - 1)] -= 1;
          c0[static_cast<std::size_t>(i)] += 1;
        } else {
          c0[static_cast<std::size_t>(n - 1)] -= 2;
        }
        CHECK(c0 == c1);
      }
      if (auto e = e_tilde(w, i, n)) CHECK(f_tilde(*e, i, n) == w);
    }
  }
}

TEST_CASE("crystal components") {
  for (int n = 1; n <= 4; ++n) {
    auto g = connected_component(W({1}), n);
    CHECK(g.vertices.size() == static_cast<std::size_t>(2 * n));
    CHECK(g.arrows.size() == static_cast<std::size_t>(2 * n - 1));
  }
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> lam(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int budget) {
      if (i == n) {
        Shape s(lam);
        if (s.columns() == 0) return;
        auto g = connected_component(reading(highest_tableau(s)), n);
        std::set<Word> from_graph(g.vertices.begin(), g.vertices.end());
        std::set<Word> from_st;
        for (const auto& t : enumerate_tabloids(s, std::nullopt, true)) from_st.insert(reading(t));
        CHECK(from_graph == from_st);
        return;
      }
      for (int m = 0; m <= budget; ++m) {
        lam[static_cast<std::size_t>(i)] = m;
        rec(i + 1, budget - m);
      }
      lam[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, 4);
  }
  auto g = connected_component(reading(highest_tableau(Shape({1, 1, 2}))), 3);
  CHECK(g.vertices.size() == enumerate_tabloids(Shape({1, 1, 2}), std::nullopt, true).size());
  CHECK(to_dot(connected_component(W({1}), 1)) ==
        "digraph crystal {\n  v0 [label=\"1\"];\n  v1 [label=\"1b\"];\n  v0 -> v1 [label=\"1\"];\n}\n");
}
