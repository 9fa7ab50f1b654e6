// Kashiwara operators on words over C_n (signature rule) and crystal graphs.

#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "symplectica/combinatorics.hpp"

namespace symplectica {

/// +1 if x is a "+" letter for color i (i or (i+1)bar; n for i = n),
/// -1 if a "-" letter (i+1 or ibar; nbar for i = n), 0 otherwise.
int signature_sign(Letter x, int color, int rank);

/// Surviving symbols after cancelling every "+-" factor: positions in the
/// original word, pattern -^r +^s.
struct Signature {
  std::vector<std::size_t> minus;
  std::vector<std::size_t> plus;
};

Signature signature_reduce(const Word& w, int color, int rank);

std::optional<Word> f_tilde(const Word& w, int color, int rank);
std::optional<Word> e_tilde(const Word& w, int color, int rank);
/// f_tilde applied `times` times; nullopt as soon as one application vanishes.
std::optional<Word> f_tilde_power(Word w, int color, int times, int rank);
std::optional<Word> e_tilde_power(Word w, int color, int times, int rank);

int epsilon(const Word& w, int color, int rank);
int phi(const Word& w, int color, int rank);

/// Λ-coordinates of the content of w: m_i = c_i - c_{i+1}, m_n = c_n.
std::vector<int> lambda_coordinates(const Weight& w);

struct CrystalGraph {
  int rank = 0;
  std::vector<Word> vertices;                                   // BFS order from the seed
  std::vector<std::tuple<std::size_t, int, std::size_t>> arrows;  // (a, i, b) with f_i(a) = b

  std::optional<std::size_t> find(const Word& w) const;
};

/// Closure of the seed under all e_tilde and f_tilde.
CrystalGraph connected_component(const Word& seed, int rank);

std::string to_dot(const CrystalGraph& g);

}  // namespace symplectica
