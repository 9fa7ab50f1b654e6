#include "symplectica/crystal.hpp"

#include <deque>
#include <map>

namespace symplectica {

namespace {

void check_color(int color, int rank) {
  if (color < 1 || color > rank) throw std::invalid_argument("color out of range");
}

Letter partner_down(Letter x, int color, int rank) {
  // + letter -> its - partner
  if (color == rank) return Letter::barred(rank);
  return x.is_barred() ? Letter::barred(color) : Letter::unbarred(color + 1);
}

Letter partner_up(Letter x, int color, int rank) {
  if (color == rank) return Letter::unbarred(rank);
  return x.is_barred() ? Letter::barred(color + 1) : Letter::unbarred(color);
}

}  // namespace

int signature_sign(Letter x, int color, int rank) {
  if (color == rank) {
    if (x == Letter::unbarred(rank)) return 1;
    if (x == Letter::barred(rank)) return -1;
    return 0;
  }
  if (x == Letter::unbarred(color) || x == Letter::barred(color + 1)) return 1;
  if (x == Letter::unbarred(color + 1) || x == Letter::barred(color)) return -1;
  return 0;
}

Signature signature_reduce(const Word& w, int color, int rank) {
  check_color(color, rank);
  Signature s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    int sign = signature_sign(w[k], color, rank);
    if (sign > 0) {
      s.plus.push_back(k);
    } else if (sign < 0) {
      if (!s.plus.empty()) {
        s.plus.pop_back();
      } else {
        s.minus.push_back(k);
      }
    }
  }
  return s;
}

std::optional<Word> f_tilde(const Word& w, int color, int rank) {
  auto s = signature_reduce(w, color, rank);
  if (s.plus.empty()) return std::nullopt;
  Word out = w;
  auto pos = s.plus.front();
  out[pos] = partner_down(out[pos], color, rank);
  return out;
}

std::optional<Word> e_tilde(const Word& w, int color, int rank) {
  auto s = signature_reduce(w, color, rank);
  if (s.minus.empty()) return std::nullopt;
  Word out = w;
  auto pos = s.minus.back();
  out[pos] = partner_up(out[pos], color, rank);
  return out;
}

std::optional<Word> f_tilde_power(Word w, int color, int times, int rank) {
  for (int k = 0; k < times; ++k) {
    auto next = f_tilde(w, color, rank);
    if (!next) return std::nullopt;
    w = std::move(*next);
  }
  return w;
}

std::optional<Word> e_tilde_power(Word w, int color, int times, int rank) {
  for (int k = 0; k < times; ++k) {
    auto next = e_tilde(w, color, rank);
    if (!next) return std::nullopt;
    w = std::move(*next);
  }
  return w;
}

int epsilon(const Word& w, int color, int rank) {
  return static_cast<int>(signature_reduce(w, color, rank).minus.size());
}

int phi(const Word& w, int color, int rank) {
  return static_cast<int>(signature_reduce(w, color, rank).plus.size());
}

std::vector<int> lambda_coordinates(const Weight& w) {
  std::vector<int> out(w.content.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = i + 1 < out.size() ? w.content[i] - w.content[i + 1] : w.content[i];
  }
  return out;
}

std::optional<std::size_t> CrystalGraph::find(const Word& w) const {
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (vertices[k] == w) return k;
  }
  return std::nullopt;
}

CrystalGraph connected_component(const Word& seed, int rank) {
  for (Letter x : seed) {
    if (!x.valid_for(rank)) throw std::invalid_argument("seed letter outside C_n");
  }
  CrystalGraph g;
  g.rank = rank;
  std::map<Word, std::size_t> index;
  std::deque<std::size_t> queue;
  auto visit = [&](const Word& w) {
    auto [it, fresh] = index.emplace(w, g.vertices.size());
    if (fresh) {
      g.vertices.push_back(w);
      queue.push_back(it->second);
    }
    return it->second;
  };
  visit(seed);
  while (!queue.empty()) {
    std::size_t a = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rank; ++i) {
      if (auto b = f_tilde(g.vertices[a], i, rank)) {
        std::size_t bi = visit(*b);
        g.arrows.emplace_back(a, i, bi);
      }
      if (auto b = e_tilde(g.vertices[a], i, rank)) visit(*b);
    }
  }
  return g;
}

std::string to_dot(const CrystalGraph& g) {
  std::string out = "digraph crystal {\n";
  for (std::size_t k = 0; k < g.vertices.size(); ++k) {
    out += "  v" + std::to_string(k) + " [label=\"" + to_string(g.vertices[k]) + "\"];\n";
  }
  for (const auto& [a, i, b] : g.arrows) {
    out += "  v" + std::to_string(a) + " -> v" + std::to_string(b) + " [label=\"" + std::to_string(i) + "\"];\n";
  }
  return out + "}\n";
}

}  // namespace symplectica
