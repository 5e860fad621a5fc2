#include "wedge/pi1.hpp"

#include <map>
#include <set>

#include "wedge/words.hpp"

namespace wedge {

namespace {

// free + cyclic reduction; empty result means the relator died
std::vector<int> reduce_relator(const std::vector<int>& r) {
  std::vector<int> red;
  for (int c : r) {
    if (!red.empty() && red.back() == inverse_letter(c))
      red.pop_back();
    else
      red.push_back(c);
  }
  size_t lo = 0, hi = red.size();
  while (hi - lo >= 2 && red[lo] == inverse_letter(red[hi - 1])) {
    ++lo;
    --hi;
  }
  return {red.begin() + lo, red.begin() + hi};
}

}  // namespace

Pi1Result pi1_probe(const SimplicialComplex& k, int max_rounds) {
  if (k.empty() || component_count(k) != 1) return Pi1Result::Unknown;

  // spanning tree of the 1-skeleton
  const int n = k.n_vertices();
  std::vector<std::vector<int>> adj(n);
  std::set<std::pair<int, int>> edges;
  for (const auto& e : k.faces_of_dim(1)) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
    edges.insert({e[0], e[1]});
  }
  std::set<std::pair<int, int>> tree;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      tree.insert({std::min(v, w), std::max(v, w)});
      stack.push_back(w);
    }
  }

  // one generator per edge outside the tree
  std::map<std::pair<int, int>, int> gen;
  for (const auto& e : edges)
    if (!tree.count(e)) gen.emplace(e, static_cast<int>(gen.size()));
  if (gen.empty()) return Pi1Result::Trivial;

  // the letter a directed step contributes, or -1 on a tree edge
  auto step_letter = [&](int u, int v) {
    std::pair<int, int> e{std::min(u, v), std::max(u, v)};
    auto it = gen.find(e);
    if (it == gen.end()) return -1;
    return 2 * it->second + (u < v ? 0 : 1);
  };

  // triangle relations a->b->c->a
  std::vector<std::vector<int>> relators;
  for (const auto& f : k.faces_of_dim(2)) {
    std::vector<int> r;
    int walk[4] = {f[0], f[1], f[2], f[0]};
    for (int i = 0; i < 3; ++i) {
      int c = step_letter(walk[i], walk[i + 1]);
      if (c >= 0) r.push_back(c);
    }
    r = reduce_relator(r);
    if (!r.empty()) relators.push_back(std::move(r));
  }

  std::set<int> alive;
  for (const auto& [e, g] : gen) alive.insert(g);

  // bounded Tietze simplification: kill generators that a relator makes
  // trivial, substitute away generators a length-2 relator equates
  for (int round = 0; round < max_rounds && !alive.empty(); ++round) {
    bool changed = false;

    for (size_t i = 0; i < relators.size();) {
      relators[i] = reduce_relator(relators[i]);
      if (relators[i].empty()) {
        relators.erase(relators.begin() + i);
        changed = true;
      } else {
        ++i;
      }
    }

    // g = 1: drop the generator everywhere
    std::set<int> trivial;
    for (const auto& r : relators)
      if (r.size() == 1) trivial.insert(letter_generator(r[0]));
    if (!trivial.empty()) {
      for (auto& r : relators) {
        std::vector<int> kept;
        for (int c : r)
          if (!trivial.count(letter_generator(c))) kept.push_back(c);
        r = std::move(kept);
      }
      for (int g : trivial) alive.erase(g);
      changed = true;
    }

    // p q = 1 with distinct generators: p := q^-1 everywhere
    for (const auto& r : relators) {
      if (r.size() != 2) continue;
      int p = r[0], q = r[1];
      if (letter_generator(p) == letter_generator(q)) continue;
      for (auto& s : relators)
        for (int& c : s) {
          if (c == p) c = inverse_letter(q);
          else if (c == inverse_letter(p)) c = q;
        }
      alive.erase(letter_generator(p));
      changed = true;
      break;
    }

    if (!changed) break;
  }

  return alive.empty() ? Pi1Result::Trivial : Pi1Result::Unknown;
}

}  // namespace wedge
