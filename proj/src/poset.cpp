#include "wedge/poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace wedge {

FinPoset::FinPoset() = default;

FinPoset::FinPoset(std::vector<std::string> keys,
                   std::vector<std::pair<int, int>> less_pairs)
    : keys_(std::move(keys)) {
  const int n = size();
  {
    std::set<std::string> uniq(keys_.begin(), keys_.end());
    if (static_cast<int>(uniq.size()) != n)
      throw InvalidArgument("poset keys must be unique");
  }
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (auto [a, b] : less_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw InvalidArgument("order pair index out of range");
    if (a == b) throw InvalidArgument("strict order cannot relate " + keys_[a] + " to itself");
    rel[a][b] = true;
  }
  // Warshall closure, then antisymmetry check
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (rel[i][k])
        for (int j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = true;
  for (int i = 0; i < n; ++i) {
    if (rel[i][i]) throw InvalidArgument("order relation has a cycle through " + keys_[i]);
    for (int j = 0; j < n; ++j)
      if (rel[i][j] && rel[j][i])
        throw InvalidArgument("order relation not antisymmetric");
  }
  // transitive reduction: drop pairs witnessed through a middle element
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!rel[i][j]) continue;
      bool is_cover = true;
      for (int k = 0; k < n && is_cover; ++k)
        if (rel[i][k] && rel[k][j]) is_cover = false;
      if (is_cover) covers_.emplace_back(i, j);
    }
  std::sort(covers_.begin(), covers_.end());
  closure_ = std::move(rel);
}

int FinPoset::index_of(const std::string& key) const {
  for (int i = 0; i < size(); ++i)
    if (keys_[i] == key) return i;
  return -1;
}

void FinPoset::ensure_closure() const {
  if (!closure_.empty() || size() == 0) return;
  const int n = size();
  closure_.assign(n, std::vector<bool>(n, false));
  for (auto [a, b] : covers_) closure_[a][b] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (closure_[i][k])
        for (int j = 0; j < n; ++j)
          if (closure_[k][j]) closure_[i][j] = true;
}

bool FinPoset::less(int a, int b) const {
  if (a < 0 || a >= size() || b < 0 || b >= size())
    throw InvalidArgument("poset index out of range");
  ensure_closure();
  return closure_[a][b];
}

std::vector<int> FinPoset::above(int a, bool strict) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (less(a, i) || (!strict && i == a)) out.push_back(i);
  return out;
}

std::vector<int> FinPoset::below(int a, bool strict) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (less(i, a) || (!strict && i == a)) out.push_back(i);
  return out;
}

std::vector<int> FinPoset::minimal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool min = true;
    for (int j = 0; j < size() && min; ++j)
      if (less(j, i)) min = false;
    if (min) out.push_back(i);
  }
  return out;
}

std::vector<int> FinPoset::maximal_elements() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    bool max = true;
    for (int j = 0; j < size() && max; ++j)
      if (less(i, j)) max = false;
    if (max) out.push_back(i);
  }
  return out;
}

FinPoset FinPoset::restrict(const std::vector<int>& elements) const {
  std::vector<int> elems = elements;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::vector<std::string> keys;
  for (int e : elems) keys.push_back(key(e));
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < elems.size(); ++j)
      if (less(elems[i], elems[j])) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return FinPoset(std::move(keys), std::move(pairs));
}

std::string FinPoset::to_text() const {
  std::ostringstream out;
  out << size() << ' ' << covers_.size() << '\n';
  for (const auto& k : keys_) out << k << '\n';
  for (auto [a, b] : covers_) out << a << ' ' << b << '\n';
  return out.str();
}

FinPoset FinPoset::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw ParseError("poset text is empty");
  std::istringstream hs(header);
  int n = 0, m = 0;
  if (!(hs >> n >> m) || n < 0 || m < 0) throw ParseError("bad poset header");
  std::vector<std::string> keys;
  for (int i = 0; i < n; ++i) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("missing poset key line");
    keys.push_back(line);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i) {
    int a = 0, b = 0;
    if (!(in >> a >> b)) throw ParseError("missing poset relation pair");
    pairs.emplace_back(a, b);
  }
  return FinPoset(std::move(keys), std::move(pairs));
}

FinPoset interval(const FinPoset& p, int element, IntervalSide side, bool strict) {
  return p.restrict(side == IntervalSide::Below ? p.below(element, strict)
                                                : p.above(element, strict));
}

FinPoset product_minus_bottom(const std::vector<const FinPoset*>& factors) {
  if (factors.empty()) throw InvalidArgument("product needs at least one factor");
  // coordinates: -1 = adjoined bottom, otherwise factor element index
  std::vector<std::vector<int>> tuples{{}};
  for (const auto* f : factors) {
    std::vector<std::vector<int>> next;
    for (const auto& t : tuples)
      for (int c = -1; c < f->size(); ++c) {
        auto u = t;
        u.push_back(c);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }
  std::erase_if(tuples, [](const std::vector<int>& t) {
    return std::all_of(t.begin(), t.end(), [](int c) { return c < 0; });
  });
  auto coord_leq = [&](int f, int a, int b) {
    if (a == b) return true;
    if (a < 0) return true;
    if (b < 0) return false;
    return factors[f]->leq(a, b);
  };
  std::vector<std::string> keys;
  for (const auto& t : tuples) {
    std::string k = "(";
    for (size_t f = 0; f < t.size(); ++f) {
      if (f) k += '|';
      k += t[f] < 0 ? "_" : factors[f]->key(t[f]);
    }
    k += ')';
    keys.push_back(k);
  }
  std::vector<std::pair<int, int>> pairs;
  for (size_t i = 0; i < tuples.size(); ++i)
    for (size_t j = 0; j < tuples.size(); ++j) {
      if (i == j) continue;
      bool le = true;
      for (size_t f = 0; f < factors.size() && le; ++f)
        le = coord_leq(static_cast<int>(f), tuples[i][f], tuples[j][f]);
      if (le) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return FinPoset(std::move(keys), std::move(pairs));
}

PosetMap::PosetMap(FinPoset src, FinPoset tgt, std::vector<int> img)
    : source(std::move(src)), target(std::move(tgt)), image(std::move(img)) {
  if (static_cast<int>(image.size()) != source.size())
    throw InvalidArgument("poset map image size mismatch");
  for (int y : image)
    if (y < 0 || y >= target.size())
      throw InvalidArgument("poset map image index out of range");
  for (int a = 0; a < source.size(); ++a)
    for (int b = 0; b < source.size(); ++b)
      if (source.less(a, b) && !target.leq(image[a], image[b]))
        throw InvalidArgument("map does not preserve order: " + source.key(a) +
                              " < " + source.key(b));
}

FinPoset fibre_below(const PosetMap& f, int y) {
  std::vector<int> elems;
  for (int x = 0; x < f.source.size(); ++x)
    if (f.target.leq(f.image[x], y)) elems.push_back(x);
  return f.source.restrict(elems);
}

bool monotone_image_check(const PosetMap& f) {
  if (f.source.size() != f.target.size()) return false;
  for (int i = 0; i < f.source.size(); ++i)
    if (f.source.key(i) != f.target.key(i)) return false;
  bool all_le = true, all_ge = true;
  for (int x = 0; x < f.source.size(); ++x) {
    if (!f.source.leq(f.image[x], x)) all_le = false;
    if (!f.source.leq(x, f.image[x])) all_ge = false;
  }
  return all_le || all_ge;
}

}  // namespace wedge
