#include "wedge/simplicial_complex.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace wedge {

SimplicialComplex::SimplicialComplex() = default;

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_names,
                                     std::vector<std::vector<int>> maximal_faces)
    : vertex_names_(std::move(vertex_names)), maximal_faces_(std::move(maximal_faces)) {
  {
    std::set<std::string> uniq(vertex_names_.begin(), vertex_names_.end());
    if (uniq.size() != vertex_names_.size())
      throw InvalidArgument("vertex names must be unique");
  }
  std::vector<bool> used(vertex_names_.size(), false);
  for (auto& f : maximal_faces_) {
    if (f.empty()) throw InvalidArgument("maximal faces must be non-empty");
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw InvalidArgument("face has a repeated vertex");
    for (int v : f) {
      if (v < 0 || v >= static_cast<int>(vertex_names_.size()))
        throw InvalidArgument("face vertex out of range");
      used[v] = true;
    }
  }
  for (size_t v = 0; v < used.size(); ++v)
    if (!used[v])
      throw InvalidArgument("vertex " + vertex_names_[v] + " lies in no face");
  std::sort(maximal_faces_.begin(), maximal_faces_.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  for (size_t i = 0; i < maximal_faces_.size(); ++i)
    for (size_t j = 0; j < maximal_faces_.size(); ++j) {
      if (i == j) continue;
      if (maximal_faces_[i] == maximal_faces_[j])
        throw InvalidArgument("duplicate maximal face");
      if (std::includes(maximal_faces_[j].begin(), maximal_faces_[j].end(),
                        maximal_faces_[i].begin(), maximal_faces_[i].end()))
        throw InvalidArgument("maximal faces must form an antichain");
    }
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> vertex_names,
                                                std::vector<std::vector<int>> faces) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<std::vector<int>> maximal;
  for (size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].empty()) continue;
    bool strictly_inside = false;
    for (size_t j = 0; j < faces.size() && !strictly_inside; ++j)
      if (i != j && faces[j].size() > faces[i].size() &&
          std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(),
                        faces[i].end()))
        strictly_inside = true;
    if (!strictly_inside) maximal.push_back(faces[i]);
  }
  // drop unused names, reindex
  std::set<int> used;
  for (const auto& f : maximal) used.insert(f.begin(), f.end());
  std::map<int, int> newid;
  std::vector<std::string> names;
  for (int v : used) {
    newid[v] = static_cast<int>(names.size());
    names.push_back(vertex_names.at(v));
  }
  for (auto& f : maximal)
    for (auto& v : f) v = newid.at(v);
  return SimplicialComplex(std::move(names), std::move(maximal));
}

std::optional<int> SimplicialComplex::dimension() const {
  if (maximal_faces_.empty()) return std::nullopt;
  size_t top = 0;
  for (const auto& f : maximal_faces_) top = std::max(top, f.size());
  return static_cast<int>(top) - 1;
}

int SimplicialComplex::vertex_index(const std::string& name) const {
  for (int i = 0; i < n_vertices(); ++i)
    if (vertex_names_[i] == name) return i;
  return -1;
}

std::vector<std::vector<int>> SimplicialComplex::all_faces() const {
  std::set<std::vector<int>> faces;
  for (const auto& f : maximal_faces_) {
    const int n = static_cast<int>(f.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> sub;
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) sub.push_back(f[i]);
      faces.insert(std::move(sub));
    }
  }
  std::vector<std::vector<int>> out(faces.begin(), faces.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<std::vector<int>> SimplicialComplex::faces_of_dim(int d) const {
  std::vector<std::vector<int>> out;
  for (const auto& f : all_faces())
    if (static_cast<int>(f.size()) == d + 1) out.push_back(f);
  return out;
}

long long SimplicialComplex::face_count(int d) const {
  return static_cast<long long>(faces_of_dim(d).size());
}

bool SimplicialComplex::has_face(const std::vector<int>& face) const {
  if (face.empty()) return true;  // the empty face belongs to any complex
  for (const auto& f : maximal_faces_)
    if (std::includes(f.begin(), f.end(), face.begin(), face.end())) return true;
  return false;
}

std::string SimplicialComplex::to_text() const {
  std::ostringstream out;
  out << "# " << maximal_faces_.size() << " maximal faces\n";
  for (const auto& f : maximal_faces_) {
    for (size_t i = 0; i < f.size(); ++i) {
      if (i) out << ' ';
      out << vertex_names_[f[i]];
    }
    out << '\n';
  }
  return out.str();
}

SimplicialComplex SimplicialComplex::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> names;
  std::map<std::string, int> index;
  std::vector<std::vector<int>> faces;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::vector<int> face;
    std::string tok;
    while (ls >> tok) {
      auto it = index.find(tok);
      if (it == index.end()) {
        it = index.emplace(tok, static_cast<int>(names.size())).first;
        names.push_back(tok);
      }
      face.push_back(it->second);
    }
    if (!face.empty()) faces.push_back(std::move(face));
  }
  return from_faces(std::move(names), std::move(faces));
}

SimplicialComplex SimplicialComplex::from_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

SimplicialComplex link(const SimplicialComplex& k, const std::vector<int>& face) {
  std::vector<int> f = face;
  std::sort(f.begin(), f.end());
  if (!k.has_face(f)) throw InvalidArgument("link of a non-face");
  std::vector<std::vector<int>> faces;
  for (const auto& m : k.maximal_faces()) {
    if (!std::includes(m.begin(), m.end(), f.begin(), f.end())) continue;
    std::vector<int> rest;
    std::set_difference(m.begin(), m.end(), f.begin(), f.end(),
                        std::back_inserter(rest));
    if (!rest.empty()) faces.push_back(std::move(rest));
  }
  return SimplicialComplex::from_faces(k.vertex_names(), std::move(faces));
}

SimplicialComplex join_complex(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::set<std::string> taken(a.vertex_names().begin(), a.vertex_names().end());
  std::vector<std::string> names = a.vertex_names();
  const int off = a.n_vertices();
  for (std::string name : b.vertex_names()) {
    while (taken.count(name)) name += '\'';
    taken.insert(name);
    names.push_back(name);
  }
  std::vector<std::vector<int>> faces;
  if (a.empty() || b.empty()) {
    // join with the empty complex is the other complex
    const auto& src = a.empty() ? b : a;
    for (auto f : src.maximal_faces()) {
      if (a.empty())
        for (auto& v : f) v += off;
      faces.push_back(f);
    }
  } else {
    for (const auto& fa : a.maximal_faces())
      for (const auto& fb : b.maximal_faces()) {
        std::vector<int> f = fa;
        for (int v : fb) f.push_back(v + off);
        faces.push_back(std::move(f));
      }
  }
  return SimplicialComplex::from_faces(std::move(names), std::move(faces));
}

SimplicialComplex order_complex(const FinPoset& p) {
  std::vector<std::vector<int>> chains;
  // maximal chains are the maximal paths through the cover relation
  std::vector<std::vector<int>> up(p.size());
  for (auto [a, b] : p.covers()) up[a].push_back(b);
  std::vector<int> chain;
  std::function<void(int)> grow = [&](int at) {
    chain.push_back(at);
    if (up[at].empty()) {
      chains.push_back(chain);
    } else {
      for (int b : up[at]) grow(b);
    }
    chain.pop_back();
  };
  for (int a : p.minimal_elements()) grow(a);
  return SimplicialComplex::from_faces(p.keys(), std::move(chains));
}

int component_count(const SimplicialComplex& k) {
  const int n = k.n_vertices();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : k.maximal_faces())
    for (size_t i = 1; i < f.size(); ++i) parent[find(f[0])] = find(f[i]);
  std::set<int> roots;
  for (int v = 0; v < n; ++v) roots.insert(find(v));
  return static_cast<int>(roots.size());
}

SimplicialComplex inflate(const SimplicialComplex& k, const InflationFamily& fam) {
  if (static_cast<int>(fam.points.size()) != k.n_vertices())
    throw InvalidArgument("inflation family size must match vertex count");
  for (const auto& pts : fam.points)
    if (pts.empty()) throw InvalidArgument("inflation sets must be non-empty");
  // copy (v, p) gets a dense index; names "<v>.<p>"
  std::vector<std::string> names;
  std::vector<std::vector<int>> copies(k.n_vertices());
  for (int v = 0; v < k.n_vertices(); ++v)
    for (const auto& p : fam.points[v]) {
      copies[v].push_back(static_cast<int>(names.size()));
      names.push_back(k.vertex_names()[v] + "." + p);
    }
  std::vector<std::vector<int>> faces;
  for (const auto& f : k.maximal_faces()) {
    std::vector<int> pick(f.size(), 0);
    for (;;) {
      std::vector<int> lifted;
      for (size_t i = 0; i < f.size(); ++i) lifted.push_back(copies[f[i]][pick[i]]);
      faces.push_back(std::move(lifted));
      size_t i = 0;
      for (; i < f.size(); ++i) {
        if (++pick[i] < static_cast<int>(copies[f[i]].size())) break;
        pick[i] = 0;
      }
      if (i == f.size()) break;
    }
  }
  return SimplicialComplex::from_faces(std::move(names), std::move(faces));
}

SimplicialMap::SimplicialMap(SimplicialComplex src, SimplicialComplex tgt,
                             std::vector<int> img)
    : source(std::move(src)), target(std::move(tgt)), vertex_image(std::move(img)) {
  if (static_cast<int>(vertex_image.size()) != source.n_vertices())
    throw InvalidArgument("vertex image size mismatch");
  for (int v : vertex_image)
    if (v < 0 || v >= target.n_vertices())
      throw InvalidArgument("vertex image out of range");
  for (const auto& f : source.maximal_faces()) {
    std::vector<int> img_face;
    for (int v : f) img_face.push_back(vertex_image[v]);
    std::sort(img_face.begin(), img_face.end());
    img_face.erase(std::unique(img_face.begin(), img_face.end()), img_face.end());
    if (!target.has_face(img_face))
      throw InvalidArgument("image of a face is not a face");
  }
}

SimplicialMap natural_projection(const SimplicialComplex& k, const InflationFamily& fam) {
  SimplicialComplex total = inflate(k, fam);
  std::vector<int> img;
  img.reserve(total.n_vertices());
  // copy names are "<v>.<p>" in vertex-major order, matching inflate above
  for (int v = 0; v < k.n_vertices(); ++v)
    for (size_t p = 0; p < fam.points[v].size(); ++p) img.push_back(v);
  return SimplicialMap(std::move(total), k, std::move(img));
}

SimplicialMap order_complex_map(const PosetMap& f) {
  SimplicialComplex src = order_complex(f.source);
  SimplicialComplex tgt = order_complex(f.target);
  // order_complex keeps poset keys as vertex names; align by key
  std::vector<int> img(src.n_vertices(), -1);
  for (int v = 0; v < src.n_vertices(); ++v) {
    int p = f.source.index_of(src.vertex_names()[v]);
    if (p < 0) throw Error("order complex misaligned with poset");
    img[v] = tgt.vertex_index(f.target.key(f.image.at(p)));
    if (img[v] < 0) throw Error("order complex misaligned with poset");
  }
  return SimplicialMap(std::move(src), std::move(tgt), std::move(img));
}

}  // namespace wedge
