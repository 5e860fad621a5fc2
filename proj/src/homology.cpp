#include "wedge/homology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace wedge {

std::vector<Integer> smith_diagonal(IntMatrix m) {
  std::vector<Integer> diag;
  int t = 0;
  const int n = std::min(m.rows, m.cols);
  while (t < n) {
    // smallest non-zero entry of the remaining block becomes the pivot
    int pi = -1, pj = -1;
    for (int i = t; i < m.rows; ++i)
      for (int j = t; j < m.cols; ++j) {
        if (m.at(i, j) == 0) continue;
        if (pi < 0 || abs(m.at(i, j)) < abs(m.at(pi, pj))) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    if (pi != t)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(t, j), m.at(pi, j));
    if (pj != t)
      for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, t), m.at(i, pj));

    bool clean = true;
    for (int i = t + 1; i < m.rows; ++i) {
      if (m.at(i, t) == 0) continue;
      Integer q = m.at(i, t) / m.at(t, t);
      for (int j = t; j < m.cols; ++j) m.at(i, j) -= q * m.at(t, j);
      if (m.at(i, t) != 0) clean = false;  // remainder survives, smaller pivot exists
    }
    for (int j = t + 1; j < m.cols; ++j) {
      if (m.at(t, j) == 0) continue;
      Integer q = m.at(t, j) / m.at(t, t);
      for (int i = t; i < m.rows; ++i) m.at(i, j) -= q * m.at(i, t);
      if (m.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;

    // pivot must divide the rest of the block; fold offending rows in
    bool divides = true;
    for (int i = t + 1; i < m.rows && divides; ++i)
      for (int j = t + 1; j < m.cols && divides; ++j)
        if (m.at(i, j) % m.at(t, t) != 0) {
          for (int jj = 0; jj < m.cols; ++jj) m.at(t, jj) += m.at(i, jj);
          divides = false;
        }
    if (!divides) continue;
    ++t;
  }
  for (int i = 0; i < t; ++i) diag.push_back(abs(m.at(i, i)));
  return diag;
}

void HomologyProfile::set(int degree, HomologyGroup g) {
  if (g.trivial())
    groups_.erase(degree);
  else
    groups_[degree] = std::move(g);
}

HomologyGroup HomologyProfile::get(int degree) const {
  auto it = groups_.find(degree);
  return it == groups_.end() ? HomologyGroup{} : it->second;
}

HomologyProfile HomologyProfile::shifted(int by) const {
  HomologyProfile out;
  for (const auto& [d, g] : groups_) out.set(d + by, g);
  return out;
}

std::string HomologyProfile::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [d, g] : groups_) {
    nlohmann::json grp;
    grp["betti"] = g.betti;
    auto tor = nlohmann::json::array();
    for (const auto& t : g.torsion) tor.push_back(t.convert_to<long long>());
    grp["torsion"] = tor;
    j[std::to_string(d)] = grp;
  }
  return j.dump();
}

HomologyProfile HomologyProfile::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad profile json: ") + e.what());
  }
  HomologyProfile out;
  for (const auto& [key, grp] : j.items()) {
    HomologyGroup g;
    g.betti = grp.at("betti").get<long long>();
    for (const auto& t : grp.at("torsion")) g.torsion.push_back(Integer(t.get<long long>()));
    out.set(std::stoi(key), std::move(g));
  }
  return out;
}

namespace {

using Face = std::vector<int>;

struct FaceOrder {
  bool operator()(const Face& a, const Face& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Elementary collapses: a free face (one with exactly one proper coface) is
// removed together with that coface; the lexicographically smallest free face
// goes first.  Preserves the homotopy type, never touches the empty face.
std::set<Face, FaceOrder> collapse(std::set<Face, FaceOrder> faces) {
  for (;;) {
    const Face* free_face = nullptr;
    const Face* coface = nullptr;
    for (const auto& f : faces) {
      const Face* unique_super = nullptr;
      bool multiple = false;
      for (const auto& g : faces) {
        if (g.size() <= f.size()) continue;
        if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
          if (unique_super) {
            multiple = true;
            break;
          }
          unique_super = &g;
        }
      }
      if (!multiple && unique_super) {
        free_face = &f;
        coface = unique_super;
        break;  // faces iterate smallest-first already
      }
    }
    if (!free_face) return faces;
    Face f = *free_face, c = *coface;
    faces.erase(f);
    faces.erase(c);
  }
}

struct ChainComplex {
  // faces_by[d + 1] lists the d-faces; index 0 holds the single empty face
  std::vector<std::vector<Face>> faces_by;
  int top = -1;  // highest dimension with faces

  explicit ChainComplex(const SimplicialComplex& k, bool collapse_first) {
    std::set<Face, FaceOrder> faces;
    for (const auto& f : k.all_faces()) faces.insert(f);
    if (collapse_first) faces = collapse(std::move(faces));
    faces_by.assign(2, {});
    faces_by[0].push_back({});  // reduced: one (-1)-cell
    for (const auto& f : faces) {
      int d = static_cast<int>(f.size()) - 1;
      if (d + 2 > static_cast<int>(faces_by.size())) faces_by.resize(d + 2);
      faces_by[d + 1].push_back(f);
      top = std::max(top, d);
    }
  }

  int count(int d) const {
    int i = d + 1;
    return (i >= 0 && i < static_cast<int>(faces_by.size()))
               ? static_cast<int>(faces_by[i].size())
               : 0;
  }

  // boundary C_d -> C_{d-1}; for d == 0 this is the augmentation
  IntMatrix boundary(int d) const {
    IntMatrix m(count(d - 1), count(d));
    if (m.rows == 0 || m.cols == 0) return m;
    std::map<Face, int> row;
    for (int i = 0; i < count(d - 1); ++i) row[faces_by[d][i]] = i;
    for (int j = 0; j < count(d); ++j) {
      const Face& f = faces_by[d + 1][j];
      for (size_t k = 0; k < f.size(); ++k) {
        Face sub;
        for (size_t l = 0; l < f.size(); ++l)
          if (l != k) sub.push_back(f[l]);
        m.at(row.at(sub), j) += (k % 2 == 0) ? 1 : -1;
      }
    }
    return m;
  }
};

}  // namespace

HomologyProfile reduced_homology(const SimplicialComplex& k, bool collapse_first) {
  ChainComplex cc(k, collapse_first);
  // leaving[i] is the SNF diagonal of the boundary map leaving degree -1+i;
  // nothing leaves degree -1
  std::vector<int> counts;
  std::vector<std::vector<Integer>> leaving;
  for (int d = -1; d <= cc.top; ++d) {
    counts.push_back(cc.count(d));
    leaving.push_back(d == -1 ? std::vector<Integer>{}
                              : smith_diagonal(cc.boundary(d)));
  }
  HomologyProfile out;
  for (size_t i = 0; i < counts.size(); ++i) {
    HomologyGroup g;
    long long rank_out = static_cast<long long>(leaving[i].size());
    long long rank_in =
        i + 1 < leaving.size() ? static_cast<long long>(leaving[i + 1].size()) : 0;
    g.betti = counts[i] - rank_out - rank_in;
    if (i + 1 < leaving.size())
      for (const auto& d : leaving[i + 1])
        if (d > 1) g.torsion.push_back(d);
    out.set(-1 + static_cast<int>(i), std::move(g));
  }
  return out;
}

WedgeSignature wedge_signature(const HomologyProfile& p, int expected_dim) {
  WedgeSignature sig;
  if (p.trivial()) {
    sig.kind = WedgeKind::ContractibleLike;
    return sig;
  }
  HomologyProfile empty_profile;
  empty_profile.set(-1, HomologyGroup{1, {}});
  if (p == empty_profile && expected_dim < 0) {
    sig.kind = WedgeKind::EmptyAsNegativeWedge;
    sig.dim = expected_dim;
    return sig;
  }
  if (expected_dim >= 0 && p.groups().size() == 1) {
    auto [d, g] = *p.groups().begin();
    if (d == expected_dim && g.torsion.empty() && g.betti >= 1) {
      sig.kind = WedgeKind::WedgeOfSpheres;
      sig.dim = d;
      sig.count = g.betti;
      return sig;
    }
  }
  sig.kind = WedgeKind::Inconsistent;
  return sig;
}

namespace {

// chain map of a simplicial map in one degree: sorted image with the sign of
// the sorting permutation, zero on collapsed faces
IntMatrix chain_map_matrix(const SimplicialMap& f, const ChainComplex& src,
                           const ChainComplex& tgt, int d) {
  IntMatrix m(tgt.count(d), src.count(d));
  if (m.rows == 0 || m.cols == 0) return m;
  std::map<Face, int> row;
  for (int i = 0; i < tgt.count(d); ++i) row[tgt.faces_by[d + 1][i]] = i;
  for (int j = 0; j < src.count(d); ++j) {
    const Face& face = src.faces_by[d + 1][j];
    if (d == -1) {
      m.at(0, 0) = 1;  // empty face maps to empty face
      continue;
    }
    std::vector<int> img;
    for (int v : face) img.push_back(f.vertex_image[v]);
    // parity of the sort; repeated vertices kill the face
    int sign = 1;
    bool degenerate = false;
    for (size_t a = 0; a < img.size() && !degenerate; ++a)
      for (size_t b = a + 1; b < img.size(); ++b) {
        if (img[a] == img[b]) {
          degenerate = true;
          break;
        }
        if (img[a] > img[b]) sign = -sign;
      }
    if (degenerate) continue;
    std::vector<int> key = img;
    std::sort(key.begin(), key.end());
    auto it = row.find(key);
    if (it == row.end()) throw Error("image face missing from target chain complex");
    m.at(it->second, j) += sign;
  }
  return m;
}

}  // namespace

HomologyProfile mapping_cone_profile(const SimplicialMap& f) {
  ChainComplex src(f.source, false), tgt(f.target, false);
  const int top = std::max(src.top + 1, tgt.top);
  // Cone_q = C_{q-1}(source) + C_q(target), down to q = -1
  auto cone_count = [&](int q) { return src.count(q - 1) + tgt.count(q); };
  // D_q(a, b) = (-d a, f(a) + d b)
  auto cone_boundary = [&](int q) {
    IntMatrix sb = src.boundary(q - 1);
    IntMatrix tb = tgt.boundary(q);
    IntMatrix fm = chain_map_matrix(f, src, tgt, q - 1);
    IntMatrix m(cone_count(q - 1), cone_count(q));
    for (int i = 0; i < sb.rows; ++i)
      for (int j = 0; j < sb.cols; ++j) m.at(i, j) = -sb.at(i, j);
    for (int i = 0; i < fm.rows; ++i)
      for (int j = 0; j < fm.cols; ++j) m.at(sb.rows + i, j) = fm.at(i, j);
    for (int i = 0; i < tb.rows; ++i)
      for (int j = 0; j < tb.cols; ++j) m.at(sb.rows + i, sb.cols + j) = tb.at(i, j);
    return m;
  };
  HomologyProfile out;
  std::vector<std::vector<Integer>> snf;  // snf[i] = SNF of D_{-1+i}
  snf.push_back({});                      // D_{-1} maps to the zero group
  for (int q = 0; q <= top + 1; ++q) snf.push_back(smith_diagonal(cone_boundary(q)));
  for (int q = -1; q <= top; ++q) {
    HomologyGroup g;
    long long rank_out = static_cast<long long>(snf[q + 1].size());
    long long rank_in = static_cast<long long>(snf[q + 2].size());
    g.betti = cone_count(q) - rank_out - rank_in;
    for (const auto& d : snf[q + 2])
      if (d > 1) g.torsion.push_back(d);
    out.set(q, std::move(g));
  }
  return out;
}

}  // namespace wedge
