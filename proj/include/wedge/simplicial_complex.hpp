#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wedge/errors.hpp"
#include "wedge/poset.hpp"

namespace wedge {

// Finite abstract simplicial complex stored as the antichain of maximal
// faces over named vertices.  Every named vertex lies in some face.  The
// empty complex (no faces at all) is allowed; its dimension is reported as
// nullopt, standing in for "minus infinity".
class SimplicialComplex {
 public:
  SimplicialComplex();
  // maximal_faces must be an antichain of non-empty faces covering all names.
  SimplicialComplex(std::vector<std::string> vertex_names,
                    std::vector<std::vector<int>> maximal_faces);
  // Drops faces contained in others and unused names, then delegates above.
  static SimplicialComplex from_faces(std::vector<std::string> vertex_names,
                                      std::vector<std::vector<int>> faces);

  bool empty() const { return maximal_faces_.empty(); }
  std::optional<int> dimension() const;
  int n_vertices() const { return static_cast<int>(vertex_names_.size()); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  int vertex_index(const std::string& name) const;  // -1 when absent
  const std::vector<std::vector<int>>& maximal_faces() const { return maximal_faces_; }

  // All non-empty faces, sorted by (size, lexicographic).
  std::vector<std::vector<int>> all_faces() const;
  std::vector<std::vector<int>> faces_of_dim(int d) const;
  long long face_count(int d) const;
  bool has_face(const std::vector<int>& face) const;  // face given sorted

  // One maximal face per line as whitespace-separated vertex tokens;
  // '#' starts a comment.
  std::string to_text() const;
  static SimplicialComplex from_text(const std::string& text);
  static SimplicialComplex from_text_file(const std::string& path);

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::vector<int>> maximal_faces_;  // each sorted; list sorted
};

// Link of a face (vertex ids); the face must be present.
SimplicialComplex link(const SimplicialComplex& k, const std::vector<int>& face);

// Join; on a vertex-name clash the right complex's names get a "'" suffix
// until unique.
SimplicialComplex join_complex(const SimplicialComplex& a, const SimplicialComplex& b);

// Order complex: vertices are the poset elements (named by their keys),
// faces are the chains.
SimplicialComplex order_complex(const FinPoset& p);

// Number of connected components (0 for the empty complex).
int component_count(const SimplicialComplex& k);

// Replacement sets for the inflation of a complex: one non-empty list of
// point names per vertex of the base complex.
struct InflationFamily {
  std::vector<std::vector<std::string>> points;
};

// Vertex v becomes |points[v]| copies; a face lifts to one choice of copy per
// vertex.  Dimension is preserved.  Copy (v,p) is named "<v-name>.<p>".
SimplicialComplex inflate(const SimplicialComplex& k, const InflationFamily& fam);

// Simplicial vertex map; images of faces must be faces (collapses allowed).
struct SimplicialMap {
  SimplicialComplex source;
  SimplicialComplex target;
  std::vector<int> vertex_image;  // source vertex -> target vertex

  SimplicialMap(SimplicialComplex src, SimplicialComplex tgt, std::vector<int> img);
};

// The projection inflate(k, fam) -> k collapsing each copy to its vertex.
SimplicialMap natural_projection(const SimplicialComplex& k, const InflationFamily& fam);

// Simplicial map induced by a poset map on order complexes.
SimplicialMap order_complex_map(const PosetMap& f);

}  // namespace wedge
