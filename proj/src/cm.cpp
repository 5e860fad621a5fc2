#include "wedge/cm.hpp"

#include <climits>

namespace wedge {

CmReport cm_check(const SimplicialComplex& k) {
  CmReport rep;
  rep.dimension = k.dimension();
  if (k.empty()) {
    rep.is_cm = true;  // vacuous
    return rep;
  }
  const int dim = *rep.dimension;

  // the empty face first, then every face; the link of a d-face has to be
  // wedge-like in dimension dim - d - 1, which forces purity along the way
  std::vector<std::vector<int>> faces;
  faces.push_back({});
  for (auto& f : k.all_faces()) faces.push_back(std::move(f));

  for (const auto& f : faces) {
    int d = static_cast<int>(f.size()) - 1;
    int expected = dim - d - 1;
    SimplicialComplex lk = f.empty() ? k : link(k, f);
    HomologyProfile profile = reduced_homology(lk);
    WedgeSignature sig = wedge_signature(profile, expected);
    if (sig.kind == WedgeKind::Inconsistent) {
      CmFailure fail;
      for (int v : f) fail.face.push_back(k.vertex_names()[v]);
      fail.expected_dim = expected;
      fail.reason = "link homology is not a wedge in the expected dimension: " +
                    profile.to_json();
      rep.failures.push_back(std::move(fail));
    }
  }
  rep.is_cm = rep.failures.empty();
  return rep;
}

QuillenReport quillen_check(const PosetMap& f, int m) {
  QuillenReport rep;
  rep.m = m;
  rep.fibres_ok = true;
  for (int y = 0; y < f.target.size(); ++y) {
    FinPoset fib = fibre_below(f, y);
    FinPoset upper = interval(f.target, y, IntervalSide::Above, true);
    SimplicialComplex joined =
        join_complex(order_complex(fib), order_complex(upper));
    HomologyProfile profile = reduced_homology(joined);
    QuillenFibre rec;
    rec.element = f.target.key(y);
    rec.first_nonzero_degree = INT_MAX;
    for (const auto& [d, g] : profile.groups()) {
      rec.first_nonzero_degree = d;
      break;  // groups iterate lowest degree first
    }
    if (rec.first_nonzero_degree < m) rep.fibres_ok = false;
    rep.fibres.push_back(std::move(rec));
  }

  rep.cone = mapping_cone_profile(order_complex_map(f));
  rep.cone_ok = true;
  for (const auto& [d, g] : rep.cone.groups())
    if (d <= m) rep.cone_ok = false;
  rep.flagged = rep.fibres_ok && !rep.cone_ok;
  return rep;
}

}  // namespace wedge
