#include "wedge/sweeps.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <string>

#include "json.hpp"
#include "wedge/basis_complex.hpp"
#include "wedge/cm.hpp"
#include "wedge/graph_enum.hpp"
#include "wedge/graph_posets.hpp"
#include "wedge/homology.hpp"
#include "wedge/parallel.hpp"
#include "wedge/pi1.hpp"

namespace wedge {

namespace {

using Clock = std::chrono::steady_clock;

// Failures are aggregated in enumeration order and the enumeration runs
// smallest instances first over all sub-instances of the bounds, so the first
// failure recorded is already a minimal one.
void finish(VerificationReport& rep, Clock::time_point start) {
  rep.fingerprint = build_fingerprint();
  if (!rep.failures.empty()) rep.minimal_failure = rep.failures.front();
  rep.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
}

HomologyProfile poset_profile(const FinPoset& p) {
  return reduced_homology(order_complex(p));
}

HomologyProfile x_profile(const LabelledGraph& g) {
  return poset_profile(build_nontrees(g).poset);
}

bool has_l_separating_edge(const LabelledGraph& g) {
  for (int e = 0; e < g.n_edges(); ++e)
    if (is_l_separating_edge(g, e)) return true;
  return false;
}

}  // namespace

VerificationReport verify_con_x(const SweepOptions& opt) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.sweep = "con-x";
  rep.params["max_edges"] = std::to_string(opt.max_edges);
  rep.params["max_labels"] = std::to_string(opt.max_labels);

  auto graphs = enumerate_labelled_graphs(opt.max_edges, opt.max_labels);
  rep.instances = static_cast<long long>(graphs.size());

  struct Row {
    std::vector<FailureRecord> fails;
    int pi1 = 0;  // 0 not probed, 1 trivial, 2 unknown
  };
  std::vector<Row> rows(graphs.size());

  run_indexed(graphs.size(), opt.jobs, [&](size_t i) {
    const LabelledGraph& g = graphs[i];
    Row& row = rows[i];
    GraphPoset x = build_nontrees(g);
    SimplicialComplex oc = order_complex(x.poset);
    HomologyProfile profile = reduced_homology(oc);
    int d = expected_dimension(rank(g), g.n_labels());

    if (has_l_separating_edge(g)) {
      if (!profile.trivial()) {
        row.fails.push_back({g.to_json(),
                             "all-zero profile (l-separating edge present)",
                             profile.to_json()});
      } else if (d >= 2) {
        row.pi1 = pi1_probe(oc, 4096) == Pi1Result::Trivial ? 1 : 2;
      }
    } else {
      WedgeSignature sig = wedge_signature(profile, d);
      bool ok = d >= 0 ? sig.kind == WedgeKind::WedgeOfSpheres
                       : sig.kind == WedgeKind::EmptyAsNegativeWedge;
      if (!ok)
        row.fails.push_back(
            {g.to_json(),
             d >= 0 ? "wedge of spheres concentrated in degree " + std::to_string(d)
                    : "empty complex standing for a wedge of negative dimension",
             profile.to_json()});
    }

    // poset membership of each G minus e must agree with the component
    // predicate the l-separating test relies on
    if (g.n_edges() >= 2) {
      std::set<std::string> keys(x.poset.keys().begin(), x.poset.keys().end());
      for (int e = 0; e < g.n_edges(); ++e) {
        std::vector<int> rest;
        for (int o = 0; o < g.n_edges(); ++o)
          if (o != e) rest.push_back(o);
        Subgraph s(g, rest);
        if (keys.count(s.key()) != static_cast<size_t>(has_heavy_component(s)))
          row.fails.push_back({g.to_json(),
                               "poset membership of G minus e" + std::to_string(e) +
                                   " matching the component predicate",
                               keys.count(s.key()) ? "member without heavy component"
                                                   : "heavy component not a member"});
      }
    }
  });

  long long probes = 0, trivial = 0, unknown = 0;
  for (auto& row : rows) {
    for (auto& f : row.fails) rep.failures.push_back(std::move(f));
    if (row.pi1) {
      ++probes;
      (row.pi1 == 1 ? trivial : unknown) += 1;
    }
  }
  rep.observations["pi1_probes"] = std::to_string(probes);
  rep.observations["pi1_trivial"] = std::to_string(trivial);
  rep.observations["pi1_unknown"] = std::to_string(unknown);
  rep.certification = probes > 0 && unknown == 0 ? "homological+pi1" : "homological";
  finish(rep, start);
  return rep;
}

VerificationReport verify_core_retract(const SweepOptions& opt) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.sweep = "core-retract";
  rep.params["max_edges"] = std::to_string(opt.max_edges);
  rep.params["max_labels"] = std::to_string(opt.max_labels);

  auto graphs = enumerate_labelled_graphs(opt.max_edges, opt.max_labels);
  rep.instances = static_cast<long long>(graphs.size());
  std::vector<std::vector<FailureRecord>> rows(graphs.size());

  run_indexed(graphs.size(), opt.jobs, [&](size_t i) {
    const LabelledGraph& g = graphs[i];
    auto& fails = rows[i];
    GraphPoset x = build_nontrees(g);
    GraphPoset core = build_core_poset(g);
    HomologyProfile px = poset_profile(x.poset);
    HomologyProfile pc = poset_profile(core.poset);
    if (!(px == pc))
      fails.push_back({g.to_json(),
                       "matching homology for the poset and its core subposet",
                       "X: " + px.to_json() + " core: " + pc.to_json()});
    try {
      PosetMap retract = core_retraction_map(g);
      if (!monotone_image_check(retract))
        fails.push_back({g.to_json(), "retraction pointwise below the identity",
                         "monotone image check failed"});
      std::set<std::string> core_keys(core.poset.keys().begin(),
                                      core.poset.keys().end());
      for (int s = 0; s < retract.source.size(); ++s) {
        const std::string& image_key = retract.target.key(retract.image[s]);
        if (!core_keys.count(image_key)) {
          fails.push_back({g.to_json(), "retraction image inside the core subposet",
                           retract.source.key(s) + " -> " + image_key});
          break;
        }
      }
    } catch (const EmptyCore& e) {
      fails.push_back(
          {g.to_json(), "non-empty maximal core for every poset member", e.what()});
    }
  });

  for (auto& fs : rows)
    for (auto& f : fs) rep.failures.push_back(std::move(f));
  finish(rep, start);
  return rep;
}

VerificationReport verify_suspension(const SweepOptions& opt) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.sweep = "suspension";
  rep.params["max_edges"] = std::to_string(opt.max_edges);
  rep.params["max_labels"] = std::to_string(opt.max_labels);

  auto graphs = enumerate_labelled_graphs(opt.max_edges, opt.max_labels);
  struct Row {
    long long pairs = 0;
    std::vector<FailureRecord> fails;
  };
  std::vector<Row> rows(graphs.size());

  run_indexed(graphs.size(), opt.jobs, [&](size_t i) {
    const LabelledGraph& g = graphs[i];
    if (g.n_edges() < 2 || has_l_separating_edge(g)) return;
    std::vector<int> loops;
    for (int e = 0; e < g.n_edges(); ++e)
      if (g.is_loop(e)) loops.push_back(e);
    if (loops.empty()) return;
    Row& row = rows[i];
    HomologyProfile pg = x_profile(g);
    for (int e : loops) {
      ++row.pairs;
      HomologyProfile pd = x_profile(delete_edge(g, e));
      if (!(pg == pd.shifted(1)))
        row.fails.push_back(
            {g.to_json(), "profile equal to the loop-deleted profile shifted up one",
             "loop e" + std::to_string(e) + ": G " + pg.to_json() +
                 " vs shifted " + pd.shifted(1).to_json()});
    }
  });

  for (auto& row : rows) {
    rep.instances += row.pairs;
    for (auto& f : row.fails) rep.failures.push_back(std::move(f));
  }
  finish(rep, start);
  return rep;
}

VerificationReport verify_quotient_step(const SweepOptions& opt) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.sweep = "quotient-step";
  rep.params["max_edges"] = std::to_string(opt.max_edges);
  rep.params["max_labels"] = std::to_string(opt.max_labels);

  auto graphs = enumerate_labelled_graphs(opt.max_edges, opt.max_labels);
  struct Row {
    int state = 0;  // 0 out of scope, 1 checked, 2 skipped
    std::vector<FailureRecord> fails;
  };
  std::vector<Row> rows(graphs.size());

  run_indexed(graphs.size(), opt.jobs, [&](size_t i) {
    const LabelledGraph& g = graphs[i];
    for (int e = 0; e < g.n_edges(); ++e)
      if (g.is_loop(e)) return;
    // a single edge has no quotient; the induction never collapses one
    if (g.n_edges() < 2 || has_l_separating_edge(g)) return;
    Row& row = rows[i];

    // the proof's choice: a leaf edge of a tree, otherwise a non-separating
    // edge; at most one labelled endpoint either way
    bool tree = rank(g) == 0;
    int chosen = -1;
    for (int e = 0; e < g.n_edges(); ++e) {
      const auto& ed = g.edge(e);
      bool shape_ok = tree ? (g.valence(ed.u) == 1 || g.valence(ed.v) == 1)
                           : !is_separating_edge(g, e);
      if (!shape_ok) continue;
      if (static_cast<int>(g.is_labelled(ed.u)) + static_cast<int>(g.is_labelled(ed.v)) > 1)
        continue;
      chosen = e;
      break;
    }
    if (chosen < 0) {
      row.state = 2;
      return;
    }
    row.state = 1;

    GraphPoset x = build_nontrees(g);
    std::vector<int> rest;
    for (int o = 0; o < g.n_edges(); ++o)
      if (o != chosen) rest.push_back(o);
    int drop = x.poset.index_of(Subgraph(g, rest).key());
    FinPoset y1 = x.poset;
    if (drop >= 0) {
      std::vector<int> keep;
      for (int k = 0; k < x.poset.size(); ++k)
        if (k != drop) keep.push_back(k);
      y1 = x.poset.restrict(keep);
    }
    HomologyProfile p1 = poset_profile(y1);
    HomologyProfile pq = x_profile(collapse_edge(g, chosen));
    if (!(p1 == pq))
      row.fails.push_back(
          {g.to_json(), "poset minus G-minus-e matching the collapsed graph's poset",
           "edge e" + std::to_string(chosen) + ": Y1 " + p1.to_json() +
               " vs quotient " + pq.to_json()});
  });

  for (auto& row : rows) {
    if (row.state == 1) ++rep.instances;
    if (row.state == 2) ++rep.skipped;
    for (auto& f : row.fails) rep.failures.push_back(std::move(f));
  }
  finish(rep, start);
  return rep;
}

VerificationReport verify_inflation_cm(int trials, std::uint64_t seed, int jobs) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.sweep = "inflation-cm";
  rep.params["trials"] = std::to_string(trials);
  rep.params["seed"] = std::to_string(seed);
  if (trials < 0) throw InvalidArgument("negative trial count");
  rep.instances = trials;

  // draws are made serially up front so the jobs count cannot disturb them
  std::mt19937_64 rng(seed);
  auto draw = [&](int n) { return static_cast<int>(rng() % n); };

  struct Trial {
    SimplicialComplex k;
    InflationFamily fam;
    std::string enc;
  };
  std::vector<Trial> ts;
  ts.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    int n = 1 + draw(8);
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
    int nf = 1 + draw(4);
    std::vector<std::vector<int>> faces;
    for (int f = 0; f < nf; ++f) {
      int s = 1 + draw(std::min(4, n));
      std::vector<int> idx(n);
      for (int v = 0; v < n; ++v) idx[v] = v;
      for (int j = 0; j < s; ++j) std::swap(idx[j], idx[j + draw(n - j)]);
      std::vector<int> face(idx.begin(), idx.begin() + s);
      std::sort(face.begin(), face.end());
      faces.push_back(std::move(face));
    }
    Trial tr;
    tr.k = SimplicialComplex::from_faces(names, faces);

    std::vector<int> copies(tr.k.n_vertices());
    for (int& c : copies) c = 1 + draw(3);
    // keep the inflated face count within budget; degenerate to fewer copies
    // on oversized draws rather than letting one trial dominate the run
    auto inflated_faces = [&]() {
      long long total = 0;
      for (const auto& f : tr.k.all_faces()) {
        long long prod = 1;
        for (int v : f) prod *= copies[v];
        total += prod;
      }
      return total;
    };
    if (inflated_faces() > 800)
      for (int& c : copies) c = std::min(c, 2);
    if (inflated_faces() > 800)
      for (int& c : copies) c = 1;
    for (int c : copies) {
      std::vector<std::string> pts;
      for (int p = 0; p < c; ++p) pts.push_back("p" + std::to_string(p));
      tr.fam.points.push_back(std::move(pts));
    }

    nlohmann::json j;
    j["complex"] = tr.k.to_text();
    auto fam = nlohmann::json::array();
    for (const auto& pts : tr.fam.points) fam.push_back(pts);
    j["family"] = fam;
    tr.enc = j.dump();
    ts.push_back(std::move(tr));
  }

  std::vector<std::vector<FailureRecord>> rows(ts.size());
  run_indexed(ts.size(), jobs, [&](size_t i) {
    const Trial& tr = ts[i];
    CmReport base = cm_check(tr.k);
    CmReport inflated = cm_check(inflate(tr.k, tr.fam));
    if (base.is_cm != inflated.is_cm)
      rows[i].push_back({tr.enc, "matching CM verdicts",
                         std::string("base ") + (base.is_cm ? "CM" : "not CM") +
                             ", inflated " + (inflated.is_cm ? "CM" : "not CM")});
    if (base.dimension != inflated.dimension)
      rows[i].push_back(
          {tr.enc, "matching dimensions",
           "base " + std::to_string(base.dimension.value_or(-1)) + ", inflated " +
               std::to_string(inflated.dimension.value_or(-1))});
  });

  for (auto& fs : rows)
    for (auto& f : fs) rep.failures.push_back(std::move(f));
  finish(rep, start);
  return rep;
}

VerificationReport verify_farey(int max_len, int jobs) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.sweep = "farey";
  rep.params["max_len"] = std::to_string(max_len);

  BasisTruncation t;
  try {
    t = build_B_truncation(2, max_len, jobs);
  } catch (const SearchBudgetExceeded& e) {
    rep.failures.push_back({"build_B_truncation(2, " + std::to_string(max_len) + ")",
                            "certification within the search budget", e.what()});
    finish(rep, start);
    return rep;
  }

  const int n = static_cast<int>(t.classes.size());
  rep.instances = static_cast<long long>(n) * (n - 1) / 2;

  // abelianization must pin vertices down uniquely
  std::map<std::vector<long long>, int> by_vector;
  for (int i = 0; i < n; ++i) {
    auto ab = t.classes[i].abelianization();
    auto [it, fresh] = by_vector.emplace(ab, i);
    if (!fresh)
      rep.failures.push_back({t.sidecar_json(), "injective abelianization",
                              t.classes[it->second].str() + " and " +
                                  t.classes[i].str() + " share a vector"});
  }

  // edges exactly where the determinant says so
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool is_edge = t.complex.has_face({i, j});
      bool oracle = farey_edge(t.classes[i], t.classes[j]);
      if (is_edge != oracle)
        rep.failures.push_back(
            {t.classes[i].str() + "," + t.classes[j].str(),
             oracle ? "determinant-one pair spans an edge" : "no edge without determinant one",
             is_edge ? "edge present" : "edge missing"});
    }

  if (component_count(t.complex) != 1)
    rep.failures.push_back({t.sidecar_json(), "connected truncation",
                            std::to_string(component_count(t.complex)) + " components"});

  if (!t.complex.dimension() || *t.complex.dimension() != 1)
    rep.failures.push_back({t.sidecar_json(), "dimension 1", "different dimension"});
  for (const auto& f : t.complex.maximal_faces())
    if (f.size() < 2) {
      rep.failures.push_back({t.sidecar_json(), "every vertex on an edge",
                              "isolated vertex " + t.complex.vertex_names()[f[0]]});
      break;
    }

  rep.observations["vertices"] = std::to_string(n);
  rep.observations["edges"] = std::to_string(t.complex.face_count(1));
  finish(rep, start);
  return rep;
}

VerificationReport verify_b3_probe(int max_len, int jobs) {
  auto start = Clock::now();
  VerificationReport rep;
  rep.sweep = "b3-probe";
  rep.params["max_len"] = std::to_string(max_len);

  BasisTruncation t;
  try {
    t = build_B_truncation(3, max_len, jobs);
  } catch (const SearchBudgetExceeded& e) {
    rep.failures.push_back({"build_B_truncation(3, " + std::to_string(max_len) + ")",
                            "certification within the search budget", e.what()});
    finish(rep, start);
    return rep;
  }

  const int n = static_cast<int>(t.classes.size());
  rep.instances = static_cast<long long>(n) * (n - 1) / 2;

  // internal consistency: the faces below every triangle are themselves
  // certified partial bases
  auto triangles = t.complex.faces_of_dim(2);
  for (const auto& f : triangles) {
    const int pairs[3][2] = {{f[0], f[1]}, {f[0], f[2]}, {f[1], f[2]}};
    for (const auto& pr : pairs) {
      bool certified = is_partial_basis_classes({t.classes[pr[0]], t.classes[pr[1]]});
      if (!certified || !t.complex.has_face({pr[0], pr[1]}))
        rep.failures.push_back({t.classes[f[0]].str() + "," + t.classes[f[1]].str() +
                                    "," + t.classes[f[2]].str(),
                                "triangle edges certified as partial bases",
                                t.classes[pr[0]].str() + "," + t.classes[pr[1]].str() +
                                    (certified ? " missing from complex" : " not certified")});
    }
  }

  HomologyProfile profile = reduced_homology(t.complex);
  bool all_in_triangle = true;
  std::vector<bool> seen(n, false);
  for (const auto& f : triangles)
    for (int v : f) seen[v] = true;
  for (int v = 0; v < n; ++v)
    if (!seen[v]) all_in_triangle = false;

  rep.observations["vertices"] = std::to_string(n);
  rep.observations["edges"] = std::to_string(t.complex.face_count(1));
  rep.observations["triangles"] = std::to_string(t.complex.face_count(2));
  rep.observations["components"] = std::to_string(component_count(t.complex));
  rep.observations["homology"] = profile.to_json();
  rep.observations["h1_betti"] = std::to_string(profile.get(1).betti);
  rep.observations["every_vertex_in_triangle"] = all_in_triangle ? "true" : "false";
  finish(rep, start);
  return rep;
}

}  // namespace wedge
