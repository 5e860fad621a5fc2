// Command-line front end: verification sweeps plus one-off computations on
// graphs, complexes and words.  Exit codes: 0 success, 1 verification
// failure, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "wedge/basis_complex.hpp"
#include "wedge/cm.hpp"
#include "wedge/errors.hpp"
#include "wedge/homology.hpp"
#include "wedge/labelled_graph.hpp"
#include "wedge/simplicial_complex.hpp"
#include "wedge/sweeps.hpp"
#include "wedge/whitehead.hpp"
#include "wedge/words.hpp"

namespace {

void row(const std::string& key, const std::string& value) {
  std::cout << std::left << std::setw(14) << key << value << '\n';
}

std::string join_kv(const std::map<std::string, std::string>& m) {
  std::string s;
  for (const auto& [k, v] : m) {
    if (!s.empty()) s += ' ';
    s += k + "=" + v;
  }
  return s;
}

std::string seconds(double t) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << t << 's';
  return out.str();
}

// Prints the human summary, honours --out, and turns pass/fail into the
// process exit code.
int finish(const wedge::VerificationReport& r, const std::string& out_path) {
  row("sweep", r.sweep);
  if (!r.params.empty()) row("params", join_kv(r.params));
  row("instances", std::to_string(r.instances));
  if (r.skipped > 0) row("skipped", std::to_string(r.skipped));
  if (!r.observations.empty()) row("observations", join_kv(r.observations));
  row("failures", std::to_string(r.failures.size()));
  if (r.minimal_failure) {
    row("minimal", "instance=" + r.minimal_failure->instance +
                       " expected=" + r.minimal_failure->expected +
                       " observed=" + r.minimal_failure->observed);
  }
  row("pass", r.pass() ? "yes" : "no");
  row("certification", r.certification);
  row("elapsed", seconds(r.elapsed_seconds));
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw wedge::InvalidArgument("cannot write " + out_path);
    out << r.to_json() << '\n';
  }
  return r.pass() ? 0 : 1;
}

struct SweepFlags {
  wedge::SweepOptions opt;
  std::string out;
};

// The four graph sweeps share their flag set.
SweepFlags* add_graph_sweep(CLI::App& app, const std::string& name,
                            const std::string& desc,
                            std::vector<std::unique_ptr<SweepFlags>>& store) {
  store.push_back(std::make_unique<SweepFlags>());
  SweepFlags* f = store.back().get();
  CLI::App* sub = app.add_subcommand(name, desc);
  sub->add_option("--max-edges", f->opt.max_edges, "largest edge count swept")
      ->default_val(5);
  sub->add_option("--max-labels", f->opt.max_labels, "largest label count swept")
      ->default_val(3);
  sub->add_option("--jobs", f->opt.jobs, "worker threads; never changes output")
      ->default_val(1);
  sub->add_option("--out", f->out, "write the JSON report here");
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification sweeps and one-off computations for connectivity "
               "posets, order complexes and free-group basis complexes"};
  app.require_subcommand(1);
  int rc = 0;

  std::vector<std::unique_ptr<SweepFlags>> store;

  SweepFlags* conx = add_graph_sweep(
      app, "con-x", "wedge-of-spheres law for every enumerated instance", store);
  app.get_subcommand("con-x")->callback(
      [&] { rc = finish(wedge::verify_con_x(conx->opt), conx->out); });

  SweepFlags* core = add_graph_sweep(
      app, "core-retract", "core subposet carries the same homology", store);
  app.get_subcommand("core-retract")->callback(
      [&] { rc = finish(wedge::verify_core_retract(core->opt), core->out); });

  SweepFlags* susp = add_graph_sweep(
      app, "suspension", "loop deletion shifts every reduced degree by one", store);
  app.get_subcommand("suspension")->callback(
      [&] { rc = finish(wedge::verify_suspension(susp->opt), susp->out); });

  SweepFlags* quot = add_graph_sweep(
      app, "quotient-step", "edge collapse drops exactly one poset element", store);
  app.get_subcommand("quotient-step")->callback(
      [&] { rc = finish(wedge::verify_quotient_step(quot->opt), quot->out); });

  CLI::App* infl = app.add_subcommand(
      "inflation-cm", "random inflations preserve the Cohen-Macaulay verdict");
  int trials = 200;
  std::uint64_t seed = 0;
  int infl_jobs = 1;
  std::string infl_out;
  infl->add_option("--trials", trials, "number of random inflations")->default_val(200);
  infl->add_option("--seed", seed, "generator seed, echoed into the report")
      ->default_val(0);
  infl->add_option("--jobs", infl_jobs, "worker threads; never changes output")
      ->default_val(1);
  infl->add_option("--out", infl_out, "write the JSON report here");
  infl->callback([&] {
    rc = finish(wedge::verify_inflation_cm(trials, seed, infl_jobs), infl_out);
  });

  CLI::App* farey = app.add_subcommand(
      "farey", "rank-2 truncation against primitive-vector arithmetic");
  int farey_len = 8;
  int farey_jobs = 1;
  std::string farey_out;
  farey->add_option("--max-len", farey_len, "largest cyclic length kept")
      ->default_val(8);
  farey->add_option("--jobs", farey_jobs, "worker threads; never changes output")
      ->default_val(1);
  farey->add_option("--out", farey_out, "write the JSON report here");
  farey->callback([&] { rc = finish(wedge::verify_farey(farey_len, farey_jobs), farey_out); });

  CLI::App* b3 = app.add_subcommand(
      "b3-probe", "rank-3 truncation: octahedron floor plus observational notes");
  int b3_len = 2;
  int b3_jobs = 1;
  std::string b3_out;
  b3->add_option("--max-len", b3_len, "largest cyclic length kept")->default_val(2);
  b3->add_option("--jobs", b3_jobs, "worker threads; never changes output")
      ->default_val(1);
  b3->add_option("--out", b3_out, "write the JSON report here");
  b3->callback([&] { rc = finish(wedge::verify_b3_probe(b3_len, b3_jobs), b3_out); });

  CLI::App* hom = app.add_subcommand(
      "homology", "reduced integral homology of a complex in the text format");
  std::string hom_path;
  hom->add_option("--complex", hom_path, "complex file, one maximal face per line")
      ->required();
  hom->callback([&] {
    wedge::SimplicialComplex k = wedge::SimplicialComplex::from_text_file(hom_path);
    std::cout << wedge::reduced_homology(k).to_json() << '\n';
  });

  CLI::App* cm = app.add_subcommand("cm-check",
                                    "homological Cohen-Macaulay check of a complex");
  std::string cm_path;
  cm->add_option("--complex", cm_path, "complex file, one maximal face per line")
      ->required();
  cm->callback([&] {
    wedge::SimplicialComplex k = wedge::SimplicialComplex::from_text_file(cm_path);
    wedge::CmReport r = wedge::cm_check(k);
    row("cm", r.is_cm ? "yes" : "no");
    if (r.dimension) row("dimension", std::to_string(*r.dimension));
    row("certification", r.certification);
    if (!r.failures.empty()) {
      row("failures", std::to_string(r.failures.size()));
      for (const auto& f : r.failures) {
        std::string face = "{";
        for (size_t i = 0; i < f.face.size(); ++i) {
          if (i) face += ' ';
          face += f.face[i];
        }
        face += '}';
        row("  face", face + " expected dim " + std::to_string(f.expected_dim) +
                         ": " + f.reason);
      }
    }
    rc = r.is_cm ? 0 : 1;
  });

  CLI::App* wh = app.add_subcommand(
      "whitehead", "minimise free-group conjugacy classes or decide primitivity");
  int wh_rank = 2;
  std::vector<std::string> wh_words;
  wh->add_option("--rank", wh_rank, "free group rank")->default_val(2);
  wh->add_option("--word", wh_words,
                 "word, lower case generators and upper case inverses; repeatable")
      ->required();
  auto* wh_primitive =
      wh->add_flag("--primitive", "print whether the single class is primitive");
  auto* wh_minimize =
      wh->add_flag("--minimize", "print the length-minimal tuple in the orbit");
  auto* wh_basis = wh->add_flag(
      "--partial-basis", "print whether the classes extend to a free basis");
  wh_primitive->excludes(wh_minimize)->excludes(wh_basis);
  wh_minimize->excludes(wh_basis);
  wh->callback([&] {
    std::vector<wedge::CyclicWord> tuple;
    for (const auto& w : wh_words)
      tuple.push_back(wedge::CyclicWord::parse(wh_rank, w));
    if (wh_primitive->count()) {
      if (tuple.size() != 1)
        throw CLI::ValidationError("--primitive takes exactly one --word");
      std::cout << (wedge::is_primitive_class(tuple[0]) ? "true" : "false") << '\n';
    } else if (wh_basis->count()) {
      std::cout << (wedge::is_partial_basis_classes(tuple) ? "true" : "false")
                << '\n';
    } else if (wh_minimize->count()) {
      wedge::MinimizeResult r = wedge::whitehead_minimize(tuple);
      for (size_t i = 0; i < r.tuple.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << r.tuple[i].str();
      }
      std::cout << '\n';
    } else {
      for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << tuple[i].str();
      }
      std::cout << '\n';
    }
  });

  CLI::App* gi = app.add_subcommand("graph-info",
                                    "summary of a labelled graph in the JSON format");
  std::string gi_path;
  gi->add_option("--graph", gi_path, "graph file")->required();
  gi->callback([&] {
    wedge::LabelledGraph g = wedge::LabelledGraph::from_json_file(gi_path);
    row("vertices", std::to_string(g.n_vertices()));
    row("edges", std::to_string(g.n_edges()));
    int loops = 0;
    for (int e = 0; e < g.n_edges(); ++e)
      if (g.is_loop(e)) ++loops;
    if (loops) row("loops", std::to_string(loops));
    std::string labels;
    for (int v : g.labels()) {
      if (!labels.empty()) labels += ' ';
      labels += g.vertex_name(v);
    }
    row("labels", g.n_labels() ? labels : "none");
    int r = wedge::rank(g);
    row("rank", std::to_string(r));
    row("expected_dim", std::to_string(wedge::expected_dimension(r, g.n_labels())));
    std::vector<int> all(g.n_edges());
    for (int e = 0; e < g.n_edges(); ++e) all[e] = e;
    try {
      wedge::Subgraph c = wedge::max_core(wedge::Subgraph(g, all));
      row("core_edges", std::to_string(c.n_edges()));
    } catch (const wedge::EmptyCore&) {
      row("core_edges", "0");
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const wedge::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return rc;
}
