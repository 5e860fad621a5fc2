#include "wedge/basis_complex.hpp"

#include <functional>
#include <numeric>

#include "json.hpp"
#include "wedge/parallel.hpp"

namespace wedge {

std::string BasisTruncation::sidecar_json() const {
  nlohmann::json j;
  j["rank"] = rank;
  j["max_len"] = max_len;
  nlohmann::json verts = nlohmann::json::object();
  for (size_t i = 0; i < classes.size(); ++i)
    verts["w" + std::to_string(i)] = classes[i].str();
  j["vertices"] = verts;
  return j.dump();
}

namespace {

// candidate subsets of a given size whose proper pairs all passed already;
// a subset of a partial basis is a partial basis, so a failed pair rules the
// superset out without a search
std::vector<std::vector<int>> candidate_subsets(int n_vertices, int size,
                                                const std::vector<std::vector<bool>>& pair_ok) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == size) {
      out.push_back(pick);
      return;
    }
    for (int v = from; v < n_vertices; ++v) {
      bool ok = true;
      for (int u : pick)
        if (!pair_ok[u][v]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace

BasisTruncation build_B_truncation(int rank, int max_len, int jobs) {
  if (rank != 2 && rank != 3)
    throw InvalidArgument("truncations are built for rank 2 or 3 only");
  const int cap = rank == 2 ? 8 : 4;
  if (max_len < 1 || max_len > cap)
    throw InvalidArgument("max_len out of budget for this rank");

  BasisTruncation t;
  t.rank = rank;
  t.max_len = max_len;
  t.classes = enumerate_primitive_classes(rank, max_len);
  const int n = static_cast<int>(t.classes.size());

  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("w" + std::to_string(i));
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < n; ++i) faces.push_back({i});

  // certify pairs, then (for rank 3) triples whose pairs all passed
  std::vector<std::vector<int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::vector<char> pair_res(pairs.size(), 0);
  run_indexed(pairs.size(), jobs, [&](size_t i) {
    pair_res[i] =
        is_partial_basis_classes({t.classes[pairs[i][0]], t.classes[pairs[i][1]]})
            ? 1
            : 0;
  });
  std::vector<std::vector<bool>> pair_ok(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < pairs.size(); ++i)
    if (pair_res[i]) {
      faces.push_back(pairs[i]);
      pair_ok[pairs[i][0]][pairs[i][1]] = true;
      pair_ok[pairs[i][1]][pairs[i][0]] = true;
    }

  if (rank == 3) {
    auto triples = candidate_subsets(n, 3, pair_ok);
    std::vector<char> triple_res(triples.size(), 0);
    run_indexed(triples.size(), jobs, [&](size_t i) {
      triple_res[i] = is_partial_basis_classes({t.classes[triples[i][0]],
                                                t.classes[triples[i][1]],
                                                t.classes[triples[i][2]]})
                          ? 1
                          : 0;
    });
    for (size_t i = 0; i < triples.size(); ++i)
      if (triple_res[i]) faces.push_back(triples[i]);
  }

  t.complex = SimplicialComplex::from_faces(std::move(names), std::move(faces));
  return t;
}

bool farey_edge(const std::array<long long, 2>& u, const std::array<long long, 2>& v) {
  auto primitive = [](const std::array<long long, 2>& p) {
    return std::gcd(p[0], p[1]) == 1;
  };
  if (!primitive(u) || !primitive(v))
    throw InvalidArgument("farey_edge needs primitive vectors");
  long long det = u[0] * v[1] - u[1] * v[0];
  return det == 1 || det == -1;
}

bool farey_edge(const CyclicWord& u, const CyclicWord& v) {
  if (u.rank() != 2 || v.rank() != 2)
    throw InvalidArgument("farey_edge on classes needs rank 2");
  auto au = u.abelianization(), av = v.abelianization();
  return farey_edge({au[0], au[1]}, {av[0], av[1]});
}

}  // namespace wedge
