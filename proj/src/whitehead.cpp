#include "wedge/whitehead.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace wedge {

WhiteheadAuto WhiteheadAuto::permutation(std::vector<int> perm,
                                         std::vector<bool> flip) {
  WhiteheadAuto f;
  f.kind = Kind::Permutation;
  f.perm = std::move(perm);
  f.flip = std::move(flip);
  return f;
}

WhiteheadAuto WhiteheadAuto::multiplier(std::vector<bool> in_set, int a) {
  WhiteheadAuto f;
  f.kind = Kind::Multiplier;
  f.in_set = std::move(in_set);
  f.a = a;
  return f;
}

void WhiteheadAuto::validate(int rank) const {
  if (kind == Kind::Permutation) {
    if (static_cast<int>(perm.size()) != rank ||
        static_cast<int>(flip.size()) != rank)
      throw InvalidArgument("permutation data has wrong rank");
    std::vector<bool> seen(rank, false);
    for (int g : perm) {
      if (g < 0 || g >= rank || seen[g])
        throw InvalidArgument("not a permutation of the generators");
      seen[g] = true;
    }
    return;
  }
  if (static_cast<int>(in_set.size()) != 2 * rank)
    throw InvalidArgument("multiplier set has wrong rank");
  if (a < 0 || a >= 2 * rank) throw InvalidArgument("multiplier letter out of range");
  if (!in_set[a] || in_set[inverse_letter(a)])
    throw InvalidArgument("multiplier set must contain a and exclude a^-1");
}

namespace {

std::vector<int> apply_to_letters(const WhiteheadAuto& f,
                                  const std::vector<int>& letters) {
  std::vector<int> out;
  if (f.kind == WhiteheadAuto::Kind::Permutation) {
    for (int c : letters) {
      int g = letter_generator(c);
      out.push_back(2 * f.perm[g] + ((c & 1) ^ (f.flip[g] ? 1 : 0)));
    }
    return out;
  }
  for (int c : letters) {
    if (c == f.a || c == inverse_letter(f.a)) {
      out.push_back(c);
      continue;
    }
    if (f.in_set[inverse_letter(c)]) out.push_back(inverse_letter(f.a));
    out.push_back(c);
    if (f.in_set[c]) out.push_back(f.a);
  }
  return out;
}

}  // namespace

CyclicWord apply_whitehead(const WhiteheadAuto& f, const CyclicWord& w) {
  f.validate(w.rank());
  return CyclicWord(w.rank(), apply_to_letters(f, w.letters()));
}

ClassTuple apply_whitehead(const WhiteheadAuto& f, const ClassTuple& t) {
  ClassTuple out;
  out.reserve(t.size());
  for (const auto& w : t) out.push_back(apply_whitehead(f, w));
  return out;
}

std::vector<WhiteheadAuto> multiplier_autos(int rank) {
  std::vector<WhiteheadAuto> out;
  for (int a = 0; a < 2 * rank; ++a) {
    // the other letters, everything except a and a^-1, in ascending order
    std::vector<int> others;
    for (int c = 0; c < 2 * rank; ++c)
      if (c != a && c != inverse_letter(a)) others.push_back(c);
    for (unsigned mask = 0; mask < (1u << others.size()); ++mask) {
      std::vector<bool> in_set(2 * rank, false);
      in_set[a] = true;
      for (size_t i = 0; i < others.size(); ++i)
        if (mask & (1u << i)) in_set[others[i]] = true;
      out.push_back(WhiteheadAuto::multiplier(std::move(in_set), a));
    }
  }
  return out;
}

std::vector<WhiteheadAuto> permutation_autos(int rank) {
  std::vector<WhiteheadAuto> out;
  std::vector<int> perm(rank);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
      std::vector<bool> flip(rank, false);
      for (int g = 0; g < rank; ++g)
        if (mask & (1u << g)) flip[g] = true;
      out.push_back(WhiteheadAuto::permutation(perm, std::move(flip)));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

long long total_length(const ClassTuple& t) {
  long long n = 0;
  for (const auto& w : t) n += w.length();
  return n;
}

int tuple_rank(const ClassTuple& t) {
  if (t.empty()) throw InvalidArgument("empty class tuple");
  int rank = t.front().rank();
  for (const auto& w : t)
    if (w.rank() != rank) throw InvalidArgument("mixed ranks in class tuple");
  return rank;
}

}  // namespace

MinimizeResult whitehead_minimize(const ClassTuple& t) {
  const int rank = tuple_rank(t);
  // type I moves never change lengths, so strict descent only ever picks
  // multiplier moves; both lists are scanned to keep the order fixed
  std::vector<WhiteheadAuto> autos = multiplier_autos(rank);
  for (auto& f : permutation_autos(rank)) autos.push_back(std::move(f));
  MinimizeResult res{t, {}, total_length(t)};
  bool improved = true;
  while (improved) {
    improved = false;
    for (const auto& f : autos) {
      ClassTuple next = apply_whitehead(f, res.tuple);
      long long len = total_length(next);
      if (len < res.total_length) {
        res.tuple = std::move(next);
        res.total_length = len;
        res.applied.push_back(f);
        improved = true;
        break;
      }
    }
  }
  return res;
}

bool is_primitive_class(const CyclicWord& w) {
  return whitehead_minimize({w}).total_length == 1;
}

namespace {

std::vector<std::vector<int>> tuple_key(const ClassTuple& t) {
  std::vector<std::vector<int>> key;
  key.reserve(t.size());
  for (const auto& w : t) key.push_back(w.letters());
  return key;
}

bool distinct_single_generators(const ClassTuple& t) {
  std::vector<bool> used(t.front().rank(), false);
  for (const auto& w : t) {
    if (w.length() != 1) return false;
    int g = letter_generator(w.letters()[0]);
    if (used[g]) return false;
    used[g] = true;
  }
  return true;
}

}  // namespace

bool is_partial_basis_classes(const ClassTuple& t, long long budget) {
  const int rank = tuple_rank(t);
  const int k = static_cast<int>(t.size());
  if (k < 1 || k > rank)
    throw InvalidArgument("tuple size must be between 1 and the rank");
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (t[i] == t[j]) throw InvalidArgument("repeated class in tuple");

  MinimizeResult min = whitehead_minimize(t);
  // a partial basis minimises to single letters, one per class
  if (min.total_length != k) return false;

  // breadth-first search through length-preserving moves at the minimal level
  std::vector<WhiteheadAuto> autos = multiplier_autos(rank);
  for (auto& f : permutation_autos(rank)) autos.push_back(std::move(f));
  std::set<std::vector<std::vector<int>>> visited;
  std::deque<ClassTuple> queue;
  visited.insert(tuple_key(min.tuple));
  queue.push_back(min.tuple);
  while (!queue.empty()) {
    ClassTuple cur = std::move(queue.front());
    queue.pop_front();
    if (distinct_single_generators(cur)) return true;
    for (const auto& f : autos) {
      ClassTuple next = apply_whitehead(f, cur);
      if (total_length(next) != min.total_length) continue;
      if (!visited.insert(tuple_key(next)).second) continue;
      if (static_cast<long long>(visited.size()) > budget)
        throw SearchBudgetExceeded("minimal-level search exceeded its budget");
      queue.push_back(std::move(next));
    }
  }
  return false;
}

namespace {

// cyclically reduced words of exactly the given length, lexicographically
void reduced_words(int rank, int len, std::vector<int>& word,
                   std::vector<std::vector<int>>& out) {
  if (static_cast<int>(word.size()) == len) {
    if (len == 1 || word.front() != inverse_letter(word.back()))
      out.push_back(word);
    return;
  }
  for (int c = 0; c < 2 * rank; ++c) {
    if (!word.empty() && c == inverse_letter(word.back())) continue;
    word.push_back(c);
    reduced_words(rank, len, word, out);
    word.pop_back();
  }
}

}  // namespace

std::vector<CyclicWord> enumerate_classes(int rank, int max_len) {
  if (rank < 1) throw InvalidArgument("rank must be positive");
  if (max_len < 1) throw InvalidArgument("max_len must be positive");
  std::set<CyclicWord> classes;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> words;
    std::vector<int> word;
    reduced_words(rank, len, word, words);
    for (auto& w : words) classes.insert(CyclicWord(rank, std::move(w)));
  }
  return {classes.begin(), classes.end()};
}

std::vector<CyclicWord> enumerate_primitive_classes(int rank, int max_len) {
  std::vector<CyclicWord> out;
  for (const auto& w : enumerate_classes(rank, max_len))
    if (is_primitive_class(w)) out.push_back(w);
  return out;
}

}  // namespace wedge
