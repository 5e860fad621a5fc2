#pragma once

#include <string>
#include <vector>

#include "wedge/errors.hpp"

namespace wedge {

// Letters encode signed generators: generator g in [0, rank) appears as
// letter 2g (positive) or 2g+1 (inverse).
inline int inverse_letter(int c) { return c ^ 1; }
inline int letter_generator(int c) { return c >> 1; }

// Spelled-out generator alphabet: x, y, z first, then a, b, c, ...  so small
// ranks read like the usual x, y conventions.
char generator_char(int rank, int g);
std::string letter_string(int rank, int c);

// Conjugacy class of a non-trivial element of a free group, stored as the
// cyclically reduced word in its lexicographically least rotation.  Classes
// of w and w^-1 are distinct objects.
class CyclicWord {
 public:
  CyclicWord(int rank, std::vector<int> letters);  // canonicalises; EmptyClass if trivial
  static CyclicWord parse(int rank, const std::string& word);

  int rank() const { return rank_; }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }
  CyclicWord inverse() const;
  std::string str() const;

  std::vector<long long> abelianization() const;  // exponent sums per generator

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) {
    return a.rank_ == b.rank_ && a.letters_ == b.letters_;
  }
  // by (length, letters): the order used for deterministic enumerations
  friend bool operator<(const CyclicWord& a, const CyclicWord& b) {
    if (a.letters_.size() != b.letters_.size())
      return a.letters_.size() < b.letters_.size();
    return a.letters_ < b.letters_;
  }

 private:
  int rank_;
  std::vector<int> letters_;
};

// Free reduction followed by cyclic reduction and least-rotation pick;
// throws EmptyClass when the input represents the identity.
std::vector<int> cyclic_normal_form(std::vector<int> letters);

}  // namespace wedge
