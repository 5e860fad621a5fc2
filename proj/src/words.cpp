#include "wedge/words.hpp"

#include <algorithm>
#include <cctype>

namespace wedge {

char generator_char(int rank, int g) {
  if (g < 0 || g >= rank) throw InvalidArgument("generator index out of range");
  // x, y, z cover everything up to rank 3; beyond that fall back to a, b, ...
  if (rank <= 3) return static_cast<char>('x' + g);
  return g < 3 ? static_cast<char>('x' + g) : static_cast<char>('a' + g - 3);
}

std::string letter_string(int rank, int c) {
  char ch = generator_char(rank, letter_generator(c));
  if (c & 1) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return std::string(1, ch);
}

std::vector<int> cyclic_normal_form(std::vector<int> letters) {
  // free reduction
  std::vector<int> red;
  for (int c : letters) {
    if (!red.empty() && red.back() == inverse_letter(c))
      red.pop_back();
    else
      red.push_back(c);
  }
  // cyclic reduction: trim cancelling ends
  size_t lo = 0, hi = red.size();
  while (hi - lo >= 2 && red[lo] == inverse_letter(red[hi - 1])) {
    ++lo;
    --hi;
  }
  std::vector<int> cyc(red.begin() + lo, red.begin() + hi);
  if (cyc.empty()) throw EmptyClass("trivial element has no conjugacy class here");
  // least rotation
  std::vector<int> best = cyc;
  for (size_t r = 1; r < cyc.size(); ++r) {
    std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
    if (cyc < best) best = cyc;
  }
  return best;
}

CyclicWord::CyclicWord(int rank, std::vector<int> letters) : rank_(rank) {
  if (rank < 1) throw InvalidArgument("rank must be positive");
  for (int c : letters)
    if (c < 0 || letter_generator(c) >= rank)
      throw InvalidArgument("letter outside the alphabet for this rank");
  letters_ = cyclic_normal_form(std::move(letters));
}

CyclicWord CyclicWord::parse(int rank, const std::string& word) {
  if (rank < 1) throw InvalidArgument("rank must be positive");
  // lowercase letters are generators, uppercase their inverses: xyXY reads as
  // the commutator x y x^-1 y^-1
  std::vector<int> letters;
  for (char ch : word) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    bool inv = std::isupper(static_cast<unsigned char>(ch)) != 0;
    char low = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    int g = -1;
    for (int cand = 0; cand < rank; ++cand)
      if (generator_char(rank, cand) == low) {
        g = cand;
        break;
      }
    if (g < 0) throw ParseError(std::string("unknown generator '") + ch + "'");
    letters.push_back(2 * g + (inv ? 1 : 0));
  }
  return CyclicWord(rank, std::move(letters));
}

CyclicWord CyclicWord::inverse() const {
  std::vector<int> inv;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    inv.push_back(inverse_letter(*it));
  return CyclicWord(rank_, std::move(inv));
}

std::string CyclicWord::str() const {
  std::string out;
  for (int c : letters_) out += letter_string(rank_, c);
  return out;
}

std::vector<long long> CyclicWord::abelianization() const {
  std::vector<long long> e(rank_, 0);
  for (int c : letters_) e[letter_generator(c)] += (c & 1) ? -1 : 1;
  return e;
}

}  // namespace wedge
