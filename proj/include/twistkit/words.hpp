#pragma once

/* Free words and finite presentations.

   Generators are indices 0..gens-1; a word is a sequence of letters with
   exponent +1 or -1, kept unreduced (Fox calculus and evaluation are
   homomorphic, cancellation happens numerically). phi is the total exponent
   sum: the abelianization sending every meridian to t. */

#include <stdexcept>
#include <string>
#include <vector>

namespace twistkit {

struct Letter {
  int gen;
  int exp;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct FreeWord {
  std::vector<Letter> letters;

  FreeWord() = default;
  FreeWord(std::initializer_list<Letter> ls) : letters(ls) {}

  static FreeWord gen(int g, int e = 1) { return FreeWord{{g, e}}; }

  FreeWord& append(int g, int e) {
    letters.push_back({g, e});
    return *this;
  }
  FreeWord& append(const FreeWord& w) {
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
    return *this;
  }

  FreeWord inverse() const {
    FreeWord w;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      w.letters.push_back({it->gen, -it->exp});
    return w;
  }

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

inline int phi(const FreeWord& w) {
  int s = 0;
  for (const auto& l : w.letters) s += l.exp;
  return s;
}

struct GroupPresentation {
  int gens = 0;
  std::vector<FreeWord> relators;
  // every Wirtinger generator is a meridian of the component recorded here
  std::vector<int> component_of_generator;
  int components = 0;
};

// contract checks shared by wirtinger() output and hand-built presentations
inline void validate_presentation(const GroupPresentation& p) {
  if (int(p.component_of_generator.size()) != p.gens)
    throw std::invalid_argument("presentation: generator/component table size mismatch");
  for (int c : p.component_of_generator)
    if (c < 0 || c >= p.components)
      throw std::invalid_argument("presentation: component index out of range");
  for (const auto& r : p.relators) {
    for (const auto& l : r.letters) {
      if (l.gen < 0 || l.gen >= p.gens)
        throw std::invalid_argument("presentation: relator references unknown generator");
      if (l.exp != 1 && l.exp != -1)
        throw std::invalid_argument("presentation: letter exponent must be +-1");
    }
    if (phi(r) != 0)
      throw std::invalid_argument("presentation: relator with nonzero exponent sum");
  }
}

}  // namespace twistkit
