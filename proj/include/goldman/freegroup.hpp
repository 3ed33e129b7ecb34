#pragma once

#include <span>
#include <string>
#include <vector>

#include "goldman/errors.hpp"
#include "goldman/halfplane.hpp"

namespace goldman {

/// One generator or inverse generator of a free group. Text form: 'a'..'z'
/// for generators 0..25, 'A'..'Z' for their inverses.
struct Letter {
  int index = 0;
  int sign = 1;  // +1 generator, -1 inverse

  Letter inverse() const { return Letter{index, -sign}; }
  bool operator==(const Letter&) const = default;
};

/// Ordering used for canonical forms: by index, then +1 before -1.
inline bool letter_less(const Letter& l, const Letter& r) {
  if (l.index != r.index) return l.index < r.index;
  return l.sign > r.sign;
}

using Word = std::vector<Letter>;

Word parse_word(const std::string& text);
std::string word_text(const Word& w);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
bool word_less(const Word& a, const Word& b);  // lexicographic via letter_less

/// Removes all adjacent cancelling pairs; same group element.
Word free_reduce(const Word& w);

struct CyclicReduction {
  Word core;        // cyclically reduced
  Word conjugator;  // w = conjugator * core * conjugator^-1
};
CyclicReduction cyclic_reduce(const Word& w);

bool is_cyclically_reduced(const Word& w);

/// Canonical conjugacy class: the cyclic reduction rotated to its
/// lexicographically least rotation. Two words are conjugate iff their
/// canonical forms are equal; this is exact, never numeric.
struct ConjClass {
  Word canonical;

  bool operator==(const ConjClass&) const = default;
  bool operator<(const ConjClass& o) const { return word_less(canonical, o.canonical); }
  std::string text() const { return word_text(canonical); }
  bool trivial() const { return canonical.empty(); }
};

ConjClass conj_class(const Word& w);
bool is_conjugate(const Word& u, const Word& v);

/// Evaluates a word as a product of the given generator matrices; the empty
/// word is the identity. Letters beyond the generator count are an error.
MoebiusMap evaluate_word(std::span<const MoebiusMap> generators, const Word& w);

}  // namespace goldman
