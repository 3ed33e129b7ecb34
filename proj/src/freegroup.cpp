#include "goldman/freegroup.hpp"

#include <algorithm>

namespace goldman {

Word parse_word(const std::string& text) {
  Word w;
  w.reserve(text.size());
  for (char ch : text) {
    if (ch >= 'a' && ch <= 'z')
      w.push_back(Letter{ch - 'a', +1});
    else if (ch >= 'A' && ch <= 'Z')
      w.push_back(Letter{ch - 'A', -1});
    else
      raise(Errc::bad_letter, std::string("unexpected character '") + ch + "' in word");
  }
  return w;
}

std::string word_text(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (const Letter& l : w) {
    if (l.index < 0 || l.index > 25) raise(Errc::bad_letter, "letter index out of text range");
    s.push_back(static_cast<char>((l.sign > 0 ? 'a' : 'A') + l.index));
  }
  return s;
}

Word inverse(const Word& w) {
  Word r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(it->inverse());
  return r;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

bool word_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), letter_less);
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverse())
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

CyclicReduction cyclic_reduce(const Word& w) {
  Word core = free_reduce(w);
  Word conjugator;
  while (core.size() >= 2 && core.front() == core.back().inverse()) {
    conjugator.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  return CyclicReduction{std::move(core), std::move(conjugator)};
}

bool is_cyclically_reduced(const Word& w) {
  if (w != free_reduce(w)) return false;
  return w.size() < 2 || w.front() != w.back().inverse();
}

ConjClass conj_class(const Word& w) {
  Word core = cyclic_reduce(w).core;
  const std::size_t n = core.size();
  if (n == 0) return ConjClass{};
  Word best = core;
  Word rot = core;
  for (std::size_t k = 1; k < n; ++k) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (word_less(rot, best)) best = rot;
  }
  return ConjClass{std::move(best)};
}

bool is_conjugate(const Word& u, const Word& v) { return conj_class(u) == conj_class(v); }

MoebiusMap evaluate_word(std::span<const MoebiusMap> generators, const Word& w) {
  MoebiusMap m = MoebiusMap::identity();
  for (const Letter& l : w) {
    if (l.index < 0 || static_cast<std::size_t>(l.index) >= generators.size())
      raise(Errc::bad_letter, "letter does not name a generator of this surface");
    const MoebiusMap& g = generators[static_cast<std::size_t>(l.index)];
    m = compose(m, l.sign > 0 ? g : g.inverse());
  }
  return m;
}

}  // namespace goldman
