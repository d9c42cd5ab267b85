#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "simcon/word.hpp"

namespace simcon {

namespace detail {

/// next[i * sigma + c] is the smallest position j >= i with w[j] == c, or
/// n when c does not occur in w[i..). Paths through this table starting at
/// position 0 are in bijection with the distinct scattered factors of w
/// (each factor is visited along its leftmost embedding exactly once).
inline std::vector<std::uint16_t> next_occurrence_table(const std::vector<Letter>& w,
                                                        std::size_t sigma) {
  const std::size_t n = w.size();
  std::vector<std::uint16_t> next((n + 1) * sigma, static_cast<std::uint16_t>(n));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t c = 0; c < sigma; ++c) next[i * sigma + c] = next[(i + 1) * sigma + c];
    next[i * sigma + w[i]] = static_cast<std::uint16_t>(i);
  }
  return next;
}

/// Enumerates the distinct scattered factors of w of length <= k, bucketed
/// by length. Within a bucket the factors appear in lexicographic order of
/// their letter indices, so concatenating buckets yields shortlex order.
template <class Visit>
void enumerate_factors(const std::vector<Letter>& w, std::size_t sigma, unsigned k, Visit visit) {
  const std::size_t n = w.size();
  auto next = next_occurrence_table(w, sigma);
  std::vector<Letter> stack;
  stack.reserve(k);
  visit(stack);  // the empty factor
  auto dfs = [&](auto&& self, std::size_t pos) -> void {
    if (stack.size() >= k) return;
    for (std::size_t c = 0; c < sigma; ++c) {
      std::size_t j = next[pos * sigma + c];
      if (j >= n) continue;
      stack.push_back(static_cast<Letter>(c));
      visit(stack);
      self(self, j + 1);
      stack.pop_back();
    }
  };
  if (k > 0) dfs(dfs, 0);
}

}  // namespace detail

/// The set of all scattered factors of length at most k of some word,
/// stored shortlex-sorted. Equality of spectra is equality as sets.
struct Spectrum {
  unsigned k = 0;
  Alphabet alphabet;
  std::vector<std::vector<Letter>> factors;  // shortlex sorted, epsilon included

  bool operator==(const Spectrum& other) const {
    return k == other.k && alphabet == other.alphabet && factors == other.factors;
  }
  bool operator!=(const Spectrum& other) const { return !(*this == other); }

  std::vector<std::string> rendered() const {
    std::vector<std::string> out;
    out.reserve(factors.size());
    for (const auto& f : factors) {
      std::string s;
      for (Letter l : f) s.push_back(alphabet.symbol(l));
      out.push_back(std::move(s));
    }
    return out;
  }

  /// Newline-separated rendering; the empty factor prints as "-".
  std::string to_text() const {
    std::string out;
    for (const auto& f : rendered()) {
      out += f.empty() ? "-" : f;
      out += '\n';
    }
    return out;
  }
};

/// True iff u is a scattered factor of w (greedy left-to-right matching).
inline bool is_scattered_factor(const Word& u, const Word& w) {
  if (u.alphabet() != w.alphabet())
    throw std::domain_error("scattered-factor test requires a common alphabet");
  std::size_t i = 0;
  for (Letter l : w.letters()) {
    if (i < u.size() && u[i] == l) ++i;
  }
  return i == u.size();
}

inline Spectrum spectrum_upto(const Word& w, unsigned k) {
  Spectrum s{k, w.alphabet(), {}};
  std::vector<std::vector<std::vector<Letter>>> buckets(k + 1);
  detail::enumerate_factors(w.letters(), w.alphabet().size(), k,
                            [&](const std::vector<Letter>& f) { buckets[f.size()].push_back(f); });
  for (auto& bucket : buckets)
    for (auto& f : bucket) s.factors.push_back(std::move(f));
  return s;
}

/// Simon k-congruence by direct spectrum comparison. This is the ground
/// truth the characterizations are verified against.
inline bool simk_oracle(const Word& u, const Word& v, unsigned k) {
  if (u.alphabet() != v.alphabet())
    throw std::domain_error("congruence test requires a common alphabet");
  return spectrum_upto(u, k) == spectrum_upto(v, k);
}

/// Number of arches of w with respect to omega (greedy factorization).
inline unsigned universality_index(const Word& w, LetterSet omega) {
  if (!w.letter_set().subset_of(omega))
    throw std::domain_error("universality requires omega to cover the word's letters");
  unsigned arches = 0;
  LetterSet seen;
  for (Letter l : w.letters()) {
    seen.insert(l);
    if (seen == omega) {
      ++arches;
      seen = LetterSet{};
    }
  }
  return arches;
}

inline unsigned universality_index(const Word& w) {
  return universality_index(w, w.alphabet().full_set());
}

/// Result of a MaxSimK computation: infinite iff the two words are equal.
struct MaxSim {
  bool infinite = false;
  unsigned value = 0;

  static MaxSim inf() { return MaxSim{true, 0}; }
  static MaxSim finite(unsigned k) { return MaxSim{false, k}; }

  unsigned value_or(unsigned cap) const { return infinite ? cap : value; }

  friend bool operator==(MaxSim a, MaxSim b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator!=(MaxSim a, MaxSim b) { return !(a == b); }

  std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

/// Largest k with u ~_k v, by spectrum comparison level by level. Two
/// distinct words differ at level max(|u|, |v|) at the latest, because a
/// word is its own scattered factor.
inline MaxSim maxsimk_oracle(const Word& u, const Word& v) {
  if (u.alphabet() != v.alphabet())
    throw std::domain_error("congruence test requires a common alphabet");
  if (u.letters() == v.letters()) return MaxSim::inf();
  const unsigned bound = static_cast<unsigned>(std::max(u.size(), v.size()));
  const std::size_t sigma = u.alphabet().size();
  auto by_length = [&](const Word& w) {
    std::vector<std::vector<std::vector<Letter>>> buckets(bound + 1);
    detail::enumerate_factors(w.letters(), sigma, bound,
                              [&](const std::vector<Letter>& f) { buckets[f.size()].push_back(f); });
    return buckets;
  };
  auto fu = by_length(u);
  auto fv = by_length(v);
  for (unsigned len = 1; len <= bound; ++len) {
    if (fu[len] != fv[len]) return MaxSim::finite(len - 1);
  }
  throw std::logic_error("distinct words must differ at level max(|u|,|v|)");
}

/// Decides uv ~_k u: true iff u splits into k blocks with weakly decreasing
/// alphabets whose last block still covers letters(v). Greedy from the right:
/// each block is the shortest suffix covering the set required so far, which
/// both minimizes the block's alphabet and leaves the longest prefix, so the
/// greedy choice is optimal.
inline bool can_drop_suffix(const Word& u, const Word& v, unsigned k) {
  if (u.empty()) throw std::domain_error("suffix elimination requires a nonempty left word");
  LetterSet needed = v.letter_set();
  const auto& letters = u.letters();
  std::size_t end = letters.size();
  for (unsigned block = 0; block < k; ++block) {
    if (needed.empty()) return true;  // remaining blocks may be empty
    LetterSet have;
    std::size_t begin = end;
    while (begin > 0 && !needed.subset_of(have)) have.insert(letters[--begin]);
    if (!needed.subset_of(have)) return false;
    needed = have;
    end = begin;
  }
  return true;
}

/// Decides uxv ~_k uv via the letter-elimination condition: there must be
/// p + p' >= k with ux ~_p u and xv ~_p' v.
inline bool can_drop_letter(const Word& u, Letter x, const Word& v, unsigned k) {
  if (u.alphabet() != v.alphabet())
    throw std::domain_error("letter elimination requires a common alphabet");
  if (x >= u.alphabet().size()) throw std::domain_error("letter outside the alphabet");
  MaxSim p = maxsimk_oracle(u.appended(x), u);
  MaxSim q = maxsimk_oracle(Word(u.alphabet_ptr(), {x}) + v, v);
  if (p.infinite || q.infinite) return true;
  return static_cast<std::uint64_t>(p.value) + q.value >= k;
}

}  // namespace simcon
