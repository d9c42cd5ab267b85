#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "simcon/factorization.hpp"
#include "simcon/spectrum.hpp"
#include "simcon/word.hpp"

namespace simcon {

/// Unary congruence rule: x^p ~_level x^q iff min(p, level) == min(q, level).
/// Levels <= 0 make every pair congruent.
inline bool unary_sim(std::size_t p, std::size_t q, long long level) {
  if (level <= 0) return true;
  auto cap = static_cast<std::size_t>(level);
  return std::min(p, cap) == std::min(q, cap);
}

namespace detail {

inline void require_binary(const Word& w) {
  if (w.alphabet().size() != 2)
    throw std::domain_error("operation requires a binary alphabet, got \"" +
                            w.alphabet().symbols() + "\"");
}

inline void require_binary_pair(const Word& u, const Word& v) {
  require_binary(u);
  require_binary(v);
  if (u.alphabet() != v.alphabet())
    throw std::domain_error("operation requires a common binary alphabet");
}

}  // namespace detail

enum class BinaryBetaShape : std::uint8_t {
  single_letter,  // beta = x, both neighbouring alphas in other(x)^+
  two_letter,     // beta = x other(x), preceding alpha in x^*, succeeding in other(x)^*
};

struct BinaryAbaCase {
  BinaryBetaShape shape;
  Letter x;  // the leading letter of beta
};

/// Identifies the shape of beta_i over a binary alphabet and checks the
/// constraints it imposes on the neighbouring alpha factors. A violation is
/// an implementation bug, not bad input.
inline BinaryAbaCase classify_binary_aba(const AlphaBetaFactorization& f, std::size_t i) {
  detail::require_binary(f.word());
  Word beta = f.beta(i);
  Word prev = f.alpha(i - 1);
  Word next = f.alpha(i);
  auto all_equal = [](const Word& w, Letter l) {
    for (Letter c : w.letters())
      if (c != l) return false;
    return true;
  };
  if (beta.size() == 1) {
    Letter x = beta[0];
    Letter other = static_cast<Letter>(1 - x);
    if (prev.empty() || next.empty() || !all_equal(prev, other) || !all_equal(next, other))
      throw std::logic_error("binary beta case violated: single-letter beta needs unary "
                             "nonempty neighbours over the other letter");
    return BinaryAbaCase{BinaryBetaShape::single_letter, x};
  }
  if (beta.size() == 2 && beta[0] != beta[1]) {
    Letter x = beta[0];
    if (!all_equal(prev, x) || !all_equal(next, beta[1]))
      throw std::logic_error("binary beta case violated: two-letter beta needs x^* before "
                             "and other(x)^* after");
    return BinaryAbaCase{BinaryBetaShape::two_letter, x};
  }
  throw std::logic_error("binary beta must be a single letter or two distinct letters");
}

/// Everything the binary characterization of ~_k needs to know about a word,
/// derived from its alpha-beta factorization. Two words over the same binary
/// alphabet are equal iff their profiles are equal.
struct BinaryProfile {
  unsigned iota = 0;
  LetterSet letters;
  std::vector<std::uint8_t> beta_codes;   // 0,1: single letter; 2: "01"; 3: "10"
  std::vector<std::uint32_t> alpha_lens;  // iota + 1 entries
  std::vector<std::uint8_t> alpha_letters;  // letter of the unary alpha, 0xff for empty

  friend bool operator==(const BinaryProfile& a, const BinaryProfile& b) {
    return a.iota == b.iota && a.letters == b.letters && a.beta_codes == b.beta_codes &&
           a.alpha_lens == b.alpha_lens && a.alpha_letters == b.alpha_letters;
  }
};

inline BinaryProfile binary_profile(const Word& w) {
  detail::require_binary(w);
  AlphaBetaFactorization f(w, w.alphabet().full_set());
  BinaryProfile p;
  p.iota = static_cast<unsigned>(f.arch_count());
  p.letters = w.letter_set();
  p.beta_codes.reserve(p.iota);
  for (std::size_t i = 1; i <= p.iota; ++i) {
    auto [b, e] = f.beta_span(i);
    p.beta_codes.push_back(e - b == 1 ? w[b] : static_cast<std::uint8_t>(2 + w[b]));
  }
  p.alpha_lens.reserve(p.iota + 1);
  p.alpha_letters.reserve(p.iota + 1);
  for (std::size_t i = 0; i <= p.iota; ++i) {
    auto [b, e] = f.alpha_span(i);
    p.alpha_lens.push_back(static_cast<std::uint32_t>(e - b));
    p.alpha_letters.push_back(b == e ? 0xff : w[b]);
  }
  return p;
}

/// Binary characterization of ~_k: with m = iota(u) = iota(v) < k the words
/// are congruent iff all beta factors coincide and the unary alpha factors
/// are congruent at level k - m.
inline bool equiv_binary(const BinaryProfile& u, const BinaryProfile& v, unsigned k) {
  if (k == 0) return true;
  if (u.iota >= k && v.iota >= k) return true;
  if (u.iota != v.iota) return false;
  const unsigned m = u.iota;
  if (u.beta_codes != v.beta_codes) return false;
  const long long level = static_cast<long long>(k) - m;
  for (std::size_t i = 0; i <= m; ++i) {
    if (!unary_sim(u.alpha_lens[i], v.alpha_lens[i], level)) return false;
    if (u.alpha_lens[i] > 0 && v.alpha_lens[i] > 0 && u.alpha_letters[i] != v.alpha_letters[i])
      return false;
  }
  return true;
}

inline bool equiv_binary(const Word& u, const Word& v, unsigned k) {
  detail::require_binary_pair(u, v);
  return equiv_binary(binary_profile(u), binary_profile(v), k);
}

/// MaxSimK over a binary alphabet: compare arch counts and alphabets, then
/// beta sequences, then solve the unary alpha pairs.
inline MaxSim maxsimk_binary(const BinaryProfile& u, const BinaryProfile& v) {
  if (u == v) return MaxSim::inf();
  if (u.iota != v.iota || u.letters != v.letters)
    return MaxSim::finite(std::min(u.iota, v.iota));
  if (u.beta_codes == v.beta_codes) {
    unsigned best = std::numeric_limits<unsigned>::max();
    for (std::size_t i = 0; i <= u.iota; ++i) {
      if (u.alpha_lens[i] == v.alpha_lens[i] && u.alpha_letters[i] == v.alpha_letters[i]) continue;
      unsigned e;
      if (u.alpha_lens[i] > 0 && v.alpha_lens[i] > 0 && u.alpha_letters[i] != v.alpha_letters[i])
        e = 0;  // unreachable when all betas agree, but cheap to get right
      else
        e = std::min(u.alpha_lens[i], v.alpha_lens[i]);
      best = std::min(best, e);
    }
    if (best == std::numeric_limits<unsigned>::max())
      throw std::logic_error("equal profiles should have been caught as equal words");
    return MaxSim::finite(u.iota + best);
  }
  return MaxSim::finite(u.iota);
}

inline MaxSim maxsimk_binary(const Word& u, const Word& v) {
  detail::require_binary_pair(u, v);
  return maxsimk_binary(binary_profile(u), binary_profile(v));
}

/// A class is a singleton iff the word has fewer than k arches and every
/// alpha factor is shorter than k - iota(w).
inline bool is_singleton(const Word& w, unsigned k) {
  detail::require_binary(w);
  BinaryProfile p = binary_profile(w);
  if (p.iota >= k) return false;
  const unsigned slack = k - p.iota;
  for (std::uint32_t len : p.alpha_lens)
    if (len >= slack) return false;
  return true;
}

/// A witness distinct from w but k-congruent to it. Words with at least k
/// arches absorb an appended letter; otherwise some alpha with
/// |alpha| >= k - iota(w) can be doubled.
inline Word singleton_witness(const Word& w, unsigned k) {
  detail::require_binary(w);
  AlphaBetaFactorization f(w, w.alphabet().full_set());
  const unsigned m = static_cast<unsigned>(f.arch_count());
  if (m >= k) return w.appended(0);
  const unsigned slack = k - m;
  for (std::size_t i = 0; i <= m; ++i) {
    auto [b, e] = f.alpha_span(i);
    if (e - b >= slack) {
      std::vector<Letter> pumped;
      pumped.reserve(w.size() + (e - b));
      pumped.insert(pumped.end(), w.letters().begin(), w.letters().begin() + e);
      pumped.insert(pumped.end(), w.letters().begin() + b, w.letters().end());
      return Word(w.alphabet_ptr(), std::move(pumped));
    }
  }
  throw std::domain_error("singleton classes have no witness");
}

/// Canonical class representative: words with at least k arches map to
/// (xy)^k over the alphabet order, all others keep their betas and truncate
/// each alpha to length min(|alpha|, k - iota(w)).
/// normal_form_binary(u, k) == normal_form_binary(v, k) iff u ~_k v.
inline Word normal_form_binary(const Word& w, unsigned k) {
  detail::require_binary(w);
  AlphaBetaFactorization f(w, w.alphabet().full_set());
  const unsigned m = static_cast<unsigned>(f.arch_count());
  if (m >= k) {
    std::vector<Letter> nf;
    nf.reserve(2 * k);
    for (unsigned i = 0; i < k; ++i) {
      nf.push_back(0);
      nf.push_back(1);
    }
    return Word(w.alphabet_ptr(), std::move(nf));
  }
  const std::size_t cap = k - m;
  std::vector<Letter> nf;
  nf.reserve(w.size());
  for (std::size_t i = 0; i <= m; ++i) {
    auto [b, e] = f.alpha_span(i);
    for (std::size_t p = b; p < b + std::min(e - b, cap); ++p) nf.push_back(w[p]);
    if (i < m) {
      auto [bb, be] = f.beta_span(i + 1);
      for (std::size_t p = bb; p < be; ++p) nf.push_back(w[p]);
    }
  }
  return Word(w.alphabet_ptr(), std::move(nf));
}

}  // namespace simcon
