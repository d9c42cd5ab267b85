#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "simcon/binary.hpp"
#include "simcon/factorization.hpp"
#include "simcon/spectrum.hpp"
#include "simcon/word.hpp"

namespace simcon {

namespace detail {

inline void require_ternary_one_universal(const Word& w) {
  if (w.alphabet().size() != 3)
    throw std::domain_error("operation requires a ternary alphabet, got \"" +
                            w.alphabet().symbols() + "\"");
  if (universality_index(w) != 1)
    throw std::domain_error("operation requires a 1-universal word");
}

/// Universality of an alpha factor w.r.t. its own letters: only meaningful
/// when the alpha is binary, zero otherwise.
inline unsigned alpha_universality(const Word& alpha) {
  LetterSet ls = alpha.letter_set();
  if (ls.count() != 2) return 0;
  return universality_index(alpha, ls);
}

/// Rest of alpha w.r.t. its own letters; the whole word when alpha is not
/// binary (then it has no arches over any two-letter superset).
inline Word alpha_rest(const Word& alpha) {
  LetterSet ls = alpha.letter_set();
  if (ls.count() != 2) return alpha;
  auto ends = arch_end_positions(alpha.letters(), ls);
  return alpha.subword(ends.empty() ? 0 : ends.back(), alpha.size());
}

inline Word alpha_reverse_rest(const Word& alpha) {
  return alpha_rest(alpha.reversed()).reversed();
}

}  // namespace detail

/// Congruence of words over at most two letters, dispatching to the unary
/// rule or the binary characterization.
inline bool sim_small(const Word& a, const Word& b, unsigned level) {
  if (level == 0) return true;
  LetterSet la = a.letter_set();
  if (la != b.letter_set()) return false;
  if (la.count() <= 1) return unary_sim(a.size(), b.size(), level);
  return equiv_binary(a.project(la), b.project(la), level);
}

/// Canonical key with sim_class_key(u, l) == sim_class_key(v, l) iff
/// u ~_l v, for words with at most two distinct letters.
inline std::string sim_class_key(const Word& w, unsigned level) {
  if (level == 0) return "T";
  LetterSet ls = w.letter_set();
  if (ls.empty()) return "E";
  if (ls.count() == 1) {
    std::size_t capped = std::min<std::size_t>(w.size(), level);
    return "U" + w.alphabet().render(ls) + ":" + std::to_string(capped);
  }
  return "B" + normal_form_binary(w.project(ls), level).render();
}

enum class TernaryBetaRow : std::uint8_t {
  a22_same,      // alphas share the same two-letter alphabet; beta is one letter
  a22_overlap,   // two-letter alphabets meeting in the core letter
  a21_disjoint,  // binary alpha vs the modus-side letter; nonempty core
  a21_overlap,   // binary alpha vs the core letter
  a20,           // binary alpha vs empty; nonempty core
  a11_distinct,  // two different unary alphas; nonempty core
  a11_same,      // equal unary alphas consisting of the core letter
  a10,           // unary alpha vs empty; nonempty core
  a00,           // both alphas empty; beta contains the whole alphabet
};

inline std::string to_string(TernaryBetaRow row) {
  switch (row) {
    case TernaryBetaRow::a22_same: return "2-2-same";
    case TernaryBetaRow::a22_overlap: return "2-2-overlap";
    case TernaryBetaRow::a21_disjoint: return "2-1-disjoint";
    case TernaryBetaRow::a21_overlap: return "2-1-overlap";
    case TernaryBetaRow::a20: return "2-0";
    case TernaryBetaRow::a11_distinct: return "1-1-distinct";
    case TernaryBetaRow::a11_same: return "1-1-same";
    case TernaryBetaRow::a10: return "1-0";
    case TernaryBetaRow::a00: return "0-0";
  }
  return "?";
}

struct TernaryBetaCase {
  TernaryBetaRow row;
  bool mirrored;  // matched with the roles of alpha_0 and alpha_1 swapped
  std::size_t alpha0_letters;
  std::size_t alpha1_letters;
  std::string beta_pattern;  // the shape beta matched, e.g. "b a* c"
};

/// Classifies the beta factor of a 1-universal ternary word against the
/// possible shapes. The constraints are: the modus letter never occurs in
/// alpha_0 nor the reverse modus letter in alpha_1, the core is unary in the
/// letter y distinct from both modus letters, and the core may only be empty
/// when y occurs in both alphas (the arch and the reverse arch must each
/// cover the full alphabet). Violations indicate a factorization bug.
inline TernaryBetaCase classify_ternary_beta(const Word& w) {
  detail::require_ternary_one_universal(w);
  AlphaBetaFactorization f(w, w.alphabet().full_set());
  const Word beta = f.beta(1);
  const Word alpha0 = f.alpha(0);
  const Word alpha1 = f.alpha(1);
  const LetterSet a0 = alpha0.letter_set();
  const LetterSet a1 = alpha1.letter_set();
  const Letter m1 = beta[beta.size() - 1];
  const Letter w1 = beta[0];
  const auto chr = [&](Letter l) { return std::string(1, w.alphabet().symbol(l)); };

  TernaryBetaCase result{};
  result.alpha0_letters = a0.count();
  result.alpha1_letters = a1.count();
  result.mirrored = a0.count() < a1.count();

  if (a0.contains(m1))
    throw std::logic_error("ternary beta case violated: modus letter occurs in alpha_0");
  if (a1.contains(w1))
    throw std::logic_error("ternary beta case violated: reverse modus letter occurs in alpha_1");

  if (m1 == w1) {
    if (beta.size() != 1)
      throw std::logic_error("ternary beta case violated: equal modi need a one-letter beta");
    LetterSet expected = w.alphabet().full_set();
    expected.erase(m1);
    if (a0 != expected || a1 != expected)
      throw std::logic_error("ternary beta case violated: one-letter beta needs both alphas "
                             "over the remaining two letters");
    result.row = TernaryBetaRow::a22_same;
    result.beta_pattern = chr(m1);
    return result;
  }

  LetterSet rest = w.alphabet().full_set();
  rest.erase(m1);
  rest.erase(w1);
  const Letter y = rest.elements().front();
  const Word core = f.core(1);
  for (Letter l : core.letters())
    if (l != y) throw std::logic_error("ternary beta case violated: core is not unary in y");
  const bool core_may_be_empty = a0.contains(y) && a1.contains(y);
  if (core.empty() && !core_may_be_empty)
    throw std::logic_error("ternary beta case violated: empty core although y is missing "
                           "from an adjacent alpha");

  const std::size_t s0 = a0.count(), s1 = a1.count();
  const std::size_t hi = std::max(s0, s1), lo = std::min(s0, s1);
  if (hi == 2 && lo == 2) {
    result.row = TernaryBetaRow::a22_overlap;
  } else if (hi == 2 && lo == 1) {
    const LetterSet small = (s0 == 1) ? a0 : a1;
    result.row = small.contains(y) ? TernaryBetaRow::a21_overlap : TernaryBetaRow::a21_disjoint;
  } else if (hi == 2 && lo == 0) {
    result.row = TernaryBetaRow::a20;
  } else if (hi == 1 && lo == 1) {
    result.row = (a0 == a1) ? TernaryBetaRow::a11_same : TernaryBetaRow::a11_distinct;
  } else if (hi == 1 && lo == 0) {
    result.row = TernaryBetaRow::a10;
  } else {
    result.row = TernaryBetaRow::a00;
  }
  result.beta_pattern =
      chr(w1) + " " + chr(y) + (core_may_be_empty ? "*" : "+") + " " + chr(m1);
  return result;
}

/// Congruence-level discount for comparing cores: arches of the alpha
/// factors over their own letters, plus one for each side whose rest still
/// contains the core letter (that rest forms one more arch with the adjacent
/// modus letter).
struct CoreLevel {
  unsigned c;
  Letter y;
};

inline CoreLevel core_level(const Word& w) {
  detail::require_ternary_one_universal(w);
  AlphaBetaFactorization f(w, w.alphabet().full_set());
  const Word beta = f.beta(1);
  const Letter m1 = beta[beta.size() - 1];
  const Letter w1 = beta[0];
  if (m1 == w1) throw std::domain_error("core level requires distinct modus letters");
  LetterSet rest = w.alphabet().full_set();
  rest.erase(m1);
  rest.erase(w1);
  const Letter y = rest.elements().front();
  const Word alpha0 = f.alpha(0);
  const Word alpha1 = f.alpha(1);
  unsigned c = detail::alpha_universality(alpha0) + detail::alpha_universality(alpha1);
  if (detail::alpha_rest(alpha0).letter_set().contains(y)) ++c;
  if (detail::alpha_reverse_rest(alpha1).letter_set().contains(y)) ++c;
  return CoreLevel{c, y};
}

/// Per-word data sufficient to decide ternary 1-universal congruence at a
/// fixed level k; used both by equiv_ternary and by the exhaustive suites.
struct TernaryProfile {
  unsigned k = 0;
  Letter m1 = 0, w1 = 0;
  LetterSet a0, a1;
  std::uint32_t core_len = 0;
  unsigned iota_a0 = 0, iota_a1 = 0;
  unsigned c = 0;  // core-level discount; meaningful only when m1 != w1
  std::string a0_key, a1_key;
};

inline TernaryProfile ternary_profile(const Word& w, unsigned k) {
  detail::require_ternary_one_universal(w);
  if (k < 2) throw std::domain_error("ternary congruence is characterized for k >= 2");
  AlphaBetaFactorization f(w, w.alphabet().full_set());
  const Word beta = f.beta(1);
  const Word alpha0 = f.alpha(0);
  const Word alpha1 = f.alpha(1);
  TernaryProfile p;
  p.k = k;
  p.m1 = beta[beta.size() - 1];
  p.w1 = beta[0];
  p.a0 = alpha0.letter_set();
  p.a1 = alpha1.letter_set();
  p.core_len = static_cast<std::uint32_t>(f.core(1).size());
  p.iota_a0 = detail::alpha_universality(alpha0);
  p.iota_a1 = detail::alpha_universality(alpha1);
  if (p.m1 != p.w1) p.c = core_level(w).c;
  p.a0_key = sim_class_key(alpha0, k - 1);
  p.a1_key = sim_class_key(alpha1, k - 1);
  return p;
}

/// Characterization of ~_k for 1-universal ternary words: both alpha pairs
/// must be congruent at level k-1, and then either some binary alpha with an
/// alphabet disjoint from its partner is (k-1)-universal (condition that
/// permits different modi), or the modi agree on both sides and the unary
/// cores are congruent at level k - c.
inline bool equiv_ternary(const TernaryProfile& u, const TernaryProfile& v, unsigned k) {
  if (u.k != k || v.k != k) throw std::domain_error("profiles were built for a different k");
  if (u.a0_key != v.a0_key || u.a1_key != v.a1_key) return false;
  const bool disjoint01 = (u.a0 & u.a1).empty();
  if (u.a0.count() == 2 && disjoint01 && u.iota_a0 >= k - 1) return true;
  if (u.a1.count() == 2 && disjoint01 && u.iota_a1 >= k - 1) return true;
  if (u.m1 != v.m1 || u.w1 != v.w1) return false;
  if (u.m1 == u.w1) return true;  // both cores empty
  const long long lu = static_cast<long long>(k) - u.c;
  const long long lv = static_cast<long long>(k) - v.c;
  return unary_sim(u.core_len, v.core_len, lu) && unary_sim(u.core_len, v.core_len, lv);
}

inline bool equiv_ternary(const Word& u, const Word& v, unsigned k) {
  if (u.alphabet() != v.alphabet())
    throw std::domain_error("congruence test requires a common alphabet");
  return equiv_ternary(ternary_profile(u, k), ternary_profile(v, k), k);
}

/// Bounded under-approximation of the set of first reverse-modus letters
/// realized across the congruence class of w: enumerates every word over
/// the alphabet up to `bound` letters and keeps the congruent ones. Subsets
/// of the true set are possible when the bound is small.
inline LetterSet modus_letter_set(const Word& w, unsigned k, std::size_t bound) {
  if (universality_index(w) != 1)
    throw std::domain_error("modus letter set requires a 1-universal word");
  const Spectrum target = spectrum_upto(w, k);
  const std::size_t sigma = w.alphabet().size();
  LetterSet out;
  std::vector<Letter> current;
  auto visit = [&](auto&& self) -> void {
    Word cand(w.alphabet_ptr(), current);
    if (spectrum_upto(cand, k) == target && universality_index(cand) >= 1) {
      ReverseArchFactorization rf(cand, cand.alphabet().full_set());
      out.insert(rf.reverse_modus()[0]);
    }
    if (current.size() >= bound) return;
    for (std::size_t c = 0; c < sigma; ++c) {
      current.push_back(static_cast<Letter>(c));
      self(self);
      current.pop_back();
    }
  };
  visit(visit);
  return out;
}

/// The block construction behind the different-modi condition: repeatedly
/// take the shortest prefix containing all of W. When at least k-1 covering
/// blocks exist, the first k-2 are returned as-is and everything from the
/// (k-1)-th block onward is merged into the final block.
inline std::optional<std::vector<Word>> w_blocks_factorization(const Word& alpha0, LetterSet W,
                                                               unsigned k) {
  if (W.count() < 2)
    throw std::domain_error("block factorization requires at least two letters in W");
  std::vector<std::pair<std::size_t, std::size_t>> full;
  const std::size_t n = alpha0.size();
  std::size_t pos = 0;
  while (true) {
    LetterSet have;
    std::size_t p = pos;
    while (p < n && !W.subset_of(have)) have.insert(alpha0[p++]);
    if (!W.subset_of(have)) break;
    full.emplace_back(pos, p);
    pos = p;
  }
  if (k <= 1) return std::vector<Word>{};
  const std::size_t blocks_needed = k - 1;
  if (full.size() < blocks_needed) return std::nullopt;
  std::vector<Word> blocks;
  blocks.reserve(blocks_needed);
  for (std::size_t i = 0; i + 1 < blocks_needed; ++i)
    blocks.push_back(alpha0.subword(full[i].first, full[i].second));
  blocks.push_back(alpha0.subword(full[blocks_needed - 1].first, n));
  return blocks;
}

}  // namespace simcon
