#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "simcon/word.hpp"

namespace simcon {

namespace detail {

/// End positions (exclusive) of the greedy arches of `letters` w.r.t. omega.
inline std::vector<std::size_t> arch_end_positions(const std::vector<Letter>& letters,
                                                   LetterSet omega) {
  std::vector<std::size_t> ends;
  LetterSet seen;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (!omega.contains(letters[i]))
      throw std::domain_error("arch factorization requires omega to cover the word's letters");
    seen.insert(letters[i]);
    if (seen == omega) {
      ends.push_back(i + 1);
      seen = LetterSet{};
    }
  }
  return ends;
}

}  // namespace detail

/// Greedy factorization of a word into minimal-length blocks each containing
/// the whole alphabet omega, plus a rest missing at least one letter. The
/// last letter of each arch occurs exactly once in that arch.
class ArchFactorization {
 public:
  ArchFactorization(Word word, LetterSet omega)
      : word_(std::move(word)),
        omega_(omega),
        ends_(detail::arch_end_positions(word_.letters(), omega)) {}

  const Word& word() const { return word_; }
  LetterSet omega() const { return omega_; }
  std::size_t arch_count() const { return ends_.size(); }

  /// i in [0, arch_count())
  Word arch(std::size_t i) const {
    return word_.subword(i == 0 ? 0 : ends_[i - 1], ends_.at(i));
  }
  std::pair<std::size_t, std::size_t> arch_span(std::size_t i) const {
    return {i == 0 ? 0 : ends_[i - 1], ends_.at(i)};
  }

  Word rest() const { return word_.subword(ends_.empty() ? 0 : ends_.back(), word_.size()); }

  /// The word of arch-final letters, one per arch.
  Word modus() const {
    std::vector<Letter> m;
    m.reserve(ends_.size());
    for (std::size_t e : ends_) m.push_back(word_[e - 1]);
    return Word(word_.alphabet_ptr(), std::move(m));
  }

  const std::vector<std::size_t>& arch_ends() const { return ends_; }

 private:
  Word word_;
  LetterSet omega_;
  std::vector<std::size_t> ends_;
};

inline ArchFactorization arch_factorization(const Word& w, LetterSet omega) {
  return ArchFactorization(w, omega);
}
inline ArchFactorization arch_factorization(const Word& w) {
  return ArchFactorization(w, w.alphabet().full_set());
}

/// The arch factorization of the reversed word, with every part reversed
/// again and re-indexed so it reads left to right: reverse arches are
/// suffix-aligned blocks, the reverse rest is the prefix before them.
class ReverseArchFactorization {
 public:
  ReverseArchFactorization(Word word, LetterSet omega) : word_(std::move(word)), omega_(omega) {
    std::vector<Letter> rev(word_.letters().rbegin(), word_.letters().rend());
    auto rev_ends = detail::arch_end_positions(rev, omega);
    const std::size_t n = word_.size();
    starts_.reserve(rev_ends.size());
    for (std::size_t j = rev_ends.size(); j-- > 0;) starts_.push_back(n - rev_ends[j]);
  }

  const Word& word() const { return word_; }
  std::size_t arch_count() const { return starts_.size(); }

  /// i in [0, arch_count())
  Word reverse_arch(std::size_t i) const {
    return word_.subword(starts_.at(i),
                         i + 1 < starts_.size() ? starts_[i + 1] : word_.size());
  }

  Word reverse_rest() const { return word_.subword(0, starts_.empty() ? 0 : starts_.front()); }

  /// First letters of the reverse arches; each occurs exactly once in its arch.
  Word reverse_modus() const {
    std::vector<Letter> m;
    m.reserve(starts_.size());
    for (std::size_t s : starts_) m.push_back(word_[s]);
    return Word(word_.alphabet_ptr(), std::move(m));
  }

  const std::vector<std::size_t>& arch_starts() const { return starts_; }

 private:
  Word word_;
  LetterSet omega_;
  std::vector<std::size_t> starts_;  // ascending start positions of ra_1..ra_m
};

inline ReverseArchFactorization reverse_arch_factorization(const Word& w, LetterSet omega) {
  return ReverseArchFactorization(w, omega);
}
inline ReverseArchFactorization reverse_arch_factorization(const Word& w) {
  return ReverseArchFactorization(w, w.alphabet().full_set());
}

/// Combined factorization w = alpha_0 beta_1 alpha_1 ... beta_m alpha_m where
/// arch i = alpha_{i-1} beta_i and reverse arch i = beta_i alpha_i. Every
/// alpha has a proper sub-alphabet; beta_i starts with the i-th reverse modus
/// letter and ends with the i-th modus letter. m equals the universality
/// index of the word w.r.t. omega.
class AlphaBetaFactorization {
 public:
  AlphaBetaFactorization(Word word, LetterSet omega)
      : word_(std::move(word)),
        omega_(omega),
        ends_(detail::arch_end_positions(word_.letters(), omega)) {
    std::vector<Letter> rev(word_.letters().rbegin(), word_.letters().rend());
    auto rev_ends = detail::arch_end_positions(rev, omega);
    const std::size_t n = word_.size();
    starts_.reserve(rev_ends.size());
    for (std::size_t j = rev_ends.size(); j-- > 0;) starts_.push_back(n - rev_ends[j]);
    validate();
  }

  const Word& word() const { return word_; }
  LetterSet omega() const { return omega_; }
  std::size_t arch_count() const { return ends_.size(); }

  /// alpha_i for i in [0, m]; alpha_0 is the reverse rest, alpha_m the rest.
  Word alpha(std::size_t i) const {
    auto [b, e] = alpha_span(i);
    return word_.subword(b, e);
  }
  std::pair<std::size_t, std::size_t> alpha_span(std::size_t i) const {
    const std::size_t m = arch_count();
    if (i > m) throw std::out_of_range("alpha index out of range");
    std::size_t b = (i == 0) ? 0 : ends_[i - 1];
    std::size_t e = (i == m) ? word_.size() : starts_[i];
    return {b, e};
  }

  /// beta_i for i in [1, m].
  Word beta(std::size_t i) const {
    auto [b, e] = beta_span(i);
    return word_.subword(b, e);
  }
  std::pair<std::size_t, std::size_t> beta_span(std::size_t i) const {
    if (i < 1 || i > arch_count()) throw std::out_of_range("beta index out of range");
    return {starts_[i - 1], ends_[i - 1]};
  }

  /// core_i = beta_i stripped of its first and last letter; the empty word
  /// when |beta_i| <= 2.
  Word core(std::size_t i) const {
    auto [b, e] = beta_span(i);
    if (e - b <= 2) return word_.subword(b, b);
    return word_.subword(b + 1, e - 1);
  }

  Word arch(std::size_t i) const {  // i in [0, m)
    return word_.subword(i == 0 ? 0 : ends_[i - 1], ends_.at(i));
  }
  Word reverse_arch(std::size_t i) const {  // i in [0, m)
    return word_.subword(starts_.at(i), i + 1 < starts_.size() ? starts_[i + 1] : word_.size());
  }
  Word rest() const { return alpha(arch_count()); }
  Word reverse_rest() const { return alpha(0); }

  Word modus() const {
    std::vector<Letter> m;
    m.reserve(ends_.size());
    for (std::size_t e : ends_) m.push_back(word_[e - 1]);
    return Word(word_.alphabet_ptr(), std::move(m));
  }
  Word reverse_modus() const {
    std::vector<Letter> m;
    m.reserve(starts_.size());
    for (std::size_t s : starts_) m.push_back(word_[s]);
    return Word(word_.alphabet_ptr(), std::move(m));
  }

  const std::vector<std::size_t>& arch_ends() const { return ends_; }
  const std::vector<std::size_t>& reverse_arch_starts() const { return starts_; }

 private:
  void validate() const {
    if (starts_.size() != ends_.size())
      throw std::logic_error("alpha-beta invariant violated: arch counts differ");
    const std::size_t m = ends_.size();
    for (std::size_t i = 0; i < m; ++i) {
      std::size_t arch_begin = (i == 0) ? 0 : ends_[i - 1];
      // The i-th reverse arch must start inside the i-th arch, which also
      // makes every beta nonempty.
      if (starts_[i] < arch_begin || starts_[i] >= ends_[i])
        throw std::logic_error("alpha-beta invariant violated: reverse arch escapes its arch");
    }
    for (std::size_t i = 0; i <= m; ++i) {
      std::size_t b = (i == 0) ? 0 : ends_[i - 1];
      std::size_t e = (i == m) ? word_.size() : starts_[i];
      LetterSet set;
      for (std::size_t p = b; p < e; ++p) set.insert(word_[p]);
      if (!set.proper_subset_of(omega_))
        throw std::logic_error("alpha-beta invariant violated: alpha has a full alphabet");
    }
  }

  Word word_;
  LetterSet omega_;
  std::vector<std::size_t> ends_;    // arch end positions (exclusive)
  std::vector<std::size_t> starts_;  // reverse arch start positions
};

inline AlphaBetaFactorization alpha_beta(const Word& w, LetterSet omega) {
  return AlphaBetaFactorization(w, omega);
}
inline AlphaBetaFactorization alpha_beta(const Word& w) {
  return AlphaBetaFactorization(w, w.alphabet().full_set());
}

}  // namespace simcon
