#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simcon/alphabet.hpp"

namespace simcon {

/// A finite word over an explicit alphabet. Letters are stored as indices
/// into the alphabet; the empty sequence represents the empty word.
///
/// The alphabet travels with the word because universality depends on the
/// alphabet, not just on the letters that happen to occur. Words are
/// immutable after construction and safe to share between threads.
class Word {
 public:
  explicit Word(Alphabet alphabet)
      : alphabet_(std::make_shared<const Alphabet>(std::move(alphabet))) {}

  Word(Alphabet alphabet, std::vector<Letter> letters)
      : Word(std::make_shared<const Alphabet>(std::move(alphabet)), std::move(letters)) {}

  Word(std::shared_ptr<const Alphabet> alphabet, std::vector<Letter> letters)
      : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    if (!alphabet_) throw std::invalid_argument("word requires an alphabet");
    for (Letter l : letters_)
      if (l >= alphabet_->size()) throw std::invalid_argument("letter index outside alphabet");
  }

  /// Parses `text` over the given alphabet. Characters outside the alphabet
  /// are an error naming the character and its (1-based) position.
  static Word parse(std::string_view text, std::shared_ptr<const Alphabet> alphabet) {
    if (!alphabet) throw std::invalid_argument("word requires an alphabet");
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      auto idx = alphabet->index_of(text[i]);
      if (!idx)
        throw std::invalid_argument("character '" + std::string(1, text[i]) + "' at position " +
                                    std::to_string(i + 1) + " is not in alphabet \"" +
                                    alphabet->symbols() + "\"");
      letters.push_back(*idx);
    }
    return Word(std::move(alphabet), std::move(letters));
  }

  static Word parse(std::string_view text, const Alphabet& alphabet) {
    return parse(text, std::make_shared<const Alphabet>(alphabet));
  }

  /// Parses `text` over the alphabet of its distinct characters in sorted order.
  static Word parse(std::string_view text) {
    if (text.empty())
      throw std::invalid_argument("cannot infer an alphabet from the empty word");
    std::string symbols(text);
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    return parse(text, Alphabet(symbols));
  }

  const Alphabet& alphabet() const { return *alphabet_; }
  const std::shared_ptr<const Alphabet>& alphabet_ptr() const { return alphabet_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  std::string render() const {
    std::string out;
    out.reserve(size());
    for (Letter l : letters_) out.push_back(alphabet_->symbol(l));
    return out;
  }

  Word reversed() const {
    std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
    return Word(alphabet_, std::move(rev));
  }

  /// The factor w[begin..end) over the same alphabet.
  Word subword(std::size_t begin, std::size_t end) const {
    if (begin > end || end > size()) throw std::out_of_range("subword range out of bounds");
    return Word(alphabet_, std::vector<Letter>(letters_.begin() + begin, letters_.begin() + end));
  }

  /// Keeps exactly the positions whose letter lies in `keep`; the result is a
  /// word over the sub-alphabet restricted to `keep`.
  Word project(LetterSet keep) const {
    if (!keep.subset_of(alphabet_->full_set()))
      throw std::domain_error("projection set is not a subset of the alphabet");
    if (keep.empty())
      throw std::domain_error("projection must keep at least one letter: alphabets are nonempty");
    Alphabet sub = alphabet_->restricted(keep);
    std::array<Letter, max_alphabet_size> remap{};
    Letter next = 0;
    for (Letter l = 0; l < alphabet_->size(); ++l)
      if (keep.contains(l)) remap[l] = next++;
    std::vector<Letter> projected;
    for (Letter l : letters_)
      if (keep.contains(l)) projected.push_back(remap[l]);
    return Word(std::move(sub), std::move(projected));
  }

  Word project(std::string_view keep_chars) const {
    LetterSet keep;
    for (char c : keep_chars) {
      auto idx = alphabet_->index_of(c);
      if (!idx)
        throw std::domain_error("projection letter '" + std::string(1, c) +
                                "' is not in alphabet \"" + alphabet_->symbols() + "\"");
      keep.insert(*idx);
    }
    return project(keep);
  }

  /// The same word over the sub-alphabet of letters that actually occur.
  Word restricted_to_letters() const { return project(letter_set()); }

  LetterSet letter_set() const {
    LetterSet set;
    for (Letter l : letters_) set.insert(l);
    return set;
  }

  std::size_t count_letter(Letter l) const {
    return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), l));
  }

  Word appended(Letter l) const {
    std::vector<Letter> ext = letters_;
    ext.push_back(l);
    return Word(alphabet_, std::move(ext));
  }

  friend Word operator+(const Word& a, const Word& b) {
    if (a.alphabet() != b.alphabet())
      throw std::domain_error("cannot concatenate words over different alphabets");
    std::vector<Letter> cat = a.letters_;
    cat.insert(cat.end(), b.letters_.begin(), b.letters_.end());
    return Word(a.alphabet_, std::move(cat));
  }

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_ && a.alphabet() == b.alphabet();
  }
  friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

 private:
  std::shared_ptr<const Alphabet> alphabet_;
  std::vector<Letter> letters_;
};

/// Length-then-lexicographic order on letter indices.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.letters() < b.letters();
}

inline LetterSet letters(const Word& w) { return w.letter_set(); }

}  // namespace simcon
