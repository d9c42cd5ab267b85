#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace simcon {

/// Index of a letter within an Alphabet.
using Letter = std::uint8_t;

inline constexpr std::size_t max_alphabet_size = 26;

/// A set of letter indices, backed by a bitmask.
class LetterSet {
 public:
  constexpr LetterSet() = default;

  static constexpr LetterSet single(Letter l) {
    LetterSet s;
    s.bits_ = std::uint32_t{1} << l;
    return s;
  }

  /// The set {0, 1, ..., n-1}.
  static constexpr LetterSet first_n(std::size_t n) {
    LetterSet s;
    s.bits_ = (n >= 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
    return s;
  }

  constexpr void insert(Letter l) { bits_ |= std::uint32_t{1} << l; }
  constexpr void erase(Letter l) { bits_ &= ~(std::uint32_t{1} << l); }
  constexpr bool contains(Letter l) const { return (bits_ >> l) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t count() const { return static_cast<std::size_t>(__builtin_popcount(bits_)); }
  constexpr bool subset_of(LetterSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool proper_subset_of(LetterSet other) const {
    return subset_of(other) && bits_ != other.bits_;
  }
  constexpr std::uint32_t bits() const { return bits_; }

  friend constexpr LetterSet operator&(LetterSet a, LetterSet b) {
    LetterSet s;
    s.bits_ = a.bits_ & b.bits_;
    return s;
  }
  friend constexpr LetterSet operator|(LetterSet a, LetterSet b) {
    LetterSet s;
    s.bits_ = a.bits_ | b.bits_;
    return s;
  }
  friend constexpr bool operator==(LetterSet a, LetterSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(LetterSet a, LetterSet b) { return a.bits_ != b.bits_; }

  std::vector<Letter> elements() const {
    std::vector<Letter> out;
    for (Letter l = 0; l < 32; ++l)
      if (contains(l)) out.push_back(l);
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// An ordered alphabet of distinct printable characters. The order of the
/// symbols is significant: letters are referred to by their index.
class Alphabet {
 public:
  explicit Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty() || symbols_.size() > max_alphabet_size)
      throw std::invalid_argument("alphabet must contain between 1 and 26 symbols, got \"" +
                                  symbols_ + "\"");
    index_.fill(-1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(symbols_[i]);
      if (c < 0x21 || c > 0x7e)
        throw std::invalid_argument("alphabet symbols must be printable non-space ASCII");
      if (index_[c] != -1)
        throw std::invalid_argument("alphabet symbols must be distinct, got \"" + symbols_ + "\"");
      index_[c] = static_cast<std::int8_t>(i);
    }
  }

  std::size_t size() const { return symbols_.size(); }
  char symbol(Letter l) const { return symbols_.at(l); }
  const std::string& symbols() const { return symbols_; }

  std::optional<Letter> index_of(char c) const {
    std::int8_t i = index_[static_cast<unsigned char>(c)];
    if (i < 0) return std::nullopt;
    return static_cast<Letter>(i);
  }

  LetterSet full_set() const { return LetterSet::first_n(size()); }

  /// Sub-alphabet consisting of the letters in `keep`, in the original order.
  Alphabet restricted(LetterSet keep) const {
    if (!keep.subset_of(full_set()))
      throw std::domain_error("letter set is not a subset of the alphabet");
    std::string sub;
    for (std::size_t i = 0; i < size(); ++i)
      if (keep.contains(static_cast<Letter>(i))) sub.push_back(symbols_[i]);
    return Alphabet(sub);
  }

  std::string render(LetterSet set) const {
    std::string out;
    for (std::size_t i = 0; i < size(); ++i)
      if (set.contains(static_cast<Letter>(i))) out.push_back(symbols_[i]);
    return out;
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }
  friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

 private:
  std::string symbols_;
  std::array<std::int8_t, 256> index_{};
};

}  // namespace simcon
