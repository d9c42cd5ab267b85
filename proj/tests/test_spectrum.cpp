#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "simcon/oracle.hpp"
#include "simcon/spectrum.hpp"

using namespace simcon;

namespace {

/// Independent brute-force spectrum: run over all subsets of positions.
/// Only usable for short words; this is the oracle the DFS enumeration is
/// checked against.
std::set<std::string> subset_spectrum(const Word& w, unsigned k) {
  std::set<std::string> factors;
  const std::size_t n = w.size();
  REQUIRE(n <= 16);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) > k) continue;
    std::string f;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) f.push_back(w.alphabet().symbol(w[i]));
    factors.insert(f);
  }
  return factors;
}

}  // namespace

TEST_CASE("scattered factor containment") {
  Alphabet a("adegn");
  CHECK(is_scattered_factor(Word::parse("and", a), Word::parse("agenda", a)));
  CHECK(!is_scattered_factor(Word::parse("nada", a), Word::parse("agenda", a)));
  CHECK(is_scattered_factor(Word::parse("", a), Word::parse("agenda", a)));
}

TEST_CASE("spectrum enumeration matches the subset oracle") {
  std::mt19937 rng(19);
  for (std::size_t sigma : {1u, 2u, 3u}) {
    Alphabet a(std::string("abc").substr(0, sigma));
    auto shared = std::make_shared<const Alphabet>(a);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<Letter> letters(rng() % 11);
      for (auto& l : letters) l = static_cast<Letter>(rng() % sigma);
      Word w(shared, letters);
      unsigned k = rng() % 6;
      Spectrum s = spectrum_upto(w, k);
      auto rendered = s.rendered();
      auto expected = subset_spectrum(w, k);
      CHECK(std::set<std::string>(rendered.begin(), rendered.end()) == expected);
      CHECK(rendered.size() == expected.size());  // no duplicates
    }
  }
}

TEST_CASE("length-4 factors of bbabb") {
  Word w = Word::parse("bbabb");
  Spectrum s = spectrum_upto(w, 4);
  std::set<std::string> len4;
  for (const auto& f : s.rendered())
    if (f.size() == 4) len4.insert(f);
  CHECK(len4 == std::set<std::string>{"bbab", "babb", "bbbb"});
}

TEST_CASE("spectrum edge cases") {
  Word eps(Alphabet("ab"));
  Spectrum s = spectrum_upto(eps, 3);
  CHECK(s.factors.size() == 1);
  CHECK(s.factors.front().empty());

  Spectrum ab = spectrum_upto(Word::parse("ab"), 2);
  CHECK(ab.rendered() == std::vector<std::string>{"", "a", "b", "ab"});

  CHECK(spectrum_upto(Word::parse("ab"), 0).factors.size() == 1);
}

TEST_CASE("spectrum serialization spells the empty factor as a dash") {
  Spectrum s = spectrum_upto(Word::parse("ab"), 1);
  CHECK(s.to_text() == "-\na\nb\n");
}

TEST_CASE("simk oracle on the worked pair") {
  Alphabet a("ab");
  Word u = Word::parse("abaaba", a);
  Word v = Word::parse("baab", a);
  CHECK(simk_oracle(u, v, 2));
  CHECK(!simk_oracle(u, v, 3));
  CHECK(simk_oracle(u, u, 5));
  CHECK_THROWS_AS(simk_oracle(u, Word::parse("ba", Alphabet("abc")), 1), std::domain_error);
}

TEST_CASE("universality index") {
  Word alfalfa = Word::parse("alfalfa");
  CHECK(universality_index(alfalfa) == 2);
  CHECK(universality_index(Word::parse("abaccaabca")) == 2);
  Word eps(Alphabet("abc"));
  CHECK(universality_index(eps) == 0);
  // With respect to a strictly larger alphabet there are no arches.
  Word aa = Word::parse("aa", Alphabet("ab"));
  CHECK(universality_index(aa) == 0);
  CHECK(universality_index(aa, LetterSet::single(0)) == 2);
}

TEST_CASE("maxsimk oracle") {
  Alphabet a("ab");
  Word u = Word::parse("abaaba", a);
  Word v = Word::parse("baab", a);
  CHECK(maxsimk_oracle(u, u) == MaxSim::inf());
  CHECK(maxsimk_oracle(u, v) == MaxSim::finite(2));
  CHECK(maxsimk_oracle(u, v).to_string() == "2");
  CHECK(MaxSim::inf().to_string() == "inf");
}

TEST_CASE("distinct words separate at level max of the lengths") {
  // A word is its own scattered factor, so the search bound used by
  // maxsimk_oracle is sound.
  std::mt19937 rng(41);
  Alphabet a("ab");
  auto shared = std::make_shared<const Alphabet>(a);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Letter> lu(rng() % 10), lv(rng() % 10);
    for (auto& l : lu) l = static_cast<Letter>(rng() & 1);
    for (auto& l : lv) l = static_cast<Letter>(rng() & 1);
    Word u(shared, lu), v(shared, lv);
    if (u == v) continue;
    CHECK(!simk_oracle(u, v, static_cast<unsigned>(std::max(u.size(), v.size()))));
  }
}

TEST_CASE("congruence levels are nested and arch counts constrain classes") {
  std::mt19937 rng(23);
  Alphabet a("ab");
  auto shared = std::make_shared<const Alphabet>(a);
  for (int trial = 0; trial < 120; ++trial) {
    std::vector<Letter> lu(rng() % 9), lv(rng() % 9);
    for (auto& l : lu) l = static_cast<Letter>(rng() & 1);
    for (auto& l : lv) l = static_cast<Letter>(rng() & 1);
    Word u(shared, lu), v(shared, lv);
    for (unsigned k = 1; k <= 4; ++k) {
      if (simk_oracle(u, v, k)) {
        CHECK(simk_oracle(u, v, k - 1));  // ~_{k+1} refines ~_k
        unsigned iu = universality_index(u), iv = universality_index(v);
        CHECK(((iu >= k && iv >= k) || iu == iv));
      }
    }
  }
}

TEST_CASE("spectra are symmetric under reversal") {
  std::mt19937 rng(29);
  for (std::size_t sigma : {2u, 3u}) {
    Alphabet a(std::string("abc").substr(0, sigma));
    auto shared = std::make_shared<const Alphabet>(a);
    for (int trial = 0; trial < 80; ++trial) {
      std::vector<Letter> letters(rng() % 10);
      for (auto& l : letters) l = static_cast<Letter>(rng() % sigma);
      Word w(shared, letters);
      CHECK(universality_index(w.reversed()) == universality_index(w));
      unsigned k = 1 + rng() % 4;
      auto mirrored = spectrum_upto(w.reversed(), k).rendered();
      for (auto& f : mirrored) std::reverse(f.begin(), f.end());
      std::sort(mirrored.begin(), mirrored.end());
      auto direct = spectrum_upto(w, k).rendered();
      std::sort(direct.begin(), direct.end());
      CHECK(mirrored == direct);
    }
  }
}

TEST_CASE("suffix elimination equals the oracle") {
  Alphabet a("ab");
  auto shared = std::make_shared<const Alphabet>(a);
  // (ab)^k absorbs any suffix at level k.
  for (unsigned k = 1; k <= 3; ++k) {
    std::vector<Letter> rep;
    for (unsigned i = 0; i < k; ++i) {
      rep.push_back(0);
      rep.push_back(1);
    }
    Word u(shared, rep);
    CHECK(can_drop_suffix(u, Word::parse("abba", shared), k));
  }
  CHECK(!can_drop_suffix(Word::parse("a", shared), Word::parse("b", shared), 1));
  CHECK(can_drop_suffix(Word::parse("aba", shared), Word::parse("a", shared), 2));
  CHECK_THROWS_AS(can_drop_suffix(Word(a), Word::parse("a", shared), 1), std::domain_error);

  // Exhaustive small domain against the oracle definition uv ~_k u.
  std::vector<Word> us = enumerate_words(a, 4);
  std::vector<Word> vs = enumerate_words(a, 3);
  for (const Word& u : us) {
    if (u.empty()) continue;
    for (const Word& v : vs)
      for (unsigned k = 1; k <= 4; ++k)
        CHECK(can_drop_suffix(u, v, k) == simk_oracle(u + v, u, k));
  }
}

TEST_CASE("letter elimination equals the oracle") {
  Alphabet a("ab");
  Word eps(a);
  CHECK(!can_drop_letter(eps, 0, eps, 1));
  CHECK(can_drop_letter(Word::parse("aa", a), 0, Word::parse("", a), 2));

  std::vector<Word> words = enumerate_words(a, 3);
  for (const Word& u : words)
    for (const Word& v : words)
      for (Letter x = 0; x < 2; ++x)
        for (unsigned k = 1; k <= 4; ++k) {
          Word mid(u.alphabet_ptr(), {x});
          CHECK(can_drop_letter(u, x, v, k) == simk_oracle(u + mid + v, u + v, k));
        }

  // A ternary sample of the same identity.
  Alphabet abc("abc");
  std::vector<Word> twords = enumerate_words(abc, 2);
  for (const Word& u : twords)
    for (const Word& v : twords)
      for (Letter x = 0; x < 3; ++x)
        for (unsigned k = 1; k <= 3; ++k) {
          Word mid(u.alphabet_ptr(), {x});
          CHECK(can_drop_letter(u, x, v, k) == simk_oracle(u + mid + v, u + v, k));
        }
}

TEST_CASE("extension lemma on sampled congruent pairs") {
  Alphabet a("ab");
  ClassPartition part = partition_classes(a, 6, 2);
  std::mt19937 rng(31);
  auto shared = std::make_shared<const Alphabet>(a);
  int checked = 0;
  for (const auto& cls : part.classes) {
    if (cls.members.size() < 2) continue;
    const Word& w = cls.members[0];
    const Word& wt = cls.members[1 + rng() % (cls.members.size() - 1)];
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<Letter> lu(rng() % 5), lv(rng() % 5);
      for (auto& l : lu) l = static_cast<Letter>(rng() & 1);
      for (auto& l : lv) l = static_cast<Letter>(rng() & 1);
      Word u(shared, lu), v(shared, lv);
      unsigned level = universality_index(u) + 2 + universality_index(v);
      CHECK(simk_oracle(u + w + v, u + wt + v, level));
      ++checked;
    }
  }
  CHECK(checked > 20);
}
