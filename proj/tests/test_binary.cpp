#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "simcon/binary.hpp"
#include "simcon/oracle.hpp"

using namespace simcon;

TEST_CASE("unary congruence rule") {
  CHECK(unary_sim(3, 5, 3));
  CHECK(!unary_sim(3, 5, 4));
  CHECK(unary_sim(0, 0, 7));
  CHECK(unary_sim(2, 9, 0));
  CHECK(unary_sim(2, 9, -1));
}

TEST_CASE("binary aba cases") {
  Alphabet ab("ab");
  {
    Word w = Word::parse("bab", ab);
    AlphaBetaFactorization f(w, ab.full_set());
    BinaryAbaCase c = classify_binary_aba(f, 1);
    CHECK(c.shape == BinaryBetaShape::single_letter);
    CHECK(c.x == *ab.index_of('a'));
  }
  {
    Word w = Word::parse("ab", ab);
    AlphaBetaFactorization f(w, ab.full_set());
    BinaryAbaCase c = classify_binary_aba(f, 1);
    CHECK(c.shape == BinaryBetaShape::two_letter);
    CHECK(c.x == *ab.index_of('a'));
  }
  {
    Word w = Word::parse("aabb", ab);
    AlphaBetaFactorization f(w, ab.full_set());
    BinaryAbaCase c = classify_binary_aba(f, 1);
    CHECK(c.shape == BinaryBetaShape::two_letter);
  }
}

TEST_CASE("binary aba classification never fails on real factorizations") {
  Alphabet ab("ab");
  auto shared = std::make_shared<const Alphabet>(ab);
  for_each_word(ab, 14, [&](const std::vector<Letter>& letters) {
    Word w(shared, letters);
    AlphaBetaFactorization f(w, ab.full_set());
    for (std::size_t i = 1; i <= f.arch_count(); ++i)
      CHECK_NOTHROW(classify_binary_aba(f, i));
  });
}

TEST_CASE("equiv_binary basics") {
  Alphabet ab("ab");
  Word bab = Word::parse("bab", ab);
  Word bbabb = Word::parse("bbabb", ab);
  CHECK(equiv_binary(bab, bbabb, 2));
  CHECK(simk_oracle(bab, bbabb, 2));
  CHECK(equiv_binary(bbabb, bbabb, 4));
  CHECK_THROWS_AS(equiv_binary(Word::parse("abc"), Word::parse("abc"), 2), std::domain_error);
}

TEST_CASE("equiv_binary equals the oracle exhaustively (small)") {
  std::vector<Word> words = enumerate_words(Alphabet("ab"), 7);
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i; j < words.size(); ++j)
      for (unsigned k = 0; k <= 4; ++k)
        REQUIRE(equiv_binary(words[i], words[j], k) == simk_oracle(words[i], words[j], k));
}

TEST_CASE("maxsimk_binary on the worked examples") {
  Alphabet ab("ab");
  Word bab = Word::parse("bab", ab);
  Word bbabb = Word::parse("bbabb", ab);
  CHECK(maxsimk_binary(bab, bab) == MaxSim::inf());
  CHECK(maxsimk_binary(bab, bbabb) == MaxSim::finite(2));
  CHECK(maxsimk_binary(Word::parse("ab", ab), Word::parse("abab", ab)) == MaxSim::finite(1));
  // Unary contents over the binary alphabet: handled by the alphabet branch.
  CHECK(maxsimk_binary(Word::parse("aaa", ab), Word::parse("bb", ab)) == MaxSim::finite(0));
  CHECK(maxsimk_binary(Word::parse("aaa", ab), Word::parse("aaaaa", ab)) == MaxSim::finite(3));
}

TEST_CASE("maxsimk_binary equals the oracle exhaustively (small)") {
  std::vector<Word> words = enumerate_words(Alphabet("ab"), 7);
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i; j < words.size(); ++j)
      REQUIRE(maxsimk_binary(words[i], words[j]) == maxsimk_oracle(words[i], words[j]));
}

TEST_CASE("singleton predicate") {
  Alphabet ab("ab");
  CHECK(is_singleton(Word::parse("bbabb", ab), 4));
  CHECK(!is_singleton(Word::parse("bab", ab), 2));  // |alpha_0| = 1 = k - m
  // At least k arches is never a singleton.
  CHECK(!is_singleton(Word::parse("abab", ab), 2));
  CHECK(is_singleton(Word(ab), 1));  // the empty word is alone at every level
}

TEST_CASE("singleton witnesses validate") {
  Alphabet ab("ab");
  Word bab = Word::parse("bab", ab);
  Word witness = singleton_witness(bab, 2);
  CHECK(witness != bab);
  CHECK(simk_oracle(bab, witness, 2));

  Word universal = Word::parse("abab", ab);
  Word w2 = singleton_witness(universal, 2);
  CHECK(w2 != universal);
  CHECK(simk_oracle(universal, w2, 2));

  CHECK_THROWS_AS(singleton_witness(Word::parse("bbabb", ab), 4), std::domain_error);
}

TEST_CASE("witness suite over all short binary words") {
  Alphabet ab("ab");
  auto shared = std::make_shared<const Alphabet>(ab);
  for_each_word(ab, 8, [&](const std::vector<Letter>& letters) {
    Word w(shared, letters);
    for (unsigned k = 1; k <= 4; ++k) {
      if (is_singleton(w, k)) continue;
      Word witness = singleton_witness(w, k);
      REQUIRE(witness != w);
      REQUIRE(simk_oracle(w, witness, k));
    }
  });
}

TEST_CASE("normal form on the worked examples") {
  Alphabet ab("ab");
  CHECK(normal_form_binary(Word::parse("bbabb", ab), 4).render() == "bbabb");
  CHECK(normal_form_binary(Word::parse("bbbabbb", ab), 2).render() == "bab");
  CHECK(simk_oracle(Word::parse("bbbabbb", ab), Word::parse("bab", ab), 2));
  CHECK(normal_form_binary(Word::parse("abba", ab), 1).render() == "ab");
  CHECK(normal_form_binary(Word(ab), 3).render().empty());
}

TEST_CASE("normal form is a sound and idempotent class representative") {
  Alphabet ab("ab");
  auto shared = std::make_shared<const Alphabet>(ab);
  for_each_word(ab, 12, [&](const std::vector<Letter>& letters) {
    Word w(shared, letters);
    for (unsigned k = 1; k <= 4; ++k) {
      Word nf = normal_form_binary(w, k);
      REQUIRE(normal_form_binary(nf, k) == nf);
    }
  });
  // Soundness and completeness against the partition: on each class the
  // normal form is constant, and distinct classes get distinct forms.
  for (unsigned k = 1; k <= 3; ++k) {
    ClassPartition part = partition_classes(Alphabet("ab"), 8, k);
    std::set<std::string> forms;
    for (const auto& cls : part.classes) {
      Word nf = normal_form_binary(cls.members.front(), k);
      REQUIRE(simk_oracle(nf, cls.members.front(), k));
      for (const Word& m : cls.members) REQUIRE(normal_form_binary(m, k) == nf);
      forms.insert(nf.render());
    }
    REQUIRE(forms.size() == part.classes.size());
  }
}
