#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "simcon/binary.hpp"
#include "simcon/counting.hpp"
#include "simcon/factorization.hpp"
#include "simcon/spectrum.hpp"
#include "simcon/ternary.hpp"
#include "simcon/word.hpp"

namespace simcon {

/// Streams every word over the alphabet of length <= max_len in
/// length-then-lexicographic order. The visitor receives a reused buffer.
template <class Visit>
void for_each_word(const Alphabet& alphabet, std::size_t max_len, Visit visit) {
  const std::size_t sigma = alphabet.size();
  std::vector<Letter> buffer;
  for (std::size_t len = 0; len <= max_len; ++len) {
    buffer.assign(len, 0);
    while (true) {
      visit(const_cast<const std::vector<Letter>&>(buffer));
      std::size_t pos = len;
      while (pos > 0 && buffer[pos - 1] == sigma - 1) buffer[--pos] = 0;
      if (pos == 0) break;
      ++buffer[pos - 1];
    }
  }
}

inline std::vector<Word> enumerate_words(const Alphabet& alphabet, std::size_t max_len) {
  auto shared = std::make_shared<const Alphabet>(alphabet);
  std::vector<Word> out;
  for_each_word(alphabet, max_len,
                [&](const std::vector<Letter>& w) { out.emplace_back(shared, w); });
  return out;
}

/// Canonical byte serialization of the <=k-spectrum: factors in shortlex
/// order, each prefixed by its length. Equal keys iff equal spectra.
inline std::string spectrum_key(const std::vector<Letter>& letters, std::size_t sigma,
                                unsigned k) {
  std::vector<std::string> buckets(k + 1);
  detail::enumerate_factors(letters, sigma, k, [&](const std::vector<Letter>& f) {
    std::string& b = buckets[f.size()];
    b.push_back(static_cast<char>(f.size()));
    for (Letter l : f) b.push_back(static_cast<char>(l));
  });
  std::string key;
  for (const auto& b : buckets) key += b;
  return key;
}

inline std::string spectrum_key(const Word& w, unsigned k) {
  return spectrum_key(w.letters(), w.alphabet().size(), k);
}

inline unsigned suite_thread_count() {
  if (const char* env = std::getenv("THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Runs fn(worker, index) for every index in [0, n), striding indices across
/// workers so that triangular pair loops stay balanced.
template <class Fn>
void parallel_strided(std::size_t n, Fn fn) {
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(suite_thread_count(), std::max<std::size_t>(n, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(0u, i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([=] {
      for (std::size_t i = w; i < n; i += workers) fn(w, i);
    });
  for (auto& t : pool) t.join();
}

struct ClassInfo {
  std::vector<Word> members;  // shortlex order; front() is the representative
  unsigned arch_count = 0;    // of the representative
  bool at_least_k = false;    // the class of words with >= k arches
};

/// All words over the alphabet up to max_len, grouped by their <=k-spectrum.
struct ClassPartition {
  unsigned k = 0;
  Alphabet alphabet;
  std::size_t max_len = 0;
  std::vector<ClassInfo> classes;  // ordered by shortlex representative
};

inline ClassPartition partition_classes(const Alphabet& alphabet, std::size_t max_len,
                                        unsigned k) {
  ClassPartition part{k, alphabet, max_len, {}};
  auto shared = std::make_shared<const Alphabet>(alphabet);
  std::unordered_map<std::string, std::size_t> ids;
  for_each_word(alphabet, max_len, [&](const std::vector<Letter>& w) {
    auto [it, inserted] = ids.try_emplace(spectrum_key(w, alphabet.size(), k), part.classes.size());
    if (inserted) part.classes.emplace_back();
    part.classes[it->second].members.emplace_back(shared, w);
  });
  for (auto& cls : part.classes) {
    cls.arch_count = universality_index(cls.members.front());
    cls.at_least_k = cls.arch_count >= k;
    for (const Word& m : cls.members) {
      unsigned iota = universality_index(m);
      bool consistent = cls.at_least_k ? iota >= k : iota == cls.arch_count;
      if (!consistent)
        throw std::logic_error("partition invariant violated: class members disagree on arch "
                               "count below k");
    }
  }
  return part;
}

/// Outcome of one verification suite. Failing suites carry counterexamples;
/// reports are deterministic so they can be diffed in CI.
struct VerificationReport {
  std::string suite;
  std::vector<std::pair<std::string, std::string>> params;
  bool passed = true;
  std::vector<std::string> counterexamples;  // sorted, capped
  std::size_t mismatch_count = 0;
  std::vector<std::string> notes;
  double millis = 0.0;

  static constexpr std::size_t max_counterexamples = 25;

  void finish_counterexamples() {
    std::sort(counterexamples.begin(), counterexamples.end());
    if (counterexamples.size() > max_counterexamples)
      counterexamples.resize(max_counterexamples);
    if (mismatch_count > 0) passed = false;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << (passed ? "PASS" : "FAIL") << " " << suite;
    for (const auto& [key, value] : params) os << " " << key << "=" << value;
    os << " (" << static_cast<long long>(millis) << " ms)\n";
    for (const auto& note : notes) os << "  note: " << note << "\n";
    if (!passed) {
      os << "  mismatches: " << mismatch_count << "\n";
      for (const auto& ce : counterexamples) os << "  counterexample: " << ce << "\n";
    }
    return os.str();
  }
};

namespace detail {

class SuiteTimer {
 public:
  explicit SuiteTimer(VerificationReport& report) : report_(report) {}
  ~SuiteTimer() {
    report_.millis = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start_)
                         .count();
  }

 private:
  VerificationReport& report_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Dense per-word class ids at level k; the oracle verdict for a pair is id
/// equality. Keys are exact spectrum serializations, not hashes.
inline std::vector<std::uint32_t> class_ids(const std::vector<Word>& words, unsigned k) {
  std::vector<std::uint32_t> ids(words.size());
  std::unordered_map<std::string, std::uint32_t> dict;
  for (std::size_t i = 0; i < words.size(); ++i) {
    auto [it, inserted] =
        dict.try_emplace(spectrum_key(words[i], k), static_cast<std::uint32_t>(dict.size()));
    ids[i] = it->second;
  }
  return ids;
}

/// Enumeration length that provably contains a representative of every
/// class: a class with m < k arches has a member with every alpha truncated
/// to k - m letters and binary betas, and the >= k class has a member of
/// length 2k. Two letters of safety margin on top.
inline std::size_t sufficient_binary_length(unsigned k) {
  std::size_t best = 2 * static_cast<std::size_t>(k);
  for (unsigned m = 0; m < k; ++m)
    best = std::max<std::size_t>(best, (m + 1) * (k - m) + 2 * m);
  return best + 2;
}

inline void merge_worker_mismatches(VerificationReport& report,
                                    std::vector<std::vector<std::string>>& buckets,
                                    std::vector<std::size_t>& counts) {
  for (std::size_t c : counts) report.mismatch_count += c;
  for (auto& b : buckets)
    report.counterexamples.insert(report.counterexamples.end(), b.begin(), b.end());
  report.finish_counterexamples();
}

}  // namespace detail

/// Compares the class-count formulas with brute-force partition counts per
/// arch count, and the index with the partition's total class count.
inline VerificationReport verify_counting(unsigned k_max = 4) {
  VerificationReport report;
  report.suite = "counting";
  report.params = {{"k_max", std::to_string(k_max)}};
  detail::SuiteTimer timer(report);
  Alphabet sigma2("ab");
  for (unsigned k = 1; k <= k_max; ++k) {
    std::size_t max_len = detail::sufficient_binary_length(k);
    ClassPartition part = partition_classes(sigma2, max_len, k);
    std::map<unsigned, BigInt> by_arches;
    BigInt top_classes = 0;
    for (const auto& cls : part.classes) {
      if (cls.at_least_k)
        ++top_classes;
      else
        ++by_arches[cls.arch_count];
    }
    for (unsigned m = 0; m < k; ++m) {
      BigInt expected = classes_with_m_arches_rec(k, m);
      BigInt matrix = classes_with_m_arches_matrix(k, m);
      BigInt got = by_arches.count(m) ? by_arches[m] : 0;
      if (got != expected || matrix != expected) {
        ++report.mismatch_count;
        report.counterexamples.push_back("k=" + std::to_string(k) + " m=" + std::to_string(m) +
                                         " brute=" + got.str() + " rec=" + expected.str() +
                                         " matrix=" + matrix.str());
      }
    }
    if (top_classes != 1) {
      ++report.mismatch_count;
      report.counterexamples.push_back("k=" + std::to_string(k) +
                                       " classes with >=k arches: " + top_classes.str());
    }
    BigInt index = simon_index_binary(k);
    if (BigInt(part.classes.size()) != index) {
      ++report.mismatch_count;
      report.counterexamples.push_back("k=" + std::to_string(k) + " index brute=" +
                                       std::to_string(part.classes.size()) +
                                       " formula=" + index.str());
    }
    report.notes.push_back("k=" + std::to_string(k) + " classes=" +
                           std::to_string(part.classes.size()) + " max_len=" +
                           std::to_string(max_len));
  }
  report.finish_counterexamples();
  return report;
}

/// equiv_binary against the spectrum oracle on every unordered pair of
/// binary words up to max_len, for every k <= k_max.
inline VerificationReport verify_binary_characterization(std::size_t max_len = 10,
                                                         unsigned k_max = 4) {
  VerificationReport report;
  report.suite = "binary-characterization";
  report.params = {{"max_len", std::to_string(max_len)}, {"k_max", std::to_string(k_max)}};
  detail::SuiteTimer timer(report);
  std::vector<Word> words = enumerate_words(Alphabet("ab"), max_len);
  const std::size_t n = words.size();
  std::vector<BinaryProfile> profiles;
  profiles.reserve(n);
  for (const Word& w : words) profiles.push_back(binary_profile(w));
  std::vector<std::vector<std::uint32_t>> ids(k_max + 1);
  for (unsigned k = 0; k <= k_max; ++k) ids[k] = detail::class_ids(words, k);

  const unsigned workers = suite_thread_count();
  std::vector<std::vector<std::string>> worker_ces(workers ? workers : 1);
  std::vector<std::size_t> worker_counts(workers ? workers : 1, 0);
  parallel_strided(n, [&](unsigned worker, std::size_t i) {
    for (std::size_t j = i; j < n; ++j) {
      for (unsigned k = 0; k <= k_max; ++k) {
        bool predicted = equiv_binary(profiles[i], profiles[j], k);
        bool actual = ids[k][i] == ids[k][j];
        if (predicted != actual) {
          ++worker_counts[worker];
          if (worker_ces[worker].size() < VerificationReport::max_counterexamples)
            worker_ces[worker].push_back("u=" + words[i].render() + " v=" + words[j].render() +
                                         " k=" + std::to_string(k) +
                                         " equiv_binary=" + (predicted ? "true" : "false") +
                                         " oracle=" + (actual ? "true" : "false"));
        }
      }
    }
  });
  detail::merge_worker_mismatches(report, worker_ces, worker_counts);
  report.notes.push_back("words=" + std::to_string(n));
  return report;
}

/// maxsimk_binary against the spectrum oracle: exhaustively on pairs up to
/// max_len, plus random longer pairs checked with maxsimk_oracle directly.
inline VerificationReport verify_maxsimk(std::size_t max_len = 9, std::size_t random_pairs = 10000,
                                         std::size_t random_max_len = 14,
                                         std::uint64_t seed = 0x51e5eed) {
  VerificationReport report;
  report.suite = "maxsimk";
  report.params = {{"max_len", std::to_string(max_len)},
                   {"random_pairs", std::to_string(random_pairs)},
                   {"random_max_len", std::to_string(random_max_len)}};
  detail::SuiteTimer timer(report);
  std::vector<Word> words = enumerate_words(Alphabet("ab"), max_len);
  const std::size_t n = words.size();
  std::vector<BinaryProfile> profiles;
  profiles.reserve(n);
  for (const Word& w : words) profiles.push_back(binary_profile(w));
  const unsigned k_top = static_cast<unsigned>(max_len);
  std::vector<std::vector<std::uint32_t>> ids(k_top + 1);
  for (unsigned k = 0; k <= k_top; ++k) ids[k] = detail::class_ids(words, k);

  const unsigned workers = suite_thread_count();
  std::vector<std::vector<std::string>> worker_ces(workers ? workers : 1);
  std::vector<std::size_t> worker_counts(workers ? workers : 1, 0);
  parallel_strided(n, [&](unsigned worker, std::size_t i) {
    for (std::size_t j = i; j < n; ++j) {
      MaxSim oracle = MaxSim::inf();
      for (unsigned k = 1; k <= k_top; ++k) {
        if (ids[k][i] != ids[k][j]) {
          oracle = MaxSim::finite(k - 1);
          break;
        }
      }
      MaxSim predicted = maxsimk_binary(profiles[i], profiles[j]);
      if (predicted != oracle) {
        ++worker_counts[worker];
        if (worker_ces[worker].size() < VerificationReport::max_counterexamples)
          worker_ces[worker].push_back("u=" + words[i].render() + " v=" + words[j].render() +
                                       " maxsimk_binary=" + predicted.to_string() +
                                       " oracle=" + oracle.to_string());
      }
    }
  });
  detail::merge_worker_mismatches(report, worker_ces, worker_counts);

  // Tie the per-level id comparison to maxsimk_oracle on a sample.
  std::mt19937_64 rng(seed);
  auto shared = std::make_shared<const Alphabet>(Alphabet("ab"));
  for (std::size_t s = 0; s < 200 && n > 0; ++s) {
    const Word& u = words[rng() % n];
    const Word& v = words[rng() % n];
    MaxSim direct = maxsimk_oracle(u, v);
    MaxSim predicted = maxsimk_binary(u, v);
    if (direct != predicted) {
      ++report.mismatch_count;
      report.counterexamples.push_back("sample u=" + u.render() + " v=" + v.render() +
                                       " maxsimk_binary=" + predicted.to_string() +
                                       " maxsimk_oracle=" + direct.to_string());
    }
  }
  // Longer random pairs against maxsimk_oracle directly; one RNG per index
  // keeps the sample independent of the worker count.
  std::atomic<std::size_t> random_mismatches{0};
  std::mutex ce_mutex;
  parallel_strided(random_pairs, [&](unsigned, std::size_t s) {
    std::mt19937_64 pair_rng(seed ^ (0x9e3779b97f4a7c15ull * (s + 1)));
    auto random_word = [&] {
      std::size_t len = pair_rng() % (random_max_len + 1);
      std::vector<Letter> letters(len);
      for (auto& l : letters) l = static_cast<Letter>(pair_rng() & 1);
      return Word(shared, std::move(letters));
    };
    Word u = random_word();
    Word v = random_word();
    MaxSim direct = maxsimk_oracle(u, v);
    MaxSim predicted = maxsimk_binary(u, v);
    if (direct != predicted) {
      ++random_mismatches;
      std::lock_guard<std::mutex> lock(ce_mutex);
      if (report.counterexamples.size() < VerificationReport::max_counterexamples)
        report.counterexamples.push_back("random u=" + u.render() + " v=" + v.render() +
                                         " maxsimk_binary=" + predicted.to_string() +
                                         " maxsimk_oracle=" + direct.to_string());
    }
  });
  report.mismatch_count += random_mismatches.load();
  report.finish_counterexamples();
  report.notes.push_back("words=" + std::to_string(n));
  return report;
}

/// equiv_ternary against the spectrum oracle on every unordered pair of
/// 1-universal ternary words up to max_len for each k in ks, plus the beta
/// classification on every 1-universal ternary word up to classify_max_len,
/// plus a sampled pair sweep at sample_k on longer words.
inline VerificationReport verify_ternary_characterization(
    std::size_t max_len = 9, std::vector<unsigned> ks = {2, 3},
    std::size_t classify_max_len = 12, std::size_t sample_max_len = 12, unsigned sample_k = 4,
    std::size_t sample_words = 1200, std::uint64_t seed = 0x7e4a17) {
  VerificationReport report;
  report.suite = "ternary-characterization";
  {
    std::string klist;
    for (unsigned k : ks) klist += (klist.empty() ? "" : ",") + std::to_string(k);
    report.params = {{"max_len", std::to_string(max_len)},
                     {"k", klist},
                     {"classify_max_len", std::to_string(classify_max_len)}};
  }
  detail::SuiteTimer timer(report);
  Alphabet sigma3("abc");
  auto shared = std::make_shared<const Alphabet>(sigma3);
  const LetterSet full = sigma3.full_set();

  std::size_t classified = 0;
  for_each_word(sigma3, classify_max_len, [&](const std::vector<Letter>& letters) {
    Word w(shared, letters);
    if (w.letter_set() != full || universality_index(w) != 1) return;
    ++classified;
    try {
      classify_ternary_beta(w);
    } catch (const std::logic_error& e) {
      ++report.mismatch_count;
      if (report.counterexamples.size() < VerificationReport::max_counterexamples)
        report.counterexamples.push_back("classify w=" + w.render() + ": " + e.what());
    }
  });
  report.notes.push_back("classified=" + std::to_string(classified));

  std::vector<Word> words;
  for_each_word(sigma3, max_len, [&](const std::vector<Letter>& letters) {
    Word w(shared, letters);
    if (w.letter_set() == full && universality_index(w) == 1) words.push_back(std::move(w));
  });
  const std::size_t n = words.size();
  report.notes.push_back("one_universal_words=" + std::to_string(n));

  for (unsigned k : ks) {
    std::vector<std::uint32_t> ids = detail::class_ids(words, k);
    std::vector<TernaryProfile> profiles;
    profiles.reserve(n);
    for (const Word& w : words) profiles.push_back(ternary_profile(w, k));
    const unsigned workers = suite_thread_count();
    std::vector<std::vector<std::string>> worker_ces(workers ? workers : 1);
    std::vector<std::size_t> worker_counts(workers ? workers : 1, 0);
    parallel_strided(n, [&](unsigned worker, std::size_t i) {
      for (std::size_t j = i; j < n; ++j) {
        bool predicted = equiv_ternary(profiles[i], profiles[j], k);
        bool actual = ids[i] == ids[j];
        if (predicted != actual) {
          ++worker_counts[worker];
          if (worker_ces[worker].size() < VerificationReport::max_counterexamples)
            worker_ces[worker].push_back("u=" + words[i].render() + " v=" + words[j].render() +
                                         " k=" + std::to_string(k) +
                                         " equiv_ternary=" + (predicted ? "true" : "false") +
                                         " oracle=" + (actual ? "true" : "false"));
        }
      }
    });
    detail::merge_worker_mismatches(report, worker_ces, worker_counts);
  }

  // Sampled longer words at a higher level. Half the sample is random, the
  // other half pumps a random position of a previous sample member, which
  // produces plenty of genuinely congruent pairs for the positive direction.
  if (sample_words > 0) {
    std::mt19937_64 rng(seed);
    std::vector<Word> sample;
    while (sample.size() < sample_words) {
      Word w(shared, {});
      if (!sample.empty() && (rng() & 1)) {
        const Word& base = sample[rng() % sample.size()];
        std::vector<Letter> letters = base.letters();
        std::size_t pos = rng() % letters.size();
        if (letters.size() < sample_max_len)
          letters.insert(letters.begin() + pos, letters[pos]);
        w = Word(shared, std::move(letters));
      } else {
        std::size_t len = 3 + rng() % (sample_max_len - 2);
        std::vector<Letter> letters(len);
        for (auto& l : letters) l = static_cast<Letter>(rng() % 3);
        w = Word(shared, std::move(letters));
      }
      if (w.letter_set() == full && universality_index(w) == 1) sample.push_back(std::move(w));
    }
    std::vector<std::uint32_t> ids = detail::class_ids(sample, sample_k);
    std::vector<TernaryProfile> profiles;
    profiles.reserve(sample.size());
    for (const Word& w : sample) profiles.push_back(ternary_profile(w, sample_k));
    const unsigned workers = suite_thread_count();
    std::vector<std::vector<std::string>> worker_ces(workers ? workers : 1);
    std::vector<std::size_t> worker_counts(workers ? workers : 1, 0);
    parallel_strided(sample.size(), [&](unsigned worker, std::size_t i) {
      for (std::size_t j = i; j < sample.size(); ++j) {
        bool predicted = equiv_ternary(profiles[i], profiles[j], sample_k);
        bool actual = ids[i] == ids[j];
        if (predicted != actual) {
          ++worker_counts[worker];
          if (worker_ces[worker].size() < VerificationReport::max_counterexamples)
            worker_ces[worker].push_back("sampled u=" + sample[i].render() + " v=" +
                                         sample[j].render() + " k=" + std::to_string(sample_k) +
                                         " equiv_ternary=" + (predicted ? "true" : "false") +
                                         " oracle=" + (actual ? "true" : "false"));
        }
      }
    });
    detail::merge_worker_mismatches(report, worker_ces, worker_counts);
    std::map<std::uint32_t, std::size_t> class_sizes;
    for (std::uint32_t id : ids) ++class_sizes[id];
    std::size_t congruent_pairs = 0;
    for (const auto& [id, n] : class_sizes) congruent_pairs += n * (n - 1) / 2;
    report.notes.push_back("sampled_words=" + std::to_string(sample.size()) + " at k=" +
                           std::to_string(sample_k) + ", congruent_pairs=" +
                           std::to_string(congruent_pairs));
  }
  report.finish_counterexamples();
  return report;
}

/// The singleton predicate against the bounded oracle: true cases must be
/// alone in a partition enumerated k letters further, false cases must come
/// with an oracle-validated witness.
inline VerificationReport verify_singleton(std::size_t max_len = 10, unsigned k = 4) {
  VerificationReport report;
  report.suite = "singleton";
  report.params = {{"max_len", std::to_string(max_len)}, {"k", std::to_string(k)}};
  detail::SuiteTimer timer(report);
  Alphabet sigma2("ab");
  ClassPartition part = partition_classes(sigma2, max_len + k, k);
  std::unordered_map<std::string, std::size_t> class_sizes;
  for (const auto& cls : part.classes)
    class_sizes[spectrum_key(cls.members.front(), k)] = cls.members.size();
  auto shared = std::make_shared<const Alphabet>(sigma2);
  for_each_word(sigma2, max_len, [&](const std::vector<Letter>& letters) {
    Word w(shared, letters);
    bool predicted = is_singleton(w, k);
    if (predicted) {
      std::size_t size = class_sizes.at(spectrum_key(w, k));
      if (size != 1) {
        ++report.mismatch_count;
        if (report.counterexamples.size() < VerificationReport::max_counterexamples)
          report.counterexamples.push_back("w=" + w.render() + " declared singleton but class "
                                           "has " + std::to_string(size) + " members");
      }
    } else {
      Word witness = singleton_witness(w, k);
      if (witness == w || !simk_oracle(w, witness, k)) {
        ++report.mismatch_count;
        if (report.counterexamples.size() < VerificationReport::max_counterexamples)
          report.counterexamples.push_back("w=" + w.render() + " witness=" + witness.render() +
                                           " does not validate");
      }
    }
  });
  report.finish_counterexamples();
  return report;
}

/// Brute-force counts of classes of perfect m-universal binary words
/// (m arches, empty rest) against the matrix formula with start vector
/// (0, 1, 0).
inline VerificationReport verify_perfect_universal(unsigned k_max = 4) {
  VerificationReport report;
  report.suite = "perfect-universal";
  report.params = {{"k_max", std::to_string(k_max)}};
  detail::SuiteTimer timer(report);
  Alphabet sigma2("ab");
  auto shared = std::make_shared<const Alphabet>(sigma2);
  for (unsigned k = 1; k <= k_max; ++k) {
    std::size_t max_len = detail::sufficient_binary_length(k);
    std::vector<std::unordered_map<std::string, std::size_t>> per_m(k);
    for_each_word(sigma2, max_len, [&](const std::vector<Letter>& letters) {
      Word w(shared, letters);
      ArchFactorization f(w, sigma2.full_set());
      unsigned m = static_cast<unsigned>(f.arch_count());
      if (m >= k || !f.rest().empty()) return;
      auto& dict = per_m[m];
      dict.try_emplace(spectrum_key(w, k), dict.size());
    });
    for (unsigned m = 0; m < k; ++m) {
      BigInt expected = perfect_universal_counts(k, m);
      BigInt got = per_m[m].size();
      if (got != expected) {
        ++report.mismatch_count;
        report.counterexamples.push_back("k=" + std::to_string(k) + " m=" + std::to_string(m) +
                                         " brute=" + got.str() + " formula=" + expected.str());
      }
      report.notes.push_back("k=" + std::to_string(k) + " m=" + std::to_string(m) + " classes=" +
                             got.str());
    }
  }
  report.finish_counterexamples();
  return report;
}

}  // namespace simcon
