#pragma once

#include <algorithm>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "simcon/simcon.hpp"

namespace simcon {

namespace cli_detail {

/// The empty word is spelled "-" on the command line.
inline std::string spell(const std::string& rendered) { return rendered.empty() ? "-" : rendered; }

inline std::string unspell(const std::string& arg) { return arg == "-" ? "" : arg; }

/// Alphabet from an explicit option or inferred from the words' characters.
inline Alphabet resolve_alphabet(const std::vector<std::string>& texts,
                                 const std::string& explicit_alphabet) {
  if (!explicit_alphabet.empty()) return Alphabet(explicit_alphabet);
  std::string symbols;
  for (const auto& t : texts) symbols += t;
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  if (symbols.empty()) symbols = "ab";
  return Alphabet(symbols);
}

inline nlohmann::json report_to_json(const VerificationReport& r) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : r.params) params[key] = value;
  return nlohmann::json{{"suite", r.suite},
                        {"params", params},
                        {"passed", r.passed},
                        {"mismatches", r.mismatch_count},
                        {"counterexamples", r.counterexamples},
                        {"notes", r.notes},
                        {"millis", r.millis}};
}

inline nlohmann::json maxsim_to_json(MaxSim m) {
  nlohmann::json j;
  j["infinite"] = m.infinite;
  if (m.infinite)
    j["k"] = nullptr;
  else
    j["k"] = m.value;
  return j;
}

}  // namespace cli_detail

/// Runs one command. Returns 0 on success (or "equivalent"/"singleton"/pass),
/// 1 for a negative predicate or failing suite, 2 for usage errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using nlohmann::json;
  namespace cd = cli_detail;

  CLI::App app{"Simon congruence toolkit: factorizations, congruence tests, "
               "class counting, and brute-force verification"};
  app.require_subcommand(1);

  std::string word_text, u_text, v_text, alphabet_text, suite, method = "auto";
  unsigned k = 0;
  long long arches = -1;
  bool perfect = false, want_json = false;
  std::size_t max_len = 0;
  unsigned max_k = 0;

  auto* factorize = app.add_subcommand("factorize", "Arch and alpha-beta factorization");
  factorize->add_option("word", word_text)->required();
  factorize->add_option("--alphabet", alphabet_text, "Alphabet symbols, e.g. abc");
  factorize->add_flag("--json", want_json);

  auto* spectrum = app.add_subcommand("spectrum", "Scattered factors up to length k");
  spectrum->add_option("word", word_text)->required();
  spectrum->add_option("-k", k)->required();
  spectrum->add_option("--alphabet", alphabet_text);
  spectrum->add_flag("--json", want_json);

  auto* simk = app.add_subcommand("simk", "Test u ~_k v (exit 0 equivalent, 1 distinct)");
  simk->add_option("u", u_text)->required();
  simk->add_option("v", v_text)->required();
  simk->add_option("-k", k)->required();
  simk->add_option("--alphabet", alphabet_text);
  simk->add_option("--method", method, "auto|oracle|binary|ternary")
      ->check(CLI::IsMember({"auto", "oracle", "binary", "ternary"}));
  simk->add_flag("--json", want_json);

  auto* maxsimk = app.add_subcommand("maxsimk", "Largest k with u ~_k v, or inf when u = v");
  maxsimk->add_option("u", u_text)->required();
  maxsimk->add_option("v", v_text)->required();
  maxsimk->add_option("--alphabet", alphabet_text);
  maxsimk->add_option("--method", method, "auto|oracle|binary")
      ->check(CLI::IsMember({"auto", "oracle", "binary"}));
  maxsimk->add_flag("--json", want_json);

  auto* singleton = app.add_subcommand("singleton",
                                       "Is the ~_k class of a binary word a singleton?");
  singleton->add_option("word", word_text)->required();
  singleton->add_option("-k", k)->required();
  singleton->add_option("--alphabet", alphabet_text);
  singleton->add_flag("--json", want_json);

  auto* normal_form = app.add_subcommand("normal-form", "Canonical ~_k representative (binary)");
  normal_form->add_option("word", word_text)->required();
  normal_form->add_option("-k", k)->required();
  normal_form->add_option("--alphabet", alphabet_text);
  normal_form->add_flag("--json", want_json);

  auto* count_classes = app.add_subcommand("count-classes",
                                           "Binary class counts by number of arches");
  count_classes->add_option("-k", k)->required();
  count_classes->add_option("--arches", arches, "Single arch count m");
  count_classes->add_flag("--perfect", perfect, "Count classes of perfect universal words");
  count_classes->add_flag("--json", want_json);

  auto* index = app.add_subcommand("index", "Number of ~_k classes of binary words");
  index->add_option("-k", k)->required();
  index->add_flag("--json", want_json);

  auto* ternary_case = app.add_subcommand("ternary-case",
                                          "Beta shape of a 1-universal ternary word");
  ternary_case->add_option("word", word_text)->required();
  ternary_case->add_option("--alphabet", alphabet_text);
  ternary_case->add_flag("--json", want_json);

  auto* enumerate = app.add_subcommand("enumerate-classes",
                                       "Brute-force ~_k classes of all words up to a length");
  enumerate->add_option("-k", k)->required();
  enumerate->add_option("--max-len", max_len)->required();
  enumerate->add_option("--alphabet", alphabet_text)->required();
  enumerate->add_flag("--json", want_json);

  auto* verify = app.add_subcommand("verify", "Run a verification suite against the oracle");
  verify->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "binary-char", "ternary-char", "singleton",
                             "maxsimk"}));
  verify->add_option("--max-len", max_len);
  verify->add_option("--max-k", max_k);
  verify->add_flag("--json", want_json);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (app.got_subcommand(factorize)) {
      Alphabet a = cd::resolve_alphabet({cd::unspell(word_text)}, alphabet_text);
      Word w = Word::parse(cd::unspell(word_text), a);
      AlphaBetaFactorization f(w, a.full_set());
      const std::size_t m = f.arch_count();
      if (want_json) {
        json j;
        j["word"] = w.render();
        j["alphabet"] = a.symbols();
        j["universality"] = m;
        j["arches"] = json::array();
        for (std::size_t i = 0; i < m; ++i) j["arches"].push_back(f.arch(i).render());
        j["rest"] = f.rest().render();
        j["alphas"] = json::array();
        for (std::size_t i = 0; i <= m; ++i) j["alphas"].push_back(f.alpha(i).render());
        j["betas"] = json::array();
        for (std::size_t i = 1; i <= m; ++i) j["betas"].push_back(f.beta(i).render());
        j["cores"] = json::array();
        for (std::size_t i = 1; i <= m; ++i) j["cores"].push_back(f.core(i).render());
        j["modus"] = f.modus().render();
        j["reverse_modus"] = f.reverse_modus().render();
        out << j.dump(2) << "\n";
        return 0;
      }
      out << "word: " << cd::spell(w.render()) << "\n";
      out << "alphabet: " << a.symbols() << "\n";
      out << "arches: ";
      for (std::size_t i = 0; i < m; ++i) out << "(" << f.arch(i).render() << ")";
      out << "·" << cd::spell(f.rest().render()) << "\n";
      out << "universality: " << m << "\n";
      for (std::size_t i = 0; i <= m; ++i) {
        out << "alpha[" << i << "] = " << cd::spell(f.alpha(i).render()) << "\n";
        if (i < m) out << "beta[" << i + 1 << "] = " << cd::spell(f.beta(i + 1).render()) << "\n";
      }
      out << "modus = " << cd::spell(f.modus().render()) << "\n";
      out << "reverse-modus = " << cd::spell(f.reverse_modus().render()) << "\n";
      for (std::size_t i = 1; i <= m; ++i)
        out << "core[" << i << "] = " << cd::spell(f.core(i).render()) << "\n";
      return 0;
    }

    if (app.got_subcommand(spectrum)) {
      Alphabet a = cd::resolve_alphabet({cd::unspell(word_text)}, alphabet_text);
      Word w = Word::parse(cd::unspell(word_text), a);
      Spectrum s = spectrum_upto(w, k);
      if (want_json) {
        json j;
        j["word"] = w.render();
        j["k"] = k;
        j["factors"] = s.rendered();
        out << j.dump(2) << "\n";
        return 0;
      }
      out << s.to_text();
      return 0;
    }

    if (app.got_subcommand(simk) || app.got_subcommand(maxsimk)) {
      Alphabet a =
          cd::resolve_alphabet({cd::unspell(u_text), cd::unspell(v_text)}, alphabet_text);
      auto shared = std::make_shared<const Alphabet>(a);
      Word u = Word::parse(cd::unspell(u_text), shared);
      Word v = Word::parse(cd::unspell(v_text), shared);
      if (app.got_subcommand(simk)) {
        std::string chosen = method;
        if (chosen == "auto") {
          if (a.size() == 2)
            chosen = "binary";
          else if (a.size() == 3 && universality_index(u) == 1 && universality_index(v) == 1 &&
                   k >= 2)
            chosen = "ternary";
          else
            chosen = "oracle";
        }
        bool equivalent;
        if (chosen == "binary")
          equivalent = equiv_binary(u, v, k);
        else if (chosen == "ternary")
          equivalent = equiv_ternary(u, v, k);
        else
          equivalent = simk_oracle(u, v, k);
        if (want_json) {
          out << json{{"u", u.render()}, {"v", v.render()}, {"k", k}, {"method", chosen},
                      {"equivalent", equivalent}}
                     .dump(2)
              << "\n";
        } else {
          out << (equivalent ? "equivalent" : "distinct") << "\n";
        }
        return equivalent ? 0 : 1;
      }
      std::string chosen = method;
      if (chosen == "auto") chosen = (a.size() == 2) ? "binary" : "oracle";
      MaxSim result = (chosen == "binary") ? maxsimk_binary(u, v) : maxsimk_oracle(u, v);
      if (want_json) {
        json j = cd::maxsim_to_json(result);
        j["u"] = u.render();
        j["v"] = v.render();
        j["method"] = chosen;
        out << j.dump(2) << "\n";
      } else {
        out << result.to_string() << "\n";
      }
      return 0;
    }

    if (app.got_subcommand(singleton)) {
      Alphabet a = cd::resolve_alphabet({cd::unspell(word_text)}, alphabet_text);
      if (a.size() == 1) a = Alphabet(a.symbols() + (a.symbols() == "a" ? "b" : "a"));
      Word w = Word::parse(cd::unspell(word_text), a);
      bool single = is_singleton(w, k);
      std::optional<Word> witness;
      if (!single) witness = singleton_witness(w, k);
      if (want_json) {
        json j{{"word", w.render()}, {"k", k}, {"singleton", single}};
        j["witness"] = witness ? json(witness->render()) : json(nullptr);
        out << j.dump(2) << "\n";
      } else if (single) {
        out << "singleton\n";
      } else {
        out << "not singleton; witness: " << cd::spell(witness->render()) << "\n";
      }
      return single ? 0 : 1;
    }

    if (app.got_subcommand(normal_form)) {
      Alphabet a = cd::resolve_alphabet({cd::unspell(word_text)}, alphabet_text);
      if (a.size() == 1) a = Alphabet(a.symbols() + (a.symbols() == "a" ? "b" : "a"));
      Word w = Word::parse(cd::unspell(word_text), a);
      Word nf = normal_form_binary(w, k);
      if (want_json)
        out << json{{"word", w.render()}, {"k", k}, {"normal_form", nf.render()}}.dump(2) << "\n";
      else
        out << cd::spell(nf.render()) << "\n";
      return 0;
    }

    if (app.got_subcommand(count_classes)) {
      auto count_for = [&](unsigned m) -> BigInt {
        if (perfect) return perfect_universal_counts(k, m);
        if (m == k) return 1;  // the single class of words with >= k arches
        return classes_with_m_arches_rec(k, m);
      };
      if (arches >= 0) {
        BigInt value = count_for(static_cast<unsigned>(arches));
        if (want_json)
          out << json{{"k", k}, {"arches", arches}, {"perfect", perfect},
                      {"classes", value.str()}}
                     .dump(2)
              << "\n";
        else
          out << value.str() << "\n";
        return 0;
      }
      json rows = json::array();
      for (unsigned m = 0; m <= k; ++m) {
        BigInt value = count_for(m);
        if (want_json)
          rows.push_back({{"arches", m}, {"classes", value.str()}});
        else
          out << "m=" << m << ": " << value.str() << "\n";
      }
      if (want_json)
        out << json{{"k", k}, {"perfect", perfect}, {"counts", rows}}.dump(2) << "\n";
      else if (!perfect)
        out << "index: " << simon_index_binary(k).str() << "\n";
      return 0;
    }

    if (app.got_subcommand(index)) {
      BigInt value = simon_index_binary(k);
      if (want_json)
        out << json{{"k", k}, {"index", value.str()}}.dump(2) << "\n";
      else
        out << value.str() << "\n";
      return 0;
    }

    if (app.got_subcommand(ternary_case)) {
      Alphabet a = cd::resolve_alphabet({cd::unspell(word_text)}, alphabet_text);
      Word w = Word::parse(cd::unspell(word_text), a);
      TernaryBetaCase c = classify_ternary_beta(w);
      if (want_json)
        out << json{{"word", w.render()},
                    {"row", to_string(c.row)},
                    {"mirrored", c.mirrored},
                    {"alpha0_letters", c.alpha0_letters},
                    {"alpha1_letters", c.alpha1_letters},
                    {"beta_pattern", c.beta_pattern}}
                   .dump(2)
            << "\n";
      else
        out << "row: " << to_string(c.row) << (c.mirrored ? " (mirrored)" : "") << "\n"
            << "beta-pattern: " << c.beta_pattern << "\n";
      return 0;
    }

    if (app.got_subcommand(enumerate)) {
      Alphabet a(alphabet_text);
      ClassPartition part = partition_classes(a, max_len, k);
      if (want_json) {
        json classes = json::array();
        for (const auto& cls : part.classes) {
          json members = json::array();
          for (const Word& m : cls.members) members.push_back(m.render());
          classes.push_back({{"representative", cls.members.front().render()},
                             {"size", cls.members.size()},
                             {"arches", cls.arch_count},
                             {"at_least_k", cls.at_least_k},
                             {"members", members}});
        }
        out << json{{"alphabet", a.symbols()}, {"k", k}, {"max_len", max_len},
                    {"classes", classes}}
                   .dump(2)
            << "\n";
        return 0;
      }
      out << "classes: " << part.classes.size() << "\n";
      for (const auto& cls : part.classes)
        out << "repr=" << cd::spell(cls.members.front().render()) << " size="
            << cls.members.size() << " arches=" << cls.arch_count
            << (cls.at_least_k ? "+" : "") << "\n";
      return 0;
    }

    if (app.got_subcommand(verify)) {
      std::vector<VerificationReport> reports;
      if (suite == "table1") {
        reports.push_back(verify_counting(max_k ? max_k : 4));
      } else if (suite == "table2") {
        reports.push_back(verify_perfect_universal(max_k ? max_k : 4));
      } else if (suite == "binary-char") {
        reports.push_back(
            verify_binary_characterization(max_len ? max_len : 10, max_k ? max_k : 4));
      } else if (suite == "maxsimk") {
        reports.push_back(verify_maxsimk(max_len ? max_len : 9));
      } else if (suite == "ternary-char") {
        std::vector<unsigned> ks;
        for (unsigned kk = 2; kk <= (max_k ? max_k : 3); ++kk) ks.push_back(kk);
        reports.push_back(verify_ternary_characterization(max_len ? max_len : 9, ks));
      } else if (suite == "singleton") {
        for (unsigned kk = 1; kk <= (max_k ? max_k : 4); ++kk)
          reports.push_back(verify_singleton(max_len ? max_len : 10, kk));
      }
      bool all_passed = true;
      json jreports = json::array();
      for (const auto& r : reports) {
        all_passed = all_passed && r.passed;
        if (want_json)
          jreports.push_back(cd::report_to_json(r));
        else
          out << r.to_text();
      }
      if (want_json) out << jreports.dump(2) << "\n";
      return all_passed ? 0 : 1;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace simcon
