#pragma once

// Command-line front end. run() never exits the process and never touches
// the real standard streams, so tests can drive it directly.
//
// Exit codes: 0 success / yes-instance, 1 no-instance, 2 usage or parse
// error, 3 resource cap exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lcpinfer/bcssila.hpp"
#include "lcpinfer/ccec.hpp"
#include "lcpinfer/cssila.hpp"
#include "lcpinfer/cyclic.hpp"
#include "lcpinfer/errors.hpp"
#include "lcpinfer/oracle.hpp"
#include "lcpinfer/reductions.hpp"

namespace lcpinfer::cli {

using json = nlohmann::ordered_json;

enum ExitCode : int { kYes = 0, kNo = 1, kUsage = 2, kResource = 3 };

// LCP arrays are JSON arrays of integers, with the string "w" for omega.
inline json lcp_to_json(const LcpArray& lcp) {
  json a = json::array();
  for (const auto& x : lcp) {
    if (x.is_omega()) {
      a.push_back("w");
    } else {
      a.push_back(x.value());
    }
  }
  return a;
}

inline LcpArray lcp_from_json(const json& a) {
  if (!a.is_array()) throw argument_error("lcp must be a JSON array");
  LcpArray out;
  for (const auto& x : a) {
    if (x.is_string() && x.get<std::string>() == "w") {
      out.push_back(kOmega);
    } else if (x.is_number_unsigned()) {
      out.emplace_back(x.get<ExtNat::value_type>());
    } else {
      throw argument_error("bad lcp entry " + x.dump());
    }
  }
  return out;
}

inline json swaps_to_json(const std::vector<SwapInterval>& swaps) {
  json a = json::array();
  for (const auto& s : swaps) a.push_back({s.lo, s.hi});
  return a;
}

inline std::vector<SwapInterval> swaps_from_json(const json& a) {
  std::vector<SwapInterval> out;
  for (const auto& s : a) {
    if (!s.is_array() || s.size() != 2) throw argument_error("swap must be [lo, hi]");
    out.push_back({s[0].get<std::size_t>(), s[1].get<std::size_t>()});
  }
  return out;
}

inline json inference_to_json(const LcpArray& lcp, const InferenceResult& r) {
  return {{"lcp", lcp_to_json(lcp)},
          {"bwt", to_letters(r.bwt)},
          {"swaps", swaps_to_json(r.swaps)},
          {"rendered", r.render()}};
}

inline InferenceResult inference_from_json(const json& j) {
  InferenceResult r{from_letters(j.at("bwt").get<std::string>()), swaps_from_json(j.value("swaps", json::array()))};
  return r;
}

namespace detail {

struct Words {
  std::vector<Text> words;
  bool dollar = false;  // words use the {$, a, b, ...} alphabet
};

inline Words parse_words(const std::vector<std::string>& raw) {
  Words out;
  for (const auto& w : raw) out.dollar = out.dollar || w.find('$') != std::string::npos;
  for (const auto& w : raw) out.words.push_back(out.dollar ? from_terminated_letters(w) : from_letters(w));
  if (out.words.empty()) throw argument_error("no input words");
  return out;
}

inline std::string render(const Text& t, bool dollar) { return dollar ? to_terminated_letters(t) : to_letters(t); }

inline json words_to_json(const CyclicMultiset& w, bool dollar) {
  json a = json::array();
  for (const auto& word : w.words()) a.push_back(render(word.symbols(), dollar));
  return a;
}

inline std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Context {
 public:
  Context(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

  /// Contents of `path`, or standard input for "-".
  std::string slurp(const std::string& path) {
    if (path == "-") return read_stream(in_);
    std::ifstream f(path);
    if (!f) throw argument_error("cannot open " + path);
    return read_stream(f);
  }

  std::vector<std::string> lines(const std::string& path) {
    std::istringstream ss(slurp(path));
    std::vector<std::string> out;
    std::string line;
    while (std::getline(ss, line)) {
      const auto b = line.find_first_not_of(" \t\r");
      if (b == std::string::npos) continue;
      const auto e = line.find_last_not_of(" \t\r");
      out.push_back(line.substr(b, e - b + 1));
    }
    return out;
  }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
};

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace detail

/// Parses argv (argv[0] is the program name) and dispatches.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  detail::Context ctx(in, out, err);

  CLI::App app{"LCP array inference for cyclic strings and string sets", "lcpinfer"};
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t jobs = 1;
  bool text = false;
  app.add_option("--jobs", jobs, "worker threads for searches")->check(CLI::Range(1, 256));
  app.add_flag("--text", text, "plain text instead of JSON");

  // Shared input options. Each subcommand registers the ones it reads.
  std::string lcp_text, lcp_file, words_text, words_file, cnf_file;
  auto add_lcp = [&](CLI::App* sub) {
    auto* a = sub->add_option("--lcp", lcp_text, "LCP array: integers and w for omega");
    auto* b = sub->add_option("--lcp-file", lcp_file, "file holding the LCP array (- for stdin)");
    a->excludes(b);
  };
  auto add_words = [&](CLI::App* sub) {
    auto* a = sub->add_option("--words", words_text, "whitespace-separated words");
    auto* b = sub->add_option("--input", words_file, "file with one word per line (- for stdin)");
    a->excludes(b);
  };
  auto add_cnf = [&](CLI::App* sub) { sub->add_option("--cnf", cnf_file, "DIMACS file (- for stdin)")->required(); };

  auto get_lcp = [&]() -> LcpArray {
    if (!lcp_file.empty()) return parse_lcp(ctx.slurp(lcp_file));
    if (lcp_text.empty()) throw argument_error("one of --lcp or --lcp-file is required");
    return parse_lcp(lcp_text);
  };
  auto get_words = [&]() {
    if (!words_file.empty()) return detail::parse_words(ctx.lines(words_file));
    return detail::parse_words(detail::split_ws(words_text));
  };
  auto get_cnf = [&]() { return parse_dimacs(ctx.slurp(cnf_file)); };
  auto emit = [&](const json& j) { out << j.dump() << '\n'; };

  std::string variant = "cyclic-set";
  auto* lcp_cmd = app.add_subcommand("lcp", "LCP array of a string or string set");
  add_words(lcp_cmd);
  lcp_cmd->add_option("--variant", variant, "cyclic-set|cyclic|terminated|open|terminated-set|open-set");

  auto* bwt_cmd = app.add_subcommand("bwt", "BWT of a multiset of cyclic words");
  add_words(bwt_cmd);

  std::string bwt_text;
  auto* ibwt_cmd = app.add_subcommand("ibwt", "multiset of cyclic words of a BWT");
  ibwt_cmd->add_option("--bwt", bwt_text, "BWT string")->required();

  bool stats = false;
  auto* infer_cmd = app.add_subcommand("infer", "binary BWT plus swap intervals for an LCP array");
  add_lcp(infer_cmd);
  infer_cmd->add_flag("--stats", stats, "include work counters");

  std::size_t limit = 1000;
  auto* enum_cmd = app.add_subcommand("enumerate", "binary BWTs with the given LCP array");
  add_lcp(enum_cmd);
  enum_cmd->add_option("--limit", limit, "maximum number of solutions")->check(CLI::PositiveNumber);

  std::size_t cap = kDefaultFlipCap;
  auto* single_cmd = app.add_subcommand("single", "decide whether a single binary cyclic string fits");
  add_lcp(single_cmd);
  single_cmd->add_option("--cap", cap, "maximum partitions searched exhaustively");

  std::size_t sigma = 0;
  bool dfa_count_flag = false, dfa_enum_flag = false;
  std::string accepts;
  auto* dfa_cmd = app.add_subcommand("dfa", "automaton of all BWTs over a general alphabet");
  add_lcp(dfa_cmd);
  dfa_cmd->add_option("--sigma", sigma, "alphabet size (default: zeros + 1)");
  auto* f_count = dfa_cmd->add_flag("--count", dfa_count_flag, "number of accepted strings");
  auto* f_enum = dfa_cmd->add_flag("--enumerate", dfa_enum_flag, "accepted strings in lexicographic order");
  auto* f_acc = dfa_cmd->add_option("--accepts", accepts, "test one string");
  f_count->excludes(f_enum)->excludes(f_acc);
  f_enum->excludes(f_acc);
  dfa_cmd->add_option("--limit", limit, "maximum strings for --enumerate")->check(CLI::PositiveNumber);

  bool terminator = false, cores = false;
  auto* sat_cmd = app.add_subcommand("sat2lcp", "3-CNF formula to cyclic multiset and LCP array");
  add_cnf(sat_cmd);
  sat_cmd->add_flag("--terminator", terminator, "apply the terminator transform to the multiset");
  sat_cmd->add_flag("--cores", cores, "list swap cores");

  auto* ccec_cmd = app.add_subcommand("ccec-solve", "solve the CCEC instance of a 3-CNF formula");
  add_cnf(ccec_cmd);
  ccec_cmd->add_option("--cap", cap, "maximum partitions searched exhaustively");

  double guard = kOracleGuard;
  std::size_t oracle_sigma = 2;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force solutions of an LCP array");
  add_lcp(oracle_cmd);
  oracle_cmd->add_option("--sigma", oracle_sigma, "alphabet size")->check(CLI::Range(1, 26));
  oracle_cmd->add_option("--variant", variant, "cyclic-set|cyclic|terminated|open|terminated-set|open-set");
  oracle_cmd->add_option("--guard", guard, "maximum number of candidates");

  std::string target;
  auto* dot_cmd = app.add_subcommand("dot", "Graphviz rendering");
  dot_cmd->add_option("--target", target, "ccec|dfa|bwtgraph")
      ->required()
      ->check(CLI::IsMember({"ccec", "dfa", "bwtgraph"}));
  add_lcp(dot_cmd);
  dot_cmd->add_option("--cnf", cnf_file, "DIMACS file for --target ccec");
  dot_cmd->add_option("--sigma", sigma, "alphabet size for --target dfa");

  std::string verify_input;
  auto* verify_cmd = app.add_subcommand("verify", "check candidate BWTs against an LCP array");
  add_lcp(verify_cmd);
  verify_cmd->add_option("--bwt", bwt_text, "candidate BWT");
  verify_cmd->add_option("--input", verify_input, "JSON output of infer, enumerate or single (- for stdin)");

  std::string from_variant, to_variant;
  std::size_t strings = 0;
  auto* tr_cmd = app.add_subcommand("transform", "map an LCP array between inference variants");
  add_lcp(tr_cmd);
  tr_cmd->add_option("--from", from_variant, "source variant, e.g. BTSILA")->required();
  tr_cmd->add_option("--to", to_variant, "target variant, e.g. BOSILA")->required();
  tr_cmd->add_option("--strings", strings, "string count for set variants")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*lcp_cmd) {
      const auto kind = parse_variant_kind(variant);
      const auto w = get_words();
      if (w.dollar && kind != VariantKind::CyclicSet && kind != VariantKind::CyclicSingle) {
        throw argument_error("'$' is only allowed in cyclic inputs");
      }
      const LcpArray lcp = lcp_variant(w.words, kind);
      if (text) {
        out << format_lcp(lcp) << '\n';
      } else {
        emit({{"variant", variant_kind_name(kind)}, {"lcp", lcp_to_json(lcp)}});
      }
      return kYes;
    }

    if (*bwt_cmd) {
      const auto w = get_words();
      const auto ms = CyclicMultiset::from_words(w.words);
      const std::string v = detail::render(bwt(ms), w.dollar);
      if (text) {
        out << v << '\n';
      } else {
        emit({{"words", detail::words_to_json(ms, w.dollar)}, {"bwt", v}});
      }
      return kYes;
    }

    if (*ibwt_cmd) {
      const bool dollar = bwt_text.find('$') != std::string::npos;
      const Text v = dollar ? from_terminated_letters(bwt_text) : from_letters(bwt_text);
      if (v.empty()) throw argument_error("empty BWT");
      const auto ms = ibwt(v);
      if (text) {
        for (const auto& word : ms.words()) out << detail::render(word.symbols(), dollar) << '\n';
      } else {
        emit({{"bwt", bwt_text}, {"words", detail::words_to_json(ms, dollar)}});
      }
      return kYes;
    }

    if (*infer_cmd) {
      const LcpArray lcp = get_lcp();
      InferStats st;
      const auto r = infer(lcp, &st);
      if (!r) {
        err << "invalid LCP array\n";
        return kNo;
      }
      if (text) {
        out << r->render() << '\n';
        return kYes;
      }
      json j = inference_to_json(lcp, *r);
      if (stats) {
        j["stats"] = {{"frames", st.frames},
                      {"rmq_queries", st.rmq_queries},
                      {"compared_entries", st.compared_entries},
                      {"assigned_symbols", st.assigned_symbols}};
      }
      emit(j);
      return kYes;
    }

    if (*enum_cmd) {
      const LcpArray lcp = get_lcp();
      const auto r = infer(lcp);
      if (!r) {
        err << "invalid LCP array\n";
        return kNo;
      }
      const auto e = enumerate_bwts(*r, limit);
      if (text) {
        for (const auto& v : e.bwts) out << to_letters(v) << '\n';
        return kYes;
      }
      json sols = json::array();
      for (const auto& v : e.bwts) sols.push_back(to_letters(v));
      emit({{"lcp", lcp_to_json(lcp)}, {"solutions", sols}, {"truncated", e.truncated}});
      return kYes;
    }

    if (*single_cmd) {
      const LcpArray lcp = get_lcp();
      const auto s = single_string_decide(lcp, cap, jobs);
      using S = SingleStringResult::Status;
      if (s.status == S::Invalid) {
        err << "invalid LCP array\n";
        return kNo;
      }
      if (text) {
        out << (s.status == S::Found ? to_letters(s.word->symbols()) : std::string("none")) << '\n';
      } else if (s.status == S::Found) {
        emit({{"lcp", lcp_to_json(lcp)},
              {"status", "found"},
              {"bwt", to_letters(s.bwt)},
              {"word", to_letters(s.word->symbols())}});
      } else {
        emit({{"lcp", lcp_to_json(lcp)}, {"status", "none"}});
      }
      return s.status == S::Found ? kYes : kNo;
    }

    if (*dfa_cmd) {
      const auto dfa = build_dfa(get_lcp(), sigma);
      json j{{"sigma", dfa.sigma()},
             {"states", dfa.states().size()},
             {"transitions", dfa.transitions().size()},
             {"pruned", dfa.pruned_count()}};
      if (!accepts.empty()) {
        const bool yes = dfa.accepts(from_letters(accepts));
        if (text) {
          out << (yes ? "yes" : "no") << '\n';
        } else {
          j["accepts"] = yes;
          emit(j);
        }
        return yes ? kYes : kNo;
      }
      if (dfa_enum_flag) {
        const auto e = dfa.enumerate(limit);
        if (text) {
          for (const auto& s : e.strings) out << to_letters(s) << '\n';
        } else {
          json sols = json::array();
          for (const auto& s : e.strings) sols.push_back(to_letters(s));
          j["solutions"] = sols;
          j["truncated"] = e.truncated;
          emit(j);
        }
        return e.strings.empty() ? kNo : kYes;
      }
      const auto n = dfa.count();
      if (text) {
        out << n << '\n';
      } else {
        j["count"] = n;
        emit(j);
      }
      return n == 0 ? kNo : kYes;
    }

    if (*sat_cmd) {
      const Cnf f = get_cnf();
      const CcecInstance g = from_cnf(f);
      const std::size_t m = g.partition_count(), n = g.vertex_count();
      CyclicMultiset w = ccec_to_multiset(g);
      if (terminator) w = add_terminator(w, m, n);
      const LcpArray lcp = lcp_array(w);
      if (text) {
        out << format_lcp(lcp) << '\n';
        return kYes;
      }
      json j{{"variables", f.variables}, {"clauses", f.clauses.size()}, {"vertices", n}, {"partitions", m},
             {"terminated", terminator}, {"words", detail::words_to_json(w, terminator)},
             {"lcp", lcp_to_json(lcp)}};
      if (cores) {
        if (terminator) throw argument_error("--cores applies to the binary multiset only");
        json a = json::array();
        for (const auto& c : list_swap_cores(w, std::pair{m, n})) {
          json e{{"core", to_letters(c.core)},
                 {"interval", {c.interval.lo, c.interval.hi}},
                 {"occurrences", c.occurrences},
                 {"form", core_form_name(c.form)}};
          if (c.form == CoreForm::Partition) e["k"] = c.k;
          a.push_back(e);
        }
        j["cores"] = a;
      }
      emit(j);
      return kYes;
    }

    if (*ccec_cmd) {
      const Cnf f = get_cnf();
      CnfLayout layout;
      const CcecInstance g = from_cnf(f, &layout);
      const auto flips = solve(g, cap, jobs);
      json j{{"vertices", g.vertex_count()}, {"partitions", g.partition_count()}, {"solvable", flips.has_value()}};
      if (flips) {
        j["flipset"] = flips->partitions;
        json vars = json::array();
        for (std::size_t i = 1; i <= f.variables; ++i) {
          const auto& ps = flips->partitions;
          if (std::find(ps.begin(), ps.end(), layout.variable_partition[i - 1]) != ps.end()) vars.push_back(i);
        }
        j["true_variables"] = vars;
      } else {
        j["flipset"] = nullptr;
      }
      if (text) {
        if (flips) {
          for (std::size_t i = 0; i < flips->partitions.size(); ++i) out << (i ? " " : "") << flips->partitions[i];
          out << '\n';
        } else {
          out << "unsolvable\n";
        }
      } else {
        emit(j);
      }
      return flips ? kYes : kNo;
    }

    if (*oracle_cmd) {
      const auto kind = parse_variant_kind(variant);
      const auto sols = brute_force_solutions(get_lcp(), oracle_sigma, kind, guard);
      const bool cyclic = kind == VariantKind::CyclicSet || kind == VariantKind::CyclicSingle;
      if (text) {
        for (const auto& s : sols) {
          if (cyclic) {
            out << to_letters(s.bwt) << '\n';
          } else {
            for (std::size_t i = 0; i < s.words.size(); ++i) out << (i ? " " : "") << to_letters(s.words[i]);
            out << '\n';
          }
        }
      } else {
        json a = json::array();
        for (const auto& s : sols) {
          json e;
          if (cyclic) e["bwt"] = to_letters(s.bwt);
          json ws = json::array();
          for (const auto& w : s.words) ws.push_back(to_letters(w));
          e["words"] = ws;
          a.push_back(e);
        }
        emit({{"variant", variant_kind_name(kind)}, {"sigma", oracle_sigma}, {"solutions", a}});
      }
      return sols.empty() ? kNo : kYes;
    }

    if (*dot_cmd) {
      if (target == "ccec") {
        if (cnf_file.empty()) throw argument_error("--target ccec needs --cnf");
        const CcecInstance g = from_cnf(get_cnf());
        const auto state = g.initial_state();
        out << ccec_to_dot(g, &state);
      } else if (target == "dfa") {
        out << build_dfa(get_lcp(), sigma).to_dot();
      } else {
        const auto r = infer(get_lcp());
        if (!r) {
          err << "invalid LCP array\n";
          return kNo;
        }
        out << bwt_graph_to_dot(bwt_graph(*r));
      }
      return kYes;
    }

    if (*verify_cmd) {
      LcpArray lcp;
      std::vector<Text> candidates;
      if (!verify_input.empty()) {
        const json j = json::parse(ctx.slurp(verify_input));
        lcp = lcp_from_json(j.at("lcp"));
        if (j.contains("solutions")) {
          for (const auto& s : j["solutions"]) candidates.push_back(from_letters(s.get<std::string>()));
        } else if (j.contains("bwt")) {
          // Swaps are independent, so each one is checked on its own.
          const InferenceResult r = inference_from_json(j);
          candidates.push_back(r.bwt);
          for (const auto& s : r.swaps) candidates.push_back(apply_swaps(r, {s}));
        }
      } else {
        lcp = get_lcp();
        if (bwt_text.empty()) throw argument_error("verify needs --bwt or --input");
        candidates.push_back(from_letters(bwt_text));
      }
      if (candidates.empty()) throw argument_error("nothing to verify");
      std::size_t failed = 0;
      for (const auto& c : candidates) failed += verify(lcp, c) ? 0 : 1;
      if (text) {
        out << (failed ? "fail" : "ok") << '\n';
      } else {
        emit({{"checked", candidates.size()}, {"failed", failed}});
      }
      return failed ? kNo : kYes;
    }

    if (*tr_cmd) {
      const auto from = parse_variant(from_variant), to = parse_variant(to_variant);
      const auto r = variant_transform(get_lcp(), from, to, strings ? std::optional(strings) : std::nullopt);
      if (!r) {
        err << "not applicable: side condition fails\n";
        return kNo;
      }
      if (text) {
        out << format_lcp(*r) << '\n';
      } else {
        emit({{"from", variant_name(from)}, {"to", variant_name(to)}, {"lcp", lcp_to_json(*r)}});
      }
      return kYes;
    }
  } catch (const resource_error& e) {
    err << "error: " << e.what() << '\n';
    return kResource;
  } catch (const json::exception& e) {
    err << "error: bad JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

inline int run(int argc, const char* const* argv, std::istream& in = std::cin, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  return run(std::vector<std::string>(argv, argv + argc), in, out, err);
}

}  // namespace lcpinfer::cli
