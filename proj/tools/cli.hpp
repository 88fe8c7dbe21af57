#pragma once

// Command-line front end. Exit codes: 0 success, 1 nonexistence (construct) or
// theorem violation (verify), 2 usage error, 3 resource cap.

#include <bit>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ucycle/ucycle.hpp"

namespace ucycle::cli {

using nlohmann::json;

enum ExitCode : int { kOk = 0, kNotUniversal = 1, kUsage = 2, kResourceCap = 3 };

inline json exact_record(const ExactResult& r) {
  return json{{"n", r.params.n},
              {"k", r.params.k},
              {"s", r.params.s},
              {"kind", to_string(r.kind)},
              {"favorable", to_decimal(r.favorable)},
              {"total", to_decimal(r.total)},
              {"probability", r.probability.str()}};
}

inline json bounds_record(const BoundReport& report) {
  const auto& p = report.params;
  json rec{{"n", p.n}, {"k", p.k}, {"s", p.s}, {"entries", json::array()}};
  for (const auto& e : report.entries) {
    json entry{{"formula", to_string(e.id)}, {"applicable", e.applicable}};
    if (e.applicable) {
      entry["value"] = e.value.str();
      json counts = json::object();
      for (const auto& [sym, v] : e.counts) counts[sym] = to_decimal(v);
      entry["counts"] = counts;
    }
    rec["entries"].push_back(entry);
  }
  for (UKind kind : {UKind::cycle, UKind::word}) {
    std::string prefix = kind == UKind::cycle ? "pc" : "pw";
    if (auto lower = formula_lower_bound(p.n, p.k, p.s, kind)) rec[prefix + "_lower"] = lower->str();
    if (p.s == 1 || p.s == 2) {
      FormulaId id = kind == UKind::cycle ? (p.s == 1 ? FormulaId::pc_exact_s1 : FormulaId::pc_exact_s2)
                                          : (p.s == 1 ? FormulaId::pw_exact_s1 : FormulaId::pw_exact_s2);
      rec[prefix + "_exact"] = report.entry(id).value.str();
    }
    if (auto best = best_lower_bound(p.n, p.k, p.s, kind)) rec[prefix + "_best"] = best->str();
  }
  return rec;
}

inline json theorem_record(const std::string& which, const TheoremReport& r) {
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back(json{{"case", v.case_id}, {"expected", v.expected}, {"observed", v.observed}});
  return json{{"which", which},          {"n", r.n},
              {"k", r.k},                {"cases_checked", r.cases_checked},
              {"exceptions", r.exceptions}, {"violations", violations}};
}

// Words from a file (one per line) or an inline list. Inline lists use ',' between
// words when k <= 10 and ';' when k > 10 (letters are then comma-separated).
inline std::vector<std::string> read_word_list(const std::string& source, int k) {
  std::vector<std::string> words;
  auto trim = [](std::string s) {
    auto first = s.find_first_not_of(" \t\r");
    auto last = s.find_last_not_of(" \t\r");
    return first == std::string::npos ? std::string{} : s.substr(first, last - first + 1);
  };
  std::error_code ec;
  if (!source.empty() && std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    std::string line;
    while (std::getline(in, line))
      if (auto w = trim(line); !w.empty()) words.push_back(w);
    return words;
  }
  const char sep = k <= 10 ? ',' : ';';
  std::stringstream ss(source);
  std::string item;
  while (std::getline(ss, item, sep))
    if (auto w = trim(item); !w.empty()) words.push_back(w);
  return words;
}

inline std::string nonexistence_diagnostic(UKind kind, const WordSet& survivors) {
  std::ostringstream os;
  os << "not universal: no u-" << to_string(kind) << " for " << survivors.size() << " words";
  if (survivors.empty()) return os.str();
  if (kind == UKind::cycle && survivors.size() < static_cast<std::size_t>(survivors.n()))
    os << "; a u-cycle needs at least n=" << survivors.n() << " words";
  DbSubgraph g = build_from_survivors(survivors);
  auto defects = degree_defects(g);
  if (!defects.empty()) {
    os << "; degree defects (out-in):";
    for (const auto& d : defects)
      os << ' ' << word_to_string(Word{d.node, g.node_length(), g.alphabet()}) << ':' << (d.defect > 0 ? "+" : "")
         << d.defect;
  }
  if (!is_connected_on_support(g)) os << "; edges span more than one component";
  return os.str();
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Universal cycles and universal words for subsets of A^n", "ucycle"};
  app.require_subcommand(1);

  int n = 0, k = 0, s = 0;
  std::string kind_text;
  std::string format;
  std::uint64_t chunks = 0;
  unsigned workers = 0;
  std::uint64_t work_cap = kDefaultWorkCap;

  auto* exact = app.add_subcommand("exact", "Exact P_c / P_w by exhaustive enumeration");
  exact->add_option("--n", n, "word length")->required();
  exact->add_option("--k", k, "alphabet size")->required();
  exact->add_option("--s", s, "number of removed words")->required();
  exact->add_option("--kind", kind_text, "cycle or word")->required()->check(CLI::IsMember({"cycle", "word"}));
  exact->add_option("--chunks", chunks, "rank chunks for the parallel scan");
  exact->add_option("--workers", workers, "worker threads (default: UCYCLE_WORKERS or hardware)");
  exact->add_option("--work-cap", work_cap, "maximum number of subsets to scan");
  exact->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  int smin = 1;
  std::optional<int> smax;
  auto* table = app.add_subcommand("table", "Probability table over s");
  table->add_option("--n", n)->required();
  table->add_option("--k", k)->required();
  table->add_option("--kind", kind_text)->required()->check(CLI::IsMember({"cycle", "word"}));
  table->add_option("--smin", smin, "first s (default 1)");
  table->add_option("--smax", smax, "last s (default k^n - 1)");
  table->add_option("--chunks", chunks);
  table->add_option("--workers", workers);
  table->add_option("--work-cap", work_cap);
  table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"json", "csv"}));

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds and exact s = 1, 2 values");
  bounds->add_option("--n", n)->required();
  bounds->add_option("--k", k)->required();
  bounds->add_option("--s", s)->required();
  bounds->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::string keep, remove;
  auto* construct_cmd = app.add_subcommand("construct", "Build a u-cycle or u-word for a word set");
  construct_cmd->add_option("--n", n)->required();
  construct_cmd->add_option("--k", k)->required();
  construct_cmd->add_option("--kind", kind_text)->required()->check(CLI::IsMember({"cycle", "word"}));
  auto* keep_opt = construct_cmd->add_option("--keep", keep, "surviving words: file or inline list");
  auto* remove_opt = construct_cmd->add_option("--remove", remove, "removed words: file or inline list");
  keep_opt->excludes(remove_opt);
  construct_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string which;
  std::string grid;
  int kmax = 14;
  auto* verify = app.add_subcommand("verify", "Exhaustive checks of the structural results");
  verify->add_option("--which", which)->required()->check(
      CLI::IsMember({"ham-edge", "menger", "lemma-circular", "families"}));
  verify->add_option("--n", n);
  verify->add_option("--k", k);
  verify->add_option("--s", s);
  verify->add_option("--kmax", kmax, "largest k for lemma-circular");
  verify->add_option("--grid", grid, "comma list of NxK instances, e.g. 3x2,2x3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  EnumerateOptions options{workers, chunks, work_cap};

  try {
    if (exact->parsed()) {
      auto r = exact_probability(n, k, s, parse_kind(kind_text), options);
      if (format == "csv") {
        out << "n,k,s,kind,favorable,total,probability\n"
            << n << ',' << k << ',' << s << ',' << kind_text << ',' << to_decimal(r.favorable) << ','
            << to_decimal(r.total) << ',' << r.probability.str() << '\n';
      } else {
        out << exact_record(r).dump() << '\n';
      }
      return kOk;
    }

    if (table->parsed()) {
      Params{n, k, 0}.validate();
      Code universe = checked_pow(k, n);
      int hi = smax ? *smax : static_cast<int>(std::min<Code>(universe - 1, 1 << 20));
      if (smin < 0 || hi < smin || static_cast<Code>(hi) > universe) throw InvalidArgument("bad --smin/--smax range");
      auto cells = probability_table(n, k, parse_kind(kind_text), smin, hi, options);
      bool refused = false;
      if (format == "json") {
        json rows = json::array();
        for (const auto& c : cells) {
          if (c.result) {
            rows.push_back(exact_record(*c.result));
          } else {
            refused = true;
            rows.push_back(json{{"n", n}, {"k", k}, {"s", c.s}, {"kind", kind_text}, {"error", c.error}});
          }
        }
        out << rows.dump() << '\n';
      } else {
        out << "s,probability\n";
        for (const auto& c : cells) {
          out << c.s << ',';
          if (c.result) {
            out << c.result->probability.str();
          } else {
            refused = true;
            err << "s=" << c.s << ": " << c.error << '\n';
          }
          out << '\n';
        }
      }
      return refused ? kResourceCap : kOk;
    }

    if (bounds->parsed()) {
      auto report = bounds_report(n, k, s);
      if (format == "csv") {
        out << "formula,applicable,value\n";
        for (const auto& e : report.entries)
          out << to_string(e.id) << ',' << (e.applicable ? "true" : "false") << ','
              << (e.applicable ? e.value.str() : "") << '\n';
      } else {
        out << bounds_record(report).dump() << '\n';
      }
      return kOk;
    }

    if (construct_cmd->parsed()) {
      Params{n, k, 0}.validate();
      UKind kind = parse_kind(kind_text);
      std::optional<WordSet> survivors;
      if (!keep_opt->empty()) {
        survivors = WordSet::from_strings(n, k, read_word_list(keep, k));
      } else if (!remove_opt->empty()) {
        auto removed = WordSet::from_strings(n, k, read_word_list(remove, k));
        survivors = WordSet::complement_of(n, k, removed.members());
      } else {
        survivors = WordSet::all(n, k);
      }
      bool exists = kind == UKind::cycle ? u_cycle_exists(*survivors) : u_word_exists(*survivors);
      if (!exists) {
        err << nonexistence_diagnostic(kind, *survivors) << '\n';
        return kNotUniversal;
      }
      auto obj = construct(kind, *survivors);
      if (format == "json") {
        out << json{{"n", n}, {"k", k}, {"kind", kind_text}, {"text", obj.str()}, {"verified", verify_u_object(obj, *survivors)}}.dump()
            << '\n';
      } else {
        out << obj.str() << '\n';
      }
      return kOk;
    }

    if (verify->parsed()) {
      if (which == "lemma-circular") {
        json rows = json::array();
        std::size_t mismatches = 0;
        for (int kk = 2; kk <= kmax; ++kk) {
          for (int i = 0; i <= kk; ++i) {
            std::uint64_t brute = 0;
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << kk); ++mask) {
              if (std::popcount(mask) != i) continue;
              std::uint64_t rot = ((mask >> 1) | ((mask & 1) << (kk - 1)));
              if ((mask & rot) == 0) ++brute;
            }
            BigCount formula = circular_count(kk, i);
            if (formula != brute) {
              ++mismatches;
              rows.push_back(json{{"k", kk}, {"i", i}, {"formula", to_decimal(formula)}, {"brute_force", brute}});
            }
          }
        }
        out << json{{"which", which}, {"kmax", kmax}, {"mismatches", mismatches}, {"violations", rows}}.dump() << '\n';
        return mismatches == 0 ? kOk : kNotUniversal;
      }

      if (which == "families") {
        FamilyKind fk = k == 2 ? FamilyKind::k2 : FamilyKind::general;
        std::size_t count = 0, cycle_ok = 0, strong_ok = 0;
        for_each_removal_family(n, k, s, fk, [&](const RemovalFamily& f) {
          ++count;
          auto survivors = WordSet::complement_of(n, k, f.removal.members());
          if (u_cycle_exists(survivors)) ++cycle_ok;
          if (is_strongly_connected_on_support(build_from_survivors(survivors))) ++strong_ok;
        });
        BigCount expected = fk == FamilyKind::k2 ? t_count(n, s) : s_count(n, k, s);
        bool ok = expected == count && cycle_ok == count && strong_ok == count;
        out << json{{"which", which},         {"n", n},
                    {"k", k},                 {"s", s},
                    {"family", fk == FamilyKind::k2 ? "k2" : "general"},
                    {"families", count},      {"expected", to_decimal(expected)},
                    {"u_cycle_positive", cycle_ok}, {"strongly_connected", strong_ok}}
                   .dump()
            << '\n';
        return ok ? kOk : kNotUniversal;
      }

      std::vector<std::pair<int, int>> instances;
      if (!grid.empty()) {
        std::stringstream ss(grid);
        std::string item;
        while (std::getline(ss, item, ',')) {
          auto x = item.find('x');
          if (x == std::string::npos) throw InvalidArgument("grid entries look like 3x2");
          instances.emplace_back(std::stoi(item.substr(0, x)), std::stoi(item.substr(x + 1)));
        }
      } else {
        instances.emplace_back(n, k);
      }
      bool all_ok = true;
      for (auto [gn, gk] : instances) {
        Params{gn, gk, 0}.validate();
        auto report = which == "ham-edge" ? verify_ham_edge_theorem(gn, gk) : verify_menger_theorem(gn, gk);
        all_ok = all_ok && report.confirmed();
        out << theorem_record(which, report).dump() << '\n';
      }
      return all_ok ? kOk : kNotUniversal;
    }
  } catch (const WorkCapExceeded& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ucycle::cli
