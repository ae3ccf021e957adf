// Command-line front end for the defeasible-ALC reasoner.
//
// dalc (rank|entails|bases|check) <kb-file> [--method M] [--json]
//      [--explain] ["query"]
//
// Exit codes: 0 verdict computed (true or false alike), 2 parse/usage error,
// 3 inconsistent ABox, 4 tableau node budget exhausted, 5 oracle bounds.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "dalc/bases.hpp"
#include "dalc/oracle.hpp"
#include "dalc/parser.hpp"
#include "dalc/ranking.hpp"
#include "dalc/tableau.hpp"

namespace {

using nlohmann::json;

constexpr int kExitParse = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitResource = 4;
constexpr int kExitOracle = 5;

struct Options {
  std::string kb_path;
  std::string query_text;
  std::string method = "rc";
  bool as_json = false;
  bool explain = false;
  dalc::Limits limits;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string strata_line(const dalc::RankingResult& ranking, std::size_t i) {
  std::ostringstream os;
  bool first = true;
  for (const auto& d : ranking.strata[i]) {
    if (!first) os << ", ";
    os << dalc::to_string(d);
    first = false;
  }
  return os.str();
}

json strata_json(const dalc::RankingResult& ranking) {
  json out = json::array();
  for (const auto& stratum : ranking.strata) {
    json row = json::array();
    for (const auto& d : stratum) row.push_back(dalc::to_string(d));
    out.push_back(row);
  }
  return out;
}

json bases_json(const std::vector<dalc::Base>& bases) {
  json out = json::array();
  for (const auto& base : bases) {
    json row = json::array();
    for (const auto& d : base.all()) row.push_back(dalc::to_string(d));
    out.push_back(row);
  }
  return out;
}

void print_bases(const std::vector<dalc::Base>& bases) {
  std::cout << bases.size() << (bases.size() == 1 ? " base\n" : " bases\n");
  for (const auto& base : bases) std::cout << "  " << base.str() << "\n";
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

int run_check(const dalc::KnowledgeBase& kb, const Options& opt,
              std::chrono::steady_clock::time_point start) {
  bool consistent = dalc::abox_consistent(kb, opt.limits);
  if (opt.as_json) {
    json out = {{"method", "check"},
                {"abox_consistent", consistent},
                {"elapsed_ms", elapsed_ms(start)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "ABox " << (consistent ? "consistent" : "inconsistent")
              << "\n";
  }
  return consistent ? 0 : kExitInconsistent;
}

int run_rank(const dalc::KnowledgeBase& kb, const Options& opt,
             std::chrono::steady_clock::time_point start) {
  dalc::Concept c = dalc::parse_concept(opt.query_text);
  dalc::RankingResult ranking = dalc::compute_ranking(kb, opt.limits);
  dalc::Rank rank = dalc::concept_rank(ranking, c, opt.limits);
  if (opt.as_json) {
    json infinite = json::array();
    for (const auto& d : ranking.infinite_defaults)
      infinite.push_back(dalc::to_string(d));
    json out = {{"method", "rank"},
                {"query", dalc::to_string(dalc::canonical(c))},
                {"rank_lhs", rank.str()},
                {"strata", strata_json(ranking)},
                {"infinite_rank_defaults", infinite},
                {"elapsed_ms", elapsed_ms(start)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "rank(" << dalc::to_string(dalc::canonical(c))
            << ") = " << rank.str() << "\n";
  for (std::size_t i = 0; i < ranking.strata.size(); ++i)
    std::cout << "stratum " << i << ": " << strata_line(ranking, i) << "\n";
  if (!ranking.infinite_defaults.empty()) {
    std::cout << "rank inf:";
    for (const auto& d : ranking.infinite_defaults)
      std::cout << " " << dalc::to_string(d);
    std::cout << "\n";
  }
  return 0;
}

int run_bases(const dalc::KnowledgeBase& kb, const Options& opt,
              std::chrono::steady_clock::time_point start) {
  if (opt.method != "mp" && opt.method != "lex")
    throw CLI::ValidationError("--method", "bases supports mp or lex");
  dalc::Concept c = dalc::parse_concept(opt.query_text);
  dalc::RankingResult ranking = dalc::compute_ranking(kb, opt.limits);
  dalc::Rank rank = dalc::concept_rank(ranking, c, opt.limits);
  std::vector<dalc::Base> bases;
  if (!rank.is_infinite()) {
    auto policy = opt.method == "mp" ? dalc::BasePolicy::SubsetMaximal
                                     : dalc::BasePolicy::CardinalityMaximal;
    bases = dalc::compute_bases(kb, ranking, c, policy, opt.limits);
  }
  if (opt.as_json) {
    json out = {{"method", opt.method},
                {"query", dalc::to_string(dalc::canonical(c))},
                {"rank_lhs", rank.str()},
                {"bases", bases_json(bases)},
                {"elapsed_ms", elapsed_ms(start)}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "rank(" << dalc::to_string(dalc::canonical(c))
            << ") = " << rank.str() << "\n";
  if (rank.is_infinite())
    std::cout << "no bases: subject has infinite rank\n";
  else
    print_bases(bases);
  return 0;
}

int run_entails(const dalc::KnowledgeBase& kb, const Options& opt,
                std::chrono::steady_clock::time_point start) {
  dalc::Query q = dalc::parse_query(opt.query_text);

  bool entailed = false;
  std::optional<dalc::Rank> rank_lhs, rank_both;
  std::vector<dalc::Base> bases;

  if (opt.method == "classical") {
    if (q.lhs.typical)
      throw CLI::ValidationError("--method",
                                 "classical entailment takes plain queries");
    entailed = dalc::entails(kb.strict, q, opt.limits);
  } else if (opt.method == "oracle-rc") {
    entailed = dalc::oracle_rc_entails(kb, q, opt.limits);
  } else if (opt.method == "oracle-s") {
    entailed = dalc::oracle_s_entails(kb, q, opt.limits);
  } else if (opt.method == "rc" || opt.method == "mp" || opt.method == "lex") {
    dalc::RankingResult ranking = dalc::compute_ranking(kb, opt.limits);
    if (q.lhs.typical) {
      rank_lhs = dalc::concept_rank(ranking, q.lhs.subject, opt.limits);
      rank_both = dalc::concept_rank(
          ranking,
          dalc::Concept::conj(q.lhs.subject, dalc::Concept::negation(q.rhs)),
          opt.limits);
    }
    if (opt.method == "rc") {
      entailed = dalc::rc_entails(kb, ranking, q, opt.limits);
    } else {
      auto policy = opt.method == "mp" ? dalc::BasePolicy::SubsetMaximal
                                       : dalc::BasePolicy::CardinalityMaximal;
      entailed = dalc::closure_entails(kb, ranking, q, policy, opt.limits);
      if (opt.explain && q.lhs.typical && rank_lhs && !rank_lhs->is_infinite())
        bases = dalc::compute_bases(kb, ranking, q.lhs.subject, policy,
                                    opt.limits);
      if (opt.explain && !bases.empty()) {
        for (const auto& base : bases) {
          bool ok = dalc::guarded_entails(ranking.stages[rank_lhs->value()],
                                          dalc::materialize(base.all()),
                                          q.lhs.subject, q.rhs, opt.limits);
          if (!opt.as_json)
            std::cout << (ok ? "holds " : "fails ") << base.str() << "\n";
        }
      }
    }
  } else {
    throw CLI::ValidationError("--method", "unknown method " + opt.method);
  }

  if (opt.as_json) {
    json out = {{"method", opt.method},
                {"query", dalc::to_string(q)},
                {"entailed", entailed},
                {"rank_lhs", rank_lhs ? json(rank_lhs->str()) : json()},
                {"rank_lhs_and_neg_rhs",
                 rank_both ? json(rank_both->str()) : json()},
                {"bases", bases_json(bases)},
                {"elapsed_ms", elapsed_ms(start)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (entailed ? "true" : "false") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Defeasible ALC reasoner: rational, multipreference and "
               "lexicographic closure over a shared tableau core"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("DEFEASIBLE_ALC_MAX_NODES"))
    opt.limits.max_nodes = static_cast<std::size_t>(std::strtoull(env, nullptr, 10));

  auto add_common = [&](CLI::App* sub, bool with_query, bool with_method) {
    sub->add_option("kb-file", opt.kb_path, "knowledge base file")
        ->required();
    if (with_query)
      sub->add_option("query", opt.query_text, "query or concept text")
          ->required();
    if (with_method)
      sub->add_option("--method", opt.method, "reasoning method");
    sub->add_flag("--json", opt.as_json, "structured output");
    sub->add_flag("--explain", opt.explain, "show per-base outcomes");
    sub->add_option("--max-nodes", opt.limits.max_nodes,
                    "tableau node budget");
    sub->add_option("--max-atoms", opt.limits.max_atoms,
                    "oracle atom bound");
    sub->add_option("--max-domain", opt.limits.max_domain,
                    "oracle domain bound");
  };

  CLI::App* rank = app.add_subcommand("rank", "concept rank and strata");
  add_common(rank, true, false);
  CLI::App* entails = app.add_subcommand("entails", "query entailment");
  add_common(entails, true, true);
  CLI::App* bases = app.add_subcommand("bases", "maximal compatible bases");
  add_common(bases, true, true);
  CLI::App* check = app.add_subcommand("check", "parse and ABox consistency");
  add_common(check, false, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  auto start = std::chrono::steady_clock::now();
  try {
    dalc::KnowledgeBase kb = dalc::parse_kb(read_file(opt.kb_path));
    if (check->parsed()) return run_check(kb, opt, start);
    if (!dalc::abox_consistent(kb, opt.limits)) {
      std::cerr << "error: ABox is inconsistent\n";
      return kExitInconsistent;
    }
    if (rank->parsed()) return run_rank(kb, opt, start);
    if (bases->parsed()) return run_bases(kb, opt, start);
    return run_entails(kb, opt, start);
  } catch (const dalc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const dalc::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const dalc::OracleBoundsError& e) {
    std::cerr << "oracle bounds: " << e.what() << "\n";
    return kExitOracle;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}
