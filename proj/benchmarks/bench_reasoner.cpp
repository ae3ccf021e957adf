#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "dalc/bases.hpp"
#include "dalc/oracle.hpp"
#include "dalc/parser.hpp"
#include "dalc/ranking.hpp"

namespace {

dalc::KnowledgeBase load(const char* name) {
  std::ifstream in(std::string(DALC_FIXTURE_DIR) + "/" + name);
  std::ostringstream os;
  os << in.rdbuf();
  return dalc::parse_kb(os.str());
}

void BM_Ranking(benchmark::State& state, const char* fixture) {
  dalc::KnowledgeBase kb = load(fixture);
  for (auto _ : state) {
    dalc::RankingResult r = dalc::compute_ranking(kb);
    benchmark::DoNotOptimize(r.strata.size());
  }
}

void BM_MpQuery(benchmark::State& state, const char* fixture,
                const char* query) {
  dalc::KnowledgeBase kb = load(fixture);
  dalc::Query q = dalc::parse_query(query);
  for (auto _ : state) {
    dalc::RankingResult r = dalc::compute_ranking(kb);
    benchmark::DoNotOptimize(dalc::mp_entails(kb, r, q));
  }
}

void BM_OracleS(benchmark::State& state, const char* fixture,
                const char* query) {
  dalc::KnowledgeBase kb = load(fixture);
  dalc::Query q = dalc::parse_query(query);
  for (auto _ : state)
    benchmark::DoNotOptimize(dalc::oracle_s_entails(kb, q));
}

BENCHMARK_CAPTURE(BM_Ranking, kb1, "kb1.dl");
BENCHMARK_CAPTURE(BM_Ranking, kb4, "kb4.dl");
BENCHMARK_CAPTURE(BM_MpQuery, kb1_feather, "kb1.dl",
                  "T(Penguin) <= HasNiceFeather");
BENCHMARK_CAPTURE(BM_MpQuery, kb3_c, "kb3.dl", "T(Penguin) <= C");
BENCHMARK_CAPTURE(BM_OracleS, kb4_nofly, "kb4.dl", "T(BabyPenguin) <= not Fly");

}  // namespace

BENCHMARK_MAIN();
