#pragma once

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "dalc/bases.hpp"
#include "dalc/kb.hpp"
#include "dalc/parser.hpp"

namespace testsup {

inline dalc::KnowledgeBase load_fixture(const std::string& name) {
  std::ifstream in(std::string(DALC_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream os;
  os << in.rdbuf();
  return dalc::parse_kb(os.str());
}

// Random role-free concepts over at most three atoms; shallow on purpose so
// the truth-table oracles stay cheap.
inline dalc::Concept random_concept(std::mt19937& rng, int depth = 2) {
  static const char* names[] = {"A", "B", "C"};
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 2);
  switch (pick(rng)) {
    case 0:
    case 1:
      return dalc::Concept::atom(names[rng() % 3]);
    case 2:
      return dalc::Concept::negation(dalc::Concept::atom(names[rng() % 3]));
    case 3:
      return dalc::Concept::negation(random_concept(rng, depth - 1));
    case 4:
      return dalc::Concept::conj(random_concept(rng, depth - 1),
                                 random_concept(rng, depth - 1));
    default:
      return dalc::Concept::disj(random_concept(rng, depth - 1),
                                 random_concept(rng, depth - 1));
  }
}

// A random role-free KB: up to 2 strict inclusions, 1..5 defaults whose
// subjects are drawn from a small pool so exception chains actually form.
inline dalc::KnowledgeBase random_kb(std::mt19937& rng) {
  dalc::KnowledgeBase kb;
  std::uniform_int_distribution<int> n_strict(0, 2), n_def(1, 5);
  int ns = n_strict(rng);
  for (int i = 0; i < ns; ++i)
    kb.strict.push_back({random_concept(rng, 1), random_concept(rng, 1)});
  int nd = n_def(rng);
  for (int i = 0; i < nd; ++i) {
    dalc::Concept subject = rng() % 3 == 0
                                ? random_concept(rng, 1)
                                : dalc::Concept::atom(rng() % 2 ? "A" : "B");
    dalc::DefeasibleInclusion d{subject, random_concept(rng, 1)};
    bool dup = false;
    for (const auto& e : kb.defeasible)
      if (dalc::same_inclusion(d, e)) dup = true;
    if (!dup) kb.defeasible.push_back(d);
  }
  return kb;
}

inline dalc::Query random_typical_query(std::mt19937& rng) {
  return {{true, random_concept(rng, 1)}, random_concept(rng, 1)};
}

// --- literal reference enumeration of preferred bases ----------------------
// Every per-stratum subset tuple, filtered for compatibility, then the
// preference order applied exactly as written: a tuple loses when another
// compatible tuple keeps a strict superset (mp) or strictly more defaults
// (lex) at the highest stratum where they differ.

namespace detail {

using Tuple = std::vector<std::vector<dalc::DefeasibleInclusion>>;

inline bool subset_of(const std::vector<dalc::DefeasibleInclusion>& a,
                      const std::vector<dalc::DefeasibleInclusion>& b) {
  for (const auto& x : a) {
    bool found = false;
    for (const auto& y : b)
      if (dalc::same_inclusion(x, y)) found = true;
    if (!found) return false;
  }
  return true;
}

inline bool mp_preferred(const Tuple& t2, const Tuple& t1) {
  for (std::size_t j = t1.size(); j-- > 0;) {
    bool eq = t1[j].size() == t2[j].size() && subset_of(t1[j], t2[j]);
    if (eq) continue;
    return t1[j].size() < t2[j].size() && subset_of(t1[j], t2[j]);
  }
  return false;
}

inline bool lex_preferred(const Tuple& t2, const Tuple& t1) {
  for (std::size_t j = t1.size(); j-- > 0;)
    if (t2[j].size() != t1[j].size()) return t2[j].size() > t1[j].size();
  return false;
}

}  // namespace detail

inline std::set<std::string> naive_bases(const dalc::KnowledgeBase& kb,
                                         const dalc::RankingResult& r,
                                         const dalc::Concept& b, bool lex) {
  using detail::Tuple;
  (void)kb;
  std::size_t k = dalc::concept_rank(r, b).value();
  std::size_t strata = std::min(k, r.strata.size());
  std::vector<Tuple> compatible;
  std::vector<std::size_t> mask(strata, 0);
  for (;;) {
    Tuple t(strata);
    std::vector<dalc::DefeasibleInclusion> all;
    for (std::size_t j = 0; j < strata; ++j) {
      for (std::size_t i = 0; i < r.strata[j].size(); ++i)
        if (mask[j] & (std::size_t{1} << i)) t[j].push_back(r.strata[j][i]);
      all.insert(all.end(), t[j].begin(), t[j].end());
    }
    if (!dalc::guarded_entails(r.stages[k], dalc::materialize(all), b,
                               dalc::Concept::bot()))
      compatible.push_back(std::move(t));
    std::size_t j = 0;
    while (j < strata && mask[j] + 1 == (std::size_t{1} << r.strata[j].size()))
      mask[j++] = 0;
    if (j == strata) break;
    ++mask[j];
  }
  std::set<std::string> out;
  for (const auto& t : compatible) {
    bool beaten = false;
    for (const auto& t2 : compatible)
      if (lex ? detail::lex_preferred(t2, t) : detail::mp_preferred(t2, t))
        beaten = true;
    if (beaten) continue;
    dalc::Base base;
    for (std::size_t j = 0; j < strata; ++j) base.selection[j] = t[j];
    base.forced = r.stages[k].defeasible;
    base.subject_rank = k;
    out.insert(base.str());
  }
  return out;
}

inline std::set<std::string> base_strings(const std::vector<dalc::Base>& v) {
  std::set<std::string> out;
  for (const auto& b : v) out.insert(b.str());
  return out;
}

}  // namespace testsup
