#include "dalc/bases.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dalc/entailment.hpp"

namespace dalc {

namespace {

std::vector<DefeasibleInclusion> sorted_by_print(
    std::vector<DefeasibleInclusion> v) {
  std::sort(v.begin(), v.end(),
            [](const DefeasibleInclusion& a, const DefeasibleInclusion& b) {
              return to_string(a) < to_string(b);
            });
  return v;
}

bool same_set(const std::vector<DefeasibleInclusion>& a,
              const std::vector<DefeasibleInclusion>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_inclusion(a[i], b[i])) return false;
  return true;
}

struct Search {
  const RankingResult& ranking;
  const Concept& subject;
  std::size_t k;
  BasePolicy policy;
  const Limits& limits;
  std::vector<Base> out;

  bool compatible(const std::vector<DefeasibleInclusion>& candidate) const {
    return !guarded_entails(ranking.stages[k], materialize(candidate), subject,
                            Concept::bot(), limits);
  }

  // Descend strata from k-1 to 0, branching over the preferred subsets of
  // each stratum given the accumulated choice.
  void descend(std::size_t stratum_plus_one,
               std::map<std::size_t, std::vector<DefeasibleInclusion>> chosen,
               std::vector<DefeasibleInclusion> accumulated) {
    if (stratum_plus_one == 0) {
      Base base;
      base.selection = std::move(chosen);
      base.forced = ranking.stages[k].defeasible;
      base.subject_rank = k;
      out.push_back(std::move(base));
      return;
    }
    const std::size_t h = stratum_plus_one - 1;
    const auto& stratum = ranking.strata[h];
    std::vector<std::vector<DefeasibleInclusion>> kept;

    // Subset masks in descending cardinality (value order within a
    // cardinality class keeps the result deterministic).
    std::vector<unsigned> masks((1u << stratum.size()));
    for (unsigned m = 0; m < masks.size(); ++m) masks[m] = m;
    std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
      return __builtin_popcount(a) > __builtin_popcount(b);
    });

    std::size_t best_card = 0;
    std::vector<unsigned> kept_masks;
    for (unsigned m : masks) {
      const std::size_t card = __builtin_popcount(m);
      if (policy == BasePolicy::CardinalityMaximal && !kept.empty() &&
          card < best_card)
        break;
      if (policy == BasePolicy::SubsetMaximal) {
        bool dominated = false;
        for (unsigned km : kept_masks)
          if ((m & km) == m) { dominated = true; break; }
        if (dominated) continue;
      }
      std::vector<DefeasibleInclusion> candidate = accumulated;
      for (std::size_t i = 0; i < stratum.size(); ++i)
        if (m & (1u << i)) candidate.push_back(stratum[i]);
      if (!compatible(candidate)) continue;
      std::vector<DefeasibleInclusion> q;
      for (std::size_t i = 0; i < stratum.size(); ++i)
        if (m & (1u << i)) q.push_back(stratum[i]);
      kept.push_back(std::move(q));
      kept_masks.push_back(m);
      best_card = std::max(best_card, card);
    }

    for (std::size_t i = 0; i < kept.size(); ++i) {
      auto chosen_next = chosen;
      chosen_next[h] = kept[i];
      auto acc_next = accumulated;
      acc_next.insert(acc_next.end(), kept[i].begin(), kept[i].end());
      descend(h, std::move(chosen_next), std::move(acc_next));
    }
  }
};

}  // namespace

std::vector<DefeasibleInclusion> Base::all() const {
  std::vector<DefeasibleInclusion> v = forced;
  for (const auto& [stratum, chosen] : selection)
    v.insert(v.end(), chosen.begin(), chosen.end());
  return sorted_by_print(std::move(v));
}

std::string Base::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& d : all()) {
    if (!first) os << ", ";
    os << to_string(d);
    first = false;
  }
  os << "}";
  return os.str();
}

bool operator==(const Base& a, const Base& b) {
  return a.subject_rank == b.subject_rank && same_set(a.all(), b.all());
}

std::vector<Base> compute_bases(const KnowledgeBase& kb,
                                const RankingResult& ranking, const Concept& b,
                                BasePolicy policy, const Limits& limits) {
  (void)kb;
  Rank k = concept_rank(ranking, b, limits);
  if (k.is_infinite())
    throw std::invalid_argument(
        "base enumeration requires a subject of finite rank");
  if (ranking.strata.size() > 8 * sizeof(unsigned))
    throw std::invalid_argument("too many strata");

  Search search{ranking, b, k.value(), policy, limits, {}};
  // Forced defaults (rank >= k) enter every compatibility check through the
  // stage materialization; the accumulated set starts empty.
  search.descend(std::min(k.value(), ranking.strata.size()), {}, {});

  std::vector<Base>& out = search.out;
  // Collapse duplicates and order canonically.
  std::sort(out.begin(), out.end(), [](const Base& x, const Base& y) {
    return x.str() < y.str();
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Base> mp_bases(const KnowledgeBase& kb, const RankingResult& ranking,
                           const Concept& b, const Limits& limits) {
  return compute_bases(kb, ranking, b, BasePolicy::SubsetMaximal, limits);
}

std::vector<Base> lex_bases(const KnowledgeBase& kb,
                            const RankingResult& ranking, const Concept& b,
                            const Limits& limits) {
  return compute_bases(kb, ranking, b, BasePolicy::CardinalityMaximal, limits);
}

bool closure_entails(const KnowledgeBase& kb, const RankingResult& ranking,
                     const Query& q, BasePolicy policy, const Limits& limits) {
  if (!q.lhs.typical) return strict_query_entails(kb, ranking, q, limits);
  Rank k = concept_rank(ranking, q.lhs.subject, limits);
  if (k.is_infinite()) return true;
  for (const Base& base : compute_bases(kb, ranking, q.lhs.subject, policy,
                                        limits)) {
    if (!guarded_entails(ranking.stages[k.value()], materialize(base.all()),
                         q.lhs.subject, q.rhs, limits))
      return false;
  }
  return true;
}

bool mp_entails(const KnowledgeBase& kb, const RankingResult& ranking,
                const Query& q, const Limits& limits) {
  return closure_entails(kb, ranking, q, BasePolicy::SubsetMaximal, limits);
}

bool lex_entails(const KnowledgeBase& kb, const RankingResult& ranking,
                 const Query& q, const Limits& limits) {
  return closure_entails(kb, ranking, q, BasePolicy::CardinalityMaximal, limits);
}

}  // namespace dalc
