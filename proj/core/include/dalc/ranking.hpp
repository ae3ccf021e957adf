#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dalc/entailment.hpp"
#include "dalc/kb.hpp"
#include "dalc/limits.hpp"

namespace dalc {

/// A natural number or infinity.
class Rank {
public:
  Rank() : value_(0), infinite_(false) {}
  explicit Rank(std::size_t v) : value_(v), infinite_(false) {}
  static Rank infinite() {
    Rank r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  std::size_t value() const { return value_; }  // finite ranks only

  friend bool operator==(const Rank& a, const Rank& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator!=(const Rank& a, const Rank& b) { return !(a == b); }
  friend bool operator<(const Rank& a, const Rank& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }

  std::string str() const {
    return infinite_ ? "inf" : std::to_string(value_);
  }

private:
  std::size_t value_;
  bool infinite_;
};

/// The exceptionality sequence E_0 ... E_n with the derived strata and
/// default ranks. Built once per KB; concept ranks are memoized.
struct RankingResult {
  std::vector<TBoxStage> stages;  // E_0 ... E_n (E_n is the fixpoint stage)
  /// strata[i] = defaults of rank i (input order preserved).
  std::vector<std::vector<DefeasibleInclusion>> strata;
  std::vector<DefeasibleInclusion> infinite_defaults;

  Rank default_rank(const DefeasibleInclusion& d) const;

  // Concept-rank memo, guarded so callers may query concurrently.
  struct RankCache {
    std::mutex mutex;
    std::map<std::string, Rank> entries;
  };
  std::unique_ptr<RankCache> rank_cache = std::make_unique<RankCache>();
};

/// Compute the exceptionality sequence to its fixpoint.
RankingResult compute_ranking(const KnowledgeBase& kb,
                              const Limits& limits = {});

/// Least stage index at which c is non-exceptional; infinite if none.
Rank concept_rank(const RankingResult& ranking, const Concept& c,
                  const Limits& limits = {});

/// Rational-closure entailment. Typical lhs C: rank(C) < rank(C and not D)
/// or rank(C) infinite. Plain lhs: strict_query_entails.
bool rc_entails(const KnowledgeBase& kb, const RankingResult& ranking,
                const Query& q, const Limits& limits = {});

}  // namespace dalc
