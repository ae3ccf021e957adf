#include "dalc/oracle.hpp"

#include <algorithm>
#include <string>

namespace dalc {

namespace {

std::size_t atom_index(const std::vector<std::string>& atoms,
                       const std::string& name) {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), name);
  return static_cast<std::size_t>(it - atoms.begin());
}

// Satisfaction of the materialization of one default.
bool sat_default(const DefeasibleInclusion& d, Valuation v,
                 const std::vector<std::string>& atoms) {
  return !eval_concept(d.subject, v, atoms) || eval_concept(d.aspect, v, atoms);
}

bool sat_all(const std::vector<DefeasibleInclusion>& defaults, Valuation v,
             const std::vector<std::string>& atoms) {
  for (const auto& d : defaults)
    if (!sat_default(d, v, atoms)) return false;
  return true;
}

// The exceptionality sequence recomputed by truth tables, independent of the
// tableau modules. Returns the defeasible parts of E_0 ... E_n where E_n is
// the fixpoint (its defaults, if any, have no rank).
std::vector<std::vector<DefeasibleInclusion>> truth_table_stages(
    const KnowledgeBase& kb, const std::vector<Valuation>& strict_domain,
    const std::vector<std::string>& atoms) {
  std::vector<std::vector<DefeasibleInclusion>> stages;
  std::vector<DefeasibleInclusion> current = kb.defeasible;
  for (;;) {
    stages.push_back(current);
    std::vector<DefeasibleInclusion> exceptional;
    for (const auto& d : current) {
      bool witnessed = false;
      for (Valuation v : strict_domain) {
        if (eval_concept(d.subject, v, atoms) && sat_all(current, v, atoms)) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) exceptional.push_back(d);
    }
    if (exceptional.size() == current.size()) break;
    current = std::move(exceptional);
  }
  return stages;
}

struct DomainData {
  std::vector<std::string> atoms;
  std::vector<Valuation> strict_domain;
  std::vector<std::vector<DefeasibleInclusion>> stage_defaults;  // E_0..E_n
  std::vector<Valuation> domain;            // consistent with K
  std::vector<std::size_t> minimal_rank;    // least satisfied stage
};

DomainData build_domain(const KnowledgeBase& kb, const Limits& limits) {
  if (!role_free(kb))
    throw OracleBoundsError("the semantic oracle handles role-free KBs only");
  DomainData data;
  data.atoms = atom_names(kb);
  if (data.atoms.size() > limits.max_atoms)
    throw OracleBoundsError("atom bound exceeded: " +
                            std::to_string(data.atoms.size()) + " atoms, bound " +
                            std::to_string(limits.max_atoms));
  const Valuation count = Valuation{1} << data.atoms.size();
  for (Valuation v = 0; v < count; ++v) {
    bool ok = true;
    for (const auto& s : kb.strict) {
      if (eval_concept(s.lhs, v, data.atoms) &&
          !eval_concept(s.rhs, v, data.atoms)) {
        ok = false;
        break;
      }
    }
    if (ok) data.strict_domain.push_back(v);
  }
  data.stage_defaults = truth_table_stages(kb, data.strict_domain, data.atoms);
  // A valuation is consistent with K iff it satisfies the materialization of
  // some stage; the weakest is the fixpoint stage. Valuations that falsify an
  // infinite-rank default's materialization are excluded.
  for (Valuation v : data.strict_domain) {
    for (std::size_t i = 0; i < data.stage_defaults.size(); ++i) {
      if (sat_all(data.stage_defaults[i], v, data.atoms)) {
        data.domain.push_back(v);
        data.minimal_rank.push_back(i);
        break;
      }
    }
  }
  return data;
}

std::vector<Concept> distinct_canonical(const std::vector<Concept>& in) {
  std::vector<Concept> out;
  for (const auto& c : in) {
    Concept canon = canonical(c);
    bool seen = false;
    for (const auto& e : out)
      if (e == canon) { seen = true; break; }
    if (!seen) out.push_back(canon);
  }
  std::sort(out.begin(), out.end(), ConceptLess{});
  return out;
}

OracleModel make_model(const KnowledgeBase& kb, const DomainData& data,
                       std::vector<std::size_t> ranks) {
  OracleModel model;
  model.atoms = data.atoms;
  model.domain = data.domain;
  model.global_rank = std::move(ranks);
  std::vector<Concept> aspect_list;
  for (const auto& d : kb.defeasible) aspect_list.push_back(d.aspect);
  model.aspect_concepts = distinct_canonical(aspect_list);
  model.aspect_rank.resize(model.aspect_concepts.size());
  for (std::size_t a = 0; a < model.aspect_concepts.size(); ++a) {
    model.aspect_rank[a].resize(model.domain.size());
    for (std::size_t i = 0; i < model.domain.size(); ++i) {
      bool all_sat = true;
      for (const auto& d : kb.defeasible) {
        if (canonical(d.aspect) != model.aspect_concepts[a]) continue;
        if (!sat_default(d, model.domain[i], data.atoms)) {
          all_sat = false;
          break;
        }
      }
      model.aspect_rank[a][i] = all_sat ? 0 : 1;
    }
  }
  return model;
}

void verify_typicality(const KnowledgeBase& kb, const OracleModel& model,
                       const char* what) {
  for (const auto& d : kb.defeasible) {
    std::size_t min_rank = SIZE_MAX;
    for (std::size_t i = 0; i < model.domain.size(); ++i)
      if (eval_concept(d.subject, model.domain[i], model.atoms))
        min_rank = std::min(min_rank, model.global_rank[i]);
    for (std::size_t i = 0; i < model.domain.size(); ++i) {
      if (!eval_concept(d.subject, model.domain[i], model.atoms)) continue;
      if (model.global_rank[i] != min_rank) continue;
      if (!eval_concept(d.aspect, model.domain[i], model.atoms))
        throw VerificationError(std::string(what) +
                                ": minimal subject element falsifies " +
                                to_string(d));
    }
  }
}

bool typical_query_holds(const OracleModel& model,
                         const std::vector<std::size_t>& ranks, const Query& q) {
  if (!q.lhs.typical) {
    for (Valuation v : model.domain)
      if (eval_concept(q.lhs.subject, v, model.atoms) &&
          !eval_concept(q.rhs, v, model.atoms))
        return false;
    return true;
  }
  std::size_t min_rank = SIZE_MAX;
  for (std::size_t i = 0; i < model.domain.size(); ++i)
    if (eval_concept(q.lhs.subject, model.domain[i], model.atoms))
      min_rank = std::min(min_rank, ranks[i]);
  for (std::size_t i = 0; i < model.domain.size(); ++i) {
    if (!eval_concept(q.lhs.subject, model.domain[i], model.atoms)) continue;
    if (ranks[i] != min_rank) continue;
    if (!eval_concept(q.rhs, model.domain[i], model.atoms)) return false;
  }
  return true;
}

// Query atoms absent from the KB must still vary freely across the model
// domain; a vacuous strict inclusion makes the enumeration pick them up.
KnowledgeBase with_query_atoms(KnowledgeBase kb, const Query& q) {
  std::vector<std::string> have = atom_names(kb);
  std::vector<std::string> fresh;
  for (const Concept& c : {q.lhs.subject, q.rhs})
    for (const auto& n : atom_names(c))
      if (!std::binary_search(have.begin(), have.end(), n))
        fresh.push_back(n);
  std::sort(fresh.begin(), fresh.end());
  fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
  for (const auto& n : fresh)
    kb.strict.push_back({Concept::atom(n), Concept::top()});
  return kb;
}

}  // namespace

bool eval_concept(const Concept& c, Valuation v,
                  const std::vector<std::string>& atoms) {
  switch (c.kind()) {
    case ConceptKind::Top:
      return true;
    case ConceptKind::Bot:
      return false;
    case ConceptKind::Atom:
      return (v >> atom_index(atoms, c.name())) & 1u;
    case ConceptKind::Not:
      return !eval_concept(c.child(), v, atoms);
    case ConceptKind::And:
      return eval_concept(c.left(), v, atoms) &&
             eval_concept(c.right(), v, atoms);
    case ConceptKind::Or:
      return eval_concept(c.left(), v, atoms) ||
             eval_concept(c.right(), v, atoms);
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      throw OracleBoundsError("role quantifier in oracle evaluation");
  }
  return false;
}

std::vector<Valuation> enumerate_domain(const KnowledgeBase& kb,
                                        const Limits& limits) {
  return build_domain(kb, limits).strict_domain;
}

OracleModel minimal_ranked_model(const KnowledgeBase& kb, const Limits& limits) {
  DomainData data = build_domain(kb, limits);
  OracleModel model = make_model(kb, data, data.minimal_rank);
  verify_typicality(kb, model, "minimal ranked model");
  return model;
}

bool oracle_rc_entails(const KnowledgeBase& kb, const Query& q,
                       const Limits& limits) {
  OracleModel model = minimal_ranked_model(with_query_atoms(kb, q), limits);
  return typical_query_holds(model, model.global_rank, q);
}

namespace {

// Search state shared across the rank-profile enumeration.
struct SEnrichedSearch {
  const KnowledgeBase& kb;
  const DomainData& data;
  std::size_t max_rank;  // inclusive upper bound on rank values

  std::size_t n = 0;  // domain size
  // Per default d: extension bitset of its subject, per-element
  // materialization truth, aspect index, subject index.
  std::vector<std::vector<bool>> subj_ext;
  std::vector<std::vector<bool>> mat_sat;
  std::vector<std::size_t> subject_of;

  // Distinct subjects with nonempty extension.
  std::vector<std::vector<std::size_t>> subject_exts;  // element indices

  // Per ordered pair (x, y): default indices establishing x <_A y with
  // y in the default's subject extension ("down"), and the converse ("up").
  std::vector<std::vector<std::size_t>> pair_down;
  std::vector<std::vector<std::size_t>> pair_up;
  std::vector<bool> cond_a_pair;
};

SEnrichedSearch prepare_search(const KnowledgeBase& kb, const DomainData& data,
                               const OracleModel& shape, std::size_t max_rank) {
  SEnrichedSearch s{kb, data, max_rank};
  s.n = data.domain.size();

  std::vector<Concept> subjects;
  for (const auto& d : kb.defeasible) {
    Concept subj = canonical(d.subject);
    std::vector<bool> ext(s.n), mat(s.n);
    for (std::size_t i = 0; i < s.n; ++i) {
      ext[i] = eval_concept(d.subject, data.domain[i], data.atoms);
      mat[i] = sat_default(d, data.domain[i], data.atoms);
    }
    s.subj_ext.push_back(std::move(ext));
    s.mat_sat.push_back(std::move(mat));
    std::size_t idx = subjects.size();
    for (std::size_t j = 0; j < subjects.size(); ++j)
      if (subjects[j] == subj) { idx = j; break; }
    if (idx == subjects.size()) subjects.push_back(subj);
    s.subject_of.push_back(idx);
  }
  s.subject_exts.resize(subjects.size());
  for (std::size_t d = 0; d < kb.defeasible.size(); ++d) {
    auto& ext = s.subject_exts[s.subject_of[d]];
    if (!ext.empty()) continue;
    for (std::size_t i = 0; i < s.n; ++i)
      if (s.subj_ext[d][i]) ext.push_back(i);
  }

  // aspect index per default, against the fixed two-level shape
  std::vector<std::size_t> aspect_of(kb.defeasible.size());
  for (std::size_t d = 0; d < kb.defeasible.size(); ++d) {
    Concept a = canonical(kb.defeasible[d].aspect);
    for (std::size_t j = 0; j < shape.aspect_concepts.size(); ++j)
      if (shape.aspect_concepts[j] == a) { aspect_of[d] = j; break; }
  }
  auto aspect_prefers = [&](std::size_t aspect, std::size_t x, std::size_t y) {
    return shape.aspect_rank[aspect][x] == 0 && shape.aspect_rank[aspect][y] == 1;
  };

  s.pair_down.resize(s.n * s.n);
  s.pair_up.resize(s.n * s.n);
  s.cond_a_pair.resize(s.n * s.n, false);
  for (std::size_t x = 0; x < s.n; ++x) {
    for (std::size_t y = 0; y < s.n; ++y) {
      if (x == y) continue;
      auto& down = s.pair_down[x * s.n + y];
      auto& up = s.pair_up[x * s.n + y];
      for (std::size_t d = 0; d < kb.defeasible.size(); ++d) {
        if (aspect_prefers(aspect_of[d], x, y) && s.subj_ext[d][y])
          down.push_back(d);
        if (aspect_prefers(aspect_of[d], y, x) && s.subj_ext[d][x])
          up.push_back(d);
      }
      bool some_down = false, some_up = false;
      for (std::size_t a = 0; a < shape.aspect_concepts.size(); ++a) {
        if (aspect_prefers(a, x, y)) some_down = true;
        if (aspect_prefers(a, y, x)) some_up = true;
      }
      s.cond_a_pair[x * s.n + y] = some_down && !some_up;
    }
  }
  return s;
}

// Least simultaneous solution of the typicality and forced-pair constraints
// above the per-element lower bounds, or nullopt when it escapes max_rank.
bool least_solution(const SEnrichedSearch& s,
                    const std::vector<std::vector<std::size_t>>& forced_pairs,
                    std::vector<std::size_t>& g) {
  for (;;) {
    bool changed = false;
    // Typicality: a subject element falsifying the default must sit above
    // the subject extension's minimum.
    for (std::size_t d = 0; d < s.kb.defeasible.size(); ++d) {
      const auto& ext = s.subject_exts[s.subject_of[d]];
      if (ext.empty()) continue;
      std::size_t min_rank = SIZE_MAX;
      for (std::size_t i : ext) min_rank = std::min(min_rank, g[i]);
      for (std::size_t i : ext) {
        if (s.mat_sat[d][i]) continue;
        if (g[i] <= min_rank) {
          g[i] = min_rank + 1;
          if (g[i] > s.max_rank) return false;
          changed = true;
        }
      }
    }
    for (std::size_t x = 0; x < s.n; ++x) {
      for (std::size_t y : forced_pairs[x]) {
        if (g[y] <= g[x]) {
          g[y] = g[x] + 1;
          if (g[y] > s.max_rank) return false;
          changed = true;
        }
      }
    }
    if (!changed) return true;
  }
}

}  // namespace

std::vector<OracleModel> minimal_s_enriched_models(const KnowledgeBase& kb,
                                                   const Limits& limits,
                                                   bool with_condition_a) {
  DomainData data = build_domain(kb, limits);
  if (data.domain.size() > limits.max_domain)
    throw OracleBoundsError("domain bound exceeded: " +
                            std::to_string(data.domain.size()) +
                            " elements, bound " +
                            std::to_string(limits.max_domain));

  OracleModel shape = make_model(kb, data, data.minimal_rank);
  const std::size_t strata_count = data.stage_defaults.size() - 1;
  const std::size_t max_rank = strata_count + 2;
  SEnrichedSearch s = prepare_search(kb, data, shape, max_rank);
  const std::size_t n = s.n;
  const std::size_t num_subjects = s.subject_exts.size();

  std::vector<std::vector<std::size_t>> solutions;

  // Enumerate concept-rank profiles for the default subjects; under a fixed
  // profile the specificity condition becomes an explicit set of forced
  // pairs and the solution set has a least element.
  std::vector<std::size_t> profile(num_subjects, 0);
  for (;;) {
    bool skip = false;
    for (std::size_t j = 0; j < num_subjects; ++j)
      if (s.subject_exts[j].empty() && profile[j] != 0) skip = true;

    if (!skip) {
      // Forced pairs under this profile.
      std::vector<std::vector<std::size_t>> forced(n);
      for (std::size_t x = 0; x < n && !skip; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (x == y) continue;
          const auto& down = s.pair_down[x * n + y];
          const auto& up = s.pair_up[x * n + y];
          bool force = false;
          if (!down.empty()) {
            force = true;
            for (std::size_t dj : up) {
              bool covered = false;
              for (std::size_t dk : down) {
                if (profile[s.subject_of[dj]] < profile[s.subject_of[dk]]) {
                  covered = true;
                  break;
                }
              }
              if (!covered) { force = false; break; }
            }
          }
          if (!force && with_condition_a && s.cond_a_pair[x * n + y])
            force = true;
          if (force) forced[x].push_back(y);
        }
      }

      // Lower bounds from the profile, then the least solution above them.
      std::vector<std::size_t> g(n, 0);
      for (std::size_t j = 0; j < num_subjects; ++j)
        for (std::size_t i : s.subject_exts[j])
          g[i] = std::max(g[i], profile[j]);
      if (least_solution(s, forced, g)) {
        // Self-consistency: the ranks read off the solution must reproduce
        // the profile.
        bool consistent = true;
        for (std::size_t j = 0; j < num_subjects && consistent; ++j) {
          if (s.subject_exts[j].empty()) continue;
          std::size_t min_rank = SIZE_MAX;
          for (std::size_t i : s.subject_exts[j])
            min_rank = std::min(min_rank, g[i]);
          if (min_rank != profile[j]) consistent = false;
        }
        if (consistent) solutions.push_back(std::move(g));
      }
    }

    // next profile
    std::size_t j = 0;
    while (j < num_subjects && profile[j] == max_rank) profile[j++] = 0;
    if (j == num_subjects) break;
    ++profile[j];
  }

  std::sort(solutions.begin(), solutions.end());
  solutions.erase(std::unique(solutions.begin(), solutions.end()),
                  solutions.end());

  // Pointwise-minimal survivors.
  std::vector<std::vector<std::size_t>> minimal;
  for (const auto& g : solutions) {
    bool dominated = false;
    for (const auto& h : solutions) {
      if (&h == &g || h == g) continue;
      bool leq = true;
      for (std::size_t i = 0; i < n; ++i)
        if (h[i] > g[i]) { leq = false; break; }
      if (leq) { dominated = true; break; }
    }
    if (!dominated) minimal.push_back(g);
  }

  if (minimal.empty())
    throw OracleBoundsError(
        "no valid global rank function within the level bound");

  std::vector<OracleModel> models;
  for (auto& g : minimal) {
    OracleModel m = make_model(kb, data, g);
    verify_typicality(kb, m, "S-enriched model");
    models.push_back(std::move(m));
  }
  return models;
}

bool oracle_s_entails(const KnowledgeBase& kb, const Query& q,
                      const Limits& limits) {
  KnowledgeBase augmented = with_query_atoms(kb, q);
  for (const OracleModel& m : minimal_s_enriched_models(augmented, limits))
    if (!typical_query_holds(m, m.global_rank, q)) return false;
  return true;
}

}  // namespace dalc
