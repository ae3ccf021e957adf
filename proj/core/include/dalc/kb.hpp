#pragma once

#include <span>
#include <string>
#include <vector>

#include "dalc/concepts.hpp"

namespace dalc {

/// C <= D where C is T-free by construction.
struct StrictInclusion {
  Concept lhs;
  Concept rhs;
};

/// T(subject) <= aspect.
struct DefeasibleInclusion {
  Concept subject;
  Concept aspect;
};

bool same_inclusion(const DefeasibleInclusion& a, const DefeasibleInclusion& b);
bool same_inclusion(const StrictInclusion& a, const StrictInclusion& b);

struct ConceptAssertion {
  Concept concept_expr;
  std::string individual;
};

struct RoleAssertion {
  std::string role;
  std::string from;
  std::string to;
};

struct KnowledgeBase {
  std::vector<StrictInclusion> strict;
  /// Input order preserved; duplicates (canonical equality of both sides)
  /// collapsed at parse time.
  std::vector<DefeasibleInclusion> defeasible;
  std::vector<ConceptAssertion> concept_assertions;
  std::vector<RoleAssertion> role_assertions;
};

struct QueryLhs {
  bool typical = false;  // true for T(C), false for plain C
  Concept subject;
};

struct Query {
  QueryLhs lhs;
  Concept rhs;
};

/// Conjunction of (not C or D) over all T(C) <= D in the set, folded in a
/// deterministic order (lexicographic by printed conjunct). Empty set: Top.
Concept materialize(std::span<const DefeasibleInclusion> defaults);

/// The distinct aspect concepts (right-hand sides of typicality inclusions),
/// canonical forms, sorted.
std::vector<Concept> aspects(const KnowledgeBase& kb);

std::string to_string(const StrictInclusion& inc);
std::string to_string(const DefeasibleInclusion& inc);
std::string to_string(const Query& q);
std::string to_string(const KnowledgeBase& kb);

bool role_free(const KnowledgeBase& kb);

/// Distinct atom names appearing anywhere in the KB, sorted.
std::vector<std::string> atom_names(const KnowledgeBase& kb);

}  // namespace dalc
