#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace dalc {

enum class ConceptKind { Top, Bot, Atom, Not, And, Or, Exists, Forall };

/// An immutable ALC concept expression. Values are cheap to copy
/// (shared-pointer backed) and safe to share across threads.
class Concept {
public:
  Concept() : Concept(top()) {}

  static Concept top();
  static Concept bot();
  static Concept atom(std::string name);
  static Concept negation(Concept c);
  static Concept conj(Concept lhs, Concept rhs);
  static Concept disj(Concept lhs, Concept rhs);
  static Concept exists(std::string role, Concept c);
  static Concept forall(std::string role, Concept c);

  ConceptKind kind() const { return node_->kind; }
  /// Atom name (Atom) or role name (Exists/Forall).
  const std::string& name() const { return node_->name; }
  Concept child() const { return Concept(node_->a); }  // Not/Exists/Forall
  Concept left() const { return Concept(node_->a); }   // And/Or
  Concept right() const { return Concept(node_->b); }  // And/Or

  bool is(ConceptKind k) const { return node_->kind == k; }

private:
  struct Node {
    ConceptKind kind;
    std::string name;
    std::shared_ptr<const Node> a;
    std::shared_ptr<const Node> b;
  };

  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Total structural order: <0, 0, >0 in the manner of strcmp.
int compare(const Concept& lhs, const Concept& rhs);

inline bool operator==(const Concept& lhs, const Concept& rhs) {
  return compare(lhs, rhs) == 0;
}
inline bool operator!=(const Concept& lhs, const Concept& rhs) {
  return compare(lhs, rhs) != 0;
}

struct ConceptLess {
  bool operator()(const Concept& lhs, const Concept& rhs) const {
    return compare(lhs, rhs) < 0;
  }
};

using ConceptSet = std::set<Concept, ConceptLess>;

/// Negation normal form: negation only above atoms, no double negation,
/// Top/Bot never under negation.
Concept nnf(const Concept& c);

/// Canonical form: NNF with And/Or chains flattened, operands sorted by the
/// structural order, duplicates removed, and the chain refolded. Two concepts
/// are considered structurally equal when their canonical forms coincide.
Concept canonical(const Concept& c);

/// Structural equality after NNF canonicalization.
bool same_concept(const Concept& lhs, const Concept& rhs);

/// Surface-syntax rendering (parseable by the concept grammar).
std::string to_string(const Concept& c);

/// Distinct atom names, sorted.
std::vector<std::string> atom_names(const Concept& c);

bool role_free(const Concept& c);

}  // namespace dalc
