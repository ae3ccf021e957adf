#include "dalc/concepts.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace dalc {

Concept Concept::top() {
  static Concept c{std::make_shared<const Node>(Node{ConceptKind::Top, "", nullptr, nullptr})};
  return c;
}

Concept Concept::bot() {
  static Concept c{std::make_shared<const Node>(Node{ConceptKind::Bot, "", nullptr, nullptr})};
  return c;
}

Concept Concept::atom(std::string name) {
  return Concept{std::make_shared<const Node>(
      Node{ConceptKind::Atom, std::move(name), nullptr, nullptr})};
}

Concept Concept::negation(Concept c) {
  return Concept{std::make_shared<const Node>(
      Node{ConceptKind::Not, "", std::move(c.node_), nullptr})};
}

Concept Concept::conj(Concept lhs, Concept rhs) {
  return Concept{std::make_shared<const Node>(
      Node{ConceptKind::And, "", std::move(lhs.node_), std::move(rhs.node_)})};
}

Concept Concept::disj(Concept lhs, Concept rhs) {
  return Concept{std::make_shared<const Node>(
      Node{ConceptKind::Or, "", std::move(lhs.node_), std::move(rhs.node_)})};
}

Concept Concept::exists(std::string role, Concept c) {
  return Concept{std::make_shared<const Node>(
      Node{ConceptKind::Exists, std::move(role), std::move(c.node_), nullptr})};
}

Concept Concept::forall(std::string role, Concept c) {
  return Concept{std::make_shared<const Node>(
      Node{ConceptKind::Forall, std::move(role), std::move(c.node_), nullptr})};
}

int compare(const Concept& lhs, const Concept& rhs) {
  if (lhs.kind() != rhs.kind())
    return static_cast<int>(lhs.kind()) < static_cast<int>(rhs.kind()) ? -1 : 1;
  switch (lhs.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bot:
      return 0;
    case ConceptKind::Atom:
      return lhs.name().compare(rhs.name());
    case ConceptKind::Not:
      return compare(lhs.child(), rhs.child());
    case ConceptKind::And:
    case ConceptKind::Or: {
      int c = compare(lhs.left(), rhs.left());
      if (c != 0) return c;
      return compare(lhs.right(), rhs.right());
    }
    case ConceptKind::Exists:
    case ConceptKind::Forall: {
      int c = lhs.name().compare(rhs.name());
      if (c != 0) return c;
      return compare(lhs.child(), rhs.child());
    }
  }
  return 0;
}

Concept nnf(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bot:
    case ConceptKind::Atom:
      return c;
    case ConceptKind::And:
      return Concept::conj(nnf(c.left()), nnf(c.right()));
    case ConceptKind::Or:
      return Concept::disj(nnf(c.left()), nnf(c.right()));
    case ConceptKind::Exists:
      return Concept::exists(c.name(), nnf(c.child()));
    case ConceptKind::Forall:
      return Concept::forall(c.name(), nnf(c.child()));
    case ConceptKind::Not: {
      Concept inner = c.child();
      switch (inner.kind()) {
        case ConceptKind::Top:
          return Concept::bot();
        case ConceptKind::Bot:
          return Concept::top();
        case ConceptKind::Atom:
          return Concept::negation(inner);
        case ConceptKind::Not:
          return nnf(inner.child());
        case ConceptKind::And:
          return Concept::disj(nnf(Concept::negation(inner.left())),
                               nnf(Concept::negation(inner.right())));
        case ConceptKind::Or:
          return Concept::conj(nnf(Concept::negation(inner.left())),
                               nnf(Concept::negation(inner.right())));
        case ConceptKind::Exists:
          return Concept::forall(inner.name(),
                                 nnf(Concept::negation(inner.child())));
        case ConceptKind::Forall:
          return Concept::exists(inner.name(),
                                 nnf(Concept::negation(inner.child())));
      }
    }
  }
  return c;
}

namespace {

void flatten(const Concept& c, ConceptKind kind, std::vector<Concept>& out) {
  if (c.kind() == kind) {
    flatten(c.left(), kind, out);
    flatten(c.right(), kind, out);
  } else {
    out.push_back(c);
  }
}

Concept canonical_nnf(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Top:
    case ConceptKind::Bot:
    case ConceptKind::Atom:
    case ConceptKind::Not:  // in NNF the child is an atom
      return c;
    case ConceptKind::Exists:
      return Concept::exists(c.name(), canonical_nnf(c.child()));
    case ConceptKind::Forall:
      return Concept::forall(c.name(), canonical_nnf(c.child()));
    case ConceptKind::And:
    case ConceptKind::Or: {
      std::vector<Concept> parts;
      flatten(c, c.kind(), parts);
      for (auto& p : parts) p = canonical_nnf(p);
      std::sort(parts.begin(), parts.end(), ConceptLess{});
      parts.erase(std::unique(parts.begin(), parts.end(),
                              [](const Concept& a, const Concept& b) {
                                return compare(a, b) == 0;
                              }),
                  parts.end());
      Concept result = parts.back();
      for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it) {
        result = c.kind() == ConceptKind::And ? Concept::conj(*it, result)
                                              : Concept::disj(*it, result);
      }
      return result;
    }
  }
  return c;
}

}  // namespace

Concept canonical(const Concept& c) { return canonical_nnf(nnf(c)); }

bool same_concept(const Concept& lhs, const Concept& rhs) {
  return compare(canonical(lhs), canonical(rhs)) == 0;
}

namespace {

// Precedence levels for printing: or < and < unary/primary.
enum { PrecOr = 0, PrecAnd = 1, PrecUnary = 2 };

void print(const Concept& c, int parent_prec, std::ostream& os) {
  switch (c.kind()) {
    case ConceptKind::Top:
      os << "Top";
      break;
    case ConceptKind::Bot:
      os << "Bot";
      break;
    case ConceptKind::Atom:
      os << c.name();
      break;
    case ConceptKind::Not:
      os << "not ";
      print(c.child(), PrecUnary, os);
      break;
    case ConceptKind::And: {
      bool paren = parent_prec > PrecAnd;
      if (paren) os << "(";
      print(c.left(), PrecAnd, os);
      os << " and ";
      print(c.right(), PrecAnd, os);
      if (paren) os << ")";
      break;
    }
    case ConceptKind::Or: {
      bool paren = parent_prec > PrecOr;
      if (paren) os << "(";
      print(c.left(), PrecOr, os);
      os << " or ";
      print(c.right(), PrecOr, os);
      if (paren) os << ")";
      break;
    }
    case ConceptKind::Exists:
    case ConceptKind::Forall: {
      os << (c.kind() == ConceptKind::Exists ? "exists " : "forall ");
      os << c.name() << ".";
      // The quantifier body is a primary; parenthesize anything larger.
      const Concept body = c.child();
      bool paren = body.is(ConceptKind::And) || body.is(ConceptKind::Or) ||
                   body.is(ConceptKind::Exists) || body.is(ConceptKind::Forall);
      if (paren) os << "(";
      print(body, paren ? PrecOr : PrecUnary, os);
      if (paren) os << ")";
      break;
    }
  }
}

void collect_atoms(const Concept& c, std::vector<std::string>& out) {
  switch (c.kind()) {
    case ConceptKind::Atom:
      out.push_back(c.name());
      break;
    case ConceptKind::Not:
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      collect_atoms(c.child(), out);
      break;
    case ConceptKind::And:
    case ConceptKind::Or:
      collect_atoms(c.left(), out);
      collect_atoms(c.right(), out);
      break;
    default:
      break;
  }
}

}  // namespace

std::string to_string(const Concept& c) {
  std::ostringstream os;
  print(c, PrecOr, os);
  return os.str();
}

std::vector<std::string> atom_names(const Concept& c) {
  std::vector<std::string> out;
  collect_atoms(c, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool role_free(const Concept& c) {
  switch (c.kind()) {
    case ConceptKind::Exists:
    case ConceptKind::Forall:
      return false;
    case ConceptKind::Not:
      return role_free(c.child());
    case ConceptKind::And:
    case ConceptKind::Or:
      return role_free(c.left()) && role_free(c.right());
    default:
      return true;
  }
}

}  // namespace dalc
