#include "dalc/kb.hpp"

#include <algorithm>
#include <sstream>

namespace dalc {

bool same_inclusion(const DefeasibleInclusion& a, const DefeasibleInclusion& b) {
  return same_concept(a.subject, b.subject) && same_concept(a.aspect, b.aspect);
}

bool same_inclusion(const StrictInclusion& a, const StrictInclusion& b) {
  return same_concept(a.lhs, b.lhs) && same_concept(a.rhs, b.rhs);
}

Concept materialize(std::span<const DefeasibleInclusion> defaults) {
  if (defaults.empty()) return Concept::top();
  std::vector<std::pair<std::string, Concept>> conjuncts;
  conjuncts.reserve(defaults.size());
  for (const auto& d : defaults) {
    Concept c = canonical(Concept::disj(Concept::negation(d.subject), d.aspect));
    conjuncts.emplace_back(to_string(c), c);
  }
  std::sort(conjuncts.begin(), conjuncts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  conjuncts.erase(std::unique(conjuncts.begin(), conjuncts.end(),
                              [](const auto& a, const auto& b) {
                                return a.first == b.first;
                              }),
                  conjuncts.end());
  Concept result = conjuncts.back().second;
  for (auto it = conjuncts.rbegin() + 1; it != conjuncts.rend(); ++it)
    result = Concept::conj(it->second, result);
  return result;
}

std::vector<Concept> aspects(const KnowledgeBase& kb) {
  std::vector<Concept> out;
  for (const auto& d : kb.defeasible) {
    Concept a = canonical(d.aspect);
    bool seen = false;
    for (const auto& existing : out)
      if (existing == a) { seen = true; break; }
    if (!seen) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), ConceptLess{});
  return out;
}

std::string to_string(const StrictInclusion& inc) {
  return to_string(inc.lhs) + " <= " + to_string(inc.rhs);
}

std::string to_string(const DefeasibleInclusion& inc) {
  return "T(" + to_string(inc.subject) + ") <= " + to_string(inc.aspect);
}

std::string to_string(const Query& q) {
  if (q.lhs.typical)
    return "T(" + to_string(q.lhs.subject) + ") <= " + to_string(q.rhs);
  return to_string(q.lhs.subject) + " <= " + to_string(q.rhs);
}

std::string to_string(const KnowledgeBase& kb) {
  std::ostringstream os;
  for (const auto& s : kb.strict) os << to_string(s) << ".\n";
  for (const auto& d : kb.defeasible) os << to_string(d) << ".\n";
  for (const auto& a : kb.concept_assertions) {
    const Concept& c = a.concept_expr;
    bool paren = !(c.is(ConceptKind::Atom) || c.is(ConceptKind::Top) ||
                   c.is(ConceptKind::Bot));
    if (paren)
      os << "(" << to_string(c) << ")";
    else
      os << to_string(c);
    os << "(" << a.individual << ").\n";
  }
  for (const auto& r : kb.role_assertions)
    os << r.role << "(" << r.from << ", " << r.to << ").\n";
  return os.str();
}

bool role_free(const KnowledgeBase& kb) {
  if (!kb.role_assertions.empty()) return false;
  for (const auto& s : kb.strict)
    if (!role_free(s.lhs) || !role_free(s.rhs)) return false;
  for (const auto& d : kb.defeasible)
    if (!role_free(d.subject) || !role_free(d.aspect)) return false;
  for (const auto& a : kb.concept_assertions)
    if (!role_free(a.concept_expr)) return false;
  return true;
}

std::vector<std::string> atom_names(const KnowledgeBase& kb) {
  std::vector<std::string> out;
  auto add = [&out](const Concept& c) {
    auto names = atom_names(c);
    out.insert(out.end(), names.begin(), names.end());
  };
  for (const auto& s : kb.strict) { add(s.lhs); add(s.rhs); }
  for (const auto& d : kb.defeasible) { add(d.subject); add(d.aspect); }
  for (const auto& a : kb.concept_assertions) add(a.concept_expr);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dalc
