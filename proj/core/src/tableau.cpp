#include "dalc/tableau.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>
#include <vector>

namespace dalc {

namespace {

struct Budget {
  std::size_t remaining;
  std::size_t total;
  void tick() {
    if (remaining == 0) throw ResourceLimitError(total);
    --remaining;
  }
};

using Label = ConceptSet;

bool clashes(const Label& label, const Concept& c) {
  if (c.is(ConceptKind::Bot)) return true;
  if (c.is(ConceptKind::Atom))
    return label.count(Concept::negation(c)) > 0;
  if (c.is(ConceptKind::Not))  // NNF: child is an atom
    return label.count(c.child()) > 0;
  return false;
}

std::vector<Concept> tbox_closure(std::span<const StrictInclusion> strict) {
  std::vector<Concept> out;
  out.reserve(strict.size());
  for (const auto& inc : strict)
    out.push_back(canonical(
        Concept::disj(Concept::negation(inc.lhs), inc.rhs)));
  std::sort(out.begin(), out.end(), ConceptLess{});
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Saturate one node, branching on disjunctions (left disjunct first), then
// check blocking and expand role successors. `todo` is processed LIFO.
bool expand(Label label, std::vector<Concept> todo,
            const std::vector<Label>& ancestors,
            const std::vector<Concept>& tbox, Budget& budget) {
  while (!todo.empty()) {
    budget.tick();
    Concept c = todo.back();
    todo.pop_back();
    if (c.is(ConceptKind::Top)) continue;
    if (label.count(c)) continue;
    switch (c.kind()) {
      case ConceptKind::Bot:
        return false;
      case ConceptKind::Atom:
      case ConceptKind::Not:
        if (clashes(label, c)) return false;
        label.insert(c);
        break;
      case ConceptKind::And:
        label.insert(c);
        todo.push_back(c.right());
        todo.push_back(c.left());
        break;
      case ConceptKind::Or: {
        if (label.count(c.left()) || label.count(c.right())) break;
        Label l2 = label;
        l2.insert(c);
        std::vector<Concept> t2 = todo;
        t2.push_back(c.left());
        if (expand(std::move(l2), std::move(t2), ancestors, tbox, budget))
          return true;
        label.insert(c);
        todo.push_back(c.right());
        break;
      }
      case ConceptKind::Exists:
      case ConceptKind::Forall:
        label.insert(c);
        break;
      case ConceptKind::Top:
        break;
    }
  }

  // Subset blocking: a node whose label is contained in an ancestor's label
  // reuses that ancestor as a witness.
  for (const auto& anc : ancestors) {
    if (std::includes(anc.begin(), anc.end(), label.begin(), label.end(),
                      ConceptLess{}))
      return true;
  }

  std::vector<Label> next_ancestors = ancestors;
  next_ancestors.push_back(label);
  for (const auto& c : label) {
    if (!c.is(ConceptKind::Exists)) continue;
    budget.tick();
    std::vector<Concept> succ_todo = tbox;
    succ_todo.push_back(c.child());
    for (const auto& d : label)
      if (d.is(ConceptKind::Forall) && d.name() == c.name())
        succ_todo.push_back(d.child());
    if (!expand(Label{}, std::move(succ_todo), next_ancestors, tbox, budget))
      return false;
  }
  return true;
}

// Combined expansion over the named individuals of an ABox. Role edges are
// static (role assertions only); universal restrictions propagate along them.
struct AboxState {
  std::vector<Label> labels;
  std::vector<std::vector<Concept>> todos;
};

bool abox_expand(AboxState st,
                 const std::vector<std::array<std::size_t, 2>>& edge_nodes,
                 const std::vector<std::string>& edge_roles,
                 const std::vector<Concept>& tbox, Budget& budget) {
  for (;;) {
    std::size_t node = st.labels.size();
    for (std::size_t i = 0; i < st.todos.size(); ++i)
      if (!st.todos[i].empty()) { node = i; break; }
    if (node == st.labels.size()) break;

    budget.tick();
    Label& label = st.labels[node];
    std::vector<Concept>& todo = st.todos[node];
    Concept c = todo.back();
    todo.pop_back();
    if (c.is(ConceptKind::Top) || label.count(c)) continue;
    switch (c.kind()) {
      case ConceptKind::Bot:
        return false;
      case ConceptKind::Atom:
      case ConceptKind::Not:
        if (clashes(label, c)) return false;
        label.insert(c);
        break;
      case ConceptKind::And:
        label.insert(c);
        todo.push_back(c.right());
        todo.push_back(c.left());
        break;
      case ConceptKind::Or: {
        if (label.count(c.left()) || label.count(c.right())) break;
        AboxState branch = st;
        branch.labels[node].insert(c);
        branch.todos[node].push_back(c.left());
        if (abox_expand(std::move(branch), edge_nodes, edge_roles, tbox,
                        budget))
          return true;
        label.insert(c);
        todo.push_back(c.right());
        break;
      }
      case ConceptKind::Forall:
        label.insert(c);
        for (std::size_t e = 0; e < edge_nodes.size(); ++e)
          if (edge_nodes[e][0] == node && edge_roles[e] == c.name() &&
              !st.labels[edge_nodes[e][1]].count(c.child()))
            st.todos[edge_nodes[e][1]].push_back(c.child());
        break;
      case ConceptKind::Exists:
        label.insert(c);
        break;
      case ConceptKind::Top:
        break;
    }
  }

  // All named nodes saturated; expand tree successors for each ∃.
  for (std::size_t i = 0; i < st.labels.size(); ++i) {
    for (const auto& c : st.labels[i]) {
      if (!c.is(ConceptKind::Exists)) continue;
      bool witnessed = false;
      for (std::size_t e = 0; e < edge_nodes.size() && !witnessed; ++e)
        if (edge_nodes[e][0] == i && edge_roles[e] == c.name() &&
            st.labels[edge_nodes[e][1]].count(c.child()))
          witnessed = true;
      if (witnessed) continue;
      budget.tick();
      std::vector<Concept> succ_todo = tbox;
      succ_todo.push_back(c.child());
      for (const auto& d : st.labels[i])
        if (d.is(ConceptKind::Forall) && d.name() == c.name())
          succ_todo.push_back(d.child());
      if (!expand(Label{}, std::move(succ_todo), {st.labels[i]}, tbox, budget))
        return false;
    }
  }
  return true;
}

}  // namespace

bool is_satisfiable(const Concept& c, std::span<const StrictInclusion> strict,
                    const Limits& limits) {
  Budget budget{limits.max_nodes, limits.max_nodes};
  std::vector<Concept> tbox = tbox_closure(strict);
  std::vector<Concept> todo = tbox;
  todo.push_back(canonical(c));
  return expand(Label{}, std::move(todo), {}, tbox, budget);
}

bool entails(std::span<const StrictInclusion> strict, const Query& q,
             const Limits& limits) {
  if (q.lhs.typical)
    throw std::invalid_argument("classical entailment takes a plain query");
  return !is_satisfiable(Concept::conj(q.lhs.subject, Concept::negation(q.rhs)),
                         strict, limits);
}

bool abox_consistent(const KnowledgeBase& kb, const Limits& limits) {
  Budget budget{limits.max_nodes, limits.max_nodes};
  std::vector<Concept> tbox = tbox_closure(kb.strict);

  std::vector<std::string> individuals;
  auto node_of = [&individuals](const std::string& name) {
    for (std::size_t i = 0; i < individuals.size(); ++i)
      if (individuals[i] == name) return i;
    individuals.push_back(name);
    return individuals.size() - 1;
  };
  for (const auto& a : kb.concept_assertions) node_of(a.individual);
  for (const auto& r : kb.role_assertions) {
    node_of(r.from);
    node_of(r.to);
  }
  if (individuals.empty()) {
    // Empty ABox: consistent iff the strict TBox has a model at all.
    return is_satisfiable(Concept::top(), kb.strict, limits);
  }

  AboxState st;
  st.labels.resize(individuals.size());
  st.todos.resize(individuals.size());
  for (std::size_t i = 0; i < individuals.size(); ++i)
    st.todos[i] = tbox;
  for (const auto& a : kb.concept_assertions)
    st.todos[node_of(a.individual)].push_back(canonical(a.concept_expr));

  std::vector<std::array<std::size_t, 2>> edge_nodes;
  std::vector<std::string> edge_roles;
  for (const auto& r : kb.role_assertions) {
    edge_nodes.push_back({node_of(r.from), node_of(r.to)});
    edge_roles.push_back(r.role);
  }
  return abox_expand(std::move(st), edge_nodes, edge_roles, tbox, budget);
}

}  // namespace dalc
