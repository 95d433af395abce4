#include "modalwb/formula.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "modalwb/error.hpp"

namespace modalwb {

struct Formula::Node {
  Kind kind;
  std::size_t index = 0;  // variable index or modality id
  bool box = false;
  Formula lhs;
  Formula rhs;
};

Formula::Formula() : Formula(falsum()) {}

Formula Formula::var(std::size_t index) {
  return Formula(std::make_shared<const Node>(Node{Kind::variable, index, false, {}, {}}));
}

Formula Formula::falsum() {
  // Leaves carry null children; the accessors refuse to hand them out.
  static const Formula node(std::make_shared<const Node>(
      Node{Kind::falsum, 0, false, Formula(std::shared_ptr<const Node>()), Formula(std::shared_ptr<const Node>())}));
  return node;
}

Formula Formula::verum() {
  static const Formula node(std::make_shared<const Node>(
      Node{Kind::verum, 0, false, Formula(std::shared_ptr<const Node>()), Formula(std::shared_ptr<const Node>())}));
  return node;
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::negation, 0, false, std::move(operand), Formula(std::shared_ptr<const Node>())}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::conjunction, 0, false, std::move(lhs), std::move(rhs)}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::disjunction, 0, false, std::move(lhs), std::move(rhs)}));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(Node{Kind::implication, 0, false, std::move(lhs), std::move(rhs)}));
}

Formula Formula::diamond(ModalityId modality, Formula operand) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::modal, modality, false, std::move(operand), Formula(std::shared_ptr<const Node>())}));
}

Formula Formula::box(ModalityId modality, Formula operand) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::modal, modality, true, std::move(operand), Formula(std::shared_ptr<const Node>())}));
}

Formula Formula::conjunction_of(std::span<const Formula> parts) {
  if (parts.empty()) return verum();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conjunction(acc, parts[i]);
  return acc;
}

Formula Formula::disjunction_of(std::span<const Formula> parts) {
  if (parts.empty()) return falsum();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disjunction(acc, parts[i]);
  return acc;
}

Formula::Kind Formula::kind() const noexcept { return node_->kind; }

std::size_t Formula::variable() const {
  if (node_->kind != Kind::variable) throw InvalidInput("not a variable");
  return node_->index;
}

ModalityId Formula::modality() const {
  if (node_->kind != Kind::modal) throw InvalidInput("not a modal formula");
  return node_->index;
}

bool Formula::is_box() const { return node_->kind == Kind::modal && node_->box; }

const Formula& Formula::lhs() const {
  if (!node_->lhs.node_) throw InvalidInput("formula has no operand");
  return node_->lhs;
}

const Formula& Formula::rhs() const {
  if (!node_->rhs.node_) throw InvalidInput("formula has no second operand");
  return node_->rhs;
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  const Node& a = *node_;
  const Node& b = *other.node_;
  if (a.kind != b.kind || a.index != b.index || a.box != b.box) return false;
  switch (a.kind) {
    case Kind::variable:
    case Kind::falsum:
    case Kind::verum:
      return true;
    case Kind::negation:
    case Kind::modal:
      return a.lhs == b.lhs;
    default:
      return a.lhs == b.lhs && a.rhs == b.rhs;
  }
}

Formula operator!(const Formula& f) { return Formula::negation(f); }
Formula operator&&(const Formula& lhs, const Formula& rhs) { return Formula::conjunction(lhs, rhs); }
Formula operator||(const Formula& lhs, const Formula& rhs) { return Formula::disjunction(lhs, rhs); }

namespace {

bool is_binary(Formula::Kind k) {
  return k == Formula::Kind::conjunction || k == Formula::Kind::disjunction || k == Formula::Kind::implication;
}
bool is_unary(Formula::Kind k) { return k == Formula::Kind::negation || k == Formula::Kind::modal; }

/// Visits each distinct node once, children before parents.
template <class Fn>
void visit_dag(const Formula& root, Fn&& fn) {
  std::unordered_set<const void*> done;
  std::vector<std::pair<Formula, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [f, expanded] = stack.back();
    stack.pop_back();
    if (done.contains(f.id())) continue;
    if (expanded) {
      done.insert(f.id());
      fn(f);
      continue;
    }
    stack.emplace_back(f, true);
    if (is_binary(f.kind())) stack.emplace_back(f.rhs(), false);
    if (is_binary(f.kind()) || is_unary(f.kind())) stack.emplace_back(f.lhs(), false);
  }
}

}  // namespace

void visit_postorder(const Formula& f, const std::function<void(const Formula&)>& fn) { visit_dag(f, fn); }

std::size_t depth(const Formula& f) {
  std::unordered_map<const void*, std::size_t> memo;
  visit_dag(f, [&](const Formula& g) {
    std::size_t d = 0;
    if (g.kind() == Formula::Kind::modal) {
      d = memo.at(g.lhs().id()) + 1;
    } else if (g.kind() == Formula::Kind::negation) {
      d = memo.at(g.lhs().id());
    } else if (is_binary(g.kind())) {
      d = std::max(memo.at(g.lhs().id()), memo.at(g.rhs().id()));
    }
    memo[g.id()] = d;
  });
  return memo.at(f.id());
}

std::vector<std::size_t> variables(const Formula& f) {
  std::set<std::size_t> seen;
  visit_dag(f, [&](const Formula& g) {
    if (g.kind() == Formula::Kind::variable) seen.insert(g.variable());
  });
  return {seen.begin(), seen.end()};
}

std::size_t variable_bound(const Formula& f) {
  const auto vars = variables(f);
  return vars.empty() ? 0 : vars.back() + 1;
}

ModalitySet modalities(const Formula& f) {
  std::set<ModalityId> seen;
  visit_dag(f, [&](const Formula& g) {
    if (g.kind() == Formula::Kind::modal) seen.insert(g.modality());
  });
  return {seen.begin(), seen.end()};
}

std::size_t dag_size(const Formula& f) {
  std::size_t count = 0;
  visit_dag(f, [&](const Formula&) { ++count; });
  return count;
}

Formula star_translate(const Formula& f, std::size_t m, const ModalitySet& subset, ModalityId designated) {
  for (ModalityId id : modalities(f)) {
    if (id != designated) {
      throw InvalidInput("star translation expects a unimodal formula over modality " + std::to_string(designated) +
                         ", found modality " + std::to_string(id));
    }
  }
  ModalitySet mods = subset;
  std::sort(mods.begin(), mods.end());
  mods.erase(std::unique(mods.begin(), mods.end()), mods.end());

  auto union_diamond = [&](const Formula& g) {
    std::vector<Formula> parts;
    for (ModalityId id : mods) parts.push_back(Formula::diamond(id, g));
    return Formula::disjunction_of(parts);
  };
  auto upto = [&](const Formula& g) {
    std::vector<Formula> parts{g};
    Formula step = g;
    for (std::size_t i = 0; i < m; ++i) {
      step = union_diamond(step);
      parts.push_back(step);
    }
    return Formula::disjunction_of(parts);
  };

  std::unordered_map<const void*, Formula> memo;
  visit_dag(f, [&](const Formula& g) {
    Formula out;
    switch (g.kind()) {
      case Formula::Kind::variable:
      case Formula::Kind::falsum:
      case Formula::Kind::verum:
        out = g;
        break;
      case Formula::Kind::negation:
        out = Formula::negation(memo.at(g.lhs().id()));
        break;
      case Formula::Kind::conjunction:
        out = Formula::conjunction(memo.at(g.lhs().id()), memo.at(g.rhs().id()));
        break;
      case Formula::Kind::disjunction:
        out = Formula::disjunction(memo.at(g.lhs().id()), memo.at(g.rhs().id()));
        break;
      case Formula::Kind::implication:
        out = Formula::implication(memo.at(g.lhs().id()), memo.at(g.rhs().id()));
        break;
      case Formula::Kind::modal: {
        const Formula& inner = memo.at(g.lhs().id());
        out = g.is_box() ? Formula::negation(upto(Formula::negation(inner))) : upto(inner);
        break;
      }
    }
    memo.emplace(g.id(), std::move(out));
  });
  return memo.at(f.id());
}

}  // namespace modalwb
