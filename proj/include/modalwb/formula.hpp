#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modalwb/alphabet.hpp"

namespace modalwb {

/// An immutable polymodal formula. Subtrees are shared, so copies are cheap and
/// large schema instances stay compact (they form a DAG in memory).
///
/// Box is kept as a flag on modal nodes; its meaning is not-diamond-not.
/// `true` is kept as its own constant so that printed formulas stay readable.
class Formula {
 public:
  enum class Kind { variable, falsum, verum, negation, conjunction, disjunction, implication, modal };

  /// Defaults to falsum.
  Formula();

  static Formula var(std::size_t index);
  static Formula falsum();
  static Formula verum();
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula diamond(ModalityId modality, Formula operand);
  static Formula box(ModalityId modality, Formula operand);

  /// Left-nested conjunction; empty input gives `true`.
  static Formula conjunction_of(std::span<const Formula> parts);
  /// Left-nested disjunction; empty input gives `false`.
  static Formula disjunction_of(std::span<const Formula> parts);

  Kind kind() const noexcept;
  std::size_t variable() const;
  ModalityId modality() const;
  bool is_box() const;
  /// Operand of a negation or modal node; left operand of a binary node.
  const Formula& lhs() const;
  const Formula& rhs() const;

  /// Identity of the shared node (for memoization over the DAG).
  const void* id() const noexcept { return node_.get(); }

  /// Structural equality (box and diamond nodes differ, as do `true` and `~false`).
  bool operator==(const Formula& other) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Formula operator!(const Formula& f);
Formula operator&&(const Formula& lhs, const Formula& rhs);
Formula operator||(const Formula& lhs, const Formula& rhs);

/// Maximal nesting of modal operators.
std::size_t depth(const Formula& f);
/// One past the largest variable index (0 for variable-free formulas).
std::size_t variable_bound(const Formula& f);
/// Sorted distinct variable indices.
std::vector<std::size_t> variables(const Formula& f);
/// Sorted distinct modality ids.
ModalitySet modalities(const Formula& f);
/// Calls `fn` once per distinct subformula node, operands before the nodes using them.
void visit_postorder(const Formula& f, const std::function<void(const Formula&)>& fn);

/// Number of distinct subformula nodes.
std::size_t dag_size(const Formula& f);

/// Parses the ASCII grammar: atoms p<digits>, true, false; prefix ~, <name>, [name];
/// infix & over | over ->, with & and | left-associative and -> right-associative.
Formula parse(std::string_view text, const Alphabet& alphabet);
/// Prints with the minimal parentheses that make `parse` return an equal tree.
std::string print_formula(const Formula& f, const Alphabet& alphabet);

/// Replaces each diamond of modality `designated` by the union diamond over `subset`,
/// iterated up to m times (including the formula itself); boxes by the dual.
/// Throws InvalidInput if any other modality occurs.
Formula star_translate(const Formula& f, std::size_t m, const ModalitySet& subset, ModalityId designated = 0);

}  // namespace modalwb
