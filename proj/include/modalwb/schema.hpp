#pragma once

#include <cstddef>
#include <vector>

#include "modalwb/formula.hpp"

namespace modalwb {

/// Disjunction of the diamonds in `subset`; false when `subset` is empty.
Formula diamond_union(const ModalitySet& subset, const Formula& f);
/// The union diamond iterated `times` times (zero times gives `f`).
Formula diamond_power(std::size_t times, const ModalitySet& subset, const Formula& f);
/// Disjunction of the union diamond iterated 0..m times.
Formula diamond_upto(std::size_t m, const ModalitySet& subset, const Formula& f);
/// Dual of `diamond_upto`.
Formula box_upto(std::size_t m, const ModalitySet& subset, const Formula& f);

/// m-transitivity: <B>^{m+1} p0 -> <B>^{<=m} p0.
Formula pretransitivity_formula(const ModalitySet& subset, std::size_t m);

/// Height bound for transitive frames over modality 0, on variables p1..ph:
/// B_0 = false, B_h = p_h -> [](<>p_h | B_{h-1}).
Formula height_formula(std::size_t h);
/// `height_formula(h)` with each diamond replaced by the reflexive union diamond up to m.
Formula height_formula_star(std::size_t h, std::size_t m, const ModalitySet& subset);

/// Reducible path formula on p0..p_{m+1} for the union diamond over `subset`.
Formula path_reducibility_formula(std::size_t m, const ModalitySet& subset);

/// The three interaction axioms for every vertical v and horizontal h:
///   <h><v>p -> <v>p,  <v><h>p -> <v>p,  <v>p -> [h]<v>p.
/// Throws InvalidInput if the subsets overlap.
std::vector<Formula> lex_axioms(const ModalitySet& vertical, const ModalitySet& horizontal);

/// Axioms of the difference modality `difference` over the modalities in `base`:
///   p -> [!=]<!=>p,  <!=><!=>p -> <!=>p | p,  <d>p -> <!=>p | p for each d in base.
std::vector<Formula> difference_axioms(const ModalitySet& base, ModalityId difference);

enum class SchemaKind {
  diamond_union,
  diamond_upto,
  pretransitivity,
  height,
  height_star,
  path_reducibility,
  lex,
  difference,
};

struct SchemaParams {
  ModalitySet subset;           // diamond_union, diamond_upto, pretransitivity, height_star, path_reducibility;
                                // vertical modalities for lex; base modalities for difference
  ModalitySet horizontal;       // lex only
  ModalityId designated = 0;    // difference only
  std::size_t h = 0;            // height, height_star
  std::size_t m = 0;            // diamond_upto, pretransitivity, height_star, path_reducibility
  Formula operand = Formula::var(0);  // diamond_union, diamond_upto
};

/// Uniform entry point over every schema. Single formulas come back as a one-element vector.
std::vector<Formula> build_schema(SchemaKind kind, const SchemaParams& params);

}  // namespace modalwb
