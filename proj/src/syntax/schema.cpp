#include "modalwb/schema.hpp"

#include <algorithm>

#include "modalwb/error.hpp"

namespace modalwb {

namespace {

ModalitySet sorted_unique(ModalitySet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

Formula diamond_union(const ModalitySet& subset, const Formula& f) {
  std::vector<Formula> parts;
  for (ModalityId id : sorted_unique(subset)) parts.push_back(Formula::diamond(id, f));
  return Formula::disjunction_of(parts);
}

Formula diamond_power(std::size_t times, const ModalitySet& subset, const Formula& f) {
  Formula out = f;
  for (std::size_t i = 0; i < times; ++i) out = diamond_union(subset, out);
  return out;
}

Formula diamond_upto(std::size_t m, const ModalitySet& subset, const Formula& f) {
  std::vector<Formula> parts{f};
  Formula step = f;
  for (std::size_t i = 0; i < m; ++i) {
    step = diamond_union(subset, step);
    parts.push_back(step);
  }
  return Formula::disjunction_of(parts);
}

Formula box_upto(std::size_t m, const ModalitySet& subset, const Formula& f) {
  return !diamond_upto(m, subset, !f);
}

Formula pretransitivity_formula(const ModalitySet& subset, std::size_t m) {
  const Formula p = Formula::var(0);
  return Formula::implication(diamond_power(m + 1, subset, p), diamond_upto(m, subset, p));
}

Formula height_formula(std::size_t h) {
  Formula b = Formula::falsum();
  for (std::size_t i = 1; i <= h; ++i) {
    const Formula p = Formula::var(i);
    b = Formula::implication(p, Formula::box(0, Formula::diamond(0, p) || b));
  }
  return b;
}

Formula height_formula_star(std::size_t h, std::size_t m, const ModalitySet& subset) {
  return star_translate(height_formula(h), m, subset, 0);
}

Formula path_reducibility_formula(std::size_t m, const ModalitySet& subset) {
  auto p = [](std::size_t i) { return Formula::var(i); };
  auto dia = [&](const Formula& f) { return diamond_union(subset, f); };

  Formula antecedent = p(m + 1);
  for (std::size_t i = m + 1; i-- > 0;) antecedent = p(i) && dia(antecedent);

  std::vector<Formula> disjuncts;
  for (std::size_t i = 0; i <= m + 1; ++i) {
    for (std::size_t j = i + 1; j <= m + 1; ++j) disjuncts.push_back(diamond_power(i, subset, p(i) && p(j)));
  }
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = i + 1; j <= m; ++j) disjuncts.push_back(diamond_power(i, subset, p(i) && dia(p(j + 1))));
  }
  return Formula::implication(antecedent, Formula::disjunction_of(disjuncts));
}

std::vector<Formula> lex_axioms(const ModalitySet& vertical, const ModalitySet& horizontal) {
  const ModalitySet v = sorted_unique(vertical);
  const ModalitySet h = sorted_unique(horizontal);
  for (ModalityId id : v) {
    if (std::binary_search(h.begin(), h.end(), id)) {
      throw InvalidInput("vertical and horizontal modalities overlap at id " + std::to_string(id));
    }
  }
  const Formula p = Formula::var(0);
  std::vector<Formula> out;
  for (ModalityId vi : v) {
    const Formula vp = Formula::diamond(vi, p);
    for (ModalityId hi : h) {
      out.push_back(Formula::implication(Formula::diamond(hi, vp), vp));
      out.push_back(Formula::implication(Formula::diamond(vi, Formula::diamond(hi, p)), vp));
      out.push_back(Formula::implication(vp, Formula::box(hi, vp)));
    }
  }
  return out;
}

std::vector<Formula> difference_axioms(const ModalitySet& base, ModalityId difference) {
  const ModalitySet b = sorted_unique(base);
  if (std::binary_search(b.begin(), b.end(), difference)) {
    throw InvalidInput("difference modality must not be one of the base modalities");
  }
  const Formula p = Formula::var(0);
  const Formula dp = Formula::diamond(difference, p);
  std::vector<Formula> out;
  out.push_back(Formula::implication(p, Formula::box(difference, dp)));
  out.push_back(Formula::implication(Formula::diamond(difference, dp), dp || p));
  for (ModalityId id : b) out.push_back(Formula::implication(Formula::diamond(id, p), dp || p));
  return out;
}

std::vector<Formula> build_schema(SchemaKind kind, const SchemaParams& params) {
  switch (kind) {
    case SchemaKind::diamond_union:
      return {diamond_union(params.subset, params.operand)};
    case SchemaKind::diamond_upto:
      return {diamond_upto(params.m, params.subset, params.operand)};
    case SchemaKind::pretransitivity:
      return {pretransitivity_formula(params.subset, params.m)};
    case SchemaKind::height:
      return {height_formula(params.h)};
    case SchemaKind::height_star:
      return {height_formula_star(params.h, params.m, params.subset)};
    case SchemaKind::path_reducibility:
      return {path_reducibility_formula(params.m, params.subset)};
    case SchemaKind::lex:
      return lex_axioms(params.subset, params.horizontal);
    case SchemaKind::difference:
      return difference_axioms(params.subset, params.designated);
  }
  throw InvalidInput("unknown schema kind");
}

}  // namespace modalwb
