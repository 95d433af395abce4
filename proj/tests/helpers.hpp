#pragma once

#include <random>

#include "modalwb/formula.hpp"
#include "modalwb/frame.hpp"
#include "modalwb/semantics.hpp"
#include "oracles.hpp"

namespace testutil {

inline modalwb::Frame chain3() {
  return modalwb::Frame(modalwb::Alphabet::numbered(1), {modalwb::Relation::from_pairs(3, {{0, 1}, {1, 2}})});
}

inline modalwb::Frame universal(std::size_t n, std::size_t modalities = 1) {
  return modalwb::Frame(modalwb::Alphabet::numbered(modalities), n,
                        std::vector<modalwb::Relation>(modalities, modalwb::Relation::full(n)));
}

inline modalwb::Frame random_frame(std::mt19937_64& rng, std::size_t n, std::size_t modalities, double density) {
  return oracle::to_frame(oracle::random_adj(rng, n, modalities, density));
}

/// Random formula with roughly `size` constructors over p0..p{vars-1} and the given modalities.
inline modalwb::Formula random_formula(std::mt19937_64& rng, std::size_t size, std::size_t vars,
                                       std::size_t modalities) {
  using modalwb::Formula;
  std::uniform_int_distribution<int> pick(0, 9);
  if (size <= 1) {
    const int r = pick(rng);
    if (r == 0) return Formula::falsum();
    if (r == 1) return Formula::verum();
    return Formula::var(std::uniform_int_distribution<std::size_t>(0, vars - 1)(rng));
  }
  const int r = pick(rng);
  const std::size_t rest = size - 1;
  const std::size_t left = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(rest - 1, 1))(rng);
  auto sub = [&](std::size_t s) { return random_formula(rng, s, vars, modalities); };
  if (modalities > 0 && r <= 2) {
    const auto m = std::uniform_int_distribution<std::size_t>(0, modalities - 1)(rng);
    return r == 2 ? Formula::box(m, sub(rest)) : Formula::diamond(m, sub(rest));
  }
  switch (r) {
    case 3: return Formula::negation(sub(rest));
    case 4:
    case 5: return Formula::conjunction(sub(left), sub(rest - left > 0 ? rest - left : 1));
    case 6:
    case 7: return Formula::disjunction(sub(left), sub(rest - left > 0 ? rest - left : 1));
    default: return Formula::implication(sub(left), sub(rest - left > 0 ? rest - left : 1));
  }
}

inline std::vector<modalwb::PointSet> random_valuation(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::bernoulli_distribution coin(0.5);
  std::vector<modalwb::PointSet> v(k, modalwb::PointSet(n));
  for (auto& s : v)
    for (std::size_t a = 0; a < n; ++a)
      if (coin(rng)) s.insert(a);
  return v;
}

inline std::vector<oracle::Mask> masks(const std::vector<modalwb::PointSet>& v) {
  std::vector<oracle::Mask> out;
  for (const auto& s : v) out.push_back(oracle::to_mask(s));
  return out;
}

inline modalwb::Partition random_partition(std::mt19937_64& rng, std::size_t n) {
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(n, 1))(rng);
  std::vector<std::size_t> labels(n);
  for (auto& l : labels) l = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
  return modalwb::Partition::from_labels(labels);
}

inline std::vector<std::size_t> labels_of(const modalwb::Partition& p) {
  std::vector<std::size_t> out(p.universe());
  for (std::size_t a = 0; a < p.universe(); ++a) out[a] = p.block_of(a);
  return out;
}

}  // namespace testutil
