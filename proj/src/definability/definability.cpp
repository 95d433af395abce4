#include "modalwb/definability.hpp"

#include <algorithm>
#include <map>

#include "modalwb/error.hpp"
#include "modalwb/frame.hpp"
#include "modalwb/partitions.hpp"
#include "modalwb/schema.hpp"

namespace modalwb {

namespace {

Formula literal_profile(const Model& model, std::size_t point) {
  std::vector<Formula> lits;
  for (std::size_t l = 0; l < model.variable_count(); ++l) {
    Formula p = Formula::var(l);
    lits.push_back(model.valuation[l].contains(point) ? p : !p);
  }
  return Formula::conjunction_of(lits);
}

// ~ on the whole model: the stabilized induced partition.
Partition full_equivalence(const Model& model) { return refine_sequence(model.frame, model.valuation).final(); }

void check_upset(const Model& model, const PointSet& upset) {
  if (upset.universe() != model.frame.size()) throw InvalidInput("upset over a different universe");
  if (upset.empty()) throw InvalidInput("the upset must be non-empty");
  if (!is_upset(model.frame, upset)) throw InvalidInput("not an upset: " + upset.to_string());
}

}  // namespace

DistinguishingFormulas distinguishing_formulas(const Model& model) {
  const Frame& frame = model.frame;
  const Refinement ref = refine_sequence(frame, model.valuation);

  // Splitter conjuncts per block, stage by stage. A block inherits its parent's conjuncts and
  // adds one signed splitter for every sibling, taken from the previous stage's formulas.
  std::vector<std::vector<Formula>> conjuncts;
  std::vector<Formula> current;
  for (const auto& b : ref.stages[0].blocks()) {
    conjuncts.push_back({literal_profile(model, *b.first())});
    current.push_back(conjuncts.back().front());
  }

  for (std::size_t d = 1; d < ref.stages.size(); ++d) {
    const Partition& prev = ref.stages[d - 1];
    const Partition& next = ref.stages[d];
    const auto& parents = ref.parents[d];

    // Membership of each new block in each preimage, listed as (modality, previous block).
    std::vector<std::pair<ModalityId, std::size_t>> splitters;
    std::vector<PointSet> preimages;
    for (ModalityId r = 0; r < frame.modality_count(); ++r) {
      for (std::size_t u = 0; u < prev.block_count(); ++u) {
        splitters.emplace_back(r, u);
        preimages.push_back(frame.relation(r).preimage(prev.block(u)));
      }
    }

    std::vector<std::vector<Formula>> next_conjuncts(next.block_count());
    std::vector<Formula> next_formulas(next.block_count());
    for (std::size_t i = 0; i < next.block_count(); ++i) {
      const std::size_t me = *next.block(i).first();
      auto parts = conjuncts[parents[i]];
      std::vector<bool> used(splitters.size(), false);
      for (std::size_t j = 0; j < next.block_count(); ++j) {
        if (j == i || parents[j] != parents[i]) continue;
        const std::size_t other = *next.block(j).first();
        for (std::size_t s = 0; s < splitters.size(); ++s) {
          if (preimages[s].contains(me) == preimages[s].contains(other)) continue;
          if (!used[s]) {
            used[s] = true;
            Formula dia = Formula::diamond(splitters[s].first, current[splitters[s].second]);
            parts.push_back(preimages[s].contains(me) ? dia : !dia);
          }
          break;
        }
      }
      next_formulas[i] = parts.size() == 1 ? parts.front() : Formula::conjunction_of(parts);
      next_conjuncts[i] = std::move(parts);
    }
    conjuncts = std::move(next_conjuncts);
    current = std::move(next_formulas);
  }

  return DistinguishingFormulas{ref.final(), std::move(current), ref.stabilization};
}

Jankov build_jankov(const Model& model, const PointSet& upset, const JankovOptions& options) {
  check_upset(model, upset);
  const Frame& frame = model.frame;
  const std::vector<std::size_t> points = upset.to_vector();
  const Model sub = restrict_model(model, points);
  DistinguishingFormulas dist = distinguishing_formulas(sub);

  Jankov out;
  DefinableFamily& fam = out.family;
  fam.target = upset;
  fam.m = options.m.value_or(transitivity_index(frame));
  fam.depth_bound = dist.stabilization;
  fam.alpha = dist.formulas;
  for (const auto& b : dist.blocks.blocks()) {
    PointSet c(frame.size());
    b.for_each([&](std::size_t p) { c.insert(points[p]); });
    fam.classes.push_back(std::move(c));
  }

  // Minimal filtered relations on the classes: t1 R t2 iff some member of t1 sees some member of t2.
  const std::size_t classes = fam.classes.size();
  const ModalitySet all = frame.alphabet().all();
  std::vector<Formula> forth;
  std::vector<Formula> back;
  for (ModalityId r = 0; r < frame.modality_count(); ++r) {
    const Relation& rel = frame.relation(r);
    for (std::size_t t1 = 0; t1 < classes; ++t1) {
      const PointSet seen = rel.image(fam.classes[t1]);
      for (std::size_t t2 = 0; t2 < classes; ++t2) {
        const Formula dia = Formula::diamond(r, fam.alpha[t2]);
        if (seen.intersects(fam.classes[t2])) {
          forth.push_back(Formula::implication(fam.alpha[t1], dia));
        } else {
          back.push_back(Formula::implication(fam.alpha[t1], !dia));
        }
      }
    }
  }
  std::vector<Formula> parts;
  if (options.include_forth) parts.push_back(box_upto(fam.m, all, Formula::conjunction_of(forth)));
  if (options.include_back) parts.push_back(box_upto(fam.m, all, Formula::conjunction_of(back)));
  if (options.include_cover) parts.push_back(box_upto(fam.m, all, Formula::disjunction_of(fam.alpha)));
  out.gamma = Formula::conjunction_of(parts);

  out.points = points;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t c = dist.blocks.block_of(i);
    out.class_of.push_back(c);
    out.beta.push_back(Formula::conjunction(fam.alpha[c], out.gamma));
  }
  return out;
}

DefinabilityReport verify_definability(const Model& model, const PointSet& upset, const JankovOptions& options) {
  const Jankov j = build_jankov(model, upset, options);
  const Partition equiv = full_equivalence(model);
  DefinabilityReport report;
  report.depth_bound = j.family.m + j.family.depth_bound + 1;
  // beta(a) depends only on the class of a, so evaluate once per class.
  std::map<std::size_t, PointSet> extents;
  for (std::size_t i = 0; i < j.points.size(); ++i) {
    const std::size_t a = j.points[i];
    auto it = extents.find(j.class_of[i]);
    if (it == extents.end()) {
      it = extents.emplace(j.class_of[i], extent(model, j.beta[i])).first;
      report.max_beta_depth = std::max(report.max_beta_depth, depth(j.beta[i]));
    }
    for (std::size_t b = 0; b < model.frame.size(); ++b) {
      const bool holds = it->second.contains(b);
      const bool equivalent = equiv.same_block(a, b);
      if (holds != equivalent) report.violations.push_back({a, b, holds, equivalent});
    }
  }
  return report;
}

bool StableTop::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const StableTopCheck& c) { return c.passed; });
}

StableTop stable_top(const Model& model, const PointSet& upset, const JankovOptions& options) {
  const Jankov j = build_jankov(model, upset, options);
  const Frame& frame = model.frame;
  const Refinement ref = refine_sequence(frame, model.valuation);
  const Partition& equiv = ref.final();

  StableTop out;
  out.bound = j.family.m + j.family.depth_bound + 1;
  out.z = PointSet(frame.size());
  for (const auto& b : equiv.blocks()) {
    if (b.intersects(upset)) out.z |= b;
  }

  std::vector<Formula> reps;
  for (const auto& c : j.family.classes) {
    const std::size_t rep = *c.first();
    const auto pos = std::lower_bound(j.points.begin(), j.points.end(), rep) - j.points.begin();
    reps.push_back(j.beta[static_cast<std::size_t>(pos)]);
  }
  out.definer = Formula::disjunction_of(reps);

  const bool up = is_upset(frame, out.z);
  out.checks.push_back({"upset", up, up ? "" : "Z = " + out.z.to_string() + " is not successor-closed"});

  const PointSet ext = extent(model, out.definer);
  const std::size_t def_depth = depth(out.definer);
  const bool definable = ext == out.z && def_depth <= out.bound;
  out.checks.push_back({"definable", definable,
                        definable ? ""
                                  : "extent " + ext.to_string() + " vs Z " + out.z.to_string() + ", depth " +
                                        std::to_string(def_depth) + " vs bound " + std::to_string(out.bound)});

  const std::size_t zdepth = model_depth(restrict_model(model, out.z.to_vector())).depth;
  const bool shallow = zdepth <= out.bound;
  out.checks.push_back({"depth", shallow,
                        shallow ? "" : "md(M|Z) = " + std::to_string(zdepth) + " > " + std::to_string(out.bound)});

  const Partition& at_bound = ref.stage(out.bound);
  std::string stable_detail;
  out.z.for_each([&](std::size_t a) {
    for (std::size_t b = 0; b < frame.size() && stable_detail.empty(); ++b) {
      if (at_bound.same_block(a, b) && !(out.z.contains(b) && equiv.same_block(a, b))) {
        stable_detail = "a = " + std::to_string(a) + ", b = " + std::to_string(b);
      }
    }
  });
  out.checks.push_back({"stable", stable_detail.empty(), stable_detail});
  return out;
}

}  // namespace modalwb
