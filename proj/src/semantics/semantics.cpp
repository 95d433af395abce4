#include "modalwb/semantics.hpp"

#include <memory>
#include <new>
#include <string>
#include <unordered_map>

#include "kernel.hpp"
#include "modalwb/error.hpp"
#include "modalwb/partitions.hpp"

namespace modalwb {

Model::Model(Frame f, std::vector<PointSet> v) : frame(std::move(f)), valuation(std::move(v)) {
  for (const auto& ext : valuation) {
    if (ext.universe() != frame.size()) throw InvalidInput("valuation extent over a different universe");
  }
}

Model restrict_model(const Model& model, const std::vector<std::size_t>& points) {
  const PointSet keep = PointSet::from_vector(model.frame.size(), points);
  Restriction r = restriction(model.frame, keep);
  std::vector<PointSet> valuation;
  for (const auto& ext : model.valuation) {
    PointSet sub(r.points.size());
    for (std::size_t i = 0; i < r.points.size(); ++i) {
      if (ext.contains(r.points[i])) sub.insert(i);
    }
    valuation.push_back(std::move(sub));
  }
  return Model(std::move(r.frame), std::move(valuation));
}

PointSet extent(const Model& model, const Formula& f) {
  const std::size_t n = model.frame.size();
  std::unordered_map<const void*, PointSet> memo;
  visit_postorder(f, [&](const Formula& g) {
    PointSet out(n);
    switch (g.kind()) {
      case Formula::Kind::variable:
        if (g.variable() >= model.variable_count()) {
          throw InvalidInput("variable p" + std::to_string(g.variable()) + " outside a " +
                             std::to_string(model.variable_count()) + "-model");
        }
        out = model.valuation[g.variable()];
        break;
      case Formula::Kind::falsum:
        break;
      case Formula::Kind::verum:
        out = PointSet::full(n);
        break;
      case Formula::Kind::negation:
        out = memo.at(g.lhs().id()).complement();
        break;
      case Formula::Kind::conjunction:
        out = memo.at(g.lhs().id()) & memo.at(g.rhs().id());
        break;
      case Formula::Kind::disjunction:
        out = memo.at(g.lhs().id()) | memo.at(g.rhs().id());
        break;
      case Formula::Kind::implication:
        out = memo.at(g.lhs().id()).complement() | memo.at(g.rhs().id());
        break;
      case Formula::Kind::modal: {
        if (g.modality() >= model.frame.modality_count()) {
          throw InvalidInput("modality " + std::to_string(g.modality()) + " outside the frame's alphabet");
        }
        const Relation& r = model.frame.relation(g.modality());
        const PointSet& inner = memo.at(g.lhs().id());
        out = g.is_box() ? r.preimage(inner.complement()).complement() : r.preimage(inner);
        break;
      }
    }
    memo.emplace(g.id(), std::move(out));
  });
  return memo.at(f.id());
}

bool avx2_available() noexcept { return detail::cpu_has_avx2(); }

namespace {

struct Compiled {
  std::vector<std::size_t> variables;  // slot -> variable index
  std::vector<detail::Op> ops;
  std::vector<std::uint32_t> succ_offsets;
  std::vector<std::uint32_t> succ;
};

Compiled compile(const Frame& frame, const Formula& f) {
  using detail::Op;
  using detail::OpCode;
  const std::size_t n = frame.size();
  Compiled c;
  c.variables = variables(f);
  std::unordered_map<std::size_t, std::uint32_t> slot;
  for (std::size_t s = 0; s < c.variables.size(); ++s) slot[c.variables[s]] = static_cast<std::uint32_t>(s);

  std::unordered_map<const void*, std::uint32_t> reg;
  auto emit = [&](OpCode code, std::uint32_t a, std::uint32_t b) {
    c.ops.push_back(Op{code, a, b});
    return static_cast<std::uint32_t>(c.ops.size() - 1);
  };
  visit_postorder(f, [&](const Formula& g) {
    std::uint32_t out = 0;
    switch (g.kind()) {
      case Formula::Kind::variable:
        out = emit(OpCode::var, static_cast<std::uint32_t>(slot.at(g.variable()) * n), 0);
        break;
      case Formula::Kind::falsum:
        out = emit(OpCode::zero, 0, 0);
        break;
      case Formula::Kind::verum:
        out = emit(OpCode::one, 0, 0);
        break;
      case Formula::Kind::negation:
        out = emit(OpCode::neg, reg.at(g.lhs().id()), 0);
        break;
      case Formula::Kind::conjunction:
        out = emit(OpCode::conj, reg.at(g.lhs().id()), reg.at(g.rhs().id()));
        break;
      case Formula::Kind::disjunction:
        out = emit(OpCode::disj, reg.at(g.lhs().id()), reg.at(g.rhs().id()));
        break;
      case Formula::Kind::implication:
        out = emit(OpCode::impl, reg.at(g.lhs().id()), reg.at(g.rhs().id()));
        break;
      case Formula::Kind::modal: {
        if (g.modality() >= frame.modality_count()) {
          throw InvalidInput("modality " + std::to_string(g.modality()) + " outside the frame's alphabet");
        }
        const auto mod = static_cast<std::uint32_t>(g.modality());
        const std::uint32_t inner = reg.at(g.lhs().id());
        if (g.is_box()) {
          const std::uint32_t negated = emit(OpCode::neg, inner, 0);
          out = emit(OpCode::neg, emit(OpCode::dia, negated, mod), 0);
        } else {
          out = emit(OpCode::dia, inner, mod);
        }
        break;
      }
    }
    reg.emplace(g.id(), out);
  });

  c.succ_offsets.push_back(0);
  for (std::size_t d = 0; d < frame.modality_count(); ++d) {
    for (std::size_t a = 0; a < n; ++a) {
      frame.relation(d).successors(a).for_each([&](std::size_t b) { c.succ.push_back(static_cast<std::uint32_t>(b)); });
      c.succ_offsets.push_back(static_cast<std::uint32_t>(c.succ.size()));
    }
  }
  return c;
}

std::vector<PointSet> decode(std::uint64_t index, const std::vector<std::size_t>& vars, std::size_t n) {
  const std::size_t bound = vars.empty() ? 0 : vars.back() + 1;
  std::vector<PointSet> valuation(bound, PointSet(n));
  for (std::size_t s = 0; s < vars.size(); ++s) {
    for (std::size_t a = 0; a < n; ++a) {
      if (((index >> (s * n + a)) & 1U) != 0) valuation[vars[s]].insert(a);
    }
  }
  return valuation;
}

struct AlignedDelete {
  void operator()(std::uint64_t* p) const { ::operator delete[](p, std::align_val_t{32}); }
};

}  // namespace

std::optional<std::vector<PointSet>> find_countervaluation(const Frame& frame, const Formula& f,
                                                           const ValidityOptions& options) {
  const std::size_t n = frame.size();
  const std::vector<std::size_t> vars = variables(f);
  const std::size_t bits = vars.size() * n;
  if (bits >= 63 || (std::uint64_t{1} << bits) > options.cap) {
    throw CapExceeded("validity check needs 2^" + std::to_string(bits) + " valuations, cap is " +
                      std::to_string(options.cap));
  }
  if (n == 0) {
    // Nothing to falsify, but still reject formulas outside the alphabet.
    compile(frame, f);
    return std::nullopt;
  }

  ValidityKernel kernel = options.kernel;
  if (kernel == ValidityKernel::automatic) kernel = avx2_available() ? ValidityKernel::avx2 : ValidityKernel::portable;
  if (kernel == ValidityKernel::avx2 && !avx2_available()) kernel = ValidityKernel::portable;

  if (kernel == ValidityKernel::reference) {
    const std::uint64_t total = std::uint64_t{1} << bits;
    const PointSet all = PointSet::full(n);
    for (std::uint64_t v = 0; v < total; ++v) {
      std::vector<PointSet> valuation = decode(v, vars, n);
      if (extent(Model(frame, valuation), f) != all) return valuation;
    }
    return std::nullopt;
  }

  const Compiled c = compile(frame, f);
  detail::KernelProgram prog;
  prog.points = n;
  prog.total_bits = bits;
  prog.ops = c.ops.data();
  prog.op_count = c.ops.size();
  prog.succ_offsets = c.succ_offsets.data();
  prog.succ = c.succ.data();

  const std::size_t words_per_lane = kernel == ValidityKernel::avx2 ? 4 : 1;
  const std::size_t words = c.ops.size() * n * words_per_lane;
  std::unique_ptr<std::uint64_t[], AlignedDelete> scratch(new (std::align_val_t{32}) std::uint64_t[words]);

  std::uint64_t index = 0;
  const bool found = kernel == ValidityKernel::avx2 ? detail::first_falsifying_avx2(prog, scratch.get(), &index)
                                                    : detail::first_falsifying_portable(prog, scratch.get(), &index);
  if (!found) return std::nullopt;
  return decode(index, vars, n);
}

bool validity_bruteforce(const Frame& frame, const Formula& f, const ValidityOptions& options) {
  return !find_countervaluation(frame, f, options).has_value();
}

ModelDepth model_depth(const Model& model) {
  Refinement r = refine_sequence(model.frame, model.valuation);
  return ModelDepth{r.stabilization, std::move(r.stages)};
}

}  // namespace modalwb
