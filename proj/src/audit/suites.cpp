#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <thread>

#include "modalwb/audit.hpp"
#include "modalwb/definability.hpp"
#include "modalwb/error.hpp"
#include "modalwb/frame_io.hpp"
#include "modalwb/partitions.hpp"
#include "modalwb/schema.hpp"
#include "modalwb/semantics.hpp"

namespace modalwb {

namespace {

// One generated instance of a suite's claim. `restrict` returns null when the sub-instance
// no longer meets the claim's preconditions; minimization then skips that deletion.
class Instance {
 public:
  virtual ~Instance() = default;
  virtual std::size_t points() const = 0;
  virtual std::unique_ptr<Instance> restrict(const std::vector<std::size_t>& keep) const = 0;
  /// Empty when the claim holds.
  virtual std::optional<std::string> violation() const = 0;
  virtual nlohmann::ordered_json to_json() const = 0;
};

using InstancePtr = std::unique_ptr<Instance>;

struct SuiteContext {
  GenSpec spec;
  const AuditConfig* config;
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

PointSet restrict_set(const PointSet& s, const std::vector<std::size_t>& keep) {
  PointSet out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    if (s.contains(keep[i])) out.insert(i);
  return out;
}

nlohmann::ordered_json set_json(const PointSet& s) { return s.to_vector(); }

Frame restrict_frame(const Frame& f, const std::vector<std::size_t>& keep) {
  return restriction(f, PointSet::from_vector(f.size(), keep)).frame;
}

Partition random_partition(std::size_t n, std::mt19937_64& rng) {
  const std::size_t labels = uniform(rng, 1, std::max<std::size_t>(n, 1));
  std::vector<std::size_t> lab(n);
  for (auto& l : lab) l = uniform(rng, 0, labels - 1);
  return Partition::from_labels(lab);
}

std::vector<PointSet> random_valuation(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  std::vector<PointSet> v(k, PointSet(n));
  for (auto& s : v)
    for (std::size_t a = 0; a < n; ++a)
      if (coin(rng, 0.5)) s.insert(a);
  return v;
}

// ---------------------------------------------------------------- tuned-equivalences

class TunedInstance : public Instance {
 public:
  TunedInstance(Frame f, Partition p, TunedOptions o) : f_(std::move(f)), p_(std::move(p)), o_(o) {}
  std::size_t points() const override { return f_.size(); }
  InstancePtr restrict(const std::vector<std::size_t>& keep) const override {
    return std::make_unique<TunedInstance>(restrict_frame(f_, keep), p_.restrict_to(keep), o_);
  }
  std::optional<std::string> violation() const override {
    const bool a = is_tuned(f_, p_, o_);
    const bool c = is_tuned_by_projection(f_, p_);
    const bool d = is_tuned_by_preimages(f_, p_);
    const bool fc = is_tuned_by_composition(f_, p_);
    if (a == c && c == d && d == fc) return std::nullopt;
    return "definition=" + yes_no(a) + " projection=" + yes_no(c) + " preimages=" + yes_no(d) +
           " composition=" + yes_no(fc);
  }
  nlohmann::ordered_json to_json() const override {
    auto j = frame_to_json(f_);
    j["partition"] = partition_to_json(p_);
    return j;
  }

 private:
  Frame f_;
  Partition p_;
  TunedOptions o_;
};

InstancePtr gen_tuned(std::mt19937_64& rng, const SuiteContext& ctx) {
  Frame f = random_frame(ctx.spec, rng);
  Partition p = random_partition(f.size(), rng);
  TunedOptions o;
  if (ctx.config->mutation == Mutation::tuned_ignore_modality) o.ignore_modality = 0;
  return std::make_unique<TunedInstance>(std::move(f), std::move(p), o);
}

// ---------------------------------------------------------------- correspondences

constexpr std::size_t kMaxCorrespondenceM = 3;
constexpr std::size_t kMaxCorrespondenceH = 3;

class HeightInstance : public Instance {
 public:
  HeightInstance(Frame f, std::size_t h, std::size_t m) : f_(std::move(f)), h_(h), m_(m) {}
  std::size_t points() const override { return f_.size(); }
  InstancePtr restrict(const std::vector<std::size_t>& keep) const override {
    Frame g = restrict_frame(f_, keep);
    if (!is_m_transitive(g, m_)) return nullptr;
    return std::make_unique<HeightInstance>(std::move(g), h_, m_);
  }
  std::optional<std::string> violation() const override {
    const bool valid = validity_bruteforce(f_, height_formula_star(h_, m_, f_.alphabet().all()));
    const std::size_t ht = height(f_);
    if (valid == (ht <= h_)) return std::nullopt;
    return "h=" + std::to_string(h_) + " m=" + std::to_string(m_) + " valid=" + yes_no(valid) +
           " height=" + std::to_string(ht);
  }
  nlohmann::ordered_json to_json() const override {
    auto j = frame_to_json(f_);
    j["h"] = h_;
    j["m"] = m_;
    return j;
  }

 private:
  Frame f_;
  std::size_t h_, m_;
};

Frame frame_with_small_index(std::mt19937_64& rng, const GenSpec& spec) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Frame f = random_frame(spec, rng);
    if (transitivity_index(f) <= kMaxCorrespondenceM) return f;
  }
  throw BudgetExceeded("no frame with transitivity index <= 3 within 1000 draws");
}

InstancePtr gen_height(std::mt19937_64& rng, const SuiteContext& ctx) {
  Frame f = frame_with_small_index(rng, ctx.spec);
  const std::size_t m = uniform(rng, transitivity_index(f), kMaxCorrespondenceM);
  const std::size_t h = uniform(rng, 0, kMaxCorrespondenceH);
  return std::make_unique<HeightInstance>(std::move(f), h, m);
}

class AtrInstance : public Instance {
 public:
  AtrInstance(Frame f, std::size_t m) : f_(std::move(f)), m_(m) {}
  std::size_t points() const override { return f_.size(); }
  InstancePtr restrict(const std::vector<std::size_t>& keep) const override {
    return std::make_unique<AtrInstance>(restrict_frame(f_, keep), m_);
  }
  std::optional<std::string> violation() const override {
    const bool valid = validity_bruteforce(f_, pretransitivity_formula(f_.alphabet().all(), m_));
    const bool rel = is_m_transitive(f_, m_);
    if (valid == rel) return std::nullopt;
    return "m=" + std::to_string(m_) + " valid=" + yes_no(valid) + " m_transitive=" + yes_no(rel);
  }
  nlohmann::ordered_json to_json() const override {
    auto j = frame_to_json(f_);
    j["m"] = m_;
    return j;
  }

 private:
  Frame f_;
  std::size_t m_;
};

InstancePtr gen_atr(std::mt19937_64& rng, const SuiteContext& ctx) {
  Frame f = random_frame(ctx.spec, rng);
  return std::make_unique<AtrInstance>(std::move(f), uniform(rng, 0, kMaxCorrespondenceM));
}

class RppInstance : public Instance {
 public:
  RppInstance(Frame f, std::size_t m) : f_(std::move(f)), m_(m) {}
  std::size_t points() const override { return f_.size(); }
  InstancePtr restrict(const std::vector<std::size_t>& keep) const override {
    return std::make_unique<RppInstance>(restrict_frame(f_, keep), m_);
  }
  std::optional<std::string> violation() const override {
    const bool valid = validity_bruteforce(f_, path_reducibility_formula(m_, f_.alphabet().all()));
    const bool rel = is_path_reducible(f_, m_);
    if (valid == rel) return std::nullopt;
    return "m=" + std::to_string(m_) + " valid=" + yes_no(valid) + " path_reducible=" + yes_no(rel);
  }
  nlohmann::ordered_json to_json() const override {
    auto j = frame_to_json(f_);
    j["m"] = m_;
    return j;
  }

 private:
  Frame f_;
  std::size_t m_;
};

InstancePtr gen_rpp(std::mt19937_64& rng, const SuiteContext& ctx) {
  Frame f = random_frame(ctx.spec, rng);
  return std::make_unique<RppInstance>(std::move(f), uniform(rng, 0, kMaxCorrespondenceM));
}

// ---------------------------------------------------------------- modal depth

class MdSumInstance : public Instance {
 public:
  MdSumInstance(Frame a, Frame b) : a_(std::move(a)), b_(std::move(b)) {}
  std::size_t points() const override { return a_.size() + b_.size(); }
  InstancePtr restrict(const std::vector<std::size_t>& keep) const override {
    std::vector<std::size_t> ka, kb;
    for (auto p : keep) (p < a_.size() ? ka : kb).push_back(p < a_.size() ? p : p - a_.size());
    return std::make_unique<MdSumInstance>(restrict_frame(a_, ka), restrict_frame(b_, kb));
  }
  std::optional<std::string> violation() const override {
    const Frame sum = disjoint_sum({a_, b_});
    const std::size_t ms = frame_modal_depth(sum).value;
    const std::size_t ma = frame_modal_depth(a_).value;
    const std::size_t mb = frame_modal_depth(b_).value;
    const std::size_t m = transitivity_index(sum);
    const std::size_t bound = std::max(ma, mb) + m + 1;
    if (ms <= bound) return std::nullopt;
    return "md(sum)=" + std::to_string(ms) + " md(F1)=" + std::to_string(ma) + " md(F2)=" + std::to_string(mb) +
           " tra=" + std::to_string(m) + " bound=" + std::to_string(bound);
  }
  nlohmann::ordered_json to_json() const override {
    auto j = frame_to_json(disjoint_sum({a_, b_}));
    j["summand_points"] = {a_.size(), b_.size()};
    return j;
  }

 private:
  Frame a_, b_;
};

InstancePtr gen_md_sum(std::mt19937_64& rng, const SuiteContext& ctx) {
  Frame a = random_frame(ctx.spec, rng);
  Frame b = random_frame(ctx.spec, rng);
  return std::make_unique<MdSumInstance>(std::move(a), std::move(b));
}

class TopDownInstance : public Instance {
 public:
  TopDownInstance(Frame f, PointSet y) : f_(std::move(f)), y_(std::move(y)) {}
  std::size_t points() const override { return f_.size(); }
  InstancePtr restrict(const std::vector<std::size_t>& keep) const override {
    Frame g = restrict_frame(f_, keep);
    PointSet y = restrict_set(y_, keep);
    if (!is_upset(g, y) || !y.complement().is_subset_of(min_part(g))) return nullptr;
    return std::make_unique<TopDownInstance>(std::move(g), std::move(y));
  }
  std::optional<std::string> violation() const override {
    const std::size_t md = frame_modal_depth(f_).value;
    const std::size_t d = frame_modal_depth(restriction(f_, y_).frame).value;
    const std::size_t c = frame_modal_depth(restriction(f_, min_part(f_)).frame).value;
    const std::size_t m = transitivity_index(f_);
    if (md <= d + m + c + 1) return std::nullopt;
    return "md(F)=" + std::to_string(md) + " d=" + std::to_string(d) + " m=" + std::to_string(m) +
           " c=" + std::to_string(c);
  }
  nlohmann::ordered_json to_json() const override {
    auto j = frame_to_json(f_);
    j["upset"] = set_json(y_);
    return j;
  }

 private:
  Frame f_;
  PointSet y_;
};

InstancePtr gen_top_down(std::mt19937_64& rng, const SuiteContext& ctx) {
  Frame f = random_frame(ctx.spec, rng);
  const SkeletonPoset sk = skeleton(f);
  PointSet y = PointSet::full(f.size());
  for (std::size_t c = 0; c < sk.clusters.block_count(); ++c) {
    bool minimal = true;
    for (std::size_t o = 0; o < sk.clusters.block_count(); ++o)
      if (sk.below[o].contains(c)) minimal = false;
    if (minimal && coin(rng, 0.5)) y -= sk.clusters.block(c);
  }
  return std::make_unique<TopDownInstance>(std::move(f), std::move(y));
}

class ClusterBoundInstance : public Instance {
 public:
  ClusterBoundInstance(Frame f, std::optional<std::size_t> d, std::optional<std::size_t> m)
      : f_(std::move(f)), d_(d), m_(m) {}
  std::size_t points() const override { return f_.size(); }
  InstancePtr restrict(const std::vector<std::size_t>& keep) const override {
    if (keep.empty()) return nullptr;
    return std::make_unique<ClusterBoundInstance>(restrict_frame(f_, keep), d_, m_);
  }
  std::optional<std::string> violation() const override {
    const std::size_t h = height(f_);
    const std::size_t m = m_.value_or(transitivity_index(f_));
    std::size_t d = 0;
    if (d_) {
      d = *d_;
    } else {
      for (const Frame& c : cluster_frames(f_)) d = std::max(d, frame_modal_depth(c).value);
      d += m + 1;
    }
    const std::size_t bound = (d + m + 1) * h - m - 1;
    const std::size_t md = frame_modal_depth(f_).value;
    if (md <= bound) return std::nullopt;
    return "md(F)=" + std::to_string(md) + " h=" + std::to_string(h) + " d=" + std::to_string(d) +
           " m=" + std::to_string(m) + " bound=" + std::to_string(bound);
  }
  nlohmann::ordered_json to_json() const override { return frame_to_json(f_); }

 private:
  Frame f_;
  std::optional<std::size_t> d_, m_;
};

InstancePtr gen_cluster_bound(std::mt19937_64& rng, const SuiteContext& ctx) {
  return std::make_unique<ClusterBoundInstance>(random_frame(ctx.spec, rng), ctx.config->fixed_d,
                                                ctx.config->fixed_m);
}

// ---------------------------------------------------------------- sums and expansions

Alphabet prefixed(std::size_t count, const std::string& prefix) { return Alphabet::numbered(count, prefix); }

Frame rename(const Frame& f, const Alphabet& alphabet) { return Frame(alphabet, f.size(), f.relations()); }

class LexInstance : public Instance {
 public:
  LexInstance(Frame index, std::vector<Frame> fibers) : index_(std::move(index)), fibers_(std::move(fibers)) {}
  std::size_t points() const override {
    std::size_t n = 0;
    for (const auto& f : fibers_) n += f.size();
    return n;
  }
  InstancePtr restrict(const std::vector<std::size_t>& keep) const override {
    std::vector<std::size_t> kept_index;
    std::vector<Frame> fibers;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < fibers_.size(); ++i) {
      std::vector<std::size_t> local;
      for (auto p : keep)
        if (p >= offset && p < offset + fibers_[i].size()) local.push_back(p - offset);
      offset += fibers_[i].size();
      if (local.empty()) continue;
      kept_index.push_back(i);
      fibers.push_back(restrict_frame(fibers_[i], local));
    }
    if (kept_index.empty()) return nullptr;
    return std::make_unique<LexInstance>(restrict_frame(index_, kept_index), std::move(fibers));
  }
  std::optional<std::string> violation() const override {
    const Frame sum = lex_sum(index_, fibers_);
    ModalitySet vertical, horizontal;
    for (std::size_t i = 0; i < index_.modality_count(); ++i) vertical.push_back(i);
    for (std::size_t i = 0; i < fibers_.front().modality_count(); ++i) horizontal.push_back(vertical.size() + i);
    const auto axioms = lex_axioms(vertical, horizontal);
    for (std::size_t i = 0; i < axioms.size(); ++i) {
      if (!validity_bruteforce(sum, axioms[i])) {
        return "axiom " + std::to_string(i) + " fails: " + print_formula(axioms[i], sum.alphabet());
      }
    }
    return std::nullopt;
  }
  nlohmann::ordered_json to_json() const override {
    auto j = frame_to_json(lex_sum(index_, fibers_));
    j["index"] = frame_to_json(index_);
    auto fib = nlohmann::ordered_json::array();
    for (const auto& f : fibers_) fib.push_back(frame_to_json(f));
    j["fibers"] = std::move(fib);
    return j;
  }

 private:
  Frame index_;
  std::vector<Frame> fibers_;
};

InstancePtr gen_lex(std::mt19937_64& rng, const SuiteContext& ctx) {
  const std::size_t total = std::max<std::size_t>(ctx.spec.max_points, 1);
  const std::size_t vmods = uniform(rng, 1, std::max<std::size_t>(ctx.spec.modalities, 1));
  const std::size_t hmods = uniform(rng, 1, std::max<std::size_t>(ctx.spec.modalities, 1));
  GenSpec ispec = ctx.spec;
  ispec.modalities = vmods;
  ispec.min_points = 1;
  ispec.max_points = std::min<std::size_t>(total, 3);
  ispec.max_height.reset();
  Frame index = rename(random_frame(ispec, rng), prefixed(vmods, "v"));
  std::size_t budget = total - index.size();
  std::vector<Frame> fibers;
  for (std::size_t i = 0; i < index.size(); ++i) {
    GenSpec fspec = ispec;
    fspec.modalities = hmods;
    fspec.max_points = 1 + uniform(rng, 0, budget);
    budget -= fspec.max_points - 1;
    fibers.push_back(rename(random_frame(fspec, rng), prefixed(hmods, "h")));
  }
  return std::make_unique<LexInstance>(std::move(index), std::move(fibers));
}

class DiffInstance : public Instance {
 public:
  explicit DiffInstance(Frame f) : f_(std::move(f)) {}
  std::size_t points() const override { return f_.size(); }
  InstancePtr restrict(const std::vector<std::size_t>& keep) const override {
    return std::make_unique<DiffInstance>(restrict_frame(f_, keep));
  }
  std::optional<std::string> violation() const override {
    const Frame e = expand(f_, Expansion::difference, "ne");
    const ModalityId ne = f_.modality_count();
    const Relation cover = e.relation(ne) | Relation::identity(e.size());
    if (!(cover == Relation::full(e.size()))) return std::string("R_ne u Id is not the full relation");
    const auto axioms = difference_axioms(f_.alphabet().all(), ne);
    for (std::size_t i = 0; i < axioms.size(); ++i) {
      if (!validity_bruteforce(e, axioms[i])) {
        return "axiom " + std::to_string(i) + " fails: " + print_formula(axioms[i], e.alphabet());
      }
    }
    return std::nullopt;
  }
  nlohmann::ordered_json to_json() const override { return frame_to_json(f_); }

 private:
  Frame f_;
};

InstancePtr gen_diff(std::mt19937_64& rng, const SuiteContext& ctx) {
  return std::make_unique<DiffInstance>(random_frame(ctx.spec, rng));
}

// ---------------------------------------------------------------- definability

class DefinabilityInstance : public Instance {
 public:
  DefinabilityInstance(Model model, PointSet y, JankovOptions o)
      : model_(std::move(model)), y_(std::move(y)), o_(o) {}
  std::size_t points() const override { return model_.frame.size(); }
  InstancePtr restrict(const std::vector<std::size_t>& keep) const override {
    PointSet y = restrict_set(y_, keep);
    if (y.empty()) return nullptr;
    return std::make_unique<DefinabilityInstance>(restrict_model(model_, keep), std::move(y), o_);
  }
  std::optional<std::string> violation() const override {
    const DefinabilityReport rep = verify_definability(model_, y_, o_);
    if (!rep.violations.empty()) {
      const auto& v = rep.violations.front();
      return "definability lemma fails at a=" + std::to_string(v.a) + " b=" + std::to_string(v.b) +
             " (beta holds: " + yes_no(v.beta_holds) + ", equivalent: " + yes_no(v.equivalent) + "), " +
             std::to_string(rep.violations.size()) + " violating pairs";
    }
    if (!rep.depth_ok()) {
      return "depth(beta)=" + std::to_string(rep.max_beta_depth) + " exceeds " + std::to_string(rep.depth_bound);
    }
    const StableTop top = stable_top(model_, y_, o_);
    for (const auto& c : top.checks) {
      if (!c.passed) return "stable top check '" + c.name + "' fails: " + c.detail;
    }
    return std::nullopt;
  }
  nlohmann::ordered_json to_json() const override {
    auto j = model_to_json(model_);
    j["upset"] = set_json(y_);
    return j;
  }

 private:
  Model model_;
  PointSet y_;
  JankovOptions o_;
};

InstancePtr gen_definability(std::mt19937_64& rng, const SuiteContext& ctx) {
  Frame f = random_frame(ctx.spec, rng);
  const std::size_t n = f.size();
  const std::size_t k = uniform(rng, 0, 2);
  auto val = random_valuation(n, k, rng);
  PointSet seed(n);
  seed.insert(uniform(rng, 0, n - 1));
  for (std::size_t a = 0; a < n; ++a)
    if (coin(rng, 0.2)) seed.insert(a);
  PointSet y = generated_upset(f, seed);
  JankovOptions o;
  if (ctx.config->mutation == Mutation::drop_jank2) o.include_back = false;
  return std::make_unique<DefinabilityInstance>(Model(std::move(f), std::move(val)), std::move(y), o);
}

// ---------------------------------------------------------------- registry

struct Suite {
  const char* id;
  GenSpec spec;
  std::function<InstancePtr(std::mt19937_64&, const SuiteContext&)> generate;
  /// Upper bound on max_points imposed by exact modal depth (0 = none).
  std::size_t max_points_limit = 0;
};

GenSpec make_spec(std::size_t lo, std::size_t hi, std::size_t mods, FrameClass c = FrameClass::any,
                  std::optional<std::size_t> max_height = std::nullopt, std::size_t m = 1, double density = 0.35) {
  GenSpec s;
  s.min_points = lo;
  s.max_points = hi;
  s.modalities = mods;
  s.frame_class = c;
  s.max_height = max_height;
  s.m = m;
  s.density = density;
  return s;
}

const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites = {
      {"tuned-equivalences", make_spec(1, 5, 2), gen_tuned},
      {"height-correspondence", make_spec(1, 4, 2), gen_height},
      {"atr-correspondence", make_spec(1, 4, 2), gen_atr},
      {"rpp-correspondence", make_spec(1, 4, 2), gen_rpp},
      {"md-sum", make_spec(1, 4, 2), gen_md_sum, 4},
      {"top-down", make_spec(1, 8, 2), gen_top_down, kExactDepthMaxPoints},
      {"cluster-bound", make_spec(1, 8, 1, FrameClass::preorder, 3), gen_cluster_bound, kExactDepthMaxPoints},
      {"lex-phi", make_spec(1, 6, 2), gen_lex},
      {"diff-axioms", make_spec(1, 4, 2), gen_diff},
      {"definability", make_spec(1, 8, 2, FrameClass::pretransitive, std::nullopt, 2), gen_definability},
      {"byrd-frame", make_spec(4, 8, 1), nullptr},
  };
  return suites;
}

const Suite& find_suite(const std::string& id) {
  for (const auto& s : registry())
    if (id == s.id) return s;
  throw InvalidInput("unknown suite '" + id + "'");
}

// Runs fn(trial) for every trial on `threads` workers; results land in trial order.
template <class Fn>
std::vector<std::optional<AuditFailure>> run_trials(std::size_t trials, std::size_t threads, Fn fn) {
  std::vector<std::optional<AuditFailure>> out(trials);
  std::vector<std::exception_ptr> errors(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < trials;) {
      try {
        out[t] = fn(t);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(trials, 1));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  // Report the lowest failing trial's error so the outcome does not depend on scheduling.
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

InstancePtr minimize(InstancePtr inst) {
  bool shrunk = true;
  while (shrunk && inst->points() > 1) {
    shrunk = false;
    for (std::size_t drop = 0; drop < inst->points(); ++drop) {
      std::vector<std::size_t> keep;
      for (std::size_t p = 0; p < inst->points(); ++p)
        if (p != drop) keep.push_back(p);
      InstancePtr smaller = inst->restrict(keep);
      if (smaller && smaller->violation()) {
        inst = std::move(smaller);
        shrunk = true;
        break;
      }
    }
  }
  return inst;
}

// Truncation of the frame on the naturals where a sees b iff |a - b| != 1.
Frame byrd_truncation(std::size_t n) {
  Relation r(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a + 1 != b && b + 1 != a) r.add(a, b);
  return Frame(Alphabet::numbered(1), n, {r});
}

AuditReport run_byrd(const AuditConfig& config, nlohmann::ordered_json cfg) {
  AuditReport rep;
  rep.suite = "byrd-frame";
  rep.seed = config.seed;
  rep.config = std::move(cfg);
  for (std::size_t n = 4; n <= 8; ++n) {
    const Frame f = byrd_truncation(n);
    const std::size_t tra = transitivity_index(f);
    const std::size_t h = height(f);
    ++rep.trials;
    if (tra == 2 && h == 1) {
      ++rep.passes;
    } else {
      rep.failures.push_back({n - 4, frame_to_json(f),
                              "n=" + std::to_string(n) + " transitivity_index=" + std::to_string(tra) +
                                  " height=" + std::to_string(h) + " (expected 2 and 1)"});
    }
  }
  return rep;
}

}  // namespace

std::vector<std::string> suite_ids() {
  std::vector<std::string> ids;
  for (const auto& s : registry()) ids.emplace_back(s.id);
  return ids;
}

GenSpec default_spec(const std::string& suite) { return find_suite(suite).spec; }

AuditReport run_suite(const std::string& id, const AuditConfig& config) {
  const Suite& suite = find_suite(id);
  SuiteContext ctx{config.spec.value_or(suite.spec), &config};
  ctx.spec.seed = config.seed;
  if (suite.max_points_limit != 0 && ctx.spec.max_points > suite.max_points_limit) {
    throw InvalidInput("suite '" + id + "' needs max_points <= " + std::to_string(suite.max_points_limit));
  }
  if (ctx.spec.min_points == 0 && (id == "definability" || id == "lex-phi")) {
    throw InvalidInput("suite '" + id + "' needs min_points >= 1");
  }

  nlohmann::ordered_json cfg;
  cfg["mutation"] = to_string(config.mutation);
  cfg["spec"] = spec_to_json(ctx.spec);
  if (config.fixed_d) cfg["fixed_d"] = *config.fixed_d;
  if (config.fixed_m) cfg["fixed_m"] = *config.fixed_m;
  cfg["minimize"] = config.minimize;

  if (!suite.generate) return run_byrd(config, std::move(cfg));

  auto results = run_trials(config.trials, config.threads, [&](std::size_t t) -> std::optional<AuditFailure> {
    auto rng = trial_rng(config.seed, t);
    InstancePtr inst = suite.generate(rng, ctx);
    auto v = inst->violation();
    if (!v) return std::nullopt;
    const std::size_t original = inst->points();
    if (config.minimize) {
      inst = minimize(std::move(inst));
      v = inst->violation();
    }
    std::string detail = *v;
    if (inst->points() != original) detail += " (minimized from " + std::to_string(original) + " points)";
    return AuditFailure{t, inst->to_json(), detail};
  });

  AuditReport rep;
  rep.suite = id;
  rep.seed = config.seed;
  rep.trials = config.trials;
  rep.config = std::move(cfg);
  for (auto& r : results) {
    if (r) {
      rep.failures.push_back(std::move(*r));
    } else {
      ++rep.passes;
    }
  }
  return rep;
}

}  // namespace modalwb
