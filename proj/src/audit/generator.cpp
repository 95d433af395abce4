#include <algorithm>
#include <numeric>

#include "modalwb/audit.hpp"
#include "modalwb/error.hpp"

namespace modalwb {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Cluster layout for bounded height: every point gets a level, every level is cut into
// groups that become clusters; edges between clusters only go to strictly higher levels.
struct Layout {
  std::vector<std::size_t> level;
  std::vector<std::size_t> group;  // cluster id
};

Layout random_layout(std::size_t n, std::size_t levels, std::mt19937_64& rng) {
  Layout out{std::vector<std::size_t>(n), std::vector<std::size_t>(n)};
  for (std::size_t a = 0; a < n; ++a) out.level[a] = uniform(rng, 0, levels - 1);
  // Within a level, each point either joins the previous cluster of that level or starts one.
  std::vector<std::optional<std::size_t>> last(levels);
  std::size_t next = 0;
  for (std::size_t a = 0; a < n; ++a) {
    auto& slot = last[out.level[a]];
    if (slot && coin(rng, 0.5)) {
      out.group[a] = *slot;
    } else {
      out.group[a] = next++;
      slot = out.group[a];
    }
  }
  return out;
}

Relation random_union(const GenSpec& spec, std::size_t n, std::mt19937_64& rng) {
  Relation r(n);
  if (!spec.max_height) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (coin(rng, spec.density)) r.add(a, b);
    return r;
  }
  const Layout lay = random_layout(n, *spec.max_height, rng);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const bool same = lay.group[a] == lay.group[b];
      if ((same || lay.level[a] < lay.level[b]) && coin(rng, spec.density)) r.add(a, b);
    }
  }
  // Make each group strongly connected with a cycle through its members.
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t a = 0; a < n; ++a) {
    if (lay.group[a] >= members.size()) members.resize(lay.group[a] + 1);
    members[lay.group[a]].push_back(a);
  }
  for (const auto& g : members) {
    if (g.size() < 2) continue;
    for (std::size_t i = 0; i < g.size(); ++i) r.add(g[i], g[(i + 1) % g.size()]);
  }
  return r;
}

Relation make_pretransitive(Relation r, std::size_t m) {
  const std::size_t n = r.size();
  if (m == 0) return r.intersect(Relation::identity(n));
  // Adding pairs of R^{m+1} keeps reachability, so clusters and height are unchanged.
  while (true) {
    const Relation extra = power(r, m + 1);
    if (extra.is_subset_of(power_upto(r, m))) return r;
    r |= extra;
  }
}

Relation shape(const GenSpec& spec, Relation r, std::mt19937_64& rng) {
  const std::size_t n = r.size();
  switch (spec.frame_class) {
    case FrameClass::any:
      return r;
    case FrameClass::preorder:
      return rt_closure(r);
    case FrameClass::transitive:
      return transitive_closure(r);
    case FrameClass::wk4: {
      Relation t = transitive_closure(r);
      Relation out(n);
      for (auto [a, b] : t.pairs()) {
        if (a != b || coin(rng, 0.5)) out.add(a, b);
      }
      return out;
    }
    case FrameClass::pretransitive:
      return make_pretransitive(std::move(r), spec.m);
  }
  return r;
}

}  // namespace

const char* to_string(FrameClass c) {
  switch (c) {
    case FrameClass::any: return "any";
    case FrameClass::preorder: return "preorder";
    case FrameClass::transitive: return "transitive";
    case FrameClass::wk4: return "wK4";
    case FrameClass::pretransitive: return "pretransitive";
  }
  return "?";
}

std::optional<FrameClass> frame_class_from_string(const std::string& name) {
  for (auto c : {FrameClass::any, FrameClass::preorder, FrameClass::transitive, FrameClass::wk4,
                 FrameClass::pretransitive}) {
    if (name == to_string(c)) return c;
  }
  return std::nullopt;
}

nlohmann::ordered_json spec_to_json(const GenSpec& spec) {
  nlohmann::ordered_json j;
  j["min_points"] = spec.min_points;
  j["max_points"] = spec.max_points;
  j["modalities"] = spec.modalities;
  j["density"] = spec.density;
  j["class"] = to_string(spec.frame_class);
  if (spec.frame_class == FrameClass::pretransitive) j["m"] = spec.m;
  j["max_height"] = spec.max_height ? nlohmann::ordered_json(*spec.max_height) : nlohmann::ordered_json(nullptr);
  return j;
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  return std::mt19937_64(splitmix(splitmix(seed) ^ splitmix(trial + 0x51ed27f1ULL)));
}

// Plain modulo and shift arithmetic, so streams do not depend on the standard library's
// distribution implementations.
std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  if (hi <= lo) return lo;
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

bool coin(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

Frame random_frame(const GenSpec& spec, std::mt19937_64& rng) {
  if (spec.min_points > spec.max_points) throw InvalidInput("min_points exceeds max_points");
  if (spec.max_height && *spec.max_height == 0 && spec.max_points > 0) {
    throw InvalidInput("height 0 admits only the empty frame");
  }
  if (spec.density < 0 || spec.density > 1) throw InvalidInput("density must lie in [0, 1]");
  const std::size_t n = uniform(rng, spec.min_points, spec.max_points);
  const Relation u = shape(spec, random_union(spec, n, rng), rng);

  const Alphabet alphabet = spec.modalities == 0 ? Alphabet::none() : Alphabet::numbered(spec.modalities);
  std::vector<Relation> rels(spec.modalities, Relation(n));
  if (spec.modalities > 0) {
    // Every union pair goes to one random modality and to each other one with probability 1/2.
    for (auto [a, b] : u.pairs()) {
      const std::size_t owner = uniform(rng, 0, spec.modalities - 1);
      for (std::size_t d = 0; d < spec.modalities; ++d) {
        if (d == owner || coin(rng, 0.5)) rels[d].add(a, b);
      }
    }
  }
  Frame f(alphabet, n, std::move(rels));
  if (!satisfies_spec(f, spec)) throw BudgetExceeded("generated frame escaped its class");
  return f;
}

Frame random_frame(const GenSpec& spec) {
  auto rng = trial_rng(spec.seed, 0);
  return random_frame(spec, rng);
}

bool satisfies_spec(const Frame& frame, const GenSpec& spec) {
  const std::size_t n = frame.size();
  if (n < spec.min_points || n > spec.max_points) return false;
  if (spec.max_height && height(frame) > *spec.max_height) return false;
  const Relation u = union_relation(frame);
  switch (spec.frame_class) {
    case FrameClass::any:
      return true;
    case FrameClass::preorder:
      return Relation::identity(n).is_subset_of(u) && u.then(u).is_subset_of(u);
    case FrameClass::transitive:
      return u.then(u).is_subset_of(u);
    case FrameClass::wk4: {
      const Relation ru = u | Relation::identity(n);
      return ru.then(ru).is_subset_of(ru);
    }
    case FrameClass::pretransitive:
      return is_m_transitive(frame, spec.m);
  }
  return false;
}

const char* to_string(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::drop_jank2: return "drop_jank2";
    case Mutation::tuned_ignore_modality: return "tuned_ignore_modality";
  }
  return "?";
}

std::optional<Mutation> mutation_from_string(const std::string& name) {
  for (auto m : {Mutation::none, Mutation::drop_jank2, Mutation::tuned_ignore_modality}) {
    if (name == to_string(m)) return m;
  }
  return std::nullopt;
}

}  // namespace modalwb
