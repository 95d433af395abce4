// modalwb: command-line front end for the frame workbench.
//
// Exit status: 0 success, 1 the checked property fails, 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "modalwb/audit.hpp"
#include "modalwb/error.hpp"
#include "modalwb/formula.hpp"
#include "modalwb/frame.hpp"
#include "modalwb/frame_io.hpp"
#include "modalwb/partitions.hpp"
#include "modalwb/semantics.hpp"

using namespace modalwb;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFails = 1;
constexpr int kUsage = 2;

bool g_json = false;

// MODALWB_CAP replaces the built-in default; an explicit --cap wins over both.
std::uint64_t resolve_cap(const std::optional<std::uint64_t>& flag, std::uint64_t fallback) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MODALWB_CAP")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw InvalidInput(std::string("MODALWB_CAP is not a number: '") + env + "'");
  }
  return fallback;
}

void emit(const ojson& j, const std::string& text) {
  if (g_json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

std::string line(const std::string& key, const std::string& value) { return key + ": " + value + "\n"; }

int frame_info(const std::string& path) {
  const Frame f = load_frame(path);
  const std::size_t tra = transitivity_index(f);
  const std::size_t h = height(f);
  const std::size_t clusters = skeleton(f).clusters.block_count();
  // Every path through more than n points repeats one, so some m <= n always works.
  std::optional<std::size_t> rpp;
  bool budget = false;
  try {
    for (std::size_t m = 0; m <= f.size(); ++m) {
      if (is_path_reducible(f, m)) {
        rpp = m;
        break;
      }
    }
  } catch (const BudgetExceeded&) {
    budget = true;
  }
  ojson j;
  j["points"] = f.size();
  j["alphabet"] = f.alphabet().names();
  j["transitivity_index"] = tra;
  j["height"] = h;
  j["clusters"] = clusters;
  j["path_reducible_from"] = rpp ? ojson(*rpp) : ojson(nullptr);
  std::string names;
  for (const auto& n : f.alphabet().names()) names += (names.empty() ? "" : " ") + n;
  std::string text = line("points", std::to_string(f.size())) + line("alphabet", names) +
                     line("transitivity_index", std::to_string(tra)) + line("height", std::to_string(h)) +
                     line("clusters", std::to_string(clusters)) +
                     line("path_reducible_from", rpp ? std::to_string(*rpp) : budget ? "unknown (budget)" : "none");
  emit(j, text);
  return kOk;
}

int frame_md(const std::string& path, bool exact, std::optional<std::size_t> sample, std::uint64_t seed) {
  const Frame f = load_frame(path);
  if (exact && sample) throw InvalidInput("--exact and --sample are mutually exclusive");
  const FrameDepth d = sample ? frame_modal_depth(f, SampledDepth{*sample, seed}) : frame_modal_depth(f);
  ojson j;
  j["modal_depth"] = d.value;
  j["exact"] = d.exact;
  j["witness"] = partition_to_json(d.witness);
  emit(j, line("modal_depth", std::to_string(d.value) + (d.exact ? "" : " (lower bound)")) +
              line("witness", d.witness.to_string()));
  return kOk;
}

int check(const std::string& path, const std::string& text, std::optional<std::uint64_t> cap_flag) {
  const Frame f = load_frame(path);
  const Formula phi = parse(text, f.alphabet());
  ValidityOptions opts;
  opts.cap = resolve_cap(cap_flag, kDefaultValidityCap);
  const auto counter = find_countervaluation(f, phi, opts);
  ojson j;
  j["formula"] = print_formula(phi, f.alphabet());
  j["valid"] = !counter;
  std::string out = line("formula", print_formula(phi, f.alphabet())) + line("valid", counter ? "false" : "true");
  if (counter) {
    const Model m(f, *counter);
    const PointSet where = extent(m, phi).complement();
    ojson val = ojson::object();
    for (std::size_t v : variables(phi)) {
      val["p" + std::to_string(v)] = (*counter)[v].to_vector();
      out += line("p" + std::to_string(v), (*counter)[v].to_string());
    }
    j["countervaluation"] = std::move(val);
    j["fails_at"] = where.to_vector();
    out += line("fails_at", where.to_string());
  }
  emit(j, out);
  return counter ? kPropertyFails : kOk;
}

int count(const std::string& path, std::size_t k, std::optional<std::uint64_t> cap_flag) {
  const Frame f = load_frame(path);
  const AlgebraSize s = count_k_formulas(f, k, resolve_cap(cap_flag, std::uint64_t{1} << 12));
  ojson j;
  j["k"] = k;
  j["atoms"] = s.atoms;
  j["count"] = s.to_string();
  emit(j, line("count", s.to_string()) + line("atoms", std::to_string(s.atoms)));
  return kOk;
}

int tune(const std::string& path, const std::string& sets) {
  const Frame f = load_frame(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(sets);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("--sets is not JSON: ") + e.what());
  }
  if (!doc.is_array()) throw InvalidInput("--sets must be an array of point arrays");
  std::vector<PointSet> family;
  for (const auto& s : doc) {
    if (!s.is_array()) throw InvalidInput("--sets must be an array of point arrays");
    PointSet ps(f.size());
    for (const auto& p : s) {
      if (!p.is_number_unsigned() || p.get<std::size_t>() >= f.size()) throw InvalidInput("point out of range in --sets");
      ps.insert(p.get<std::size_t>());
    }
    family.push_back(std::move(ps));
  }
  const Refinement r = refine_sequence(f, family);
  ojson j;
  j["partition"] = partition_to_json(r.final());
  j["stabilization"] = r.stabilization;
  j["subalgebra_size"] = AlgebraSize{r.final().block_count()}.to_string();
  emit(j, line("partition", r.final().to_string()) + line("stabilization", std::to_string(r.stabilization)) +
              line("subalgebra_size", AlgebraSize{r.final().block_count()}.to_string()));
  return kOk;
}

int audit(const std::string& suite, const AuditConfig& config, const std::string& out) {
  const AuditReport rep = run_suite(suite, config);
  if (!out.empty()) emit_report(rep, out);
  if (g_json) {
    std::cout << rep.to_json().dump(2) << '\n';
  } else {
    std::cout << rep.suite << ": " << rep.passes << "/" << rep.trials << " passed\n";
    for (const auto& f : rep.failures) std::cout << "  trial " << f.trial << ": " << f.detail << '\n';
  }
  return rep.ok() ? kOk : kPropertyFails;
}

int export_dot(const std::string& path) {
  const Frame f = load_frame(path);
  const std::string dot = to_dot(f);
  ojson j;
  j["dot"] = dot;
  emit(j, dot);
  return kOk;
}

int report_error(const std::string& message) {
  if (g_json) {
    ojson j;
    j["error"] = message;
    std::cout << j.dump(2) << '\n';
  }
  std::cerr << "modalwb: " << message << '\n';
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite polymodal Kripke frame workbench"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "Print machine-readable JSON");

  std::string path, formula, sets, suite, out;
  std::optional<std::uint64_t> cap;
  std::optional<std::size_t> sample;
  std::uint64_t seed = 1;
  bool exact = false;
  std::size_t k = 0;

  auto* frame = app.add_subcommand("frame", "Inspect a frame file");
  frame->require_subcommand(1);
  auto* info = frame->add_subcommand("info", "Size, transitivity index, height, clusters");
  info->add_option("path", path, "Frame JSON file")->required();
  auto* md = frame->add_subcommand("md", "Modal depth of the frame");
  md->add_option("path", path, "Frame JSON file")->required();
  md->add_flag("--exact", exact, "Enumerate every initial partition (default; n <= 8)");
  md->add_option("--sample", sample, "Maximum over N random initial partitions (a lower bound)");
  md->add_option("--seed", seed, "Seed for --sample");

  auto* chk = app.add_subcommand("check", "Brute-force validity of a formula");
  chk->add_option("path", path, "Frame JSON file")->required();
  chk->add_option("formula", formula, "Formula text")->required();
  chk->add_option("--cap", cap, "Maximum number of valuations");

  auto* cnt = app.add_subcommand("count", "Number of non-equivalent k-formulas in the frame's logic");
  cnt->add_option("path", path, "Frame JSON file")->required();
  cnt->add_option("-k", k, "Variable count")->required();
  cnt->add_option("--cap", cap, "Maximum number of valuations");

  auto* tn = app.add_subcommand("tune", "Coarsest tuned refinement of the partition induced by sets");
  tn->add_option("path", path, "Frame JSON file")->required();
  tn->add_option("--sets", sets, "JSON array of point arrays, e.g. [[0],[1,2]]")->required();

  AuditConfig config;
  std::string mutation = "none";
  bool no_minimize = false;
  auto* aud = app.add_subcommand("audit", "Run a property suite");
  aud->add_option("suite", suite, "Suite id")->required()->check(CLI::IsMember(suite_ids()));
  aud->add_option("--trials", config.trials, "Number of trials");
  aud->add_option("--seed", config.seed, "Seed");
  aud->add_option("--out", out, "Write the JSON report here");
  aud->add_option("--threads", config.threads, "Worker threads (0 = all cores)");
  aud->add_option("--mutation", mutation, "Deliberately broken variant")
      ->check(CLI::IsMember({"none", "drop_jank2", "tuned_ignore_modality"}));
  aud->add_flag("--no-minimize", no_minimize, "Keep counterexamples at their generated size");
  std::optional<std::size_t> min_points, max_points, modalities, gen_m, max_height;
  std::optional<double> density;
  std::string frame_class;
  aud->add_option("--fixed-d", config.fixed_d, "cluster-bound: use this d instead of the derived one");
  aud->add_option("--fixed-m", config.fixed_m, "cluster-bound: use this m instead of the transitivity index");
  aud->add_option("--class", frame_class, "Generator class")
      ->check(CLI::IsMember({"any", "preorder", "transitive", "wK4", "pretransitive"}));
  aud->add_option("--min-points", min_points, "Generator: fewest points");
  aud->add_option("--max-points", max_points, "Generator: most points");
  aud->add_option("--modalities", modalities, "Generator: alphabet size");
  aud->add_option("--density", density, "Generator: edge probability");
  aud->add_option("--m", gen_m, "Generator: m for the pretransitive class");
  aud->add_option("--max-height", max_height, "Generator: height bound");

  auto* exp = app.add_subcommand("export", "Export a frame");
  exp->require_subcommand(1);
  auto* dot = exp->add_subcommand("dot", "Graphviz DOT on stdout");
  dot->add_option("path", path, "Frame JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*info) return frame_info(path);
    if (*md) return frame_md(path, exact, sample, seed);
    if (*chk) return check(path, formula, cap);
    if (*cnt) return count(path, k, cap);
    if (*tn) return tune(path, sets);
    if (*aud) {
      config.mutation = *mutation_from_string(mutation);
      config.minimize = !no_minimize;
      if (min_points || max_points || modalities || gen_m || max_height || density || !frame_class.empty()) {
        GenSpec spec = default_spec(suite);
        if (min_points) spec.min_points = *min_points;
        if (max_points) spec.max_points = *max_points;
        if (modalities) spec.modalities = *modalities;
        if (gen_m) spec.m = *gen_m;
        if (max_height) spec.max_height = *max_height;
        if (density) spec.density = *density;
        if (!frame_class.empty()) spec.frame_class = *frame_class_from_string(frame_class);
        config.spec = spec;
      }
      return audit(suite, config, out);
    }
    if (*dot) return export_dot(path);
  } catch (const std::exception& e) {
    return report_error(e.what());
  }
  return kUsage;
}
