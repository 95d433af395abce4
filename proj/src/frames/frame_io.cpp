#include "modalwb/frame_io.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include "modalwb/error.hpp"
#include "modalwb/semantics.hpp"

namespace modalwb {

namespace {

nlohmann::ordered_json set_to_json(const PointSet& s) {
  auto out = nlohmann::ordered_json::array();
  s.for_each([&](std::size_t p) { out.push_back(p); });
  return out;
}

std::size_t point_index(const nlohmann::json& v, std::size_t n) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw InvalidInput("point index must be a non-negative integer");
  }
  const auto p = v.get<std::size_t>();
  if (p >= n) throw InvalidInput("point " + std::to_string(p) + " out of range");
  return p;
}

}  // namespace

nlohmann::ordered_json frame_to_json(const Frame& frame) {
  nlohmann::ordered_json doc;
  doc["alphabet"] = frame.alphabet().names();
  doc["points"] = frame.size();
  nlohmann::ordered_json rel = nlohmann::ordered_json::object();
  for (ModalityId m = 0; m < frame.modality_count(); ++m) {
    auto pairs = nlohmann::ordered_json::array();
    for (auto [a, b] : frame.relation(m).pairs()) pairs.push_back({a, b});
    rel[frame.alphabet().name(m)] = std::move(pairs);
  }
  doc["rel"] = std::move(rel);
  return doc;
}

Frame frame_from_json(const nlohmann::json& doc) {
  try {
    if (!doc.is_object()) throw InvalidInput("frame document must be an object");
    const auto names = doc.at("alphabet").get<std::vector<std::string>>();
    const Alphabet alphabet = names.empty() ? Alphabet::none() : Alphabet(names);
    const auto& pts = doc.at("points");
    if (!pts.is_number_integer() || pts.get<long long>() < 0) throw InvalidInput("\"points\" must be a non-negative integer");
    const auto n = pts.get<std::size_t>();
    std::vector<Relation> relations(alphabet.size(), Relation(n));
    const nlohmann::json empty = nlohmann::json::object();
    const auto& rel = doc.contains("rel") ? doc.at("rel") : empty;
    if (!rel.is_object()) throw InvalidInput("\"rel\" must be an object");
    for (const auto& [name, pairs] : rel.items()) {
      const auto id = alphabet.find(name);
      if (!id) throw InvalidInput("relation for unknown modality '" + name + "'");
      if (!pairs.is_array()) throw InvalidInput("relation '" + name + "' must be an array of pairs");
      for (const auto& pair : pairs) {
        if (!pair.is_array() || pair.size() != 2) throw InvalidInput("relation '" + name + "' has a malformed pair");
        relations[*id].add(point_index(pair[0], n), point_index(pair[1], n));
      }
    }
    return Frame(alphabet, n, std::move(relations));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed frame document: ") + e.what());
  }
}

nlohmann::ordered_json model_to_json(const Model& model) {
  auto doc = frame_to_json(model.frame);
  auto val = nlohmann::ordered_json::array();
  for (const auto& s : model.valuation) val.push_back(set_to_json(s));
  doc["valuation"] = std::move(val);
  return doc;
}

Model model_from_json(const nlohmann::json& doc) {
  Frame frame = frame_from_json(doc);
  std::vector<PointSet> valuation;
  if (doc.contains("valuation")) {
    for (const auto& ext : doc.at("valuation")) {
      PointSet s(frame.size());
      for (const auto& p : ext) s.insert(point_index(p, frame.size()));
      valuation.push_back(std::move(s));
    }
  }
  return Model(std::move(frame), std::move(valuation));
}

nlohmann::ordered_json partition_to_json(const Partition& partition) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& b : partition.blocks()) out.push_back(set_to_json(b));
  return out;
}

Frame load_frame(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
  return frame_from_json(doc);
}

void save_frame(const Frame& frame, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << frame_to_json(frame).dump(2) << '\n';
  if (!out) throw Error("write failed: " + path.string());
}

std::string to_dot(const Frame& frame) {
  static constexpr std::array<const char*, 8> kColours = {"black", "blue", "red", "darkgreen",
                                                         "orange", "purple", "brown", "gray40"};
  static constexpr std::array<const char*, 3> kStyles = {"solid", "dashed", "dotted"};
  std::ostringstream out;
  out << "digraph frame {\n  node [shape=circle];\n";
  const auto sk = skeleton(frame);
  for (std::size_t c = 0; c < sk.clusters.block_count(); ++c) {
    const auto& block = sk.clusters.block(c);
    if (block.count() > 1) {
      out << "  subgraph cluster_" << c << " {\n    style=rounded;\n";
      block.for_each([&](std::size_t p) { out << "    " << p << ";\n"; });
      out << "  }\n";
    } else {
      out << "  " << *block.first() << ";\n";
    }
  }
  for (ModalityId m = 0; m < frame.modality_count(); ++m) {
    const char* colour = kColours[m % kColours.size()];
    const char* style = kStyles[(m / kColours.size()) % kStyles.size()];
    for (auto [a, b] : frame.relation(m).pairs()) {
      out << "  " << a << " -> " << b << " [label=\"" << frame.alphabet().name(m) << "\", color=" << colour
          << ", style=" << style << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace modalwb
