#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "modalwb/frame.hpp"
#include "modalwb/partition.hpp"

namespace modalwb {

struct Model;

/// {"alphabet": [...], "points": n, "rel": {name: [[a,b], ...]}}; pairs in ascending order.
nlohmann::ordered_json frame_to_json(const Frame& frame);
/// Throws InvalidInput on malformed documents.
Frame frame_from_json(const nlohmann::json& doc);

/// The frame format plus "valuation": [[points of p0], [points of p1], ...].
nlohmann::ordered_json model_to_json(const Model& model);
Model model_from_json(const nlohmann::json& doc);

nlohmann::ordered_json partition_to_json(const Partition& partition);

Frame load_frame(const std::filesystem::path& path);
void save_frame(const Frame& frame, const std::filesystem::path& path);

/// Graphviz digraph: one edge colour per modality, clusters of size > 1 drawn as boxes.
std::string to_dot(const Frame& frame);

}  // namespace modalwb
