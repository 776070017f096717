#pragma once

#include <filesystem>
#include <string>

#include "fbc/automorphism.hpp"
#include "fbc/graph_map.hpp"

namespace fbc {

/// Automorphism spec:
///   {"rank": 2, "generators": ["a","b"],
///    "images": {"a": "a b", "b": "a"},
///    "inverse_images": {"a": "b", "b": "b^-1 a"}}
/// Images must be written freely reduced. Generator names `t` and `tau` are
/// reserved. Throws SpecError naming the offending field or generator.
Automorphism parse_automorphism(const std::string& json_text);
Automorphism load_phi(const std::filesystem::path& path);

/// Graph-map spec:
///   {"vertices": ["v","w"],
///    "edges": [{"name": "e", "from": "v", "to": "w"}],
///    "vertex_image": {"v": "w", "w": "v"},
///    "edge_image": {"e": "e^-1"}}
GraphMap parse_graph_map(const std::string& json_text);
GraphMap load_graph_map(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

}  // namespace fbc
