#include "fbc/spec_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fbc {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SpecError(std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw SpecError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

std::string string_at(const json& obj, const std::string& key,
                      const char* table) {
  if (!obj.contains(key))
    throw SpecError(std::string(table) + " has no entry for '" + key + "'");
  const auto& v = obj.at(key);
  if (!v.is_string())
    throw SpecError(std::string(table) + " entry for '" + key +
                    "' is not a string");
  return v.get<std::string>();
}

// Parses a word and insists it was written freely reduced.
Word parse_tight(const Alphabet& alphabet, const std::string& text,
                 const std::string& what) {
  auto raw = alphabet.parse_raw(text);
  Word w(raw);
  if (w.size() != raw.size()) throw SpecError(what + " is not freely reduced");
  return w;
}

void reject_extra_keys(const json& table, const Alphabet& names,
                       const char* what) {
  for (const auto& [k, v] : table.items())
    if (names.find(k) == names.rank())
      throw SpecError(std::string(what) + " names unknown '" + k + "'");
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SpecError("cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Automorphism parse_automorphism(const std::string& json_text) {
  json spec = parse_json(json_text);
  const auto& rank_field = field(spec, "rank");
  if (!rank_field.is_number_integer() || rank_field.get<long>() < 1)
    throw SpecError("rank must be an integer >= 1");
  const auto rank = rank_field.get<std::size_t>();

  std::vector<std::string> names;
  const auto& gens = field(spec, "generators");
  if (!gens.is_array()) throw SpecError("generators must be an array");
  for (const auto& g : gens) {
    if (!g.is_string()) throw SpecError("generator names must be strings");
    names.push_back(g.get<std::string>());
  }
  if (names.size() != rank)
    throw SpecError("generators lists " + std::to_string(names.size()) +
                    " names but rank is " + std::to_string(rank));
  for (const auto& n : names)
    if (n == "t" || n == "tau")
      throw SpecError("generator name '" + n + "' is reserved");
  Alphabet alphabet(names);

  const auto& images = field(spec, "images");
  const auto& inverses = field(spec, "inverse_images");
  if (!images.is_object() || !inverses.is_object())
    throw SpecError("images and inverse_images must be objects");
  reject_extra_keys(images, alphabet, "images");
  reject_extra_keys(inverses, alphabet, "inverse_images");

  std::vector<Word> img, inv;
  for (const auto& n : names) {
    img.push_back(parse_tight(alphabet, string_at(images, n, "images"),
                              "image of '" + n + "'"));
    inv.push_back(parse_tight(alphabet,
                              string_at(inverses, n, "inverse_images"),
                              "inverse image of '" + n + "'"));
  }
  return Automorphism(std::move(alphabet), std::move(img), std::move(inv));
}

Automorphism load_phi(const std::filesystem::path& path) {
  return parse_automorphism(read_file(path));
}

GraphMap parse_graph_map(const std::string& json_text) {
  json spec = parse_json(json_text);
  const auto& vs = field(spec, "vertices");
  if (!vs.is_array() || vs.empty())
    throw SpecError("vertices must be a non-empty array");
  std::vector<std::string> vertex_names;
  for (const auto& v : vs) {
    if (!v.is_string()) throw SpecError("vertex names must be strings");
    vertex_names.push_back(v.get<std::string>());
  }
  // Vertex names obey the generator-name syntax, so an Alphabet indexes them.
  Alphabet vertex_index(vertex_names);

  auto vertex_id = [&](const json& v, const std::string& what) {
    if (!v.is_string()) throw SpecError(what + " must be a vertex name");
    auto id = vertex_index.find(v.get<std::string>());
    if (id == vertex_index.rank())
      throw SpecError(what + " names unknown vertex '" +
                      v.get<std::string>() + "'");
    return id;
  };

  std::vector<GraphEdge> edges;
  const auto& es = field(spec, "edges");
  if (!es.is_array()) throw SpecError("edges must be an array");
  for (const auto& e : es) {
    const auto& name = field(e, "name");
    if (!name.is_string()) throw SpecError("edge name must be a string");
    auto n = name.get<std::string>();
    edges.push_back({n, vertex_id(field(e, "from"), "edge '" + n + "' from"),
                     vertex_id(field(e, "to"), "edge '" + n + "' to")});
  }
  MarkedGraph graph(vertex_names, edges);

  const auto& vimg = field(spec, "vertex_image");
  if (!vimg.is_object()) throw SpecError("vertex_image must be an object");
  reject_extra_keys(vimg, vertex_index, "vertex_image");
  std::vector<std::size_t> vertex_images;
  for (const auto& v : vertex_names) {
    if (!vimg.contains(v))
      throw SpecError("vertex_image has no entry for '" + v + "'");
    vertex_images.push_back(vertex_id(vimg.at(v), "vertex_image of '" + v + "'"));
  }

  const auto& eimg = field(spec, "edge_image");
  if (!eimg.is_object()) throw SpecError("edge_image must be an object");
  reject_extra_keys(eimg, graph.edge_alphabet(), "edge_image");
  std::vector<Word> edge_images;
  for (const auto& e : edges)
    edge_images.push_back(parse_tight(graph.edge_alphabet(),
                                      string_at(eimg, e.name, "edge_image"),
                                      "edge_image of '" + e.name + "'"));
  return GraphMap(std::move(graph), std::move(vertex_images),
                  std::move(edge_images));
}

GraphMap load_graph_map(const std::filesystem::path& path) {
  return parse_graph_map(read_file(path));
}

}  // namespace fbc
