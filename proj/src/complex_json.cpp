#include "randcx/complex_json.hpp"

#include <algorithm>
#include <fstream>
#include <set>

namespace randcx {

using nlohmann::json;

json to_json(const Triangle& t) { return json::array({t.a, t.b, t.c}); }
json to_json(const Edge& e) { return json::array({e.a, e.b}); }

json to_json(const Complex2& c) {
  json tris = json::array();
  for (const auto& t : c.triangles()) tris.push_back(to_json(t));
  json extras = json::array();
  for (const auto& e : c.extra_edges()) extras.push_back(to_json(e));
  return json{{"n_vertices", c.n_vertices()}, {"triangles", std::move(tris)}, {"extra_edges", std::move(extras)}};
}

namespace {

template <std::size_t N>
std::array<Vertex, N> read_tuple(const json& j, const char* what, std::size_t index) {
  const std::string where = std::string(what) + "[" + std::to_string(index) + "]";
  if (!j.is_array() || j.size() != N) {
    throw FormatError(where + " must be an array of " + std::to_string(N) + " vertex indices");
  }
  std::array<Vertex, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    if (!j[i].is_number_unsigned()) throw FormatError(where + " contains a non-integer or negative entry");
    out[i] = j[i].get<Vertex>();
    if (i > 0 && out[i] <= out[i - 1]) {
      throw FormatError(where + " = " + j.dump() + " is not strictly increasing");
    }
  }
  return out;
}

}  // namespace

Triangle triangle_from_json(const json& j) {
  auto t = read_tuple<3>(j, "triangle", 0);
  return Triangle{t[0], t[1], t[2]};
}

Complex2 complex_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("complex must be a JSON object");
  if (!j.contains("n_vertices") || !j["n_vertices"].is_number_unsigned()) {
    throw FormatError("missing or invalid \"n_vertices\"");
  }
  const auto n = j["n_vertices"].get<std::size_t>();

  std::vector<std::array<Vertex, 3>> tris;
  if (j.contains("triangles")) {
    const auto& arr = j["triangles"];
    if (!arr.is_array()) throw FormatError("\"triangles\" must be an array");
    std::set<std::array<Vertex, 3>> seen;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto t = read_tuple<3>(arr[i], "triangles", i);
      if (t[2] >= n) throw FormatError("triangles[" + std::to_string(i) + "] uses a vertex >= n_vertices");
      if (!seen.insert(t).second) throw FormatError("duplicate triangle " + arr[i].dump());
      tris.push_back(t);
    }
  }
  std::vector<std::array<Vertex, 2>> extras;
  if (j.contains("extra_edges")) {
    const auto& arr = j["extra_edges"];
    if (!arr.is_array()) throw FormatError("\"extra_edges\" must be an array");
    std::set<std::array<Vertex, 2>> seen;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      auto e = read_tuple<2>(arr[i], "extra_edges", i);
      if (e[1] >= n) throw FormatError("extra_edges[" + std::to_string(i) + "] uses a vertex >= n_vertices");
      if (!seen.insert(e).second) throw FormatError("duplicate extra edge " + arr[i].dump());
      extras.push_back(e);
    }
  }
  return Complex2::from_triangles(n, tris, extras);
}

Complex2 read_complex(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  return complex_from_json(j);
}

void write_complex(const std::filesystem::path& path, const Complex2& c) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << to_json(c).dump() << '\n';
}

}  // namespace randcx
