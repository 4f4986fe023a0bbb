#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "randcx/complex.hpp"

namespace randcx {

/// Raised for malformed complex files; the message names the offending entry.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {"n_vertices": N, "triangles": [[i,j,k],...], "extra_edges": [[i,j],...]}
// Tuples are strictly increasing and lists are written in sorted order.
nlohmann::json to_json(const Complex2& c);
nlohmann::json to_json(const Triangle& t);
nlohmann::json to_json(const Edge& e);

// Rejects unsorted tuples, duplicate entries, and out-of-range indices.
Complex2 complex_from_json(const nlohmann::json& j);
Triangle triangle_from_json(const nlohmann::json& j);

Complex2 read_complex(const std::filesystem::path& path);
void write_complex(const std::filesystem::path& path, const Complex2& c);

}  // namespace randcx
