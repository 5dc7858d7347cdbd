#pragma once

// JSON file formats.
//
// Algebra file:
//   {"format_version": "1", "dim": n, "basis": [labels...],
//    "table": [[i, j, [[k, "p/q"], ...]], ...]}
// meaning b_i b_j = sum (p/q) b_k; omitted pairs are zero products.
//
// Subspace file: {"format_version": "1", "dim": n, "basis": [labels...],
//   "rows": [["p/q", ...], ...]}; "basis" is optional on input and the rows
// are canonicalized on read.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "leibniz/algebra.hpp"

namespace leibniz {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kFormatVersion = "1";

/// Accepts "p", "p/q" and "-p/q"; the result is in lowest terms.
/// Throws Errc::Parse.
Scalar parse_scalar(std::string_view text);

Json algebra_to_json(const LeibnizAlgebra& alg);
/// Structural parse only; the Leibniz identity is not checked here.
LeibnizAlgebra algebra_from_json(const Json& j);

Json subspace_to_json(const Subspace& u, const std::vector<std::string>& labels);
Subspace subspace_from_json(const Json& j, std::size_t ambient_dim);

Json vector_to_json(const Vector& v);

/// Throws Errc::Parse on unreadable files or malformed JSON.
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace leibniz
