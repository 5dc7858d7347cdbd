#include "leibniz/io.hpp"

#include <fstream>

namespace leibniz {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::Parse, what); }

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

std::size_t index_field(const Json& j, std::size_t dim, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    parse_error(std::string(what) + " must be a non-negative integer");
  const auto v = j.get<std::size_t>();
  if (v >= dim) parse_error(std::string(what) + " index " + std::to_string(v) + " out of range");
  return v;
}

std::size_t dim_field(const Json& j) {
  if (!j.is_object()) parse_error("top level must be an object");
  if (!j.contains("format_version") || j.at("format_version") != std::string(kFormatVersion))
    parse_error("unsupported or missing format_version");
  if (!j.contains("dim") || !j.at("dim").is_number_integer() || j.at("dim").get<long long>() < 0)
    parse_error("dim must be a non-negative integer");
  return j.at("dim").get<std::size_t>();
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    parse_error("malformed rational '" + std::string(text) + "'");
  mpz_class p(std::string(num[0] == '+' ? num.substr(1) : num));
  mpz_class q{std::string(den)};
  if (q == 0) parse_error("zero denominator in '" + std::string(text) + "'");
  Scalar s(p, q);
  s.canonicalize();
  return s;
}

Json algebra_to_json(const LeibnizAlgebra& alg) {
  const std::size_t n = alg.dim();
  Json table = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Json terms = Json::array();
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = alg.table()(i, j, k);
        if (sgn(c) != 0) terms.push_back(Json::array({k, to_string(c)}));
      }
      if (!terms.empty()) table.push_back(Json::array({i, j, terms}));
    }
  }
  Json out;
  out["format_version"] = kFormatVersion;
  out["dim"] = n;
  out["basis"] = alg.labels();
  out["table"] = std::move(table);
  return out;
}

LeibnizAlgebra algebra_from_json(const Json& j) {
  const std::size_t n = dim_field(j);
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    if (!j.at("basis").is_array() || j.at("basis").size() != n) parse_error("basis must list dim labels");
    for (const auto& l : j.at("basis")) {
      if (!l.is_string()) parse_error("basis labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    labels = default_labels(n);
  }
  if (!j.contains("table") || !j.at("table").is_array()) parse_error("table must be an array");
  StructureTable table(n);
  std::vector<bool> seen(n * n, false);
  for (const auto& entry : j.at("table")) {
    if (!entry.is_array() || entry.size() != 3 || !entry[2].is_array())
      parse_error("table entries must be [i, j, [[k, \"p/q\"], ...]]");
    const std::size_t a = index_field(entry[0], n, "i");
    const std::size_t b = index_field(entry[1], n, "j");
    if (seen[a * n + b]) parse_error("duplicate table entry for (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    seen[a * n + b] = true;
    for (const auto& term : entry[2]) {
      if (!term.is_array() || term.size() != 2 || !term[1].is_string()) parse_error("terms must be [k, \"p/q\"]");
      const std::size_t k = index_field(term[0], n, "k");
      table(a, b, k) += parse_scalar(term[1].get<std::string>());
    }
  }
  return LeibnizAlgebra::unchecked(std::move(labels), std::move(table));
}

Json vector_to_json(const Vector& v) {
  Json row = Json::array();
  for (const auto& x : v) row.push_back(to_string(x));
  return row;
}

Json subspace_to_json(const Subspace& u, const std::vector<std::string>& labels) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < u.dim(); ++i) rows.push_back(vector_to_json(u.basis_vector(i)));
  Json out;
  out["format_version"] = kFormatVersion;
  out["dim"] = u.ambient_dim();
  out["basis"] = labels;
  out["rows"] = std::move(rows);
  return out;
}

Subspace subspace_from_json(const Json& j, std::size_t ambient_dim) {
  const std::size_t n = dim_field(j);
  if (n != ambient_dim)
    parse_error("subspace dim " + std::to_string(n) + " does not match algebra dim " + std::to_string(ambient_dim));
  if (!j.contains("rows") || !j.at("rows").is_array()) parse_error("rows must be an array");
  std::vector<Vector> rows;
  for (const auto& r : j.at("rows")) {
    if (!r.is_array() || r.size() != n) parse_error("each row must have dim entries");
    Vector v;
    for (const auto& x : r) {
      if (!x.is_string()) parse_error("row entries must be \"p/q\" strings");
      v.push_back(parse_scalar(x.get<std::string>()));
    }
    rows.push_back(std::move(v));
  }
  return Subspace::span(n, rows);
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Precondition, "cannot write " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace leibniz
