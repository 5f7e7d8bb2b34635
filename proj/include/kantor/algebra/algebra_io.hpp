#pragma once

// Algebra files: a JSON document
//   {"dim": n, "basis": [labels], "c": n x n x n nested array, "field": "Q" | "GF(p)"}
// with rationals written as "n" / "n/d" strings and GF(p) values as integers.
// write_algebra produces the canonical text; parse -> write reproduces it
// byte for byte.

#include "kantor/algebra/algebra.hpp"
#include "kantor/exactmath/field.hpp"

#include <json.hpp>

#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace kantor {

struct AlgebraFile {
  FieldSpec field;
  std::variant<AlgebraDef<Rational>, AlgebraDef<ModInt>> algebra;

  std::size_t dim() const {
    return std::visit([](const auto& a) { return a.dim(); }, algebra);
  }
};

class AlgebraParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::string scalar_literal(const Rational& x) { return "\"" + to_string(x) + "\""; }
inline std::string scalar_literal(const ModInt& x) { return std::to_string(x.value()); }

template <class Field>
typename Field::value_type parse_scalar(const Field& fld, const nlohmann::json& j, const std::string& where) {
  try {
    if (j.is_string()) return fld.parse(j.get<std::string>());
    if (j.is_number_integer()) return fld.from_int(j.get<std::int64_t>());
  } catch (const std::exception& e) {
    throw AlgebraParseError(where + ": " + e.what());
  }
  throw AlgebraParseError(where + ": expected a scalar literal, got " + j.dump());
}

template <class Field>
AlgebraDef<typename Field::value_type> parse_tensor(const Field& fld, const nlohmann::json& doc, std::size_t n,
                                                    std::vector<std::string> labels) {
  const auto& c = doc.at("c");
  auto expect_array = [](const nlohmann::json& j, std::size_t len, const std::string& where) {
    if (!j.is_array() || j.size() != len) {
      throw AlgebraParseError(where + ": expected an array of length " + std::to_string(len));
    }
  };
  expect_array(c, n, "field 'c'");
  std::vector<typename Field::value_type> tensor(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    expect_array(c[i], n, "c[" + std::to_string(i) + "]");
    for (std::size_t j = 0; j < n; ++j) {
      const std::string where = "c[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      expect_array(c[i][j], n, where);
      for (std::size_t k = 0; k < n; ++k)
        tensor[(i * n + j) * n + k] = parse_scalar(fld, c[i][j][k], where + "[" + std::to_string(k) + "]");
    }
  }
  return AlgebraDef<typename Field::value_type>(n, std::move(tensor), std::move(labels));
}

}  // namespace detail

inline AlgebraFile parse_algebra(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw AlgebraParseError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw AlgebraParseError("algebra document must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned()) {
    throw AlgebraParseError("field 'dim': missing or not a non-negative integer");
  }
  const auto n = doc["dim"].get<std::size_t>();
  if (n == 0 || n > 64) throw AlgebraParseError("field 'dim': must lie in 1..64");
  if (!doc.contains("c")) throw AlgebraParseError("field 'c': missing");

  std::vector<std::string> labels;
  if (doc.contains("basis")) {
    if (!doc["basis"].is_array() || doc["basis"].size() != n) {
      throw AlgebraParseError("field 'basis': expected " + std::to_string(n) + " labels");
    }
    for (const auto& l : doc["basis"]) {
      if (!l.is_string()) throw AlgebraParseError("field 'basis': labels must be strings");
      labels.push_back(l.get<std::string>());
    }
  } else {
    for (std::size_t i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
  }

  FieldSpec field = FieldSpec::rationals();
  if (doc.contains("field")) {
    if (!doc["field"].is_string()) throw AlgebraParseError("field 'field': expected a string");
    try {
      field = FieldSpec::parse(doc["field"].get<std::string>());
    } catch (const std::exception& e) {
      throw AlgebraParseError(std::string("field 'field': ") + e.what());
    }
  }
  if (field.is_rational()) return {field, detail::parse_tensor(RationalField{}, doc, n, std::move(labels))};
  return {field, detail::parse_tensor(PrimeField(field.p), doc, n, std::move(labels))};
}

inline AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw AlgebraParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_algebra(ss.str());
  } catch (const AlgebraParseError& e) {
    throw AlgebraParseError(path + ": " + e.what());
  }
}

template <class T>
std::string write_algebra(const AlgebraDef<T>& a, const FieldSpec& field) {
  const std::size_t n = a.dim();
  std::ostringstream out;
  out << "{\n  \"dim\": " << n << ",\n  \"basis\": [";
  for (std::size_t i = 0; i < n; ++i) out << (i ? ", " : "") << nlohmann::json(a.labels()[i]).dump();
  out << "],\n  \"c\": [\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "    [";
    for (std::size_t j = 0; j < n; ++j) {
      out << (j ? ", " : "") << "[";
      for (std::size_t k = 0; k < n; ++k) out << (k ? ", " : "") << detail::scalar_literal(a.c(i, j, k));
      out << "]";
    }
    out << "]" << (i + 1 < n ? "," : "") << "\n";
  }
  out << "  ],\n  \"field\": " << nlohmann::json(field.name()).dump() << "\n}\n";
  return out.str();
}

inline std::string write_algebra(const AlgebraFile& file) {
  return std::visit([&](const auto& a) { return write_algebra(a, file.field); }, file.algebra);
}

}  // namespace kantor
