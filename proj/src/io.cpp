#include "aqg/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace aqg {

namespace {

using nlohmann::ordered_json;

ordered_json complex_to_json(const Complex& c) {
  return ordered_json::array({c.real(), c.imag()});
}

Complex complex_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    fail(ErrorCode::schema_error, "expected [re, im] pair at " + where);
  const Complex c(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
    fail(ErrorCode::schema_error, "non-finite scalar at " + where);
  return c;
}

bool nonzero(const Complex& c) { return c != Complex(0.0, 0.0); }

}  // namespace

std::string serialize_definition(const AlgebraWithComult& input,
                                 const std::string& name) {
  const auto& a = input.algebra;
  const auto n = a.dim();
  ordered_json j;
  j["name"] = name;
  j["dimension"] = n;
  j["basis"] = a.labels();
  auto unit = ordered_json::array();
  for (Eigen::Index i = 0; i < n; ++i) unit.push_back(complex_to_json(a.unit()(i)));
  j["unit"] = unit;

  auto mult = ordered_json::array();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index jj = 0; jj < n; ++jj) {
      auto terms = ordered_json::array();
      for (Eigen::Index k = 0; k < n; ++k) {
        const Complex c = a.structure_constant(i, jj, k);
        if (nonzero(c))
          terms.push_back({{"k", k}, {"c", complex_to_json(c)}});
      }
      if (!terms.empty())
        mult.push_back({{"i", i}, {"j", jj}, {"terms", terms}});
    }
  j["mult"] = mult;

  auto star = ordered_json::array();
  for (Eigen::Index i = 0; i < n; ++i) {
    auto terms = ordered_json::array();
    for (Eigen::Index jj = 0; jj < n; ++jj) {
      const Complex c = a.star_matrix()(jj, i);  // e_i* = sum_j c e_j
      if (nonzero(c)) terms.push_back({{"j", jj}, {"c", complex_to_json(c)}});
    }
    star.push_back({{"i", i}, {"terms", terms}});
  }
  j["star"] = star;

  auto comult = ordered_json::array();
  for (Eigen::Index i = 0; i < n; ++i) {
    auto terms = ordered_json::array();
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = 0; q < n; ++q) {
        const Complex c = input.comult(p * n + q, i);
        if (nonzero(c))
          terms.push_back({{"p", p}, {"q", q}, {"c", complex_to_json(c)}});
      }
    comult.push_back({{"i", i}, {"terms", terms}});
  }
  j["comult"] = comult;
  return j.dump(2) + "\n";
}

AlgebraWithComult parse_definition(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }

  for (const char* key : {"name", "dimension", "basis", "unit", "mult", "star",
                          "comult"})
    if (!j.contains(key))
      fail(ErrorCode::schema_error, std::string("missing field: ") + key);
  if (!j["dimension"].is_number_integer() || j["dimension"].get<int>() <= 0)
    fail(ErrorCode::schema_error, "dimension must be a positive integer");
  const Eigen::Index n = j["dimension"].get<Eigen::Index>();
  if (!j["basis"].is_array() ||
      static_cast<Eigen::Index>(j["basis"].size()) != n)
    fail(ErrorCode::schema_error, "basis labels must match the dimension");
  std::vector<std::string> labels;
  for (const auto& l : j["basis"]) {
    if (!l.is_string()) fail(ErrorCode::schema_error, "basis labels must be strings");
    labels.push_back(l.get<std::string>());
  }

  auto check_index = [&](const nlohmann::json& v, const std::string& where) {
    if (!v.is_number_integer())
      fail(ErrorCode::schema_error, "index must be an integer at " + where);
    const auto idx = v.get<Eigen::Index>();
    if (idx < 0 || idx >= n)
      fail(ErrorCode::schema_error, "index out of range at " + where);
    return idx;
  };

  if (static_cast<Eigen::Index>(j["unit"].size()) != n)
    fail(ErrorCode::schema_error, "unit vector must have length dimension");
  Vector unit(n);
  for (Eigen::Index i = 0; i < n; ++i)
    unit(i) = complex_from_json(j["unit"][i], "unit");

  std::vector<Matrix> left(n, Matrix::Zero(n, n));
  for (const auto& row : j["mult"]) {
    const auto i = check_index(row.at("i"), "mult.i");
    const auto jj = check_index(row.at("j"), "mult.j");
    for (const auto& term : row.at("terms")) {
      const auto k = check_index(term.at("k"), "mult.terms.k");
      left[i](k, jj) += complex_from_json(term.at("c"), "mult.terms.c");
    }
  }

  Matrix star = Matrix::Zero(n, n);
  for (const auto& row : j["star"]) {
    const auto i = check_index(row.at("i"), "star.i");
    for (const auto& term : row.at("terms")) {
      const auto jj = check_index(term.at("j"), "star.terms.j");
      star(jj, i) += complex_from_json(term.at("c"), "star.terms.c");
    }
  }

  Matrix comult = Matrix::Zero(n * n, n);
  for (const auto& row : j["comult"]) {
    const auto i = check_index(row.at("i"), "comult.i");
    for (const auto& term : row.at("terms")) {
      const auto p = check_index(term.at("p"), "comult.terms.p");
      const auto q = check_index(term.at("q"), "comult.terms.q");
      comult(p * n + q, i) += complex_from_json(term.at("c"), "comult.terms.c");
    }
  }

  FiniteStarAlgebra algebra(j["name"].get<std::string>(), std::move(labels),
                            std::move(left), std::move(star), std::move(unit));
  return {std::move(algebra), std::move(comult)};
}

AlgebraWithComult load_definition(const std::string& path, double tol) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::parse_error, "cannot open file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  AlgebraWithComult parsed = parse_definition(buffer.str());
  VerificationReport report(tol);
  parsed.algebra.axiom_suite(report, tol);
  if (!report.all_passed())
    fail(ErrorCode::axiom_rejected,
         "algebra axioms failed: " + report.first_failure()->id);
  return parsed;
}

void write_definition(const std::string& path, const AlgebraWithComult& input,
                      const std::string& name) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::parse_error, "cannot open file for writing: " + path);
  out << serialize_definition(input, name);
}

}  // namespace aqg
