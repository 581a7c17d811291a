#include "qrf/io.hpp"

#include <cctype>
#include <cmath>
#include <fstream>

#include "qrf/errors.hpp"

namespace qrf {
namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(const std::string& text) : s_(text) {}

  double parse() {
    skip();
    double sign = 1.0;
    if (peek() == '-' || peek() == '+') {
      if (s_[pos_] == '-') sign = -1.0;
      ++pos_;
    }
    double v = factor();
    for (skip(); pos_ < s_.size(); skip()) {
      const char op = s_[pos_++];
      const double rhs = factor();
      if (op == '*') v *= rhs;
      else if (op == '/') v /= rhs;
      else fail();
    }
    return sign * v;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail() const { throw FormatError("cannot parse real expression '" + s_ + "'"); }

  double factor() {
    skip();
    if (s_.compare(pos_, 5, "sqrt(") == 0) {
      pos_ += 5;
      const double inner = number();
      skip();
      if (peek() != ')') fail();
      ++pos_;
      return std::sqrt(inner);
    }
    return number();
  }

  double number() {
    skip();
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s_.substr(pos_), &used);
    } catch (const std::exception&) {
      fail();
    }
    pos_ += used;
    return v;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

Complex scale_of(const Json& j) { return j.contains("scale") ? parse_complex(j.at("scale")) : Complex{1.0}; }

}  // namespace

double parse_real_expression(const std::string& text) { return ExpressionParser(text).parse(); }

double parse_real(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return parse_real_expression(j.get<std::string>());
  throw FormatError("expected a real number, got " + j.dump());
}

Complex parse_complex(const Json& j) {
  if (j.is_object()) {
    const double re = j.contains("re") ? parse_real(j.at("re")) : 0.0;
    const double im = j.contains("im") ? parse_real(j.at("im")) : 0.0;
    return {re, im};
  }
  return {parse_real(j), 0.0};
}

Json complex_to_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

std::vector<Complex> vector_from_json(const Json& j) {
  const Json& values = j.is_object() ? j.at("values") : j;
  if (!values.is_array()) throw FormatError("expected an array of complex numbers");
  const Complex s = j.is_object() ? scale_of(j) : Complex{1.0};
  std::vector<Complex> out;
  for (const auto& v : values) out.push_back(s * parse_complex(v));
  return out;
}

ComplexMatrix matrix_from_json(const Json& j) {
  try {
    if (j.is_object() && j.contains("entries")) {
      const auto rows = j.at("rows").get<std::size_t>();
      const auto cols = j.at("cols").get<std::size_t>();
      const auto& e = j.at("entries");
      if (!e.is_array() || e.size() != rows * cols) throw FormatError("matrix entry count does not match rows*cols");
      ComplexMatrix m(rows, cols);
      const Complex s = scale_of(j);
      for (std::size_t k = 0; k < e.size(); ++k) m.entries()[k] = s * parse_complex(e[k]);
      return m;
    }
    const Json& rows = j.is_object() ? j.at("values") : j;
    if (!rows.is_array() || rows.empty() || !rows.front().is_array()) throw FormatError("expected an array of rows");
    const std::size_t cols = rows.front().size();
    ComplexMatrix m(rows.size(), cols);
    const Complex s = j.is_object() ? scale_of(j) : Complex{1.0};
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw FormatError("ragged matrix rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = s * parse_complex(rows[r][c]);
    }
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad matrix: ") + e.what());
  }
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json entries = Json::array();
  for (const auto& z : m.entries()) entries.push_back(complex_to_json(z));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

CayleyTable cayley_from_json(const Json& j) {
  try {
    CayleyTable t;
    t.name = j.value("name", std::string("G"));
    t.compose = j.at("compose").get<std::vector<std::vector<Element>>>();
    t.identity = j.value("identity", 0);
    if (j.contains("labels")) t.labels = j.at("labels").get<std::vector<std::string>>();
    if (j.contains("order") && j.at("order").get<std::size_t>() != t.compose.size()) {
      throw FormatError("declared order does not match the table");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad group table: ") + e.what());
  }
}

GroupPtr parse_group_spec(const std::string& spec) {
  if (spec == "S3") return make_symmetric_group_3();
  std::string digits;
  if (spec.rfind("cyclic:", 0) == 0) digits = spec.substr(7);
  else if (spec.size() > 1 && spec[0] == 'Z') digits = spec.substr(1);
  else throw FormatError("unknown group '" + spec + "' (use S3, cyclic:n or Zn)");
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 6) {
    throw FormatError("bad cyclic order in '" + spec + "'");
  }
  const int n = std::stoi(digits);
  if (n < 1) throw FormatError("cyclic order must be >= 1");
  return make_cyclic_group(n);
}

GroupPtr group_from_json(const Json& j) {
  if (j.is_string()) return parse_group_spec(j.get<std::string>());
  if (!j.is_object()) throw FormatError("bad group description " + j.dump());
  if (j.contains("cyclic")) {
    const int n = j.at("cyclic").get<int>();
    if (n < 1) throw FormatError("cyclic order must be >= 1");
    return make_cyclic_group(n);
  }
  if (j.contains("builtin")) return parse_group_spec(j.at("builtin").get<std::string>());
  return std::make_shared<const GroupTable>(cayley_from_json(j));
}

Json group_to_json(const GroupTable& g) {
  const auto t = g.table();
  return Json{{"name", t.name}, {"order", g.order()}, {"compose", t.compose}, {"identity", t.identity},
              {"labels", t.labels}};
}

BipartiteState state_from_json(const Json& j) {
  try {
    GroupPtr group = j.contains("group") ? group_from_json(j.at("group")) : nullptr;
    ComplexMatrix printed = matrix_from_json(j.at("coeffs"));
    ComplexMatrix coeffs = printed;
    if (j.contains("row_elements")) {
      const auto rows = j.at("row_elements").get<std::vector<std::size_t>>();
      if (rows.size() != printed.rows()) throw FormatError("row_elements must name every row");
      std::vector<bool> seen(rows.size(), false);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r] >= rows.size() || seen[rows[r]]) throw FormatError("row_elements must be a permutation");
        seen[rows[r]] = true;
        for (std::size_t c = 0; c < printed.cols(); ++c) coeffs(rows[r], c) = printed(r, c);
      }
    }
    const std::string frame = j.value("frame", std::string("C"));
    if (j.value("normalize", false)) return BipartiteState::normalized(std::move(coeffs), frame, group);
    return BipartiteState(std::move(coeffs), frame, group);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad state: ") + e.what());
  }
}

ChshSettings settings_from_json(const Json& j) {
  try {
    ChshSettings s;
    for (int k = 0; k < 2; ++k) {
      for (int c = 0; c < 3; ++c) {
        s.alice[k][c] = parse_real(j.at("alice").at(k).at(c));
        s.bob[k][c] = parse_real(j.at("bob").at(k).at(c));
      }
    }
    s.validate();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("bad CHSH settings: ") + e.what());
  }
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError("cannot parse " + path.string() + ": " + e.what());
  }
}

}  // namespace qrf
