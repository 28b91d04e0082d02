#include "cayley/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "cayley/catalog.hpp"
#include "cayley/errors.hpp"

namespace cayley::io {

namespace {

Json real_rows(const ComplexMatrix& m, bool imag) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(imag ? m(i, j).imag() : m(i, j).real());
    rows.push_back(std::move(row));
  }
  return rows;
}

double number_at(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + ": expected a number");
  return j.get<double>();
}

std::vector<double> number_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array");
  std::vector<double> out;
  for (const auto& x : j) out.push_back(number_at(x, what));
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string trim(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

double parse_real(const std::string& text) {
  if (text.empty()) throw ParseError("empty number");
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: '" + text + "'");
  }
  if (used != text.size()) throw ParseError("not a number: '" + text + "'");
  return value;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json j;
  j["n"] = m.rows();
  j["re"] = real_rows(m, false);
  j["im"] = real_rows(m, true);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  const Json& re = field(j, "re");
  if (!re.is_array() || re.empty()) throw ParseError("matrix 're' must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(re.size());
  if (j.contains("n") && (!j.at("n").is_number_integer() || j.at("n").get<Eigen::Index>() != rows)) {
    throw ParseError("matrix 'n' does not match the number of rows");
  }
  ComplexMatrix m(rows, rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto row = number_list(re[static_cast<std::size_t>(i)], "matrix row");
    if (static_cast<Eigen::Index>(row.size()) != rows) throw ParseError("matrix must be square");
    for (Eigen::Index k = 0; k < rows; ++k) m(i, k) = row[static_cast<std::size_t>(k)];
  }
  if (j.contains("im")) {
    const Json& im = j.at("im");
    if (!im.is_array() || static_cast<Eigen::Index>(im.size()) != rows) throw ParseError("matrix 'im' has wrong shape");
    for (Eigen::Index i = 0; i < rows; ++i) {
      const auto row = number_list(im[static_cast<std::size_t>(i)], "matrix row");
      if (static_cast<Eigen::Index>(row.size()) != rows) throw ParseError("matrix 'im' has wrong shape");
      for (Eigen::Index k = 0; k < rows; ++k) m(i, k).imag(row[static_cast<std::size_t>(k)]);
    }
  }
  if (!all_finite(m)) throw ParseError("matrix has non-finite entries");
  return m;
}

Json algebra_vector_to_json(const AlgebraVector& x) {
  Json re = Json::array();
  Json im = Json::array();
  for (Eigen::Index i = 0; i < x.coords.size(); ++i) {
    re.push_back(x.coords(i).real());
    im.push_back(x.coords(i).imag());
  }
  Json j;
  j["coords_re"] = std::move(re);
  j["coords_im"] = std::move(im);
  return j;
}

AlgebraVector algebra_vector_from_json(const Json& j) {
  const auto re = number_list(field(j, "coords_re"), "coords_re");
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("coords_im")) im = number_list(j.at("coords_im"), "coords_im");
  if (im.size() != re.size()) throw ParseError("coords_re and coords_im differ in length");
  AlgebraVector x{ComplexVector(static_cast<Eigen::Index>(re.size()))};
  for (std::size_t i = 0; i < re.size(); ++i) x.coords(static_cast<Eigen::Index>(i)) = Complex(re[i], im[i]);
  return x;
}

Json clifford_to_json(const CliffordElement& u) {
  Json re = Json::array();
  Json im = Json::array();
  for (const auto& c : u.coeffs()) {
    re.push_back(c.real());
    im.push_back(c.imag());
  }
  Json j;
  j["n"] = u.n();
  j["coeffs_re"] = std::move(re);
  j["coeffs_im"] = std::move(im);
  return j;
}

CliffordElement clifford_from_json(const Json& j) {
  const Json& nj = field(j, "n");
  if (!nj.is_number_integer()) throw ParseError("Clifford 'n' must be an integer");
  const int n = nj.get<int>();
  if (n < 0 || n > 16) throw ParseError("Clifford 'n' out of range");
  const auto re = number_list(field(j, "coeffs_re"), "coeffs_re");
  std::vector<double> im(re.size(), 0.0);
  if (j.contains("coeffs_im")) im = number_list(j.at("coeffs_im"), "coeffs_im");
  if (re.size() != (std::size_t{1} << n) || im.size() != re.size()) {
    throw ParseError("Clifford element needs 2^n coefficients");
  }
  std::vector<Complex> coeffs(re.size());
  for (std::size_t i = 0; i < re.size(); ++i) coeffs[i] = Complex(re[i], im[i]);
  return CliffordElement(n, std::move(coeffs));
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(complex_to_json(c));
  return out;
}

Json fiber_report_to_json(const FiberReport& report) {
  Json j;
  j["family"] = std::string(to_string(report.family));
  j["n"] = report.n;
  j["target"] = matrix_to_json(report.target);
  j["polynomial"] = polynomial_to_json(report.polynomial);
  Json roots = Json::array();
  for (const auto& r : report.roots) roots.push_back(complex_to_json(r));
  j["roots"] = std::move(roots);
  j["count"] = report.count;
  j["regular"] = report.regular;
  Json elements = Json::array();
  Json admissible = Json::array();
  Json residuals = Json::array();
  Json lifts = Json::array();
  for (const auto& e : report.elements) {
    elements.push_back(matrix_to_json(e.matrix));
    admissible.push_back(complex_to_json(e.root));
    residuals.push_back(e.residual);
    if (!e.lifts.empty()) {
      Json pair = Json::array();
      for (const auto& g : e.lifts) pair.push_back(clifford_to_json(g));
      lifts.push_back(std::move(pair));
    }
  }
  j["elements"] = std::move(elements);
  j["admissible_roots"] = std::move(admissible);
  j["residuals"] = std::move(residuals);
  if (!lifts.empty()) j["lifts"] = std::move(lifts);
  j["notes"] = report.notes;
  return j;
}

Representation representation_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("representation descriptor must be an object");
  const Json& fam = field(j, "family");
  if (!fam.is_string()) throw ParseError("'family' must be a string");
  FamilySpec spec;
  spec.family = family_from_string(fam.get<std::string>());
  if (j.contains("n")) {
    if (!j.at("n").is_number_integer()) throw ParseError("'n' must be an integer");
    spec.n = j.at("n").get<int>();
  }
  if (j.contains("m")) {
    if (!j.at("m").is_number_integer()) throw ParseError("'m' must be an integer");
    spec.m = j.at("m").get<int>();
  }
  if (spec.family != Family::custom) return make_family(spec);

  const Json& basis_json = field(j, "basis");
  if (!basis_json.is_array() || basis_json.empty()) throw ParseError("'basis' must be a non-empty array");
  std::vector<ComplexMatrix> basis;
  for (const auto& b : basis_json) basis.push_back(matrix_from_json(b));
  RepMetadata meta;
  meta.spec = spec;
  std::string name = j.contains("name") && j.at("name").is_string() ? j.at("name").get<std::string>() : "custom";
  return Representation(std::move(name), std::move(basis), std::move(meta));
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
}

Complex parse_complex(const std::string& raw) {
  const std::string s = trim(raw);
  if (s.empty()) throw ParseError("empty scalar");
  const char last = s.back();
  if (last != 'i' && last != 'j') return {parse_real(s), 0.0};

  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re_text = split == std::string::npos ? "" : body.substr(0, split);
  std::string im_text = split == std::string::npos ? body : body.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  const double re = re_text.empty() ? 0.0 : parse_real(re_text);
  return {re, parse_real(im_text)};
}

ComplexMatrix parse_matrix_expression(const std::string& raw, int default_n) {
  const std::string text = trim(raw);
  if (text == "I" || text == "identity") {
    if (default_n < 1) throw ParseError("'" + text + "' needs a size, e.g. 'identity 3'");
    return identity(default_n);
  }
  if (text.rfind("diag(", 0) == 0) {
    if (text.back() != ')') throw ParseError("diag(...) is missing ')'");
    const std::string inner = text.substr(5, text.size() - 6);
    std::vector<Complex> entries;
    std::stringstream ss(inner);
    std::string item;
    while (std::getline(ss, item, ',')) entries.push_back(parse_complex(item));
    if (entries.empty()) throw ParseError("diag() needs at least one entry");
    ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(entries.size()),
                                          static_cast<Eigen::Index>(entries.size()));
    for (std::size_t i = 0; i < entries.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = entries[i];
    return m;
  }
  for (const std::string prefix : {"identity", "I"}) {
    if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size() &&
        std::all_of(text.begin() + static_cast<std::ptrdiff_t>(prefix.size()), text.end(),
                    [](unsigned char c) { return std::isdigit(c); })) {
      const int n = std::stoi(text.substr(prefix.size()));
      if (n < 1 || n > 4096) throw ParseError("identity size out of range");
      return identity(n);
    }
  }
  if (!text.empty() && text.front() == '{') {
    try {
      return matrix_from_json(Json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("invalid matrix JSON: ") + e.what());
    }
  }
  throw ParseError("cannot parse matrix expression '" + raw + "'");
}

}  // namespace cayley::io
