#include "galecubic/io.hpp"

#include <sstream>

namespace galecubic {

namespace {

Json coord_to_json(const Field& f, const Scalar::Coord& c) {
  if (f.is_rational_base()) {
    const mpq_class& q = std::get<mpq_class>(c);
    return q.get_num().get_str() + "/" + q.get_den().get_str();
  }
  return std::get<std::int64_t>(c);
}

Scalar::Coord coord_from_json(const Field& f, const Json& j) {
  if (f.is_rational_base()) {
    std::string text;
    if (j.is_string()) {
      text = j.get<std::string>();
    } else if (j.is_number_integer()) {
      text = std::to_string(j.get<long long>());
    } else {
      throw InvalidInput("rational entries must be \"num/den\" strings, got " + j.dump());
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw InvalidInput("bad rational: " + text);
    if (q.get_den() == 0) throw InvalidInput("zero denominator: " + text);
    q.canonicalize();
    return q;
  }
  if (!j.is_number_integer()) throw InvalidInput("prime-field entries must be integers, got " + j.dump());
  const long long v = j.get<long long>();
  if (v < 0 || v >= f.characteristic())
    throw InvalidInput("prime-field entries must lie in [0, " + std::to_string(f.characteristic()) + "), got " + j.dump());
  return std::int64_t{v};
}

Scalar::Coord base_zero(const Field& f) {
  if (f.is_rational_base()) return mpq_class(0);
  return std::int64_t{0};
}

Scalar scalar_from_text(const Field& f, const std::string& raw) {
  std::string text;
  for (char c : raw)
    if (c != ' ') text += c;
  auto part = [&](const std::string& s) -> Scalar::Coord {
    if (f.is_rational_base()) return coord_from_json(f, Json(s));
    long long v = 0;
    try {
      std::size_t used = 0;
      v = std::stoll(s, &used);
      if (used != s.size()) throw InvalidInput("bad integer: " + s);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad integer: " + s);
    }
    const long long p = f.characteristic();
    return std::int64_t{((v % p) + p) % p};
  };
  const auto colon = text.find(':');
  if (colon != std::string::npos) {
    if (!f.is_extension()) throw InvalidInput("a:b entries need a quadratic extension field");
    return Scalar(f, part(text.substr(0, colon)), part(text.substr(colon + 1)));
  }
  return Scalar(f, part(text), base_zero(f));
}

std::vector<Scalar> vec_from_array(const Field& f, const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + " must be a list");
  std::vector<Scalar> out;
  for (const auto& e : j) out.push_back(scalar_from_json(f, e));
  return out;
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
  const Field& f = s.field();
  if (f.is_extension()) return Json::array({coord_to_json(f, s.a()), coord_to_json(f, s.b())});
  return coord_to_json(f, s.a());
}

Scalar scalar_from_json(const Field& f, const Json& j) {
  if (f.is_extension()) {
    if (!j.is_array() || j.size() != 2)
      throw InvalidInput("entries of " + f.descriptor() + " must be [a, b] pairs, got " + j.dump());
    return Scalar(f, coord_from_json(f, j[0]), coord_from_json(f, j[1]));
  }
  if (j.is_array()) throw InvalidInput("entries of " + f.descriptor() + " are not pairs, got " + j.dump());
  return Scalar(f, coord_from_json(f, j), base_zero(f));
}

Json vector_to_json(const std::vector<Scalar>& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(scalar_to_json(s));
  return out;
}

std::vector<Scalar> vector_from_json(const Field& f, const Json& j, std::size_t expected_size) {
  std::vector<Scalar> v = vec_from_array(f, j, "a vector");
  if (v.size() != expected_size)
    throw InvalidInput("expected a vector of length " + std::to_string(expected_size) + ", got " +
                       std::to_string(v.size()));
  return v;
}

Json matrix_to_json(const FMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

FMatrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) throw InvalidInput("expected a matrix with " + std::to_string(rows) + " rows");
  FMatrix m = zeros(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) m.set_row(r, vector_from_json(f, j[r], cols));
  return m;
}

Json poly_to_json(const MultiPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({scalar_to_json(c), Json(e)}));
  return out;
}

MultiPoly poly_from_json(const Field& f, const Json& j, std::size_t nvars) {
  if (!j.is_array()) throw InvalidInput("a polynomial is a list of [coefficient, exponents] terms");
  MultiPoly p(f, nvars);
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_array() || t[1].size() != nvars)
      throw InvalidInput("bad polynomial term: " + t.dump());
    Exponent e;
    for (const auto& x : t[1]) {
      if (!x.is_number_unsigned()) throw InvalidInput("exponents must be non-negative integers");
      e.push_back(x.get<std::uint16_t>());
    }
    p.add_term(e, scalar_from_json(f, t[0]));
  }
  return p;
}

Json equation_to_json(const NonSyzygeticEquation& eq) {
  Json m = Json::array(), l = Json::array();
  for (std::size_t s = 0; s < 9; ++s) m.push_back(vector_to_json(eq.forms[s]));
  for (std::size_t k = 0; k < 3; ++k) l.push_back(vector_to_json(eq.L(k)));
  return Json{{"sign", eq.sign}, {"variables", eq.variables}, {"M", m}, {"L", l}};
}

NonSyzygeticEquation equation_from_json(const Field& f, const Json& j) {
  if (!j.is_object()) throw InvalidInput("an equation is an object with sign, M and L");
  if (!j.contains("M") || !j.contains("L")) throw InvalidInput("an equation needs M (9 rows) and L (3 rows)");
  const Json& m = j.at("M");
  const Json& l = j.at("L");
  if (!m.is_array() || m.size() != 9) throw InvalidInput("M must have 9 coefficient rows");
  if (!l.is_array() || l.size() != 3) throw InvalidInput("L must have 3 coefficient rows");
  std::vector<std::vector<Scalar>> forms;
  for (const auto& r : m) forms.push_back(vector_from_json(f, r, 6));
  for (const auto& r : l) forms.push_back(vector_from_json(f, r, 6));
  const int sign = j.value("sign", 1);
  if (sign != 1 && sign != -1) throw InvalidInput("sign must be 1 or -1");
  std::vector<std::string> vars = default_names("X", 6);
  if (j.contains("variables")) {
    vars = j.at("variables").get<std::vector<std::string>>();
    if (vars.size() != 6) throw InvalidInput("an equation has 6 variables");
  }
  return NonSyzygeticEquation(f, forms, sign, vars);
}

bool InstanceFile::operator==(const InstanceFile& o) const {
  auto same_params = [](const std::optional<A4FamilyParams>& a, const std::optional<A4FamilyParams>& b) {
    if (!a || !b) return !a && !b;
    return a->alpha == b->alpha && a->beta == b->beta && a->gamma == b->gamma && a->delta == b->delta &&
           a->lambda == b->lambda && a->xi == b->xi;
  };
  return field == o.field && equations == o.equations && lagrangian == o.lagrangian && generators == o.generators &&
         same_params(params, o.params);
}

Json instance_to_json(const InstanceFile& inst) {
  Json out{{"field", inst.field->descriptor()}};
  Json eqs = Json::array();
  for (const auto& e : inst.equations) eqs.push_back(equation_to_json(e));
  out["equations"] = eqs;
  if (inst.lagrangian) out["lagrangian"] = matrix_to_json(inst.lagrangian->transpose());
  if (!inst.generators.empty()) {
    Json g = Json::array();
    for (const auto& m : inst.generators) g.push_back(matrix_to_json(m));
    out["generators"] = g;
  }
  if (inst.params) {
    const A4FamilyParams& p = *inst.params;
    out["params"] = Json{{"alpha", scalar_to_json(p.alpha)}, {"beta", scalar_to_json(p.beta)},
                         {"gamma", scalar_to_json(p.gamma)}, {"delta", scalar_to_json(p.delta)},
                         {"lambda", scalar_to_json(p.lambda)}, {"xi", scalar_to_json(p.xi)}};
  }
  return out;
}

InstanceFile instance_from_json(const Json& j) {
  if (!j.is_object()) throw InvalidInput("an instance file is a JSON object");
  InstanceFile inst;
  if (j.contains("field")) inst.field = &Field::parse(j.at("field").get<std::string>());
  const Field& f = *inst.field;
  if (j.contains("equations")) {
    if (!j.at("equations").is_array()) throw InvalidInput("equations must be a list");
    for (const auto& e : j.at("equations")) inst.equations.push_back(equation_from_json(f, e));
  }
  if (j.contains("lagrangian")) {
    const Json& cols = j.at("lagrangian");
    if (!cols.is_array() || cols.empty()) throw InvalidInput("lagrangian must be a non-empty list of columns");
    inst.lagrangian = matrix_from_json(f, cols, cols.size(), 20).transpose();
  }
  if (j.contains("generators")) {
    if (!j.at("generators").is_array()) throw InvalidInput("generators must be a list of 6 x 6 matrices");
    for (const auto& g : j.at("generators")) inst.generators.push_back(matrix_from_json(f, g, 6, 6));
  }
  if (j.contains("params")) {
    const Json& p = j.at("params");
    auto get = [&](const char* k) {
      if (!p.contains(k)) throw InvalidInput(std::string("params needs ") + k);
      return scalar_from_json(f, p.at(k));
    };
    inst.params = A4FamilyParams{get("alpha"), get("beta"), get("gamma"), get("delta"), get("lambda"), get("xi")};
  }
  return inst;
}

std::vector<Scalar> parse_scalar_list(const Field& f, const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(scalar_from_text(f, item));
  return out;
}

}  // namespace galecubic
