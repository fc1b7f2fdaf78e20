#include "qftlab/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include <json.hpp>

namespace qftlab {
namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }

  void skip_spaces() {
    while (!done() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool consume(char c) {
    skip_spaces();
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool consume_ci(char c) {
    skip_spaces();
    if (std::tolower(static_cast<unsigned char>(peek())) ==
        std::tolower(static_cast<unsigned char>(c))) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) throw ParseError(std::string("expected ") + what, pos);
  }

  std::uint64_t number(const char* what) {
    skip_spaces();
    const std::size_t start = pos;
    std::uint64_t value = 0;
    bool any = false;
    while (!done() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      ++pos;
      any = true;
    }
    if (!any) throw ParseError(std::string("expected ") + what, start);
    return value;
  }

  void expect_end() {
    skip_spaces();
    if (!done()) throw ParseError("trailing characters after spec", pos);
  }
};

/// Plus-form polynomial over Z: "Z^2+1", "Z^3+2Z+2", "2" rejected (degree 0).
/// Returns little-endian coefficients including the leading one.
std::vector<std::int64_t> parse_polynomial(Cursor& cur) {
  std::vector<std::int64_t> coeffs;
  auto put = [&coeffs](std::size_t degree, std::int64_t value) {
    if (coeffs.size() <= degree) coeffs.resize(degree + 1, 0);
    coeffs[degree] += value;
  };
  bool first = true;
  while (true) {
    cur.skip_spaces();
    std::int64_t sign = 1;
    if (cur.consume('+')) {
      sign = 1;
    } else if (cur.consume('-')) {
      sign = -1;
    } else if (!first) {
      break;
    }
    cur.skip_spaces();
    const std::size_t term_start = cur.pos;
    std::int64_t coef = 1;
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      coef = static_cast<std::int64_t>(cur.number("coefficient"));
      have_coef = true;
    }
    if (cur.consume_ci('Z')) {
      std::size_t degree = 1;
      if (cur.consume('^')) degree = static_cast<std::size_t>(cur.number("exponent"));
      put(degree, sign * coef);
    } else if (have_coef) {
      put(0, sign * coef);
    } else {
      throw ParseError("expected polynomial term", term_start);
    }
    first = false;
  }
  if (coeffs.size() < 2) throw ParseError("polynomial must have degree >= 1", cur.pos);
  return coeffs;
}

GroupSpec parse_group_body(Cursor& cur) {
  std::vector<std::uint64_t> moduli;
  while (true) {
    if (!cur.consume_ci('Z')) throw ParseError("expected cyclic factor 'Z<modulus>'", cur.pos);
    const std::size_t mod_pos = cur.pos;
    const std::uint64_t m = cur.number("modulus");
    if (m < 2) throw ParseError("cyclic factor modulus must be >= 2", mod_pos);
    moduli.push_back(m);
    cur.skip_spaces();
    if (!cur.consume_ci('x')) break;
  }
  return GroupSpec(std::move(moduli));
}

FieldSpec parse_field_body(Cursor& cur) {
  // "GF(q)" optionally followed by ";f=<plus-form polynomial>".
  if (!(cur.consume_ci('G') && cur.consume_ci('F'))) {
    throw ParseError("expected 'GF'", cur.pos);
  }
  cur.expect('(', "'('");
  const std::size_t q_pos = cur.pos;
  const std::uint64_t q = cur.number("field order");
  cur.expect(')', "')'");
  cur.skip_spaces();
  if (cur.done() || cur.peek() != ';') {
    try {
      return FieldSpec::with_builtin_modulus(q);
    } catch (const StructuralError& e) {
      throw ParseError(e.what(), q_pos);
    }
  }
  cur.expect(';', "';'");
  if (!cur.consume_ci('f')) throw ParseError("expected 'f=' after ';'", cur.pos);
  cur.expect('=', "'='");
  const std::size_t poly_pos = cur.pos;
  const std::vector<std::int64_t> plus = parse_polynomial(cur);
  try {
    const auto [p, m] = factor_prime_power(q);
    if (plus.size() - 1 != m) {
      throw StructuralError("polynomial degree does not match the field order");
    }
    return FieldSpec::from_plus_coeffs(p, plus);
  } catch (const StructuralError& e) {
    throw ParseError(e.what(), poly_pos);
  }
}

MatrixRingSpec parse_matrix_ring_body(Cursor& cur) {
  if (!cur.consume_ci('M')) throw ParseError("expected 'M<dim>(<base>)'", cur.pos);
  const std::size_t dim_pos = cur.pos;
  const std::uint64_t dim = cur.number("matrix dimension");
  if (dim < 1) throw ParseError("matrix dimension must be >= 1", dim_pos);
  cur.expect('(', "'('");
  cur.skip_spaces();
  BaseRing base = BaseRing::integers_mod(2);
  if (std::tolower(static_cast<unsigned char>(cur.peek())) == 'g') {
    base = BaseRing::galois_field(parse_field_body(cur));
  } else if (cur.consume_ci('Z')) {
    const std::size_t mod_pos = cur.pos;
    const std::uint64_t r = cur.number("base modulus");
    if (r < 2) throw ParseError("base modulus must be >= 2", mod_pos);
    base = BaseRing::integers_mod(r);
  } else {
    throw ParseError("expected base ring 'Z<r>' or 'GF(q)'", cur.pos);
  }
  cur.expect(')', "')'");
  try {
    return MatrixRingSpec(std::move(base), static_cast<std::size_t>(dim));
  } catch (const StructuralError& e) {
    throw ParseError(e.what(), dim_pos);
  }
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
  Cursor cur{text};
  GroupSpec spec = parse_group_body(cur);
  cur.expect_end();
  return spec;
}

FieldSpec parse_field_spec(const std::string& text) {
  Cursor cur{text};
  FieldSpec spec = parse_field_body(cur);
  cur.expect_end();
  return spec;
}

MatrixRingSpec parse_matrix_ring_spec(const std::string& text) {
  Cursor cur{text};
  MatrixRingSpec spec = parse_matrix_ring_body(cur);
  cur.expect_end();
  return spec;
}

AnySpec parse_spec(const std::string& text) {
  Cursor probe{text};
  probe.skip_spaces();
  const char head = static_cast<char>(std::tolower(static_cast<unsigned char>(probe.peek())));
  if (head == 'g') return parse_field_spec(text);
  if (head == 'm') return parse_matrix_ring_spec(text);
  if (head == 'z') return parse_group_spec(text);
  throw ParseError("expected a group (Z...), field (GF...) or matrix ring (M...) spec",
                   probe.pos);
}

std::string spec_to_string(const AnySpec& spec) {
  return std::visit([](const auto& s) { return s.to_string(); }, spec);
}

GroupSpec additive_group_of(const AnySpec& spec) {
  if (const GroupSpec* g = std::get_if<GroupSpec>(&spec)) return *g;
  if (const FieldSpec* f = std::get_if<FieldSpec>(&spec)) return f->additive_group();
  return std::get<MatrixRingSpec>(spec).additive_group();
}

GroupSpec group_spec_from_json(const std::string& json_text) {
  const nlohmann::json j = nlohmann::json::parse(json_text);
  if (!j.is_object() || !j.contains("moduli")) {
    throw ParseError("group JSON needs a \"moduli\" array", 0);
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "moduli") throw ParseError("unknown key \"" + key + "\" in group JSON", 0);
  }
  std::vector<std::uint64_t> moduli;
  for (const auto& v : j.at("moduli")) moduli.push_back(v.get<std::uint64_t>());
  return GroupSpec(std::move(moduli));
}

FieldSpec field_spec_from_json(const std::string& json_text) {
  const nlohmann::json j = nlohmann::json::parse(json_text);
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "p" && key != "m" && key != "f_plus_coeffs") {
      throw ParseError("unknown key \"" + key + "\" in field JSON", 0);
    }
  }
  if (!j.contains("p") || !j.contains("m") || !j.contains("f_plus_coeffs")) {
    throw ParseError("field JSON needs p, m and f_plus_coeffs", 0);
  }
  std::vector<std::int64_t> plus;
  for (const auto& v : j.at("f_plus_coeffs")) plus.push_back(v.get<std::int64_t>());
  if (plus.size() != j.at("m").get<std::size_t>() + 1) {
    throw ParseError("f_plus_coeffs must have m+1 entries", 0);
  }
  return FieldSpec::from_plus_coeffs(j.at("p").get<std::uint64_t>(), plus);
}

GroupElement parse_element(const GroupSpec& g, const std::string& text) {
  Cursor cur{text};
  cur.skip_spaces();
  const bool parenthesized = cur.consume('(');
  std::vector<std::int64_t> values;
  values.push_back(static_cast<std::int64_t>(cur.number("coordinate or index")));
  while (cur.consume(',')) {
    values.push_back(static_cast<std::int64_t>(cur.number("coordinate")));
  }
  if (parenthesized) cur.expect(')', "')'");
  cur.expect_end();
  if (values.size() == 1 && g.rank() != 1) {
    // single number on a multi-factor group = element index
    const std::uint64_t index = static_cast<std::uint64_t>(values[0]);
    if (index >= g.order) throw ParseError("element index out of range", 0);
    return element_of(g, index);
  }
  if (values.size() != g.rank()) {
    throw ParseError("coordinate count does not match the group rank", 0);
  }
  return reduce_element(g, values);
}

}  // namespace qftlab
