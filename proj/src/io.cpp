#include "orbitc/io.hpp"

#include <algorithm>
#include <cctype>

namespace orbitc {

namespace {

struct Cursor {
  const std::string& text;
  size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  char take() { return done() ? '\0' : text[pos++]; }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  int integer() {
    size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
    if (pos == start) throw ParseError("expected an integer", pos);
    return std::stoi(text.substr(start, pos - start));
  }
};

Rat rational_at(Cursor& c) {
  const size_t start = c.pos;
  bool neg = false;
  if (c.peek() == '-') {
    neg = true;
    c.take();
  } else if (c.peek() == '+') {
    c.take();
  }
  if (c.peek() == '.')
    throw ParseError("floating-point values are refused; use exact rationals like 1/2", c.pos);
  long num = c.integer();
  long den = 1;
  if (c.peek() == '.')
    throw ParseError("floating-point values are refused; use exact rationals like 1/2", c.pos);
  if (c.peek() == '/') {
    c.take();
    den = c.integer();
    if (den == 0) throw ParseError("zero denominator", start);
  }
  Rat r(num, den);
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

TorusElement parse_type_syntax(Cursor& c, Family family, int rank) {
  ElementType t;
  t.family = family;
  t.rank = rank;
  bool saw_block_factor = false;

  while (true) {
    const size_t fpos = c.pos;
    if (c.peek() == 'S') {
      c.take();
      c.expect('U');
      c.expect('(');
      t.parts.push_back(c.integer());
      c.expect(')');
      if (t.parts.back() < 1) throw ParseError("SU factor must be at least SU(1)", fpos);
    } else if (c.peek() == 'B' || c.peek() == 'C' || c.peek() == 'D') {
      const char letter = c.take();
      if (letter != family_letter(family))
        throw ParseError(std::string("zero-block factor '") + letter +
                             "' does not match the ambient family",
                         fpos);
      if (saw_block_factor) throw ParseError("more than one zero-block factor", fpos);
      saw_block_factor = true;
      t.zero_block = c.integer();
    } else {
      throw ParseError("expected a type factor (SU(k) or B/C/D with subscript)", c.pos);
    }
    if (c.peek() == 'x' || c.peek() == 'X' || c.peek() == '*') {
      c.take();
      continue;
    }
    break;
  }

  std::sort(t.parts.begin(), t.parts.end(), std::greater<int>());

  bool explicit_sign = false;
  if (c.peek() == '+' || c.peek() == '-') {
    if (family != Family::D || t.zero_block != 0)
      throw ParseError("sign class applies only to family D types with no zero block", c.pos);
    t.d_sign = c.take() == '+' ? ElementType::DSign::plus : ElementType::DSign::minus;
    explicit_sign = true;
  }
  if (!c.done()) throw ParseError("trailing characters after type", c.pos);

  int covered = t.zero_block;
  for (int p : t.parts) covered += p;
  const int need = family == Family::A ? rank + 1 : rank;
  if (covered > need)
    throw ParseError("type covers " + std::to_string(covered) + " coordinates but the ambient " +
                         "has only " + std::to_string(need),
                     c.pos);
  // omitted SU(1) factors fill the remaining coordinates
  t.parts.insert(t.parts.end(), need - covered, 1);
  if (family == Family::A && t.zero_block != 0)
    throw ParseError("family A types have no zero-block factor", c.pos);
  if (t.parts.empty() && family == Family::A)
    throw ParseError("empty type", c.pos);

  if (family == Family::D && t.zero_block == 0) {
    if (!explicit_sign) {
      const bool sensitive =
          rank == 4 && (t.parts == std::vector<int>{4} || t.parts == std::vector<int>{2, 2});
      if (sensitive)
        throw ParseError("D4 type " + t.to_string() +
                             " is Weyl-class sensitive; write an explicit sign (+ or -)",
                         c.pos);
      t.d_sign = ElementType::DSign::plus;
    }
  }

  return witness_element(t);
}

}  // namespace

Rat parse_rat(const std::string& text) {
  Cursor c{text};
  Rat r = rational_at(c);
  if (!c.done()) throw ParseError("trailing characters after rational", c.pos);
  return r;
}

std::string format_rat(const Rat& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : r.get_num().get_str() + "/" + r.get_den().get_str();
}

TorusElement parse_element(const std::string& spec) {
  Cursor c{spec};
  const char fam_letter = c.take();
  Family family;
  try {
    family = family_from_letter(fam_letter);
  } catch (const std::domain_error&) {
    throw ParseError(std::string("unknown family '") + fam_letter + "'", 0);
  }
  const int rank = c.integer();
  if (rank < min_rank(family))
    throw ParseError("rank below the minimum for family " + std::string(1, fam_letter), 1);
  c.expect(':');

  if (c.peek() == '[') {
    c.take();
    std::vector<Rat> values;
    if (c.peek() != ']') {
      values.push_back(rational_at(c));
      while (c.peek() == ',') {
        c.take();
        values.push_back(rational_at(c));
      }
    }
    c.expect(']');
    if (!c.done()) throw ParseError("trailing characters after value list", c.pos);
    try {
      return make_torus_element(family, rank, std::move(values));
    } catch (const std::domain_error& e) {
      throw ParseError(e.what(), c.pos);
    }
  }
  return parse_type_syntax(c, family, rank);
}

std::string format_element(const TorusElement& x) {
  std::string s = std::string(1, family_letter(x.family)) + std::to_string(x.rank) + ":[";
  for (size_t k = 0; k < x.values.size(); ++k) {
    if (k) s += ",";
    s += format_rat(x.values[k]);
  }
  return s + "]";
}

nlohmann::json root_to_json(const Root& r) {
  nlohmann::json a = nlohmann::json::array();
  for (auto c : r.coords) a.push_back(int(c));
  return a;
}

nlohmann::json subsystem_to_json(const RootSubsystem& s) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& r : s.roots) a.push_back(root_to_json(r));
  return nlohmann::json{{"ambient", std::string(1, family_letter(s.family)) + std::to_string(s.rank)},
                        {"size", s.size()},
                        {"type", factors_to_string(subsystem_type(s))},
                        {"roots", a}};
}

nlohmann::json element_to_json(const TorusElement& x) {
  const ElementType t = element_type(x);
  return nlohmann::json{{"family", std::string(1, family_letter(x.family))},
                        {"rank", x.rank},
                        {"element", format_element(x)},
                        {"type", t.to_string()},
                        {"S", t.s_value()}};
}

nlohmann::json verdict_to_json(const Verdict& v) {
  return nlohmann::json{{"status", to_string(v.status)}, {"reason", to_string(v.reason)}};
}

nlohmann::json span_report_to_json(const SpanReport& r) {
  nlohmann::json trials = nlohmann::json::array();
  for (const auto& t : r.trials)
    trials.push_back({{"seed", t.seed}, {"rank", t.achieved_rank}});
  nlohmann::json j{{"target_dim", r.target_dim},
                   {"tangent_total", r.tangent_total},
                   {"mode", to_string(r.mode)},
                   {"trials", trials},
                   {"max_rank", r.max_rank()}};
  if (r.mode == OracleMode::numeric) j["tolerance"] = r.tolerance;
  if (r.certificate)
    j["certificate"] = {{"seeds", r.certificate->seeds}, {"exactness", r.certificate->exact}};
  return j;
}

nlohmann::json wright_report_to_json(const WrightReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"psi_type", row.psi_type},
                    {"psi_size", row.psi_size},
                    {"class_size", row.class_size},
                    {"lhs", row.lhs},
                    {"min_intersections", row.min_intersections},
                    {"rhs", row.rhs},
                    {"satisfied", row.satisfied}});
  return nlohmann::json{{"phi_size", r.phi_size},
                        {"phi_x_sizes", r.phi_x_sizes},
                        {"rows", rows},
                        {"overall", r.overall}};
}

}  // namespace orbitc
