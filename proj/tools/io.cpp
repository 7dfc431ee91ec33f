#include "io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace lsf::io {

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseFailure("invalid JSON: " + text.substr(0, 80));
  return j;
}

Int json_to_int(const json& v, const char* what) {
  if (v.is_number_integer()) return Int(v.get<long long>());
  if (v.is_string()) {
    try {
      return Int(v.get<std::string>());
    } catch (...) {
      throw ParseFailure(std::string("bad integer for ") + what);
    }
  }
  throw ParseFailure(std::string("expected integer for ") + what);
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

Int int_from_string(const std::string& text, const char* what) {
  const std::string t = trim(text);
  if (t.empty()) throw ParseFailure(std::string("empty integer for ") + what);
  try {
    std::size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw ParseFailure("");
    for (; i < t.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(t[i]))) throw ParseFailure("");
    return Int(t);
  } catch (...) {
    throw ParseFailure(std::string("bad integer '") + t + "' for " + what);
  }
}

}  // namespace

std::string resolve_arg(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw ParseFailure("cannot read file " + arg.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational parse_rational(const std::string& text) {
  const std::string t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string::npos) return Rational(int_from_string(t, "rational"));
  const Int num = int_from_string(t.substr(0, slash), "numerator");
  const Int den = int_from_string(t.substr(slash + 1), "denominator");
  if (den == 0) throw ParseFailure("bad rational '" + t + "': zero denominator");
  return Rational(num, den);
}

std::optional<Rational> parse_ext_rational(const std::string& text) {
  const std::string t = trim(text);
  if (t == "inf" || t == "infinity") return std::nullopt;
  return parse_rational(t);
}

KnotPoly1 parse_poly1(const std::string& text) {
  const json j = parse_json(resolve_arg(text));
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseFailure("polynomial needs a \"terms\" array");
  std::vector<std::pair<std::int64_t, Int>> terms;
  std::set<std::int64_t> seen;
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("e") || !term.contains("c"))
      throw ParseFailure("one-variable terms need \"e\" and \"c\"");
    const std::int64_t e = json_to_int(term["e"], "e").convert_to<std::int64_t>();
    if (!seen.insert(e).second) throw ParseFailure("duplicate exponent in terms");
    terms.emplace_back(e, json_to_int(term["c"], "c"));
  }
  return KnotPoly1::from_terms(terms);
}

LinkPoly2 parse_poly2(const std::string& text) {
  const json j = parse_json(resolve_arg(text));
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ParseFailure("polynomial needs a \"terms\" array");
  std::vector<std::tuple<std::int64_t, std::int64_t, Int>> terms;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("x") || !term.contains("y") || !term.contains("c"))
      throw ParseFailure("two-variable terms need \"x\", \"y\" and \"c\"");
    const std::int64_t xe = json_to_int(term["x"], "x").convert_to<std::int64_t>();
    const std::int64_t ye = json_to_int(term["y"], "y").convert_to<std::int64_t>();
    if (!seen.insert({xe, ye}).second) throw ParseFailure("duplicate exponent in terms");
    terms.emplace_back(xe, ye, json_to_int(term["c"], "c"));
  }
  return LinkPoly2::from_terms(terms);
}

json int_to_json(const Int& v) {
  static const Int lo = Int(std::numeric_limits<long long>::min());
  static const Int hi = Int(std::numeric_limits<long long>::max());
  if (v >= lo && v <= hi) return json(v.convert_to<long long>());
  return json(v.str());
}

json poly1_to_json(const KnotPoly1& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json term;
    term["e"] = e;
    term["c"] = int_to_json(c);
    terms.push_back(term);
  }
  json out;
  out["terms"] = terms;
  return out;
}

json poly2_to_json(const LinkPoly2& p) {
  json terms = json::array();
  for (const auto& [k, c] : p.terms()) {
    json term;
    term["x"] = k.first;
    term["y"] = k.second;
    term["c"] = int_to_json(c);
    terms.push_back(term);
  }
  json out;
  out["terms"] = terms;
  return out;
}

seifert::SeifertForm parse_form(const std::string& text) {
  const auto parts = split(resolve_arg(text), ';');
  if (parts.size() > 2) throw ParseFailure("form is \"b; r1,r2,...\"");
  const Int b = int_from_string(parts[0], "b");
  std::vector<std::optional<Rational>> raw;
  if (parts.size() == 2 && !trim(parts[1]).empty()) {
    for (const auto& item : split(parts[1], ','))
      raw.push_back(parse_ext_rational(item));
  }
  try {
    return seifert::normalize(b, raw);
  } catch (const Error& e) {
    throw ParseFailure(e.what());
  }
}

seifert::SeifertFamily parse_family(const std::string& text) {
  const auto parts = split(resolve_arg(text), ';');
  if (parts.size() != 3) throw ParseFailure("family is \"b; r1,...,r_{s-1}; t,u,v,w\"");
  seifert::SeifertFamily fam;
  fam.b = int_from_string(parts[0], "b");
  if (!trim(parts[1]).empty())
    for (const auto& item : split(parts[1], ',')) {
      const auto r = parse_ext_rational(item);
      if (!r) throw ParseFailure("base ratios must be finite");
      fam.base_ratios.push_back(*r);
    }
  const auto tuvw = split(parts[2], ',');
  if (tuvw.size() != 4) throw ParseFailure("family needs four integers t,u,v,w");
  fam.t = int_from_string(tuvw[0], "t");
  fam.u = int_from_string(tuvw[1], "u");
  fam.v = int_from_string(tuvw[2], "v");
  fam.w = int_from_string(tuvw[3], "w");
  try {
    seifert::validate(fam);
  } catch (const Error& e) {
    throw ParseFailure(e.what());
  }
  return fam;
}

std::string form_to_string(const seifert::SeifertForm& f) {
  std::ostringstream os;
  os << f.b.str() << ";";
  bool first = true;
  for (const auto& r : f.ratios) {
    os << (first ? " " : ",") << r.str();
    first = false;
  }
  if (f.degenerate) os << (first ? " inf" : ",inf");
  return os.str();
}

homology::SurgeryDescription parse_surgery(const std::string& text) {
  const json j = parse_json(resolve_arg(text));
  if (!j.is_object() || !j.contains("linking") || !j.contains("framings"))
    throw ParseFailure("surgery needs \"linking\" and \"framings\"");
  const json& lk = j["linking"];
  const json& fr = j["framings"];
  if (!lk.is_array() || !fr.is_array()) throw ParseFailure("bad surgery fields");
  homology::SurgeryDescription s;
  s.components = static_cast<int>(lk.size());
  s.linking.assign(static_cast<std::size_t>(s.components) * s.components, 0);
  for (int i = 0; i < s.components; ++i) {
    if (!lk[i].is_array() || static_cast<int>(lk[i].size()) != s.components)
      throw ParseFailure("linking matrix must be square");
    for (int jx = 0; jx < s.components; ++jx)
      s.linking[static_cast<std::size_t>(i) * s.components + jx] =
          json_to_int(lk[i][jx], "linking");
  }
  for (const auto& f : fr) {
    if (f.is_string())
      s.framings.push_back(parse_rational(f.get<std::string>()));
    else
      s.framings.push_back(Rational(json_to_int(f, "framing")));
  }
  try {
    homology::validate(s);
  } catch (const Error& e) {
    throw ParseFailure(e.what());
  }
  return s;
}

homology::IntMatrix parse_matrix(const std::string& text) {
  const json j = parse_json(resolve_arg(text));
  if (!j.is_array() || j.empty()) throw ParseFailure("matrix is a nonempty array of rows");
  const int rows = static_cast<int>(j.size());
  if (!j[0].is_array()) throw ParseFailure("matrix rows must be arrays");
  const int cols = static_cast<int>(j[0].size());
  homology::IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
      throw ParseFailure("ragged matrix");
    for (int c = 0; c < cols; ++c) m.at(i, c) = json_to_int(j[i][c], "entry");
  }
  return m;
}

json matrix_to_json(const homology::IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(int_to_json(m.at(i, c)));
    rows.push_back(row);
  }
  return rows;
}

braid::BraidWord parse_braid(const std::string& text) {
  const json j = parse_json(resolve_arg(text));
  if (!j.is_object() || !j.contains("strands") || !j.contains("letters"))
    throw ParseFailure("braid needs \"strands\" and \"letters\"");
  braid::BraidWord w;
  w.strands = static_cast<int>(json_to_int(j["strands"], "strands").convert_to<long long>());
  if (!j["letters"].is_array()) throw ParseFailure("letters must be an array");
  for (const auto& l : j["letters"])
    w.letters.push_back(static_cast<int>(json_to_int(l, "letter").convert_to<long long>()));
  try {
    braid::validate(w);
  } catch (const Error& e) {
    throw ParseFailure(e.what());
  }
  return w;
}

json braid_to_json(const braid::BraidWord& w) {
  json out;
  out["strands"] = w.strands;
  out["letters"] = w.letters;
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_window(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 2) throw ParseFailure("window is \"min:max\"");
  const std::int64_t lo = int_from_string(parts[0], "window min").convert_to<std::int64_t>();
  const std::int64_t hi = int_from_string(parts[1], "window max").convert_to<std::int64_t>();
  if (lo > hi) throw ParseFailure("window must be nonempty");
  return {lo, hi};
}

}  // namespace lsf::io
