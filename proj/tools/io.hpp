#ifndef LSF_TOOLS_IO_HPP
#define LSF_TOOLS_IO_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "lsf/braid.hpp"
#include "lsf/homology.hpp"
#include "lsf/laurent.hpp"
#include "lsf/seifert.hpp"

namespace lsf::io {

using json = nlohmann::ordered_json;

// Malformed input; the CLI maps this to exit code 2.
struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "@path" arguments load the file contents; anything else passes through.
std::string resolve_arg(const std::string& arg);

Rational parse_rational(const std::string& text);          // "a/b" or "a"
std::optional<Rational> parse_ext_rational(const std::string& text);  // "inf" -> nullopt

// Polynomial JSON: {"terms":[{"x":..,"y":..,"c":..}, ...]} for two
// variables, {"terms":[{"e":..,"c":..}, ...]} for one. Duplicate exponent
// keys are rejected.
KnotPoly1 parse_poly1(const std::string& text);
LinkPoly2 parse_poly2(const std::string& text);
json poly1_to_json(const KnotPoly1& p);
json poly2_to_json(const LinkPoly2& p);

// Seifert form "b; r1,r2,..." with rationals a/b and "inf" for a degenerate
// fiber; family "b; r1,...,r_{s-1}; t,u,v,w".
seifert::SeifertForm parse_form(const std::string& text);
seifert::SeifertFamily parse_family(const std::string& text);
std::string form_to_string(const seifert::SeifertForm& f);

// Surgery description JSON: {"linking": [[..]], "framings": ["p/q", ...]}.
homology::SurgeryDescription parse_surgery(const std::string& text);

// Integer matrix JSON: [[..], ...]; entries may be numbers or decimal strings.
homology::IntMatrix parse_matrix(const std::string& text);
json matrix_to_json(const homology::IntMatrix& m);

// Braid JSON {"strands": n, "letters": [..]}.
braid::BraidWord parse_braid(const std::string& text);
json braid_to_json(const braid::BraidWord& w);

std::pair<std::int64_t, std::int64_t> parse_window(const std::string& text);  // "lo:hi"

json int_to_json(const Int& v);  // number when it fits, decimal string otherwise

}  // namespace lsf::io

#endif
