#include "bigmcg/curve.hpp"

#include <array>
#include <charconv>
#include <utility>

#include "bigmcg/error.hpp"

namespace bigmcg {

namespace {

constexpr std::array<std::pair<std::string_view, Family>, 9> kFamilies{{
    {"a", Family::A},
    {"a'", Family::Aprime},
    {"b", Family::B},
    {"c", Family::C},
    {"s", Family::S},
    {"d1", Family::D1},
    {"d2", Family::D2},
    {"d1'", Family::D1prime},
    {"d2'", Family::D2prime},
}};

}  // namespace

void throw_malformed(const CurveId& curve, int ends) {
  throw DomainError("malformed curve " + to_string(curve) + " for " + std::to_string(ends) + " ends");
}

std::string_view family_token(Family family) {
  for (const auto& [token, value] : kFamilies)
    if (value == family) return token;
  return "?";
}

Family parse_family(std::string_view token) {
  for (const auto& [spelled, value] : kFamilies)
    if (spelled == token) return value;
  throw ParseError(0, "unknown curve family '" + std::string(token) + "'");
}

CurveId parse_curve(std::string_view text) {
  const std::size_t open = text.find('[');
  if (open == std::string_view::npos || text.empty() || text.back() != ']')
    throw ParseError(0, "expected fam[j,i]");
  CurveId curve;
  try {
    curve.family = parse_family(text.substr(0, open));
  } catch (const ParseError& e) {
    throw ParseError(0, e.detail());
  }
  std::size_t pos = open + 1;
  for (int* field : {&curve.end, &curve.index}) {
    const char* first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), *field);
    if (ec != std::errc{}) throw ParseError(pos, "expected integer");
    pos += static_cast<std::size_t>(ptr - first);
    const char expected = field == &curve.end ? ',' : ']';
    if (pos >= text.size() || text[pos] != expected) throw ParseError(pos, std::string("expected '") + expected + "'");
    ++pos;
  }
  if (pos != text.size()) throw ParseError(pos, "trailing characters");
  if (curve.end < 1 || curve.index < min_index(curve.family)) throw ParseError(open, "index out of range");
  return curve;
}

std::string to_string(const CurveId& curve) {
  return std::string(family_token(curve.family)) + "[" + std::to_string(curve.end) + "," +
         std::to_string(curve.index) + "]";
}

}  // namespace bigmcg
