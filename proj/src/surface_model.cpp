#include "bigmcg/surface_model.hpp"

#include <array>
#include <charconv>
#include <utility>

#include "bigmcg/error.hpp"

namespace bigmcg {

namespace {

void require_nonnegative(const FiniteTypeSig& sig) {
  if (sig.genus < 0 || sig.boundary < 0 || sig.punctures < 0)
    throw DomainError("signature fields must be nonnegative");
}

constexpr std::array<std::pair<std::string_view, NamedSurface>, 6> kNames{{
    {"lochness", NamedSurface::LochNess},
    {"lochnessmonster", NamedSurface::LochNess},
    {"jacobsladder", NamedSurface::JacobsLadder},
    {"cantortree", NamedSurface::CantorTree},
    {"bloomingcantortree", NamedSurface::BloomingCantorTree},
    {"flute", NamedSurface::Flute},
}};

}  // namespace

int euler_characteristic(const FiniteTypeSig& sig) {
  require_nonnegative(sig);
  return 2 - 2 * sig.genus - sig.boundary - sig.punctures;
}

bool finite_homeomorphic(const FiniteTypeSig& lhs, const FiniteTypeSig& rhs) { return lhs == rhs; }

int generator_count(const FiniteTypeSig& sig) {
  require_nonnegative(sig);
  if (sig.genus < 2) throw UnsupportedError("generator count is only known for genus >= 2");
  if (sig.boundary == 0 && sig.punctures == 0) return 2 * sig.genus + 1;
  return 2 * sig.genus + sig.boundary + sig.punctures;
}

FiniteTypeSig truncation(int ends, int level) {
  if (ends < 1 || level < 1) throw DomainError("truncation needs ends >= 1 and level >= 1");
  return {ends * level, ends, 0};
}

FiniteTypeSig parse_signature(std::string_view text) {
  std::array<int, 3> fields{};
  std::size_t pos = 0;
  for (std::size_t k = 0; k < 3; ++k) {
    if (k > 0) {
      if (pos >= text.size() || text[pos] != ',') throw ParseError(pos, "expected ','");
      ++pos;
    }
    const char* first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), fields[k]);
    if (ec != std::errc{} || fields[k] < 0) throw ParseError(pos, "expected nonnegative integer");
    pos += static_cast<std::size_t>(ptr - first);
  }
  if (pos != text.size()) throw ParseError(pos, "trailing characters");
  return {fields[0], fields[1], fields[2]};
}

std::string to_string(const FiniteTypeSig& sig) {
  return std::to_string(sig.genus) + "," + std::to_string(sig.boundary) + "," +
         std::to_string(sig.punctures);
}

NamedSurface parse_named_surface(std::string_view name) {
  std::string key;
  for (char ch : name) {
    if (ch == '-' || ch == '_' || ch == ' ' || ch == '\'') continue;
    key += static_cast<char>(ch >= 'A' && ch <= 'Z' ? ch - 'A' + 'a' : ch);
  }
  for (const auto& [spelled, value] : kNames)
    if (spelled == key) return value;
  throw DomainError("unknown surface name: " + std::string(name));
}

std::string_view to_string(NamedSurface name) {
  switch (name) {
    case NamedSurface::LochNess: return "LochNess";
    case NamedSurface::JacobsLadder: return "JacobsLadder";
    case NamedSurface::CantorTree: return "CantorTree";
    case NamedSurface::BloomingCantorTree: return "BloomingCantorTree";
    case NamedSurface::Flute: return "Flute";
  }
  return "?";
}

}  // namespace bigmcg
