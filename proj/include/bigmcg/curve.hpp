#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace bigmcg {

// Atlas families on S(n).  A, Aprime, B sit on a single handle; C are chain curves linking two
// consecutive handles; S cuts off one end beyond a handle; D1, D2 are the two diagonals of the
// four-holed sphere bounded by a_i, a_{i+2}, c_i, c_{i+1}; D1prime, D2prime are their mirror images
// in the sphere bounded by a'_i, a'_{i+2}, c_i, c_{i+1}.
enum class Family : std::uint8_t { A, Aprime, B, C, S, D1, D2, D1prime, D2prime };

struct CurveId {
  Family family = Family::A;
  int end = 1;
  int index = 1;
  auto operator<=>(const CurveId&) const = default;
};

inline int min_index(Family family) { return family == Family::C || family == Family::S ? 0 : 1; }
inline bool well_formed(const CurveId& curve, int ends) {
  return curve.end >= 1 && curve.end <= ends && curve.index >= min_index(curve.family);
}
[[noreturn]] void throw_malformed(const CurveId& curve, int ends);
inline void require_well_formed(const CurveId& curve, int ends) {
  if (!well_formed(curve, ends)) throw_malformed(curve, ends);
}

std::string_view family_token(Family family);
// Accepts a, a', b, c, s, d1, d2, d1', d2'.
Family parse_family(std::string_view token);

// `fam[j,i]`
CurveId parse_curve(std::string_view text);
std::string to_string(const CurveId& curve);

}  // namespace bigmcg

template <>
struct std::hash<bigmcg::CurveId> {
  std::size_t operator()(const bigmcg::CurveId& c) const noexcept {
    return (static_cast<std::size_t>(c.family) * 1315423911u) ^ (static_cast<std::size_t>(c.end) << 20) ^
           static_cast<std::size_t>(c.index);
  }
};
