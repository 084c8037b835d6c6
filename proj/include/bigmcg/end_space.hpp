#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bigmcg/surface_model.hpp"

namespace bigmcg {

struct IsolatedEnd {
  bool nonplanar = false;
  auto operator<=>(const IsolatedEnd&) const = default;
};

struct CantorBlock {
  bool nonplanar = false;
  auto operator<=>(const CantorBlock&) const = default;
};

// Countably many isolated ends (the tail) converging to a single limit end.
struct OmegaChain {
  bool limit_nonplanar = false;
  bool tail_nonplanar = false;
  auto operator<=>(const OmegaChain&) const = default;
};

using EndComponent = std::variant<IsolatedEnd, CantorBlock, OmegaChain>;

struct EndSpaceCode {
  std::vector<EndComponent> components;
  bool operator==(const EndSpaceCode&) const = default;
};

// Nonnegative integer or the countable-infinity token.
struct Cardinal {
  std::uint64_t finite = 0;
  bool omega = false;
  auto operator<=>(const Cardinal&) const = default;
};

// Nonnegative integer or infinity (genus, boundary components).
struct Extent {
  std::uint64_t finite = 0;
  bool infinite = false;
  auto operator<=>(const Extent&) const = default;
};

struct SurfaceDesc {
  Extent boundary;
  Extent genus;
  EndSpaceCode code;
};

struct RankProfile {
  Cardinal nonplanar;
  Cardinal planar;
  auto operator<=>(const RankProfile&) const = default;
};

struct Fingerprint {
  Cardinal isolated_count;
  bool has_cantor = false;
  // Number of derivatives until the code is empty; `depth_omega` when a perfect part survives.
  int derivative_depth = 0;
  bool depth_omega = false;
  // Index 0: isolated ends; index 1: limits of chains.
  std::vector<RankProfile> np_profile;
  // Tail marks per chain limit, sorted, so that chain types are told apart.
  std::vector<OmegaChain> chain_types;
  bool cantor_nonplanar = false;
  bool cantor_planar = false;
  auto operator<=>(const Fingerprint&) const = default;
};

enum class Comparison { Homeomorphic, Distinct, Inconclusive };

EndSpaceCode named_code(NamedSurface name);
EndSpaceCode star_code(int ends);
SurfaceDesc named_surface(NamedSurface name);
SurfaceDesc star_surface(int ends);

// Throws DomainError when a chain has non-planar tail points but a planar limit.
void validate(const EndSpaceCode& code);
void validate(const SurfaceDesc& desc);

// Merges same-mark Cantor blocks, absorbs isolated ends into chains with matching tail, sorts.
EndSpaceCode normalize(const EndSpaceCode& code);

EndSpaceCode cb_derivative(const EndSpaceCode& code);
Fingerprint fingerprint(const EndSpaceCode& code);
bool is_finite_code(const EndSpaceCode& code);
Comparison compare(const SurfaceDesc& a, const SurfaceDesc& b);

// `finite:np,p` | `cantor:np` | `omega:TAIL>LIMIT` | `star:N` | surface keyword, joined by '+'.
EndSpaceCode parse_end_code(std::string_view text);
std::string to_string(const EndSpaceCode& code);
std::string to_string(const Cardinal& value);
std::string to_string(Comparison value);
Extent parse_extent(std::string_view text);
std::string to_string(const Extent& value);

}  // namespace bigmcg
