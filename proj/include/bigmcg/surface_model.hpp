#pragma once

#include <string>
#include <string_view>
#include <variant>

namespace bigmcg {

struct FiniteTypeSig {
  int genus = 0;
  int boundary = 0;
  int punctures = 0;
  friend bool operator==(const FiniteTypeSig&, const FiniteTypeSig&) = default;
};

enum class NamedSurface { LochNess, JacobsLadder, CantorTree, BloomingCantorTree, Flute };

struct StarSurface {
  int ends = 1;
  friend bool operator==(const StarSurface&, const StarSurface&) = default;
};

using SurfaceSig = std::variant<FiniteTypeSig, StarSurface, NamedSurface>;

int euler_characteristic(const FiniteTypeSig& sig);
bool finite_homeomorphic(const FiniteTypeSig& lhs, const FiniteTypeSig& rhs);

// Size of the standard Dehn twist generating set; throws UnsupportedError below genus 2.
int generator_count(const FiniteTypeSig& sig);

// Compact piece of the star model of S(ends) keeping `level` handles per end.
FiniteTypeSig truncation(int ends, int level);

// "g,b,n"
FiniteTypeSig parse_signature(std::string_view text);
std::string to_string(const FiniteTypeSig& sig);

NamedSurface parse_named_surface(std::string_view name);
std::string_view to_string(NamedSurface name);

}  // namespace bigmcg
