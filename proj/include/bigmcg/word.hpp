#pragma once

#include <compare>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bigmcg/curve.hpp"

namespace bigmcg {

struct Twist {
  CurveId curve;
  auto operator<=>(const Twist&) const = default;
};

// Handle shift moving genus from end `from` toward end `to`.
struct Shift {
  int from = 1;
  int to = 2;
  auto operator<=>(const Shift&) const = default;
};

struct Rotation {
  auto operator<=>(const Rotation&) const = default;
};
struct Rho1 {
  auto operator<=>(const Rho1&) const = default;
};
struct Rho2 {
  auto operator<=>(const Rho2&) const = default;
};
struct Tau1 {
  auto operator<=>(const Tau1&) const = default;
};
struct Tau2 {
  auto operator<=>(const Tau2&) const = default;
};

using Generator = std::variant<Twist, Shift, Rotation, Rho1, Rho2, Tau1, Tau2>;

struct Letter {
  Generator gen;
  int sign = 1;
  bool operator==(const Letter&) const = default;
};

// Letters are read as a composition of maps: the rightmost letter acts first.
struct Word {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  bool operator==(const Word&) const = default;
};

Word operator*(const Word& lhs, const Word& rhs);
Word inverse(const Word& w);
Word power(const Word& w, int exponent);
// conj(x, by) = by * x * inv(by)
Word conj(const Word& x, const Word& by);
Word letter_word(const Generator& gen, int sign = 1);
Word twist_word(const CurveId& curve, int exponent = 1);

bool adjacent_shift(const Shift& shift, int ends);
// Rewrites every non-adjacent shift h[i,k] as the chain of adjacent shifts; validates ranges.
Word expand_shifts(const Word& w, int ends);
// Throws DomainError if a letter names an end or curve outside S(ends).
void require_in_range(const Word& w, int ends);

Word free_reduce(const Word& w);

// Largest curve index mentioned by a twist letter, or 0.
int max_curve_index(const Word& w);
bool is_twist_only(const Word& w);

Word parse_word(std::string_view text);
std::string render(const Word& w);
std::string render(const Generator& gen);

struct RandomWordSpec {
  int ends = 3;
  int length = 8;
  int max_index = 6;
  bool twists = true;
  bool shifts = true;      // any ordered pair of distinct ends
  bool symmetries = true;  // R, rho1, rho2, tau1, tau2
};

// Uniform letter choice among the enabled kinds; deterministic for a given engine state.
Word random_word(std::mt19937_64& rng, const RandomWordSpec& spec);

}  // namespace bigmcg
