#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bigmcg/curve_atlas.hpp"
#include "bigmcg/rewrite.hpp"
#include "bigmcg/word.hpp"

namespace bigmcg {

// Bijection of {1..n}; images()[j-1] is the image of j.
class Perm {
 public:
  explicit Perm(int n);
  explicit Perm(std::vector<int> images);  // 1-based values, validated
  static Perm cycle(int n);                // (1 2 ... n)
  static Perm transposition(int n, int a, int b);
  // Cycle notation such as "(1 2)(4 5)"; fixed points may be omitted.
  static Perm parse(std::string_view cycles, int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int j) const { return images_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;
  // (lhs * rhs)(j) = lhs(rhs(j))
  friend Perm operator*(const Perm& lhs, const Perm& rhs);
  Perm inverse() const;
  std::string cycles() const;
  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

Perm end_permutation(const Atlas& atlas, const Word& w);

struct EventuallyPeriodicBits {
  std::vector<bool> preamble;
  std::vector<bool> period;  // nonempty
  bool operator==(const EventuallyPeriodicBits&) const = default;
};

EventuallyPeriodicBits canonicalize(const EventuallyPeriodicBits& bits);
// "pre|period", e.g. "01|1"
EventuallyPeriodicBits parse_bits(std::string_view text);
std::string to_string(const EventuallyPeriodicBits& bits);
bool finitely_many_ones(const EventuallyPeriodicBits& bits);

struct ShiftSpec {
  int from_end = 1;
  int to_end = 2;
  EventuallyPeriodicBits plus_occupancy;
  EventuallyPeriodicBits minus_occupancy;
};

enum class ShiftType { I, II, III };
ShiftType shift_type(const ShiftSpec& spec);
std::string to_string(ShiftType type);

// h[i,k] as the product of adjacent shifts h[k-1,k] ... h[i,i+1]; requires i < k.
Word chain(int i, int k);

// Signed genus carried into the side of end `end` cut off by s[end, window]; nullopt when the word
// is not pure or the image of the cut does not reduce to a cut of the same end.
std::optional<int> phi(const Atlas& atlas, int end, const Word& w, int window,
                       std::size_t budget = kDefaultBudget);
std::optional<std::vector<int>> flux_vector(const Atlas& atlas, const Word& w, int window,
                                            std::size_t budget = kDefaultBudget);

struct ShadowResult {
  bool value = false;
  bool undefined = false;  // flux could not be evaluated; value is then false
};
ShadowResult compact_closure_shadow(const Atlas& atlas, const Word& w, int window);

struct SeparatingWitness {
  CurveId gamma;
  CurveId image;      // h(c)
  CurveId preimage;   // h^-1(c)
  int genus_to_curve = 0;
  int genus_to_image = 0;
  int genus_to_preimage = 0;
  // genus(gamma, h(c)) == genus(gamma, c) + 1 and genus(gamma, h^-1(c)) == genus(gamma, c) - 1
  bool holds() const;
};

// For an s-curve c on an end touched by the adjacent shift h (index >= 2).  Gamma lies beyond
// the support on the far side of c from where genus arrives.
SeparatingWitness separating_witness(const Atlas& atlas, const CurveId& c, const Shift& h);

struct DifferenceCheck {
  std::string word;
  CurveId gamma;
  CurveId image;
  int genus_to_curve = 0;
  int genus_to_image = 0;
  bool holds() const { return genus_to_curve == genus_to_image; }
};

// For two shifts with the same flux, each of h2^-1 h1, h1 h2^-1, h1^-1 h2, h2 h1^-1 moves c to a
// curve enclosing the same genus with a far cut gamma.  nullopt entries are reported as failures.
std::vector<std::optional<DifferenceCheck>> difference_witnesses(const Atlas& atlas, const Word& h1,
                                                                 const Word& h2, const CurveId& c);

// Breadth-first closure of the generated subgroup of Sym_n compared against n!; n <= 8.
bool sym_generated(const std::vector<Perm>& perms, int n);
std::size_t generated_order(const std::vector<Perm>& perms, int n);

std::pair<double, double> twist_point(double theta, double t);
std::pair<double, double> model_shift_point(double x, double y);

}  // namespace bigmcg
