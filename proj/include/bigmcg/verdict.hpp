#pragma once

#include <string>
#include <utility>
#include <variant>

#include "bigmcg/curve_atlas.hpp"
#include "bigmcg/h1.hpp"
#include "bigmcg/rewrite.hpp"
#include "bigmcg/word.hpp"

namespace bigmcg {

struct EndWitness {
  int end = 1;
};
struct FluxWitness {
  int end = 1;
};
struct BasisWitness {
  BasisIndex basis;
};
struct CurveWitness {
  CurveId curve;
};
using Witness = std::variant<EndWitness, FluxWitness, BasisWitness, CurveWitness>;

struct Verified {
  int window = 0;
};
struct Refuted {
  Witness witness;
  std::string detail;
};
struct Unknown {
  std::string reason;
};
using Verdict = std::variant<Verified, Refuted, Unknown>;

// Layered shadow comparison: end permutations, flux, homology on basis vectors with index <=
// window, atlas images of curves with index <= window where both sides reduce.
Verdict equal_up_to(const Atlas& atlas, const Word& w1, const Word& w2, int window,
                    std::size_t budget = kDefaultBudget);
Verdict trivial_up_to(const Atlas& atlas, const Word& w, int window, std::size_t budget = kDefaultBudget);

// Re-evaluates the observable named by a witness on both words; a sound refutation yields two
// different strings.
std::pair<std::string, std::string> observe(const Atlas& atlas, const Witness& witness, const Word& w1,
                                            const Word& w2, int window, std::size_t budget = kDefaultBudget);

std::string to_string(const Witness& witness);
std::string to_string(const Verdict& verdict);
bool is_verified(const Verdict& v);
bool is_refuted(const Verdict& v);

}  // namespace bigmcg
