#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bigmcg/curve_atlas.hpp"
#include "bigmcg/word.hpp"

namespace bigmcg {

struct StackedTwist {
  CurveId curve;
  int exponent = 1;
  bool operator==(const StackedTwist&) const = default;
};

// Either an atlas curve, or the image of an atlas curve under a word that did not reduce.  The
// unreduced word is kept as twists already pushed onto the base (innermost first) followed by
// letters that were suspended whole.
class CurveTerm {
 public:
  CurveTerm() = default;
  CurveTerm(const CurveId& base) : base_(base) {}  // NOLINT(google-explicit-constructor)

  bool is_atlas() const { return twists_.empty() && suspended_.empty(); }
  const CurveId& base() const { return base_; }
  const std::vector<StackedTwist>& twists() const { return twists_; }
  const Word& suspended() const { return suspended_; }
  // The word w with this term == w(base).
  Word pending() const;
  std::string render() const;
  bool operator==(const CurveTerm&) const = default;

 private:
  friend class Rewriter;
  CurveId base_;
  std::vector<StackedTwist> twists_;
  Word suspended_;
};

// A registered curve-image fact about a lantern: `word` takes `source` to `target`.
struct LanternAxiom {
  std::string id;
  Word word;
  CurveId source;
  CurveId target;
  std::string anchor;
};

// The two lantern-step facts on the four-holed sphere at handles index..index+2 of `end`.
std::vector<LanternAxiom> lantern_axioms(int end, int index);

struct ImageResult {
  CurveTerm term;
  std::size_t steps = 0;
  bool exhausted = false;
  std::vector<std::string> axioms_used;
};

class Rewriter {
 public:
  explicit Rewriter(const Atlas& atlas) : atlas_(atlas) {}
  ImageResult image(const Word& w, const CurveTerm& start, std::size_t budget) const;
  // Same, for a word already passed through expand_shifts and free_reduce.
  ImageResult image_prepared(const Word& word, const CurveTerm& start, std::size_t budget) const;

 private:
  void twist(CurveTerm& t, const CurveId& x, int exponent, std::size_t& steps) const;
  void table(CurveTerm& t, const Letter& letter, std::size_t& steps) const;
  const Atlas& atlas_;
};

constexpr std::size_t kDefaultBudget = 100000;

CurveTerm curve_image(const Atlas& atlas, const Word& w, const CurveTerm& c, std::size_t budget = kDefaultBudget);

// T_{w(c)} when w(c) reduces to an atlas curve, otherwise w * T_c * inv(w).
Word conjugate_twist(const Atlas& atlas, const Word& w, const CurveId& c, std::size_t budget = kDefaultBudget);

}  // namespace bigmcg
