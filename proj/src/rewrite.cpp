#include "bigmcg/rewrite.hpp"

#include <algorithm>
#include <optional>

namespace bigmcg {

Word CurveTerm::pending() const {
  Word w = suspended_;
  for (auto it = twists_.rbegin(); it != twists_.rend(); ++it) w = w * twist_word(it->curve, it->exponent);
  return w;
}

std::string CurveTerm::render() const {
  if (is_atlas()) return to_string(base_);
  return "(" + bigmcg::render(pending()) + ")(" + to_string(base_) + ")";
}

namespace {

// which = 0: b_{k+1} -> d1_k; which = 1: d1_k -> d2_k.  Anchor text is left empty.
LanternAxiom bare_axiom(int which, int end, int k) {
  auto t = [end](Family f, int i, int sign) { return Letter{Twist{CurveId{f, end, i}}, sign}; };
  LanternAxiom ax;
  if (which == 0) {
    ax.id = "lantern.transport-b-d1";
    // (B_{k+1} A_k^-1)(C_k A_k^-1)(A_k A_{k+1}^-1)(C_k A_{k+1}^-1), freely reduced
    ax.word = Word{{t(Family::B, k + 1, 1), t(Family::A, k, -1), t(Family::C, k, 1), t(Family::A, k + 1, -1),
                    t(Family::C, k, 1), t(Family::A, k + 1, -1)}};
    ax.source = {Family::B, end, k + 1};
    ax.target = {Family::D1, end, k};
  } else {
    ax.id = "lantern.transport-d1-d2";
    // (B_{k+2} A_k^-1)(C_{k+1} A_k^-1)(A_{k+2} A_k^-1)(B_{k+2} A_k^-1)
    ax.word = Word{{t(Family::B, k + 2, 1), t(Family::A, k, -1), t(Family::C, k + 1, 1), t(Family::A, k, -1),
                    t(Family::A, k + 2, 1), t(Family::A, k, -1), t(Family::B, k + 2, 1), t(Family::A, k, -1)}};
    ax.source = {Family::D1, end, k};
    ax.target = {Family::D2, end, k};
  }
  return ax;
}

// Axiom whose source is the given curve, if any.
std::optional<LanternAxiom> axiom_from(const CurveId& c) {
  if (c.family == Family::B && c.index >= 2) return bare_axiom(0, c.end, c.index - 1);
  if (c.family == Family::D1) return bare_axiom(1, c.end, c.index);
  return std::nullopt;
}

}  // namespace

std::vector<LanternAxiom> lantern_axioms(int end, int index) {
  std::vector<LanternAxiom> out{bare_axiom(0, end, index), bare_axiom(1, end, index)};
  for (auto& ax : out) ax.anchor = render(ax.word) + "(" + to_string(ax.source) + ")=" + to_string(ax.target);
  return out;
}

void Rewriter::twist(CurveTerm& t, const CurveId& x, int exponent, std::size_t& steps) const {
  ++steps;
  auto& stack = t.twists_;
  // x commutes with every twist at positions >= m.
  std::size_t m = stack.size();
  while (m > 0 && atlas_.disjoint(stack[m - 1].curve, x)) --m;

  for (std::size_t j = stack.size(); j-- > m;) {
    if (stack[j].curve == x) {
      stack[j].exponent += exponent;
      if (stack[j].exponent == 0) stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(j));
      return;
    }
  }
  if (m == 0 && atlas_.disjoint(x, t.base_)) return;

  // T_x^e T_y^e (x) = y when i(x,y) = 1 and |e| = 1.
  if (m == 1 && t.base_ == x && std::abs(exponent) == 1 && stack[0].exponent == exponent &&
      atlas_.intersection(x, stack[0].curve) == 1) {
    std::vector<StackedTwist> above(stack.begin() + 1, stack.end());
    t.base_ = stack[0].curve;
    stack.clear();
    for (const auto& s : above) twist(t, s.curve, s.exponent, steps);
    return;
  }

  std::size_t p = stack.size();
  while (p > m && x < stack[p - 1].curve) --p;
  stack.insert(stack.begin() + static_cast<std::ptrdiff_t>(p), StackedTwist{x, exponent});
}

void Rewriter::table(CurveTerm& t, const Letter& letter, std::size_t& steps) const {
  ++steps;
  const auto base = atlas_.image(letter, t.base_);
  std::vector<StackedTwist> mapped;
  bool defined = base.has_value();
  for (const auto& s : t.twists_) {
    if (!defined) break;
    const auto img = atlas_.image(letter, s.curve);
    if (!img) defined = false;
    else mapped.push_back({*img, s.exponent});
  }
  if (!defined) {
    t.suspended_.letters.insert(t.suspended_.letters.begin(), letter);
    return;
  }
  t.base_ = *base;
  t.twists_.clear();
  for (const auto& s : mapped) twist(t, s.curve, s.exponent, steps);
}

ImageResult Rewriter::image(const Word& w, const CurveTerm& start, std::size_t budget) const {
  return image_prepared(free_reduce(expand_shifts(w, atlas_.ends())), start, budget);
}

ImageResult Rewriter::image_prepared(const Word& word, const CurveTerm& start, std::size_t budget) const {
  ImageResult result;
  result.term = start;
  CurveTerm& t = result.term;
  const auto& letters = word.letters;
  std::size_t pos = letters.size();
  while (pos > 0) {
    if (result.steps >= budget) {
      result.exhausted = true;
      Word rest{std::vector<Letter>(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(pos))};
      t.suspended_ = rest * t.suspended_;
      break;
    }
    // Both axioms end (act first) with inv(T[a, end, index]) of the source curve.
    const Letter& next = letters[pos - 1];
    const auto* first_twist = std::get_if<Twist>(&next.gen);
    if (t.is_atlas() && first_twist != nullptr && next.sign < 0 && first_twist->curve.family == Family::A &&
        first_twist->curve.end == t.base_.end && first_twist->curve.index == t.base_.index) {
      if (const auto axiom = axiom_from(t.base_)) {
        const std::size_t len = axiom->word.size();
        if (len <= pos && std::equal(axiom->word.letters.begin(), axiom->word.letters.end(),
                                     letters.begin() + static_cast<std::ptrdiff_t>(pos - len))) {
          t.base_ = axiom->target;
          pos -= len;
          ++result.steps;
          result.axioms_used.push_back(axiom->id);
          continue;
        }
      }
    }
    const Letter& letter = letters[pos - 1];
    --pos;
    if (!t.suspended_.empty()) {
      t.suspended_.letters.insert(t.suspended_.letters.begin(), letter);
      ++result.steps;
    } else if (const auto* tw = std::get_if<Twist>(&letter.gen)) {
      twist(t, tw->curve, letter.sign, result.steps);
    } else {
      table(t, letter, result.steps);
    }
  }
  return result;
}

CurveTerm curve_image(const Atlas& atlas, const Word& w, const CurveTerm& c, std::size_t budget) {
  return Rewriter(atlas).image(w, c, budget).term;
}

Word conjugate_twist(const Atlas& atlas, const Word& w, const CurveId& c, std::size_t budget) {
  const CurveTerm img = curve_image(atlas, w, CurveTerm(c), budget);
  if (img.is_atlas()) return twist_word(img.base());
  return conj(twist_word(c), w);
}

}  // namespace bigmcg
