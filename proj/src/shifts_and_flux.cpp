#include "bigmcg/shifts_and_flux.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "bigmcg/error.hpp"

namespace bigmcg {

Perm::Perm(int n) : images_(static_cast<std::size_t>(n)) {
  if (n < 1) throw DomainError("permutation size must be positive");
  std::iota(images_.begin(), images_.end(), 1);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > size() || seen[static_cast<std::size_t>(v)]) throw DomainError("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm Perm::cycle(int n) {
  Perm p(n);
  for (int j = 1; j <= n; ++j) p.images_[static_cast<std::size_t>(j - 1)] = j % n + 1;
  return p;
}

Perm Perm::transposition(int n, int a, int b) {
  Perm p(n);
  if (a < 1 || b < 1 || a > n || b > n) throw DomainError("transposition out of range");
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Perm Perm::parse(std::string_view text, int n) {
  Perm p(n);
  std::vector<int> images = p.images_;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw ParseError(pos, "expected '('");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError(pos, "expected ')'");
    std::vector<int> cyc;
    std::istringstream in{std::string(text.substr(pos + 1, close - pos - 1))};
    for (int v; in >> v;) {
      if (v < 1 || v > n || used[static_cast<std::size_t>(v)]) throw ParseError(pos, "bad cycle entry");
      used[static_cast<std::size_t>(v)] = true;
      cyc.push_back(v);
    }
    if (!in.eof()) throw ParseError(pos, "bad cycle entry");
    for (std::size_t k = 0; k < cyc.size(); ++k)
      images[static_cast<std::size_t>(cyc[k] - 1)] = cyc[(k + 1) % cyc.size()];
    pos = close + 1;
  }
  return Perm(std::move(images));
}

bool Perm::is_identity() const {
  for (int j = 1; j <= size(); ++j)
    if ((*this)(j) != j) return false;
  return true;
}

Perm operator*(const Perm& lhs, const Perm& rhs) {
  if (lhs.size() != rhs.size()) throw DomainError("permutation sizes differ");
  Perm out(lhs.size());
  for (int j = 1; j <= lhs.size(); ++j) out.images_[static_cast<std::size_t>(j - 1)] = lhs(rhs(j));
  return out;
}

Perm Perm::inverse() const {
  Perm out(size());
  for (int j = 1; j <= size(); ++j) out.images_[static_cast<std::size_t>((*this)(j) - 1)] = j;
  return out;
}

std::string Perm::cycles() const {
  std::string out;
  std::vector<bool> seen(static_cast<std::size_t>(size()) + 1, false);
  for (int j = 1; j <= size(); ++j) {
    if (seen[static_cast<std::size_t>(j)] || (*this)(j) == j) continue;
    out += "(";
    for (int k = j; !seen[static_cast<std::size_t>(k)]; k = (*this)(k)) {
      if (k != j) out += " ";
      out += std::to_string(k);
      seen[static_cast<std::size_t>(k)] = true;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Perm end_permutation(const Atlas& atlas, const Word& w) {
  Perm total(atlas.ends());
  const Word expanded = expand_shifts(w, atlas.ends());
  for (const auto& letter : expanded.letters) {
    if (std::holds_alternative<Twist>(letter.gen)) continue;
    const auto map = atlas.end_map(letter);
    total = total * Perm(std::vector<int>(map.begin() + 1, map.end()));
  }
  return total;
}

EventuallyPeriodicBits canonicalize(const EventuallyPeriodicBits& bits) {
  if (bits.period.empty()) throw DomainError("period must be nonempty");
  std::vector<bool> period = bits.period;
  // Minimal period: smallest divisor d of |period| with period d-periodic.
  const std::size_t len = period.size();
  for (std::size_t d = 1; d <= len; ++d) {
    if (len % d != 0) continue;
    bool ok = true;
    for (std::size_t k = d; k < len && ok; ++k) ok = period[k] == period[k - d];
    if (ok) {
      period.resize(d);
      break;
    }
  }
  // Fold the preamble into the period from the right while the last preamble bit matches.
  std::vector<bool> preamble = bits.preamble;
  while (!preamble.empty() && preamble.back() == period.back()) {
    preamble.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  return {preamble, period};
}

EventuallyPeriodicBits parse_bits(std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError(0, "expected 'preamble|period'");
  EventuallyPeriodicBits bits;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (k == bar) continue;
    if (text[k] != '0' && text[k] != '1') throw ParseError(k, "expected bit");
    (k < bar ? bits.preamble : bits.period).push_back(text[k] == '1');
  }
  if (bits.period.empty()) throw ParseError(bar + 1, "period must be nonempty");
  return canonicalize(bits);
}

std::string to_string(const EventuallyPeriodicBits& bits) {
  std::string out;
  for (bool b : bits.preamble) out += b ? '1' : '0';
  out += '|';
  for (bool b : bits.period) out += b ? '1' : '0';
  return out;
}

bool finitely_many_ones(const EventuallyPeriodicBits& bits) {
  return std::none_of(bits.period.begin(), bits.period.end(), [](bool b) { return b; });
}

ShiftType shift_type(const ShiftSpec& spec) {
  if (spec.from_end == spec.to_end) throw DomainError("shift ends must differ");
  const bool plus_finite = finitely_many_ones(spec.plus_occupancy);
  const bool minus_finite = finitely_many_ones(spec.minus_occupancy);
  if (plus_finite && minus_finite) return ShiftType::I;
  if (!plus_finite && !minus_finite) return ShiftType::II;
  return ShiftType::III;
}

std::string to_string(ShiftType type) {
  switch (type) {
    case ShiftType::I: return "I";
    case ShiftType::II: return "II";
    case ShiftType::III: return "III";
  }
  return "?";
}

Word chain(int i, int k) {
  if (i < 1 || i >= k) throw DomainError("chain needs 1 <= i < k");
  Word w;
  for (int j = k - 1; j >= i; --j) w.letters.push_back({Shift{j, j + 1}, 1});
  return w;
}

std::optional<int> phi(const Atlas& atlas, int end, const Word& w, int window, std::size_t budget) {
  if (end < 1 || end > atlas.ends()) throw DomainError("end out of range");
  if (window < 0) throw DomainError("window must be nonnegative");
  if (!end_permutation(atlas, w).is_identity()) return std::nullopt;
  const CurveId gamma{Family::S, end, window};
  const CurveTerm img = curve_image(atlas, w, CurveTerm(gamma), budget);
  if (!img.is_atlas() || img.base().family != Family::S || img.base().end != end) return std::nullopt;
  return img.base().index - window;
}

std::optional<std::vector<int>> flux_vector(const Atlas& atlas, const Word& w, int window, std::size_t budget) {
  std::vector<int> out;
  for (int j = 1; j <= atlas.ends(); ++j) {
    const auto value = phi(atlas, j, w, window, budget);
    if (!value) return std::nullopt;
    out.push_back(*value);
  }
  if (std::accumulate(out.begin(), out.end(), 0) != 0) throw Error("flux coordinates do not sum to zero");
  return out;
}

ShadowResult compact_closure_shadow(const Atlas& atlas, const Word& w, int window) {
  if (!end_permutation(atlas, w).is_identity()) return {false, false};
  const int realizing = std::max(window, max_curve_index(w)) + static_cast<int>(w.size()) + 3;
  const auto flux = flux_vector(atlas, w, realizing);
  if (!flux) return {false, true};
  return {std::all_of(flux->begin(), flux->end(), [](int v) { return v == 0; }), false};
}

bool SeparatingWitness::holds() const {
  return genus_to_image == genus_to_curve + 1 && genus_to_preimage == genus_to_curve - 1;
}

SeparatingWitness separating_witness(const Atlas& atlas, const CurveId& c, const Shift& h) {
  require_well_formed(c, atlas.ends());
  if (c.family != Family::S) throw DomainError("separating witness needs an s-curve");
  if (!adjacent_shift(h, atlas.ends())) throw DomainError("separating witness needs an adjacent shift");
  if (c.end != h.from && c.end != h.to) throw DomainError("curve is on an end the shift does not touch");
  if (c.index < 2) throw DomainError("index too small: the shift tables leave this case undefined");
  const auto image = atlas.image(Letter{h, 1}, c);
  const auto preimage = atlas.image(Letter{h, -1}, c);
  if (!image || !preimage) throw DomainError("shift table undefined on curve");
  SeparatingWitness out;
  // On the repelling end genus leaves past the cut, so gamma sits further out; on the attracting
  // end genus arrives from outside, so gamma sits nearer the core.
  out.gamma = {Family::S, c.end, c.end == h.from ? c.index + 2 : c.index - 2};
  out.image = *image;
  out.preimage = *preimage;
  out.genus_to_curve = genus_between(out.gamma, c);
  out.genus_to_image = genus_between(out.gamma, out.image);
  out.genus_to_preimage = genus_between(out.gamma, out.preimage);
  return out;
}

std::vector<std::optional<DifferenceCheck>> difference_witnesses(const Atlas& atlas, const Word& h1,
                                                                 const Word& h2, const CurveId& c) {
  require_well_formed(c, atlas.ends());
  if (c.family != Family::S) throw DomainError("difference witness needs an s-curve");
  const std::vector<Word> words{inverse(h2) * h1, h1 * inverse(h2), inverse(h1) * h2, h2 * inverse(h1)};
  std::vector<std::optional<DifferenceCheck>> out;
  for (const auto& w : words) {
    const CurveTerm img = curve_image(atlas, w, CurveTerm(c));
    if (!img.is_atlas() || img.base().family != Family::S || img.base().end != c.end) {
      out.emplace_back(std::nullopt);
      continue;
    }
    DifferenceCheck check;
    check.word = render(w);
    check.image = img.base();
    check.gamma = {Family::S, c.end, std::max(c.index, img.base().index) + 2};
    check.genus_to_curve = genus_between(check.gamma, c);
    check.genus_to_image = genus_between(check.gamma, check.image);
    out.emplace_back(check);
  }
  return out;
}

std::size_t generated_order(const std::vector<Perm>& perms, int n) {
  if (n < 1 || n > 8) throw DomainError("closure limited to n <= 8");
  for (const auto& p : perms)
    if (p.size() != n) throw DomainError("permutation size mismatch");
  std::set<std::vector<int>> seen;
  std::queue<Perm> frontier;
  const Perm id(n);
  seen.insert(id.images());
  frontier.push(id);
  while (!frontier.empty()) {
    const Perm current = frontier.front();
    frontier.pop();
    for (const auto& g : perms) {
      Perm next = g * current;
      if (seen.insert(next.images()).second) frontier.push(std::move(next));
    }
  }
  return seen.size();
}

bool sym_generated(const std::vector<Perm>& perms, int n) {
  std::size_t factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= static_cast<std::size_t>(k);
  return generated_order(perms, n) == factorial;
}

std::pair<double, double> twist_point(double theta, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("twist map parameter t must lie in [0,1]");
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double angle = std::fmod(theta + kTwoPi * t, kTwoPi);
  if (angle < 0) angle += kTwoPi;
  return {angle, t};
}

std::pair<double, double> model_shift_point(double x, double y) {
  if (!(std::abs(y) <= 1.0)) throw DomainError("strip coordinate y must lie in [-1,1]");
  if (std::abs(y) <= 0.5) return {x + 1.0, y};
  if (y > 0) return {x + 2.0 - 2.0 * y, y};
  return {x + 2.0 + 2.0 * y, y};
}

}  // namespace bigmcg
