#include "bigmcg/curve_atlas.hpp"

#include <algorithm>
#include <cstdlib>

#include "bigmcg/error.hpp"

namespace bigmcg {

namespace {

bool on_handle(Family f) { return f == Family::A || f == Family::Aprime || f == Family::B; }
bool primed_diagonal(Family f) { return f == Family::D1prime || f == Family::D2prime; }
bool diagonal(Family f) { return f == Family::D1 || f == Family::D2 || primed_diagonal(f); }

// Image of a family under the orientation-reversing symmetries.
Family mirror(Family f) {
  switch (f) {
    case Family::A: return Family::Aprime;
    case Family::Aprime: return Family::A;
    case Family::D1: return Family::D1prime;
    case Family::D2: return Family::D2prime;
    case Family::D1prime: return Family::D1;
    case Family::D2prime: return Family::D2;
    default: return f;
  }
}

}  // namespace

Atlas::Atlas(int ends) : ends_(ends) {
  if (ends < 3) throw DomainError("the S(n) curve model needs n >= 3");
}

std::pair<Handle, Handle> Atlas::link_ends(const CurveId& c) const {
  if (c.index == 0) return {Handle{c.end, 1}, Handle{next_end(c.end), 1}};
  return {Handle{c.end, c.index}, Handle{c.end, c.index + 1}};
}

std::optional<CurveId> Atlas::resolve_link(Handle p, Handle q) const {
  if (p.end == q.end && std::abs(p.index - q.index) == 1)
    return CurveId{Family::C, p.end, std::min(p.index, q.index)};
  if (p.index == 1 && q.index == 1) {
    if (q.end == next_end(p.end)) return CurveId{Family::C, p.end, 0};
    if (p.end == next_end(q.end)) return CurveId{Family::C, q.end, 0};
  }
  return std::nullopt;
}

std::optional<int> Atlas::intersection(const CurveId& x0, const CurveId& y0) const {
  require_well_formed(x0, ends_);
  require_well_formed(y0, ends_);
  if (x0 == y0) return 0;
  if (primed_diagonal(x0.family) || primed_diagonal(y0.family)) {
    if (diagonal(x0.family) && diagonal(y0.family) && primed_diagonal(x0.family) != primed_diagonal(y0.family)) {
      // diagonals of the two mirrored lanterns
      if (x0.end != y0.end) return 0;
      return std::abs(x0.index - y0.index) <= 2 ? std::nullopt : std::optional<int>(0);
    }
    return intersection({mirror(x0.family), x0.end, x0.index}, {mirror(y0.family), y0.end, y0.index});
  }
  const bool ordered = x0.family <= y0.family;
  const CurveId& x = ordered ? x0 : y0;
  const CurveId& y = ordered ? y0 : x0;

  if (on_handle(x.family) && on_handle(y.family)) {
    const bool same_handle = x.end == y.end && x.index == y.index;
    return same_handle && y.family == Family::B ? 1 : 0;
  }
  if (y.family == Family::C) {
    if (x.family != Family::B) return 0;  // a, a' and c are pairwise disjoint
    auto [p, q] = link_ends(y);
    const Handle h{x.end, x.index};
    return h == p || h == q ? 1 : 0;
  }
  if (y.family == Family::S) {
    if (x.family != Family::C) return 0;
    auto [p, q] = link_ends(x);
    auto beyond = [&](Handle h) { return h.end == y.end && h.index > y.index; };
    return beyond(p) != beyond(q) ? 2 : 0;
  }

  // y is a lantern diagonal on handles k, k+1, k+2 of its end.
  const int k = y.index;
  auto in_lantern = [&](Handle h) { return h.end == y.end && h.index >= k && h.index <= k + 2; };
  switch (x.family) {
    case Family::A:
      return x.end == y.end && x.index == k + 1 ? 2 : 0;
    case Family::Aprime:
    case Family::B:
      return in_lantern(Handle{x.end, x.index}) ? std::nullopt : std::optional<int>(0);
    case Family::C: {
      if (x.end == y.end && (x.index == k || x.index == k + 1)) return 0;  // boundary of the lantern
      auto [p, q] = link_ends(x);
      return in_lantern(p) || in_lantern(q) ? std::nullopt : std::optional<int>(0);
    }
    case Family::S:
      return x.end == y.end && (x.index == k || x.index == k + 1) ? std::nullopt : std::optional<int>(0);
    default:
      if (x.end != y.end) return 0;
      if (x.index == k) return 2;  // d1 and d2 of the same lantern
      return std::abs(x.index - k) <= 2 ? std::nullopt : std::optional<int>(0);
  }
  return std::nullopt;
}

bool Atlas::disjoint(const CurveId& x, const CurveId& y) const {
  const auto value = intersection(x, y);
  return value && *value == 0;
}

std::vector<Primitive> Atlas::decompose(const Letter& letter) const {
  const int n = ends_;
  auto permute = [&](auto&& f, bool flip) {
    Primitive p;
    p.kind = Primitive::Kind::Permute;
    p.flip = flip;
    p.perm.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 1; j <= n; ++j) p.perm[static_cast<std::size_t>(j)] = f(j);
    return p;
  };
  auto wrap = [n](int j) { return ((j - 1) % n + n) % n + 1; };
  auto shift = [](int from, int to, bool forward) {
    Primitive p;
    p.kind = forward ? Primitive::Kind::ShiftForward : Primitive::Kind::ShiftBackward;
    p.from = from;
    p.to = to;
    return p;
  };
  const auto tau1 = permute([](int j) { return j == 1 ? 2 : j == 2 ? 1 : j; }, true);
  const bool forward = letter.sign > 0;

  struct Visitor {
    const Atlas& atlas;
    bool forward;
    decltype(permute)& make_perm;
    decltype(wrap)& wrap_end;
    decltype(shift)& make_shift;
    const Primitive& tau1;
    int n;

    std::vector<Primitive> operator()(const Twist&) const {
      throw DomainError("twists have no table action");
    }
    std::vector<Primitive> operator()(const Shift& s) const {
      if (!adjacent_shift(s, n)) {
        std::vector<Primitive> out;
        for (const auto& l : expand_shifts(Word{{Letter{s, forward ? 1 : -1}}}, n).letters) {
          auto part = atlas.decompose(l);
          out.insert(out.begin(), part.begin(), part.end());
        }
        return out;
      }
      return {make_shift(s.from, s.to, forward)};
    }
    std::vector<Primitive> operator()(const Rotation&) const {
      const int step = forward ? 1 : -1;
      return {make_perm([&](int j) { return wrap_end(j + step); }, false)};
    }
    std::vector<Primitive> operator()(const Rho1&) const {
      return {make_perm([&](int j) { return wrap_end(n + 2 - j); }, true)};
    }
    std::vector<Primitive> operator()(const Rho2&) const {
      return {make_perm([&](int j) { return n + 1 - j; }, true)};
    }
    std::vector<Primitive> operator()(const Tau1&) const { return {tau1}; }
    std::vector<Primitive> operator()(const Tau2&) const {
      // tau2 = tau1 o h[1,2]; first primitive acts first.
      if (forward) return {make_shift(1, 2, true), tau1};
      return {tau1, make_shift(1, 2, false)};
    }
  };
  return std::visit(Visitor{*this, forward, permute, wrap, shift, tau1, n}, letter.gen);
}

Handle Atlas::move(const Primitive& p, const Handle& h) const {
  switch (p.kind) {
    case Primitive::Kind::Permute:
      return {p.perm[static_cast<std::size_t>(h.end)], h.index};
    case Primitive::Kind::ShiftForward:
      if (h.end == p.from) return h.index == 1 ? Handle{p.to, 1} : Handle{h.end, h.index - 1};
      if (h.end == p.to) return {h.end, h.index + 1};
      return h;
    case Primitive::Kind::ShiftBackward:
      if (h.end == p.to) return h.index == 1 ? Handle{p.from, 1} : Handle{h.end, h.index - 1};
      if (h.end == p.from) return {h.end, h.index + 1};
      return h;
  }
  return h;
}

std::optional<CurveId> Atlas::apply(const Primitive& p, const CurveId& c) const {
  using Kind = Primitive::Kind;
  switch (c.family) {
    case Family::A:
    case Family::Aprime:
    case Family::B: {
      const Handle h = move(p, {c.end, c.index});
      Family f = c.family;
      if (p.kind == Kind::Permute) {
        if (p.flip && f != Family::B) f = f == Family::A ? Family::Aprime : Family::A;
      } else if (h.end != c.end && f != Family::B) {
        // Crossing the core: a' becomes a going forward and back again going backward.
        const Family survives = p.kind == Kind::ShiftForward ? Family::Aprime : Family::A;
        if (f != survives) return std::nullopt;
        f = f == Family::A ? Family::Aprime : Family::A;
      }
      return CurveId{f, h.end, h.index};
    }
    case Family::C: {
      auto [first, second] = link_ends(c);
      return resolve_link(move(p, first), move(p, second));
    }
    case Family::S: {
      if (p.kind == Kind::Permute) return CurveId{Family::S, p.perm[static_cast<std::size_t>(c.end)], c.index};
      const int shrinking = p.kind == Kind::ShiftForward ? p.from : p.to;
      const int growing = p.kind == Kind::ShiftForward ? p.to : p.from;
      if (c.end == shrinking) {
        if (c.index == 0) return std::nullopt;
        return CurveId{Family::S, c.end, c.index - 1};
      }
      if (c.end == growing) return CurveId{Family::S, c.end, c.index + 1};
      return c;
    }
    default: {
      const Family f = p.kind == Kind::Permute && p.flip ? mirror(c.family) : c.family;
      const Handle h0 = move(p, {c.end, c.index});
      const Handle h1 = move(p, {c.end, c.index + 1});
      const Handle h2 = move(p, {c.end, c.index + 2});
      if (h1 != Handle{h0.end, h0.index + 1} || h2 != Handle{h0.end, h0.index + 2}) return std::nullopt;
      return CurveId{f, h0.end, h0.index};
    }
  }
  return std::nullopt;
}

std::optional<CurveId> Atlas::image(const Letter& letter, const CurveId& c) const {
  require_well_formed(c, ends_);
  std::optional<CurveId> current = c;
  for (const auto& p : decompose(letter)) {
    current = apply(p, *current);
    if (!current) return std::nullopt;
  }
  return current;
}

std::optional<CurveId> Atlas::image(const Word& w, const CurveId& c) const {
  std::optional<CurveId> current = c;
  for (auto it = w.letters.rbegin(); it != w.letters.rend() && current; ++it) current = image(*it, *current);
  return current;
}

H1Vector Atlas::basis_image(const Letter& letter, const BasisIndex& e) const {
  if (e.kind == BasisKind::Delta) {
    const auto map = end_map(letter);
    return H1Vector::boundary(map[static_cast<std::size_t>(e.end)], ends_);
  }
  Handle h{e.end, e.index};
  for (const auto& p : decompose(letter)) h = move(p, h);
  return H1Vector::basis(BasisIndex{e.kind, h.end, h.index});
}

std::vector<int> Atlas::end_map(const Letter& letter) const {
  std::vector<int> map(static_cast<std::size_t>(ends_) + 1);
  for (int j = 0; j <= ends_; ++j) map[static_cast<std::size_t>(j)] = j;
  if (std::holds_alternative<Twist>(letter.gen)) return map;
  for (const auto& p : decompose(letter)) {
    if (p.kind != Primitive::Kind::Permute) continue;
    for (int j = 1; j <= ends_; ++j) map[static_cast<std::size_t>(j)] = p.perm[static_cast<std::size_t>(map[static_cast<std::size_t>(j)])];
  }
  return map;
}

H1Vector Atlas::homology_class(const CurveId& c) const {
  require_well_formed(c, ends_);
  const int j = c.end, k = c.index;
  H1Vector v;
  switch (c.family) {
    case Family::A:
    case Family::Aprime:
      return v.add(BasisIndex::alpha(j, k), 1);
    case Family::B:
      return v.add(BasisIndex::beta(j, k), 1);
    case Family::C:
      if (k == 0) return v.add(BasisIndex::alpha(j, 1), 1).add(BasisIndex::alpha(next_end(j), 1), -1);
      return v.add(BasisIndex::alpha(j, k), 1).add(BasisIndex::alpha(j, k + 1), -1);
    case Family::S:
      return H1Vector::boundary(j, ends_);
    case Family::D1:
    case Family::D1prime:
      return v.add(BasisIndex::alpha(j, k), 1).add(BasisIndex::alpha(j, k + 2), -1);
    case Family::D2:
    case Family::D2prime:
      return v.add(BasisIndex::alpha(j, k), 1).add(BasisIndex::alpha(j, k + 1), -1).add(BasisIndex::alpha(j, k + 2), 1);
  }
  return v;
}

std::vector<CurveId> Atlas::curves(int window) const {
  std::vector<CurveId> out;
  for (Family f : {Family::A, Family::Aprime, Family::B, Family::C, Family::S, Family::D1, Family::D2,
                   Family::D1prime, Family::D2prime})
    for (int j = 1; j <= ends_; ++j)
      for (int i = min_index(f); i <= window; ++i) out.push_back({f, j, i});
  return out;
}

int twisted_intersection(int iab, int k) {
  if (iab < 0) throw DomainError("intersection numbers are nonnegative");
  return std::abs(k) * iab * iab;
}

int genus_between(const CurveId& first, const CurveId& second) {
  if (first.family != Family::S || second.family != Family::S)
    throw DomainError("genus_between expects separating s-curves");
  if (first.index < 0 || second.index < 0) throw DomainError("malformed separating curve");
  if (first.end == second.end) return std::abs(first.index - second.index);
  return first.index + second.index;
}

}  // namespace bigmcg
