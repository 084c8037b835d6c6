#include "bigmcg/polish_lab.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "bigmcg/error.hpp"

namespace bigmcg {

CountableGraph CountableGraph::complete() {
  return {[](Vertex u, Vertex v) { return u != v; }, std::nullopt};
}

AutMap identity_map(Vertex depth) {
  return {[](Vertex v) { return v; }, [](Vertex v) { return v; }, depth};
}

AutMap inverse(const AutMap& f) { return {f.backward, f.forward, f.depth}; }

AutMap compose(const AutMap& f, const AutMap& g) {
  return {[f, g](Vertex v) { return f.forward(g.forward(v)); }, [f, g](Vertex v) { return g.backward(f.backward(v)); },
          std::max(f.depth, g.depth)};
}

bool check_automorphism(const AutMap& f, const CountableGraph& graph, Vertex depth) {
  for (Vertex v = 1; v <= depth; ++v)
    if (f.backward(f.forward(v)) != v || f.forward(f.backward(v)) != v) return false;
  for (Vertex u = 1; u <= depth; ++u)
    for (Vertex v = u + 1; v <= depth; ++v)
      if (graph.adjacent(u, v) != graph.adjacent(f.forward(u), f.forward(v))) return false;
  return true;
}

namespace {

Dyadic normalized(Integer numerator, unsigned exponent, bool bound) {
  while (exponent > 0 && numerator != 0 && (numerator & 1) == 0) {
    numerator >>= 1;
    --exponent;
  }
  if (numerator == 0) exponent = 0;
  return {numerator, exponent, bound};
}

}  // namespace

Dyadic Dyadic::power_of_half(unsigned k) { return {1, k, false}; }

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  const unsigned e = std::max(a.exponent, b.exponent);
  const Integer sum = (a.numerator << (e - a.exponent)) + (b.numerator << (e - b.exponent));
  return normalized(sum, e, a.upper_bound || b.upper_bound);
}

bool operator==(const Dyadic& a, const Dyadic& b) { return a.numerator == b.numerator && a.exponent == b.exponent; }

bool operator<(const Dyadic& a, const Dyadic& b) {
  const unsigned e = std::max(a.exponent, b.exponent);
  return (a.numerator << (e - a.exponent)) < (b.numerator << (e - b.exponent));
}

double Dyadic::to_double() const { return std::ldexp(numerator.convert_to<double>(), -static_cast<int>(exponent)); }

std::string Dyadic::to_string() const {
  std::string out = exponent == 0 ? numerator.str() : numerator.str() + "/" + (Integer(1) << exponent).str();
  return upper_bound ? out + " (bound)" : out;
}

Dyadic metric_d(const AutMap& f, const AutMap& g, Vertex depth) {
  if (depth < 1) throw DomainError("depth must be >= 1");
  for (Vertex i = 1; i <= depth; ++i)
    if (f.forward(i) != g.forward(i)) return Dyadic::power_of_half(static_cast<unsigned>(i));
  return {0, 0, true};
}

Dyadic metric_dprime(const AutMap& f, const AutMap& g, Vertex depth) {
  return metric_d(f, g, depth) + metric_d(inverse(f), inverse(g), depth);
}

AutMap shift_example(Vertex n) {
  if (n < 1) throw DomainError("family index must be >= 1");
  auto forward = [n](Vertex i) { return i < n ? i + 1 : i == n ? Vertex{1} : i; };
  auto backward = [n](Vertex i) { return i == 1 ? n : i <= n ? i - 1 : i; };
  return {forward, backward, 2 * n + 2};
}

AutFamily shift_family() {
  return [](Vertex n) { return shift_example(n); };
}

AutFamily constant_family() {
  return [](Vertex) { return identity_map(); };
}

CauchyReport cauchy_report(const AutFamily& family, int threshold, Vertex depth) {
  if (threshold < 1) throw DomainError("threshold must be >= 1");
  CauchyReport report;
  report.threshold = threshold;
  report.depth = depth;
  const Dyadic bound = Dyadic::power_of_half(static_cast<unsigned>(threshold));
  bool first = true;
  for (Vertex n = static_cast<Vertex>(threshold) + 1; n <= depth; ++n) {
    const AutMap gn = family(n);
    for (Vertex m = n + 1; m <= depth; ++m) {
      const AutMap gm = family(m);
      const Dyadic fwd = metric_d(gn, gm, depth);
      const Dyadic inv = metric_d(inverse(gn), inverse(gm), depth);
      ++report.pairs;
      if (bound < fwd) ++report.forward_violations;
      if (bound < inv) ++report.inverse_violations;
      if (first || report.forward_max < fwd) report.forward_max = fwd;
      if (first || report.inverse_max < inv) report.inverse_max = inv;
      if (first || inv < report.inverse_min) report.inverse_min = inv;
      first = false;
    }
  }
  return report;
}

namespace {

std::optional<std::vector<Vertex>> stable_values(const AutFamily& family, Vertex bound, bool backward) {
  const Vertex horizon = 2 * bound + 2;
  std::vector<AutMap> members;
  for (Vertex n = bound + 1; n <= horizon; ++n) members.push_back(family(n));
  std::vector<Vertex> values;
  for (Vertex i = 1; i <= bound; ++i) {
    auto at = [&](const AutMap& g) { return backward ? g.backward(i) : g.forward(i); };
    const Vertex value = at(members.back());
    for (const auto& g : members)
      if (at(g) != value) return std::nullopt;
    values.push_back(value);
  }
  return values;
}

}  // namespace

PointwiseLimit pointwise_limit(const AutFamily& family, Vertex bound) {
  if (bound < 1) throw DomainError("bound must be >= 1");
  auto values = stable_values(family, bound, false);
  if (!values) throw DomainError("family does not stabilize pointwise within the bound");
  PointwiseLimit out;
  out.values = std::move(*values);
  std::set<Vertex> seen(out.values.begin(), out.values.end());
  out.injective = seen.size() == out.values.size();
  out.misses_first = seen.count(1) == 0;
  out.inverse_values = stable_values(family, bound, true);
  if (out.inverse_values) {
    out.automorphism = true;
    for (Vertex i = 1; i <= bound; ++i) {
      const Vertex img = out.values[i - 1];
      if (img <= bound && (*out.inverse_values)[img - 1] != i) out.automorphism = false;
      const Vertex pre = (*out.inverse_values)[i - 1];
      if (pre <= bound && out.values[pre - 1] != i) out.automorphism = false;
    }
  }
  return out;
}

bool in_stabilizer(const AutMap& g, const std::set<Vertex>& fixed) {
  return std::all_of(fixed.begin(), fixed.end(), [&](Vertex v) { return g.forward(v) == v; });
}

AutMap dense_support_element(const AutMap& g, const std::set<Vertex>& a, const CountableGraph& graph) {
  std::map<Vertex, Vertex> table;
  std::set<Vertex> image;
  for (Vertex v : a) {
    table[v] = g.forward(v);
    image.insert(g.forward(v));
  }
  // Points of g(A) outside A go back to A \ g(A), following g^-1 until it leaves g(A).
  for (Vertex v : image) {
    if (a.count(v)) continue;
    Vertex back = g.backward(v);
    while (image.count(back)) back = g.backward(back);
    table[v] = back;
  }
  std::map<Vertex, Vertex> reverse;
  for (const auto& [k, v] : table) reverse[v] = k;
  AutMap h{[table](Vertex v) {
             auto it = table.find(v);
             return it == table.end() ? v : it->second;
           },
           [reverse](Vertex v) {
             auto it = reverse.find(v);
             return it == reverse.end() ? v : it->second;
           },
           g.depth};
  Vertex reach = g.depth;
  for (const auto& [k, v] : table) reach = std::max({reach, k, v});
  if (!check_automorphism(h, graph, reach))
    throw DomainError("finitely supported approximation is not an automorphism of this graph");
  return h;
}

std::set<Vertex> support(const AutMap& h, Vertex depth) {
  std::set<Vertex> out;
  for (Vertex v = 1; v <= depth; ++v)
    if (h.forward(v) != v) out.insert(v);
  return out;
}

}  // namespace bigmcg
