#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bigmcg/h1.hpp"

namespace bigmcg {

using Vertex = std::uint64_t;  // enumeration index, x_1 = 1

struct CountableGraph {
  std::function<bool(Vertex, Vertex)> adjacent;
  std::optional<Vertex> size;  // finite truncation, if any
  static CountableGraph complete();
};

// Bijection of the vertex enumeration given by a forward and backward oracle.
struct AutMap {
  std::function<Vertex(Vertex)> forward;
  std::function<Vertex(Vertex)> backward;
  Vertex depth = 64;  // inspection bound for certificates

  Vertex operator()(Vertex v) const { return forward(v); }
};

AutMap identity_map(Vertex depth = 64);
AutMap inverse(const AutMap& f);
// (f * g)(v) = f(g(v))
AutMap compose(const AutMap& f, const AutMap& g);

// backward o forward = id and adjacency preserved on every index/pair <= depth.
bool check_automorphism(const AutMap& f, const CountableGraph& graph, Vertex depth);

// numerator / 2^exponent, normalized; `upper_bound` marks "no disagreement seen up to depth".
struct Dyadic {
  Integer numerator = 0;
  unsigned exponent = 0;
  bool upper_bound = false;

  static Dyadic power_of_half(unsigned k);
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b);
  friend bool operator<(const Dyadic& a, const Dyadic& b);
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return !(b < a); }
  double to_double() const;
  std::string to_string() const;
};

// 2^-k for the first index k <= depth where f and g disagree; 0 flagged as a bound otherwise.
Dyadic metric_d(const AutMap& f, const AutMap& g, Vertex depth);
Dyadic metric_dprime(const AutMap& f, const AutMap& g, Vertex depth);

// g_n: x_i -> x_{i+1} for i < n, x_n -> x_1, fixes x_i for i > n.
AutMap shift_example(Vertex n);

using AutFamily = std::function<AutMap(Vertex)>;
AutFamily shift_family();
AutFamily constant_family();

struct CauchyReport {
  int threshold = 0;  // N
  Vertex depth = 0;
  std::size_t pairs = 0;
  std::size_t forward_violations = 0;
  std::size_t inverse_violations = 0;
  Dyadic forward_max;
  Dyadic inverse_max;
  Dyadic inverse_min;
  bool forward_cauchy() const { return forward_violations == 0; }
  bool inverse_cauchy() const { return inverse_violations == 0; }
};

// Checks d(g_n, g_m) <= 2^-N for all N < n < m <= depth, and the same for the inverses.
CauchyReport cauchy_report(const AutFamily& family, int threshold, Vertex depth);

struct PointwiseLimit {
  std::vector<Vertex> values;  // values[i-1] = s(x_i) for i <= bound
  bool injective = false;
  bool misses_first = false;   // no index <= bound is sent to x_1
  std::optional<std::vector<Vertex>> inverse_values;
  bool automorphism = false;   // both limits exist and are mutually inverse on the prefix
};

// Pointwise limit on x_1..x_bound; throws DomainError when some index has not stabilized by
// member bound+1 (checked through member 2*bound+2).
PointwiseLimit pointwise_limit(const AutFamily& family, Vertex bound);

bool in_stabilizer(const AutMap& g, const std::set<Vertex>& fixed);

// A finitely supported h with h = g on A and support in A u g(A), so h lies in g U(A).
AutMap dense_support_element(const AutMap& g, const std::set<Vertex>& a,
                             const CountableGraph& graph = CountableGraph::complete());
std::set<Vertex> support(const AutMap& h, Vertex depth);

}  // namespace bigmcg
