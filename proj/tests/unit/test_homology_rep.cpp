#include <doctest.h>

#include <random>
#include <vector>

#include "bigmcg/curve_atlas.hpp"
#include "bigmcg/error.hpp"
#include "bigmcg/homology_rep.hpp"

using namespace bigmcg;

namespace {

H1Vector vec(const char* text, int ends = 4) { return parse_vector(text, ends); }

// Dense coordinates over a truncated basis: alpha/beta up to `window`, then delta[1..n-1].
struct DenseBasis {
  std::vector<BasisIndex> order;
  DenseBasis(int ends, int window) {
    for (int j = 1; j <= ends; ++j)
      for (int i = 1; i <= window; ++i) {
        order.push_back(BasisIndex::alpha(j, i));
        order.push_back(BasisIndex::beta(j, i));
      }
    for (int j = 1; j < ends; ++j) order.push_back(BasisIndex::delta(j));
  }
  std::vector<long long> coords(const H1Vector& v) const {
    std::vector<long long> out(order.size(), 0);
    for (std::size_t k = 0; k < order.size(); ++k) out[k] = static_cast<long long>(v.coefficient(order[k]));
    return out;
  }
  // Gram matrix of the intersection form.
  std::vector<std::vector<long long>> gram() const {
    std::vector<std::vector<long long>> g(order.size(), std::vector<long long>(order.size(), 0));
    for (std::size_t a = 0; a < order.size(); ++a)
      for (std::size_t b = 0; b < order.size(); ++b)
        g[a][b] = static_cast<long long>(pairing(H1Vector::basis(order[a]), H1Vector::basis(order[b])));
    return g;
  }
};

// x + k (x^T G c) c, computed with plain arrays.
std::vector<long long> dense_transvection(const std::vector<std::vector<long long>>& gram,
                                          const std::vector<long long>& c, const std::vector<long long>& x,
                                          long long k) {
  long long form = 0;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) form += x[a] * gram[a][b] * c[b];
  std::vector<long long> out = x;
  for (std::size_t a = 0; a < x.size(); ++a) out[a] += k * form * c[a];
  return out;
}

}  // namespace

TEST_SUITE("homology_rep") {
  TEST_CASE("intersection form") {
    CHECK(pairing(vec("alpha[1,1]"), vec("beta[1,1]")) == 1);
    CHECK(pairing(vec("beta[1,1]"), vec("alpha[1,1]")) == -1);
    CHECK(pairing(vec("alpha[1,1]"), vec("beta[1,2]")) == 0);
    CHECK(pairing(vec("alpha[1,1]"), vec("alpha[1,1]")) == 0);
    CHECK(pairing(vec("delta[2]"), vec("alpha[2,1]+beta[2,1]")) == 0);
    CHECK(pairing(vec("3*alpha[2,2]-beta[1,1]"), vec("alpha[1,1]+5*beta[2,2]")) == 16);
  }

  TEST_CASE("boundary classes sum to zero") {
    H1Vector total;
    for (int j = 1; j <= 5; ++j) total.add(H1Vector::boundary(j, 5));
    CHECK(total.is_zero());
    CHECK(to_string(vec("delta[3]", 3)) == "-delta[1]-delta[2]");
    CHECK_THROWS_AS(H1Vector::boundary(0, 3), DomainError);
    CHECK_THROWS_AS(H1Vector::boundary(4, 3), DomainError);
  }

  TEST_CASE("vector text") {
    CHECK(to_string(vec("beta[1,1] - alpha[1,1]")) == "-alpha[1,1]+beta[1,1]");
    CHECK(to_string(vec("2*alpha[1,1]-alpha[1,1]-alpha[1,1]")) == "0");
    CHECK(vec("alpha[1,1]").max_index() == 1);
    CHECK(vec("alpha[1,1]+beta[3,9]").max_index() == 9);
    CHECK_THROWS_AS(vec(""), ParseError);
    CHECK_THROWS_AS(vec("alpha[1,1] beta[1,1]"), ParseError);
    CHECK_THROWS_AS(vec("alpha[5,1]"), ParseError);
    CHECK_THROWS_AS(vec("gamma[1,1]"), ParseError);
    CHECK_THROWS_AS(vec("alpha[0,1]"), ParseError);
    CHECK_THROWS_AS(parse_basis("beta[1,2"), ParseError);
  }

  TEST_CASE("transvections") {
    CHECK(to_string(transvection(vec("alpha[1,1]"), vec("beta[1,1]"))) == "-alpha[1,1]+beta[1,1]");
    CHECK(to_string(transvection(vec("alpha[1,1]"), vec("beta[1,1]"), -3)) == "3*alpha[1,1]+beta[1,1]");
    CHECK(transvection(vec("alpha[1,1]"), vec("alpha[2,1]")) == vec("alpha[2,1]"));
    CHECK(transvection(vec("beta[2,2]"), transvection(vec("beta[2,2]"), vec("alpha[2,2]")), -1) == vec("alpha[2,2]"));
  }

  TEST_CASE("action of generators") {
    const Atlas atlas(4);
    auto acted = [&](const char* w, const char* x) { return to_string(*act(atlas, parse_word(w), vec(x), 10)); };
    CHECK(acted("R", "alpha[1,1]") == "alpha[2,1]");
    CHECK(acted("R", "delta[4]") == "delta[1]");
    CHECK(acted("h[1,2]", "beta[1,2]") == "beta[1,1]");
    CHECK(acted("h[1,2]", "alpha[3,5]") == "alpha[3,5]");
    CHECK(acted("T[c,1,0]", "alpha[1,1]+beta[1,1]") == "alpha[2,1]+beta[1,1]");
    CHECK(acted("T[a,1,1]*inv(T[a,1,1])", "beta[1,1]") == "beta[1,1]");
    CHECK(acted("R^4", "alpha[3,2]-beta[1,7]") == "alpha[3,2]-beta[1,7]");
    CHECK(acted("h[1,3]", "beta[1,3]") == acted("h[2,3]*h[1,2]", "beta[1,3]"));
  }

  TEST_CASE("action is bounded by the window") {
    const Atlas atlas(3);
    CHECK_FALSE(act(atlas, parse_word("R"), vec("alpha[1,20]", 3), 5).has_value());
    CHECK(act(atlas, parse_word("R"), vec("alpha[1,8]", 3), 5).has_value());
  }

  TEST_CASE("action is a homomorphism") {
    const Atlas atlas(5);
    std::mt19937_64 rng(99);
    RandomWordSpec spec;
    spec.ends = 5;
    spec.length = 6;
    spec.max_index = 4;
    const std::vector<const char*> samples = {"alpha[1,1]", "beta[2,3]", "alpha[4,2]-beta[5,1]", "delta[3]"};
    for (int trial = 0; trial < 60; ++trial) {
      const Word u = random_word(rng, spec);
      const Word v = random_word(rng, spec);
      for (const char* s : samples) {
        const H1Vector x = parse_vector(s, 5);
        const auto inner = act(atlas, v, x, 40);
        REQUIRE(inner);
        CHECK(act(atlas, u * v, x, 40) == act(atlas, u, *inner, 40));
        CHECK(act(atlas, inverse(u) * u, x, 40) == x);
      }
    }
  }

  TEST_CASE("action preserves the intersection form") {
    for (int n : {3, 4, 6}) {
      const Atlas atlas(n);
      std::mt19937_64 rng(static_cast<unsigned>(n));
      RandomWordSpec spec;
      spec.ends = n;
      spec.max_index = 3;
      const DenseBasis basis(n, 3);
      for (int trial = 0; trial < 25; ++trial) {
        const Word w = random_word(rng, spec);
        for (std::size_t a = 0; a < basis.order.size(); a += 3)
          for (std::size_t b = 0; b < basis.order.size(); b += 2) {
            const H1Vector x = H1Vector::basis(basis.order[a]);
            const H1Vector y = H1Vector::basis(basis.order[b]);
            CHECK(pairing(*act(atlas, w, x, 30), *act(atlas, w, y, 30)) == pairing(x, y));
          }
      }
    }
  }

  TEST_CASE("twist words agree with a dense matrix oracle") {
    const int n = 3;
    const int window = 4;
    const Atlas atlas(n);
    const DenseBasis basis(n, window + 2);
    const auto gram = basis.gram();
    std::vector<CurveId> twistable;
    for (const auto& c : atlas.curves(window)) twistable.push_back(c);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, twistable.size() - 1);
    std::uniform_int_distribution<int> exponent(-2, 2);
    for (int trial = 0; trial < 40; ++trial) {
      Word w;
      std::vector<std::pair<CurveId, int>> letters;
      for (int k = 0; k < 4; ++k) {
        const CurveId c = twistable[pick(rng)];
        const int e = exponent(rng);
        letters.emplace_back(c, e);
        w = w * twist_word(c, e);
      }
      for (std::size_t s = 0; s < basis.order.size(); s += 5) {
        const H1Vector x = H1Vector::basis(basis.order[s]);
        std::vector<long long> dense = basis.coords(x);
        // rightmost acts first; T^e is e transvections
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
          const auto c = basis.coords(atlas.homology_class(it->first));
          for (int r = 0; r < std::abs(it->second); ++r) dense = dense_transvection(gram, c, dense, it->second > 0 ? 1 : -1);
        }
        const auto exact = act(atlas, w, x, window + 2);
        REQUIRE(exact);
        CHECK(basis.coords(*exact) == dense);
      }
    }
  }

  TEST_CASE("twist formula on declared pairs") {
    const Atlas atlas(4);
    for (int k : {-3, -1, 1, 2, 5}) {
      CHECK(check_twist_formula(atlas, parse_curve("a[1,1]"), parse_curve("b[1,1]"), k, 10));
      CHECK(check_twist_formula(atlas, parse_curve("b[2,3]"), parse_curve("c[2,3]"), k, 10));
      CHECK(check_twist_formula(atlas, parse_curve("a[1,1]"), parse_curve("a[2,1]"), k, 10));
      CHECK(check_twist_formula(atlas, parse_curve("s[1,2]"), parse_curve("b[1,1]"), k, 10));
    }
    CHECK_THROWS_AS(check_twist_formula(atlas, parse_curve("d1[1,1]"), parse_curve("d2[1,1]"), 1, 10), DomainError);
  }
}
