#include <doctest.h>

#include <cmath>
#include <numbers>

#include "bigmcg/error.hpp"
#include "bigmcg/shifts_and_flux.hpp"

using namespace bigmcg;

namespace {

EventuallyPeriodicBits bits(const char* text) { return parse_bits(text); }

}  // namespace

TEST_SUITE("shifts_and_flux") {
  TEST_CASE("permutations") {
    const Perm c = Perm::cycle(4);
    CHECK(c(1) == 2);
    CHECK(c(4) == 1);
    CHECK(c.cycles() == "(1 2 3 4)");
    CHECK((c * c.inverse()).is_identity());
    CHECK((c * c * c * c).is_identity());
    CHECK(Perm::transposition(4, 2, 4).cycles() == "(2 4)");
    CHECK(Perm::parse("(1 2)(3 4)", 4) == Perm(std::vector<int>{2, 1, 4, 3}));
    CHECK(Perm::parse("", 3).is_identity());
    const Perm a = Perm::parse("(1 2)", 3);
    const Perm b = Perm::parse("(2 3)", 3);
    CHECK((a * b)(3) == a(b(3)));
    CHECK_THROWS_AS(Perm(0), DomainError);
    CHECK_THROWS_AS(Perm(std::vector<int>{1, 1}), DomainError);
    CHECK_THROWS_AS(Perm::transposition(3, 1, 4), DomainError);
    CHECK_THROWS_AS(Perm::parse("(1 2", 3), ParseError);
    CHECK_THROWS_AS(Perm::parse("(1 1)", 3), ParseError);
    CHECK_THROWS_AS(Perm::parse("(1 5)", 3), ParseError);
    CHECK_THROWS_AS(a * Perm(4), DomainError);
  }

  TEST_CASE("end permutations of words") {
    const Atlas atlas(5);
    CHECK(end_permutation(atlas, parse_word("R")) == Perm::cycle(5));
    CHECK(end_permutation(atlas, parse_word("h[1,3]*T[a,2,2]")).is_identity());
    CHECK(end_permutation(atlas, parse_word("tau1")) == Perm::transposition(5, 1, 2));
    CHECK(end_permutation(atlas, parse_word("rho1*rho2")) == Perm::cycle(5));
    CHECK(end_permutation(atlas, parse_word("R*tau1"))(1) == 3);
  }

  TEST_CASE("eventually periodic bits") {
    CHECK(to_string(bits("01|1")) == "0|1");
    CHECK(to_string(bits("1|01")) == "|10");
    CHECK(to_string(bits("|0000")) == "|0");
    CHECK(to_string(bits("11|0101")) == "1|10");
    CHECK(to_string(bits("0|0")) == "|0");
  }

  TEST_CASE("bit errors") {
    CHECK_THROWS_AS(parse_bits("0101"), ParseError);
    CHECK_THROWS_AS(parse_bits("01|"), ParseError);
    CHECK_THROWS_AS(parse_bits("0a|1"), ParseError);
    CHECK_THROWS_AS(canonicalize(EventuallyPeriodicBits{{true}, {}}), DomainError);
  }

  TEST_CASE("bit canonical forms agree on equal sequences") {
    // both describe 0,1,1,1,...
    CHECK(bits("0111|11") == bits("0|1"));
    // 1,0,1,0,...
    CHECK(bits("10|10") == bits("|10"));
    CHECK(bits("1|01") == bits("|10"));
    CHECK_FALSE(bits("|10") == bits("|01"));
    CHECK(finitely_many_ones(bits("1101|0")));
    CHECK_FALSE(finitely_many_ones(bits("|001")));
  }

  TEST_CASE("shift types") {
    CHECK(shift_type({1, 2, bits("11|0"), bits("1|0")}) == ShiftType::I);
    CHECK(shift_type({1, 2, bits("|1"), bits("|10")}) == ShiftType::II);
    CHECK(shift_type({1, 2, bits("|1"), bits("1|0")}) == ShiftType::III);
    CHECK(shift_type({1, 2, bits("|0"), bits("|01")}) == ShiftType::III);
    CHECK(to_string(ShiftType::II) == "II");
    CHECK_THROWS_AS(shift_type({2, 2, bits("|0"), bits("|0")}), DomainError);
  }

  TEST_CASE("chains of adjacent shifts") {
    CHECK(render(chain(1, 2)) == "h[1,2]");
    CHECK(render(chain(1, 4)) == "h[3,4]*h[2,3]*h[1,2]");
    CHECK(chain(2, 5) == expand_shifts(parse_word("h[2,5]"), 6));
    CHECK_THROWS_AS(chain(2, 2), DomainError);
    CHECK_THROWS_AS(chain(0, 2), DomainError);
  }

  TEST_CASE("phi and flux of shifts") {
    const Atlas atlas(4);
    const Word h12 = parse_word("h[1,2]");
    CHECK(phi(atlas, 2, h12, 8) == 1);
    CHECK(phi(atlas, 1, h12, 8) == -1);
    CHECK(phi(atlas, 3, h12, 8) == 0);
    CHECK(flux_vector(atlas, h12, 8) == std::vector<int>{-1, 1, 0, 0});
    CHECK(flux_vector(atlas, parse_word("h[1,3]"), 8) == std::vector<int>{-1, 0, 1, 0});
    CHECK(flux_vector(atlas, parse_word("h[1,2]*h[2,3]"), 8) == std::vector<int>{-1, 0, 1, 0});
    CHECK(flux_vector(atlas, parse_word("h[1,2]^3*inv(h[4,1])"), 8) == std::vector<int>{-4, 3, 0, 1});
    CHECK(flux_vector(atlas, parse_word("T[a,1,1]*T[b,2,3]"), 8) == std::vector<int>{0, 0, 0, 0});
    CHECK_THROWS_AS(phi(atlas, 5, h12, 8), DomainError);
    CHECK_THROWS_AS(phi(atlas, 1, h12, -1), DomainError);
  }

  TEST_CASE("flux is additive") {
    const Atlas atlas(5);
    const std::vector<const char*> words = {"h[1,2]", "h[3,5]", "inv(h[2,4])", "h[5,1]*T[b,1,2]", "h[1,2]^(T[b,1,3])"};
    for (const char* x : words)
      for (const char* y : words) {
        const auto fx = flux_vector(atlas, parse_word(x), 10);
        const auto fy = flux_vector(atlas, parse_word(y), 10);
        const auto fxy = flux_vector(atlas, parse_word(x) * parse_word(y), 10);
        REQUIRE((fx && fy && fxy));
        for (std::size_t j = 0; j < 5; ++j) CHECK((*fxy)[j] == (*fx)[j] + (*fy)[j]);
      }
  }

  TEST_CASE("flux needs pure words") {
    const Atlas atlas(3);
    CHECK_FALSE(flux_vector(atlas, parse_word("R"), 8).has_value());
    CHECK_FALSE(phi(atlas, 1, parse_word("tau1"), 8).has_value());
    // not pure, so certainly outside the closure of compact support
    const ShadowResult shadow = compact_closure_shadow(atlas, parse_word("R"), 8);
    CHECK_FALSE(shadow.undefined);
    CHECK_FALSE(shadow.value);
  }

  TEST_CASE("compact closure shadow") {
    const Atlas atlas(4);
    CHECK_FALSE(compact_closure_shadow(atlas, parse_word("h[1,2]"), 8).value);
    CHECK(compact_closure_shadow(atlas, parse_word("h[1,2]*inv(h[1,2]^(T[b,1,3]))"), 8).value);
    CHECK(compact_closure_shadow(atlas, parse_word("T[c,2,4]"), 8).value);
    CHECK_FALSE(compact_closure_shadow(atlas, parse_word("T[c,2,4]"), 8).undefined);
  }

  TEST_CASE("separating witness") {
    const Atlas atlas(4);
    const SeparatingWitness w = separating_witness(atlas, parse_curve("s[1,3]"), Shift{1, 2});
    CHECK(w.gamma == parse_curve("s[1,5]"));
    CHECK(w.image == parse_curve("s[1,2]"));
    CHECK(w.preimage == parse_curve("s[1,4]"));
    CHECK(w.genus_to_curve == 2);
    CHECK(w.genus_to_image == 3);
    CHECK(w.genus_to_preimage == 1);
    CHECK(w.holds());
    CHECK(separating_witness(atlas, parse_curve("s[1,2]"), Shift{1, 2}).gamma == parse_curve("s[1,4]"));
    for (int i = 2; i <= 7; ++i) {
      CHECK(separating_witness(atlas, CurveId{Family::S, 1, i}, Shift{1, 2}).holds());
      CHECK(separating_witness(atlas, CurveId{Family::S, 2, i}, Shift{1, 2}).holds());
      CHECK(separating_witness(atlas, CurveId{Family::S, 4, i}, Shift{4, 1}).holds());
    }
  }

  TEST_CASE("separating witness errors") {
    const Atlas atlas(4);
    CHECK_THROWS_AS(separating_witness(atlas, parse_curve("c[1,3]"), Shift{1, 2}), DomainError);
    CHECK_THROWS_AS(separating_witness(atlas, parse_curve("s[1,3]"), Shift{1, 3}), DomainError);
    CHECK_THROWS_AS(separating_witness(atlas, parse_curve("s[3,3]"), Shift{1, 2}), DomainError);
    CHECK_THROWS_AS(separating_witness(atlas, parse_curve("s[1,1]"), Shift{1, 2}), DomainError);
  }

  TEST_CASE("differences of shifts with equal flux") {
    const Atlas atlas(4);
    const Word h1 = parse_word("h[1,2]");
    const Word h2 = parse_word("h[1,2]^(T[b,1,3])");
    const auto checks = difference_witnesses(atlas, h1, h2, parse_curve("s[1,3]"));
    CHECK(checks.size() == 4);
    for (const auto& c : checks) {
      REQUIRE(c.has_value());
      CHECK(c->holds());
      CHECK(c->genus_to_curve == 2);
    }
    CHECK_THROWS_AS(difference_witnesses(atlas, h1, h2, parse_curve("a[1,3]")), DomainError);
  }

  TEST_CASE("symmetric group generation") {
    for (int n = 3; n <= 8; ++n) {
      CHECK(sym_generated({Perm::cycle(n), Perm::transposition(n, 1, 2)}, n));
      CHECK_FALSE(sym_generated({Perm::cycle(n)}, n));
      CHECK(generated_order({Perm::cycle(n)}, n) == static_cast<std::size_t>(n));
    }
    CHECK(generated_order({Perm::transposition(4, 1, 2), Perm::transposition(4, 3, 4)}, 4) == 4);
    CHECK(generated_order({}, 3) == 1);
    CHECK_THROWS_AS(generated_order({Perm::cycle(9)}, 9), DomainError);
    CHECK_THROWS_AS(generated_order({Perm::cycle(4)}, 3), DomainError);
  }

  TEST_CASE("strip models") {
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    const auto [a0, t0] = twist_point(1.0, 0.0);
    CHECK(a0 == doctest::Approx(1.0));
    CHECK(t0 == 0.0);
    const auto [a1, t1] = twist_point(1.0, 1.0);
    CHECK(a1 == doctest::Approx(1.0));
    CHECK(t1 == 1.0);
    CHECK(twist_point(0.0, 0.25).first == doctest::Approx(kTwoPi / 4));
    CHECK(twist_point(-1.0, 0.0).first == doctest::Approx(kTwoPi - 1.0));
    CHECK_THROWS_AS(twist_point(0.0, 1.5), DomainError);
    CHECK_THROWS_AS(twist_point(0.0, std::nan("")), DomainError);

    CHECK(model_shift_point(3.0, 0.2) == std::pair{4.0, 0.2});
    CHECK(model_shift_point(3.0, 1.0) == std::pair{3.0, 1.0});
    CHECK(model_shift_point(3.0, -1.0) == std::pair{3.0, -1.0});
    CHECK(model_shift_point(0.0, 0.75).first == doctest::Approx(0.5));
    CHECK(model_shift_point(0.0, 0.5).first == doctest::Approx(1.0));
    CHECK_THROWS_AS(model_shift_point(0.0, 1.1), DomainError);
  }
}
