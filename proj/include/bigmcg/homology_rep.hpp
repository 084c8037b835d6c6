#pragma once

#include <optional>

#include "bigmcg/curve_atlas.hpp"
#include "bigmcg/h1.hpp"
#include "bigmcg/word.hpp"

namespace bigmcg {

// Exact action of a word on H1, letters applied right to left.  nullopt when an intermediate
// vector reaches handles beyond window + |w| + 2.
std::optional<H1Vector> act(const Atlas& atlas, const Word& w, const H1Vector& x, int window);
H1Vector act_letter(const Atlas& atlas, const Letter& letter, const H1Vector& x);

// |<T_a^k [b], [b]>| == |k| i(a,b)^2 for an atlas pair with declared intersection 0 or 1.
bool check_twist_formula(const Atlas& atlas, const CurveId& a, const CurveId& b, int k, int window);

}  // namespace bigmcg
