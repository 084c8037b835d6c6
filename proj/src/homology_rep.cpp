#include "bigmcg/homology_rep.hpp"

#include "bigmcg/error.hpp"

namespace bigmcg {

H1Vector act_letter(const Atlas& atlas, const Letter& letter, const H1Vector& x) {
  if (const auto* twist = std::get_if<Twist>(&letter.gen))
    return transvection(atlas.homology_class(twist->curve), x, letter.sign);
  H1Vector out;
  for (const auto& [e, c] : x.terms()) out.add(atlas.basis_image(letter, e), c);
  return out;
}

std::optional<H1Vector> act(const Atlas& atlas, const Word& w, const H1Vector& x, int window) {
  const Word expanded = expand_shifts(w, atlas.ends());
  const int limit = window + static_cast<int>(expanded.size()) + 2;
  if (x.max_index() > limit) return std::nullopt;
  H1Vector current = x;
  for (auto it = expanded.letters.rbegin(); it != expanded.letters.rend(); ++it) {
    current = act_letter(atlas, *it, current);
    if (current.max_index() > limit) return std::nullopt;
  }
  return current;
}

bool check_twist_formula(const Atlas& atlas, const CurveId& a, const CurveId& b, int k, int window) {
  const auto declared = atlas.intersection(a, b);
  if (!declared || *declared > 1) throw DomainError("twist formula check needs declared intersection 0 or 1");
  const H1Vector cls = atlas.homology_class(b);
  const auto moved = act(atlas, twist_word(a, k), cls, window);
  if (!moved) return false;
  return abs(pairing(*moved, cls)) == twisted_intersection(*declared, k);
}

}  // namespace bigmcg
