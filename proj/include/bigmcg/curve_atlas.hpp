#pragma once

#include <optional>
#include <vector>

#include "bigmcg/curve.hpp"
#include "bigmcg/h1.hpp"
#include "bigmcg/word.hpp"

namespace bigmcg {

// Handle position (end, index >= 1) in the star model of S(n).
struct Handle {
  int end = 1;
  int index = 1;
  auto operator<=>(const Handle&) const = default;
};

// One elementary move of the model; every non-twist letter is a short sequence of these.
struct Primitive {
  enum class Kind { Permute, ShiftForward, ShiftBackward };
  Kind kind = Kind::Permute;
  std::vector<int> perm;  // 1-based image of each end (Permute only)
  bool flip = false;      // swaps the a and a' rows (Permute only)
  int from = 1;           // shift pair (ShiftForward / ShiftBackward)
  int to = 2;
};

// The S(n) model (n >= 3): intersection oracle, action tables and homology marking.
class Atlas {
 public:
  explicit Atlas(int ends);
  int ends() const { return ends_; }

  // Declared geometric intersection number; nullopt where the model does not pin it down
  // (some pairs involving lantern diagonals).  Throws DomainError on malformed curves.
  std::optional<int> intersection(const CurveId& x, const CurveId& y) const;
  bool disjoint(const CurveId& x, const CurveId& y) const;

  // Image of an atlas curve under a non-twist letter; nullopt when it leaves the atlas.
  std::optional<CurveId> image(const Letter& letter, const CurveId& c) const;
  std::optional<CurveId> image(const Word& non_twist_word, const CurveId& c) const;

  // Exact action of a non-twist letter on a basis vector (always defined).
  H1Vector basis_image(const Letter& letter, const BasisIndex& e) const;
  // Action of a letter on end labels.
  std::vector<int> end_map(const Letter& letter) const;

  H1Vector homology_class(const CurveId& c) const;

  // All atlas curves with index <= window, in a fixed order.
  std::vector<CurveId> curves(int window) const;

  std::vector<Primitive> decompose(const Letter& letter) const;
  Handle move(const Primitive& p, const Handle& h) const;
  std::optional<CurveId> apply(const Primitive& p, const CurveId& c) const;

 private:
  int next_end(int j) const { return j % ends_ + 1; }
  std::pair<Handle, Handle> link_ends(const CurveId& c) const;
  std::optional<CurveId> resolve_link(Handle p, Handle q) const;

  int ends_;
};

// |k| * iab^2
int twisted_intersection(int iab, int k);

// Genus enclosed between two separating S-family curves.
int genus_between(const CurveId& first, const CurveId& second);

}  // namespace bigmcg
