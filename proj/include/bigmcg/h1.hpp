#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace bigmcg {

using Integer = boost::multiprecision::cpp_int;

enum class BasisKind : std::uint8_t { Alpha, Beta, Delta };

// Alpha/Beta: handle `index` of `end`.  Delta: boundary class of `end` (index unused, 0);
// the last end's class is eliminated as minus the sum of the others.
struct BasisIndex {
  BasisKind kind = BasisKind::Alpha;
  int end = 1;
  int index = 1;
  auto operator<=>(const BasisIndex&) const = default;

  static BasisIndex alpha(int end, int index) { return {BasisKind::Alpha, end, index}; }
  static BasisIndex beta(int end, int index) { return {BasisKind::Beta, end, index}; }
  static BasisIndex delta(int end) { return {BasisKind::Delta, end, 0}; }
};

class H1Vector {
 public:
  using Terms = std::map<BasisIndex, Integer>;

  H1Vector() = default;
  static H1Vector basis(const BasisIndex& e) { return H1Vector().add(e, 1); }
  // Boundary class of end j in S(n), with the last end eliminated.
  static H1Vector boundary(int end, int ends);

  H1Vector& add(const BasisIndex& e, const Integer& coefficient);
  H1Vector& add(const H1Vector& other, const Integer& factor = 1);

  const Terms& terms() const { return terms_; }
  Integer coefficient(const BasisIndex& e) const;
  bool is_zero() const { return terms_.empty(); }
  // Largest handle index in the support (0 if none).
  int max_index() const;

  friend H1Vector operator+(H1Vector lhs, const H1Vector& rhs) { return lhs.add(rhs); }
  friend H1Vector operator-(H1Vector lhs, const H1Vector& rhs) { return lhs.add(rhs, -1); }
  friend H1Vector operator*(const Integer& k, const H1Vector& v);
  bool operator==(const H1Vector&) const = default;

 private:
  Terms terms_;
};

// Intersection form: <alpha^j_i, beta^j_i> = 1, antisymmetric, boundary classes in the radical.
Integer pairing(const H1Vector& x, const H1Vector& y);

// x + k <x,c> c
H1Vector transvection(const H1Vector& c, const H1Vector& x, const Integer& k = 1);

std::string to_string(const BasisIndex& e);
std::string to_string(const H1Vector& v);

// `alpha[j,i]`, `beta[j,i]`, `delta[j]`, combined with + and - and integer factors `3*alpha[1,1]`.
H1Vector parse_vector(std::string_view text, int ends);
BasisIndex parse_basis(std::string_view text);

}  // namespace bigmcg
