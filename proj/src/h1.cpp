#include "bigmcg/h1.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "bigmcg/error.hpp"

namespace bigmcg {

H1Vector H1Vector::boundary(int end, int ends) {
  if (end < 1 || end > ends) throw DomainError("boundary class of end " + std::to_string(end) + " out of range");
  H1Vector v;
  if (end < ends) return v.add(BasisIndex::delta(end), 1);
  for (int j = 1; j < ends; ++j) v.add(BasisIndex::delta(j), -1);
  return v;
}

H1Vector& H1Vector::add(const BasisIndex& e, const Integer& coefficient) {
  if (coefficient == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(e, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

H1Vector& H1Vector::add(const H1Vector& other, const Integer& factor) {
  if (factor == 0) return *this;
  for (const auto& [e, c] : other.terms_) add(e, c * factor);
  return *this;
}

Integer H1Vector::coefficient(const BasisIndex& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

int H1Vector::max_index() const {
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e.index);
  return best;
}

H1Vector operator*(const Integer& k, const H1Vector& v) {
  H1Vector out;
  return out.add(v, k);
}

Integer pairing(const H1Vector& x, const H1Vector& y) {
  Integer total = 0;
  for (const auto& [e, c] : x.terms()) {
    if (e.kind == BasisKind::Alpha)
      total += c * y.coefficient(BasisIndex::beta(e.end, e.index));
    else if (e.kind == BasisKind::Beta)
      total -= c * y.coefficient(BasisIndex::alpha(e.end, e.index));
  }
  return total;
}

H1Vector transvection(const H1Vector& c, const H1Vector& x, const Integer& k) {
  const Integer factor = k * pairing(x, c);
  if (factor == 0) return x;
  H1Vector out = x;
  return out.add(c, factor);
}

std::string to_string(const BasisIndex& e) {
  switch (e.kind) {
    case BasisKind::Alpha: return "alpha[" + std::to_string(e.end) + "," + std::to_string(e.index) + "]";
    case BasisKind::Beta: return "beta[" + std::to_string(e.end) + "," + std::to_string(e.index) + "]";
    case BasisKind::Delta: return "delta[" + std::to_string(e.end) + "]";
  }
  return "?";
}

std::string to_string(const H1Vector& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : v.terms()) {
    const bool negative = c < 0;
    const Integer magnitude = negative ? Integer(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? "-" : "+";
    if (magnitude != 1) out += magnitude.str() + "*";
    out += to_string(e);
  }
  return out;
}

BasisIndex parse_basis(std::string_view text) {
  auto numbers = [&](std::size_t from, int count) {
    int values[2] = {0, 0};
    std::size_t pos = from;
    for (int k = 0; k < count; ++k) {
      const char* first = text.data() + pos;
      auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), values[k]);
      if (ec != std::errc{}) throw ParseError(pos, "expected integer");
      pos += static_cast<std::size_t>(ptr - first);
      const char sep = k + 1 < count ? ',' : ']';
      if (pos >= text.size() || text[pos] != sep) throw ParseError(pos, std::string("expected '") + sep + "'");
      ++pos;
    }
    if (pos != text.size()) throw ParseError(pos, "trailing characters");
    return std::pair{values[0], values[1]};
  };
  if (text.rfind("alpha[", 0) == 0) {
    auto [j, i] = numbers(6, 2);
    if (j < 1 || i < 1) throw ParseError(6, "indices must be >= 1");
    return BasisIndex::alpha(j, i);
  }
  if (text.rfind("beta[", 0) == 0) {
    auto [j, i] = numbers(5, 2);
    if (j < 1 || i < 1) throw ParseError(5, "indices must be >= 1");
    return BasisIndex::beta(j, i);
  }
  if (text.rfind("delta[", 0) == 0) {
    auto [j, unused] = numbers(6, 1);
    (void)unused;
    if (j < 1) throw ParseError(6, "end must be >= 1");
    return BasisIndex::delta(j);
  }
  throw ParseError(0, "expected alpha[j,i], beta[j,i] or delta[j]");
}

H1Vector parse_vector(std::string_view text, int ends) {
  H1Vector out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) {
      if (first) throw ParseError(pos, "empty vector");
      break;
    }
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      throw ParseError(pos, "expected '+' or '-'");
    }
    first = false;
    Integer factor = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      factor = Integer(std::string(text.substr(start, pos - start)));
      skip();
      if (pos >= text.size() || text[pos] != '*') throw ParseError(pos, "expected '*'");
      ++pos;
      skip();
    }
    const std::size_t start = pos;
    const std::size_t close = text.find(']', pos);
    if (close == std::string_view::npos) throw ParseError(pos, "expected ']'");
    pos = close + 1;
    BasisIndex e;
    try {
      e = parse_basis(text.substr(start, pos - start));
    } catch (const ParseError& err) {
      throw ParseError(start + err.position(), err.detail());
    }
    if (e.end > ends) throw ParseError(start, "end out of range");
    if (e.kind == BasisKind::Delta)
      out.add(H1Vector::boundary(e.end, ends), factor * sign);
    else
      out.add(e, factor * sign);
  }
  return out;
}

}  // namespace bigmcg
