#include "bigmcg/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "bigmcg/error.hpp"

namespace bigmcg {

Word operator*(const Word& lhs, const Word& rhs) {
  Word out = lhs;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out.letters.push_back({it->gen, -it->sign});
  return out;
}

Word power(const Word& w, int exponent) {
  const Word base = exponent < 0 ? inverse(w) : w;
  Word out;
  for (int k = 0; k < std::abs(exponent); ++k) out = out * base;
  return out;
}

Word conj(const Word& x, const Word& by) { return by * x * inverse(by); }

Word letter_word(const Generator& gen, int sign) { return Word{{Letter{gen, sign}}}; }

Word twist_word(const CurveId& curve, int exponent) { return power(letter_word(Twist{curve}), exponent); }

bool adjacent_shift(const Shift& shift, int ends) {
  return (shift.from >= 1 && shift.from < ends && shift.to == shift.from + 1) ||
         (shift.from == ends && shift.to == 1);
}

void require_in_range(const Word& w, int ends) {
  for (const auto& letter : w.letters) {
    if (const auto* twist = std::get_if<Twist>(&letter.gen)) {
      require_well_formed(twist->curve, ends);
    } else if (const auto* shift = std::get_if<Shift>(&letter.gen)) {
      if (shift->from < 1 || shift->from > ends || shift->to < 1 || shift->to > ends || shift->from == shift->to)
        throw DomainError("shift " + render(letter.gen) + " out of range for " + std::to_string(ends) + " ends");
    }
  }
}

Word expand_shifts(const Word& w, int ends) {
  require_in_range(w, ends);
  Word out;
  out.letters.reserve(w.size());
  for (const auto& letter : w.letters) {
    const auto* shift = std::get_if<Shift>(&letter.gen);
    if (shift == nullptr || adjacent_shift(*shift, ends)) {
      out.letters.push_back(letter);
      continue;
    }
    const int lo = std::min(shift->from, shift->to);
    const int hi = std::max(shift->from, shift->to);
    // h[lo,hi] = h[hi-1,hi] * ... * h[lo,lo+1]; the reversed direction is its inverse.
    Word chain;
    for (int k = hi - 1; k >= lo; --k) chain.letters.push_back({Shift{k, k + 1}, 1});
    if (shift->from > shift->to) chain = inverse(chain);
    if (letter.sign < 0) chain = inverse(chain);
    out = out * chain;
  }
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.letters.reserve(w.size());
  for (const auto& letter : w.letters) {
    if (!out.letters.empty() && out.letters.back().gen == letter.gen && out.letters.back().sign == -letter.sign)
      out.letters.pop_back();
    else
      out.letters.push_back(letter);
  }
  return out;
}

int max_curve_index(const Word& w) {
  int best = 0;
  for (const auto& letter : w.letters)
    if (const auto* twist = std::get_if<Twist>(&letter.gen)) best = std::max(best, twist->curve.index);
  return best;
}

bool is_twist_only(const Word& w) {
  return std::all_of(w.letters.begin(), w.letters.end(),
                     [](const Letter& l) { return std::holds_alternative<Twist>(l.gen); });
}

std::string render(const Generator& gen) {
  struct Visitor {
    std::string operator()(const Twist& t) const {
      return "T[" + std::string(family_token(t.curve.family)) + "," + std::to_string(t.curve.end) + "," +
             std::to_string(t.curve.index) + "]";
    }
    std::string operator()(const Shift& s) const {
      return "h[" + std::to_string(s.from) + "," + std::to_string(s.to) + "]";
    }
    std::string operator()(const Rotation&) const { return "R"; }
    std::string operator()(const Rho1&) const { return "rho1"; }
    std::string operator()(const Rho2&) const { return "rho2"; }
    std::string operator()(const Tau1&) const { return "tau1"; }
    std::string operator()(const Tau2&) const { return "tau2"; }
  };
  return std::visit(Visitor{}, gen);
}

std::string render(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& letter : w.letters) {
    if (!out.empty()) out += '*';
    out += letter.sign > 0 ? render(letter.gen) : "inv(" + render(letter.gen) + ")";
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Word parse() {
    Word w = word();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  int integer() {
    skip_space();
    int value = 0;
    const char* first = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
    if (ec != std::errc{}) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  Word word() {
    Word w = factor();
    while (accept("*")) w = w * factor();
    return w;
  }

  Word factor() {
    if (accept("inv(")) {
      Word inner = word();
      expect(")");
      return inverse(inner);
    }
    Word base = atom();
    if (accept("^(")) {
      Word by = word();
      expect(")");
      return conj(base, by);
    }
    if (accept("^")) return power(base, integer());
    return base;
  }

  Word atom() {
    skip_space();
    if (accept("T[")) {
      skip_space();
      const std::size_t at = pos_;
      const std::size_t comma = text_.find(',', pos_);
      if (comma == std::string_view::npos) fail("expected ','");
      std::string_view fam = text_.substr(pos_, comma - pos_);
      while (!fam.empty() && std::isspace(static_cast<unsigned char>(fam.back()))) fam.remove_suffix(1);
      CurveId curve;
      try {
        curve.family = parse_family(fam);
      } catch (const ParseError&) {
        throw ParseError(at, "unknown curve family '" + std::string(fam) + "'");
      }
      pos_ = comma + 1;
      curve.end = integer();
      expect(",");
      const std::size_t index_at = pos_;
      curve.index = integer();
      expect("]");
      if (curve.end < 1) throw ParseError(at, "end must be >= 1");
      if (curve.index < min_index(curve.family)) throw ParseError(index_at, "index below family range");
      return letter_word(Twist{curve});
    }
    if (accept("h[")) {
      const std::size_t at = pos_;
      Shift shift;
      shift.from = integer();
      expect(",");
      shift.to = integer();
      expect("]");
      if (shift.from < 1 || shift.to < 1 || shift.from == shift.to)
        throw ParseError(at, "shift ends must be distinct and >= 1");
      return letter_word(shift);
    }
    if (accept("rho1")) return letter_word(Rho1{});
    if (accept("rho2")) return letter_word(Rho2{});
    if (accept("tau1")) return letter_word(Tau1{});
    if (accept("tau2")) return letter_word(Tau2{});
    if (accept("R")) return letter_word(Rotation{});
    if (accept("1")) return Word{};
    fail(pos_ < text_.size() ? "unknown generator" : "unexpected end of input");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(std::string_view text) { return Parser(text).parse(); }

}  // namespace bigmcg

namespace bigmcg {

Word random_word(std::mt19937_64& rng, const RandomWordSpec& spec) {
  if (spec.ends < 2 || spec.length < 0 || spec.max_index < 1) throw DomainError("bad random word spec");
  std::vector<int> kinds;
  if (spec.twists) kinds.push_back(0);
  if (spec.shifts) kinds.push_back(1);
  if (spec.symmetries) kinds.push_back(2);
  if (kinds.empty()) throw DomainError("random word spec enables no letters");
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  constexpr Family families[] = {Family::A,  Family::Aprime, Family::B,       Family::C,      Family::S,
                                 Family::D1, Family::D2,     Family::D1prime, Family::D2prime};
  Word w;
  for (int n = 0; n < spec.length; ++n) {
    const int sign = pick(0, 1) ? 1 : -1;
    switch (kinds[static_cast<std::size_t>(pick(0, static_cast<int>(kinds.size()) - 1))]) {
      case 0: {
        const Family fam = families[pick(0, 8)];
        w.letters.push_back({Twist{{fam, pick(1, spec.ends), pick(min_index(fam), spec.max_index)}}, sign});
        break;
      }
      case 1: {
        const int from = pick(1, spec.ends);
        int to = pick(1, spec.ends - 1);
        if (to >= from) ++to;
        w.letters.push_back({Shift{from, to}, sign});
        break;
      }
      default: {
        static const Generator symmetries[] = {Rotation{}, Rho1{}, Rho2{}, Tau1{}, Tau2{}};
        w.letters.push_back({symmetries[pick(0, 4)], sign});
      }
    }
  }
  return w;
}

}  // namespace bigmcg
