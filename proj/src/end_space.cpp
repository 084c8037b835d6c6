#include "bigmcg/end_space.hpp"

#include <algorithm>
#include <charconv>

#include "bigmcg/error.hpp"

namespace bigmcg {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool has_nonplanar(const EndSpaceCode& code) {
  return std::any_of(code.components.begin(), code.components.end(), [](const EndComponent& c) {
    return std::visit(Overloaded{
                          [](const IsolatedEnd& e) { return e.nonplanar; },
                          [](const CantorBlock& e) { return e.nonplanar; },
                          [](const OmegaChain& e) { return e.limit_nonplanar || e.tail_nonplanar; },
                      },
                      c);
  });
}

void bump(Cardinal& slot) {
  if (!slot.omega) ++slot.finite;
}

std::string_view mark(bool nonplanar) { return nonplanar ? "np" : "p"; }

bool parse_mark(std::string_view token, std::size_t at) {
  if (token == "np") return true;
  if (token == "p") return false;
  throw ParseError(at, "expected mark 'np' or 'p', got '" + std::string(token) + "'");
}

}  // namespace

EndSpaceCode named_code(NamedSurface name) {
  switch (name) {
    case NamedSurface::LochNess: return {{IsolatedEnd{true}}};
    case NamedSurface::JacobsLadder: return {{IsolatedEnd{true}, IsolatedEnd{true}}};
    case NamedSurface::CantorTree: return {{CantorBlock{false}}};
    case NamedSurface::BloomingCantorTree: return {{CantorBlock{true}}};
    case NamedSurface::Flute: return {{OmegaChain{false, false}}};
  }
  throw DomainError("unknown surface name");
}

EndSpaceCode star_code(int ends) {
  if (ends < 1) throw DomainError("S(n) needs n >= 1");
  return {std::vector<EndComponent>(static_cast<std::size_t>(ends), IsolatedEnd{true})};
}

SurfaceDesc named_surface(NamedSurface name) {
  EndSpaceCode code = named_code(name);
  Extent genus = has_nonplanar(code) ? Extent{0, true} : Extent{0, false};
  return {Extent{}, genus, std::move(code)};
}

SurfaceDesc star_surface(int ends) { return {Extent{}, Extent{0, true}, star_code(ends)}; }

void validate(const EndSpaceCode& code) {
  for (const auto& c : code.components)
    if (const auto* chain = std::get_if<OmegaChain>(&c); chain && chain->tail_nonplanar && !chain->limit_nonplanar)
      throw DomainError("non-planar ends must form a closed set: chain with non-planar tail needs a non-planar limit");
}

void validate(const SurfaceDesc& desc) {
  validate(desc.code);
  if (has_nonplanar(desc.code) != desc.genus.infinite)
    throw DomainError("genus is infinite exactly when some end is non-planar");
}

EndSpaceCode normalize(const EndSpaceCode& code) {
  validate(code);
  bool absorbs_np = false, absorbs_p = false;
  for (const auto& c : code.components)
    if (const auto* chain = std::get_if<OmegaChain>(&c))
      (chain->tail_nonplanar ? absorbs_np : absorbs_p) = true;

  EndSpaceCode out;
  bool cantor_np = false, cantor_p = false;
  for (const auto& c : code.components) {
    if (const auto* iso = std::get_if<IsolatedEnd>(&c)) {
      if (iso->nonplanar ? absorbs_np : absorbs_p) continue;
      out.components.push_back(c);
    } else if (const auto* block = std::get_if<CantorBlock>(&c)) {
      bool& seen = block->nonplanar ? cantor_np : cantor_p;
      if (!seen) out.components.push_back(c);
      seen = true;
    } else {
      out.components.push_back(c);
    }
  }
  std::sort(out.components.begin(), out.components.end());
  return out;
}

EndSpaceCode cb_derivative(const EndSpaceCode& code) {
  EndSpaceCode out;
  for (const auto& c : code.components) {
    if (const auto* chain = std::get_if<OmegaChain>(&c))
      out.components.push_back(IsolatedEnd{chain->limit_nonplanar});
    else if (std::holds_alternative<CantorBlock>(c))
      out.components.push_back(c);
  }
  return out;
}

bool is_finite_code(const EndSpaceCode& code) {
  return std::all_of(code.components.begin(), code.components.end(),
                     [](const EndComponent& c) { return std::holds_alternative<IsolatedEnd>(c); });
}

Fingerprint fingerprint(const EndSpaceCode& raw) {
  const EndSpaceCode code = normalize(raw);
  Fingerprint fp;
  fp.np_profile.resize(2);
  for (const auto& c : code.components) {
    std::visit(Overloaded{
                   [&](const IsolatedEnd& e) {
                     bump(fp.isolated_count);
                     bump(e.nonplanar ? fp.np_profile[0].nonplanar : fp.np_profile[0].planar);
                   },
                   [&](const CantorBlock& e) {
                     fp.has_cantor = true;
                     (e.nonplanar ? fp.cantor_nonplanar : fp.cantor_planar) = true;
                   },
                   [&](const OmegaChain& e) {
                     fp.isolated_count = Cardinal{0, true};
                     (e.tail_nonplanar ? fp.np_profile[0].nonplanar : fp.np_profile[0].planar) = Cardinal{0, true};
                     bump(e.limit_nonplanar ? fp.np_profile[1].nonplanar : fp.np_profile[1].planar);
                     fp.chain_types.push_back(e);
                   },
               },
               c);
  }
  std::sort(fp.chain_types.begin(), fp.chain_types.end());

  EndSpaceCode current = code;
  while (!current.components.empty()) {
    EndSpaceCode next = cb_derivative(current);
    if (next == current) {
      fp.depth_omega = true;
      break;
    }
    ++fp.derivative_depth;
    current = std::move(next);
  }
  return fp;
}

Comparison compare(const SurfaceDesc& a, const SurfaceDesc& b) {
  validate(a);
  validate(b);
  if (a.boundary != b.boundary || a.genus != b.genus) return Comparison::Distinct;
  if (is_finite_code(a.code) && is_finite_code(b.code)) {
    auto sorted = [](std::vector<EndComponent> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    return sorted(a.code.components) == sorted(b.code.components) ? Comparison::Homeomorphic
                                                                   : Comparison::Distinct;
  }
  if (fingerprint(a.code) != fingerprint(b.code)) return Comparison::Distinct;
  if (normalize(a.code) == normalize(b.code)) return Comparison::Homeomorphic;
  return Comparison::Inconclusive;
}

EndSpaceCode parse_end_code(std::string_view text) {
  EndSpaceCode code;
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = text.find('+', start);
    const std::string_view part = text.substr(start, plus == std::string_view::npos ? text.size() - start : plus - start);
    const std::size_t colon = part.find(':');
    const std::string_view head = part.substr(0, colon);
    const std::string_view body = colon == std::string_view::npos ? std::string_view{} : part.substr(colon + 1);
    const std::size_t body_at = start + colon + 1;
    if (head == "finite") {
      std::size_t pos = 0;
      while (pos < body.size()) {
        const std::size_t comma = std::min(body.find(',', pos), body.size());
        code.components.push_back(IsolatedEnd{parse_mark(body.substr(pos, comma - pos), body_at + pos)});
        pos = comma + 1;
      }
    } else if (head == "cantor") {
      code.components.push_back(CantorBlock{parse_mark(body, body_at)});
    } else if (head == "omega") {
      const std::size_t arrow = body.find('>');
      if (arrow == std::string_view::npos) throw ParseError(body_at, "expected TAIL>LIMIT");
      const bool tail = parse_mark(body.substr(0, arrow), body_at);
      const bool limit = parse_mark(body.substr(arrow + 1), body_at + arrow + 1);
      code.components.push_back(OmegaChain{limit, tail});
    } else if (head == "star") {
      int ends = 0;
      auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), ends);
      if (ec != std::errc{} || ptr != body.data() + body.size() || ends < 1)
        throw ParseError(body_at, "expected positive end count");
      const auto star = star_code(ends);
      code.components.insert(code.components.end(), star.components.begin(), star.components.end());
    } else if (colon == std::string_view::npos && !part.empty()) {
      NamedSurface name{};
      try {
        name = parse_named_surface(part);
      } catch (const DomainError&) {
        throw ParseError(start, "unknown end-space component '" + std::string(part) + "'");
      }
      const auto named = named_code(name);
      code.components.insert(code.components.end(), named.components.begin(), named.components.end());
    } else {
      throw ParseError(start, "unknown end-space component '" + std::string(part) + "'");
    }
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  validate(code);
  return code;
}

std::string to_string(const EndSpaceCode& code) {
  std::string iso, rest;
  for (const auto& c : code.components) {
    std::visit(Overloaded{
                   [&](const IsolatedEnd& e) {
                     iso += iso.empty() ? "finite:" : ",";
                     iso += mark(e.nonplanar);
                   },
                   [&](const CantorBlock& e) {
                     rest += "+cantor:";
                     rest += mark(e.nonplanar);
                   },
                   [&](const OmegaChain& e) {
                     rest += "+omega:";
                     rest += mark(e.tail_nonplanar);
                     rest += ">";
                     rest += mark(e.limit_nonplanar);
                   },
               },
               c);
  }
  if (iso.empty()) return rest.empty() ? std::string("finite:") : rest.substr(1);
  return iso + rest;
}

std::string to_string(const Cardinal& value) {
  return value.omega ? std::string("omega") : std::to_string(value.finite);
}

std::string to_string(Comparison value) {
  switch (value) {
    case Comparison::Homeomorphic: return "Homeomorphic";
    case Comparison::Distinct: return "Distinct";
    case Comparison::Inconclusive: return "Inconclusive";
  }
  return "?";
}

Extent parse_extent(std::string_view text) {
  if (text == "inf" || text == "infinity") return {0, true};
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw ParseError(0, "expected count or 'inf'");
  return {value, false};
}

std::string to_string(const Extent& value) {
  return value.infinite ? std::string("inf") : std::to_string(value.finite);
}

}  // namespace bigmcg
