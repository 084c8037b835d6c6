#include "bigmcg/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <json.hpp>
#include <ostream>
#include <random>
#include <sstream>

#include "bigmcg/end_space.hpp"
#include "bigmcg/error.hpp"
#include "bigmcg/homology_rep.hpp"
#include "bigmcg/polish_lab.hpp"
#include "bigmcg/shifts_and_flux.hpp"
#include "bigmcg/suites.hpp"
#include "bigmcg/surface_model.hpp"
#include "bigmcg/verdict.hpp"

namespace bigmcg::cli {

using Json = nlohmann::ordered_json;

std::size_t capped_budget(std::size_t requested) {
  const char* cap = std::getenv("BIGMCG_MAX_BUDGET");
  if (cap == nullptr || *cap == '\0') return requested;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(cap, &end, 10);
  if (end == cap || *end != '\0') throw DomainError("BIGMCG_MAX_BUDGET must be a nonnegative integer");
  return std::min<std::size_t>(requested, static_cast<std::size_t>(value));
}

namespace {

struct Common {
  int ends = 3;
  int window = 8;
  std::size_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::string format = "text";
};

struct Output {
  std::vector<std::string> lines;
  Json tree = Json::object();
  int code = kSuccess;

  void line(std::string text) { lines.push_back(std::move(text)); }
};

std::string cardinal_text(const Cardinal& c) { return to_string(c); }

Json fingerprint_json(const Fingerprint& f) {
  Json profile = Json::array();
  for (const auto& p : f.np_profile) profile.push_back({{"nonplanar", to_string(p.nonplanar)}, {"planar", to_string(p.planar)}});
  return {{"isolated", cardinal_text(f.isolated_count)},
          {"has_cantor", f.has_cantor},
          {"derivative_depth", f.depth_omega ? Json("omega") : Json(f.derivative_depth)},
          {"rank_profile", profile},
          {"cantor_nonplanar", f.cantor_nonplanar},
          {"cantor_planar", f.cantor_planar}};
}

Shift parse_shift(const std::string& text) {
  const Word w = parse_word(text);
  if (w.size() != 1 || w.letters[0].sign != 1 || !std::holds_alternative<Shift>(w.letters[0].gen))
    throw ParseError(0, "expected a single shift h[i,j], got '" + text + "'");
  return std::get<Shift>(w.letters[0].gen);
}

int parse_part(const std::string& text) {
  if (text.size() < 3 || text.front() != '{' || text.back() != '}')
    throw ParseError(0, "partition literal must look like {j}");
  const std::string inner = text.substr(1, text.size() - 2);
  std::size_t used = 0;
  int j = 0;
  try {
    j = std::stoi(inner, &used);
  } catch (const std::exception&) {
    throw ParseError(1, "partition literal must hold one end index");
  }
  if (used != inner.size()) throw ParseError(1 + used, "partition literal must hold one end index");
  return j;
}

int verdict_code(const Verdict& v) {
  if (is_verified(v)) return kSuccess;
  return is_refuted(v) ? kFailure : kUnknownOnly;
}

Json verdict_json(const Verdict& v) {
  Json out;
  if (const auto* ok = std::get_if<Verified>(&v)) {
    out = {{"verdict", "Verified"}, {"window", ok->window}};
  } else if (const auto* r = std::get_if<Refuted>(&v)) {
    out = {{"verdict", "Refuted"}, {"witness", to_string(r->witness)}, {"detail", r->detail}};
  } else {
    out = {{"verdict", "Unknown"}, {"reason", std::get<Unknown>(v).reason}};
  }
  return out;
}

std::string flux_text(const std::vector<int>& flux) {
  std::string out = "(";
  for (std::size_t i = 0; i < flux.size(); ++i) out += (i ? "," : "") + std::to_string(flux[i]);
  return out + ")";
}

std::string pair_text(const std::pair<double, double>& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << p.first << ", " << p.second << ")";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Verification engine for mapping class groups of S(n)", "bigmcg"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--ends", common.ends, "number of ends n")->check(CLI::PositiveNumber);
  app.add_option("--window", common.window, "inspection window (curve/basis index bound)");
  app.add_option("--budget", common.budget, "rewrite step budget");
  app.add_option("--seed", common.seed, "seed for randomized checks");
  app.add_option("--format", common.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  Output result;
  std::function<void()> action;

  // classify
  auto* classify = app.add_subcommand("classify", "finite-type signatures and truncations");
  std::string sig, sig2, named;
  std::optional<int> level;
  classify->add_option("--sig", sig, "signature g,b,n");
  classify->add_option("--sig2", sig2, "second signature for a homeomorphism test");
  classify->add_option("--level", level, "truncation level of S(ends)");
  classify->add_option("--surface", named, "named surface");
  classify->callback([&] {
    action = [&] {
      if (sig.empty() && !level && named.empty()) throw CLI::ValidationError("classify", "need --sig, --level or --surface");
      if (!sig.empty()) {
        const FiniteTypeSig s = parse_signature(sig);
        result.line("signature " + to_string(s));
        result.line("euler_characteristic " + std::to_string(euler_characteristic(s)));
        result.tree["signature"] = to_string(s);
        result.tree["euler_characteristic"] = euler_characteristic(s);
        try {
          const int count = generator_count(s);
          result.line("generator_count " + std::to_string(count));
          result.tree["generator_count"] = count;
        } catch (const UnsupportedError& e) {
          result.line(std::string("generator_count unsupported: ") + e.what());
          result.tree["generator_count"] = nullptr;
        }
        if (!sig2.empty()) {
          const bool same = finite_homeomorphic(s, parse_signature(sig2));
          result.line(std::string("homeomorphic ") + (same ? "true" : "false"));
          result.tree["homeomorphic"] = same;
        }
      }
      if (level) {
        const FiniteTypeSig t = truncation(common.ends, *level);
        result.line("truncation " + to_string(t));
        result.tree["truncation"] = to_string(t);
      }
      if (!named.empty()) {
        const NamedSurface name = parse_named_surface(named);
        const SurfaceDesc desc = named_surface(name);
        result.line("surface " + std::string(to_string(name)) + " genus " + to_string(desc.genus) + " ends " +
                    to_string(desc.code));
        result.tree["surface"] = {{"name", to_string(name)}, {"genus", to_string(desc.genus)}, {"ends", to_string(desc.code)}};
      }
    };
  });

  // endspace
  auto* endspace = app.add_subcommand("endspace", "end-space codes: normal form, fingerprint, comparison");
  std::string code_a, code_b, genus_a, genus_b, boundary_a = "0", boundary_b = "0";
  endspace->add_option("--a", code_a, "end code")->required();
  endspace->add_option("--b", code_b, "second end code to compare against");
  endspace->add_option("--genus-a", genus_a, "genus of the first surface (default: inferred)");
  endspace->add_option("--genus-b", genus_b, "genus of the second surface (default: inferred)");
  endspace->add_option("--boundary-a", boundary_a, "boundary components of the first surface");
  endspace->add_option("--boundary-b", boundary_b, "boundary components of the second surface");
  endspace->callback([&] {
    action = [&] {
      auto describe = [](const std::string& code, const std::string& genus, const std::string& boundary) {
        SurfaceDesc d;
        d.code = parse_end_code(code);
        d.boundary = parse_extent(boundary);
        if (genus.empty()) {
          const bool np = std::any_of(d.code.components.begin(), d.code.components.end(), [](const EndComponent& c) {
            return std::visit([](const auto& x) {
              using T = std::decay_t<decltype(x)>;
              if constexpr (std::is_same_v<T, OmegaChain>) return x.limit_nonplanar || x.tail_nonplanar;
              else return x.nonplanar;
            }, c);
          });
          d.genus = np ? Extent{0, true} : Extent{0, false};
        } else {
          d.genus = parse_extent(genus);
        }
        validate(d);
        return d;
      };
      const SurfaceDesc a = describe(code_a, genus_a, boundary_a);
      const EndSpaceCode norm = normalize(a.code);
      result.line("normal " + to_string(norm));
      result.line("derivative " + to_string(cb_derivative(a.code)));
      result.tree["normal"] = to_string(norm);
      result.tree["derivative"] = to_string(cb_derivative(a.code));
      result.tree["fingerprint"] = fingerprint_json(fingerprint(a.code));
      if (!code_b.empty()) {
        const SurfaceDesc b = describe(code_b, genus_b, boundary_b);
        const Comparison cmp = compare(a, b);
        result.line("compare " + to_string(cmp));
        result.tree["compare"] = to_string(cmp);
        if (cmp == Comparison::Inconclusive) result.code = kUnknownOnly;
      }
    };
  });

  // eval
  auto* eval = app.add_subcommand("eval", "image of a curve or homology vector under a word");
  std::string word_text, curve_text, vector_text;
  eval->add_option("--word", word_text, "word")->required();
  auto* curve_opt = eval->add_option("--curve", curve_text, "atlas curve, e.g. b[1,1]");
  auto* vector_opt = eval->add_option("--vector", vector_text, "homology vector, e.g. alpha[1,1]+delta[2]");
  curve_opt->excludes(vector_opt);
  eval->callback([&] {
    action = [&] {
      const Atlas atlas(common.ends);
      const Word w = parse_word(word_text);
      require_in_range(w, common.ends);
      if (!curve_text.empty()) {
        const CurveId c = parse_curve(curve_text);
        require_well_formed(c, common.ends);
        const ImageResult r = Rewriter(atlas).image(w, c, capped_budget(common.budget));
        result.line("image " + r.term.render());
        result.line("atlas " + std::string(r.term.is_atlas() ? "true" : "false") + " steps " + std::to_string(r.steps) +
                    (r.exhausted ? " budget-exhausted" : ""));
        for (const auto& id : r.axioms_used) result.line("axiom " + id);
        result.tree = {{"image", r.term.render()}, {"atlas", r.term.is_atlas()}, {"steps", r.steps},
                       {"exhausted", r.exhausted}, {"axioms", r.axioms_used}};
        if (r.exhausted) result.code = kUnknownOnly;
      } else if (!vector_text.empty()) {
        const H1Vector x = parse_vector(vector_text, common.ends);
        const auto image = act(atlas, w, x, common.window);
        if (image) {
          result.line("image " + to_string(*image));
          result.tree["image"] = to_string(*image);
        } else {
          result.line("image Unknown (support left the window)");
          result.tree["image"] = nullptr;
          result.code = kUnknownOnly;
        }
      } else {
        throw CLI::ValidationError("eval", "need --curve or --vector");
      }
    };
  });

  // equal / trivial
  auto* equal = app.add_subcommand("equal", "shadow equality of two words up to a window");
  std::string w1_text, w2_text;
  equal->add_option("--w1", w1_text, "first word")->required();
  equal->add_option("--w2", w2_text, "second word")->required();
  auto* trivial = app.add_subcommand("trivial", "shadow triviality of a word up to a window");
  trivial->add_option("--word", word_text, "word")->required();
  auto compare_words = [&](const std::string& lhs, const std::string& rhs) {
    const Atlas atlas(common.ends);
    const Word w1 = parse_word(lhs), w2 = parse_word(rhs);
    require_in_range(w1, common.ends);
    require_in_range(w2, common.ends);
    const std::size_t budget = capped_budget(common.budget);
    const Verdict v = equal_up_to(atlas, w1, w2, common.window, budget);
    result.line(to_string(v));
    result.tree = verdict_json(v);
    if (const auto* r = std::get_if<Refuted>(&v)) {
      result.line("detail " + r->detail);
      const auto [left, right] = observe(atlas, r->witness, w1, w2, common.window, budget);
      result.line("observed " + left + " | " + right);
      result.tree["observed"] = {left, right};
    }
    result.code = verdict_code(v);
  };
  equal->callback([&] { action = [&] { compare_words(w1_text, w2_text); }; });
  trivial->callback([&] { action = [&] { compare_words(word_text, "1"); }; });

  // phi / flux
  auto* phi_cmd = app.add_subcommand("phi", "genus flux across the cut of one end");
  std::string part_text;
  phi_cmd->add_option("--part", part_text, "partition literal {j}")->required();
  phi_cmd->add_option("--word", word_text, "word")->required();
  phi_cmd->callback([&] {
    action = [&] {
      const Atlas atlas(common.ends);
      const Word w = parse_word(word_text);
      require_in_range(w, common.ends);
      const int j = parse_part(part_text);
      if (j < 1 || j > common.ends) throw DomainError("partition end out of range");
      const auto value = phi(atlas, j, w, common.window, capped_budget(common.budget));
      result.line("phi " + part_text + " " + (value ? std::to_string(*value) : std::string("Undefined")));
      result.tree["phi"] = value ? Json(*value) : Json(nullptr);
      if (!value) result.code = kUnknownOnly;
    };
  });
  auto* flux_cmd = app.add_subcommand("flux", "flux vector and compact-closure shadow");
  flux_cmd->add_option("--word", word_text, "word")->required();
  flux_cmd->callback([&] {
    action = [&] {
      const Atlas atlas(common.ends);
      const Word w = parse_word(word_text);
      require_in_range(w, common.ends);
      const Perm perm = end_permutation(atlas, w);
      result.line("end_permutation " + perm.cycles());
      result.tree["end_permutation"] = perm.cycles();
      const auto flux = flux_vector(atlas, w, common.window, capped_budget(common.budget));
      result.line("flux " + (flux ? flux_text(*flux) : std::string("Undefined")));
      result.tree["flux"] = flux ? Json(*flux) : Json(nullptr);
      const ShadowResult shadow = compact_closure_shadow(atlas, w, common.window);
      result.line(std::string("compact_closure_shadow ") + (shadow.value ? "true" : "false") +
                  (shadow.undefined ? " (undefined)" : ""));
      result.tree["compact_closure_shadow"] = {{"value", shadow.value}, {"undefined", shadow.undefined}};
      if (!flux) result.code = kUnknownOnly;
    };
  });

  // witness
  auto* witness = app.add_subcommand("witness", "separating-curve witnesses for handle shifts");
  std::string shift_text, shift2_text;
  witness->add_option("--curve", curve_text, "cut curve s[j,i]")->required();
  witness->add_option("--shift", shift_text, "adjacent shift h[i,j]")->required();
  witness->add_option("--shift2", shift2_text, "second word with the same flux (difference check)");
  witness->callback([&] {
    action = [&] {
      const Atlas atlas(common.ends);
      const CurveId c = parse_curve(curve_text);
      require_well_formed(c, common.ends);
      const Shift h = parse_shift(shift_text);
      const SeparatingWitness sw = separating_witness(atlas, c, h);
      result.line(std::string(sw.holds() ? "PASS" : "FAIL") + " gamma " + to_string(sw.gamma) + " image " +
                  to_string(sw.image) + " preimage " + to_string(sw.preimage) + " genus " +
                  std::to_string(sw.genus_to_curve) + "/" + std::to_string(sw.genus_to_image) + "/" +
                  std::to_string(sw.genus_to_preimage));
      result.tree["separating"] = {{"gamma", to_string(sw.gamma)},       {"image", to_string(sw.image)},
                                   {"preimage", to_string(sw.preimage)}, {"genus_curve", sw.genus_to_curve},
                                   {"genus_image", sw.genus_to_image},   {"genus_preimage", sw.genus_to_preimage},
                                   {"holds", sw.holds()}};
      bool ok = sw.holds();
      if (!shift2_text.empty()) {
        Json checks = Json::array();
        for (const auto& d : difference_witnesses(atlas, parse_word(shift_text), parse_word(shift2_text), c)) {
          if (!d) {
            result.line("UNKNOWN difference image did not reduce");
            checks.push_back(nullptr);
            ok = false;
            continue;
          }
          result.line(std::string(d->holds() ? "PASS" : "FAIL") + " difference " + d->word + " gamma " +
                      to_string(d->gamma) + " image " + to_string(d->image) + " genus " +
                      std::to_string(d->genus_to_curve) + "/" + std::to_string(d->genus_to_image));
          checks.push_back({{"word", d->word}, {"image", to_string(d->image)}, {"holds", d->holds()}});
          ok = ok && d->holds();
        }
        result.tree["difference"] = checks;
      }
      result.code = ok ? kSuccess : kFailure;
    };
  });

  // suite
  auto* suite = app.add_subcommand("suite", "replay a catalog of identities");
  std::string suite_name;
  unsigned threads = 0;
  suite->add_option("--name", suite_name, "suite name")->required()->check(CLI::IsMember(suite_names()));
  suite->add_option("--threads", threads, "worker threads (0 = hardware)");
  suite->callback([&] {
    action = [&] {
      const Report report = verify_suite(suite_name, common.ends, common.window, capped_budget(common.budget), threads);
      std::istringstream text(report.text());
      for (std::string line; std::getline(text, line);) result.line(line);
      Json steps = Json::array();
      for (const auto& s : report.steps)
        steps.push_back({{"id", s.id}, {"anchor", s.anchor}, {"status", to_string(s.status)}, {"detail", s.detail}});
      Json axioms = Json::array();
      for (const auto& a : report.axioms)
        axioms.push_back({{"id", a.id}, {"anchor", a.anchor}, {"homology_agrees", a.homology_agrees}});
      result.tree = {{"suite", report.suite}, {"ends", report.ends}, {"window", report.window},
                     {"steps", steps},        {"axioms", axioms}, {"passed", report.passed()}};
      result.code = report.passed() ? kSuccess : report.any_failed() ? kFailure : kUnknownOnly;
    };
  });

  // metric
  auto* metric = app.add_subcommand("metric", "permutation-topology metric demos");
  std::string demo = "gn";
  int threshold = 5;
  Vertex depth = 20;
  metric->add_option("--demo", demo, "demo family")->check(CLI::IsMember({"gn", "constant"}));
  metric->add_option("--N", threshold, "Cauchy threshold N")->check(CLI::PositiveNumber);
  metric->add_option("--depth", depth, "largest family index inspected")->check(CLI::PositiveNumber);
  metric->callback([&] {
    action = [&] {
      const AutFamily family = demo == "gn" ? shift_family() : constant_family();
      const CauchyReport r = cauchy_report(family, threshold, depth);
      const std::string bound = "2^-" + std::to_string(threshold);
      result.line(std::string(r.forward_cauchy() ? "PASS" : "FAIL") + " metric.forward-cauchy d(g_n,g_m)<=" + bound +
                  " pairs=" + std::to_string(r.pairs) + " max=" + r.forward_max.to_string());
      result.line(std::string(r.inverse_cauchy() ? "PASS" : "FAIL") + " metric.inverse-cauchy d(inv(g_n),inv(g_m))<=" +
                  bound + " violations=" + std::to_string(r.inverse_violations) + " min=" +
                  r.inverse_min.to_string() + " max=" + r.inverse_max.to_string());
      result.tree = {{"demo", demo},
                     {"enumeration", "x_i = i"},
                     {"N", threshold},
                     {"depth", depth},
                     {"pairs", r.pairs},
                     {"forward_cauchy", r.forward_cauchy()},
                     {"forward_max", r.forward_max.to_string()},
                     {"inverse_cauchy", r.inverse_cauchy()},
                     {"inverse_violations", r.inverse_violations},
                     {"inverse_min", r.inverse_min.to_string()},
                     {"inverse_max", r.inverse_max.to_string()}};
      // Encoded expectation: the shift family is forward Cauchy with non-Cauchy inverses,
      // the constant family is Cauchy both ways.
      const bool expected = demo == "gn" ? r.forward_cauchy() && !r.inverse_cauchy()
                                         : r.forward_cauchy() && r.inverse_cauchy();
      result.line(std::string(expected ? "PASS" : "FAIL") + " metric.expectation " + demo);
      result.tree["expectation_met"] = expected;
      result.code = expected ? kSuccess : kFailure;
    };
  });

  // stripmap
  auto* stripmap = app.add_subcommand("stripmap", "twist map and model handle-shift map on points");
  std::string map_kind;
  double first = 0.0, second = 0.0;
  stripmap->add_option("--map", map_kind, "twist or shift")->required()->check(CLI::IsMember({"twist", "shift"}));
  stripmap->add_option("--p", first, "theta (twist) or x (shift)");
  stripmap->add_option("--q", second, "t (twist) or y (shift)");
  stripmap->callback([&] {
    action = [&] {
      const auto image = map_kind == "twist" ? twist_point(first, second) : model_shift_point(first, second);
      result.line(map_kind + " " + pair_text({first, second}) + " -> " + pair_text(image));
      result.tree = {{"map", map_kind}, {"input", {first, second}}, {"output", {image.first, image.second}}};
    };
  });

  // parse-check
  auto* parse_check = app.add_subcommand("parse-check", "parser and renderer round trips");
  std::optional<int> random_count;
  int length = 8;
  parse_check->add_option("--word", word_text, "word to round-trip");
  parse_check->add_option("--random", random_count, "number of random words")->check(CLI::NonNegativeNumber);
  parse_check->add_option("--length", length, "random word length")->check(CLI::NonNegativeNumber);
  parse_check->callback([&] {
    action = [&] {
      if (word_text.empty() && !random_count) throw CLI::ValidationError("parse-check", "need --word or --random");
      bool ok = true;
      if (!word_text.empty()) {
        const Word w = parse_word(word_text);
        const std::string canonical = render(w);
        const bool stable = parse_word(canonical) == w;
        ok = ok && stable;
        result.line(std::string(stable ? "PASS" : "FAIL") + " canonical " + canonical);
        result.line("reduced " + render(free_reduce(w)));
        result.tree["canonical"] = canonical;
        result.tree["reduced"] = render(free_reduce(w));
      }
      if (random_count) {
        std::mt19937_64 rng(common.seed);
        RandomWordSpec spec{std::max(common.ends, 2), length, common.window > 0 ? common.window : 1};
        int failures = 0;
        for (int k = 0; k < *random_count; ++k) {
          const Word w = random_word(rng, spec);
          if (parse_word(render(w)) != w || !free_reduce(w * inverse(w)).empty()) ++failures;
        }
        ok = ok && failures == 0;
        result.line(std::string(failures == 0 ? "PASS" : "FAIL") + " random " + std::to_string(*random_count) +
                    " seed " + std::to_string(common.seed) + " failures " + std::to_string(failures));
        result.tree["random"] = {{"count", *random_count}, {"seed", common.seed}, {"failures", failures}};
      }
      result.code = ok ? kSuccess : kFailure;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (!action) throw CLI::ValidationError("command", "no action");
    action();
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (common.format == "json") {
    out << result.tree.dump(2) << "\n";
  } else {
    for (const auto& line : result.lines) out << line << "\n";
  }
  return result.code;
}

}  // namespace bigmcg::cli
