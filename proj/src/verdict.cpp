#include "bigmcg/verdict.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "bigmcg/error.hpp"
#include "bigmcg/homology_rep.hpp"
#include "bigmcg/shifts_and_flux.hpp"

namespace bigmcg {

namespace {

// Index of the cut used for flux: far enough out that no letter of `u` reaches it.
int flux_index(const Word& u, int window) { return std::max(window, max_curve_index(u)) + static_cast<int>(u.size()) + 3; }

std::vector<BasisIndex> basis_window(int ends, int window) {
  std::vector<BasisIndex> out;
  for (int j = 1; j <= ends; ++j)
    for (int i = 1; i <= window; ++i) {
      out.push_back(BasisIndex::alpha(j, i));
      out.push_back(BasisIndex::beta(j, i));
    }
  for (int j = 1; j < ends; ++j) out.push_back(BasisIndex::delta(j));
  return out;
}

// Twist cores of two twist-only words; nullopt when either word has another letter.
std::optional<std::vector<CurveId>> twist_cores(const Word& w1, const Word& w2) {
  if (!is_twist_only(w1) || !is_twist_only(w2)) return std::nullopt;
  std::vector<CurveId> out;
  for (const Word* w : {&w1, &w2})
    for (const auto& l : w->letters) out.push_back(std::get<Twist>(l.gen).curve);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Observables of one (ends, window), plus for each twist core the observables it can move: a
// twist fixes every class with zero pairing against its core and every curve disjoint from it.
class WindowIndex {
 public:
  WindowIndex(const Atlas& atlas, int window)
      : ends_(atlas.ends()), window_(window), curves_(atlas.curves(window)), basis_(basis_window(ends_, window)) {
    for (const auto& e : basis_)
      vectors_.push_back(e.kind == BasisKind::Delta ? H1Vector::boundary(e.end, ends_) : H1Vector::basis(e));
  }
  bool matches(const Atlas& atlas, int window) const { return atlas.ends() == ends_ && window == window_; }
  const std::vector<CurveId>& curves() const { return curves_; }
  const std::vector<BasisIndex>& basis() const { return basis_; }
  const std::vector<H1Vector>& vectors() const { return vectors_; }

  struct Touch {
    std::vector<std::size_t> curves;
    std::vector<std::size_t> basis;
  };
  const Touch& touched_by(const Atlas& atlas, const CurveId& core) {
    auto it = touch_.find(core);
    if (it != touch_.end()) return it->second;
    Touch t;
    const H1Vector cls = atlas.homology_class(core);
    for (std::size_t k = 0; k < curves_.size(); ++k)
      if (!atlas.disjoint(curves_[k], core)) t.curves.push_back(k);
    for (std::size_t k = 0; k < vectors_.size(); ++k)
      if (pairing(cls, vectors_[k]) != 0) t.basis.push_back(k);
    return touch_.emplace(core, std::move(t)).first->second;
  }

 private:
  int ends_;
  int window_;
  std::vector<CurveId> curves_;
  std::vector<BasisIndex> basis_;
  std::vector<H1Vector> vectors_;
  std::map<CurveId, Touch> touch_;
};

WindowIndex& window_index(const Atlas& atlas, int window) {
  thread_local std::optional<WindowIndex> cached;
  if (!cached || !cached->matches(atlas, window)) cached.emplace(atlas, window);
  return *cached;
}

// Positions in [0, total) worth evaluating: all of them, or the union of the cores' touch sets.
std::vector<std::size_t> positions(std::size_t total, const std::optional<std::vector<CurveId>>& cores,
                                   const Atlas& atlas, WindowIndex& index, bool curves) {
  std::vector<std::size_t> out;
  if (!cores) {
    out.resize(total);
    for (std::size_t k = 0; k < total; ++k) out[k] = k;
    return out;
  }
  for (const auto& c : *cores) {
    const auto& t = index.touched_by(atlas, c);
    const auto& src = curves ? t.curves : t.basis;
    out.insert(out.end(), src.begin(), src.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string show(const std::optional<H1Vector>& v) { return v ? to_string(*v) : std::string("unknown"); }

}  // namespace

Verdict equal_up_to(const Atlas& atlas, const Word& w1_in, const Word& w2_in, int window, std::size_t budget) {
  if (window <= 0) throw DomainError("window must be positive");
  if (budget == 0) throw DomainError("budget must be positive");
  const int n = atlas.ends();
  const Word w1 = free_reduce(expand_shifts(w1_in, n));
  const Word w2 = free_reduce(expand_shifts(w2_in, n));
  std::string unknown;

  const Perm p1 = end_permutation(atlas, w1);
  const Perm p2 = end_permutation(atlas, w2);
  for (int j = 1; j <= n; ++j)
    if (p1(j) != p2(j))
      return Refuted{EndWitness{j}, "end " + std::to_string(j) + " goes to " + std::to_string(p1(j)) + " vs " +
                                        std::to_string(p2(j))};

  const Word u = free_reduce(w1 * inverse(w2));
  // Twist curves never reach the cut at flux_index, so a twist-only u has zero flux.
  if (!is_twist_only(u)) {
    if (const auto flux = flux_vector(atlas, u, flux_index(u, window), budget); !flux) {
      unknown = "flux undefined";
    } else {
      for (int j = 1; j <= n; ++j)
        if ((*flux)[static_cast<std::size_t>(j - 1)] != 0)
          return Refuted{FluxWitness{j}, "flux of w1*inv(w2) at end " + std::to_string(j) + " is " +
                                             std::to_string((*flux)[static_cast<std::size_t>(j - 1)])};
    }
  }

  const auto cores = twist_cores(w1, w2);
  WindowIndex& index = window_index(atlas, window);

  for (std::size_t k : positions(index.basis().size(), cores, atlas, index, false)) {
    const BasisIndex& e = index.basis()[k];
    const H1Vector& x = index.vectors()[k];
    const auto a = act(atlas, w1, x, window);
    const auto b = act(atlas, w2, x, window);
    if (!a || !b) {
      if (unknown.empty()) unknown = "homology support escaped the window at " + to_string(e);
      continue;
    }
    if (*a != *b) return Refuted{BasisWitness{e}, to_string(e) + ": " + to_string(*a) + " vs " + to_string(*b)};
  }

  const Rewriter rewriter(atlas);
  for (std::size_t k : positions(index.curves().size(), cores, atlas, index, true)) {
    const CurveId& c = index.curves()[k];
    const ImageResult a = rewriter.image_prepared(w1, CurveTerm(c), budget);
    const ImageResult b = rewriter.image_prepared(w2, CurveTerm(c), budget);
    if (a.exhausted || b.exhausted) {
      if (unknown.empty()) unknown = "rewriting budget exhausted at " + to_string(c);
      continue;
    }
    if (a.term.is_atlas() && b.term.is_atlas() && a.term.base() != b.term.base())
      return Refuted{CurveWitness{c}, to_string(c) + ": " + a.term.render() + " vs " + b.term.render()};
  }
  if (!unknown.empty()) return Unknown{unknown};
  return Verified{window};
}

Verdict trivial_up_to(const Atlas& atlas, const Word& w, int window, std::size_t budget) {
  return equal_up_to(atlas, w, Word{}, window, budget);
}

std::pair<std::string, std::string> observe(const Atlas& atlas, const Witness& witness, const Word& w1,
                                            const Word& w2, int window, std::size_t budget) {
  struct Visitor {
    const Atlas& atlas;
    const Word& w1;
    const Word& w2;
    int window;
    std::size_t budget;
    std::pair<std::string, std::string> operator()(const EndWitness& e) const {
      return {std::to_string(end_permutation(atlas, w1)(e.end)), std::to_string(end_permutation(atlas, w2)(e.end))};
    }
    std::pair<std::string, std::string> operator()(const FluxWitness& f) const {
      const Word u = free_reduce(w1 * inverse(w2));
      const auto v = phi(atlas, f.end, u, flux_index(u, window), budget);
      return {v ? std::to_string(*v) : std::string("undefined"), "0"};
    }
    std::pair<std::string, std::string> operator()(const BasisWitness& b) const {
      const H1Vector x = b.basis.kind == BasisKind::Delta ? H1Vector::boundary(b.basis.end, atlas.ends())
                                                          : H1Vector::basis(b.basis);
      return {show(act(atlas, w1, x, window)), show(act(atlas, w2, x, window))};
    }
    std::pair<std::string, std::string> operator()(const CurveWitness& c) const {
      return {curve_image(atlas, w1, CurveTerm(c.curve), budget).render(),
              curve_image(atlas, w2, CurveTerm(c.curve), budget).render()};
    }
  };
  return std::visit(Visitor{atlas, w1, w2, window, budget}, witness);
}

std::string to_string(const Witness& witness) {
  struct Visitor {
    std::string operator()(const EndWitness& e) const { return "end:" + std::to_string(e.end); }
    std::string operator()(const FluxWitness& f) const { return "flux:" + std::to_string(f.end); }
    std::string operator()(const BasisWitness& b) const { return "basis:" + to_string(b.basis); }
    std::string operator()(const CurveWitness& c) const { return "curve:" + to_string(c.curve); }
  };
  return std::visit(Visitor{}, witness);
}

std::string to_string(const Verdict& verdict) {
  struct Visitor {
    std::string operator()(const Verified& v) const { return "Verified(window=" + std::to_string(v.window) + ")"; }
    std::string operator()(const Refuted& r) const { return "Refuted(" + to_string(r.witness) + ")"; }
    std::string operator()(const Unknown& u) const { return "Unknown(" + u.reason + ")"; }
  };
  return std::visit(Visitor{}, verdict);
}

bool is_verified(const Verdict& v) { return std::holds_alternative<Verified>(v); }
bool is_refuted(const Verdict& v) { return std::holds_alternative<Refuted>(v); }

}  // namespace bigmcg
