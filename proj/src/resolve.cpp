#include "grlocal/resolve.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace grlocal {

namespace {

ScalarMatrix single_row(const RowVec& v) {
  ScalarMatrix m;
  m.set_cols(static_cast<int>(v.size()));
  m.append_row(v);
  return m;
}

std::vector<HVec> free_units(const GrFreeModule& F) {
  std::vector<HVec> units;
  for (int i = 0; i < F.rank(); ++i) units.push_back(F.unit(i));
  return units;
}

bool in_mideal_of_free(const GrFreeModule& F, const HVec& v) {
  const CoeffRing& k = F.ring().coeff();
  ScalarMatrix U = howell_form(
      k, stack(span_rows(F, free_units(F), v.degree, SpanKind::MIdeal),
               F.base_rels(v.degree)));
  return in_row_span(k, U, v.coords);
}

GrFreeModule free_on(const GradedRing& R, const std::vector<HVec>& gens,
                     const char* prefix) {
  std::vector<std::pair<std::string, Degree>> basis;
  for (size_t i = 0; i < gens.size(); ++i)
    basis.emplace_back(prefix + std::to_string(i + 1), gens[i].degree);
  return GrFreeModule(R, std::move(basis));
}

// First n coordinates of each canonical left-kernel row of (mat stacked over
// target relations): the degreewise kernel of a map into a presented target.
ScalarMatrix project_kernel(const CoeffRing& k, const ScalarMatrix& mat,
                            const ScalarMatrix& target_rels, int n) {
  ScalarMatrix K = left_kernel(k, stack(mat, target_rels));
  ScalarMatrix out;
  out.set_cols(n);
  for (int r = 0; r < K.rows(); ++r)
    out.append_row(RowVec(K.row(r).begin(), K.row(r).begin() + n));
  return out;
}

bool chain_certified(const GradedRing& R, const ProjectiveCover& cover,
                     const std::vector<GradedMorphism>& steps) {
  // The zero module resolves exactly regardless of the ring's tail.
  if (cover.cover.rank() == 0 && steps.empty()) return true;
  if (!R.visibly_bounded()) return false;
  auto term_ok = [&](const GrFreeModule& F) {
    for (const auto& [name, d] : F.basis()) {
      (void)name;
      for (const Degree& g : R.mideal_support())
        if (!R.in_window(R.monoid().compose(g, d))) return false;
    }
    return true;
  };
  if (!term_ok(cover.cover)) return false;
  for (const auto& phi : steps)
    if (!term_ok(phi.source())) return false;
  return true;
}

}  // namespace

std::string to_string(ResolutionStatus s) {
  switch (s) {
    case ResolutionStatus::Resolved: return "resolved";
    case ResolutionStatus::ExhaustedSteps: return "exhausted_steps";
    case ResolutionStatus::ExhaustedBound: return "exhausted_bound";
  }
  return "?";
}

ProjectiveCover projective_cover(const PresentedModule& M) {
  std::vector<HVec> omega = minimal_generators(M);
  GrFreeModule F = free_on(M.ring(), omega, "c");
  std::vector<HVec> ker = kernel_generators(F, omega, M);
  for (const HVec& kv : ker)
    if (!in_mideal_of_free(F, kv))
      throw InternalError("cover kernel escapes mideal * F");
  return ProjectiveCover{std::move(F), std::move(omega), std::move(ker)};
}

const GrFreeModule& Resolution::term(int i) const {
  if (i == 0) return cover.cover;
  return steps.at(static_cast<size_t>(i) - 1).source();
}

Resolution minimal_resolution(const PresentedModule& M, int max_steps) {
  if (max_steps < 0) throw PreconditionError("max_steps must be nonnegative");
  const GradedRing& R = M.ring();
  Resolution res{projective_cover(M), {}, ResolutionStatus::Resolved, false, {}};
  std::vector<HVec> kernel = res.cover.kernel_gens;
  while (true) {
    if (kernel.empty()) {
      res.certified = chain_certified(R, res.cover, res.steps);
      res.status =
          res.certified ? ResolutionStatus::Resolved : ResolutionStatus::ExhaustedBound;
      res.last_kernel.clear();
      break;
    }
    if (static_cast<int>(res.steps.size()) >= max_steps) {
      res.status = ResolutionStatus::ExhaustedSteps;
      res.certified = false;
      res.last_kernel = std::move(kernel);
      break;
    }
    const GrFreeModule& prev =
        res.steps.empty() ? res.cover.cover : res.steps.back().source();
    std::vector<HVec> omega =
        minimal_generators_of_span(PresentedModule::free(prev), kernel);
    GrFreeModule fn = free_on(R, omega, "c");
    GradedMorphism phi(std::move(fn), prev, std::move(omega));
    kernel = kernel_upto(phi);
    res.steps.push_back(std::move(phi));
  }
  std::vector<std::string> failures = verify_resolution(M, res);
  if (!failures.empty())
    throw InternalError("resolution invariant violated: " + failures.front());
  return res;
}

int BettiTable::total(int i) const {
  if (i < 0 || i >= static_cast<int>(by_index.size())) return 0;
  int t = 0;
  for (const auto& [d, c] : by_index[i]) t += c;
  return t;
}

int BettiTable::count(int i, const Degree& g) const {
  if (i < 0 || i >= static_cast<int>(by_index.size())) return 0;
  auto it = by_index[i].find(g);
  return it == by_index[i].end() ? 0 : it->second;
}

BettiTable betti_of(const Resolution& res) {
  BettiTable t;
  t.by_index.resize(static_cast<size_t>(res.length()) + 1);
  for (int i = 0; i <= res.length(); ++i)
    for (const auto& [name, d] : res.term(i).basis()) {
      (void)name;
      t.by_index[i][d] += 1;
    }
  return t;
}

BettiTable betti(const PresentedModule& M, int max_steps) {
  return betti_of(minimal_resolution(M, max_steps));
}

namespace {

// Rank over the residue field of the degree-g block of a basis-indexed matrix.
int degree_rank(const CoeffRing& D, const ScalarMatrix& mat, const GrFreeModule& src,
                const GrFreeModule& dst, const Degree& g) {
  ScalarMatrix sub;
  std::vector<int> cols;
  for (int i = 0; i < dst.rank(); ++i)
    if (dst.basis()[i].second == g) cols.push_back(i);
  sub.set_cols(static_cast<int>(cols.size()));
  for (int j = 0; j < src.rank(); ++j) {
    if (!(src.basis()[j].second == g)) continue;
    RowVec row;
    for (int c : cols) row.push_back(mat.at(j, c));
    sub.append_row(std::move(row));
  }
  return howell_form(D, sub).rows();
}

}  // namespace

BettiTable tor_of(const PresentedModule& M, const Resolution& res) {
  const GradedRing& R = M.ring();
  const CoeffRing& k = R.coeff();
  const CoeffRing D = R.residue_coeff();
  const Degree e = R.monoid().neutral();
  const int len = res.length();

  // Induced matrices over D: only degree-e entries survive the tensor.
  std::vector<ScalarMatrix> mats;
  for (int s = 1; s <= len; ++s) {
    const GradedMorphism& phi = res.steps[s - 1];
    const GrFreeModule& src = phi.source();
    const GrFreeModule& dst = phi.target();
    ScalarMatrix md(src.rank(), dst.rank());
    for (int j = 0; j < src.rank(); ++j) {
      const auto& lay = dst.layout(phi.columns()[j].degree);
      for (const auto& blk : lay.blocks) {
        if (!(blk.coeff_deg == e)) continue;
        md.at(j, blk.basis) = k.residue(phi.columns()[j].coords[blk.offset]);
      }
    }
    for (int j = 0; j < src.rank(); ++j)
      for (int i = 0; i < dst.rank(); ++i)
        if (!D.is_zero(md.at(j, i)))
          throw InternalError(
              "nonzero differential after tensoring with D at step " + std::to_string(s) +
              "; the resolution is not minimal");
    mats.push_back(std::move(md));
  }

  BettiTable t;
  t.by_index.resize(static_cast<size_t>(len) + 1);
  for (int i = 0; i <= len; ++i) {
    const GrFreeModule& F = res.term(i);
    std::set<Degree> degrees;
    for (const auto& [name, d] : F.basis()) {
      (void)name;
      degrees.insert(d);
    }
    for (const Degree& g : degrees) {
      int dim = 0;
      for (const auto& [name, d] : F.basis()) {
        (void)name;
        if (d == g) ++dim;
      }
      int r1 = i >= 1 ? degree_rank(D, mats[i - 1], res.term(i), res.term(i - 1), g) : 0;
      int r2 = i + 1 <= len ? degree_rank(D, mats[i], res.term(i + 1), res.term(i), g) : 0;
      int h = dim - r1 - r2;
      if (h < 0) throw InternalError("negative homology dimension in the Tor table");
      if (h > 0) t.by_index[i][g] = h;
    }
  }

  if (!(t == betti_of(res)))
    throw InternalError("Tor dimensions disagree with the Betti table");
  return t;
}

BettiTable tor_dims(const PresentedModule& M, int max_steps) {
  Resolution res = minimal_resolution(M, max_steps);
  return tor_of(M, res);
}

std::optional<std::vector<HVec>> is_free(const PresentedModule& M) {
  ProjectiveCover cover = projective_cover(M);
  if (!cover.kernel_gens.empty()) return std::nullopt;
  return cover.gens;
}

DimensionReport pdim(const PresentedModule& M, int max_steps) {
  Resolution res = minimal_resolution(M, max_steps);
  DimensionReport rep;
  switch (res.status) {
    case ResolutionStatus::Resolved:
      rep.value = res.length();
      rep.exact = true;
      break;
    case ResolutionStatus::ExhaustedBound:
      rep.value = res.length();
      rep.exact = false;
      break;
    case ResolutionStatus::ExhaustedSteps:
      rep.value = std::nullopt;
      rep.exact = false;
      break;
  }
  return rep;
}

PresentedModule residue_module(const GradedRing& R) {
  GrFreeModule a = free_module(R, {R.monoid().neutral()});
  PresentedModule a_mod = PresentedModule::free(a);
  std::vector<HVec> mgens;
  for (const Degree& g : R.window()) {
    ScalarMatrix rows = R.mideal_rows(g);
    for (int r = 0; r < rows.rows(); ++r) mgens.push_back(HVec{g, rows.row(r)});
  }
  std::vector<HVec> minimal = minimal_generators_of_span(a_mod, mgens);
  return PresentedModule::from_relgens(std::move(a), std::move(minimal));
}

DimensionReport gldim(const GradedRing& R, int max_steps) {
  return pdim(residue_module(R), max_steps);
}

CyclicSweepReport gldim_cyclic_sweep(const GradedRing& R, int max_steps, long max_ideals) {
  const CoeffRing& k = R.coeff();
  if (!k.finite())
    throw PreconditionError("the cyclic-module sweep needs finite coefficients");
  for (const Degree& g : R.window()) {
    double cost = 1;
    for (int c = 0; c < R.word_count(g); ++c) cost *= static_cast<double>(k.size());
    if (cost > 4096)
      throw PreconditionError("cyclic-module sweep cap exceeded in degree " +
                              R.monoid().show(g));
  }

  GrFreeModule a = free_module(R, {R.monoid().neutral()});
  const auto& win = R.window();
  const Monoid& mono = R.monoid();

  // All coefficient vectors over an ambient word count.
  auto all_vectors = [&](int n) {
    std::vector<RowVec> out{RowVec()};
    for (int i = 0; i < n; ++i) {
      std::vector<RowVec> next;
      for (const auto& v : out)
        for (std::uint64_t s = 0; s < k.size(); ++s) {
          RowVec w = v;
          w.push_back(k.nth(s));
          next.push_back(std::move(w));
        }
      out = std::move(next);
    }
    return out;
  };

  auto span_key = [&](const ScalarMatrix& H) {
    std::ostringstream os;
    for (int r = 0; r < H.rows(); ++r)
      for (int c = 0; c < H.cols(); ++c) os << k.show(H.at(r, c)) << ',';
    return os.str();
  };

  CyclicSweepReport rep;
  DimensionReport sup;
  sup.value = 0;
  sup.exact = true;
  bool any = false;

  // Depth-first product over the window: at each degree choose any span
  // containing the forced left multiples of the lower choices.
  std::vector<ScalarMatrix> chosen(win.size());
  auto dfs = [&](auto&& self, size_t t) -> void {
    if (t == win.size()) {
      ++rep.ideals;
      if (rep.ideals > max_ideals)
        throw PreconditionError("cyclic-module sweep exceeded the ideal cap");
      std::vector<HVec> relgens;
      for (size_t s = 0; s < win.size(); ++s)
        for (int r = 0; r < chosen[s].rows(); ++r)
          relgens.push_back(HVec{win[s], chosen[s].row(r)});
      PresentedModule quot = PresentedModule::from_relgens(a, relgens);
      DimensionReport d = pdim(quot, max_steps);
      if (!d.value.has_value()) {
        if (sup.value.has_value() || !any) sup = d;
      } else if (sup.value.has_value() && (!any || *d.value > *sup.value)) {
        sup = d;
      }
      any = true;
      return;
    }
    const Degree& g = win[t];
    int n = R.word_count(g);
    ScalarMatrix forced = R.component_rels(g);
    for (size_t s = 0; s < t; ++s) {
      auto q = mono.left_factor(g, win[s]);
      if (!q || q->is_neutral()) continue;
      if (R.component_is_zero(*q)) continue;
      for (int w : R.surviving_words(*q))
        for (int r = 0; r < chosen[s].rows(); ++r)
          forced = stack(forced, single_row(R.mul_word_vec(*q, w, win[s], chosen[s].row(r))));
    }
    ScalarMatrix base = howell_form(k, forced);
    std::vector<RowVec> elements = all_vectors(n);

    std::set<std::string> seen;
    std::vector<ScalarMatrix> spans{base};
    seen.insert(span_key(base));
    for (size_t head = 0; head < spans.size(); ++head) {
      ScalarMatrix cur = spans[head];
      chosen[t] = cur;
      self(self, t + 1);
      for (const RowVec& v : elements) {
        if (in_row_span(k, cur, v)) continue;
        ScalarMatrix bigger = howell_form(k, stack(cur, single_row(v)));
        std::string key = span_key(bigger);
        if (seen.insert(key).second) spans.push_back(std::move(bigger));
      }
    }
  };
  dfs(dfs, 0);

  rep.supremum = sup;
  DimensionReport global = gldim(R, max_steps);
  rep.matches_gldim = (global.value == sup.value);
  return rep;
}

CoverLift cover_lift(const FreeToModuleMap& psi, const ProjectiveCover& cover,
                     const PresentedModule& M) {
  const GradedRing& R = M.ring();
  const CoeffRing& k = R.coeff();
  if (!generates_within_bound(M, psi.images))
    throw PreconditionError("psi is not an epimorphism within the bound");

  // Lift each basis image of Q through the cover.
  std::vector<HVec> cols;
  for (int j = 0; j < psi.source.rank(); ++j) {
    const Degree& d = psi.source.basis()[j].second;
    int n = cover.cover.layout(d).total;
    ScalarMatrix rows = morphism_matrix(cover.cover, cover.gens, M.ambient_free(), d);
    auto x = solve_left(k, stack(rows, M.rels(d)), psi.images[j].coords);
    if (!x) throw InternalError("cover fails to reach an image of an epimorphism");
    cols.push_back(HVec{d, RowVec(x->begin(), x->begin() + n)});
  }
  GradedMorphism phi(psi.source, cover.cover, cols);

  // phi is onto the cover; a superfluous kernel forces this.
  if (!generates_within_bound(PresentedModule::free(cover.cover), phi.columns()))
    throw InternalError("lifted map is not surjective onto the cover");

  // Split phi: solve sigma(e_i) with phi(sigma(e_i)) = e_i.
  CoverLift out{std::move(phi), {}, {}, false};
  for (int i = 0; i < cover.cover.rank(); ++i) {
    const Degree& d = cover.cover.basis()[i].second;
    int n = psi.source.layout(d).total;
    ScalarMatrix rows = morphism_matrix(psi.source, out.phi.columns(), cover.cover, d);
    auto x = solve_left(k, stack(rows, cover.cover.base_rels(d)),
                        cover.cover.unit(i).coords);
    if (!x) throw InternalError("surjection onto a free module failed to split");
    out.splitting.push_back(HVec{d, RowVec(x->begin(), x->begin() + n)});
  }

  out.kernel_gens = kernel_generators(psi.source, out.phi.columns(),
                                      PresentedModule::free(cover.cover));
  out.is_isomorphism = out.kernel_gens.empty();
  return out;
}

std::vector<std::string> verify_resolution(const PresentedModule& M, const Resolution& res) {
  const GradedRing& R = M.ring();
  const CoeffRing& k = R.coeff();
  std::vector<std::string> out;

  for (size_t s = 0; s < res.steps.size(); ++s)
    if (!res.steps[s].entries_in_mideal())
      out.push_back("differential " + std::to_string(s + 1) +
                    " has an entry outside the maximal graded ideal");
  for (const HVec& kv : res.cover.kernel_gens)
    if (!in_mideal_of_free(res.cover.cover, kv))
      out.push_back("cover kernel escapes mideal * F0");

  const int len = res.length();
  for (const Degree& g : R.window()) {
    // Stage 0: eps against phi_1.
    const GrFreeModule& f0 = res.cover.cover;
    int n0 = f0.layout(g).total;
    ScalarMatrix eps = morphism_matrix(f0, res.cover.gens, M.ambient_free(), g);
    ScalarMatrix keps = project_kernel(k, eps, M.rels(g), n0);
    ScalarMatrix im1;
    im1.set_cols(n0);
    if (len >= 1) im1 = span_rows(f0, res.steps[0].columns(), g, SpanKind::Full);
    ScalarMatrix lhs = howell_form(k, stack(keps, f0.base_rels(g)));
    ScalarMatrix rhs = howell_form(k, stack(im1, f0.base_rels(g)));
    if (len >= 1 || res.last_kernel.empty()) {
      if (!mat_equal(k, lhs, rhs))
        out.push_back("kernel/image mismatch at stage 0, degree " + R.monoid().show(g));
    }
    if (len >= 1) {
      ScalarMatrix comp =
          mat_mul(k, morphism_matrix(res.steps[0].source(), res.steps[0].columns(), f0, g), eps);
      for (int r = 0; r < comp.rows(); ++r)
        if (!in_row_span(k, M.rels(g), comp.row(r)))
          out.push_back("composite eps*phi_1 is nonzero in degree " + R.monoid().show(g));
    }

    for (int s = 1; s < len; ++s) {
      const GrFreeModule& src = res.steps[s - 1].source();
      const GrFreeModule& dst = res.steps[s - 1].target();
      int n = src.layout(g).total;
      ScalarMatrix mat = morphism_matrix(src, res.steps[s - 1].columns(), dst, g);
      ScalarMatrix ker = project_kernel(k, mat, dst.base_rels(g), n);
      ScalarMatrix im = span_rows(src, res.steps[s].columns(), g, SpanKind::Full);
      ScalarMatrix l = howell_form(k, stack(ker, src.base_rels(g)));
      ScalarMatrix r2 = howell_form(k, stack(im, src.base_rels(g)));
      if (!mat_equal(k, l, r2))
        out.push_back("kernel/image mismatch at stage " + std::to_string(s) + ", degree " +
                      R.monoid().show(g));
      ScalarMatrix comp = mat_mul(
          k, morphism_matrix(res.steps[s].source(), res.steps[s].columns(), src, g), mat);
      for (int rr = 0; rr < comp.rows(); ++rr)
        if (!in_row_span(k, dst.base_rels(g), comp.row(rr)))
          out.push_back("composite phi_" + std::to_string(s) + "*phi_" +
                        std::to_string(s + 1) + " is nonzero in degree " +
                        R.monoid().show(g));
    }

    // Final stage: a terminated resolution has no further kernel.
    if (len >= 1 && res.last_kernel.empty()) {
      const GrFreeModule& src = res.steps[len - 1].source();
      const GrFreeModule& dst = res.steps[len - 1].target();
      int n = src.layout(g).total;
      ScalarMatrix mat = morphism_matrix(src, res.steps[len - 1].columns(), dst, g);
      ScalarMatrix ker = project_kernel(k, mat, dst.base_rels(g), n);
      ScalarMatrix l = howell_form(k, stack(ker, src.base_rels(g)));
      if (!mat_equal(k, l, src.base_rels(g)))
        out.push_back("terminated resolution still has a kernel in degree " +
                      R.monoid().show(g));
    }
  }
  return out;
}

}  // namespace grlocal
