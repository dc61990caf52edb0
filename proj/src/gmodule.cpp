#include "grlocal/gmodule.hpp"

#include <algorithm>

namespace grlocal {

namespace {

ScalarMatrix single_row(const RowVec& v) {
  ScalarMatrix m;
  m.set_cols(static_cast<int>(v.size()));
  m.append_row(v);
  return m;
}

}  // namespace

bool hvec_equal(const CoeffRing& k, const HVec& a, const HVec& b) {
  if (!(a.degree == b.degree) || a.coords.size() != b.coords.size()) return false;
  for (size_t i = 0; i < a.coords.size(); ++i)
    if (!k.equal(a.coords[i], b.coords[i])) return false;
  return true;
}

GrFreeModule::GrFreeModule(const GradedRing& ring,
                           std::vector<std::pair<std::string, Degree>> basis)
    : ring_(&ring), basis_(std::move(basis)) {
  const Monoid& mono = ring.monoid();
  for (auto& [name, d] : basis_) {
    (void)name;
    mono.check_degree(d);
    if (!ring.in_window(d))
      throw PreconditionError("basis degree " + mono.show(d) + " is beyond the bound");
  }
  const auto& win = ring.window();
  layouts_.resize(win.size());
  rels_.resize(win.size());
  for (size_t gi = 0; gi < win.size(); ++gi) {
    Layout& lay = layouts_[gi];
    lay.block_of_basis.assign(basis_.size(), -1);
    for (size_t b = 0; b < basis_.size(); ++b) {
      auto q = mono.left_factor(win[gi], basis_[b].second);
      if (!q) continue;
      int width = ring.word_count(*q);
      if (width == 0) continue;
      lay.block_of_basis[b] = static_cast<int>(lay.blocks.size());
      lay.blocks.push_back({static_cast<int>(b), *q, lay.total, width});
      lay.total += width;
    }
    // Blocks carry Howell forms with strictly increasing pivot columns, so
    // their block-diagonal stack is itself canonical.
    ScalarMatrix rel;
    rel.set_cols(lay.total);
    for (const Block& blk : lay.blocks) {
      const ScalarMatrix& r = ring.component_rels(blk.coeff_deg);
      for (int row = 0; row < r.rows(); ++row) {
        RowVec v(lay.total);
        for (int c = 0; c < blk.width; ++c) v[blk.offset + c] = r.at(row, c);
        rel.append_row(std::move(v));
      }
    }
    rels_[gi] = std::move(rel);
  }
}

const GrFreeModule::Layout& GrFreeModule::layout(const Degree& g) const {
  int i = ring_->degree_index(g);
  if (i < 0)
    throw PreconditionError("degree " + ring_->monoid().show(g) + " is beyond the bound");
  return layouts_[i];
}

const ScalarMatrix& GrFreeModule::base_rels(const Degree& g) const {
  int i = ring_->degree_index(g);
  if (i < 0)
    throw PreconditionError("degree " + ring_->monoid().show(g) + " is beyond the bound");
  return rels_[i];
}

int GrFreeModule::component_dim(const Degree& g) const {
  int dim = 0;
  for (const Block& blk : layout(g).blocks)
    dim += static_cast<int>(ring_->surviving_words(blk.coeff_deg).size());
  return dim;
}

RowVec GrFreeModule::reduce(const Degree& g, RowVec v) const {
  const Layout& lay = layout(g);
  if (static_cast<int>(v.size()) != lay.total)
    throw PreconditionError("coordinate vector has the wrong length");
  return reduce_row_mod(ring_->coeff(), base_rels(g), std::move(v));
}

bool GrFreeModule::is_zero(const HVec& v) const {
  return row_is_zero(ring_->coeff(), reduce(v.degree, v.coords));
}

RowVec GrFreeModule::left_mul_word(const Degree& gw, int word_i, const Degree& src,
                                   const RowVec& v) const {
  const CoeffRing& k = ring_->coeff();
  const Monoid& mono = ring_->monoid();
  Degree dst = mono.compose(gw, src);
  const Layout& sl = layout(src);
  const Layout& dl = layout(dst);
  if (static_cast<int>(v.size()) != sl.total)
    throw PreconditionError("coordinate vector has the wrong length");
  RowVec out(dl.total);
  for (const Block& sb : sl.blocks) {
    RowVec piece(v.begin() + sb.offset, v.begin() + sb.offset + sb.width);
    if (row_is_zero(k, piece)) continue;
    RowVec prod = ring_->mul_word_vec(gw, word_i, sb.coeff_deg, piece);
    if (prod.empty()) continue;
    int db = dl.block_of_basis[sb.basis];
    if (db < 0) throw InternalError("product block missing from the layout");
    const Block& tb = dl.blocks[db];
    for (int c = 0; c < tb.width; ++c) out[tb.offset + c] = k.add(out[tb.offset + c], prod[c]);
  }
  return out;
}

HVec GrFreeModule::unit(int i) const {
  const Degree& d = basis_[i].second;
  const Layout& lay = layout(d);
  int bi = lay.block_of_basis[i];
  if (bi < 0) throw InternalError("basis element missing from its own degree layout");
  RowVec v(lay.total);
  int widx = ring_->word_index(lay.blocks[bi].coeff_deg, GenWord{});
  v[lay.blocks[bi].offset + widx] = ring_->coeff().one();
  return HVec{d, std::move(v)};
}

std::string GrFreeModule::show(const HVec& v) const {
  const CoeffRing& k = ring_->coeff();
  const Layout& lay = layout(v.degree);
  std::string out;
  for (const Block& blk : lay.blocks) {
    const auto& ws = ring_->words(blk.coeff_deg);
    for (int c = 0; c < blk.width; ++c) {
      const Scalar& s = v.coords[blk.offset + c];
      if (k.is_zero(s)) continue;
      if (!out.empty()) out += " + ";
      std::string word = ws[c].empty() ? "" : ring_->show_word(ws[c]);
      if (!k.equal(s, k.one())) {
        out += k.show(s);
        out += "*";
      }
      if (!word.empty()) {
        out += word;
        out += "*";
      }
      out += basis_[blk.basis].first;
    }
  }
  return out.empty() ? "0" : out;
}

GradedMorphism::GradedMorphism(GrFreeModule source, GrFreeModule target,
                               std::vector<HVec> columns)
    : source_(std::move(source)), target_(std::move(target)), columns_(std::move(columns)) {
  if (&source_.ring() != &target_.ring())
    throw PreconditionError("morphism endpoints live over different rings");
  if (static_cast<int>(columns_.size()) != source_.rank())
    throw PreconditionError("morphism needs one column per source basis element");
  for (int j = 0; j < source_.rank(); ++j) {
    if (!(columns_[j].degree == source_.basis()[j].second))
      throw PreconditionError("column " + std::to_string(j + 1) +
                              " is not homogeneous of the source basis degree");
    columns_[j].coords = target_.reduce(columns_[j].degree, std::move(columns_[j].coords));
  }
}

ScalarMatrix morphism_matrix(const GrFreeModule& src, const std::vector<HVec>& columns,
                             const GrFreeModule& target_ambient, const Degree& g) {
  const GrFreeModule::Layout& sl = src.layout(g);
  const GrFreeModule::Layout& tl = target_ambient.layout(g);
  ScalarMatrix M(sl.total, tl.total);
  for (const GrFreeModule::Block& sb : sl.blocks) {
    const HVec& col = columns[sb.basis];
    for (int w = 0; w < sb.width; ++w)
      M.row(sb.offset + w) =
          target_ambient.left_mul_word(sb.coeff_deg, w, col.degree, col.coords);
  }
  return M;
}

ScalarMatrix GradedMorphism::degree_matrix(const Degree& g) const {
  return morphism_matrix(source_, columns_, target_, g);
}

HVec GradedMorphism::apply(const HVec& v) const {
  ScalarMatrix M = degree_matrix(v.degree);
  return HVec{v.degree, target_.reduce(v.degree, row_times_matrix(source_.ring().coeff(),
                                                                  v.coords, M))};
}

std::optional<HomogeneousElement> GradedMorphism::entry(int i, int j) const {
  const Monoid& mono = source_.ring().monoid();
  auto beta = mono.left_factor(source_.basis()[j].second, target_.basis()[i].second);
  if (!beta) return std::nullopt;
  const GrFreeModule::Layout& lay = target_.layout(columns_[j].degree);
  int bi = lay.block_of_basis[i];
  RowVec coords(source_.ring().word_count(*beta));
  if (bi >= 0) {
    const GrFreeModule::Block& blk = lay.blocks[bi];
    for (int c = 0; c < blk.width; ++c) coords[c] = columns_[j].coords[blk.offset + c];
  }
  return HomogeneousElement{*beta, std::move(coords)};
}

bool GradedMorphism::entries_in_mideal() const {
  const CoeffRing& k = source_.ring().coeff();
  Degree e = source_.ring().monoid().neutral();
  for (int j = 0; j < source_.rank(); ++j) {
    const GrFreeModule::Layout& lay = target_.layout(columns_[j].degree);
    for (const GrFreeModule::Block& blk : lay.blocks) {
      if (!(blk.coeff_deg == e)) continue;
      if (k.is_unit(columns_[j].coords[blk.offset])) return false;
    }
  }
  return true;
}

PresentedModule PresentedModule::from_morphism(GradedMorphism phi) {
  PresentedModule m(phi.target());
  m.relgens_ = phi.columns();
  m.phi_ = std::move(phi);
  m.build_rels();
  return m;
}

PresentedModule PresentedModule::from_relgens(GrFreeModule f0, std::vector<HVec> relgens) {
  std::vector<std::pair<std::string, Degree>> src_basis;
  for (size_t i = 0; i < relgens.size(); ++i)
    src_basis.emplace_back("f" + std::to_string(i + 1), relgens[i].degree);
  GrFreeModule f1(f0.ring(), std::move(src_basis));
  GradedMorphism phi(std::move(f1), std::move(f0), std::move(relgens));
  return from_morphism(std::move(phi));
}

PresentedModule PresentedModule::free(GrFreeModule f0) {
  PresentedModule m(std::move(f0));
  m.build_rels();
  return m;
}

void PresentedModule::build_rels() {
  const GradedRing& R = f0_.ring();
  rels_.clear();
  rels_.reserve(R.window().size());
  for (const Degree& g : R.window())
    rels_.push_back(howell_form(
        R.coeff(), stack(f0_.base_rels(g), span_rows(f0_, relgens_, g, SpanKind::Full))));
}

const ScalarMatrix& PresentedModule::rels(const Degree& g) const {
  int i = ring().degree_index(g);
  if (i < 0)
    throw PreconditionError("degree " + ring().monoid().show(g) + " is beyond the bound");
  return rels_[i];
}

RowVec PresentedModule::reduce(const Degree& g, RowVec v) const {
  if (static_cast<int>(v.size()) != f0_.layout(g).total)
    throw PreconditionError("coordinate vector has the wrong length");
  return reduce_row_mod(ring().coeff(), rels(g), std::move(v));
}

bool PresentedModule::is_zero_elem(const HVec& v) const {
  return row_is_zero(ring().coeff(), reduce(v.degree, v.coords));
}

bool PresentedModule::component_zero(const Degree& g) const {
  const CoeffRing& k = ring().coeff();
  int n = f0_.layout(g).total;
  const ScalarMatrix& H = rels(g);
  for (int c = 0; c < n; ++c) {
    RowVec unit(n);
    unit[c] = k.one();
    if (!in_row_span(k, H, unit)) return false;
  }
  return true;
}

bool PresentedModule::module_zero() const {
  for (const Degree& g : ring().window())
    if (!component_zero(g)) return false;
  return true;
}

PresentedModule::ComponentView PresentedModule::component(const Degree& g) const {
  const CoeffRing& k = ring().coeff();
  ComponentView view;
  view.ambient = f0_.layout(g).total;
  view.rels = &rels(g);
  std::vector<bool> has_pivot(view.ambient, false);
  for (int r = 0; r < view.rels->rows(); ++r) {
    for (int c = 0; c < view.ambient; ++c) {
      const Scalar& s = view.rels->at(r, c);
      if (k.is_zero(s)) continue;
      has_pivot[c] = true;
      unsigned v = k.valuation(s);
      if (v > 0) view.torsion.emplace_back(c, v);
      break;
    }
  }
  for (int c = 0; c < view.ambient; ++c)
    if (!has_pivot[c]) ++view.free_rank;
  return view;
}

GrFreeModule free_module(const GradedRing& ring, const std::vector<Degree>& degrees) {
  std::vector<std::pair<std::string, Degree>> basis;
  for (size_t i = 0; i < degrees.size(); ++i)
    basis.emplace_back("e" + std::to_string(i + 1), degrees[i]);
  return GrFreeModule(ring, std::move(basis));
}

ScalarMatrix span_rows(const GrFreeModule& F, const std::vector<HVec>& gens,
                       const Degree& g, SpanKind kind) {
  const GradedRing& R = F.ring();
  const CoeffRing& k = R.coeff();
  const Monoid& mono = R.monoid();
  ScalarMatrix out;
  out.set_cols(F.layout(g).total);
  for (const HVec& gen : gens) {
    auto q = mono.left_factor(g, gen.degree);
    if (!q) continue;
    if (q->is_neutral()) {
      if (kind == SpanKind::Full)
        out.append_row(gen.coords);
      else if (!k.is_field())
        out.append_row(
            row_scale(k, k.from_int(static_cast<long long>(k.prime())), gen.coords));
      continue;
    }
    if (R.component_is_zero(*q)) continue;
    for (int w : R.surviving_words(*q))
      out.append_row(F.left_mul_word(*q, w, gen.degree, gen.coords));
  }
  return out;
}

std::vector<HVec> kernel_generators(const GrFreeModule& src,
                                    const std::vector<HVec>& columns,
                                    const PresentedModule& target) {
  const GradedRing& R = src.ring();
  const CoeffRing& k = R.coeff();
  std::vector<HVec> retained;
  for (const Degree& g : R.window()) {
    int n = src.layout(g).total;
    if (n == 0) continue;
    ScalarMatrix Mg = morphism_matrix(src, columns, target.ambient_free(), g);
    ScalarMatrix K = left_kernel(k, stack(Mg, target.rels(g)));
    ScalarMatrix cand;
    cand.set_cols(n);
    for (int r = 0; r < K.rows(); ++r)
      cand.append_row(RowVec(K.row(r).begin(), K.row(r).begin() + n));
    cand = howell_form(k, stack(cand, src.base_rels(g)));
    if (cand.rows() == 0) continue;
    ScalarMatrix U = howell_form(
        k, stack(span_rows(src, retained, g, SpanKind::Full), src.base_rels(g)));
    for (int r = 0; r < cand.rows(); ++r) {
      if (in_row_span(k, U, cand.row(r))) continue;
      retained.push_back(HVec{g, src.reduce(g, cand.row(r))});
      U = howell_form(k, stack(U, single_row(cand.row(r))));
    }
  }
  return retained;
}

std::vector<HVec> kernel_upto(const GradedMorphism& phi) {
  return kernel_generators(phi.source(), phi.columns(),
                           PresentedModule::free(phi.target()));
}

namespace {

std::vector<HVec> all_unit_vectors(const PresentedModule& M) {
  std::vector<HVec> units;
  const CoeffRing& k = M.ring().coeff();
  for (const Degree& g : M.ring().window()) {
    int n = M.ambient_free().layout(g).total;
    for (int c = 0; c < n; ++c) {
      RowVec v(n);
      v[c] = k.one();
      units.push_back(HVec{g, std::move(v)});
    }
  }
  return units;
}

}  // namespace

std::vector<HVec> minimal_generators_of_span(const PresentedModule& host,
                                             const std::vector<HVec>& gens) {
  const GradedRing& R = host.ring();
  const CoeffRing& k = R.coeff();
  const GrFreeModule& F = host.ambient_free();
  std::vector<HVec> picks;
  for (const Degree& g : R.window()) {
    if (F.layout(g).total == 0) continue;
    ScalarMatrix S =
        howell_form(k, stack(span_rows(F, gens, g, SpanKind::Full), host.rels(g)));
    ScalarMatrix U =
        howell_form(k, stack(span_rows(F, gens, g, SpanKind::MIdeal), host.rels(g)));
    for (int r = 0; r < S.rows(); ++r) {
      if (in_row_span(k, U, S.row(r))) continue;
      picks.push_back(HVec{g, host.reduce(g, S.row(r))});
      U = howell_form(k, stack(U, single_row(S.row(r))));
    }
  }
  return picks;
}

std::vector<HVec> minimal_generators(const PresentedModule& M) {
  return minimal_generators_of_span(M, all_unit_vectors(M));
}

std::vector<std::pair<Degree, int>> residue_space_dims(const PresentedModule& M) {
  const GradedRing& R = M.ring();
  const CoeffRing& k = R.coeff();
  const GrFreeModule& F = M.ambient_free();
  std::vector<HVec> units = all_unit_vectors(M);
  std::vector<std::pair<Degree, int>> dims;
  for (const Degree& g : R.window()) {
    int n = F.layout(g).total;
    if (n == 0) continue;
    // Columns of the Howell form of (mideal*M + rels) classify each ambient
    // coordinate: unit pivot = dead, pivot p = one residue dimension, no
    // pivot only over a field.
    ScalarMatrix H =
        howell_form(k, stack(span_rows(F, units, g, SpanKind::MIdeal), M.rels(g)));
    std::vector<unsigned> colsize(n, 2);  // 2 = no pivot
    for (int r = 0; r < H.rows(); ++r)
      for (int c = 0; c < n; ++c) {
        if (k.is_zero(H.at(r, c))) continue;
        colsize[c] = k.valuation(H.at(r, c));
        break;
      }
    int dim = 0;
    for (int c = 0; c < n; ++c) {
      if (colsize[c] == 0) continue;  // unit pivot
      if (!k.is_field()) {
        if (colsize[c] != 1)
          throw InternalError("residue space is not killed by the maximal ideal");
        ++dim;
      } else {
        if (colsize[c] != 2)
          throw InternalError("unexpected non-unit pivot over a field");
        ++dim;
      }
    }
    if (dim > 0) dims.emplace_back(g, dim);
  }
  return dims;
}

bool generates_within_bound(const PresentedModule& M, const std::vector<HVec>& gens) {
  const GradedRing& R = M.ring();
  const CoeffRing& k = R.coeff();
  const GrFreeModule& F = M.ambient_free();
  for (const Degree& g : R.window()) {
    int n = F.layout(g).total;
    if (n == 0) continue;
    ScalarMatrix H = howell_form(k, stack(span_rows(F, gens, g, SpanKind::Full), M.rels(g)));
    for (int c = 0; c < n; ++c) {
      RowVec unit(n);
      unit[c] = k.one();
      if (!in_row_span(k, H, unit)) return false;
    }
  }
  return true;
}

bool is_minimal(const std::vector<HVec>& gens, const PresentedModule& M,
                MinimalityMode mode) {
  const GradedRing& R = M.ring();
  const CoeffRing& k = R.coeff();
  if (!generates_within_bound(M, gens))
    throw PreconditionError("the given set does not generate the module within the bound");
  if (mode == MinimalityMode::ExhaustiveSubsets) {
    if (!k.finite())
      throw PreconditionError("exhaustive minimality testing needs finite coefficients");
    if (gens.size() > 12)
      throw PreconditionError("exhaustive minimality testing is capped at 12 generators");
    for (const Degree& g : R.window()) {
      auto view = M.component(g);
      if (view.free_rank + static_cast<int>(view.torsion.size()) > 8)
        throw PreconditionError("exhaustive minimality testing is capped at rank 8");
    }
    const size_t full = (size_t{1} << gens.size()) - 1;
    for (size_t mask = 0; mask < full; ++mask) {
      std::vector<HVec> subset;
      for (size_t i = 0; i < gens.size(); ++i)
        if (mask & (size_t{1} << i)) subset.push_back(gens[i]);
      if (generates_within_bound(M, subset)) return false;
    }
    return true;
  }
  // Residues of the set must stay independent over D in each degree.
  const GrFreeModule& F = M.ambient_free();
  std::vector<ScalarMatrix> U(R.window().size());
  for (size_t gi = 0; gi < R.window().size(); ++gi)
    U[gi] = howell_form(
        k, stack(span_rows(F, gens, R.window()[gi], SpanKind::MIdeal), M.rels(R.window()[gi])));
  for (const HVec& gen : gens) {
    int gi = R.degree_index(gen.degree);
    if (in_row_span(k, U[gi], gen.coords)) return false;
    U[gi] = howell_form(k, stack(U[gi], single_row(gen.coords)));
  }
  return true;
}

std::vector<HVec> minimize(const std::vector<HVec>& gens, const PresentedModule& M) {
  const GradedRing& R = M.ring();
  const CoeffRing& k = R.coeff();
  const GrFreeModule& F = M.ambient_free();
  if (!generates_within_bound(M, gens))
    throw PreconditionError("the given set does not generate the module within the bound");
  std::vector<ScalarMatrix> U(R.window().size());
  for (size_t gi = 0; gi < R.window().size(); ++gi)
    U[gi] = howell_form(
        k, stack(span_rows(F, gens, R.window()[gi], SpanKind::MIdeal), M.rels(R.window()[gi])));
  std::vector<HVec> kept;
  for (const HVec& gen : gens) {
    int gi = R.degree_index(gen.degree);
    if (in_row_span(k, U[gi], gen.coords)) continue;
    kept.push_back(gen);
    U[gi] = howell_form(k, stack(U[gi], single_row(gen.coords)));
  }
  return kept;
}

ExchangeResult exchange_step(const std::vector<HVec>& t1, const std::vector<HVec>& t2,
                             int eta_index, const PresentedModule& M) {
  const GradedRing& R = M.ring();
  const CoeffRing& k = R.coeff();
  const Monoid& mono = R.monoid();
  const GrFreeModule& F = M.ambient_free();
  if (eta_index < 0 || eta_index >= static_cast<int>(t2.size()))
    throw PreconditionError("eta index out of range");
  const HVec& eta = t2[eta_index];
  for (const HVec& g : t1)
    if (hvec_equal(k, g, eta))
      throw PreconditionError("eta already belongs to T1; skip shared elements");
  if (!generates_within_bound(M, t1))
    throw PreconditionError("T1 does not generate the module within the bound");
  if (!generates_within_bound(M, t2))
    throw PreconditionError("T2 does not generate the module within the bound");

  // Express eta over T1, tracking which solve rows carry a degree-e (unit
  // capable) coefficient of which generator.
  const Degree& g = eta.degree;
  ScalarMatrix rows;
  rows.set_cols(F.layout(g).total);
  std::vector<int> gen_of_row;
  std::vector<bool> unit_slot;
  for (size_t s = 0; s < t1.size(); ++s) {
    auto q = mono.left_factor(g, t1[s].degree);
    if (!q) continue;
    if (q->is_neutral()) {
      rows.append_row(t1[s].coords);
      gen_of_row.push_back(static_cast<int>(s));
      unit_slot.push_back(true);
      continue;
    }
    if (R.component_is_zero(*q)) continue;
    for (int w : R.surviving_words(*q)) {
      rows.append_row(F.left_mul_word(*q, w, t1[s].degree, t1[s].coords));
      gen_of_row.push_back(static_cast<int>(s));
      unit_slot.push_back(false);
    }
  }
  const ScalarMatrix& rel = M.rels(g);
  for (int r = 0; r < rel.rows(); ++r) {
    rows.append_row(rel.row(r));
    gen_of_row.push_back(-1);
    unit_slot.push_back(false);
  }
  auto x = solve_left(k, rows, eta.coords);
  if (!x) throw PreconditionError("eta is not expressible over T1 within the bound");

  int chosen = -1;
  for (int r = 0; r < rows.rows() && chosen < 0; ++r) {
    if (!unit_slot[r] || !k.is_unit((*x)[r])) continue;
    int s = gen_of_row[r];
    bool in_t2 = false;
    for (const HVec& h : t2)
      if (hvec_equal(k, t1[s], h)) in_t2 = true;
    if (!in_t2) chosen = s;
  }
  if (chosen < 0)
    throw PreconditionError(
        "no unit coefficient against an exchangeable generator; T2 is not a minimal "
        "generating set or T1 does not generate");

  ExchangeResult result;
  result.generators = t1;
  result.generators[chosen] = eta;
  result.replaced_index = chosen;
  if (!generates_within_bound(M, result.generators))
    throw InternalError("exchange step broke the generating property");
  return result;
}

NakayamaReport nakayama_is_zero(const PresentedModule& M) {
  const GradedRing& R = M.ring();
  const CoeffRing& k = R.coeff();
  const GrFreeModule& F = M.ambient_free();
  NakayamaReport rep;
  for (const Degree& g : R.window()) {
    if (M.component_zero(g)) continue;
    rep.least_nonzero = g;
    break;
  }
  if (!rep.least_nonzero) {
    rep.is_zero = true;
    return rep;
  }
  // The least nonzero component cannot be covered by mideal * M.
  const Degree& g0 = *rep.least_nonzero;
  std::vector<HVec> units = all_unit_vectors(M);
  ScalarMatrix U =
      howell_form(k, stack(span_rows(F, units, g0, SpanKind::MIdeal), M.rels(g0)));
  bool all_covered = true;
  int n = F.layout(g0).total;
  for (int c = 0; c < n; ++c) {
    RowVec unit(n);
    unit[c] = k.one();
    if (!in_row_span(k, U, unit)) all_covered = false;
  }
  rep.witness_ok = !all_covered;
  return rep;
}

}  // namespace grlocal
