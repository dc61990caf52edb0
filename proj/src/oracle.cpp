#include "grlocal/oracle.hpp"

#include <algorithm>
#include <unordered_set>

namespace grlocal::oracle {

namespace {

// Fixed-width packing of coefficient vectors into 64 bits, with coordinatewise
// arithmetic. This is the oracle's entire linear algebra.
struct Packed {
  const CoeffRing* k = nullptr;
  int n = 0;
  unsigned bits = 0;
  std::uint64_t mask = 0;

  Packed(const CoeffRing& ring, int width, const OracleCaps& caps) : k(&ring), n(width) {
    if (!ring.finite())
      throw PreconditionError("the oracle needs finite coefficients");
    bits = 1;
    while ((std::uint64_t{1} << bits) < ring.size()) ++bits;
    if (n > 0 && bits * static_cast<unsigned>(n) > 63)
      throw PreconditionError("oracle component too wide to enumerate");
    double total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<double>(ring.size());
    if (total > static_cast<double>(caps.max_elements))
      throw PreconditionError("oracle component size cap exceeded");
    mask = (std::uint64_t{1} << bits) - 1;
  }

  std::uint64_t pack(const RowVec& v) const {
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i) out |= v[i].rep() << (bits * static_cast<unsigned>(i));
    return out;
  }
  RowVec unpack(std::uint64_t p) const {
    RowVec v(n);
    for (int i = 0; i < n; ++i)
      v[i] = k->nth((p >> (bits * static_cast<unsigned>(i))) & mask);
    return v;
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i) {
      unsigned sh = bits * static_cast<unsigned>(i);
      std::uint64_t s = ((a >> sh) & mask) + ((b >> sh) & mask);
      if (s >= k->size()) s -= k->size();
      out |= s << sh;
    }
    return out;
  }
  std::uint64_t scale(std::uint64_t a, std::uint64_t c) const {
    std::uint64_t out = 0;
    for (int i = 0; i < n; ++i) {
      unsigned sh = bits * static_cast<unsigned>(i);
      out |= (((a >> sh) & mask) * c % k->size()) << sh;
    }
    return out;
  }
  std::uint64_t count_all() const {
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= k->size();
    return total;
  }
};

// Additive closure of all scalar multiples of the given rows.
std::unordered_set<std::uint64_t> closure(const Packed& p,
                                          const std::vector<std::uint64_t>& rows) {
  std::unordered_set<std::uint64_t> span{0};
  for (std::uint64_t r : rows) {
    if (span.count(r)) continue;
    std::unordered_set<std::uint64_t> next;
    for (std::uint64_t s : span)
      for (std::uint64_t c = 0; c < p.k->size(); ++c) next.insert(p.add(s, p.scale(r, c)));
    span = std::move(next);
  }
  return span;
}

std::vector<std::uint64_t> pack_matrix(const Packed& p, const ScalarMatrix& m) {
  std::vector<std::uint64_t> rows;
  for (int r = 0; r < m.rows(); ++r) rows.push_back(p.pack(m.row(r)));
  return rows;
}

// Degree-g span rows of homogeneous generators, using every ring word (the
// oracle does not rely on the engine's choice of surviving words).
std::vector<std::uint64_t> gen_multiple_rows(const Packed& p, const GrFreeModule& F,
                                             const std::vector<HVec>& gens,
                                             const Degree& g) {
  const GradedRing& R = F.ring();
  const Monoid& mono = R.monoid();
  std::vector<std::uint64_t> rows;
  for (const HVec& gen : gens) {
    auto q = mono.left_factor(g, gen.degree);
    if (!q) continue;
    for (int w = 0; w < R.word_count(*q); ++w)
      rows.push_back(p.pack(F.left_mul_word(*q, w, gen.degree, gen.coords)));
  }
  return rows;
}

std::unordered_set<std::uint64_t> component_span(const Packed& p, const PresentedModule& M,
                                                 const std::vector<HVec>& gens,
                                                 const Degree& g) {
  std::vector<std::uint64_t> rows = gen_multiple_rows(p, M.ambient_free(), gens, g);
  for (std::uint64_t r : pack_matrix(p, M.rels(g))) rows.push_back(r);
  return closure(p, rows);
}

}  // namespace

std::vector<RowVec> enumerate_component(const PresentedModule& M, const Degree& g,
                                        const OracleCaps& caps) {
  const CoeffRing& k = M.ring().coeff();
  int n = M.ambient_free().layout(g).total;
  Packed p(k, n, caps);
  auto rels = closure(p, pack_matrix(p, M.rels(g)));
  std::vector<RowVec> reps;
  std::unordered_set<std::uint64_t> seen;
  std::uint64_t total = p.count_all();
  // Odometer over all ambient vectors; the first unseen vector of each coset
  // becomes its representative.
  RowVec cur(n, k.zero());
  for (std::uint64_t it = 0; it < total; ++it) {
    std::uint64_t packed = p.pack(cur);
    if (!seen.count(packed)) {
      reps.push_back(cur);
      for (std::uint64_t r : rels) seen.insert(p.add(packed, r));
    }
    for (int i = 0; i < n; ++i) {
      std::uint64_t next = cur[i].rep() + 1;
      if (next < k.size()) {
        cur[i] = k.nth(next);
        break;
      }
      cur[i] = k.zero();
    }
  }
  return reps;
}

std::vector<RowVec> brute_kernel(const GrFreeModule& src, const std::vector<HVec>& columns,
                                 const PresentedModule& target, const Degree& g,
                                 const OracleCaps& caps) {
  const GradedRing& R = src.ring();
  const CoeffRing& k = R.coeff();
  int n = src.layout(g).total;
  int m = target.ambient_free().layout(g).total;
  Packed psrc(k, n, caps);
  Packed ptgt(k, m, caps);
  auto tgt_rels = closure(ptgt, pack_matrix(ptgt, target.rels(g)));

  // Image of each source coordinate, by direct word multiplication.
  std::vector<RowVec> images;
  for (const GrFreeModule::Block& blk : src.layout(g).blocks) {
    const HVec& col = columns[blk.basis];
    for (int w = 0; w < blk.width; ++w)
      images.push_back(
          target.ambient_free().left_mul_word(blk.coeff_deg, w, col.degree, col.coords));
  }

  std::vector<RowVec> kernel;
  for (const RowVec& v : enumerate_component(PresentedModule::free(src), g, caps)) {
    RowVec img(m, k.zero());
    for (int c = 0; c < n; ++c) {
      if (k.is_zero(v[c])) continue;
      for (int t = 0; t < m; ++t) img[t] = k.add(img[t], k.mul(v[c], images[c][t]));
    }
    if (tgt_rels.count(ptgt.pack(img))) kernel.push_back(v);
  }
  return kernel;
}

bool brute_generates(const PresentedModule& M, const std::vector<HVec>& gens,
                     const OracleCaps& caps) {
  const CoeffRing& k = M.ring().coeff();
  for (const Degree& g : M.ring().window()) {
    int n = M.ambient_free().layout(g).total;
    if (n == 0) continue;
    Packed p(k, n, caps);
    if (component_span(p, M, gens, g).size() != p.count_all()) return false;
  }
  return true;
}

bool brute_minimal(const std::vector<HVec>& gens, const PresentedModule& M,
                   const OracleCaps& caps) {
  if (static_cast<int>(gens.size()) > caps.max_subset)
    throw PreconditionError("oracle subset sweep cap exceeded");
  if (!brute_generates(M, gens, caps))
    throw PreconditionError("the given set does not generate the module within the bound");
  const std::uint64_t full = (std::uint64_t{1} << gens.size()) - 1;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    std::vector<HVec> subset;
    for (size_t i = 0; i < gens.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) subset.push_back(gens[i]);
    if (brute_generates(M, subset, caps)) return false;
  }
  return true;
}

bool kernel_spans_agree(const GrFreeModule& src, const std::vector<HVec>& columns,
                        const PresentedModule& target, const std::vector<HVec>& engine_gens,
                        const OracleCaps& caps) {
  const CoeffRing& k = src.ring().coeff();
  PresentedModule src_mod = PresentedModule::free(src);
  for (const Degree& g : src.ring().window()) {
    int n = src.layout(g).total;
    if (n == 0) continue;
    Packed p(k, n, caps);
    std::vector<std::uint64_t> brute_rows;
    for (const RowVec& v : brute_kernel(src, columns, target, g, caps))
      brute_rows.push_back(p.pack(v));
    for (std::uint64_t r : pack_matrix(p, src.base_rels(g))) brute_rows.push_back(r);
    auto brute_span = closure(p, brute_rows);

    std::vector<std::uint64_t> engine_rows = gen_multiple_rows(p, src, engine_gens, g);
    for (std::uint64_t r : pack_matrix(p, src.base_rels(g))) engine_rows.push_back(r);
    auto engine_span = closure(p, engine_rows);
    if (brute_span != engine_span) return false;
  }
  return true;
}

InstanceGenerator::InstanceGenerator(std::uint64_t seed, InstanceCaps caps)
    : rng_(seed), caps_(caps) {}

Instance InstanceGenerator::next() {
  // Coefficients cycle over the three finite stock kinds.
  CoeffRing k = CoeffRing::prime_field(2);
  switch (rng_.next(3)) {
    case 0: k = CoeffRing::prime_field(2); break;
    case 1: k = CoeffRing::prime_field(3); break;
    default: k = CoeffRing::prime_power(2, 2); break;
  }

  RingPresentation pres;
  pres.coeff = k;
  int shape = static_cast<int>(rng_.next(6));
  bool word = caps_.allow_word_monoid && shape == 5;
  bool two_dim = caps_.allow_natvec2 && shape == 4;
  int ngens = 1 + static_cast<int>(rng_.next(static_cast<std::uint64_t>(caps_.max_generators)));
  if (word) {
    pres.monoid = Monoid::free_word("xy");
    pres.bound = Degree::word(rng_.next_bool() ? "yy" : "xyy");
    const char* names[] = {"a", "b"};
    for (int i = 0; i < ngens && i < 2; ++i)
      pres.generators.push_back({names[i], Degree::word(i == 0 ? "x" : "y")});
  } else if (two_dim) {
    pres.monoid = Monoid::nat_vec(2);
    pres.bound = Degree::nat({1 + (std::uint32_t)rng_.next(2), 1 + (std::uint32_t)rng_.next(2)});
    const char* names[] = {"x", "y"};
    for (int i = 0; i < ngens && i < 2; ++i)
      pres.generators.push_back(
          {names[i], i == 0 ? Degree::nat({1, 0}) : Degree::nat({0, 1})});
    pres.commutative = rng_.next_bool();
  } else {
    pres.monoid = Monoid::nat_vec(1);
    pres.bound = Degree::nat({2 + (std::uint32_t)rng_.next(3)});
    const char* names[] = {"x", "y", "z"};
    for (int i = 0; i < ngens && i < 3; ++i) {
      std::uint32_t d = rng_.next(4) == 0 ? 2 : 1;
      pres.generators.push_back({names[i], Degree::nat({d})});
    }
    pres.commutative = rng_.next_bool();
  }

  // Draft the ring once to know the word lists, then add random homogeneous
  // relations and rebuild.
  auto draft = std::make_shared<GradedRing>(GradedRing::build(pres));
  int nrels = static_cast<int>(rng_.next(static_cast<std::uint64_t>(caps_.max_relations) + 1));
  for (int r = 0; r < nrels; ++r) {
    std::vector<Degree> eligible;
    for (const Degree& g : draft->window())
      if (!g.is_neutral() && draft->word_count(g) > 0) eligible.push_back(g);
    if (eligible.empty()) break;
    const Degree& d = eligible[rng_.next(eligible.size())];
    RelPoly poly;
    poly.degree = d;
    bool nonzero = false;
    for (const GenWord& w : draft->words(d)) {
      Scalar c = k.nth(rng_.next(k.size()));
      if (k.is_zero(c)) continue;
      nonzero = true;
      poly.terms.push_back({c, w});
    }
    if (nonzero) pres.relations.push_back(std::move(poly));
  }
  auto ring = std::make_shared<GradedRing>(GradedRing::build(pres));

  // A module over the ring: a small free target with a few homogeneous
  // relation generators.
  std::vector<Degree> low;
  for (const Degree& g : ring->window())
    if (g.total() <= 2) low.push_back(g);
  int nbasis = 1 + static_cast<int>(rng_.next(static_cast<std::uint64_t>(caps_.max_module_basis)));
  std::vector<Degree> basis_degrees;
  for (int i = 0; i < nbasis; ++i) basis_degrees.push_back(low[rng_.next(low.size())]);
  GrFreeModule f0 = free_module(*ring, basis_degrees);

  std::vector<HVec> relgens;
  int nmrels = static_cast<int>(rng_.next(static_cast<std::uint64_t>(caps_.max_module_rels) + 1));
  for (int r = 0; r < nmrels; ++r) {
    std::vector<Degree> eligible;
    for (const Degree& g : ring->window())
      if (!g.is_neutral() && f0.layout(g).total > 0) eligible.push_back(g);
    if (eligible.empty()) break;
    const Degree& d = eligible[rng_.next(eligible.size())];
    RowVec v(f0.layout(d).total);
    bool nonzero = false;
    for (auto& s : v) {
      s = k.nth(rng_.next(k.size()));
      if (!k.is_zero(s)) nonzero = true;
    }
    if (nonzero) relgens.push_back(HVec{d, std::move(v)});
  }
  auto module =
      std::make_shared<PresentedModule>(PresentedModule::from_relgens(f0, relgens));

  Instance inst{ring, module, {}};

  std::vector<HVec> base = minimal_generators(*module);
  if (!base.empty()) {
    for (int t = 0; t < 3; ++t) {
      std::vector<HVec> set = base;
      int extras = 1 + static_cast<int>(rng_.next(2));
      for (int x = 0; x < extras; ++x) {
        const HVec& omega = base[rng_.next(base.size())];
        std::vector<Degree> mult;
        for (const Degree& q : ring->window()) {
          if (q.is_neutral() || ring->component_is_zero(q)) continue;
          Degree prod = ring->monoid().compose(q, omega.degree);
          if (ring->in_window(prod)) mult.push_back(q);
        }
        if (mult.empty()) continue;
        const Degree& q = mult[rng_.next(mult.size())];
        const auto& survivors = ring->surviving_words(q);
        int w = survivors[rng_.next(survivors.size())];
        Degree prod = ring->monoid().compose(q, omega.degree);
        HVec extra{prod, f0.left_mul_word(q, w, omega.degree, omega.coords)};
        if (!module->is_zero_elem(extra)) set.push_back(std::move(extra));
      }
      // Deterministic shuffle.
      for (size_t i = set.size(); i > 1; --i)
        std::swap(set[i - 1], set[rng_.next(i)]);
      inst.redundant_gensets.push_back(std::move(set));
    }
  }
  return inst;
}

Instance InstanceGenerator::next_nonzero() {
  for (int tries = 0; tries < 256; ++tries) {
    Instance inst = next();
    if (!inst.module->module_zero()) return inst;
  }
  throw InternalError("instance stream failed to produce a nonzero module");
}

}  // namespace grlocal::oracle
