#include "grlocal/gring.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "grlocal/rng.hpp"

namespace grlocal {

namespace {

bool word_deglex_less(const GenWord& a, const GenWord& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Degree GradedRing::word_degree(const GenWord& w) const {
  Degree d = pres_.monoid.neutral();
  for (auto g : w) d = pres_.monoid.compose(d, pres_.generators[g].degree);
  return d;
}

std::string GradedRing::show_word(const GenWord& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += '*';
    out += pres_.generators[w[i]].name;
  }
  return out;
}

std::string GradedRing::show_element(const HomogeneousElement& a) const {
  const CoeffRing& k = pres_.coeff;
  const auto& ws = words(a.degree);
  std::string out;
  for (size_t i = 0; i < ws.size(); ++i) {
    const Scalar& c = a.coords[i];
    if (k.is_zero(c)) continue;
    if (!out.empty()) out += " + ";
    if (k.equal(c, k.one()) && !ws[i].empty())
      out += show_word(ws[i]);
    else {
      out += k.show(c);
      if (!ws[i].empty()) out += "*" + show_word(ws[i]);
    }
  }
  return out.empty() ? "0" : out;
}

GradedRing GradedRing::build(RingPresentation p) {
  GradedRing R;
  R.pres_ = std::move(p);
  const RingPresentation& pres = R.pres_;
  const Monoid& mono = pres.monoid;
  const CoeffRing& k = pres.coeff;
  mono.check_degree(pres.bound);

  Degree e = mono.neutral();
  for (const auto& g : pres.generators) {
    mono.check_degree(g.degree);
    if (g.degree == e)
      throw PreconditionError("generator '" + g.name + "' has the neutral degree");
    if (!mono.in_window(g.degree, pres.bound))
      throw PreconditionError("generator '" + g.name + "' has degree beyond the bound");
  }

  if (pres.commutative) {
    // The flag is shorthand for the commutator relations; each must itself be
    // homogeneous, which forces the generator degrees to commute pairwise.
    for (size_t i = 0; i < pres.generators.size(); ++i)
      for (size_t j = i + 1; j < pres.generators.size(); ++j) {
        Degree dij = mono.compose(pres.generators[i].degree, pres.generators[j].degree);
        Degree dji = mono.compose(pres.generators[j].degree, pres.generators[i].degree);
        if (dij != dji)
          throw PreconditionError("inhomogeneous commutator: degrees " + mono.show(dij) +
                                  " and " + mono.show(dji));
        if (!mono.in_window(dij, pres.bound)) continue;
        RelPoly c;
        c.degree = dij;
        c.terms.push_back({k.one(), GenWord{(std::uint16_t)i, (std::uint16_t)j}});
        c.terms.push_back({k.neg(k.one()), GenWord{(std::uint16_t)j, (std::uint16_t)i}});
        R.pres_.relations.push_back(std::move(c));
      }
  }

  for (auto& rel : pres.relations) {
    if (rel.terms.empty()) throw PreconditionError("empty relation");
    for (auto& [c, w] : rel.terms) {
      (void)c;
      if (w.empty())
        throw PreconditionError("relation has a term of the neutral degree");
      for (auto gi : w)
        if (gi >= pres.generators.size())
          throw PreconditionError("relation references an unknown generator");
    }
  }

  // Recheck homogeneity against the generator degrees.
  for (const auto& rel : pres.relations) {
    Degree d0 = R.word_degree(rel.terms[0].second);
    for (const auto& [c, w] : rel.terms) {
      (void)c;
      Degree dw = R.word_degree(w);
      if (dw != d0)
        throw PreconditionError("inhomogeneous relation: degrees " + mono.show(d0) +
                                " and " + mono.show(dw));
    }
    if (d0 != rel.degree)
      throw PreconditionError("relation degree mismatch: declared " +
                              mono.show(rel.degree) + ", terms have " + mono.show(d0));
    if (!mono.in_window(d0, pres.bound))
      throw PreconditionError("relation degree " + mono.show(d0) + " is beyond the bound");
  }

  R.window_ = mono.enumerate_upto(pres.bound);
  for (size_t i = 0; i < R.window_.size(); ++i) R.index_[R.window_[i]] = (int)i;
  R.comps_.resize(R.window_.size());

  // Enumerate all generator words whose degree stays inside the window.
  // Right extension gives each word a unique parent, so there are no repeats.
  std::deque<std::pair<GenWord, Degree>> queue;
  queue.push_back({GenWord{}, e});
  while (!queue.empty()) {
    auto [w, d] = std::move(queue.front());
    queue.pop_front();
    R.comps_[R.index_.at(d)].word_list.push_back(w);
    for (std::uint16_t gi = 0; gi < pres.generators.size(); ++gi) {
      Degree dn = mono.compose(d, pres.generators[gi].degree);
      if (!mono.in_window(dn, pres.bound)) continue;
      GenWord wn = w;
      wn.push_back(gi);
      queue.push_back({std::move(wn), std::move(dn)});
    }
  }
  for (auto& c : R.comps_) {
    std::sort(c.word_list.begin(), c.word_list.end(), word_deglex_less);
    for (size_t i = 0; i < c.word_list.size(); ++i) c.word_index[c.word_list[i]] = (int)i;
  }

  // Relation span per degree: all two-sided word multiples u*r*v.
  for (size_t di = 0; di < R.window_.size(); ++di) {
    const Degree& g = R.window_[di];
    Component& comp = R.comps_[di];
    const int n = (int)comp.word_list.size();
    ScalarMatrix rows;
    rows.set_cols(n);
    for (const auto& rel : pres.relations) {
      for (const auto& [gl, rest] : mono.factorizations(g)) {
        auto gr = mono.right_factor(rest, rel.degree);
        if (!gr) continue;
        const auto& left_words = R.comps_[R.index_.at(gl)].word_list;
        const auto& right_words = R.comps_[R.index_.at(*gr)].word_list;
        for (const GenWord& u : left_words) {
          for (const GenWord& v : right_words) {
            RowVec row(n);
            for (const auto& [c, w] : rel.terms) {
              GenWord uwv;
              uwv.reserve(u.size() + w.size() + v.size());
              uwv.insert(uwv.end(), u.begin(), u.end());
              uwv.insert(uwv.end(), w.begin(), w.end());
              uwv.insert(uwv.end(), v.begin(), v.end());
              auto it = comp.word_index.find(uwv);
              if (it == comp.word_index.end())
                throw InternalError("relation instance left the word list");
              row[it->second] = k.add(row[it->second], c);
            }
            if (!row_is_zero(k, row)) rows.append_row(std::move(row));
          }
        }
      }
    }
    comp.rels = howell_form(k, rows);

    // Canonical form of each word and the surviving (basis) words.
    comp.canon = ScalarMatrix(n, n);
    for (int w = 0; w < n; ++w) {
      RowVec unit(n);
      unit[w] = k.one();
      comp.canon.row(w) = reduce_row_mod(k, comp.rels, std::move(unit));
    }
    std::vector<bool> dead(n, false);
    for (int r = 0; r < comp.rels.rows(); ++r) {
      for (int c = 0; c < n; ++c) {
        if (!k.is_zero(comp.rels.at(r, c))) {
          if (k.is_unit(comp.rels.at(r, c))) dead[c] = true;
          break;
        }
      }
    }
    for (int c = 0; c < n; ++c)
      if (!dead[c]) comp.survivors.push_back(c);
    comp.zero = comp.survivors.empty();
    if (!comp.zero) R.support_.push_back(g);
  }

  if (R.comps_[R.index_.at(e)].zero || R.comps_[R.index_.at(e)].word_list.size() != 1)
    throw InternalError("the degree-e component must be free of rank one");

  R.visibly_bounded_ = true;
  for (const Degree& g : R.support_)
    for (const auto& gen : pres.generators)
      if (!mono.in_window(mono.compose(g, gen.degree), pres.bound))
        R.visibly_bounded_ = false;

  for (const Degree& g : R.support_) {
    if (g == e) {
      if (!k.is_field()) R.mideal_support_.push_back(g);
    } else {
      R.mideal_support_.push_back(g);
    }
  }
  return R;
}

bool GradedRing::in_window(const Degree& g) const {
  return pres_.monoid.in_window(g, pres_.bound);
}

int GradedRing::degree_index(const Degree& g) const {
  auto it = index_.find(g);
  return it == index_.end() ? -1 : it->second;
}

const GradedRing::Component& GradedRing::comp(const Degree& g) const {
  int i = degree_index(g);
  if (i < 0)
    throw PreconditionError("degree " + pres_.monoid.show(g) + " is beyond the bound");
  return comps_[i];
}

int GradedRing::word_count(const Degree& g) const { return (int)comp(g).word_list.size(); }

const std::vector<GenWord>& GradedRing::words(const Degree& g) const {
  return comp(g).word_list;
}

int GradedRing::word_index(const Degree& g, const GenWord& w) const {
  const auto& m = comp(g).word_index;
  auto it = m.find(w);
  return it == m.end() ? -1 : it->second;
}

const ScalarMatrix& GradedRing::component_rels(const Degree& g) const { return comp(g).rels; }

bool GradedRing::component_is_zero(const Degree& g) const { return comp(g).zero; }

RowVec GradedRing::reduce(const Degree& g, RowVec ambient) const {
  const Component& c = comp(g);
  if (ambient.size() != c.word_list.size())
    throw PreconditionError("coordinate vector has the wrong length");
  return reduce_row_mod(pres_.coeff, c.rels, std::move(ambient));
}

const ScalarMatrix& GradedRing::word_canon(const Degree& g) const { return comp(g).canon; }

const std::vector<int>& GradedRing::surviving_words(const Degree& g) const {
  return comp(g).survivors;
}

HomogeneousElement GradedRing::element(const Degree& g, RowVec ambient) const {
  return HomogeneousElement{g, reduce(g, std::move(ambient))};
}

HomogeneousElement GradedRing::one() const {
  RowVec v(1);
  v[0] = pres_.coeff.one();
  return HomogeneousElement{pres_.monoid.neutral(), std::move(v)};
}

HomogeneousElement GradedRing::add(const HomogeneousElement& a,
                                   const HomogeneousElement& b) const {
  if (a.degree != b.degree)
    throw PreconditionError("sum of homogeneous elements of different degrees");
  return element(a.degree, row_add(pres_.coeff, a.coords, b.coords));
}

RowVec GradedRing::mul_word_vec(const Degree& ga, int word_i, const Degree& gb,
                                const RowVec& b) const {
  const CoeffRing& k = pres_.coeff;
  Degree gp = pres_.monoid.compose(ga, gb);
  const Component& pc = comp(gp);
  const Component& ac = comp(ga);
  const Component& bc = comp(gb);
  RowVec out(pc.word_list.size());
  const GenWord& u = ac.word_list[word_i];
  for (size_t j = 0; j < b.size(); ++j) {
    if (k.is_zero(b[j])) continue;
    GenWord uv = u;
    const GenWord& v = bc.word_list[j];
    uv.insert(uv.end(), v.begin(), v.end());
    auto it = pc.word_index.find(uv);
    if (it == pc.word_index.end()) throw InternalError("product word left the word list");
    row_axpy(k, out, b[j], pc.canon.row(it->second));
  }
  return out;
}

HomogeneousElement GradedRing::multiply(const HomogeneousElement& a,
                                        const HomogeneousElement& b) const {
  const CoeffRing& k = pres_.coeff;
  Degree gp = pres_.monoid.compose(a.degree, b.degree);
  if (!in_window(gp))
    throw TruncationError("product degree " + pres_.monoid.show(gp) +
                          " overflows the bound " + pres_.monoid.show(pres_.bound));
  RowVec out(word_count(gp));
  for (size_t i = 0; i < a.coords.size(); ++i) {
    if (k.is_zero(a.coords[i])) continue;
    RowVec part = mul_word_vec(a.degree, (int)i, b.degree, b.coords);
    row_axpy(k, out, a.coords[i], part);
  }
  return element(gp, std::move(out));
}

bool GradedRing::is_zero(const HomogeneousElement& a) const {
  return row_is_zero(pres_.coeff, a.coords);
}

ScalarMatrix GradedRing::mideal_rows(const Degree& g) const {
  const CoeffRing& k = pres_.coeff;
  const Component& c = comp(g);
  int n = (int)c.word_list.size();
  ScalarMatrix rows;
  rows.set_cols(n);
  if (g == pres_.monoid.neutral()) {
    if (!k.is_field()) {
      RowVec row(n);
      row[0] = k.from_int((long long)k.prime());
      rows.append_row(std::move(row));
    }
    return rows;
  }
  for (int i = 0; i < n; ++i) {
    RowVec row(n);
    row[i] = k.one();
    rows.append_row(std::move(row));
  }
  return rows;
}

GradedRing GradedRing::residue_ring() const {
  RingPresentation p;
  p.monoid = pres_.monoid;
  p.coeff = residue_coeff();
  p.bound = pres_.bound;
  return build(std::move(p));
}

RowVec GradedRing::project_to_residue(const Degree& g, const RowVec& ambient) const {
  if (g == pres_.monoid.neutral()) {
    if (ambient.size() != 1) throw PreconditionError("bad degree-e coordinate vector");
    return RowVec{pres_.coeff.residue(ambient[0])};
  }
  (void)comp(g);
  return RowVec{};
}

LocalityReport GradedRing::check_local_axioms(long samples, std::uint64_t seed) const {
  const CoeffRing& k = pres_.coeff;
  const Monoid& mono = pres_.monoid;
  LocalityReport rep;
  Degree e = mono.neutral();

  // Degree-e elements: exhaustive for small finite rings, sampled otherwise.
  std::vector<Scalar> elems;
  if (k.finite() && k.size() <= (1u << 12)) {
    for (std::uint64_t i = 0; i < k.size(); ++i) elems.push_back(k.nth(i));
  } else {
    Rng rng(seed);
    for (long i = 0; i < samples; ++i) {
      if (k.finite())
        elems.push_back(k.nth(rng.next(k.size())));
      else {
        long long num = rng.next_int(-20, 20);
        long long den = rng.next_int(1, 20);
        elems.push_back(k.from_rational(Rational(num, den)));
      }
    }
    elems.push_back(k.zero());
    elems.push_back(k.one());
  }

  ScalarMatrix me_span = howell_form(k, mideal_rows(e));
  for (const Scalar& s : elems) {
    ++rep.checked_units;
    HomogeneousElement a{e, RowVec{s}};
    bool in_ideal = in_row_span(k, me_span, a.coords);
    if (k.is_unit(s)) {
      if (in_ideal) {
        rep.failures.push_back("unit " + k.show(s) + " lies in the maximal graded ideal");
        continue;
      }
      HomogeneousElement b{e, RowVec{k.inverse(s)}};
      HomogeneousElement ab = multiply(a, b), ba = multiply(b, a);
      if (!(ab.degree == e) || !k.equal(ab.coords[0], k.one()) ||
          !k.equal(ba.coords[0], k.one()))
        rep.failures.push_back("element " + k.show(s) + " lacks a two-sided inverse");
    } else {
      if (!in_ideal)
        rep.failures.push_back("non-unit " + k.show(s) +
                               " escapes the maximal graded ideal");
    }
  }

  // Left invertible implies right invertible, checked on degree-e pairs.
  if (k.finite() && k.size() <= 64) {
    for (std::uint64_t i = 0; i < k.size(); ++i)
      for (std::uint64_t j = 0; j < k.size(); ++j) {
        Scalar a = k.nth(i), b = k.nth(j);
        if (!k.equal(k.mul(b, a), k.one())) continue;
        bool right = false;
        for (std::uint64_t c = 0; c < k.size() && !right; ++c)
          if (k.equal(k.mul(a, k.nth(c)), k.one())) right = true;
        if (!right)
          rep.failures.push_back("left invertible " + k.show(a) +
                                 " is not right invertible");
      }
  }

  // The ideal absorbs products on both sides inside the window.
  for (const Degree& g1 : window_) {
    for (const Degree& g2 : window_) {
      Degree gp = mono.compose(g1, g2);
      if (!in_window(gp)) continue;
      ScalarMatrix target = howell_form(k, stack(mideal_rows(gp), component_rels(gp)));
      const ScalarMatrix m2 = mideal_rows(g2);
      for (int i = 0; i < word_count(g1); ++i) {
        for (int r = 0; r < m2.rows(); ++r) {
          ++rep.checked_products;
          RowVec prod = mul_word_vec(g1, i, g2, m2.row(r));
          if (!in_row_span(k, target, prod))
            rep.failures.push_back("A*M product escapes the ideal in degree " +
                                   mono.show(gp));
        }
      }
      const ScalarMatrix m1 = mideal_rows(g1);
      for (int r = 0; r < m1.rows(); ++r) {
        HomogeneousElement a{g1, reduce(g1, m1.row(r))};
        for (int j = 0; j < word_count(g2); ++j) {
          ++rep.checked_products;
          RowVec unit(word_count(g2));
          unit[j] = k.one();
          HomogeneousElement b{g2, reduce(g2, std::move(unit))};
          HomogeneousElement prod = multiply(a, b);
          if (!in_row_span(k, target, prod.coords))
            rep.failures.push_back("M*A product escapes the ideal in degree " +
                                   mono.show(gp));
        }
      }
    }
  }

  // 1 is outside the ideal, and the ideal meets A_e exactly in m.
  if (in_row_span(k, me_span, one().coords))
    rep.failures.push_back("1 lies in the maximal graded ideal");
  if (k.finite() && k.size() <= (1u << 12)) {
    for (std::uint64_t i = 0; i < k.size(); ++i) {
      Scalar s = k.nth(i);
      if (in_row_span(k, me_span, RowVec{s}) == k.is_unit(s))
        rep.failures.push_back("ideal/A_e intersection differs from m at " + k.show(s));
    }
  }
  return rep;
}

}  // namespace grlocal
