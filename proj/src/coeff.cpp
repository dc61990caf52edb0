#include "grlocal/coeff.hpp"

#include <algorithm>
#include <sstream>

namespace grlocal {

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// ax + my = gcd(a, m); returns x mod m for unit a.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(m), newr = static_cast<std::int64_t>(a % m);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw PreconditionError("inverse of a non-unit");
  if (t < 0) t += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

CoeffRing CoeffRing::rationals() {
  CoeffRing r;
  r.kind_ = CoeffKind::Rationals;
  return r;
}

CoeffRing CoeffRing::prime_field(std::uint64_t p) {
  if (!is_prime_u64(p)) throw PreconditionError("prime field modulus must be prime");
  if (p > (1ull << 31)) throw PreconditionError("prime field modulus too large");
  CoeffRing r;
  r.kind_ = CoeffKind::PrimeField;
  r.p_ = p;
  r.m_ = 1;
  r.mod_ = p;
  return r;
}

CoeffRing CoeffRing::prime_power(std::uint64_t p, unsigned m) {
  if (!is_prime_u64(p)) throw PreconditionError("prime power base must be prime");
  if (m < 2) throw PreconditionError("prime power exponent must be >= 2");
  std::uint64_t mod = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (mod > (1ull << 31) / p) throw PreconditionError("prime power modulus too large");
    mod *= p;
  }
  CoeffRing r;
  r.kind_ = CoeffKind::PrimePowerRing;
  r.p_ = p;
  r.m_ = m;
  r.mod_ = mod;
  return r;
}

std::uint64_t CoeffRing::size() const {
  if (!finite()) throw PreconditionError("the rationals are not finite");
  return mod_;
}

Scalar CoeffRing::nth(std::uint64_t i) const {
  if (!finite()) throw PreconditionError("cannot enumerate the rationals");
  if (i >= mod_) throw PreconditionError("element index out of range");
  Scalar s;
  s.u_ = i;
  return s;
}

Scalar CoeffRing::from_int(long long v) const {
  Scalar s;
  if (kind_ == CoeffKind::Rationals) {
    s.q_ = v;
    return s;
  }
  long long r = v % static_cast<long long>(mod_);
  if (r < 0) r += static_cast<long long>(mod_);
  s.u_ = static_cast<std::uint64_t>(r);
  return s;
}

Scalar CoeffRing::from_rational(const Rational& q) const {
  if (kind_ != CoeffKind::Rationals)
    throw PreconditionError("fractional literals are only valid over Q");
  Scalar s;
  s.q_ = q;
  return s;
}

Scalar CoeffRing::add(const Scalar& a, const Scalar& b) const {
  Scalar s;
  if (kind_ == CoeffKind::Rationals) {
    s.q_ = a.q_ + b.q_;
    return s;
  }
  s.u_ = a.u_ + b.u_;
  if (s.u_ >= mod_) s.u_ -= mod_;
  return s;
}

Scalar CoeffRing::sub(const Scalar& a, const Scalar& b) const {
  Scalar s;
  if (kind_ == CoeffKind::Rationals) {
    s.q_ = a.q_ - b.q_;
    return s;
  }
  s.u_ = a.u_ >= b.u_ ? a.u_ - b.u_ : a.u_ + mod_ - b.u_;
  return s;
}

Scalar CoeffRing::mul(const Scalar& a, const Scalar& b) const {
  Scalar s;
  if (kind_ == CoeffKind::Rationals) {
    s.q_ = a.q_ * b.q_;
    return s;
  }
  s.u_ = (a.u_ * b.u_) % mod_;
  return s;
}

Scalar CoeffRing::neg(const Scalar& a) const {
  Scalar s;
  if (kind_ == CoeffKind::Rationals) {
    s.q_ = -a.q_;
    return s;
  }
  s.u_ = a.u_ == 0 ? 0 : mod_ - a.u_;
  return s;
}

bool CoeffRing::is_zero(const Scalar& a) const {
  return kind_ == CoeffKind::Rationals ? a.q_ == 0 : a.u_ == 0;
}

bool CoeffRing::equal(const Scalar& a, const Scalar& b) const {
  return kind_ == CoeffKind::Rationals ? a.q_ == b.q_ : a.u_ == b.u_;
}

bool CoeffRing::is_unit(const Scalar& a) const {
  switch (kind_) {
    case CoeffKind::Rationals:
    case CoeffKind::PrimeField:
      return !is_zero(a);
    case CoeffKind::PrimePowerRing:
      return a.u_ % p_ != 0;
  }
  return false;
}

Scalar CoeffRing::inverse(const Scalar& a) const {
  if (!is_unit(a)) throw PreconditionError("inverse of a non-unit");
  Scalar s;
  if (kind_ == CoeffKind::Rationals) {
    s.q_ = 1 / a.q_;
    return s;
  }
  s.u_ = mod_inverse(a.u_, mod_);
  return s;
}

unsigned CoeffRing::valuation(const Scalar& a) const {
  if (is_zero(a)) return kind_ == CoeffKind::PrimePowerRing ? m_ : 1;
  if (kind_ != CoeffKind::PrimePowerRing) return 0;
  unsigned v = 0;
  std::uint64_t x = a.u_;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return v;
}

CoeffRing CoeffRing::residue_ring() const {
  if (kind_ == CoeffKind::PrimePowerRing) return prime_field(p_);
  return *this;
}

Scalar CoeffRing::residue(const Scalar& a) const {
  if (kind_ != CoeffKind::PrimePowerRing) return a;
  Scalar s;
  s.u_ = a.u_ % p_;
  return s;
}

std::string CoeffRing::show(const Scalar& a) const {
  std::ostringstream os;
  if (kind_ == CoeffKind::Rationals)
    os << a.q_;
  else
    os << a.u_;
  return os.str();
}

void ScalarMatrix::append_row(RowVec row) {
  if (rows_.empty() && cols_ == 0) cols_ = static_cast<int>(row.size());
  if (static_cast<int>(row.size()) != cols_)
    throw PreconditionError("appended row has wrong length");
  rows_.push_back(std::move(row));
}

void ScalarMatrix::set_cols(int c) {
  if (!rows_.empty()) throw PreconditionError("cannot resize a non-empty matrix");
  cols_ = c;
}

ScalarMatrix ScalarMatrix::identity(const CoeffRing& ring, int n) {
  ScalarMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

RowVec row_add(const CoeffRing& ring, const RowVec& a, const RowVec& b) {
  if (a.size() != b.size()) throw PreconditionError("row length mismatch");
  RowVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = ring.add(a[i], b[i]);
  return out;
}

RowVec row_scale(const CoeffRing& ring, const Scalar& c, const RowVec& a) {
  RowVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = ring.mul(c, a[i]);
  return out;
}

void row_axpy(const CoeffRing& ring, RowVec& dst, const Scalar& c, const RowVec& src) {
  if (dst.size() != src.size()) throw PreconditionError("row length mismatch");
  for (size_t i = 0; i < dst.size(); ++i) dst[i] = ring.add(dst[i], ring.mul(c, src[i]));
}

bool row_is_zero(const CoeffRing& ring, const RowVec& a) {
  for (const auto& x : a)
    if (!ring.is_zero(x)) return false;
  return true;
}

RowVec row_times_matrix(const CoeffRing& ring, const RowVec& v, const ScalarMatrix& M) {
  if (static_cast<int>(v.size()) != M.rows())
    throw PreconditionError("row/matrix dimension mismatch");
  RowVec out(M.cols());
  for (int r = 0; r < M.rows(); ++r) {
    if (ring.is_zero(v[r])) continue;
    for (int c = 0; c < M.cols(); ++c)
      out[c] = ring.add(out[c], ring.mul(v[r], M.at(r, c)));
  }
  return out;
}

ScalarMatrix mat_mul(const CoeffRing& ring, const ScalarMatrix& A, const ScalarMatrix& B) {
  if (A.cols() != B.rows()) throw PreconditionError("matrix dimension mismatch");
  ScalarMatrix out(A.rows(), B.cols());
  for (int r = 0; r < A.rows(); ++r) out.row(r) = row_times_matrix(ring, A.row(r), B);
  return out;
}

ScalarMatrix stack(const ScalarMatrix& top, const ScalarMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw PreconditionError("stacked widths differ");
  ScalarMatrix out = top;
  for (int r = 0; r < bottom.rows(); ++r) out.append_row(bottom.row(r));
  return out;
}

bool mat_equal(const CoeffRing& ring, const ScalarMatrix& A, const ScalarMatrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
  for (int r = 0; r < A.rows(); ++r)
    for (int c = 0; c < A.cols(); ++c)
      if (!ring.equal(A.at(r, c), B.at(r, c))) return false;
  return true;
}

namespace {

std::uint64_t pow_u64(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

// Coefficient c with c * pivot giving the canonical reduction step. For unit
// pivots (normalized to 1) this zeroes the entry; for pivot p^v it brings the
// representative into [0, p^v).
Scalar quot_by_pivot(const CoeffRing& ring, const Scalar& a, unsigned pivot_val) {
  if (ring.kind() != CoeffKind::PrimePowerRing || pivot_val == 0) return a;
  return ring.from_int(static_cast<long long>(a.rep() / pow_u64(ring.prime(), pivot_val)));
}

struct WorkRow {
  RowVec r;
  RowVec t;
};

struct HowellData {
  ScalarMatrix H;
  std::vector<RowVec> transform;   // transform[i] * M == H.row(i)
  std::vector<RowVec> kernel_raw;  // generators of the left kernel of M
  std::vector<int> pivot_col;
  std::vector<unsigned> pivot_val;
};

HowellData howell_core(const CoeffRing& ring, const ScalarMatrix& M, bool with_transform) {
  const int n = M.cols();
  const int mrows = M.rows();
  std::vector<WorkRow> work;
  work.reserve(mrows);
  for (int i = 0; i < mrows; ++i) {
    WorkRow w;
    w.r = M.row(i);
    if (with_transform) {
      w.t.assign(mrows, ring.zero());
      w.t[i] = ring.one();
    }
    work.push_back(std::move(w));
  }

  std::vector<WorkRow> placed;
  HowellData out;

  for (int j = 0; j < n; ++j) {
    // All surviving work rows are zero left of column j.
    int best = -1;
    unsigned best_val = 0;
    for (size_t i = 0; i < work.size(); ++i) {
      if (ring.is_zero(work[i].r[j])) continue;
      unsigned v = ring.valuation(work[i].r[j]);
      if (best < 0 || v < best_val) {
        best = static_cast<int>(i);
        best_val = v;
      }
    }
    if (best < 0) continue;

    WorkRow pivot = std::move(work[best]);
    work.erase(work.begin() + best);

    // Normalize the leading entry to p^v (1 over a field).
    Scalar unit_part = pivot.r[j];
    if (ring.kind() == CoeffKind::PrimePowerRing && best_val > 0)
      unit_part = ring.from_int(
          static_cast<long long>(pivot.r[j].rep() / pow_u64(ring.prime(), best_val)));
    Scalar scale = ring.inverse(unit_part);
    pivot.r = row_scale(ring, scale, pivot.r);
    if (with_transform) pivot.t = row_scale(ring, scale, pivot.t);

    for (auto& w : work) {
      if (ring.is_zero(w.r[j])) continue;
      Scalar c = ring.neg(quot_by_pivot(ring, w.r[j], best_val));
      row_axpy(ring, w.r, c, pivot.r);
      if (with_transform) row_axpy(ring, w.t, c, pivot.t);
    }

    if (ring.kind() == CoeffKind::PrimePowerRing && best_val > 0) {
      // The annihilator multiple keeps the span property and feeds the kernel.
      Scalar ann = ring.from_int(
          static_cast<long long>(pow_u64(ring.prime(), ring.exponent() - best_val)));
      WorkRow extra;
      extra.r = row_scale(ring, ann, pivot.r);
      if (with_transform) extra.t = row_scale(ring, ann, pivot.t);
      work.push_back(std::move(extra));
    }

    out.pivot_col.push_back(j);
    out.pivot_val.push_back(best_val);
    placed.push_back(std::move(pivot));
  }

  // Reduce entries above each pivot, leftmost pivot first.
  for (size_t idx = 0; idx < placed.size(); ++idx) {
    int j = out.pivot_col[idx];
    unsigned v = out.pivot_val[idx];
    for (size_t k = 0; k < idx; ++k) {
      if (ring.is_zero(placed[k].r[j])) continue;
      Scalar c = ring.neg(quot_by_pivot(ring, placed[k].r[j], v));
      row_axpy(ring, placed[k].r, c, placed[idx].r);
      if (with_transform) row_axpy(ring, placed[k].t, c, placed[idx].t);
    }
  }

  out.H.set_cols(n);
  for (auto& pr : placed) {
    out.H.append_row(std::move(pr.r));
    if (with_transform) out.transform.push_back(std::move(pr.t));
  }
  if (with_transform) {
    for (auto& w : work) {
      if (!row_is_zero(ring, w.r))
        throw InternalError("howell elimination left a nonzero unplaced row");
      out.kernel_raw.push_back(std::move(w.t));
    }
  }
  return out;
}

}  // namespace

ScalarMatrix howell_form(const CoeffRing& ring, const ScalarMatrix& M) {
  return howell_core(ring, M, false).H;
}

ScalarMatrix left_kernel(const CoeffRing& ring, const ScalarMatrix& M) {
  HowellData data = howell_core(ring, M, true);
  ScalarMatrix raw;
  raw.set_cols(M.rows());
  for (auto& k : data.kernel_raw) raw.append_row(std::move(k));
  return howell_form(ring, raw);
}

std::optional<RowVec> solve_left(const CoeffRing& ring, const ScalarMatrix& M,
                                 const RowVec& b) {
  if (static_cast<int>(b.size()) != M.cols())
    throw PreconditionError("solve: vector length does not match matrix width");
  HowellData data = howell_core(ring, M, true);
  RowVec residual = b;
  RowVec x(M.rows(), ring.zero());
  for (int r = 0; r < data.H.rows(); ++r) {
    int j = data.pivot_col[r];
    if (ring.is_zero(residual[j])) continue;
    if (ring.kind() == CoeffKind::PrimePowerRing &&
        ring.valuation(residual[j]) < data.pivot_val[r])
      return std::nullopt;
    Scalar c = quot_by_pivot(ring, residual[j], data.pivot_val[r]);
    row_axpy(ring, residual, ring.neg(c), data.H.row(r));
    row_axpy(ring, x, c, data.transform[r]);
  }
  if (!row_is_zero(ring, residual)) return std::nullopt;
  return x;
}

RowVec reduce_row_mod(const CoeffRing& ring, const ScalarMatrix& H, RowVec v) {
  if (H.rows() == 0) return v;
  if (static_cast<int>(v.size()) != H.cols())
    throw PreconditionError("reduce: vector length does not match matrix width");
  for (int r = 0; r < H.rows(); ++r) {
    int j = -1;
    for (int c = 0; c < H.cols(); ++c) {
      if (!ring.is_zero(H.at(r, c))) {
        j = c;
        break;
      }
    }
    if (j < 0) continue;
    if (ring.is_zero(v[j])) continue;
    // Brings the entry into [0, p^pv); zeroes it when the pivot is a unit.
    Scalar c = quot_by_pivot(ring, v[j], ring.valuation(H.at(r, j)));
    row_axpy(ring, v, ring.neg(c), H.row(r));
  }
  return v;
}

bool in_row_span(const CoeffRing& ring, const ScalarMatrix& H, const RowVec& v) {
  return row_is_zero(ring, reduce_row_mod(ring, H, v));
}

}  // namespace grlocal
