#ifndef GRLOCAL_COEFF_HPP
#define GRLOCAL_COEFF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "grlocal/errors.hpp"

namespace grlocal {

using Rational = boost::multiprecision::cpp_rational;

enum class CoeffKind { Rationals, PrimeField, PrimePowerRing };

/// Element payload. Semantics (which field is live, canonical form) are owned
/// by CoeffRing; a default-constructed Scalar is zero in every ring.
class Scalar {
public:
  Scalar() = default;
  const Rational& rat() const { return q_; }
  std::uint64_t rep() const { return u_; }

private:
  friend class CoeffRing;
  Rational q_ = 0;         // Rationals payload
  std::uint64_t u_ = 0;    // canonical representative 0..p^m-1
};

using RowVec = std::vector<Scalar>;

/// The classical local coefficient ring A_e: Q, F_p, or Z/p^m. All element
/// operations are pure and keep scalars canonical.
class CoeffRing {
public:
  static CoeffRing rationals();
  static CoeffRing prime_field(std::uint64_t p);
  static CoeffRing prime_power(std::uint64_t p, unsigned m);

  CoeffKind kind() const { return kind_; }
  std::uint64_t prime() const { return p_; }
  unsigned exponent() const { return m_; }
  std::uint64_t modulus() const { return mod_; }
  bool finite() const { return kind_ != CoeffKind::Rationals; }
  bool is_field() const { return kind_ != CoeffKind::PrimePowerRing; }
  /// Number of elements (finite kinds only).
  std::uint64_t size() const;
  /// i-th element under the canonical enumeration 0..size()-1.
  Scalar nth(std::uint64_t i) const;

  Scalar zero() const { return Scalar(); }
  Scalar one() const { return from_int(1); }
  Scalar from_int(long long v) const;
  Scalar from_rational(const Rational& q) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;

  bool is_zero(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;

  /// True iff a lies outside the maximal ideal.
  bool is_unit(const Scalar& a) const;
  /// Two-sided inverse of a unit; PreconditionError otherwise.
  Scalar inverse(const Scalar& a) const;
  /// p-adic valuation capped at exponent(); fields report 0 for nonzero.
  unsigned valuation(const Scalar& a) const;

  /// The residue division ring D_e = A_e / m.
  CoeffRing residue_ring() const;
  /// Image of a in residue_ring(): identity for fields, mod-p for Z/p^m.
  Scalar residue(const Scalar& a) const;

  std::string show(const Scalar& a) const;

  friend bool operator==(const CoeffRing&, const CoeffRing&) = default;

private:
  CoeffKind kind_ = CoeffKind::Rationals;
  std::uint64_t p_ = 0;
  unsigned m_ = 1;
  std::uint64_t mod_ = 0;  // p^m for modular kinds
};

/// Dense row-major matrix of scalars.
class ScalarMatrix {
public:
  ScalarMatrix() = default;
  ScalarMatrix(int rows, int cols) : cols_(cols), rows_(rows, RowVec(cols)) {}

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return rows_[r][c]; }
  const Scalar& at(int r, int c) const { return rows_[r][c]; }
  RowVec& row(int r) { return rows_[r]; }
  const RowVec& row(int r) const { return rows_[r]; }
  void append_row(RowVec row);
  void set_cols(int c);

  static ScalarMatrix identity(const CoeffRing& ring, int n);

private:
  int cols_ = 0;
  std::vector<RowVec> rows_;
};

// Row/matrix arithmetic.
RowVec row_add(const CoeffRing& ring, const RowVec& a, const RowVec& b);
RowVec row_scale(const CoeffRing& ring, const Scalar& c, const RowVec& a);
void row_axpy(const CoeffRing& ring, RowVec& dst, const Scalar& c, const RowVec& src);
bool row_is_zero(const CoeffRing& ring, const RowVec& a);
RowVec row_times_matrix(const CoeffRing& ring, const RowVec& v, const ScalarMatrix& M);
ScalarMatrix mat_mul(const CoeffRing& ring, const ScalarMatrix& A, const ScalarMatrix& B);
ScalarMatrix stack(const ScalarMatrix& top, const ScalarMatrix& bottom);
bool mat_equal(const CoeffRing& ring, const ScalarMatrix& A, const ScalarMatrix& B);

/// Canonical row-span form: reduced row echelon form over fields, Howell
/// normal form over Z/p^m. Equal row spans yield identical output.
ScalarMatrix howell_form(const CoeffRing& ring, const ScalarMatrix& M);

/// Canonical generating set of the left kernel {v : v*M == 0}.
ScalarMatrix left_kernel(const CoeffRing& ring, const ScalarMatrix& M);

/// Some x with x*M == b, if solvable.
std::optional<RowVec> solve_left(const CoeffRing& ring, const ScalarMatrix& M,
                                 const RowVec& b);

/// Canonical residue of v modulo the row span of H (H must be canonical).
RowVec reduce_row_mod(const CoeffRing& ring, const ScalarMatrix& H, RowVec v);

/// Membership of v in the row span of H (H must be canonical).
bool in_row_span(const CoeffRing& ring, const ScalarMatrix& H, const RowVec& v);

}  // namespace grlocal

#endif
