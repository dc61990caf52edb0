#ifndef GRLOCAL_GMODULE_HPP
#define GRLOCAL_GMODULE_HPP

#include <optional>
#include <string>
#include <vector>

#include "grlocal/gring.hpp"

namespace grlocal {

/// Homogeneous element of a graded module, as an ambient coordinate vector of
/// its degree. Which module the coordinates refer to is supplied by context.
struct HVec {
  Degree degree;
  RowVec coords;
};

/// Gr-free module on a homogeneous basis. Degreewise, coordinates are pairs
/// (basis element, ring word of the complementary degree); the block layout
/// and the inherited ring relations are precomputed for the whole window.
class GrFreeModule {
public:
  struct Block {
    int basis;        // index into basis()
    Degree coeff_deg; // ring degree multiplying this basis element
    int offset;
    int width;        // ring word count in coeff_deg
  };
  struct Layout {
    int total = 0;
    std::vector<Block> blocks;
    std::vector<int> block_of_basis;  // -1 when the basis element is absent
  };

  GrFreeModule(const GradedRing& ring,
               std::vector<std::pair<std::string, Degree>> basis);

  const GradedRing& ring() const { return *ring_; }
  const std::vector<std::pair<std::string, Degree>>& basis() const { return basis_; }
  int rank() const { return static_cast<int>(basis_.size()); }

  const Layout& layout(const Degree& g) const;
  const ScalarMatrix& base_rels(const Degree& g) const;
  /// Number of surviving coordinates (over a field, the dimension of F_g).
  int component_dim(const Degree& g) const;
  RowVec reduce(const Degree& g, RowVec v) const;
  bool is_zero(const HVec& v) const;

  /// Left product of ring basis word `word_i` (degree gw) with an ambient
  /// vector of degree src, landing in degree gw*src.
  RowVec left_mul_word(const Degree& gw, int word_i, const Degree& src,
                       const RowVec& v) const;

  /// Basis vector e_i as a homogeneous element.
  HVec unit(int i) const;
  std::string show(const HVec& v) const;

private:
  const GradedRing* ring_;
  std::vector<std::pair<std::string, Degree>> basis_;
  std::vector<Layout> layouts_;       // indexed like ring().window()
  std::vector<ScalarMatrix> rels_;    // block-diagonal ring relations
};

/// Degree-tagged matrix between gr-free modules, stored by columns: the image
/// of source basis element j is a homogeneous element of the target of the
/// same degree.
class GradedMorphism {
public:
  GradedMorphism(GrFreeModule source, GrFreeModule target, std::vector<HVec> columns);

  const GrFreeModule& source() const { return source_; }
  const GrFreeModule& target() const { return target_; }
  const std::vector<HVec>& columns() const { return columns_; }

  /// Coefficient matrix of the degree-g piece: rows index source ambient
  /// coordinates, columns target ambient coordinates.
  ScalarMatrix degree_matrix(const Degree& g) const;
  HVec apply(const HVec& v) const;

  /// Entry (i, j) as a homogeneous ring element, when the degrees divide.
  std::optional<HomogeneousElement> entry(int i, int j) const;
  /// True when every nonzero entry lies in the maximal graded ideal.
  bool entries_in_mideal() const;

private:
  GrFreeModule source_, target_;
  std::vector<HVec> columns_;
};

/// Finitely presented graded module M = coker(phi: F1 -> F0), with canonical
/// degreewise relation spans cached over the window. A gr-free module is the
/// special case with no relation generators.
class PresentedModule {
public:
  static PresentedModule from_morphism(GradedMorphism phi);
  static PresentedModule from_relgens(GrFreeModule f0, std::vector<HVec> relgens);
  static PresentedModule free(GrFreeModule f0);

  const GradedRing& ring() const { return f0_.ring(); }
  const GrFreeModule& ambient_free() const { return f0_; }
  const std::vector<HVec>& relgens() const { return relgens_; }
  const GradedMorphism* presentation() const { return phi_ ? &*phi_ : nullptr; }

  /// Canonical relation span of the degree-g component (ring relations plus
  /// the presentation image).
  const ScalarMatrix& rels(const Degree& g) const;
  RowVec reduce(const Degree& g, RowVec v) const;
  bool is_zero_elem(const HVec& v) const;
  bool component_zero(const Degree& g) const;
  bool module_zero() const;

  struct ComponentView {
    int ambient = 0;
    const ScalarMatrix* rels = nullptr;
    int free_rank = 0;                              // columns without pivot
    std::vector<std::pair<int, unsigned>> torsion;  // (column, pivot valuation)
  };
  ComponentView component(const Degree& g) const;

private:
  explicit PresentedModule(GrFreeModule f0) : f0_(std::move(f0)) {}
  void build_rels();

  GrFreeModule f0_;
  std::vector<HVec> relgens_;
  std::optional<GradedMorphism> phi_;
  std::vector<ScalarMatrix> rels_;  // indexed like ring().window()
};

GrFreeModule free_module(const GradedRing& ring, const std::vector<Degree>& degrees);

enum class SpanKind { Full, MIdeal };

/// Degree-g rows of the span of homogeneous generators inside the ambient
/// free module (ring-relation rows not included). MIdeal restricts the
/// multipliers to the maximal graded ideal.
ScalarMatrix span_rows(const GrFreeModule& F, const std::vector<HVec>& gens,
                       const Degree& g, SpanKind kind);

/// Degree-g matrix of the morphism sending source basis j to columns[j], a
/// homogeneous element of the target module's ambient coordinates.
ScalarMatrix morphism_matrix(const GrFreeModule& src, const std::vector<HVec>& columns,
                             const GrFreeModule& target_ambient, const Degree& g);

/// Homogeneous generators of Ker(phi), complete in all window degrees: a
/// degree sweep keeps each new kernel element not generated so far.
std::vector<HVec> kernel_generators(const GrFreeModule& src,
                                    const std::vector<HVec>& columns,
                                    const PresentedModule& target);
std::vector<HVec> kernel_upto(const GradedMorphism& phi);

/// Canonical minimal homogeneous generating set of M.
std::vector<HVec> minimal_generators(const PresentedModule& M);

/// Canonical minimal homogeneous generating set of the submodule of `host`
/// spanned by gens.
std::vector<HVec> minimal_generators_of_span(const PresentedModule& host,
                                             const std::vector<HVec>& gens);

/// Graded dimensions of (M / mideal M) over the residue division ring.
std::vector<std::pair<Degree, int>> residue_space_dims(const PresentedModule& M);

bool generates_within_bound(const PresentedModule& M, const std::vector<HVec>& gens);

enum class MinimalityMode { Residue, ExhaustiveSubsets };

/// Minimality of a generating set: residues independent over D, or (finite
/// kinds, small sets) literal proper-subset testing.
bool is_minimal(const std::vector<HVec>& gens, const PresentedModule& M,
                MinimalityMode mode = MinimalityMode::Residue);

/// Greedy residue filtering in input order; the result is a minimal
/// generating subset.
std::vector<HVec> minimize(const std::vector<HVec>& gens, const PresentedModule& M);

struct ExchangeResult {
  std::vector<HVec> generators;  // T1 with one element replaced by eta
  int replaced_index = -1;
};

/// One substitution step: writes eta = T2[eta_index] over T1, locates a unit
/// coefficient on an element of T1 outside T2, and swaps it for eta.
ExchangeResult exchange_step(const std::vector<HVec>& t1, const std::vector<HVec>& t2,
                             int eta_index, const PresentedModule& M);

struct NakayamaReport {
  bool is_zero = false;
  std::optional<Degree> least_nonzero;
  bool witness_ok = true;  // mideal*M misses the least nonzero component
};

NakayamaReport nakayama_is_zero(const PresentedModule& M);

bool hvec_equal(const CoeffRing& k, const HVec& a, const HVec& b);

}  // namespace grlocal

#endif
