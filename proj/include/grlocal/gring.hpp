#ifndef GRLOCAL_GRING_HPP
#define GRLOCAL_GRING_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "grlocal/coeff.hpp"
#include "grlocal/monoid.hpp"

namespace grlocal {

/// A product of generators, by index; the empty word is the ring identity.
using GenWord = std::vector<std::uint16_t>;

struct GenDecl {
  std::string name;
  Degree degree;
};

/// Homogeneous scalar combination of generator words of one common degree.
struct RelPoly {
  Degree degree;
  std::vector<std::pair<Scalar, GenWord>> terms;
};

struct RingPresentation {
  Monoid monoid = Monoid::nat_vec(1);
  CoeffRing coeff = CoeffRing::rationals();
  Degree bound;
  bool commutative = false;
  std::vector<GenDecl> generators;
  std::vector<RelPoly> relations;
};

struct HomogeneousElement {
  Degree degree;
  RowVec coords;  // over the word list of the component, canonically reduced
};

/// Per-degree counterexample report from the local-ring axiom checks.
struct LocalityReport {
  long checked_units = 0;
  long checked_products = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// The truncated graded ring: for every degree in the window of the bound it
/// holds the word list, the canonical relation span, and multiplication data.
/// Immutable after build; modules keep a pointer, so rings must outlive them.
class GradedRing {
public:
  static GradedRing build(RingPresentation p);

  const RingPresentation& presentation() const { return pres_; }
  const Monoid& monoid() const { return pres_.monoid; }
  const CoeffRing& coeff() const { return pres_.coeff; }
  const Degree& bound() const { return pres_.bound; }
  bool in_window(const Degree& g) const;

  const std::vector<Degree>& window() const { return window_; }
  /// Index of g in window(); -1 when outside.
  int degree_index(const Degree& g) const;

  // Component access (degree must be inside the window).
  int word_count(const Degree& g) const;
  const std::vector<GenWord>& words(const Degree& g) const;
  /// Word index within the component of its degree; -1 when absent.
  int word_index(const Degree& g, const GenWord& w) const;
  const ScalarMatrix& component_rels(const Degree& g) const;
  bool component_is_zero(const Degree& g) const;
  /// Canonical form of an ambient coefficient vector.
  RowVec reduce(const Degree& g, RowVec ambient) const;
  /// Canonical forms of all single words of degree g (row w = image of word w).
  const ScalarMatrix& word_canon(const Degree& g) const;
  /// Word indices whose canonical form is the word itself (the component basis).
  const std::vector<int>& surviving_words(const Degree& g) const;

  Degree word_degree(const GenWord& w) const;
  std::string show_word(const GenWord& w) const;
  std::string show_element(const HomogeneousElement& a) const;

  // Element arithmetic.
  HomogeneousElement element(const Degree& g, RowVec ambient) const;
  HomogeneousElement one() const;
  HomogeneousElement add(const HomogeneousElement& a, const HomogeneousElement& b) const;
  /// Homogeneous product; TruncationError if the product degree leaves the window.
  HomogeneousElement multiply(const HomogeneousElement& a, const HomogeneousElement& b) const;
  bool is_zero(const HomogeneousElement& a) const;

  /// Product of basis word i of degree ga with an ambient vector of degree gb,
  /// expressed in the ambient coordinates of ga*gb.
  RowVec mul_word_vec(const Degree& ga, int word_i, const Degree& gb, const RowVec& b) const;

  // The maximal graded ideal and the residue division ring.
  /// Generators of the degree-g part of the maximal graded ideal, as ambient
  /// rows: m*1 in degree e, the full component elsewhere.
  ScalarMatrix mideal_rows(const Degree& g) const;
  /// Degrees in the window with nonzero component.
  const std::vector<Degree>& support() const { return support_; }
  /// True when every nonzero window component composed with any generator
  /// degree stays inside the window, so the ring provably vanishes beyond it.
  bool visibly_bounded() const { return visibly_bounded_; }
  /// Degrees of nonzero components of the maximal graded ideal.
  const std::vector<Degree>& mideal_support() const { return mideal_support_; }

  CoeffRing residue_coeff() const { return pres_.coeff.residue_ring(); }
  /// D = A / M as a graded ring concentrated in degree e.
  GradedRing residue_ring() const;
  /// Component map A_g -> D_g: residue of the identity-word coordinate in
  /// degree e, the zero map elsewhere.
  RowVec project_to_residue(const Degree& g, const RowVec& ambient) const;

  LocalityReport check_local_axioms(long samples, std::uint64_t seed) const;

private:
  struct Component {
    std::vector<GenWord> word_list;
    std::map<GenWord, int> word_index;
    ScalarMatrix rels;       // Howell/RREF canonical
    ScalarMatrix canon;      // row w = canonical form of word w
    std::vector<int> survivors;
    bool zero = false;
  };

  const Component& comp(const Degree& g) const;

  RingPresentation pres_;
  std::vector<Degree> window_;
  std::map<Degree, int> index_;
  std::vector<Component> comps_;
  std::vector<Degree> support_;
  std::vector<Degree> mideal_support_;
  bool visibly_bounded_ = false;
};

}  // namespace grlocal

#endif
