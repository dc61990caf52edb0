#ifndef GRLOCAL_RESOLVE_HPP
#define GRLOCAL_RESOLVE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grlocal/gmodule.hpp"

namespace grlocal {

/// Cover of M by the gr-free module on a canonical minimal generating set,
/// with generators of its kernel. The kernel sits inside mideal * F.
struct ProjectiveCover {
  GrFreeModule cover;             // F, free on the minimal generators
  std::vector<HVec> gens;         // images of the basis in M's coordinates
  std::vector<HVec> kernel_gens;  // homogeneous generators of Ker(eps), in F
};

ProjectiveCover projective_cover(const PresentedModule& M);

enum class ResolutionStatus {
  Resolved,        // kernel vanished in the window and the vanishing is certified
  ExhaustedSteps,  // step limit hit with a nonzero kernel
  ExhaustedBound,  // kernel vanished in the window but cannot be certified
};

std::string to_string(ResolutionStatus s);

/// Minimal gr-free resolution data: F_0 covers M, steps[k] is
/// phi_{k+1}: F_{k+1} -> F_k built on a minimal generating set of the
/// previous kernel. All differential entries lie in the maximal graded ideal.
struct Resolution {
  ProjectiveCover cover;
  std::vector<GradedMorphism> steps;
  ResolutionStatus status = ResolutionStatus::Resolved;
  bool certified = false;
  std::vector<HVec> last_kernel;  // kernel generators of the final map

  int length() const { return static_cast<int>(steps.size()); }
  const GrFreeModule& term(int i) const;
};

Resolution minimal_resolution(const PresentedModule& M, int max_steps = 8);

/// Counts of basis elements per homological index and degree.
struct BettiTable {
  std::vector<std::map<Degree, int>> by_index;
  int total(int i) const;
  int count(int i, const Degree& g) const;
  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

BettiTable betti_of(const Resolution& res);
BettiTable betti(const PresentedModule& M, int max_steps = 8);

/// Graded dimensions of Tor_i(D, M) computed by tensoring the resolution with
/// D and taking homology of the residue matrices. Aborts with InternalError
/// if an induced differential is nonzero or the table disagrees with the
/// Betti numbers.
BettiTable tor_dims(const PresentedModule& M, int max_steps = 8);
BettiTable tor_of(const PresentedModule& M, const Resolution& res);

/// Free basis (the minimal generators) when the cover kernel vanishes in the
/// window; nullopt otherwise. Also the projectivity test.
std::optional<std::vector<HVec>> is_free(const PresentedModule& M);

struct DimensionReport {
  std::optional<int> value;  // nullopt = infinite within the window
  bool exact = false;        // else a lower bound under truncation
};

DimensionReport pdim(const PresentedModule& M, int max_steps = 8);

/// The residue module D = A/mideal presented over A.
PresentedModule residue_module(const GradedRing& R);

DimensionReport gldim(const GradedRing& R, int max_steps = 8);

struct CyclicSweepReport {
  long ideals = 0;
  DimensionReport supremum;
  bool matches_gldim = false;
};

/// Exhaustive sweep over all graded left ideals within the window (finite
/// coefficients, tiny components): the supremum of pdim(A/L) must equal
/// gldim. Caps are hard errors.
CyclicSweepReport gldim_cyclic_sweep(const GradedRing& R, int max_steps = 8,
                                     long max_ideals = 20000);

/// A graded map from a free module into M, given by basis images.
struct FreeToModuleMap {
  GrFreeModule source;
  std::vector<HVec> images;
};

struct CoverLift {
  GradedMorphism phi;           // Q -> P over the cover
  std::vector<HVec> splitting;  // sigma columns: P -> Q with phi(sigma) = id
  std::vector<HVec> kernel_gens;
  bool is_isomorphism = false;
};

/// Lift of an epimorphism psi: Q -> M through the cover: phi: Q -> P with
/// eps(phi) = psi, surjective, split; Q decomposes as sigma(P) + Ker(phi).
CoverLift cover_lift(const FreeToModuleMap& psi, const ProjectiveCover& cover,
                     const PresentedModule& M);

/// Structural checks on a computed resolution: differentials inside the
/// maximal graded ideal, composites zero, and degreewise kernel = image
/// within the bound. Returns human-readable failures (empty = pass).
std::vector<std::string> verify_resolution(const PresentedModule& M, const Resolution& res);

}  // namespace grlocal

#endif
