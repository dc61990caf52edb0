#ifndef GRLOCAL_ORACLE_HPP
#define GRLOCAL_ORACLE_HPP

#include <memory>
#include <vector>

#include "grlocal/gmodule.hpp"
#include "grlocal/rng.hpp"

namespace grlocal::oracle {

/// Brute-force verification layer. Everything here decides spans, kernels and
/// minimality by exhaustive set closure over finite coefficient rings; none
/// of the engine's echelon/solve machinery is consulted. Caps are hard
/// errors, never silent truncation.
struct OracleCaps {
  std::uint64_t max_elements = std::uint64_t{1} << 20;  // per-component bound
  int max_subset = 12;                                  // generators in subset sweeps
};

/// Every element of the degree-g component, one representative per residue
/// class of the relation span.
std::vector<RowVec> enumerate_component(const PresentedModule& M, const Degree& g,
                                        const OracleCaps& caps = {});

/// All representatives v in the degree-g source component with image in the
/// target relation span, found by applying the map to each element.
std::vector<RowVec> brute_kernel(const GrFreeModule& src, const std::vector<HVec>& columns,
                                 const PresentedModule& target, const Degree& g,
                                 const OracleCaps& caps = {});

/// Span test by set closure: the generators reach every component element.
bool brute_generates(const PresentedModule& M, const std::vector<HVec>& gens,
                     const OracleCaps& caps = {});

/// Literal minimality: no proper subset generates within the bound.
bool brute_minimal(const std::vector<HVec>& gens, const PresentedModule& M,
                   const OracleCaps& caps = {});

/// Degreewise agreement of the engine's kernel generators with the
/// exhaustively enumerated kernel.
bool kernel_spans_agree(const GrFreeModule& src, const std::vector<HVec>& columns,
                        const PresentedModule& target, const std::vector<HVec>& engine_gens,
                        const OracleCaps& caps = {});

struct InstanceCaps {
  int max_generators = 2;
  int max_relations = 2;
  int max_module_basis = 2;
  int max_module_rels = 2;
  bool allow_natvec2 = true;
  bool allow_word_monoid = true;
};

/// A seeded random ring with a finitely presented module over it and a few
/// redundant homogeneous generating sets of that module.
struct Instance {
  std::shared_ptr<GradedRing> ring;
  std::shared_ptr<PresentedModule> module;
  std::vector<std::vector<HVec>> redundant_gensets;
};

/// Deterministic stream of presentations: the same seed and caps always
/// produce the same instances.
class InstanceGenerator {
public:
  explicit InstanceGenerator(std::uint64_t seed, InstanceCaps caps = {});
  Instance next();
  /// Skips to an instance whose module is nonzero within the bound.
  Instance next_nonzero();

private:
  Rng rng_;
  InstanceCaps caps_;
};

}  // namespace grlocal::oracle

#endif
