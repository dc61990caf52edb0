#ifndef GRLOCAL_PARSER_HPP
#define GRLOCAL_PARSER_HPP

#include <memory>
#include <string>
#include <vector>

#include "grlocal/gmodule.hpp"

namespace grlocal {

/// One parsed polynomial term: scalar coefficient, generator word, and (for
/// module expressions) the trailing basis symbol.
struct TermExpr {
  Scalar coeff;
  GenWord word;
  int basis = -1;  // index into the module's free basis; -1 for ring relations
};

struct PolyExpr {
  std::vector<TermExpr> terms;
};

struct ModuleSpec {
  std::string name;
  std::vector<std::pair<std::string, Degree>> freebasis;
  std::vector<std::pair<std::string, Degree>> relbasis;
  std::vector<PolyExpr> sends;  // one per relbasis entry (possibly empty)
};

struct VecLiteral {
  Degree degree;
  PolyExpr expr;
};

struct GensetSpec {
  std::string name;
  std::string module;
  std::vector<VecLiteral> vectors;
};

/// A parsed description file: one ring presentation plus named modules and
/// generating sets. Declaration order is preserved for round-tripping.
struct ParsedFile {
  RingPresentation presentation;
  std::vector<ModuleSpec> modules;
  std::vector<GensetSpec> gensets;
};

/// Parses the line-based description grammar. Diagnostics carry line numbers.
ParsedFile parse_workspace(const std::string& text, const std::string& filename = "input");

/// Canonical rendering in the same grammar; parse(print(w)) == w.
std::string print_workspace(const ParsedFile& w);

struct BuiltWorkspace {
  std::shared_ptr<GradedRing> ring;
  std::vector<std::string> module_names;
  std::vector<std::shared_ptr<PresentedModule>> modules;
  std::vector<GensetSpec> genset_specs;

  const PresentedModule* find_module(const std::string& name) const;
  /// Resolves a named generating set to coordinate vectors in its module.
  std::vector<HVec> genset_vectors(const std::string& name) const;
};

BuiltWorkspace build_workspace(const ParsedFile& parsed);

}  // namespace grlocal

#endif
