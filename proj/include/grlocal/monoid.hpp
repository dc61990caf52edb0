#ifndef GRLOCAL_MONOID_HPP
#define GRLOCAL_MONOID_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grlocal/errors.hpp"

namespace grlocal {

enum class MonoidKind { NatVec, Word };

/// Total degree orders. GrLex/GrRevLex/Lex apply to NatVec, DegLex to Word.
/// All four are translation-invariant well-orders with the neutral element
/// smallest on the degree sets this library enumerates.
enum class DegreeOrder { GrLex, GrRevLex, Lex, DegLex };

std::string to_string(DegreeOrder ord);

/// An element of the grading monoid: a vector of nonnegative integers under
/// componentwise addition, or a finite word under concatenation.
class Degree {
public:
  Degree() = default;  // NatVec of arity 0; placeholder only

  static Degree nat(std::vector<std::uint32_t> v);
  static Degree word(std::string w);

  MonoidKind kind() const { return kind_; }
  const std::vector<std::uint32_t>& vec() const { return vec_; }
  const std::string& letters() const { return word_; }

  bool is_neutral() const;
  /// Sum of entries (NatVec) or length (Word); grows by at least 1 under
  /// composition with any non-neutral degree.
  std::uint64_t total() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  /// Structural key order for containers; not the monoid's degree order.
  friend bool operator<(const Degree& a, const Degree& b);

private:
  MonoidKind kind_ = MonoidKind::NatVec;
  std::vector<std::uint32_t> vec_;
  std::string word_;
};

/// The grading monoid together with its fixed total order. Immutable; every
/// operation is pure.
class Monoid {
public:
  static Monoid nat_vec(unsigned arity, DegreeOrder ord = DegreeOrder::GrLex);
  static Monoid free_word(std::string alphabet, DegreeOrder ord = DegreeOrder::DegLex);

  MonoidKind kind() const { return kind_; }
  unsigned arity() const { return arity_; }
  const std::string& alphabet() const { return alphabet_; }
  DegreeOrder order() const { return order_; }

  Degree neutral() const;
  /// Monoid product: componentwise sum or concatenation. Throws on kind,
  /// arity or alphabet mismatch.
  Degree compose(const Degree& a, const Degree& b) const;
  /// -1, 0, +1 under the monoid's degree order.
  int compare(const Degree& a, const Degree& b) const;
  bool less(const Degree& a, const Degree& b) const { return compare(a, b) < 0; }

  /// Window membership: componentwise <= bound for NatVec, deglex <= bound
  /// for Word. Both windows are finite and closed under two-sided division.
  bool in_window(const Degree& g, const Degree& bound) const;
  /// All degrees in the window of `bound`, strictly increasing in the order.
  std::vector<Degree> enumerate_upto(const Degree& bound) const;
  /// All ordered pairs (a, b) with a*b == g.
  std::vector<std::pair<Degree, Degree>> factorizations(const Degree& g) const;

  /// Unique a with a*right == g, if any.
  std::optional<Degree> left_factor(const Degree& g, const Degree& right) const;
  /// Unique b with left*b == g, if any.
  std::optional<Degree> right_factor(const Degree& g, const Degree& left) const;

  /// Degree literal: "(a1,...,ak)" or a double-quoted word.
  std::string show(const Degree& g) const;

  /// Validates that g belongs to this monoid (kind, arity, alphabet).
  void check_degree(const Degree& g) const;

  friend bool operator==(const Monoid&, const Monoid&) = default;

private:
  MonoidKind kind_ = MonoidKind::NatVec;
  unsigned arity_ = 0;
  std::string alphabet_;
  DegreeOrder order_ = DegreeOrder::GrLex;
};

/// Order comparison usable without a Monoid context (kinds must match and the
/// order must apply to the kind). Word comparison uses the given alphabet.
int compare_degrees(const Degree& a, const Degree& b, DegreeOrder ord,
                    const std::string& alphabet = std::string());

}  // namespace grlocal

#endif
