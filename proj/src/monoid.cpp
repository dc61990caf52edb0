#include "grlocal/monoid.hpp"

#include <algorithm>
#include <sstream>

namespace grlocal {

std::string to_string(DegreeOrder ord) {
  switch (ord) {
    case DegreeOrder::GrLex: return "grlex";
    case DegreeOrder::GrRevLex: return "grevlex";
    case DegreeOrder::Lex: return "lex";
    case DegreeOrder::DegLex: return "deglex";
  }
  return "?";
}

Degree Degree::nat(std::vector<std::uint32_t> v) {
  Degree d;
  d.kind_ = MonoidKind::NatVec;
  d.vec_ = std::move(v);
  return d;
}

Degree Degree::word(std::string w) {
  Degree d;
  d.kind_ = MonoidKind::Word;
  d.word_ = std::move(w);
  return d;
}

bool Degree::is_neutral() const {
  if (kind_ == MonoidKind::NatVec)
    return std::all_of(vec_.begin(), vec_.end(), [](std::uint32_t x) { return x == 0; });
  return word_.empty();
}

std::uint64_t Degree::total() const {
  if (kind_ == MonoidKind::NatVec) {
    std::uint64_t s = 0;
    for (auto x : vec_) s += x;
    return s;
  }
  return word_.size();
}

bool operator<(const Degree& a, const Degree& b) {
  if (a.kind_ != b.kind_) return a.kind_ < b.kind_;
  if (a.vec_ != b.vec_) return a.vec_ < b.vec_;
  return a.word_ < b.word_;
}

Monoid Monoid::nat_vec(unsigned arity, DegreeOrder ord) {
  if (arity == 0) throw PreconditionError("natvec monoid needs arity >= 1");
  if (ord == DegreeOrder::DegLex)
    throw PreconditionError("deglex does not apply to natvec degrees");
  Monoid m;
  m.kind_ = MonoidKind::NatVec;
  m.arity_ = arity;
  m.order_ = ord;
  return m;
}

Monoid Monoid::free_word(std::string alphabet, DegreeOrder ord) {
  if (alphabet.empty()) throw PreconditionError("word monoid needs a nonempty alphabet");
  for (size_t i = 0; i < alphabet.size(); ++i)
    for (size_t j = i + 1; j < alphabet.size(); ++j)
      if (alphabet[i] == alphabet[j])
        throw PreconditionError("word monoid alphabet has a repeated symbol");
  if (ord != DegreeOrder::DegLex)
    throw PreconditionError("word degrees support only the deglex order");
  Monoid m;
  m.kind_ = MonoidKind::Word;
  m.alphabet_ = std::move(alphabet);
  m.order_ = ord;
  return m;
}

Degree Monoid::neutral() const {
  if (kind_ == MonoidKind::NatVec) return Degree::nat(std::vector<std::uint32_t>(arity_, 0));
  return Degree::word("");
}

void Monoid::check_degree(const Degree& g) const {
  if (g.kind() != kind_) throw PreconditionError("degree kind mismatch");
  if (kind_ == MonoidKind::NatVec) {
    if (g.vec().size() != arity_) throw PreconditionError("degree arity mismatch");
  } else {
    for (char c : g.letters())
      if (alphabet_.find(c) == std::string::npos)
        throw PreconditionError(std::string("degree uses symbol '") + c +
                                "' outside the declared alphabet");
  }
}

Degree Monoid::compose(const Degree& a, const Degree& b) const {
  check_degree(a);
  check_degree(b);
  if (kind_ == MonoidKind::NatVec) {
    std::vector<std::uint32_t> v(arity_);
    for (unsigned i = 0; i < arity_; ++i) v[i] = a.vec()[i] + b.vec()[i];
    return Degree::nat(std::move(v));
  }
  return Degree::word(a.letters() + b.letters());
}

namespace {

int cmp_nat_lex(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// grevlex tie-break: with equal totals, the later a deficit appears, the
// larger the element; i.e. a > b when the last nonzero entry of a-b is < 0.
int cmp_nat_revlex(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int compare_degrees(const Degree& a, const Degree& b, DegreeOrder ord,
                    const std::string& alphabet) {
  if (a.kind() != b.kind()) throw PreconditionError("degree kind mismatch in compare");
  if (a.kind() == MonoidKind::NatVec) {
    if (a.vec().size() != b.vec().size())
      throw PreconditionError("degree arity mismatch in compare");
    switch (ord) {
      case DegreeOrder::Lex:
        return cmp_nat_lex(a.vec(), b.vec());
      case DegreeOrder::GrLex: {
        if (a.total() != b.total()) return a.total() < b.total() ? -1 : 1;
        return cmp_nat_lex(a.vec(), b.vec());
      }
      case DegreeOrder::GrRevLex: {
        if (a.total() != b.total()) return a.total() < b.total() ? -1 : 1;
        return cmp_nat_revlex(a.vec(), b.vec());
      }
      case DegreeOrder::DegLex:
        throw PreconditionError("deglex does not apply to natvec degrees");
    }
  }
  if (ord != DegreeOrder::DegLex)
    throw PreconditionError("word degrees support only the deglex order");
  if (a.letters().size() != b.letters().size())
    return a.letters().size() < b.letters().size() ? -1 : 1;
  for (size_t i = 0; i < a.letters().size(); ++i) {
    char ca = a.letters()[i], cb = b.letters()[i];
    if (ca != cb) {
      auto pa = alphabet.find(ca), pb = alphabet.find(cb);
      if (pa == std::string::npos || pb == std::string::npos)
        throw PreconditionError("word degree uses symbol outside the declared alphabet");
      return pa < pb ? -1 : 1;
    }
  }
  return 0;
}

int Monoid::compare(const Degree& a, const Degree& b) const {
  check_degree(a);
  check_degree(b);
  return compare_degrees(a, b, order_, alphabet_);
}

bool Monoid::in_window(const Degree& g, const Degree& bound) const {
  check_degree(g);
  check_degree(bound);
  if (kind_ == MonoidKind::NatVec) {
    for (unsigned i = 0; i < arity_; ++i)
      if (g.vec()[i] > bound.vec()[i]) return false;
    return true;
  }
  return compare_degrees(g, bound, DegreeOrder::DegLex, alphabet_) <= 0;
}

std::vector<Degree> Monoid::enumerate_upto(const Degree& bound) const {
  check_degree(bound);
  std::vector<Degree> out;
  if (kind_ == MonoidKind::NatVec) {
    std::vector<std::uint32_t> cur(arity_, 0);
    while (true) {
      out.push_back(Degree::nat(cur));
      // odometer over the box [0, bound]
      unsigned i = arity_;
      bool advanced = false;
      while (i > 0) {
        --i;
        if (cur[i] < bound.vec()[i]) {
          ++cur[i];
          std::fill(cur.begin() + i + 1, cur.end(), 0);
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
    }
    std::sort(out.begin(), out.end(),
              [&](const Degree& a, const Degree& b) { return less(a, b); });
    return out;
  }
  // Word: all words of length < |bound|, plus words of equal length that are
  // lex <= bound.
  size_t len = bound.letters().size();
  std::vector<std::string> level{""};
  out.push_back(Degree::word(""));
  for (size_t l = 1; l <= len; ++l) {
    std::vector<std::string> next;
    for (const auto& w : level)
      for (char c : alphabet_) next.push_back(w + c);
    for (const auto& w : next) {
      Degree d = Degree::word(w);
      if (l < len || compare_degrees(d, bound, DegreeOrder::DegLex, alphabet_) <= 0)
        out.push_back(std::move(d));
    }
    level = std::move(next);
  }
  std::sort(out.begin(), out.end(),
            [&](const Degree& a, const Degree& b) { return less(a, b); });
  return out;
}

std::vector<std::pair<Degree, Degree>> Monoid::factorizations(const Degree& g) const {
  check_degree(g);
  std::vector<std::pair<Degree, Degree>> out;
  if (kind_ == MonoidKind::Word) {
    const std::string& w = g.letters();
    for (size_t i = 0; i <= w.size(); ++i)
      out.emplace_back(Degree::word(w.substr(0, i)), Degree::word(w.substr(i)));
    return out;
  }
  // Componentwise splittings, enumerated in odometer order on the left part.
  std::vector<std::uint32_t> cur(arity_, 0);
  while (true) {
    std::vector<std::uint32_t> rest(arity_);
    for (unsigned i = 0; i < arity_; ++i) rest[i] = g.vec()[i] - cur[i];
    out.emplace_back(Degree::nat(cur), Degree::nat(std::move(rest)));
    unsigned i = arity_;
    bool advanced = false;
    while (i > 0) {
      --i;
      if (cur[i] < g.vec()[i]) {
        ++cur[i];
        std::fill(cur.begin() + i + 1, cur.end(), 0);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

std::optional<Degree> Monoid::left_factor(const Degree& g, const Degree& right) const {
  check_degree(g);
  check_degree(right);
  if (kind_ == MonoidKind::NatVec) {
    std::vector<std::uint32_t> v(arity_);
    for (unsigned i = 0; i < arity_; ++i) {
      if (g.vec()[i] < right.vec()[i]) return std::nullopt;
      v[i] = g.vec()[i] - right.vec()[i];
    }
    return Degree::nat(std::move(v));
  }
  const std::string& w = g.letters();
  const std::string& s = right.letters();
  if (s.size() > w.size()) return std::nullopt;
  if (w.compare(w.size() - s.size(), s.size(), s) != 0) return std::nullopt;
  return Degree::word(w.substr(0, w.size() - s.size()));
}

std::optional<Degree> Monoid::right_factor(const Degree& g, const Degree& left) const {
  if (kind_ == MonoidKind::NatVec) return left_factor(g, left);
  check_degree(g);
  check_degree(left);
  const std::string& w = g.letters();
  const std::string& s = left.letters();
  if (s.size() > w.size()) return std::nullopt;
  if (w.compare(0, s.size(), s) != 0) return std::nullopt;
  return Degree::word(w.substr(s.size()));
}

std::string Monoid::show(const Degree& g) const {
  if (kind_ == MonoidKind::NatVec) {
    std::ostringstream os;
    os << '(';
    for (unsigned i = 0; i < arity_; ++i) {
      if (i) os << ',';
      os << g.vec()[i];
    }
    os << ')';
    return os.str();
  }
  return '"' + g.letters() + '"';
}

}  // namespace grlocal
