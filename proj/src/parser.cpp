#include "grlocal/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace grlocal {

namespace {

struct Token {
  enum Kind { Ident, Number, Punct, Quoted, End } kind;
  std::string text;
  int column;
};

class Lexer {
public:
  Lexer(const std::string& line, const std::string& where) : line_(line), where_(where) {
    tokenize();
  }

  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_ == tokens_.size() - 1 ? pos_ : pos_++]; }
  bool at_end() const { return peek().kind == Token::End; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw PreconditionError(where_ + ":" + std::to_string(peek().column) + ": " + msg);
  }

  Token expect(Token::Kind kind, const std::string& what) {
    if (peek().kind != kind) fail("expected " + what);
    return take();
  }

  bool accept_punct(char c) {
    if (peek().kind == Token::Punct && peek().text[0] == c) {
      take();
      return true;
    }
    return false;
  }

  void expect_punct(char c) {
    if (!accept_punct(c)) fail(std::string("expected '") + c + "'");
  }

private:
  void tokenize() {
    size_t i = 0;
    while (i < line_.size()) {
      char c = line_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      if (c == '#') break;
      int col = static_cast<int>(i) + 1;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t j = i;
        while (j < line_.size() &&
               (std::isalnum(static_cast<unsigned char>(line_[j])) || line_[j] == '_'))
          ++j;
        tokens_.push_back({Token::Ident, line_.substr(i, j - i), col});
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t j = i;
        while (j < line_.size() && std::isdigit(static_cast<unsigned char>(line_[j]))) ++j;
        tokens_.push_back({Token::Number, line_.substr(i, j - i), col});
        i = j;
      } else if (c == '"') {
        size_t j = line_.find('"', i + 1);
        if (j == std::string::npos)
          throw PreconditionError(where_ + ":" + std::to_string(col) +
                                  ": unterminated string literal");
        tokens_.push_back({Token::Quoted, line_.substr(i + 1, j - i - 1), col});
        i = j + 1;
      } else {
        tokens_.push_back({Token::Punct, std::string(1, c), col});
        ++i;
      }
    }
    tokens_.push_back({Token::End, "", static_cast<int>(line_.size()) + 1});
  }

  std::string line_;
  std::string where_;
  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

class Parser {
public:
  ParsedFile run(const std::string& text, const std::string& filename) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      where_ = filename + ":" + std::to_string(lineno);
      Lexer lex(line, where_);
      if (lex.at_end()) continue;
      statement(lex);
      if (!lex.at_end()) lex.fail("trailing input after a complete statement");
    }
    finish_checks(filename);
    return std::move(out_);
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw PreconditionError(where_ + ": " + msg);
  }

  void statement(Lexer& lex) {
    Token head = lex.expect(Token::Ident, "a statement keyword");
    const std::string& kw = head.text;
    if (kw == "monoid") return stmt_monoid(lex);
    if (kw == "coeff") return stmt_coeff(lex);
    if (kw == "bound") return stmt_bound(lex);
    if (kw == "commutative") return stmt_commutative(lex);
    if (kw == "gen") return stmt_gen(lex);
    if (kw == "rel") return stmt_rel(lex);
    if (kw == "module") return stmt_module(lex);
    if (kw == "freebasis") return stmt_basis(lex, /*free=*/true);
    if (kw == "relbasis") return stmt_basis(lex, /*free=*/false);
    if (kw == "send") return stmt_send(lex);
    if (kw == "genset") return stmt_genset(lex);
    if (kw == "vec") return stmt_vec(lex);
    fail("unknown statement '" + kw + "'");
  }

  void require_ring_context(const char* what) {
    if (!out_.modules.empty() || !out_.gensets.empty())
      fail(std::string(what) + " must appear before module or genset blocks");
  }

  void stmt_monoid(Lexer& lex) {
    require_ring_context("the monoid declaration");
    if (have_monoid_) fail("duplicate monoid declaration");
    Token kind = lex.expect(Token::Ident, "'natvec' or 'word'");
    DegreeOrder ord;
    if (kind.text == "natvec") {
      Token arity = lex.expect(Token::Number, "the number of components");
      ord = DegreeOrder::GrLex;
      if (!lex.at_end()) ord = parse_order(lex, /*word=*/false);
      out_.presentation.monoid =
          Monoid::nat_vec(static_cast<unsigned>(std::stoul(arity.text)), ord);
    } else if (kind.text == "word") {
      Token alphabet = lex.expect(Token::Ident, "the alphabet symbols");
      ord = DegreeOrder::DegLex;
      if (!lex.at_end()) ord = parse_order(lex, /*word=*/true);
      out_.presentation.monoid = Monoid::free_word(alphabet.text, ord);
    } else {
      lex.fail("monoid kind must be 'natvec' or 'word'");
    }
    have_monoid_ = true;
  }

  DegreeOrder parse_order(Lexer& lex, bool word) {
    Token kw = lex.expect(Token::Ident, "'order'");
    if (kw.text != "order") lex.fail("expected 'order'");
    Token name = lex.expect(Token::Ident, "an order name");
    if (name.text == "grlex") return DegreeOrder::GrLex;
    if (name.text == "grevlex") return DegreeOrder::GrRevLex;
    if (name.text == "lex") return DegreeOrder::Lex;
    if (name.text == "deglex") return DegreeOrder::DegLex;
    lex.fail(word ? "word degrees support only 'deglex'"
                  : "order must be grlex, grevlex or lex");
  }

  void stmt_coeff(Lexer& lex) {
    require_ring_context("the coefficient declaration");
    if (have_coeff_) fail("duplicate coeff declaration");
    Token kind = lex.expect(Token::Ident, "'Q', 'Fp' or 'Zpm'");
    if (kind.text == "Q") {
      out_.presentation.coeff = CoeffRing::rationals();
    } else if (kind.text == "Fp") {
      Token p = lex.expect(Token::Number, "a prime");
      out_.presentation.coeff = CoeffRing::prime_field(std::stoull(p.text));
    } else if (kind.text == "Zpm") {
      Token p = lex.expect(Token::Number, "a prime");
      Token m = lex.expect(Token::Number, "an exponent");
      out_.presentation.coeff = CoeffRing::prime_power(
          std::stoull(p.text), static_cast<unsigned>(std::stoul(m.text)));
    } else {
      lex.fail("coefficient ring must be Q, Fp or Zpm");
    }
    have_coeff_ = true;
  }

  Degree parse_degree(Lexer& lex) {
    if (!have_monoid_) fail("a degree literal needs a prior monoid declaration");
    const Monoid& mono = out_.presentation.monoid;
    if (mono.kind() == MonoidKind::NatVec) {
      lex.expect_punct('(');
      std::vector<std::uint32_t> v;
      if (!lex.accept_punct(')')) {
        while (true) {
          Token n = lex.expect(Token::Number, "a nonnegative integer");
          v.push_back(static_cast<std::uint32_t>(std::stoul(n.text)));
          if (lex.accept_punct(')')) break;
          lex.expect_punct(',');
        }
      }
      Degree d = Degree::nat(std::move(v));
      mono.check_degree(d);
      return d;
    }
    Token w = lex.expect(Token::Quoted, "a quoted word");
    Degree d = Degree::word(w.text);
    mono.check_degree(d);
    return d;
  }

  void stmt_bound(Lexer& lex) {
    require_ring_context("the bound declaration");
    if (have_bound_) fail("duplicate bound declaration");
    out_.presentation.bound = parse_degree(lex);
    have_bound_ = true;
  }

  void stmt_commutative(Lexer& lex) {
    require_ring_context("the commutative flag");
    Token v = lex.expect(Token::Ident, "'true' or 'false'");
    if (v.text == "true")
      out_.presentation.commutative = true;
    else if (v.text == "false")
      out_.presentation.commutative = false;
    else
      lex.fail("commutative must be true or false");
  }

  void stmt_gen(Lexer& lex) {
    require_ring_context("a generator declaration");
    if (!have_bound_) fail("generators need a prior bound declaration");
    Token name = lex.expect(Token::Ident, "a generator symbol");
    if (gen_index_.count(name.text)) fail("duplicate generator '" + name.text + "'");
    Degree d = parse_degree(lex);
    gen_index_[name.text] = static_cast<int>(out_.presentation.generators.size());
    out_.presentation.generators.push_back({name.text, d});
  }

  // poly := term (('+'|'-') term)*; term := ['-'] factor ('*' factor)*
  PolyExpr parse_poly(Lexer& lex, const ModuleSpec* mod) {
    PolyExpr poly;
    bool negate = lex.accept_punct('-');
    while (true) {
      poly.terms.push_back(parse_term(lex, mod, negate));
      if (lex.accept_punct('+'))
        negate = false;
      else if (lex.accept_punct('-'))
        negate = true;
      else
        break;
    }
    return poly;
  }

  TermExpr parse_term(Lexer& lex, const ModuleSpec* mod, bool negate) {
    const CoeffRing& k = out_.presentation.coeff;
    TermExpr term;
    term.coeff = k.one();
    bool saw_factor = false;
    while (true) {
      if (peek_scalar(lex)) {
        term.coeff = k.mul(term.coeff, parse_scalar(lex));
      } else if (lex.peek().kind == Token::Ident) {
        std::string sym = lex.take().text;
        auto g = gen_index_.find(sym);
        if (g != gen_index_.end()) {
          if (term.basis >= 0) fail("a basis element must end its term");
          term.word.push_back(static_cast<std::uint16_t>(g->second));
        } else if (mod) {
          int bi = -1;
          for (size_t i = 0; i < mod->freebasis.size(); ++i)
            if (mod->freebasis[i].first == sym) bi = static_cast<int>(i);
          if (bi < 0) fail("unknown symbol '" + sym + "'");
          if (term.basis >= 0) fail("two basis elements in one term");
          term.basis = bi;
        } else {
          fail("unknown symbol '" + sym + "'");
        }
      } else {
        fail("expected a scalar, generator or basis symbol");
      }
      saw_factor = true;
      if (!lex.accept_punct('*')) break;
    }
    if (!saw_factor) fail("empty term");
    if (negate) term.coeff = k.neg(term.coeff);
    return term;
  }

  bool peek_scalar(Lexer& lex) { return lex.peek().kind == Token::Number; }

  Scalar parse_scalar(Lexer& lex) {
    const CoeffRing& k = out_.presentation.coeff;
    Token n = lex.expect(Token::Number, "a number");
    if (lex.accept_punct('/')) {
      Token d = lex.expect(Token::Number, "a denominator");
      if (k.kind() != CoeffKind::Rationals)
        lex.fail("fractional literals are only valid over Q");
      return k.from_rational(Rational(boost::multiprecision::cpp_int(n.text),
                                      boost::multiprecision::cpp_int(d.text)));
    }
    if (k.kind() == CoeffKind::Rationals)
      return k.from_rational(Rational(boost::multiprecision::cpp_int(n.text)));
    return k.from_int(std::stoll(n.text));
  }

  Degree word_degree(const GenWord& w) const {
    const Monoid& mono = out_.presentation.monoid;
    Degree d = mono.neutral();
    for (auto gi : w) d = mono.compose(d, out_.presentation.generators[gi].degree);
    return d;
  }

  void stmt_rel(Lexer& lex) {
    require_ring_context("a relation");
    if (!have_coeff_) fail("relations need a prior coeff declaration");
    PolyExpr poly = parse_poly(lex, nullptr);
    const Monoid& mono = out_.presentation.monoid;
    RelPoly rel;
    for (size_t t = 0; t < poly.terms.size(); ++t) {
      if (poly.terms[t].word.empty())
        fail("relation term without a generator");
      Degree d = word_degree(poly.terms[t].word);
      if (t == 0)
        rel.degree = d;
      else if (!(d == rel.degree))
        fail("inhomogeneous relation: degrees " + mono.show(rel.degree) + " and " +
             mono.show(d));
      rel.terms.push_back({poly.terms[t].coeff, poly.terms[t].word});
    }
    if (!mono.in_window(rel.degree, out_.presentation.bound))
      fail("relation degree " + mono.show(rel.degree) + " is beyond the bound");
    out_.presentation.relations.push_back(std::move(rel));
  }

  void stmt_module(Lexer& lex) {
    if (!have_monoid_ || !have_coeff_ || !have_bound_)
      fail("module blocks need monoid, coeff and bound declarations first");
    Token name = lex.expect(Token::Ident, "a module name");
    for (const auto& m : out_.modules)
      if (m.name == name.text) fail("duplicate module '" + name.text + "'");
    out_.modules.push_back(ModuleSpec{name.text, {}, {}, {}});
    in_genset_ = false;
  }

  ModuleSpec& current_module(const char* what) {
    if (out_.modules.empty() || in_genset_)
      fail(std::string(what) + " must appear inside a module block");
    return out_.modules.back();
  }

  void stmt_basis(Lexer& lex, bool free) {
    ModuleSpec& mod = current_module(free ? "freebasis" : "relbasis");
    auto& list = free ? mod.freebasis : mod.relbasis;
    do {
      Token sym = lex.expect(Token::Ident, "a basis symbol");
      for (const auto& [n, d] : mod.freebasis)
        if (n == sym.text) fail("duplicate basis symbol '" + sym.text + "'");
      for (const auto& [n, d] : mod.relbasis)
        if (n == sym.text) fail("duplicate basis symbol '" + sym.text + "'");
      if (gen_index_.count(sym.text))
        fail("basis symbol '" + sym.text + "' collides with a generator");
      Degree d = parse_degree(lex);
      if (!out_.presentation.monoid.in_window(d, out_.presentation.bound))
        fail("degree " + out_.presentation.monoid.show(d) + " is beyond the bound");
      list.emplace_back(sym.text, d);
      if (!free) mod.sends.emplace_back();
    } while (!lex.at_end());
  }

  void stmt_send(Lexer& lex) {
    ModuleSpec& mod = current_module("send");
    Token sym = lex.expect(Token::Ident, "a relation basis symbol");
    int fi = -1;
    for (size_t i = 0; i < mod.relbasis.size(); ++i)
      if (mod.relbasis[i].first == sym.text) fi = static_cast<int>(i);
    if (fi < 0) fail("unknown relation basis symbol '" + sym.text + "'");
    lex.expect_punct('=');
    PolyExpr poly = parse_poly(lex, &mod);
    const Monoid& mono = out_.presentation.monoid;
    for (const TermExpr& t : poly.terms) {
      if (t.basis < 0) fail("every send term needs a basis element");
      Degree d = mono.compose(word_degree(t.word), mod.freebasis[t.basis].second);
      if (!(d == mod.relbasis[fi].second))
        fail("inhomogeneous column: degrees " + mono.show(mod.relbasis[fi].second) +
             " and " + mono.show(d));
    }
    if (!mod.sends[fi].terms.empty()) fail("duplicate send for '" + sym.text + "'");
    mod.sends[fi] = std::move(poly);
  }

  void stmt_genset(Lexer& lex) {
    if (out_.modules.empty()) fail("genset blocks need a module to refer to");
    Token name = lex.expect(Token::Ident, "a genset name");
    for (const auto& g : out_.gensets)
      if (g.name == name.text) fail("duplicate genset '" + name.text + "'");
    Token kw = lex.expect(Token::Ident, "'module'");
    if (kw.text != "module") lex.fail("expected 'module'");
    Token mod = lex.expect(Token::Ident, "a module name");
    bool found = false;
    for (const auto& m : out_.modules)
      if (m.name == mod.text) found = true;
    if (!found) fail("genset refers to unknown module '" + mod.text + "'");
    out_.gensets.push_back(GensetSpec{name.text, mod.text, {}});
    in_genset_ = true;
  }

  void stmt_vec(Lexer& lex) {
    if (out_.gensets.empty() || !in_genset_)
      fail("vec must appear inside a genset block");
    GensetSpec& gs = out_.gensets.back();
    const ModuleSpec* mod = nullptr;
    for (const auto& m : out_.modules)
      if (m.name == gs.module) mod = &m;
    Token kw = lex.expect(Token::Ident, "'deg'");
    if (kw.text != "deg") lex.fail("expected 'deg'");
    Degree d = parse_degree(lex);
    lex.expect_punct(':');
    PolyExpr poly = parse_poly(lex, mod);
    const Monoid& mono = out_.presentation.monoid;
    if (!mono.in_window(d, out_.presentation.bound))
      fail("degree " + mono.show(d) + " is beyond the bound");
    for (const TermExpr& t : poly.terms) {
      if (t.basis < 0) fail("every vector term needs a basis element");
      Degree td = mono.compose(word_degree(t.word), mod->freebasis[t.basis].second);
      if (!(td == d))
        fail("inhomogeneous vector: degrees " + mono.show(d) + " and " + mono.show(td));
    }
    gs.vectors.push_back(VecLiteral{d, std::move(poly)});
  }

  void finish_checks(const std::string& filename) {
    where_ = filename;
    if (!have_monoid_) fail("missing monoid declaration");
    if (!have_coeff_) fail("missing coeff declaration");
    if (!have_bound_) fail("missing bound declaration");
    for (const auto& g : out_.presentation.generators)
      if (!out_.presentation.monoid.in_window(g.degree, out_.presentation.bound))
        fail("generator '" + g.name + "' has degree beyond the bound");
  }

  ParsedFile out_;
  std::map<std::string, int> gen_index_;
  std::string where_;
  bool have_monoid_ = false;
  bool have_coeff_ = false;
  bool have_bound_ = false;
  bool in_genset_ = false;
};

std::string show_scalar_factor(const CoeffRing& k, const Scalar& c) { return k.show(c); }

bool scalar_is_negative(const CoeffRing& k, const Scalar& c) {
  return k.kind() == CoeffKind::Rationals && c.rat() < 0;
}

std::string print_poly(const RingPresentation& p, const ModuleSpec* mod,
                       const PolyExpr& poly) {
  const CoeffRing& k = p.coeff;
  std::string out;
  for (size_t t = 0; t < poly.terms.size(); ++t) {
    const TermExpr& term = poly.terms[t];
    Scalar c = term.coeff;
    bool neg = scalar_is_negative(k, c);
    if (neg) c = k.neg(c);
    if (t == 0)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::vector<std::string> factors;
    if (!k.equal(c, k.one()) || (term.word.empty() && term.basis < 0))
      factors.push_back(show_scalar_factor(k, c));
    for (auto gi : term.word) factors.push_back(p.generators[gi].name);
    if (term.basis >= 0) factors.push_back(mod->freebasis[term.basis].first);
    for (size_t f = 0; f < factors.size(); ++f) {
      if (f) out += "*";
      out += factors[f];
    }
  }
  return out;
}

}  // namespace

ParsedFile parse_workspace(const std::string& text, const std::string& filename) {
  Parser parser;
  return parser.run(text, filename);
}

std::string print_workspace(const ParsedFile& w) {
  const RingPresentation& p = w.presentation;
  const Monoid& mono = p.monoid;
  std::ostringstream os;
  if (mono.kind() == MonoidKind::NatVec)
    os << "monoid natvec " << mono.arity() << " order " << to_string(mono.order()) << "\n";
  else
    os << "monoid word " << mono.alphabet() << " order " << to_string(mono.order()) << "\n";
  switch (p.coeff.kind()) {
    case CoeffKind::Rationals: os << "coeff Q\n"; break;
    case CoeffKind::PrimeField: os << "coeff Fp " << p.coeff.prime() << "\n"; break;
    case CoeffKind::PrimePowerRing:
      os << "coeff Zpm " << p.coeff.prime() << " " << p.coeff.exponent() << "\n";
      break;
  }
  os << "bound " << mono.show(p.bound) << "\n";
  os << "commutative " << (p.commutative ? "true" : "false") << "\n";
  for (const auto& g : p.generators) os << "gen " << g.name << " " << mono.show(g.degree) << "\n";
  for (const auto& r : p.relations) {
    PolyExpr poly;
    for (const auto& [c, word] : r.terms) poly.terms.push_back(TermExpr{c, word, -1});
    os << "rel " << print_poly(p, nullptr, poly) << "\n";
  }
  for (const auto& m : w.modules) {
    os << "module " << m.name << "\n";
    for (const auto& [n, d] : m.freebasis) os << "freebasis " << n << " " << mono.show(d) << "\n";
    for (const auto& [n, d] : m.relbasis) os << "relbasis " << n << " " << mono.show(d) << "\n";
    for (size_t i = 0; i < m.relbasis.size(); ++i)
      if (!m.sends[i].terms.empty())
        os << "send " << m.relbasis[i].first << " = " << print_poly(p, &m, m.sends[i]) << "\n";
  }
  for (const auto& g : w.gensets) {
    os << "genset " << g.name << " module " << g.module << "\n";
    const ModuleSpec* mod = nullptr;
    for (const auto& m : w.modules)
      if (m.name == g.module) mod = &m;
    for (const auto& v : g.vectors)
      os << "vec deg " << mono.show(v.degree) << ": " << print_poly(p, mod, v.expr) << "\n";
  }
  return os.str();
}

namespace {

HVec poly_to_hvec(const GradedRing& ring, const GrFreeModule& F, const Degree& degree,
                  const PolyExpr& poly) {
  const CoeffRing& k = ring.coeff();
  const auto& lay = F.layout(degree);
  RowVec coords(lay.total);
  for (const TermExpr& t : poly.terms) {
    Degree wd = ring.word_degree(t.word);
    int bi = lay.block_of_basis[t.basis];
    if (bi < 0) throw InternalError("module term lost its block");
    const auto& blk = lay.blocks[bi];
    int widx = ring.word_index(blk.coeff_deg, t.word);
    if (widx < 0) throw InternalError("module term lost its word");
    (void)wd;
    coords[blk.offset + widx] = k.add(coords[blk.offset + widx], t.coeff);
  }
  return HVec{degree, std::move(coords)};
}

}  // namespace

const PresentedModule* BuiltWorkspace::find_module(const std::string& name) const {
  for (size_t i = 0; i < module_names.size(); ++i)
    if (module_names[i] == name) return modules[i].get();
  return nullptr;
}

std::vector<HVec> BuiltWorkspace::genset_vectors(const std::string& name) const {
  for (const auto& gs : genset_specs)
    if (gs.name == name) {
      const PresentedModule* mod = find_module(gs.module);
      if (!mod) throw PreconditionError("genset refers to unknown module");
      std::vector<HVec> out;
      for (const auto& v : gs.vectors) {
        PolyExpr expr = v.expr;
        out.push_back(poly_to_hvec(*ring, mod->ambient_free(), v.degree, expr));
      }
      return out;
    }
  throw PreconditionError("unknown genset '" + name + "'");
}

BuiltWorkspace build_workspace(const ParsedFile& parsed) {
  BuiltWorkspace w;
  w.ring = std::make_shared<GradedRing>(GradedRing::build(parsed.presentation));
  for (const ModuleSpec& spec : parsed.modules) {
    GrFreeModule f0(*w.ring, spec.freebasis);
    std::vector<HVec> relgens;
    for (size_t i = 0; i < spec.relbasis.size(); ++i)
      relgens.push_back(
          poly_to_hvec(*w.ring, f0, spec.relbasis[i].second, spec.sends[i]));
    std::vector<std::pair<std::string, Degree>> src_basis = spec.relbasis;
    if (src_basis.empty()) {
      w.modules.push_back(
          std::make_shared<PresentedModule>(PresentedModule::free(std::move(f0))));
    } else {
      GrFreeModule f1(*w.ring, src_basis);
      GradedMorphism phi(std::move(f1), std::move(f0), std::move(relgens));
      w.modules.push_back(
          std::make_shared<PresentedModule>(PresentedModule::from_morphism(std::move(phi))));
    }
    w.module_names.push_back(spec.name);
  }
  w.genset_specs = parsed.gensets;
  return w;
}

}  // namespace grlocal
