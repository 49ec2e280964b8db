#include "aubert/parse.hpp"

#include <cctype>
#include <sstream>

namespace aubert {

namespace {

class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  std::size_t pos() const { return pos_; }

  std::string rest(std::size_t n = 12) const {
    if (pos_ >= text_.size()) return "<end>";
    return text_.substr(pos_, n);
  }

  bool try_eat(const std::string& tok) {
    skip_ws();
    if (text_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(const std::string& tok) {
    if (!try_eat(tok)) throw ParseError(pos_, "'" + tok + "'", rest());
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) throw ParseError(start, "integer", rest());
    return std::stoi(text_.substr(start, pos_ - start));
  }

  // Signed half-integer, optionally wrapped in braces: -3/2, 1, {1/2}.
  HalfInt rational() {
    skip_ws();
    bool braced = try_eat("{");
    int num = integer();
    HalfInt h(num);
    if (try_eat("/")) {
      int den = integer();
      if (den == 2)
        h = HalfInt::from_twice(num);
      else if (den != 1)
        throw ParseError(pos_, "denominator 1 or 2", rest());
    }
    if (braced) expect("}");
    return h;
  }

  std::string name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) throw ParseError(start, "identifier", rest());
    return text_.substr(start, pos_ - start);
  }

  void end() {
    if (!done()) throw ParseError(pos_, "end of input", rest());
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

std::string rat_str(HalfInt h) { return h.str(); }

std::string label_str(const PhiLabel& l) {
  if (l.name == "phi") return "phi";
  return "phi(" + l.name + ")";
}

PhiLabel parse_label(Scanner& sc, const RhoSigmaContext& ctx) {
  sc.expect("phi");
  if (sc.try_eat("(")) {
    std::string n = sc.name();
    sc.expect(")");
    for (const auto& l : ctx.sigma.background)
      if (l.name == n) return l;
    if (ctx.phi.name == n) return ctx.phi;
    return {n, std::nullopt, true};
  }
  return ctx.phi;
}

GLAtom parse_atom(Scanner& sc) {
  if (sc.try_eat("d[")) {
    HalfInt lo = sc.rational();
    sc.expect(",");
    HalfInt hi = sc.rational();
    sc.expect("]");
    GLAtom a = GLAtom::delta(lo, hi);
    try {
      a.validate();
    } catch (const std::exception& e) {
      throw ParseError(sc.pos(), "valid segment", e.what());
    }
    return a;
  }
  if (sc.try_eat("nu")) {
    HalfInt e(1);
    if (sc.try_eat("^")) e = sc.rational();
    sc.expect("rho");
    return GLAtom::single(e);
  }
  if (sc.try_eat("rho")) return GLAtom::single(HalfInt(0));
  throw ParseError(sc.pos(), "atom ('d[..]', 'nu^e rho' or 'rho')", sc.rest());
}

TemperedAtom parse_tail(Scanner& sc) {
  if (sc.try_eat("sigma")) return TemperedAtom::Sigma;
  if (sc.try_eat("ds(1/2)")) return TemperedAtom::DeltaCuspHalf;
  if (sc.try_eat("ds(1)")) return TemperedAtom::DeltaCuspOne;
  if (sc.try_eat("tau+")) return TemperedAtom::TauPlus;
  if (sc.try_eat("tau-")) return TemperedAtom::TauMinus;
  if (sc.try_eat("rho*sigma")) return TemperedAtom::RhoSigma;
  throw ParseError(sc.pos(), "tail (sigma, ds(1/2), ds(1), tau+, tau-, rho*sigma)", sc.rest());
}

}  // namespace

AParameter parse_a_parameter(const std::string& text, const RhoSigmaContext& ctx) {
  Scanner sc(text);
  AParameter psi;
  do {
    if (sc.try_eat("bg")) {
      for (const auto& l : ctx.sigma.background) psi.summands.push_back({l, 1, 1});
      continue;
    }
    PhiLabel label = parse_label(sc, ctx);
    sc.expect("*");
    sc.expect("S");
    int m = sc.integer();
    sc.expect("*");
    sc.expect("S");
    int n = sc.integer();
    if (m < 1 || n < 1) throw ParseError(sc.pos(), "S indices >= 1", sc.rest());
    psi.summands.push_back({label, m, n});
  } while (sc.try_eat("+"));
  sc.end();
  psi.canonicalize();
  psi.validate();
  return psi;
}

LParameter parse_l_parameter(const std::string& text, const RhoSigmaContext& ctx) {
  Scanner sc(text);
  LParameter phi;
  do {
    if (sc.try_eat("bg")) {
      for (const auto& l : ctx.sigma.background) phi.summands.push_back({l, HalfInt(0), 1});
      continue;
    }
    HalfInt twist(0);
    if (sc.try_eat("nu")) {
      sc.expect("^");
      twist = sc.rational();
    }
    PhiLabel label = parse_label(sc, ctx);
    sc.expect("*");
    sc.expect("S");
    int m = sc.integer();
    if (m < 1) throw ParseError(sc.pos(), "S index >= 1", sc.rest());
    phi.summands.push_back({label, twist, m});
  } while (sc.try_eat("+"));
  sc.end();
  phi.canonicalize();
  phi.validate();
  return phi;
}

InducedExpr parse_expr(const std::string& text) {
  Scanner sc(text);
  InducedExpr e;
  // tail-only expression
  {
    Scanner probe = sc;
    try {
      TemperedAtom t = parse_tail(probe);
      probe.end();
      e.tail = t;
      return e;
    } catch (const ParseError&) {
    }
  }
  e.blocks.push_back(parse_atom(sc));
  while (sc.try_eat("x")) e.blocks.push_back(parse_atom(sc));
  sc.expect("|x");
  e.tail = parse_tail(sc);
  sc.end();
  return e;
}

Word parse_word(const std::string& text) {
  Scanner sc(text);
  Word w;
  if (sc.try_eat("sigma")) {
    sc.end();
    return w;
  }
  for (;;) {
    GLAtom a = parse_atom(sc);
    if (a.kind != GLAtom::Kind::Single)
      throw ParseError(sc.pos(), "single factor in word", sc.rest());
    w.push_back(a.seg.lo);
    sc.expect("(x)");
    if (sc.try_eat("sigma")) break;
  }
  sc.end();
  return w;
}

LanglandsData parse_langlands(const std::string& text) {
  Scanner sc(text);
  LanglandsData d;
  sc.expect("Ls(");
  for (;;) {
    Scanner probe = sc;
    try {
      TemperedAtom t = parse_tail(probe);
      probe.expect(")");
      probe.end();
      d.tail = t;
      break;
    } catch (const ParseError&) {
    }
    d.gl_entries.push_back(parse_atom(sc));
    sc.expect(",");
  }
  d.validate();
  return d;
}

std::string print(const AParameter& psi) {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : psi.summands) {
    if (!first) os << " + ";
    first = false;
    if (s.label.name == "bg" && s.m == 1 && s.n == 1)
      os << "bg";
    else
      os << label_str(s.label) << "*S" << s.m << "*S" << s.n;
  }
  if (first) os << "0";
  return os.str();
}

std::string print(const LParameter& phi) {
  std::ostringstream os;
  bool first = true;
  for (const auto& s : phi.summands) {
    if (!first) os << " + ";
    first = false;
    if (s.label.name == "bg" && s.twist == HalfInt(0) && s.m == 1) {
      os << "bg";
      continue;
    }
    if (s.twist != HalfInt(0)) os << "nu^{" << rat_str(s.twist) << "} ";
    os << label_str(s.label) << "*S" << s.m;
  }
  if (first) os << "0";
  return os.str();
}

std::string print(const GLAtom& a) {
  if (a.kind == GLAtom::Kind::Delta)
    return "d[" + rat_str(a.seg.lo) + "," + rat_str(a.seg.hi) + "]";
  HalfInt e = a.seg.lo;
  if (e == HalfInt(0)) return "rho";
  if (e == HalfInt(1)) return "nu rho";
  return "nu^{" + rat_str(e) + "} rho";
}

std::string print(TemperedAtom t) {
  switch (t) {
    case TemperedAtom::Sigma: return "sigma";
    case TemperedAtom::DeltaCuspHalf: return "ds(1/2)";
    case TemperedAtom::DeltaCuspOne: return "ds(1)";
    case TemperedAtom::TauPlus: return "tau+";
    case TemperedAtom::TauMinus: return "tau-";
    case TemperedAtom::RhoSigma: return "rho*sigma";
  }
  return "?";
}

std::string print(const InducedExpr& e) {
  std::ostringstream os;
  for (std::size_t i = 0; i < e.blocks.size(); ++i) {
    if (i) os << " x ";
    os << print(e.blocks[i]);
  }
  if (!e.blocks.empty()) os << " |x ";
  os << print(e.tail);
  return os.str();
}

std::string print(const Word& w) {
  std::ostringstream os;
  for (const auto& e : w) os << print(GLAtom::single(e)) << " (x) ";
  os << "sigma";
  return os.str();
}

std::string print(const FormalSum& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : s.terms()) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c.str() << "·";
    os << print(w);
  }
  if (first) os << "0";
  return os.str();
}

std::string print(const LanglandsData& d) {
  std::ostringstream os;
  os << "Ls(";
  for (const auto& a : d.gl_entries) os << print(a) << ", ";
  os << print(d.tail) << ")";
  return os.str();
}

std::string print(const DualOutcome& o) {
  if (o.is_a_param()) return "A: " + print(o.a_param());
  return "L: " + print(o.l_param());
}

}  // namespace aubert
