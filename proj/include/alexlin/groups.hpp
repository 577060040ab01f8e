// Group presentations with an augmentation onto Z, the input DSL, the
// degree-zero normal form, and the induced presentation of the kernel.
#pragma once

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "alexlin/polymatrix.hpp"
#include "alexlin/words.hpp"

namespace alexlin {

struct Presentation {
  std::vector<std::string> generators;
  std::vector<FreeWord> relators;

  int gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (generators[i] == name) return static_cast<int>(i);
    return -1;
  }
};

/// Generators of the amalgamated subgroup U of an HNN decomposition
/// G = <B, x | x a x^-1 = phi(a), a in U>, supplied as kernel words.
struct HnnData {
  std::vector<int> base_gens;           // generators of B (kernel gen indices)
  std::vector<KernelWord> amalgamated;  // generators of U
};

struct Metadata {
  bool knot = false;     // 3-manifold with torus boundary, x peripheral, knot-like
  bool fibered = false;
  std::optional<int> genus;
  std::optional<double> growth_rate;  // growth rate of conjugation by x
};

enum class LongitudeKind { none, word, second_commutator };

/// A finitely presented group G, an epimorphism eps: G -> Z, and a
/// distinguished generator mapping to 1.
struct AugmentedGroupSystem {
  Presentation pres;
  std::vector<int> epsilon;  // per generator
  int distinguished = 0;
  LongitudeKind longitude_kind = LongitudeKind::none;
  FreeWord longitude;
  std::optional<HnnData> hnn;
  Metadata meta;

  long degree(const FreeWord& w) const {
    long d = 0;
    for (const auto& l : w.letters()) d += l.exp * epsilon.at(static_cast<std::size_t>(l.gen));
    return d;
  }

  bool is_normalized() const {
    for (std::size_t g = 0; g < epsilon.size(); ++g)
      if (static_cast<int>(g) != distinguished && epsilon[g] != 0) return false;
    return true;
  }

  /// Non-distinguished generators in declaration order; these become the
  /// kernel generators once the system is normalized.
  std::vector<int> base_generators() const {
    std::vector<int> out;
    for (std::size_t g = 0; g < pres.generators.size(); ++g)
      if (static_cast<int>(g) != distinguished) out.push_back(static_cast<int>(g));
    return out;
  }

  std::vector<std::string> base_names() const {
    std::vector<std::string> out;
    for (int g : base_generators()) out.push_back(pres.generators[static_cast<std::size_t>(g)]);
    return out;
  }

  void validate() const {
    if (pres.generators.empty()) throw input_error("system has no generators");
    if (pres.generators.size() <= pres.relators.size())
      throw input_error("the number of generators must exceed the number of relators");
    if (epsilon.size() != pres.generators.size())
      throw input_error("every generator needs an eps value");
    if (epsilon.at(static_cast<std::size_t>(distinguished)) != 1)
      throw input_error("distinguished generator must have eps = 1");
    for (std::size_t i = 0; i < pres.relators.size(); ++i) {
      if (pres.relators[i].is_identity())
        throw input_error("relator " + std::to_string(i + 1) + " is trivial");
      if (degree(pres.relators[i]) != 0)
        throw input_error("relator " + std::to_string(i + 1) +
                          " has nonzero eps degree; eps does not extend to a homomorphism");
    }
    if (longitude_kind == LongitudeKind::word && degree(longitude) != 0)
      throw input_error("longitude is not in the kernel (eps degree != 0)");
    if (hnn && !is_normalized())
      throw input_error("hnn data requires a presentation with degree-zero generators");
  }
};

/// Kernel presentation K = <a_v, b_v, ... | r_v, ...>: one relator template
/// per relator of G (the v = 0 instance); all others are its shifts.
struct KernelPresentation {
  std::vector<std::string> base_names;
  std::vector<KernelWord> templates;
};

namespace detail {

struct Token {
  enum Kind { ident, integer, real, symbol, kk, eof } kind = eof;
  std::string text;
  long ivalue = 0;
  double rvalue = 0;
  int line = 0, col = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) {}

  Token next() {
    skip_ws();
    Token t;
    t.line = line_;
    t.col = col_;
    if (pos_ >= text_.size()) return t;
    char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c))) {
      t.kind = Token::ident;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                     text_[pos_] == '\'')) {
        t.text += text_[pos_];
        advance();
      }
      return t;
    }
    if (c == '[') {
      std::string lit;
      while (pos_ < text_.size() && text_[pos_] != ']') {
        lit += text_[pos_];
        advance();
      }
      if (pos_ < text_.size()) {
        lit += ']';
        advance();
      }
      if (lit != "[K,K]") fail(t, "expected [K,K]");
      t.kind = Token::kk;
      t.text = lit;
      return t;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      num += c;
      advance();
      bool isreal = false;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(d))) {
          num += d;
        } else if ((d == '.' || d == 'e' || d == 'E') ||
                   ((d == '+' || d == '-') && (num.back() == 'e' || num.back() == 'E'))) {
          num += d;
          isreal = true;
        } else {
          break;
        }
        advance();
      }
      if (num == "-") fail(t, "stray '-'");
      if (isreal) {
        t.kind = Token::real;
        t.rvalue = std::stod(num);
      } else {
        t.kind = Token::integer;
        t.ivalue = std::stol(num);
      }
      t.text = num;
      return t;
    }
    t.kind = Token::symbol;
    t.text = std::string(1, c);
    advance();
    return t;
  }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    std::ostringstream os;
    os << "parse error at line " << at.line << ", column " << at.col << ": " << msg;
    throw input_error(os.str());
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

}  // namespace detail

/// Parses the presentation DSL. Statements end with ';', comments start
/// with '#'. The first generator with eps = 1 is the distinguished one.
///
///   gens x a;              eps x=1 a=0;
///   rel x a x^-1 a^-2;     longitude <word>;  |  longitude [K,K];
///   hnn base a;            amalg a_0, a_1 b_0^-1;
///   meta knot; meta genus 2; meta fibered; meta gr 2.618;
inline AugmentedGroupSystem parse_dsl(const std::string& text) {
  detail::Lexer lex(text);
  AugmentedGroupSystem sys;
  std::vector<std::pair<std::string, int>> eps_pairs;
  std::vector<std::vector<detail::Token>> rel_stmts, long_stmts, amalg_stmts, hnn_stmts;

  detail::Token t = lex.next();
  auto expect_semi = [&](detail::Token& tok) {
    if (!(tok.kind == detail::Token::symbol && tok.text == ";"))
      lex.fail(tok, "expected ';'");
    tok = lex.next();
  };

  while (t.kind != detail::Token::eof) {
    if (t.kind != detail::Token::ident) lex.fail(t, "expected a statement keyword");
    std::string kw = t.text;
    t = lex.next();
    if (kw == "gens") {
      while (t.kind == detail::Token::ident) {
        if (sys.pres.gen_index(t.text) >= 0) lex.fail(t, "duplicate generator '" + t.text + "'");
        sys.pres.generators.push_back(t.text);
        t = lex.next();
      }
      expect_semi(t);
    } else if (kw == "eps") {
      while (t.kind == detail::Token::ident) {
        std::string name = t.text;
        t = lex.next();
        if (!(t.kind == detail::Token::symbol && t.text == "=")) lex.fail(t, "expected '='");
        t = lex.next();
        if (t.kind != detail::Token::integer) lex.fail(t, "expected an integer");
        eps_pairs.emplace_back(name, static_cast<int>(t.ivalue));
        t = lex.next();
      }
      expect_semi(t);
    } else if (kw == "rel" || kw == "longitude" || kw == "amalg" || kw == "hnn") {
      std::vector<detail::Token> body;
      while (!(t.kind == detail::Token::symbol && t.text == ";")) {
        if (t.kind == detail::Token::eof) lex.fail(t, "unterminated statement");
        body.push_back(t);
        t = lex.next();
      }
      expect_semi(t);
      if (kw == "rel") rel_stmts.push_back(std::move(body));
      else if (kw == "longitude") long_stmts.push_back(std::move(body));
      else if (kw == "amalg") amalg_stmts.push_back(std::move(body));
      else hnn_stmts.push_back(std::move(body));
    } else if (kw == "meta") {
      if (t.kind != detail::Token::ident) lex.fail(t, "expected a metadata key");
      std::string key = t.text;
      t = lex.next();
      if (key == "knot") {
        sys.meta.knot = true;
      } else if (key == "fibered") {
        sys.meta.fibered = true;
      } else if (key == "genus") {
        if (t.kind != detail::Token::integer) lex.fail(t, "expected an integer genus");
        sys.meta.genus = static_cast<int>(t.ivalue);
        t = lex.next();
      } else if (key == "gr") {
        if (t.kind == detail::Token::real) sys.meta.growth_rate = t.rvalue;
        else if (t.kind == detail::Token::integer) sys.meta.growth_rate = static_cast<double>(t.ivalue);
        else lex.fail(t, "expected a number");
        t = lex.next();
      } else {
        lex.fail(t, "unknown metadata key '" + key + "'");
      }
      expect_semi(t);
    } else {
      lex.fail(t, "unknown statement '" + kw + "'");
    }
  }

  if (sys.pres.generators.empty()) throw input_error("missing 'gens' statement");
  sys.epsilon.assign(sys.pres.generators.size(), 0);
  std::vector<bool> have(sys.pres.generators.size(), false);
  for (const auto& [name, value] : eps_pairs) {
    int g = sys.pres.gen_index(name);
    if (g < 0) throw input_error("eps for unknown generator '" + name + "'");
    sys.epsilon[static_cast<std::size_t>(g)] = value;
    have[static_cast<std::size_t>(g)] = true;
  }
  for (std::size_t g = 0; g < have.size(); ++g)
    if (!have[g]) throw input_error("missing eps for generator '" + sys.pres.generators[g] + "'");

  sys.distinguished = -1;
  for (std::size_t g = 0; g < sys.epsilon.size(); ++g)
    if (sys.epsilon[g] == 1) {
      sys.distinguished = static_cast<int>(g);
      break;
    }
  if (sys.distinguished < 0) throw input_error("no generator with eps = 1");

  auto parse_word = [&](const std::vector<detail::Token>& toks) {
    std::vector<Letter> letters;
    std::size_t i = 0;
    while (i < toks.size()) {
      const auto& tok = toks[i];
      if (tok.kind != detail::Token::ident) lex.fail(tok, "expected a generator name");
      int g = sys.pres.gen_index(tok.text);
      if (g < 0) lex.fail(tok, "unknown generator '" + tok.text + "'");
      long e = 1;
      ++i;
      if (i < toks.size() && toks[i].kind == detail::Token::symbol && toks[i].text == "^") {
        ++i;
        if (i >= toks.size() || toks[i].kind != detail::Token::integer)
          lex.fail(toks[i - 1], "expected an integer exponent");
        e = toks[i].ivalue;
        ++i;
      }
      for (long k = 0; k < (e >= 0 ? e : -e); ++k) letters.push_back(Letter{g, e >= 0 ? 1 : -1});
    }
    return FreeWord(std::move(letters));
  };

  for (const auto& body : rel_stmts) {
    if (body.empty()) throw input_error("empty relator");
    sys.pres.relators.push_back(parse_word(body));
  }

  if (long_stmts.size() > 1) throw input_error("multiple longitude statements");
  if (!long_stmts.empty()) {
    const auto& body = long_stmts[0];
    if (body.size() == 1 && body[0].kind == detail::Token::kk) {
      sys.longitude_kind = LongitudeKind::second_commutator;
    } else {
      sys.longitude_kind = LongitudeKind::word;
      sys.longitude = parse_word(body);
    }
  }

  if (!hnn_stmts.empty() || !amalg_stmts.empty()) {
    HnnData hnn;
    std::vector<int> base_of_gen(sys.pres.generators.size(), -1);
    {
      int k = 0;
      for (std::size_t g = 0; g < sys.pres.generators.size(); ++g)
        if (static_cast<int>(g) != sys.distinguished) base_of_gen[g] = k++;
    }
    for (const auto& body : hnn_stmts) {
      std::size_t i = 0;
      if (body.empty() || body[0].kind != detail::Token::ident || body[0].text != "base")
        throw input_error("hnn statement must start with 'base'");
      for (i = 1; i < body.size(); ++i) {
        if (body[i].kind != detail::Token::ident) lex.fail(body[i], "expected a generator name");
        int g = sys.pres.gen_index(body[i].text);
        if (g < 0 || g == sys.distinguished) lex.fail(body[i], "hnn base must list kernel generators");
        hnn.base_gens.push_back(base_of_gen[static_cast<std::size_t>(g)]);
      }
    }
    for (const auto& body : amalg_stmts) {
      std::vector<KernelLetter> letters;
      auto flush = [&] {
        if (letters.empty()) throw input_error("empty kernel word in amalg");
        hnn.amalgamated.push_back(KernelWord(letters));
        letters.clear();
      };
      std::size_t i = 0;
      while (i < body.size()) {
        if (body[i].kind == detail::Token::symbol && body[i].text == ",") {
          flush();
          ++i;
          continue;
        }
        if (body[i].kind != detail::Token::ident) lex.fail(body[i], "expected a generator name");
        int g = sys.pres.gen_index(body[i].text);
        if (g < 0 || g == sys.distinguished) lex.fail(body[i], "amalg words use kernel generators");
        ++i;
        if (!(i < body.size() && body[i].kind == detail::Token::symbol && body[i].text == "_"))
          lex.fail(body[i - 1], "expected '_<shift>' on kernel generator");
        ++i;
        if (i >= body.size() || body[i].kind != detail::Token::integer)
          lex.fail(body[i - 1], "expected an integer shift");
        long shift = body[i].ivalue;
        ++i;
        long e = 1;
        if (i < body.size() && body[i].kind == detail::Token::symbol && body[i].text == "^") {
          ++i;
          if (i >= body.size() || body[i].kind != detail::Token::integer)
            lex.fail(body[i - 1], "expected an integer exponent");
          e = body[i].ivalue;
          ++i;
        }
        for (long k = 0; k < (e >= 0 ? e : -e); ++k)
          letters.push_back(KernelLetter{base_of_gen[static_cast<std::size_t>(g)], shift,
                                         e >= 0 ? 1 : -1});
      }
      flush();
    }
    sys.hnn = std::move(hnn);
  }

  sys.validate();
  return sys;
}

inline std::string print_dsl(const AugmentedGroupSystem& sys) {
  std::ostringstream os;
  os << "gens";
  for (const auto& g : sys.pres.generators) os << " " << g;
  os << ";\neps";
  for (std::size_t g = 0; g < sys.pres.generators.size(); ++g)
    os << " " << sys.pres.generators[g] << "=" << sys.epsilon[g];
  os << ";\n";
  for (const auto& r : sys.pres.relators) os << "rel " << r.str(sys.pres.generators) << ";\n";
  if (sys.longitude_kind == LongitudeKind::word)
    os << "longitude " << sys.longitude.str(sys.pres.generators) << ";\n";
  else if (sys.longitude_kind == LongitudeKind::second_commutator)
    os << "longitude [K,K];\n";
  if (sys.hnn) {
    auto names = sys.base_names();
    os << "hnn base";
    for (int b : sys.hnn->base_gens) os << " " << names[static_cast<std::size_t>(b)];
    os << ";\namalg";
    for (std::size_t i = 0; i < sys.hnn->amalgamated.size(); ++i)
      os << (i ? ", " : " ") << sys.hnn->amalgamated[i].str(names);
    os << ";\n";
  }
  if (sys.meta.knot) os << "meta knot;\n";
  if (sys.meta.fibered) os << "meta fibered;\n";
  if (sys.meta.genus) os << "meta genus " << *sys.meta.genus << ";\n";
  if (sys.meta.growth_rate) {
    os << "meta gr ";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", *sys.meta.growth_rate);
    os << buf << ";\n";
  }
  return os.str();
}

/// Tietze-transforms the presentation so every generator except the
/// distinguished one has eps degree 0 (each y with eps(y) = d becomes
/// a = y x^-d, keeping the old name). Idempotent.
inline AugmentedGroupSystem normalize(const AugmentedGroupSystem& sys) {
  AugmentedGroupSystem out = sys;
  for (std::size_t g = 0; g < out.epsilon.size(); ++g) {
    if (static_cast<int>(g) == out.distinguished || out.epsilon[g] == 0) continue;
    const int d = out.epsilon[g];
    // y = a x^d: replace y by that word everywhere, then eps(a) = 0.
    FreeWord repl = FreeWord::generator(static_cast<int>(g)) *
                    FreeWord::generator(out.distinguished).pow(d);
    auto substitute = [&](const FreeWord& w) {
      FreeWord r;
      for (const auto& l : w.letters()) {
        if (l.gen == static_cast<int>(g))
          r = r * (l.exp == 1 ? repl : repl.inverse());
        else
          r = r * FreeWord::generator(l.gen, l.exp);
      }
      return r;
    };
    for (auto& rel : out.pres.relators) rel = substitute(rel);
    if (out.longitude_kind == LongitudeKind::word) out.longitude = substitute(out.longitude);
    out.epsilon[g] = 0;
  }
  out.validate();
  return out;
}

/// Kernel presentation via Reidemeister-Schreier rewriting of each relator.
inline KernelPresentation kernel_presentation(const AugmentedGroupSystem& sys) {
  if (!sys.is_normalized())
    throw input_error("kernel_presentation: system must be normalized first");
  KernelPresentation kp;
  kp.base_names = sys.base_names();
  std::vector<int> kernel_index(sys.pres.generators.size(), -1);
  {
    int k = 0;
    for (std::size_t g = 0; g < sys.pres.generators.size(); ++g)
      if (static_cast<int>(g) != sys.distinguished) kernel_index[g] = k++;
  }
  for (const auto& rel : sys.pres.relators)
    kp.templates.push_back(schreier_rewrite(rel, sys.distinguished, sys.epsilon, kernel_index));
  return kp;
}

/// The classical (untwisted) Alexander polynomial: order of the Jacobian
/// with the distinguished generator's column removed, entries evaluated by
/// w -> t^deg(w). Works on any presentation, normalized or not.
inline LaurentPoly untwisted_alexander(const AugmentedGroupSystem& sys, std::size_t threads = 1) {
  const std::size_t n_rel = sys.pres.relators.size();
  const auto cols = sys.base_generators();
  PolyMatrix m(n_rel, cols.size());
  const int n_gens = static_cast<int>(sys.pres.generators.size());
  for (std::size_t i = 0; i < n_rel; ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      GroupRingElement d = fox_derivative(sys.pres.relators[i], cols[j], n_gens);
      LaurentPoly e;
      for (const auto& [w, c] : d.terms()) e += LaurentPoly::monomial(c, sys.degree(w));
      m.at(i, j) = e;
    }
  }
  return order_delta0(m, threads);
}

}  // namespace alexlin
