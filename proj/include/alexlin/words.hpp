// Free-group words, the integral group ring, Fox derivatives, and
// rewriting of augmentation-degree-zero words into kernel generators
// a_v = x^v a x^-v (Reidemeister-Schreier with transversal {x^n}).
#pragma once

#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "alexlin/bigint.hpp"
#include "alexlin/util.hpp"

namespace alexlin {

struct Letter {
  int gen = 0;   // index into the ambient generator list
  int exp = 1;   // +1 or -1
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word in a free group. The empty word is the identity.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters) { append_all(letters); }
  static FreeWord generator(int g, int exp = 1) {
    FreeWord w;
    w.append(Letter{g, exp});
    return w;
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    FreeWord r = a;
    r.append_all(b.letters_);
    return r;
  }

  FreeWord inverse() const {
    FreeWord r;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      r.letters_.push_back(Letter{it->gen, -it->exp});
    return r;  // the reverse of a reduced word is reduced
  }

  FreeWord pow(int e) const {
    FreeWord base = e >= 0 ? *this : inverse();
    FreeWord r;
    for (int i = 0; i < (e >= 0 ? e : -e); ++i) r = r * base;
    return r;
  }

  friend auto operator<=>(const FreeWord& a, const FreeWord& b) {
    if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  std::string str(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& l : letters_) {
      if (!first) os << " ";
      first = false;
      os << names.at(static_cast<std::size_t>(l.gen));
      if (l.exp != 1) os << "^" << l.exp;
    }
    return os.str();
  }

 private:
  void append(const Letter& l) {
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
  void append_all(const std::vector<Letter>& ls) {
    for (const auto& l : ls) {
      if (l.exp != 1 && l.exp != -1) throw input_error("FreeWord: letter exponent must be ±1");
      append(l);
    }
  }

  std::vector<Letter> letters_;
};

/// Finite Z-linear combination of freely reduced words.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  static GroupRingElement zero() { return {}; }
  static GroupRingElement of(const FreeWord& w, Int c = 1) {
    GroupRingElement e;
    e.add(w, c);
    return e;
  }

  const std::map<FreeWord, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const FreeWord& w, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, c);
    return r;
  }
  friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r = a;
    for (const auto& [w, c] : b.terms_) r.add(w, -c);
    return r;
  }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement r;
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) r.add(u * v, cu * cv);
    return r;
  }
  friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

  /// Left-multiply every term by a word.
  GroupRingElement left_mul(const FreeWord& u) const {
    GroupRingElement r;
    for (const auto& [w, c] : terms_) r.add(u * w, c);
    return r;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      Int a = int_abs(c);
      if (a != 1) os << a.str() << "*";
      os << w.str(names);
    }
    return os.str();
  }

 private:
  std::map<FreeWord, Int> terms_;
};

/// Fox derivative d(w)/d(g): dg/dg = 1, dg^-1/dg = -g^-1, dh/dg = 0, and
/// d(uv)/dg = du/dg + u * dv/dg. Computed by a right-to-left fold.
inline GroupRingElement fox_derivative(const FreeWord& w, int gen, int n_gens) {
  if (gen < 0 || gen >= n_gens) throw input_error("fox_derivative: unknown generator id");
  GroupRingElement acc;
  const auto& ls = w.letters();
  for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
    acc = acc.left_mul(FreeWord::generator(it->gen, it->exp));
    if (it->gen == gen) {
      if (it->exp == 1)
        acc.add(FreeWord(), 1);
      else
        acc.add(FreeWord::generator(it->gen, -1), -1);
    }
  }
  return acc;
}

struct KernelLetter {
  int gen = 0;    // base generator index (within the kernel generator list)
  long shift = 0; // subscript v in a_v = x^v a x^-v
  int exp = 1;
  friend auto operator<=>(const KernelLetter&, const KernelLetter&) = default;
};

/// Freely reduced word in the kernel generators a_v, b_v, ...
class KernelWord {
 public:
  KernelWord() = default;
  explicit KernelWord(std::vector<KernelLetter> letters) {
    for (const auto& l : letters) append(l);
  }

  const std::vector<KernelLetter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }

  void append(const KernelLetter& l) {
    if (l.exp != 1 && l.exp != -1) throw input_error("KernelWord: letter exponent must be ±1");
    if (!letters_.empty() && letters_.back().gen == l.gen &&
        letters_.back().shift == l.shift && letters_.back().exp == -l.exp)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  friend KernelWord operator*(const KernelWord& a, const KernelWord& b) {
    KernelWord r = a;
    for (const auto& l : b.letters_) r.append(l);
    return r;
  }

  KernelWord inverse() const {
    KernelWord r;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      r.letters_.push_back(KernelLetter{it->gen, it->shift, -it->exp});
    return r;
  }

  friend auto operator<=>(const KernelWord&, const KernelWord&) = default;

  std::string str(const std::vector<std::string>& names) const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& l : letters_) {
      if (!first) os << " ";
      first = false;
      os << names.at(static_cast<std::size_t>(l.gen)) << "_" << l.shift;
      if (l.exp != 1) os << "^" << l.exp;
    }
    return os.str();
  }

 private:
  std::vector<KernelLetter> letters_;
};

/// Adds k to every subscript (the k-th power of conjugation by x).
inline KernelWord shift_kernel_word(const KernelWord& w, long k) {
  std::vector<KernelLetter> ls = w.letters();
  for (auto& l : ls) l.shift += k;
  return KernelWord(std::move(ls));
}

/// Rewrites an augmentation-degree-zero word over generators (x, a, b, ...)
/// into kernel generators. `degrees[g]` is the augmentation degree of
/// generator g; the distinguished generator has degree 1 and every other
/// generator must have degree 0. `kernel_index[g]` maps a degree-zero
/// generator to its position in the kernel generator list.
inline KernelWord schreier_rewrite(const FreeWord& w, int distinguished,
                                   const std::vector<int>& degrees,
                                   const std::vector<int>& kernel_index) {
  long nu = 0;
  KernelWord out;
  for (const auto& l : w.letters()) {
    int d = degrees.at(static_cast<std::size_t>(l.gen));
    if (l.gen == distinguished) {
      nu += l.exp * d;
      continue;
    }
    if (d != 0)
      throw input_error("schreier_rewrite: presentation not in degree-zero form");
    out.append(KernelLetter{kernel_index.at(static_cast<std::size_t>(l.gen)), nu, l.exp});
  }
  if (nu != 0) throw input_error("schreier_rewrite: word is not in the kernel (degree != 0)");
  return out;
}

}  // namespace alexlin
