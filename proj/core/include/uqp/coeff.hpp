#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "uqp/big.hpp"

namespace uqp::qseries {

/// Sparse univariate Laurent polynomial over the rationals.
/// Used for polynomials in the formal level k.
class LPoly {
 public:
  std::map<int, BigRat> t;  // exponent -> coefficient, no zero entries

  LPoly() = default;
  static LPoly zero() { return LPoly(); }
  static LPoly con(const BigRat& c) {
    LPoly p;
    if (c != 0) p.t[0] = c;
    return p;
  }
  static LPoly mono(int e, const BigRat& c) {
    LPoly p;
    if (c != 0) p.t[e] = c;
    return p;
  }
  static LPoly var() { return mono(1, 1); }  // k itself

  bool isZero() const { return t.empty(); }
  bool isConstant() const { return t.empty() || (t.size() == 1 && t.begin()->first == 0); }
  BigRat constant() const {
    if (t.empty()) return 0;
    if (!isConstant()) throw Error("LPoly::constant on non-constant");
    return t.begin()->second;
  }
  int degHi() const { return t.empty() ? 0 : t.rbegin()->first; }
  int degLo() const { return t.empty() ? 0 : t.begin()->first; }

  void addTerm(int e, const BigRat& c) {
    if (c == 0) return;
    auto it = t.find(e);
    if (it == t.end()) {
      t[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }

  friend LPoly operator+(const LPoly& a, const LPoly& b) {
    LPoly r = a;
    for (auto& [e, c] : b.t) r.addTerm(e, c);
    return r;
  }
  friend LPoly operator-(const LPoly& a, const LPoly& b) {
    LPoly r = a;
    for (auto& [e, c] : b.t) r.addTerm(e, -c);
    return r;
  }
  friend LPoly operator-(const LPoly& a) {
    LPoly r;
    for (auto& [e, c] : a.t) r.t[e] = -c;
    return r;
  }
  friend LPoly operator*(const LPoly& a, const LPoly& b) {
    LPoly r;
    for (auto& [ea, ca] : a.t)
      for (auto& [eb, cb] : b.t) r.addTerm(ea + eb, ca * cb);
    return r;
  }
  LPoly scaled(const BigRat& c) const {
    LPoly r;
    if (c == 0) return r;
    for (auto& [e, cc] : t) r.t[e] = cc * c;
    return r;
  }
  LPoly shifted(int e) const {
    LPoly r;
    for (auto& [ee, c] : t) r.t[ee + e] = c;
    return r;
  }
  friend bool operator==(const LPoly& a, const LPoly& b) { return a.t == b.t; }
  friend bool operator!=(const LPoly& a, const LPoly& b) { return !(a.t == b.t); }
  friend bool operator<(const LPoly& a, const LPoly& b) { return a.t < b.t; }

  /// Exact division; nullopt when b does not divide a.
  static std::optional<LPoly> divExact(const LPoly& a, const LPoly& b) {
    if (b.isZero()) throw Error("LPoly division by zero");
    if (a.isZero()) return LPoly();
    // Normalize Laurent shifts away.
    LPoly aa = a.shifted(-a.degLo());
    LPoly bb = b.shifted(-b.degLo());
    int shift = a.degLo() - b.degLo();
    LPoly q, rem = aa;
    while (!rem.isZero()) {
      int er = rem.degHi(), eb = bb.degHi();
      if (er < eb) return std::nullopt;
      BigRat c = rem.t.rbegin()->second / bb.t.rbegin()->second;
      LPoly m = LPoly::mono(er - eb, c);
      q = q + m;
      rem = rem - m * bb;
    }
    return q.shifted(shift);
  }

  /// Polynomial gcd (monic), after clearing Laurent shifts.
  static LPoly gcd(const LPoly& a, const LPoly& b) {
    LPoly x = a.isZero() ? a : a.shifted(-a.degLo());
    LPoly y = b.isZero() ? b : b.shifted(-b.degLo());
    while (!y.isZero()) {
      // remainder of x by y
      LPoly rem = x;
      while (!rem.isZero() && rem.degHi() >= y.degHi()) {
        BigRat c = rem.t.rbegin()->second / y.t.rbegin()->second;
        rem = rem - LPoly::mono(rem.degHi() - y.degHi(), c) * y;
      }
      x = y;
      y = rem;
    }
    if (x.isZero()) return x;
    return x.scaled(BigRat(1) / x.t.rbegin()->second);
  }

  BigRat evalAt(const BigRat& k0) const {
    BigRat acc = 0;
    for (auto& [e, c] : t) {
      if (e < 0) throw Error("LPoly::evalAt negative exponent");
      BigRat p = 1;
      for (int i = 0; i < e; i++) p *= k0;
      acc += c * p;
    }
    return acc;
  }

  std::string str(const std::string& v = "k") const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : t) {
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      BigRat ac = abs(c);
      if (ac != 1 || e == 0) os << ratStr(ac);
      if (e != 0) {
        if (ac != 1) os << "*";
        os << v;
        if (e != 1) os << "^" << e;
      }
      first = false;
    }
    return os.str();
  }
};

/// Rational function of the formal level k, kept fully reduced with monic
/// denominator so equal values have equal representations.
class RatK {
 public:
  LPoly num, den;  // den monic, gcd(num,den)=1, den lowest exponent 0

  RatK() : num(), den(LPoly::con(1)) {}
  RatK(const LPoly& n, const LPoly& d) : num(n), den(d) { normalize(); }
  static RatK fromRat(const BigRat& c) { return RatK(LPoly::con(c), LPoly::con(1)); }
  static RatK fromPoly(const LPoly& p) { return RatK(p, LPoly::con(1)); }
  static RatK k() { return fromPoly(LPoly::var()); }

  bool isZero() const { return num.isZero(); }
  bool isRational() const { return num.isConstant() && den.isConstant(); }
  BigRat asRational() const {
    if (!isRational()) throw Error("RatK::asRational on k-dependent value: " + str());
    if (num.isZero()) return 0;
    return num.constant() / den.constant();
  }
  bool isPoly() const { return den.isConstant(); }
  LPoly asPoly() const {
    if (!isPoly()) throw Error("RatK::asPoly on non-polynomial value: " + str());
    return num.scaled(BigRat(1) / den.constant());
  }

  void normalize() {
    if (den.isZero()) throw Error("RatK: zero denominator");
    if (num.isZero()) {
      den = LPoly::con(1);
      return;
    }
    // clear Laurent shifts (k never appears with negative exponent here, but be safe)
    int sh = std::min(num.degLo(), den.degLo());
    num = num.shifted(-sh + 0);
    den = den.shifted(-sh + 0);
    LPoly g = LPoly::gcd(num, den);
    if (!g.isConstant() || g.constant() != 1) {
      num = *LPoly::divExact(num, g);
      den = *LPoly::divExact(den, g);
    }
    BigRat lead = den.t.rbegin()->second;
    num = num.scaled(BigRat(1) / lead);
    den = den.scaled(BigRat(1) / lead);
  }

  friend RatK operator+(const RatK& a, const RatK& b) { return RatK(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend RatK operator-(const RatK& a, const RatK& b) { return RatK(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend RatK operator-(const RatK& a) { RatK r = a; r.num = -r.num; return r; }
  friend RatK operator*(const RatK& a, const RatK& b) { return RatK(a.num * b.num, a.den * b.den); }
  friend RatK operator/(const RatK& a, const RatK& b) {
    if (b.isZero()) throw Error("RatK division by zero");
    return RatK(a.num * b.den, a.den * b.num);
  }
  friend bool operator==(const RatK& a, const RatK& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const RatK& a, const RatK& b) { return !(a == b); }
  friend bool operator<(const RatK& a, const RatK& b) {
    if (a.num != b.num) return a.num < b.num;
    return a.den < b.den;
  }

  std::string str() const {
    if (den.isConstant() && den.constant() == 1) return num.str();
    return "(" + num.str() + ")/(" + den.str() + ")";
  }
};

/// Exponent key of a monomial q^{dq/2} * (q^k)^{dk/2}; exponents stored doubled.
struct QExp {
  int dq = 0;
  int dk = 0;
  friend bool operator<(const QExp& a, const QExp& b) {
    if (a.dq != b.dq) return a.dq < b.dq;
    return a.dk < b.dk;
  }
  friend bool operator==(const QExp& a, const QExp& b) { return a.dq == b.dq && a.dk == b.dk; }
  QExp operator+(const QExp& o) const { return {dq + o.dq, dk + o.dk}; }
  QExp operator-(const QExp& o) const { return {dq - o.dq, dk - o.dk}; }
  QExp operator-() const { return {-dq, -dk}; }
};

/// Sparse Laurent polynomial in q^{1/2} and q^{k/2} over the rationals.
class QKPoly {
 public:
  std::map<QExp, BigRat> t;

  QKPoly() = default;
  static QKPoly zero() { return QKPoly(); }
  static QKPoly con(const BigRat& c) {
    QKPoly p;
    if (c != 0) p.t[{0, 0}] = c;
    return p;
  }
  static QKPoly mono(int dq, int dk, const BigRat& c = 1) {
    QKPoly p;
    if (c != 0) p.t[{dq, dk}] = c;
    return p;
  }
  static QKPoly one() { return con(1); }

  bool isZero() const { return t.empty(); }
  bool isConstant() const { return t.empty() || (t.size() == 1 && t.begin()->first == QExp{0, 0}); }
  bool isMonomial() const { return t.size() == 1; }

  void addTerm(QExp e, const BigRat& c) {
    if (c == 0) return;
    auto it = t.find(e);
    if (it == t.end()) {
      t[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }

  friend QKPoly operator+(const QKPoly& a, const QKPoly& b) {
    QKPoly r = a;
    for (auto& [e, c] : b.t) r.addTerm(e, c);
    return r;
  }
  friend QKPoly operator-(const QKPoly& a, const QKPoly& b) {
    QKPoly r = a;
    for (auto& [e, c] : b.t) r.addTerm(e, -c);
    return r;
  }
  friend QKPoly operator-(const QKPoly& a) {
    QKPoly r;
    for (auto& [e, c] : a.t) r.t[e] = -c;
    return r;
  }
  friend QKPoly operator*(const QKPoly& a, const QKPoly& b) {
    QKPoly r;
    for (auto& [ea, ca] : a.t)
      for (auto& [eb, cb] : b.t) r.addTerm(ea + eb, ca * cb);
    return r;
  }
  QKPoly scaled(const BigRat& c) const {
    QKPoly r;
    if (c == 0) return r;
    for (auto& [e, cc] : t) r.t[e] = cc * c;
    return r;
  }
  QKPoly shifted(QExp e) const {
    QKPoly r;
    for (auto& [ee, c] : t) r.t[ee + e] = c;
    return r;
  }
  QKPoly pow(int n) const {
    if (n < 0) throw Error("QKPoly::pow negative");
    QKPoly r = one();
    QKPoly b = *this;
    while (n) {
      if (n & 1) r = r * b;
      b = b * b;
      n >>= 1;
    }
    return r;
  }
  friend bool operator==(const QKPoly& a, const QKPoly& b) { return a.t == b.t; }
  friend bool operator!=(const QKPoly& a, const QKPoly& b) { return !(a.t == b.t); }
  friend bool operator<(const QKPoly& a, const QKPoly& b) { return a.t < b.t; }

  QExp lowExp() const {
    QExp lo{0, 0};
    bool first = true;
    for (auto& [e, c] : t) {
      (void)c;
      if (first) {
        lo = e;
        first = false;
      } else {
        lo.dq = std::min(lo.dq, e.dq);
        lo.dk = std::min(lo.dk, e.dk);
      }
    }
    return lo;
  }

  /// Exact division in the Laurent ring; nullopt if not divisible.
  static std::optional<QKPoly> divExact(const QKPoly& a, const QKPoly& b);

  std::string str() const;
};

/// Exact scalar: fraction of QKPolys. Lazily reduced; equality is exact
/// cross-multiplication and never depends on canonical form.
class CoeffElem {
 public:
  QKPoly num, den;

  CoeffElem() : num(), den(QKPoly::one()) {}
  CoeffElem(QKPoly n, QKPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }
  static CoeffElem fromRat(const BigRat& c) { return CoeffElem(QKPoly::con(c), QKPoly::one()); }
  static CoeffElem fromPoly(const QKPoly& p) { return CoeffElem(p, QKPoly::one()); }
  static CoeffElem mono(int dq, int dk, const BigRat& c = 1) { return fromPoly(QKPoly::mono(dq, dk, c)); }
  static CoeffElem zero() { return CoeffElem(); }
  static CoeffElem one() { return fromRat(1); }
  /// q - q^{-1}
  static CoeffElem qMinusQinv() { return fromPoly(QKPoly::mono(2, 0) - QKPoly::mono(-2, 0)); }

  bool isZero() const { return num.isZero(); }
  bool isOne() const { return num == den; }
  bool isPoly() const { return den.isConstant(); }
  QKPoly asPoly() const {
    if (den.isConstant()) return num.scaled(BigRat(1) / den.t.begin()->second);
    auto q = QKPoly::divExact(num, den);
    if (!q) throw Error("CoeffElem::asPoly: not a polynomial: " + str());
    return *q;
  }
  std::optional<BigRat> asRational() const {
    if (num.isZero()) return BigRat(0);
    if (num.isConstant() && den.isConstant()) return num.t.begin()->second / den.t.begin()->second;
    auto q = QKPoly::divExact(num, den);
    if (q && q->isConstant()) return q->isZero() ? BigRat(0) : q->t.begin()->second;
    return std::nullopt;
  }

  void normalize();

  friend CoeffElem operator+(const CoeffElem& a, const CoeffElem& b) {
    if (a.den == b.den) return CoeffElem(a.num + b.num, a.den);
    return CoeffElem(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend CoeffElem operator-(const CoeffElem& a, const CoeffElem& b) {
    if (a.den == b.den) return CoeffElem(a.num - b.num, a.den);
    return CoeffElem(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend CoeffElem operator-(const CoeffElem& a) {
    CoeffElem r = a;
    r.num = -r.num;
    return r;
  }
  friend CoeffElem operator*(const CoeffElem& a, const CoeffElem& b) { return CoeffElem(a.num * b.num, a.den * b.den); }
  friend CoeffElem operator/(const CoeffElem& a, const CoeffElem& b) {
    if (b.isZero()) throw Error("CoeffElem division by zero");
    return CoeffElem(a.num * b.den, a.den * b.num);
  }
  CoeffElem inverse() const {
    if (isZero()) throw Error("CoeffElem inverse of zero");
    return CoeffElem(den, num);
  }
  CoeffElem pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    CoeffElem r = one();
    CoeffElem b = *this;
    while (n) {
      if (n & 1) r = r * b;
      b = b * b;
      n >>= 1;
    }
    return r;
  }
  friend bool operator==(const CoeffElem& a, const CoeffElem& b) { return a.num * b.den == b.num * a.den; }
  friend bool operator!=(const CoeffElem& a, const CoeffElem& b) { return !(a == b); }

  /// Exact integer value, if this reduces to one.
  std::optional<BigInt> asInteger() const {
    auto r = asRational();
    if (!r || !isInt(*r)) return std::nullopt;
    return numerator(*r);
  }

  /// Specialize k to a rational constant. Exponents of q become general
  /// rationals; result returned as exponent->coefficient map. Rejects
  /// specializations that kill the denominator.
  std::map<BigRat, BigRat> specializeK(const BigRat& k0) const;

  std::string str() const {
    if (den.isConstant() && den.t.begin()->second == 1) return num.str();
    return "(" + num.str() + ") / (" + den.str() + ")";
  }
};

/// [e] = (q^e - q^{-e})/(q - q^{-1}) for e = e1 + ek*k with doubled parts.
/// qnumExact({2,0}) is [1] = 1.
CoeffElem qnumExact(int dq, int dk);

}  // namespace uqp::qseries
