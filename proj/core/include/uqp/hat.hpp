#pragma once

#include <optional>
#include <vector>

#include "uqp/qfuncs.hpp"

namespace uqp::qseries {

/// Monomial in the mode index n: q^{a n/2} (q^k)^{b n/2} p^{c n/2},
/// exponents stored doubled relative to n-units of 1/2.
struct HatKey {
  int a = 0, b = 0, c = 0;
  friend bool operator<(const HatKey& x, const HatKey& y) {
    if (x.c != y.c) return x.c < y.c;
    if (x.b != y.b) return x.b < y.b;
    return x.a < y.a;
  }
  friend bool operator==(const HatKey& x, const HatKey& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }
  HatKey operator+(const HatKey& o) const { return {a + o.a, b + o.b, c + o.c}; }
  HatKey operator-(const HatKey& o) const { return {a - o.a, b - o.b, c - o.c}; }
  HatKey operator-() const { return {-a, -b, -c}; }
  /// q^{L n} has hat-exponents (2*c1, 2*ck, 2*cr) in n/2-units.
  static HatKey fromLin(const Lin3& L) {
    Half h1 = Half::fromRat(L.c1), hk = Half::fromRat(L.ck), hr = Half::fromRat(L.cr);
    return {static_cast<int>(h1.d), static_cast<int>(hk.d), static_cast<int>(hr.d)};
  }
};

/// Laurent polynomial in the three hat variables over exact scalars.
/// Represents a function of n uniformly: distinct monomials are distinct
/// characters n -> mu^n, so identities verified here hold for every n.
class HatPoly {
 public:
  std::map<HatKey, CoeffElem> t;

  HatPoly() = default;
  static HatPoly con(const CoeffElem& v) {
    HatPoly p;
    if (!v.isZero()) p.t[HatKey{}] = v;
    return p;
  }
  static HatPoly mono(const HatKey& k, const CoeffElem& v) {
    HatPoly p;
    if (!v.isZero()) p.t[k] = v;
    return p;
  }
  /// q^{L n} - q^{-L n}
  static HatPoly binom(const Lin3& L) {
    HatKey k = HatKey::fromLin(L);
    HatPoly p;
    p.t[k] = CoeffElem::one();
    p.addTerm(-k, -CoeffElem::one());
    return p;
  }

  bool isZero() const { return t.empty(); }
  void addTerm(const HatKey& k, const CoeffElem& v) {
    if (v.isZero()) return;
    auto it = t.find(k);
    if (it == t.end()) {
      t[k] = v;
    } else {
      it->second = it->second + v;
      if (it->second.isZero()) t.erase(it);
    }
  }

  friend HatPoly operator+(const HatPoly& a, const HatPoly& b) {
    HatPoly r = a;
    for (auto& [k, v] : b.t) r.addTerm(k, v);
    return r;
  }
  friend HatPoly operator-(const HatPoly& a, const HatPoly& b) {
    HatPoly r = a;
    for (auto& [k, v] : b.t) r.addTerm(k, -v);
    return r;
  }
  friend HatPoly operator-(const HatPoly& a) {
    HatPoly r;
    for (auto& [k, v] : a.t) r.t[k] = -v;
    return r;
  }
  friend HatPoly operator*(const HatPoly& a, const HatPoly& b) {
    HatPoly r;
    for (auto& [ka, va] : a.t)
      for (auto& [kb, vb] : b.t) r.addTerm(ka + kb, va * vb);
    return r;
  }
  HatPoly scaled(const CoeffElem& v) const {
    HatPoly r;
    if (v.isZero()) return r;
    for (auto& [k, vv] : t) r.t[k] = vv * v;
    return r;
  }
  HatPoly shifted(const HatKey& k) const {
    HatPoly r;
    for (auto& [kk, v] : t) r.t[kk + k] = v;
    return r;
  }
  friend bool operator==(const HatPoly& a, const HatPoly& b) {
    if (a.t.size() != b.t.size()) return false;
    auto ia = a.t.begin();
    auto ib = b.t.begin();
    for (; ia != a.t.end(); ++ia, ++ib) {
      if (!(ia->first == ib->first)) return false;
      if (!(ia->second == ib->second)) return false;
    }
    return true;
  }

  HatKey lowKey() const;
  static std::optional<HatPoly> divExact(const HatPoly& a, const HatPoly& b);

  /// Value at a concrete mode index.
  PSeries evalAtN(int64_t n, Half order) const;

  std::string str() const;
};

/// Rational function of n: num / prod_L (q^{Ln} - q^{-Ln})^{mult}.
/// Denominator factors are kept as L values (sign-normalized), never
/// multiplied out, so elliptic factors can be expanded geometrically and
/// trigonometric ones cancelled exactly.
class HatRat {
 public:
  HatPoly num;
  std::map<Lin3, int> den;

  HatRat() = default;
  explicit HatRat(HatPoly n) : num(std::move(n)) {}
  static HatRat zero() { return HatRat(); }
  static HatRat con(const CoeffElem& v) { return HatRat(HatPoly::con(v)); }

  bool isZero() const { return num.isZero(); }

  /// Multiply by 1/(q^{Ln} - q^{-Ln}). L is sign-normalized; flipping the
  /// sign of L flips the sign of the binomial, compensated in num.
  void divByBinom(Lin3 L, int mult = 1);
  /// Multiply by (q^{Ln} - q^{-Ln}), cancelling a denominator factor first.
  void mulByBinom(Lin3 L, int mult = 1);

  friend HatRat operator*(const HatRat& a, const HatRat& b);
  friend HatRat operator+(const HatRat& a, const HatRat& b);
  friend HatRat operator-(const HatRat& a, const HatRat& b);
  friend HatRat operator-(const HatRat& a);
  HatRat scaled(const CoeffElem& v) const {
    HatRat r = *this;
    r.num = r.num.scaled(v);
    if (v.isZero()) r.den.clear();
    return r;
  }
  friend bool operator==(const HatRat& a, const HatRat& b);
  friend bool operator!=(const HatRat& a, const HatRat& b) { return !(a == b); }

  PSeries evalAtN(int64_t n, Half order) const;

  /// Power-sum recognition: express the value as sum_j eps_j * (g_j)^n with
  /// integer eps and monomial g (as HatKey), valid for p-degrees c <= cMax.
  /// Elliptic denominator factors are expanded geometrically; any surviving
  /// non-elliptic denominator or non-integer coefficient yields nullopt.
  std::optional<std::vector<std::pair<HatKey, BigInt>>> recognizePowerSum(int cMax) const;

  std::string str() const;
};

/// Normalize the sign of a binomial label: first nonzero of (cr, ck, c1)
/// positive. Returns true when the sign flipped.
bool normalizeBinomLabel(Lin3& L);

}  // namespace uqp::qseries
