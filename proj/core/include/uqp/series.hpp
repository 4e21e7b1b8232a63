#pragma once

#include <functional>
#include <map>

#include "uqp/expform.hpp"

namespace uqp::qseries {

/// Truncated series in p^{1/2} with exact coefficients. Coefficients of
/// degree <= order are exactly stored (absent means zero); nothing is known
/// beyond the order. Degrees may go negative in intermediate values.
class PSeries {
 public:
  Half order{0};
  std::map<Half, CoeffElem> c;

  PSeries() = default;
  explicit PSeries(Half ord) : order(ord) {}
  static PSeries zeroToOrder(Half ord) { return PSeries(ord); }
  static PSeries fromCoeff(const CoeffElem& v, Half ord) {
    PSeries s(ord);
    s.addTerm(Half(0), v);
    return s;
  }
  static PSeries monoP(Half deg, const CoeffElem& v, Half ord) {
    PSeries s(ord);
    s.addTerm(deg, v);
    return s;
  }

  bool isEmpty() const { return c.empty(); }
  Half minDegEff() const { return c.empty() ? order : c.begin()->first; }

  void addTerm(Half d, const CoeffElem& v) {
    if (d > order || v.isZero()) return;
    auto it = c.find(d);
    if (it == c.end()) {
      c[d] = v;
    } else {
      it->second = it->second + v;
      if (it->second.isZero()) c.erase(it);
    }
  }
  void dropAboveOrder() {
    for (auto it = c.begin(); it != c.end();) {
      if (it->first > order) it = c.erase(it);
      else ++it;
    }
  }

  friend PSeries operator+(const PSeries& a, const PSeries& b) {
    PSeries r(std::min(a.order, b.order));
    for (auto& [d, v] : a.c) r.addTerm(d, v);
    for (auto& [d, v] : b.c) r.addTerm(d, v);
    return r;
  }
  friend PSeries operator-(const PSeries& a, const PSeries& b) {
    PSeries r(std::min(a.order, b.order));
    for (auto& [d, v] : a.c) r.addTerm(d, v);
    for (auto& [d, v] : b.c) r.addTerm(d, -v);
    return r;
  }
  friend PSeries operator-(const PSeries& a) {
    PSeries r(a.order);
    for (auto& [d, v] : a.c) r.c[d] = -v;
    return r;
  }
  friend PSeries operator*(const PSeries& a, const PSeries& b) {
    PSeries r(std::min(a.order + b.minDegEff(), b.order + a.minDegEff()));
    for (auto& [da, va] : a.c)
      for (auto& [db, vb] : b.c) r.addTerm(da + db, va * vb);
    return r;
  }
  PSeries scaled(const CoeffElem& v) const {
    PSeries r(order);
    if (v.isZero()) return r;
    for (auto& [d, vv] : c) r.c[d] = vv * v;
    return r;
  }
  PSeries shiftedDeg(Half d) const {
    PSeries r(order + d);
    for (auto& [dd, v] : c) r.c[dd + d] = v;
    return r;
  }
  PSeries truncated(Half ord) const {
    PSeries r(std::min(order, ord));
    for (auto& [d, v] : c)
      if (d <= r.order) r.c[d] = v;
    return r;
  }

  /// Multiplicative inverse as a p-series; requires a nonzero lowest term.
  PSeries inverse() const;

  /// Equality up to min(orders). Returns the compared order.
  static bool eqToOrder(const PSeries& a, const PSeries& b, Half& cmpOrder, Half* firstBad = nullptr);

  std::string str() const;
};

constexpr int64_t XINF = int64_t(1) << 40;

/// Two-variable windowed Laurent series in x = w/z with PSeries coefficients.
/// Tracks both certain support bounds (coefficients vanish outside
/// [sLo, sHi]) and the range [kLo, kHi] over which coefficients are exactly
/// known; outside the known range and inside the support, nothing is
/// asserted. Products propagate both, so a comparison never uses a
/// coefficient that truncation has contaminated.
class XLaurent {
 public:
  std::map<int64_t, PSeries> c;
  int64_t sLo = 0, sHi = 0;        // certain-zero outside [sLo, sHi]
  int64_t kLo = -XINF, kHi = XINF; // exactly known inside [kLo, kHi]
  Half pOrder{0};                  // default order for absent (zero) coefficients

  XLaurent() = default;
  explicit XLaurent(Half ord) : pOrder(ord) {}

  static XLaurent zero(Half ord) {
    XLaurent r(ord);
    r.sLo = 0;
    r.sHi = 0;
    return r;
  }
  static XLaurent one(Half ord) {
    XLaurent r(ord);
    r.set(0, PSeries::fromCoeff(CoeffElem::one(), ord));
    return r;
  }
  /// a + b*x^m as a fully known finite series.
  static XLaurent binomial(const CoeffElem& a, const CoeffElem& b, int64_t m, Half ord) {
    XLaurent r(ord);
    r.set(0, PSeries::fromCoeff(a, ord));
    r.add(m, PSeries::fromCoeff(b, ord));
    r.recomputeSupport();
    return r;
  }

  void set(int64_t n, PSeries v) {
    v.dropAboveOrder();
    if (v.isEmpty()) c.erase(n);
    else c[n] = std::move(v);
    sLo = std::min(sLo, n);
    sHi = std::max(sHi, n);
  }
  void add(int64_t n, const PSeries& v) {
    auto it = c.find(n);
    if (it == c.end()) {
      if (!v.isEmpty()) c[n] = v;
    } else {
      it->second = it->second + v;
      if (it->second.isEmpty()) c.erase(it);
    }
    sLo = std::min(sLo, n);
    sHi = std::max(sHi, n);
  }
  void recomputeSupport() {
    if (sLo == -XINF && sHi == XINF) return;
    if (c.empty()) {
      if (sLo > -XINF) sLo = 0;
      if (sHi < XINF) sHi = 0;
      if (sLo > sHi) sLo = sHi;
      return;
    }
    if (sLo > -XINF) sLo = c.begin()->first;
    if (sHi < XINF) sHi = c.rbegin()->first;
  }

  bool knownAt(int64_t n) const { return (n >= kLo && n <= kHi) || n < sLo || n > sHi; }
  PSeries at(int64_t n) const {
    auto it = c.find(n);
    if (it != c.end()) return it->second;
    return PSeries::zeroToOrder(pOrder);
  }

  bool fullyKnownAbove() const { return sHi <= kHi; }
  bool fullyKnownBelow() const { return sLo >= kLo; }

  friend XLaurent operator*(const XLaurent& a, const XLaurent& b);
  friend XLaurent operator+(const XLaurent& a, const XLaurent& b);
  friend XLaurent operator-(const XLaurent& a, const XLaurent& b);

  XLaurent scaled(const CoeffElem& v) const {
    XLaurent r = *this;
    for (auto& [n, s] : r.c) s = s.scaled(v);
    if (v.isZero()) r.c.clear();
    return r;
  }
  XLaurent scaledP(const PSeries& v) const {
    XLaurent r(pOrder + v.minDegEff());
    r.sLo = sLo;
    r.sHi = sHi;
    r.kLo = kLo;
    r.kHi = kHi;
    for (auto& [n, s] : c) {
      PSeries prod = s * v;
      if (!prod.isEmpty()) r.c[n] = prod;
      r.pOrder = std::min(r.pOrder, prod.order);
    }
    return r;
  }
  XLaurent shiftedX(int64_t m) const {
    XLaurent r(pOrder);
    for (auto& [n, s] : c) r.c[n + m] = s;
    auto sh = [&](int64_t v) { return (v <= -XINF || v >= XINF) ? v : v + m; };
    r.sLo = sh(sLo);
    r.sHi = sh(sHi);
    r.kLo = sh(kLo);
    r.kHi = sh(kHi);
    return r;
  }
  /// Mirror x -> 1/x (series computed in the opposite variable).
  XLaurent mirrored() const {
    XLaurent r(pOrder);
    for (auto& [n, s] : c) r.c[-n] = s;
    r.sLo = (sHi >= XINF) ? -XINF : -sHi;
    r.sHi = (sLo <= -XINF) ? XINF : -sLo;
    r.kLo = (kHi >= XINF) ? -XINF : -kHi;
    r.kHi = (kLo <= -XINF) ? XINF : -kLo;
    return r;
  }

  /// exp of a series supported in strictly positive powers.
  XLaurent expSeries() const;

  struct CmpResult {
    bool equal = true;
    int64_t comparedCoeffs = 0;  // number of (x-power, p-degree) slots seen
    int64_t mismatchX = 0;
    Half mismatchP{0};
    std::string lhsStr, rhsStr;
  };
  static CmpResult compare(const XLaurent& a, const XLaurent& b);

  std::string str() const;
};

}  // namespace uqp::qseries
