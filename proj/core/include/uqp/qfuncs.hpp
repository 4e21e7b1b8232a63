#pragma once

#include <vector>

#include "uqp/series.hpp"

namespace uqp::qseries {

/// Monomial scalar c * p^{p}: the coefficient carries the (q,k) content,
/// the p-power is tracked separately so grading decisions stay exact.
struct QPMono {
  CoeffElem c = CoeffElem::one();
  Half p{0};

  static QPMono one() { return {}; }
  static QPMono fromCoeff(const CoeffElem& v) { return {v, Half(0)}; }
  static QPMono pPower(Half d) { return {CoeffElem::one(), d}; }
  /// q^{e} for e = e1 + ek*k with half-integer parts, p^{pd}.
  static QPMono q(Half e1, Half ek, Half pd = Half(0)) {
    return {CoeffElem::mono(static_cast<int>(e1.d), static_cast<int>(ek.d)), pd};
  }

  bool isOne() const { return p == Half(0) && c.isOne(); }
  QPMono times(const QPMono& o) const { return {c * o.c, p + o.p}; }
  QPMono inverse() const { return {c.inverse(), -p}; }
  QPMono power(int64_t n) const {
    QPMono r = one();
    QPMono b = *this;
    bool neg = n < 0;
    if (neg) n = -n;
    while (n) {
      if (n & 1) r = r.times(b);
      b = b.times(b);
      n >>= 1;
    }
    return neg ? r.inverse() : r;
  }
  PSeries toPSeries(Half order) const { return PSeries::monoP(p, c, order); }
  friend bool operator==(const QPMono& a, const QPMono& b) { return a.p == b.p && a.c == b.c; }
  std::string str() const {
    std::string s = c.str();
    if (p != Half(0)) s += " * p^" + p.str();
    return s;
  }
};

/// [e] = (q^e - q^{-e})/(q - q^{-1}) for e = e1 + ek*k (no r part).
CoeffElem qnum(const Lin3& e);

/// [L n] for L possibly containing r, as an exact two-term p-Laurent series
/// (degrees +-cr*n/2), carried to the given order.
PSeries qintEll(const Lin3& L, int64_t n, Half order);

/// 1/[L n] as a p-series, for L with nonzero r part. The expansion of the
/// geometric series runs in the p-grading.
PSeries qintEllInverse(const Lin3& L, int64_t n, Half order);

/// Spec operation: 1/[r n] or 1/[r* n].
PSeries invQnumEll(bool rStar, int64_t n, Half order);

/// Expansion of 1/(1 - c x) in the stated domain.
XLaurent geomExpand(const QPMono& cm, bool innerDomain, int window, Half order);

/// Window truncation of the formal delta sum_{n in Z} (c x)^n.
XLaurent deltaSeries(const QPMono& cm, int window, Half order);

/// (arg * x^{xpow}; base)_inf as a truncated product, base p-graded.
XLaurent pochInf(const QPMono& arg, int xpow, const QPMono& base, Half order, int window);

/// Theta_base(arg * x^{xpow}) = (A;b)(b/A;b)(b;b) with A = arg x^{xpow},
/// for a p-graded base (p or p*). Truncated triple product.
XLaurent thetaSeriesP(const QPMono& arg, const QPMono& base, Half order, int window);
XLaurent thetaArgPow(const QPMono& arg, int xpow, const QPMono& base, Half order, int window);

/// Jacobi-triple-product form of the same theta: sum over m of
/// (-1)^m base^{m(m-1)/2} arg^m x^{m*xpow}. Independent route, used as an
/// oracle against the product expansion.
XLaurent thetaJTP(const QPMono& arg, int xpow, const QPMono& base, Half order, int window);

/// (arg * x^{xpow}; t)_inf by the Euler q-exponential sum, for a pure
/// (q,k)-monomial base t (no p grading). Coefficients are exact fractions.
XLaurent pochEuler(const CoeffElem& arg, int xpow, const CoeffElem& t, Half order, int window);

/// Theta_t(arg x^{xpow}) for a pure-monomial base t, as the Jacobi triple
/// product sum. Exact monomial coefficients; window-truncated knowledge.
XLaurent thetaJTPMono(const CoeffElem& arg, int xpow, const CoeffElem& t, Half order, int window);

/// One theta factor of a relation right-hand side.
struct ThetaFactor {
  bool euler = false;
  QPMono base;       // p-graded base, when !euler
  CoeffElem tMono;   // monomial base q^{2 nu}, when euler
  QPMono arg;
  int dir = +1;      // the theta argument is arg * (z/w)^{dir}
  int sign = +1;     // +1: numerator of the ratio, -1: denominator
};

/// Right-hand-side exchange factor: scalar monomial x theta ratio.
struct RhsRatio {
  int sign = +1;
  CoeffElem scalar = CoeffElem::one();
  Half pShift{0};
  ExpForm qFormal;   // formal q-exponent (rho-type / rational-function parts)
  ExpForm xFormal;   // formal (z/w)-exponent
  int64_t xInt = 0;  // integer (z/w)-power
  std::vector<ThetaFactor> thetas;

  static RhsRatio unit(int sign = +1) {
    RhsRatio r;
    r.sign = sign;
    return r;
  }
};

/// Convert theta_nu(u-v+a)/theta_nu(u-v+b) to canonical Theta form:
/// mono * Theta_{q^{2nu}}(q^{2a} z/w) / Theta_{q^{2nu}}(q^{2b} z/w).
/// nu is r, r*, or a k-polynomial value like k+2; a, b have no r part
/// and a-b must be rational.
RhsRatio jacobiRatioToCanonical(const Lin3& a, const Lin3& b, const Lin3& nu);

/// Series (in x = w/z) of one theta factor at the given truncation.
XLaurent thetaFactorSeries(const ThetaFactor& f, Half order, int window);

}  // namespace uqp::qseries
