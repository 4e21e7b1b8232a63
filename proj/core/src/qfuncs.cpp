#include "uqp/qfuncs.hpp"

namespace uqp::qseries {

CoeffElem qnum(const Lin3& e) {
  if (e.cr != 0) throw Error("qnum: exponent outside span{1,k}: " + e.str());
  if (e.isZero()) return CoeffElem::zero();
  Half e1 = Half::fromRat(e.c1), ek = Half::fromRat(e.ck);
  return qnumExact(static_cast<int>(e1.d), static_cast<int>(ek.d));
}

PSeries qintEll(const Lin3& L, int64_t n, Half order) {
  // [L n] = (q^{Ln} - q^{-Ln})/(q - q^{-1}); q^{r n} = p^{n/2}.
  BigRat e1 = L.c1 * n, ek = L.ck * n, er = L.cr * n;
  Half d = Half::fromRat(er / 2);
  Half h1 = Half::fromRat(e1), hk = Half::fromRat(ek);
  CoeffElem inv = CoeffElem::qMinusQinv().inverse();
  CoeffElem plus = CoeffElem::mono(static_cast<int>(h1.d), static_cast<int>(hk.d)) * inv;
  CoeffElem minus = CoeffElem::mono(static_cast<int>(-h1.d), static_cast<int>(-hk.d)) * inv;
  // Both terms must be representable regardless of truncation.
  if (d > order || -d > order) throw Error("qintEll: order too small to hold exact value");
  PSeries s(order);
  s.addTerm(d, plus);
  s.addTerm(-d, -minus);
  return s;
}

PSeries qintEllInverse(const Lin3& L, int64_t n, Half order) {
  if (n <= 0) throw Error("qintEllInverse: n must be positive");
  if (L.cr == 0) {
    // Exact fraction, no series needed.
    Half e1 = Half::fromRat(L.c1 * n), ek = Half::fromRat(L.ck * n);
    CoeffElem v = qnumExact(static_cast<int>(e1.d), static_cast<int>(ek.d));
    if (v.isZero()) throw Error("qintEllInverse: [L n] identically zero");
    return PSeries::fromCoeff(v.inverse(), order);
  }
  Half d0 = Half::fromRat(L.cr * n / 2);
  Half d0abs = d0 > Half(0) ? d0 : -d0;
  PSeries wide = qintEll(L, n, order + d0abs + d0abs);
  PSeries res = wide.inverse().truncated(order);
  res.order = order;
  return res;
}

PSeries invQnumEll(bool rStar, int64_t n, Half order) {
  return qintEllInverse(rStar ? Lin3::rStar() : Lin3::r(), n, order);
}

XLaurent geomExpand(const QPMono& cm, bool innerDomain, int window, Half order) {
  XLaurent r(order);
  if (innerDomain) {
    // sum_{n>=0} (c x)^n
    for (int64_t n = 0; n <= window; n++) {
      QPMono t = cm.power(n);
      if (t.p > order) continue;
      r.set(n, t.toPSeries(order));
    }
    r.sLo = 0;
    r.sHi = XINF;
    r.kLo = -XINF;
    r.kHi = window;
  } else {
    // -(c x)^{-1} sum_{n>=0} (c x)^{-n}
    for (int64_t n = 1; n <= window; n++) {
      QPMono t = cm.power(-n);
      if (t.p > order) continue;
      r.set(-n, t.toPSeries(order).scaled(CoeffElem::fromRat(-1)));
    }
    r.sLo = -XINF;
    r.sHi = -1;
    r.kLo = -window;
    r.kHi = XINF;
  }
  return r;
}

XLaurent deltaSeries(const QPMono& cm, int window, Half order) {
  XLaurent r(order);
  for (int64_t n = -window; n <= window; n++) {
    QPMono t = cm.power(n);
    if (t.p > order || t.p < -order) continue;
    r.set(n, t.toPSeries(order));
  }
  r.sLo = -XINF;
  r.sHi = XINF;
  r.kLo = -window;
  r.kHi = window;
  return r;
}

XLaurent pochInf(const QPMono& arg, int xpow, const QPMono& base, Half order, int window) {
  (void)window;
  if (base.p <= Half(0)) throw Error("pochInf: base must have positive p-degree");
  XLaurent acc = XLaurent::one(order);
  acc.kLo = -XINF;
  acc.kHi = XINF;
  for (int64_t m = 0;; m++) {
    QPMono factor = arg.times(base.power(m));
    // Remaining factors are all 1 at this p-order.
    if (factor.p > order) break;
    XLaurent bin(order);
    bin.set(0, PSeries::fromCoeff(CoeffElem::one(), order));
    bin.add(xpow, PSeries::monoP(factor.p, -factor.c, order));
    bin.recomputeSupport();
    bin.kLo = -XINF;
    bin.kHi = XINF;
    acc = acc * bin;
    if (m > 8 * (order.d + 2)) throw Error("pochInf: runaway product");
  }
  return acc;
}

static XLaurent pochConstant(const QPMono& base, Half order) {
  // (b; b)_inf as an x-free series.
  XLaurent acc = XLaurent::one(order);
  acc.kLo = -XINF;
  acc.kHi = XINF;
  for (int64_t m = 1; base.p * m <= order; m++) {
    QPMono f = base.power(m);
    XLaurent bin(order);
    bin.set(0, PSeries::fromCoeff(CoeffElem::one(), order) + PSeries::monoP(f.p, -f.c, order));
    bin.kLo = -XINF;
    bin.kHi = XINF;
    acc = acc * bin;
  }
  return acc;
}

XLaurent thetaArgPow(const QPMono& arg, int xpow, const QPMono& base, Half order, int window) {
  XLaurent a = pochInf(arg, xpow, base, order, window);
  XLaurent b = pochInf(base.times(arg.inverse()), -xpow, base, order, window);
  XLaurent c = pochConstant(base, order);
  return a * b * c;
}

XLaurent thetaSeriesP(const QPMono& arg, const QPMono& base, Half order, int window) {
  if (window <= 0 || order < Half(0)) throw Error("thetaSeriesP: window and order must be positive");
  return thetaArgPow(arg, +1, base, order, window);
}

XLaurent thetaJTP(const QPMono& arg, int xpow, const QPMono& base, Half order, int window) {
  XLaurent r(order);
  r.kLo = -XINF;
  r.kHi = XINF;
  for (int64_t m = -4 * (window + order.d + 2); m <= 4 * (window + order.d + 2); m++) {
    QPMono t = base.power(m * (m - 1) / 2).times(arg.power(m));
    if (t.p > order || t.p < Half(0)) continue;
    PSeries v = t.toPSeries(order).scaled(CoeffElem::fromRat(m % 2 == 0 ? 1 : -1));
    r.add(m * xpow, v);
  }
  r.recomputeSupport();
  r.kLo = -XINF;
  r.kHi = XINF;
  return r;
}

XLaurent pochEuler(const CoeffElem& arg, int xpow, const CoeffElem& t, Half order, int window) {
  // (y; t)_inf = sum_j (-y)^j t^{j(j-1)/2} / (t;t)_j with y = arg x^{xpow}.
  XLaurent r(order);
  r.kLo = -XINF;
  r.kHi = XINF;
  CoeffElem tt = CoeffElem::one();
  CoeffElem tPow = CoeffElem::one();   // t^j
  CoeffElem tTri = CoeffElem::one();   // t^{j(j-1)/2}
  CoeffElem argPow = CoeffElem::one();
  for (int64_t j = 0; j <= window; j++) {
    if (j > 0) {
      tTri = tTri * tPow;  // t^{j(j-1)/2} gains t^{j-1}
      tPow = tPow * t;
      tt = tt * (CoeffElem::one() - tPow);
      argPow = argPow * arg;
    }
    CoeffElem coeff = (j % 2 == 0 ? CoeffElem::one() : -CoeffElem::one()) * argPow * tTri / tt;
    r.add(j * xpow, PSeries::fromCoeff(coeff, order));
  }
  r.recomputeSupport();
  r.kLo = (xpow > 0) ? -XINF : -window;
  r.kHi = (xpow > 0) ? window : XINF;
  // outside the computed range the series continues; mark support unbounded
  if (xpow > 0) r.sHi = XINF;
  else r.sLo = -XINF;
  return r;
}

XLaurent thetaJTPMono(const CoeffElem& arg, int xpow, const CoeffElem& t, Half order, int window) {
  // Jacobi triple product sum for a pure-monomial base (no p grading):
  // every x-coefficient is a single exact monomial. Includes the (t;t)_inf
  // constant implicitly, as the sum form does.
  XLaurent r(order);
  for (int64_t m = -window; m <= window; m++) {
    CoeffElem tri = t.pow(static_cast<int>(m * (m - 1) / 2));
    CoeffElem v = arg.pow(static_cast<int>(m)) * tri;
    if (m % 2 != 0) v = -v;
    r.set(m * xpow, PSeries::fromCoeff(v, order));
  }
  r.kLo = -window;
  r.kHi = window;
  r.sLo = -XINF;
  r.sHi = XINF;
  return r;
}

RhsRatio jacobiRatioToCanonical(const Lin3& a, const Lin3& b, const Lin3& nu) {
  if (a.cr != 0 || b.cr != 0) throw Error("jacobiRatioToCanonical: operator-valued shifts unsupported");
  Lin3 diff = a - b;
  if (diff.ck != 0) throw Error("jacobiRatioToCanonical: a-b must be rational");
  // (a^2-b^2) = (a+b)(a-b), linear in k since a-b is rational.
  Lin3 sum = a + b;
  Lin3 sqDiff{sum.c1 * diff.c1, sum.ck * diff.c1, 0};

  RhsRatio out;
  bool star = false, ell = false;
  if (nu == Lin3::r()) {
    ell = true;
  } else if (nu == Lin3::rStar()) {
    ell = true;
    star = true;
  } else if (nu.cr == 0) {
    ell = false;
  } else {
    throw Error("jacobiRatioToCanonical: nu must be r, r* or a k-polynomial");
  }

  // q^{-(a-b)} (rational exponent, a plain monomial)
  Half mh = Half::fromRat(-diff.c1);
  out.scalar = CoeffElem::mono(static_cast<int>(mh.d), 0);

  auto mkArg = [](const Lin3& s) {
    // q^{2s} with s in span{1,k}
    Half e1 = Half::fromRat(s.c1 * 2), ek = Half::fromRat(s.ck * 2);
    return CoeffElem::mono(static_cast<int>(e1.d), static_cast<int>(ek.d));
  };

  if (ell) {
    RhoTag tag = star ? RhoTag::RhoStar : RhoTag::Rho;
    // x-power (a-b)/nu and q-power (a^2-b^2)/nu
    out.xFormal.add(EKey{tag, ZmTag::None}, RatK::fromRat(diff.c1));
    RatK sq = RatK::fromRat(sqDiff.c1) + RatK::fromRat(sqDiff.ck) * RatK::k();
    out.qFormal.add(EKey{tag, ZmTag::None}, sq);
    QPMono base = star ? QPMono::q(Half(0), Half::whole(-2), Half::whole(1)) : QPMono::pPower(Half::whole(1));
    ThetaFactor num{false, base, CoeffElem(), QPMono::fromCoeff(mkArg(a)), +1, +1};
    ThetaFactor den{false, base, CoeffElem(), QPMono::fromCoeff(mkArg(b)), +1, -1};
    out.thetas = {num, den};
  } else {
    // nu = polynomial in k, e.g. k+2; exponents are rational functions of k.
    RatK nuK = RatK::fromRat(nu.c1) + RatK::fromRat(nu.ck) * RatK::k();
    if (nuK.isZero()) throw Error("jacobiRatioToCanonical: nu = 0");
    out.xFormal.add(EKey{}, RatK::fromRat(diff.c1) / nuK);
    RatK sq = (RatK::fromRat(sqDiff.c1) + RatK::fromRat(sqDiff.ck) * RatK::k()) / nuK;
    out.qFormal.add(EKey{}, sq);
    // t = q^{2 nu}
    Half e1 = Half::fromRat(nu.c1 * 2), ek = Half::fromRat(nu.ck * 2);
    CoeffElem t = CoeffElem::mono(static_cast<int>(e1.d), static_cast<int>(ek.d));
    ThetaFactor num{true, QPMono(), t, QPMono::fromCoeff(mkArg(a)), +1, +1};
    ThetaFactor den{true, QPMono(), t, QPMono::fromCoeff(mkArg(b)), +1, -1};
    out.thetas = {num, den};
  }

  // Normalize: pull any plain rational part of xFormal into the integer power.
  auto [c0, rest] = out.xFormal.splitRationalConst();
  if (c0 != 0) {
    if (!isInt(c0)) throw Error("jacobiRatioToCanonical: fractional plain x-power");
    out.xInt += ratToLong(c0);
    out.xFormal = rest;
  }
  return out;
}

XLaurent thetaFactorSeries(const ThetaFactor& f, Half order, int window) {
  // series in x = w/z; the factor argument uses x~ = z/w = x^{-1}
  int xpow = -f.dir;
  if (f.euler) return thetaJTPMono(f.arg.c, xpow, f.tMono, order, window);
  return thetaArgPow(f.arg, xpow, f.base, order, window);
}

}  // namespace uqp::qseries
