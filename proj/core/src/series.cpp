#include "uqp/series.hpp"

#include <sstream>

namespace uqp::qseries {

PSeries PSeries::inverse() const {
  if (c.empty()) throw Error("PSeries::inverse of (truncated) zero");
  Half d0 = c.begin()->first;
  CoeffElem c0 = c.begin()->second;
  // S = c0 p^{d0} (1 + T); 1/S = p^{-d0} c0^{-1} sum (-T)^j.
  Half resOrder = order - d0 - d0;
  PSeries t(order - d0);
  for (auto it = std::next(c.begin()); it != c.end(); ++it)
    t.addTerm(it->first - d0, it->second / c0);
  PSeries acc = PSeries::fromCoeff(CoeffElem::one(), resOrder + d0);
  PSeries pw = acc;
  if (!t.isEmpty()) {
    Half step = t.minDegEff();
    if (step <= Half(0)) throw Error("PSeries::inverse: tail not positively graded");
    int maxJ = static_cast<int>((resOrder + d0).d / step.d) + 1;
    for (int j = 1; j <= maxJ; j++) {
      pw = pw * (-t);
      acc = acc + pw;
      if (pw.isEmpty()) break;
    }
  }
  PSeries res = acc.shiftedDeg(-d0).scaled(c0.inverse());
  res.order = resOrder;
  res.dropAboveOrder();
  return res;
}

bool PSeries::eqToOrder(const PSeries& a, const PSeries& b, Half& cmpOrder, Half* firstBad) {
  cmpOrder = std::min(a.order, b.order);
  std::map<Half, int> keys;
  for (auto& [d, v] : a.c) {
    (void)v;
    if (d <= cmpOrder) keys[d] = 1;
  }
  for (auto& [d, v] : b.c) {
    (void)v;
    if (d <= cmpOrder) keys[d] = 1;
  }
  for (auto& [d, one] : keys) {
    (void)one;
    CoeffElem va = CoeffElem::zero(), vb = CoeffElem::zero();
    auto ia = a.c.find(d);
    if (ia != a.c.end()) va = ia->second;
    auto ib = b.c.find(d);
    if (ib != b.c.end()) vb = ib->second;
    if (!(va == vb)) {
      if (firstBad) *firstBad = d;
      return false;
    }
  }
  return true;
}

std::string PSeries::str() const {
  if (c.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [d, v] : c) {
    if (!first) os << " + ";
    os << "(" << v.str() << ")";
    if (d != Half(0)) os << "*p^" << d.str();
    first = false;
  }
  return os.str();
}

static int64_t addClamp(int64_t a, int64_t b) {
  if (a <= -XINF || b <= -XINF) return -XINF;
  if (a >= XINF || b >= XINF) return XINF;
  return a + b;
}

XLaurent operator*(const XLaurent& a, const XLaurent& b) {
  XLaurent r(std::min(a.pOrder, b.pOrder));
  r.sLo = addClamp(a.sLo, b.sLo);
  r.sHi = addClamp(a.sHi, b.sHi);
  // Known-above bound: x^n is exact unless an unknown coefficient of one
  // operand can pair with support of the other.
  int64_t hiA = a.fullyKnownAbove() ? XINF : addClamp(a.kHi, b.sLo);
  int64_t hiB = b.fullyKnownAbove() ? XINF : addClamp(b.kHi, a.sLo);
  r.kHi = std::min(hiA, hiB);
  int64_t loA = a.fullyKnownBelow() ? -XINF : addClamp(a.kLo, b.sHi);
  int64_t loB = b.fullyKnownBelow() ? -XINF : addClamp(b.kLo, a.sHi);
  r.kLo = std::max(loA, loB);
  for (auto& [na, va] : a.c)
    for (auto& [nb, vb] : b.c) {
      int64_t n = na + nb;
      if (n < r.kLo || n > r.kHi) continue;
      PSeries prod = va * vb;
      r.pOrder = std::min(r.pOrder, prod.order);
      auto it = r.c.find(n);
      if (it == r.c.end()) {
        if (!prod.isEmpty() || true) r.c[n] = prod;
      } else {
        it->second = it->second + prod;
      }
    }
  for (auto it = r.c.begin(); it != r.c.end();) {
    if (it->second.isEmpty()) it = r.c.erase(it);
    else ++it;
  }
  return r;
}

static XLaurent addImpl(const XLaurent& a, const XLaurent& b, bool negate) {
  XLaurent r(std::min(a.pOrder, b.pOrder));
  r.sLo = std::min(a.sLo, b.sLo);
  r.sHi = std::max(a.sHi, b.sHi);
  int64_t hiA = a.fullyKnownAbove() ? XINF : a.kHi;
  int64_t hiB = b.fullyKnownAbove() ? XINF : b.kHi;
  r.kHi = std::min(hiA, hiB);
  int64_t loA = a.fullyKnownBelow() ? -XINF : a.kLo;
  int64_t loB = b.fullyKnownBelow() ? -XINF : b.kLo;
  r.kLo = std::max(loA, loB);
  for (auto& [n, v] : a.c) {
    auto it = r.c.find(n);
    if (it == r.c.end()) r.c[n] = v;
    else it->second = it->second + v;
  }
  for (auto& [n, v] : b.c) {
    PSeries vv = negate ? -v : v;
    auto it = r.c.find(n);
    if (it == r.c.end()) r.c[n] = vv;
    else it->second = it->second + vv;
  }
  for (auto it = r.c.begin(); it != r.c.end();) {
    if (it->second.isEmpty()) it = r.c.erase(it);
    else ++it;
  }
  return r;
}

XLaurent operator+(const XLaurent& a, const XLaurent& b) { return addImpl(a, b, false); }
XLaurent operator-(const XLaurent& a, const XLaurent& b) { return addImpl(a, b, true); }

XLaurent XLaurent::expSeries() const {
  if (sLo < 1) {
    for (auto& [n, v] : c) {
      (void)v;
      if (n < 1) throw Error("expSeries: input must be supported in positive powers");
    }
  }
  if (kHi >= XINF) throw Error("expSeries: unbounded known range");
  int64_t n = kHi;
  XLaurent acc = XLaurent::one(pOrder);
  acc.kHi = n;  // exp is only claimed up to the input's knowledge
  acc.sHi = XINF;
  XLaurent pw = XLaurent::one(pOrder);
  for (int64_t j = 1; j <= n; j++) {
    pw = pw * *this;
    acc = addImpl(acc, pw.scaled(CoeffElem::fromRat(BigRat(1) / factorialRat(j))), false);
  }
  acc.kHi = n;
  acc.sHi = XINF;
  return acc;
}

XLaurent::CmpResult XLaurent::compare(const XLaurent& a, const XLaurent& b) {
  CmpResult res;
  std::map<int64_t, int> keys;
  for (auto& [n, v] : a.c) {
    (void)v;
    keys[n] = 1;
  }
  for (auto& [n, v] : b.c) {
    (void)v;
    keys[n] = 1;
  }
  // Also compare a window of absent (zero) coefficients where both are known,
  // so an identically-zero comparison still counts as seen content.
  int64_t lo = std::max(a.kLo, b.kLo), hi = std::min(a.kHi, b.kHi);
  if (lo > -XINF && hi < XINF) {
    for (int64_t n = lo; n <= hi; n++) keys[n] = 1;
  }
  for (auto& [n, one] : keys) {
    (void)one;
    if (!a.knownAt(n) || !b.knownAt(n)) continue;
    PSeries va = a.at(n), vb = b.at(n);
    if (va.isEmpty() && vb.isEmpty()) {
      res.comparedCoeffs += 1;
      continue;
    }
    Half cmpOrder{0};
    Half bad{0};
    bool eq = PSeries::eqToOrder(va, vb, cmpOrder, &bad);
    res.comparedCoeffs += 1 + static_cast<int64_t>(va.c.size() + vb.c.size());
    if (!eq) {
      res.equal = false;
      res.mismatchX = n;
      res.mismatchP = bad;
      res.lhsStr = va.str();
      res.rhsStr = vb.str();
      return res;
    }
  }
  return res;
}

std::string XLaurent::str() const {
  std::ostringstream os;
  if (c.empty()) os << "0";
  bool first = true;
  for (auto& [n, v] : c) {
    if (!first) os << "\n";
    os << "x^" << n << ": " << v.str();
    first = false;
  }
  return os.str();
}

}  // namespace uqp::qseries
