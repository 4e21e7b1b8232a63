#include "uqp/hat.hpp"

#include <sstream>

namespace uqp::qseries {

HatKey HatPoly::lowKey() const {
  HatKey lo{};
  bool first = true;
  for (auto& [k, v] : t) {
    (void)v;
    if (first) {
      lo = k;
      first = false;
    } else {
      lo.a = std::min(lo.a, k.a);
      lo.b = std::min(lo.b, k.b);
      lo.c = std::min(lo.c, k.c);
    }
  }
  return lo;
}

std::optional<HatPoly> HatPoly::divExact(const HatPoly& a, const HatPoly& b) {
  if (b.isZero()) throw Error("HatPoly division by zero");
  if (a.isZero()) return HatPoly();
  HatKey la = a.lowKey(), lb = b.lowKey();
  HatPoly aa = a.shifted(-la), bb = b.shifted(-lb);
  HatPoly q, rem = aa;
  const HatKey leadB = bb.t.rbegin()->first;
  const CoeffElem cB = bb.t.rbegin()->second;
  int guard = static_cast<int>(aa.t.size()) * 64 + 1024;
  while (!rem.isZero()) {
    HatKey leadR = rem.t.rbegin()->first;
    HatKey m = leadR - leadB;
    if (m.a < 0 || m.b < 0 || m.c < 0) return std::nullopt;
    CoeffElem c = rem.t.rbegin()->second / cB;
    HatPoly mp = HatPoly::mono(m, c);
    q = q + mp;
    rem = rem - mp * bb;
    if (--guard < 0) return std::nullopt;
  }
  return q.shifted(la - lb);
}

PSeries HatPoly::evalAtN(int64_t n, Half order) const {
  PSeries s(order);
  for (auto& [k, v] : t) {
    CoeffElem qm = CoeffElem::mono(static_cast<int>(k.a * n), static_cast<int>(k.b * n));
    s.addTerm(Half(k.c * n), v * qm);
  }
  return s;
}

std::string HatPoly::str() const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [k, v] : t) {
    if (!first) os << " + ";
    os << "(" << v.str() << ")";
    if (k.a || k.b || k.c) os << "*H[" << k.a << "," << k.b << "," << k.c << "]";
    first = false;
  }
  return os.str();
}

bool normalizeBinomLabel(Lin3& L) {
  BigRat lead = L.cr != 0 ? L.cr : (L.ck != 0 ? L.ck : L.c1);
  if (lead < 0) {
    L = -L;
    return true;
  }
  return false;
}

void HatRat::divByBinom(Lin3 L, int mult) {
  if (L.isZero()) throw Error("HatRat: division by [0]");
  if (normalizeBinomLabel(L) && mult % 2 != 0) num = -num;
  den[L] += mult;
  if (den[L] == 0) den.erase(L);
  if (den.count(L) && den[L] < 0) {
    // net numerator factor
    int m = -den[L];
    den.erase(L);
    HatPoly b = HatPoly::binom(L);
    for (int i = 0; i < m; i++) num = num * b;
  }
}

void HatRat::mulByBinom(Lin3 L, int mult) { divByBinom(L, -mult); }

HatRat operator*(const HatRat& a, const HatRat& b) {
  HatRat r;
  r.num = a.num * b.num;
  r.den = a.den;
  for (auto& [L, m] : b.den) {
    r.den[L] += m;
    if (r.den[L] == 0) r.den.erase(L);
  }
  return r;
}

HatRat operator+(const HatRat& a, const HatRat& b) {
  HatRat r;
  // lcm of denominators
  r.den = a.den;
  for (auto& [L, m] : b.den) r.den[L] = std::max(r.den.count(L) ? r.den[L] : 0, m);
  HatPoly na = a.num, nb = b.num;
  for (auto& [L, m] : r.den) {
    int ma = a.den.count(L) ? a.den.at(L) : 0;
    int mb = b.den.count(L) ? b.den.at(L) : 0;
    HatPoly bin = HatPoly::binom(L);
    for (int i = 0; i < m - ma; i++) na = na * bin;
    for (int i = 0; i < m - mb; i++) nb = nb * bin;
  }
  r.num = na + nb;
  if (r.num.isZero()) r.den.clear();
  return r;
}

HatRat operator-(const HatRat& a) {
  HatRat r = a;
  r.num = -r.num;
  return r;
}
HatRat operator-(const HatRat& a, const HatRat& b) { return a + (-b); }

bool operator==(const HatRat& a, const HatRat& b) {
  HatPoly na = a.num, nb = b.num;
  // cross-multiply by the denominator factors the other side lacks
  for (auto& [L, m] : b.den) {
    int ma = a.den.count(L) ? a.den.at(L) : 0;
    HatPoly bin = HatPoly::binom(L);
    for (int i = 0; i < m - ma; i++) na = na * bin;
  }
  for (auto& [L, m] : a.den) {
    int mb = b.den.count(L) ? b.den.at(L) : 0;
    HatPoly bin = HatPoly::binom(L);
    for (int i = 0; i < m - mb; i++) nb = nb * bin;
  }
  return na == nb;
}

PSeries HatRat::evalAtN(int64_t n, Half order) const {
  if (num.isZero()) return PSeries::zeroToOrder(order);
  // slack accounting so den-inverse truncations stay honest
  HatKey lo = num.lowKey();
  Half numMin = Half(lo.c * n);
  Half work = order + (numMin < Half(0) ? -numMin : Half(0));
  PSeries acc = num.evalAtN(n, work);
  for (auto& [L, m] : den) {
    for (int i = 0; i < m; i++) {
      if (L.cr == 0) {
        // q^{Ln} - q^{-Ln}; doubled exponents are 2*c1*n and 2*ck*n.
        Half e1 = Half::fromRat(L.c1 * n), ek = Half::fromRat(L.ck * n);
        CoeffElem d = CoeffElem::mono(static_cast<int>(e1.d), static_cast<int>(ek.d)) -
                      CoeffElem::mono(static_cast<int>(-e1.d), static_cast<int>(-ek.d));
        if (d.isZero()) throw Error("HatRat::evalAtN: denominator vanishes");
        acc = acc.scaled(d.inverse());
      } else {
        PSeries inv = qintEllInverse(L, n, work).scaled(CoeffElem::qMinusQinv().inverse());
        acc = acc * inv;
      }
    }
  }
  PSeries res = acc.truncated(order);
  res.order = order;
  return res;
}

std::optional<std::vector<std::pair<HatKey, BigInt>>> HatRat::recognizePowerSum(int cMax) const {
  HatPoly work = num;
  std::vector<std::pair<Lin3, int>> expand;
  for (auto& [L, m] : den) {
    HatPoly bin = HatPoly::binom(L);
    HatPoly full = HatPoly::con(CoeffElem::one());
    for (int i = 0; i < m; i++) full = full * bin;
    if (auto q = HatPoly::divExact(work, full)) {
      work = *q;
      continue;
    }
    // try partial division factor by factor
    int left = m;
    while (left > 0) {
      if (auto q = HatPoly::divExact(work, bin)) {
        work = *q;
        left--;
      } else {
        break;
      }
    }
    if (left > 0) {
      if (L.cr == 0) return std::nullopt;  // non-elliptic pole survives
      expand.emplace_back(L, left);
    }
  }
  // geometric expansion of surviving elliptic denominators:
  // 1/(u - 1/u) = u * sum_{m>=0} u^{2m} where u = q^{-Ln} is the p-low term
  for (auto& [L, m] : expand) {
    HatKey u = HatKey::fromLin(L);  // p-high monomial (cr > 0 after normalize)
    for (int i = 0; i < m; i++) {
      HatPoly next;
      for (auto& [k, v] : work.t) {
        // multiply by -u^{-1} * sum_j u^{-2j}  ... careful: q^{Ln}-q^{-Ln}
        // = -q^{-Ln}(1 - q^{2Ln}); with q^{Ln} p-HIGH the p-low dominant
        // inverse is -q^{Ln} sum_j q^{2Ln j}.
        for (int j = 0;; j++) {
          HatKey kk = k + u + HatKey{2 * j * u.a, 2 * j * u.b, 2 * j * u.c};
          if (kk.c > cMax) break;
          next.addTerm(kk, -v);
          if (u.c <= 0) throw Error("recognizePowerSum: non-positive elliptic grading");
        }
      }
      work = next;
    }
  }
  std::vector<std::pair<HatKey, BigInt>> out;
  for (auto& [k, v] : work.t) {
    auto iv = v.asInteger();
    if (!iv) return std::nullopt;
    if (*iv != 0) out.emplace_back(k, *iv);
  }
  return out;
}

std::string HatRat::str() const {
  std::ostringstream os;
  os << num.str();
  if (!den.empty()) {
    os << " / {";
    bool first = true;
    for (auto& [L, m] : den) {
      if (!first) os << " * ";
      os << "[(" << L.str() << ")n]";
      if (m != 1) os << "^" << m;
      first = false;
    }
    os << "}";
  }
  return os.str();
}

}  // namespace uqp::qseries
