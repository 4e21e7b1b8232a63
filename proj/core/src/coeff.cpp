#include "uqp/coeff.hpp"

#include <algorithm>

namespace uqp::qseries {

std::optional<QKPoly> QKPoly::divExact(const QKPoly& a, const QKPoly& b) {
  if (b.isZero()) throw Error("QKPoly division by zero");
  if (a.isZero()) return QKPoly();
  // Clear Laurent shifts so plain leading-term elimination terminates.
  QExp la = a.lowExp(), lb = b.lowExp();
  QKPoly aa = a.shifted(-la), bb = b.shifted(-lb);
  QKPoly q, rem = aa;
  const QExp leadB = bb.t.rbegin()->first;
  const BigRat cB = bb.t.rbegin()->second;
  int guard = static_cast<int>(aa.t.size()) * 64 + 1024;
  while (!rem.isZero()) {
    QExp leadR = rem.t.rbegin()->first;
    QExp m = leadR - leadB;
    if (m.dq < 0 || m.dk < 0) return std::nullopt;
    BigRat c = rem.t.rbegin()->second / cB;
    QKPoly mp = QKPoly::mono(m.dq, m.dk, c);
    q = q + mp;
    rem = rem - mp * bb;
    if (--guard < 0) return std::nullopt;
  }
  return q.shifted(la - lb);
}

std::string QKPoly::str() const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [e, c] : t) {
    if (!first) {
      os << (c > 0 ? " + " : " - ");
    } else if (c < 0) {
      os << "-";
    }
    BigRat ac = abs(c);
    bool unit = (ac == 1) && !(e.dq == 0 && e.dk == 0);
    if (!unit) os << ratStr(ac);
    if (e.dq != 0 || e.dk != 0) {
      if (!unit) os << "*";
      os << "q^[";
      bool inner = false;
      if (e.dq != 0) {
        os << Half(e.dq).str();
        inner = true;
      }
      if (e.dk != 0) {
        if (inner && e.dk > 0) os << "+";
        if (e.dk == -2) os << "-";
        else if (e.dk != 2) os << Half(e.dk).str() + "*";
        os << "k";
      }
      os << "]";
    }
    first = false;
  }
  return os.str();
}

void CoeffElem::normalize() {
  if (den.isZero()) throw Error("CoeffElem: zero denominator");
  if (num.isZero()) {
    den = QKPoly::one();
    return;
  }
  // Pull the denominator's lowest monomial out so exponents sit at zero.
  QExp lo = den.lowExp();
  num = num.shifted(-lo);
  den = den.shifted(-lo);
  // Opportunistic full reduction.
  if (auto q = QKPoly::divExact(num, den)) {
    num = *q;
    den = QKPoly::one();
    return;
  }
  // Normalize the denominator's leading rational coefficient to one.
  BigRat lead = den.t.rbegin()->second;
  if (lead != 1) {
    num = num.scaled(BigRat(1) / lead);
    den = den.scaled(BigRat(1) / lead);
  }
}

std::map<BigRat, BigRat> CoeffElem::specializeK(const BigRat& k0) const {
  auto spec = [&](const QKPoly& p) {
    std::map<BigRat, BigRat> out;
    for (auto& [e, c] : p.t) {
      BigRat expo = BigRat(e.dq, 2) + BigRat(e.dk, 2) * k0;
      out[expo] += c;
      if (out[expo] == 0) out.erase(expo);
    }
    return out;
  };
  auto dn = spec(den);
  if (dn.empty()) throw Error("specializeK: denominator vanishes at k=" + ratStr(k0));
  if (dn.size() != 1) throw Error("specializeK: non-monomial denominator after specialization");
  auto nm = spec(num);
  std::map<BigRat, BigRat> out;
  for (auto& [e, c] : nm) out[e - dn.begin()->first] = c / dn.begin()->second;
  return out;
}

CoeffElem qnumExact(int dq, int dk) {
  if (dq == 0 && dk == 0) return CoeffElem::zero();
  QKPoly numP = QKPoly::mono(dq, dk) - QKPoly::mono(-dq, -dk);
  QKPoly denP = QKPoly::mono(2, 0) - QKPoly::mono(-2, 0);
  return CoeffElem(numP, denP);
}

}  // namespace uqp::qseries
