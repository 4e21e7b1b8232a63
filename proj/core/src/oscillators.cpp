#include "uqp/oscillators.hpp"

namespace uqp::osc {

HatRat normTimesN(Family f) {
  CoeffElem invSq = CoeffElem::qMinusQinv().inverse().pow(2);
  HatRat r;
  switch (f) {
    case Family::A:
      r.num = HatPoly::binom(Lin3{2, 1, 0}) * HatPoly::binom(Lin3{2, 0, 0});  // [(k+2)n][2n]
      r.num = r.num.scaled(invSq);
      break;
    case Family::B:
      r.num = HatPoly::binom(Lin3{1, 0, 0}) * HatPoly::binom(Lin3{1, 0, 0});
      r.num = r.num.scaled(-invSq);
      break;
    case Family::C:
      r.num = HatPoly::binom(Lin3{1, 0, 0}) * HatPoly::binom(Lin3{1, 0, 0});
      r.num = r.num.scaled(invSq);
      break;
  }
  return r;
}

RatK zeroModeComm(PSym p) {
  switch (p) {
    case PSym::Pa: return RatK::fromPoly(LPoly::mono(1, 2) + LPoly::con(4));  // 2(k+2)
    case PSym::Pb: return RatK::fromRat(-1);
    case PSym::Pc: return RatK::fromRat(1);
    default: return RatK::fromRat(-1);  // [p^, q^] = -[q^, p^] = -1
  }
}

HatRat Summand::hatCoeff() const {
  HatRat h = HatRat::con(coeff);
  CoeffElem inv = CoeffElem::qMinusQinv();
  for (auto& L : numL) {
    // [L n] = (q^{Ln} - q^{-Ln})/(q - q^{-1})
    Lin3 LL = L;
    bool flip = normalizeBinomLabel(LL);
    HatPoly b = HatPoly::binom(LL);
    h.num = h.num * b;
    if (flip) h.num = -h.num;
    h = h.scaled(inv.inverse());
  }
  for (auto& M : denL) {
    if (M.isZero()) throw Error("Summand: zero entry in denominator list");
    h = h.scaled(inv);
    h.divByBinom(M);
  }
  // argument monomial q^{-+ argShift * n}
  Lin3 s = (side == Side::Ann) ? -argShift : argShift;
  if (!s.isZero()) h.num = h.num.shifted(HatKey::fromLin(s));
  return h;
}

PSeries Summand::kernelCoeff(int64_t n, Half order) const {
  if (n < 1) throw Error("kernelCoeff: n must be positive");
  return hatCoeff().evalAtN(n, order);
}

void LinForm::addQ(QSym q, const QCoeff& c) {
  auto it = zeroQ.find(q);
  if (it == zeroQ.end()) {
    if (!c.isZero()) zeroQ[q] = c;
  } else {
    it->second = it->second + c;
    if (it->second.isZero()) zeroQ.erase(it);
  }
}

static void addToMap(std::map<PSym, ExpForm>& m, PSym p, const ExpForm& c) {
  if (c.isZero()) return;
  auto it = m.find(p);
  if (it == m.end()) {
    m[p] = c;
  } else {
    it->second = it->second + c;
    if (it->second.isZero()) m.erase(it);
  }
}

void LinForm::addPLogQ(PSym p, const ExpForm& c) { addToMap(pLogQ, p, c); }
void LinForm::addPLogVar(PSym p, const ExpForm& c) { addToMap(pLogVar, p, c); }

void LinForm::addPLogShifted(PSym p, const ExpForm& coeff, const Lin3& shift, bool hasVar) {
  if (!shift.isZero()) addPLogQ(p, shiftTimesExp(shift, coeff));
  if (hasVar) addPLogVar(p, coeff);
}

LinForm LinForm::shiftedArg(const Lin3& c) const {
  LinForm r = *this;
  for (auto& s : r.summands) s.argShift = s.argShift + c;
  if (!c.isZero())
    for (auto& [p, e] : pLogVar) r.addPLogQ(p, shiftTimesExp(c, e));
  return r;
}

LinForm operator+(const LinForm& a, const LinForm& b) {
  LinForm r = a;
  for (auto& s : b.summands) r.summands.push_back(s);
  for (auto& [q, c] : b.zeroQ) r.addQ(q, c);
  for (auto& [p, e] : b.pLogQ) r.addPLogQ(p, e);
  for (auto& [p, e] : b.pLogVar) r.addPLogVar(p, e);
  return r;
}

HatRat LinForm::sideCoeff(Family f, Side s) const {
  HatRat acc;
  for (auto& sm : summands) {
    if (sm.family != f || sm.side != s) continue;
    acc = acc + sm.hatCoeff();
  }
  return acc;
}

bool LinForm::sameContent(const LinForm& o) const {
  for (Family f : {Family::A, Family::B, Family::C})
    for (Side s : {Side::Ann, Side::Cre})
      if (!(sideCoeff(f, s) == o.sideCoeff(f, s))) return false;
  if (!(zeroQ == o.zeroQ)) return false;
  return pLogQ == o.pLogQ && pLogVar == o.pLogVar;
}

Contraction contract(const LinForm& A, const LinForm& B, int N, Half order) {
  Contraction out;
  for (Family f : {Family::A, Family::B, Family::C}) {
    HatRat ha = A.sideCoeff(f, Side::Ann);
    if (ha.isZero()) continue;
    HatRat hb = B.sideCoeff(f, Side::Cre);
    if (hb.isZero()) continue;
    out.sHat = out.sHat + ha * hb * normTimesN(f);
  }
  out.coeff.reserve(N);
  for (int64_t n = 1; n <= N; n++) {
    PSeries c = out.sHat.isZero() ? PSeries::zeroToOrder(order) : out.sHat.evalAtN(n, order);
    out.coeff.push_back(c.scaled(CoeffElem::fromRat(BigRat(1, n))));
  }
  return out;
}

ZmFactor zeroModeReorder(const LinForm& A, const LinForm& B) {
  ZmFactor out;
  auto pair = [&](const std::map<PSym, ExpForm>& pm, bool isVar) {
    for (auto& [p, pcoeff] : pm) {
      QSym q = static_cast<QSym>(static_cast<int>(p));
      auto it = B.zeroQ.find(q);
      if (it == B.zeroQ.end()) continue;
      RatK comm = zeroModeComm(p);
      const QCoeff& qc = it->second;
      // exponent = pcoeff * (qc.r0 + qc.rr * r) * comm
      ExpForm e = pcoeff.scaled(qc.r0 * comm);
      if (qc.rr != 0) e = e + shiftTimesExp(Lin3{0, 0, qc.rr}, pcoeff).scaled(comm);
      if (isVar) out.zF = out.zF + e;
      else out.qF = out.qF + e;
    }
  };
  pair(A.pLogQ, false);
  pair(A.pLogVar, true);
  return out;
}

}  // namespace uqp::osc
