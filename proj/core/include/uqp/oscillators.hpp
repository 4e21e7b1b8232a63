#pragma once

#include <vector>

#include "uqp/hat.hpp"

namespace uqp::osc {

using namespace uqp::qseries;

enum class Family : uint8_t { A = 0, B = 1, C = 2 };
enum class Side : uint8_t { Ann = 0, Cre = 1 };
enum class QSym : uint8_t { Qa = 0, Qb = 1, Qc = 2, Qh = 3 };
enum class PSym : uint8_t { Pa = 0, Pb = 1, Pc = 2, Ph = 3 };

inline const char* famName(Family f) { return f == Family::A ? "a" : (f == Family::B ? "b" : "c"); }

inline ZmTag psymTag(PSym p) {
  switch (p) {
    case PSym::Pa: return ZmTag::Pa;
    case PSym::Pb: return ZmTag::Pb;
    case PSym::Pc: return ZmTag::Pc;
    default: return ZmTag::Ph;
  }
}

/// [f_n, f_{-n}] * n as an exact function of n:
/// a -> [(k+2)n][2n], b -> -[n]^2, c -> [n]^2.
HatRat normTimesN(Family f);

/// Zero-mode pairing [p, q] per family: 2(k+2), -1, +1, and [p^, q^] = -1
/// (the Heisenberg pair has [q^, p^] = 1).
RatK zeroModeComm(PSym p);

/// One closed-grammar summand of a field exponent: modes f_{+-n} weighted by
///   coeff * prod [L_i n] / prod [M_j n] * q^{-+ argShift * n}
/// (arg power -n on the annihilation side, +n on the creation side).
struct Summand {
  Family family = Family::A;
  Side side = Side::Ann;
  CoeffElem coeff = CoeffElem::one();
  std::vector<Lin3> numL, denL;
  Lin3 argShift;

  /// Exact mode coefficient as a function of n, argument monomial included.
  HatRat hatCoeff() const;
  /// Spec operation kernelCoeff: value at concrete n, elliptic denominators
  /// expanded to the given order.
  PSeries kernelCoeff(int64_t n, Half order) const;
  Summand shiftedArg(const Lin3& c) const {
    Summand s = *this;
    s.argShift = s.argShift + c;
    return s;
  }
};

/// Coefficient of a q-type zero mode: r0(k) + rr * r.
struct QCoeff {
  RatK r0;
  BigRat rr = 0;
  bool isZero() const { return r0.isZero() && rr == 0; }
  friend QCoeff operator+(const QCoeff& a, const QCoeff& b) { return {a.r0 + b.r0, a.rr + b.rr}; }
  friend QCoeff operator-(const QCoeff& a) { return {-a.r0, -a.rr}; }
  friend bool operator==(const QCoeff& a, const QCoeff& b) { return a.r0 == b.r0 && a.rr == b.rr; }
  std::string str() const {
    std::string s = r0.str();
    if (rr != 0) s += " + (" + ratStr(rr) + ")r";
    return s;
  }
};

/// Closed-form field exponent: finitely many mode summands plus structured
/// zero-mode content. The p-type content is stored split into its ln q and
/// ln z parts, which is the canonical form used for reorder factors,
/// operator equality and Fock-sector specialization.
struct LinForm {
  std::vector<Summand> summands;
  std::map<QSym, QCoeff> zeroQ;
  std::map<PSym, ExpForm> pLogQ;    // coefficient of p * ln q
  std::map<PSym, ExpForm> pLogVar;  // coefficient of p * ln z

  void addSummand(Summand s) { summands.push_back(std::move(s)); }
  void addQ(QSym q, const QCoeff& c);
  void addPLogQ(PSym p, const ExpForm& c);
  void addPLogVar(PSym p, const ExpForm& c);
  /// p * ln(q^{shift} var) contribution, split on entry.
  void addPLogShifted(PSym p, const ExpForm& coeff, const Lin3& shift, bool hasVar);

  LinForm shiftedArg(const Lin3& c) const;
  friend LinForm operator+(const LinForm& a, const LinForm& b);

  /// Aggregate mode coefficient per (family, side) as a function of n.
  HatRat sideCoeff(Family f, Side s) const;

  bool sameContent(const LinForm& o) const;
};

/// Scalar contraction [A_ann(z), B_cre(w)] as a series in x = w/z:
/// sHat is n * (coefficient of x^n) as an exact function of n.
struct Contraction {
  HatRat sHat;
  std::vector<PSeries> coeff;  // index 0 -> n=1, ..., size N
};

Contraction contract(const LinForm& A, const LinForm& B, int N, Half order);

/// Zero-mode exchange factor produced when the p-type content of A (left)
/// moves right past the q-type content of B: exp([log pi_A, q_B]).
struct ZmFactor {
  ExpForm qF;  // formal q-exponent
  ExpForm zF;  // z-exponent
  ExpForm wF;  // w-exponent
};

ZmFactor zeroModeReorder(const LinForm& A, const LinForm& B);

}  // namespace uqp::osc
