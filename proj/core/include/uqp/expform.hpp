#pragma once

#include <map>
#include <sstream>

#include "uqp/coeff.hpp"

namespace uqp::qseries {

/// Value c1 + ck*k + cr*r. Shifts in field arguments (q^{alpha} z), the L
/// parameters of q-integers [L n], and zero-mode charges all live here.
/// r* is represented as r - k.
struct Lin3 {
  BigRat c1 = 0, ck = 0, cr = 0;

  Lin3() = default;
  Lin3(BigRat a, BigRat b, BigRat c) : c1(std::move(a)), ck(std::move(b)), cr(std::move(c)) {}
  static Lin3 num(const BigRat& a) { return {a, 0, 0}; }
  static Lin3 k() { return {0, 1, 0}; }
  static Lin3 r() { return {0, 0, 1}; }
  static Lin3 rStar() { return {0, -1, 1}; }  // r* = r - k

  bool isZero() const { return c1 == 0 && ck == 0 && cr == 0; }
  bool isRational() const { return ck == 0 && cr == 0; }
  bool hasR() const { return cr != 0; }

  friend Lin3 operator+(const Lin3& a, const Lin3& b) { return {a.c1 + b.c1, a.ck + b.ck, a.cr + b.cr}; }
  friend Lin3 operator-(const Lin3& a, const Lin3& b) { return {a.c1 - b.c1, a.ck - b.ck, a.cr - b.cr}; }
  friend Lin3 operator-(const Lin3& a) { return {-a.c1, -a.ck, -a.cr}; }
  Lin3 scaled(const BigRat& c) const { return {c1 * c, ck * c, cr * c}; }
  friend bool operator==(const Lin3& a, const Lin3& b) { return a.c1 == b.c1 && a.ck == b.ck && a.cr == b.cr; }
  friend bool operator!=(const Lin3& a, const Lin3& b) { return !(a == b); }
  friend bool operator<(const Lin3& a, const Lin3& b) {
    if (a.c1 != b.c1) return a.c1 < b.c1;
    if (a.ck != b.ck) return a.ck < b.ck;
    return a.cr < b.cr;
  }

  std::string str() const {
    std::ostringstream os;
    bool any = false;
    auto emit = [&](const BigRat& c, const char* sym) {
      if (c == 0) return;
      if (any && c > 0) os << "+";
      if (sym[0] == 0) {
        os << ratStr(c);
      } else {
        if (c == -1) os << "-";
        else if (c != 1) os << ratStr(c) << "*";
        os << sym;
      }
      any = true;
    };
    emit(c1, "");
    emit(ck, "k");
    emit(cr, "r");
    if (!any) os << "0";
    return os.str();
  }
};

enum class RhoTag : uint8_t { None = 0, Rho = 1, RhoStar = 2 };   // 1, 1/r, 1/r*
enum class ZmTag : uint8_t { None = 0, Pa = 1, Pb = 2, Pc = 3, Ph = 4 };

inline const char* rhoName(RhoTag t) {
  switch (t) {
    case RhoTag::Rho: return "/r";
    case RhoTag::RhoStar: return "/r*";
    default: return "";
  }
}
inline const char* zmName(ZmTag t) {
  switch (t) {
    case ZmTag::Pa: return "p_a";
    case ZmTag::Pb: return "p_b";
    case ZmTag::Pc: return "p_c";
    case ZmTag::Ph: return "p^";
    default: return "";
  }
}

struct EKey {
  RhoTag rho = RhoTag::None;
  ZmTag zm = ZmTag::None;
  friend bool operator<(const EKey& a, const EKey& b) {
    if (a.rho != b.rho) return a.rho < b.rho;
    return a.zm < b.zm;
  }
  friend bool operator==(const EKey& a, const EKey& b) { return a.rho == b.rho && a.zm == b.zm; }
};

/// A formal exponent: finite map from basis symbols {1, 1/r, 1/r*} x
/// {1, p_a, p_b, p_c, p^} to rational functions of k. Zero coefficients are
/// never stored, so equal exponents have identical maps.
class ExpForm {
 public:
  std::map<EKey, RatK> t;

  ExpForm() = default;
  static ExpForm con(const RatK& c) {
    ExpForm e;
    e.add(EKey{}, c);
    return e;
  }
  static ExpForm rational(const BigRat& c) { return con(RatK::fromRat(c)); }
  static ExpForm sym(RhoTag rho, ZmTag zm, const RatK& c) {
    ExpForm e;
    e.add(EKey{rho, zm}, c);
    return e;
  }

  bool isZero() const { return t.empty(); }
  void add(const EKey& k, const RatK& c) {
    if (c.isZero()) return;
    auto it = t.find(k);
    if (it == t.end()) {
      t[k] = c;
    } else {
      it->second = it->second + c;
      if (it->second.isZero()) t.erase(it);
    }
  }
  RatK coeff(const EKey& k) const {
    auto it = t.find(k);
    return it == t.end() ? RatK() : it->second;
  }

  friend ExpForm operator+(const ExpForm& a, const ExpForm& b) {
    ExpForm r = a;
    for (auto& [k, c] : b.t) r.add(k, c);
    return r;
  }
  friend ExpForm operator-(const ExpForm& a, const ExpForm& b) {
    ExpForm r = a;
    for (auto& [k, c] : b.t) r.add(k, -c);
    return r;
  }
  friend ExpForm operator-(const ExpForm& a) {
    ExpForm r;
    for (auto& [k, c] : a.t) r.t[k] = -c;
    return r;
  }
  ExpForm scaled(const RatK& c) const {
    ExpForm r;
    if (c.isZero()) return r;
    for (auto& [k, cc] : t) r.t[k] = cc * c;
    return r;
  }
  friend bool operator==(const ExpForm& a, const ExpForm& b) { return a.t == b.t; }
  friend bool operator!=(const ExpForm& a, const ExpForm& b) { return !(a.t == b.t); }
  friend bool operator<(const ExpForm& a, const ExpForm& b) { return a.t < b.t; }

  bool zmFree() const {
    for (auto& [k, c] : t) {
      (void)c;
      if (k.zm != ZmTag::None) return false;
    }
    return true;
  }

  /// Split off the plain rational constant part (the (None,None) key when it
  /// is k-independent); used to fold integer powers into series indices.
  std::pair<BigRat, ExpForm> splitRationalConst() const {
    ExpForm rest = *this;
    BigRat c = 0;
    auto it = rest.t.find(EKey{});
    if (it != rest.t.end() && it->second.isRational()) {
      c = it->second.asRational();
      rest.t.erase(EKey{});
    }
    return {c, rest};
  }

  std::string str() const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : t) {
      if (!first) os << " + ";
      os << "(" << c.str() << ")";
      if (k.zm != ZmTag::None) os << "*" << zmName(k.zm);
      os << rhoName(k.rho);
      first = false;
    }
    return os.str();
  }
};

/// Multiply a shift value s = c1 + ck*k + cr*r into a formal exponent,
/// landing back in the ExpForm basis. The products of r with the rho
/// symbols close: r*(1/r) = 1, r*(1/r*) = 1 + k/r*. A product of r with a
/// plain (non-rho) key would leave the basis and is rejected; it never
/// arises from the fields handled here.
ExpForm shiftTimesExp(const Lin3& s, const ExpForm& e);

}  // namespace uqp::qseries
