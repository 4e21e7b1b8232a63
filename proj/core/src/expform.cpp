#include "uqp/expform.hpp"

namespace uqp::qseries {

ExpForm shiftTimesExp(const Lin3& s, const ExpForm& e) {
  ExpForm out;
  RatK k = RatK::k();
  RatK sPoly = RatK::fromRat(s.c1) + RatK::fromRat(s.ck) * k;  // polynomial part of s
  for (auto& [key, c] : e.t) {
    // (c1 + ck*k) * key stays on the same key.
    out.add(key, c * sPoly);
    if (s.cr != 0) {
      RatK rc = c * RatK::fromRat(s.cr);
      switch (key.rho) {
        case RhoTag::Rho:
          // r * (1/r) = 1
          out.add(EKey{RhoTag::None, key.zm}, rc);
          break;
        case RhoTag::RhoStar:
          // r * (1/r*) = 1 + k/r*
          out.add(EKey{RhoTag::None, key.zm}, rc);
          out.add(EKey{RhoTag::RhoStar, key.zm}, rc * k);
          break;
        case RhoTag::None:
          throw Error("shiftTimesExp: r times a plain exponent leaves the basis");
      }
    }
  }
  return out;
}

}  // namespace uqp::qseries
