#ifndef IDP_KINDS_HPP_
#define IDP_KINDS_HPP_

namespace idp {

enum class SchemeKind { FirstOrder, DG, Weno5 };

enum class LimiterKind {
  None,
  ZhangShu,     // scaling limiter (DG)
  Simplified,   // simplified face limiter (DG)
  Zalesak,      // FCT (scalar)
  Parametrized, // scalar bounds or Euler box construction
  HuAdamsShu,
  Monolithic,
  Guermond,
};

inline bool is_scaling_limiter(LimiterKind k) {
  return k == LimiterKind::ZhangShu || k == LimiterKind::Simplified;
}
inline bool is_flux_limiter(LimiterKind k) {
  return k == LimiterKind::Zalesak || k == LimiterKind::Parametrized ||
         k == LimiterKind::HuAdamsShu || k == LimiterKind::Monolithic ||
         k == LimiterKind::Guermond;
}

}  // namespace idp

#endif  // IDP_KINDS_HPP_
