#include "asmdpp/series.hpp"

namespace asmdpp {

GradedSeries series_from_ratfun(const RatFun& f, const std::string& gvar, int order) {
  // Split num/den into coefficients in gvar; negative powers in the
  // (canonical, Laurent-cleared) parts would make this a genuine Laurent
  // expansion, which we only allow when the overall valuation stays >= 0.
  auto ncs = f.num().coeffs_in(gvar);
  auto dcs = f.den().coeffs_in(gvar);
  int nshift = f.num().min_exp(gvar);
  int dshift = f.den().min_exp(gvar);
  int shift = nshift - dshift;  // valuation offset of num/den as written
  if (shift < 0) throw NotExpandable("negative valuation in " + gvar);

  auto dc = [&](int k) -> RatFun {
    auto it = dcs.find(k + dshift);
    return it == dcs.end() ? RatFun() : RatFun(it->second);
  };
  RatFun d0 = dc(0);
  if (d0.is_zero()) throw NotExpandable("denominator has no constant term in " + gvar);
  RatFun d0inv = d0.inverse();

  GradedSeries s(gvar, order);
  for (int k = 0; k + shift <= order; ++k) {
    RatFun acc;
    auto it = ncs.find(k + nshift);
    if (it != ncs.end()) acc = RatFun(it->second);
    for (int j = 1; j <= k; ++j) {
      RatFun dj = dc(j);
      if (!dj.is_zero()) acc -= dj * s.coeff(k - j + shift);
    }
    s.coeff_ref(k + shift) = acc * d0inv;
  }
  return s;
}

}  // namespace asmdpp
