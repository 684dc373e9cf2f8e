#include "qparity/fdiff.hpp"

#include <algorithm>
#include <cmath>

#include "qparity/errors.hpp"

namespace qparity {

Derivative central_difference(const std::function<double(double)>& fn, double x,
                              double h, double scale_floor) {
  if (!(h > 0.0)) throw validation_error("central_difference: step must be > 0");
  const auto eval = [&](double xx) {
    const double v = fn(xx);
    if (!std::isfinite(v))
      throw validation_error("central_difference: non-finite function value");
    return v;
  };
  Derivative d;
  d.value = (eval(x + h) - eval(x - h)) / (2.0 * h);
  d.half_step_value = (eval(x + 0.5 * h) - eval(x - 0.5 * h)) / h;
  const double scale =
      std::max({std::fabs(d.value), std::fabs(d.half_step_value), scale_floor});
  d.richardson_rel = std::fabs(d.value - d.half_step_value) / scale;
  d.richardson_ok = d.richardson_rel < 1e-6;
  return d;
}

} // namespace qparity
