#ifndef QPARITY_FDIFF_HPP
#define QPARITY_FDIFF_HPP

#include <functional>

namespace qparity {

struct Derivative {
  double value = 0.0;            // central difference at step h
  double half_step_value = 0.0;  // same at h/2
  double richardson_rel = 0.0;   // |value - half_step_value| / scale
  bool richardson_ok = false;    // richardson_rel < 1e-6
};

/// Central finite difference (f(x+h) - f(x-h)) / 2h with a halved-step
/// agreement check. scale_floor sets the smallest magnitude against which
/// the agreement is judged (keeps zero derivatives from failing spuriously).
/// Throws validation_error on non-finite evaluations.
Derivative central_difference(const std::function<double(double)>& fn, double x,
                              double h, double scale_floor = 1e-300);

} // namespace qparity

#endif
