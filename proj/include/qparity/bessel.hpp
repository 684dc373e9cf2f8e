#ifndef QPARITY_BESSEL_HPP
#define QPARITY_BESSEL_HPP

namespace qparity {

/// Exponentially scaled modified Bessel functions e^x K0(x), e^x K1(x).
/// Valid for all x > 0; never under- or overflows.
double bessel_k0_scaled(double x);
double bessel_k1_scaled(double x);

/// K0(x), K1(x). Returns 0 and sets *underflowed when e^-x drives the
/// result below the smallest representable double (x around 750).
double bessel_k0(double x, bool* underflowed = nullptr);
double bessel_k1(double x, bool* underflowed = nullptr);

} // namespace qparity

#endif
