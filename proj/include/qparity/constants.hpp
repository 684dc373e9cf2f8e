#ifndef QPARITY_CONSTANTS_HPP
#define QPARITY_CONSTANTS_HPP

namespace qparity {

inline constexpr const char* kToolVersion = "0.1.0";

namespace constants {

// CODATA 2018 exact values
inline constexpr double kPlanck = 6.62607015e-34;          // J s
inline constexpr double kBoltzmann = 1.380649e-23;         // J / K
inline constexpr double kElectronCharge = 1.602176634e-19; // C

inline constexpr double kJoulePerMicroEv = 1.602176634e-25;
inline constexpr double kHzPerMicroEv = kJoulePerMicroEv / kPlanck; // 2.417989e8

inline constexpr double kFreeSpaceImpedanceOhm = 376.730313668;

// single-spin density of states at the Fermi energy in Al, (J m^3)^-1
inline constexpr double kAlSingleSpinDos = 0.73e47;

inline constexpr double kPi = 3.14159265358979323846;

} // namespace constants

inline constexpr double uev_to_joule(double uev) {
  return uev * constants::kJoulePerMicroEv;
}
inline constexpr double uev_to_hz(double uev) {
  return uev * constants::kHzPerMicroEv;
}
inline constexpr double hz_to_uev(double hz) {
  return hz / constants::kHzPerMicroEv;
}
inline constexpr double kelvin_to_uev(double t_k) {
  return t_k * constants::kBoltzmann / constants::kJoulePerMicroEv;
}

} // namespace qparity

#endif
