// constants.hpp: physical constants used throughout the library
//
// CODATA 2018 values.  Every quantity is SI.  The reference mass m0 is the
// proton mass; collapse rates quoted per nucleon are tied to it.

#pragma once

#include <stdexcept>

namespace tauclock {

struct PhysicalConstants {
  double hbar = 1.054571817e-34;       // reduced Planck constant [J s]
  double G = 6.67430e-11;              // gravitational constant [m^3 kg^-1 s^-2]
  double c = 299792458.0;              // speed of light [m/s]
  double m0 = 1.67262192369e-27;       // reference (proton) mass [kg]
  double seconds_per_year = 3.15576e7; // Julian year [s]
  double age_of_universe_s = 4.35e17;  // [s]

  // All members must be strictly positive.
  void validate() const {
    if (!(hbar > 0.0) || !(G > 0.0) || !(c > 0.0) || !(m0 > 0.0) ||
        !(seconds_per_year > 0.0) || !(age_of_universe_s > 0.0)) {
      throw std::invalid_argument("PhysicalConstants: all entries must be > 0");
    }
  }
};

}  // namespace tauclock
