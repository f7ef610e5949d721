#ifndef FIERZMD_COMMON_HPP
#define FIERZMD_COMMON_HPP

#include <stdexcept>
#include <string>

namespace fierzmd {

// Charge and mass in natural units (hbar = c = 1).
struct PhysicalParams {
  double q = 1.0;
  double mass = 0.0;
};

// Inversion formulas are valid only on the support of the relevant density.
struct SupportError : std::domain_error {
  explicit SupportError(const std::string& what) : std::domain_error(what) {}
};

// sigma^2 - omega^2 vanishing makes B, the tetrad and the reconstruction
// formulas blow up; callers get a typed error instead of large garbage.
struct DegenerateDensityError : std::domain_error {
  explicit DegenerateDensityError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace fierzmd

#endif
