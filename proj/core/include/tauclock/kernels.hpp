// kernels.hpp: spatial correlation kernels of the collapse noise field
//
// D(r) factorizes as D(0) * f(r/sigma) with a dimensionless shape f:
//   CSL: f(u) = exp(-u^2/4),            D(0) = hbar^2 lambda / m0^2
//   DP:  f(u) = (sqrt(pi)/u) erf(u/2),  D(0) = hbar G / (sqrt(pi) sigma)
// Units of D are m^4 s^-3.  Both shapes satisfy f(0) = 1 and decay
// monotonically; DP falls off as sqrt(pi)/u, CSL as a Gaussian.

#pragma once

#include "tauclock/constants.hpp"
#include "tauclock/params.hpp"

namespace tauclock {

// f(u) = D(u sigma) / D(0) for u >= 0.  The DP shape evaluates a Taylor
// series below u = 1e-3 where erf(u/2)/u loses digits to cancellation.
double kernel_shape(ModelKind kind, double u);

struct KernelShape {
  ModelKind model = ModelKind::Csl;
  double operator()(double u) const { return kernel_shape(model, u); }
};

// D(r) [m^4 s^-3] at separation r >= 0 [m].
double kernel_smeared(const ModelParams& params, double r_m,
                      const PhysicalConstants& constants = {});

// D(0) [m^4 s^-3]
double kernel_zero(const ModelParams& params,
                   const PhysicalConstants& constants = {});

// Fourier transform of the DP kernel, (4 pi hbar G / k^2) exp(-sigma^2 k^2)
// [m^7 s^-3] for k > 0 [1/m].  Throws for CSL parameters.
double kernel_dp_fourier(const ModelParams& params, double k_per_m,
                         const PhysicalConstants& constants = {});

}  // namespace tauclock
