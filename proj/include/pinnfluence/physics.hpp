#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "pinnfluence/autodiff/jet.hpp"
#include "pinnfluence/error.hpp"
#include "pinnfluence/geometry.hpp"

namespace pinnfluence {

// Fluid constants; defaults are rho = 1, nu = 0.001 m^2/s, U_max = 0.3 m/s.
struct FluidParams {
  double rho = 1.0;
  double nu = 0.001;
  double u_max = 0.3;

  void validate() const;
};

// `broken` drops the u1 * du1/dx convection term from the x-momentum equation.
enum class PdeVariant { full, broken };

std::string_view to_string(PdeVariant v) noexcept;
PdeVariant variant_from_string(std::string_view name);

template <class S>
struct BasicFieldJet {
  ad::BasicJet2<S> u1;
  ad::BasicJet2<S> u2;
  ad::BasicJet2<S> p;
};

using FieldJet = BasicFieldJet<double>;
using VarFieldJet = BasicFieldJet<ad::Var>;

template <class S>
struct BasicResidualVector {
  S r_mom_x{};
  S r_mom_y{};
  S r_cont{};
};

using ResidualVector = BasicResidualVector<double>;

// Steady incompressible Navier-Stokes residuals (momentum x/y, continuity).
template <class S>
BasicResidualVector<S> ns_residual(const BasicFieldJet<S>& f, const FluidParams& params, PdeVariant variant) {
  const double inv_rho = 1.0 / params.rho;
  const double nu = params.nu;
  const auto& u1 = f.u1;
  const auto& u2 = f.u2;
  S conv_x = u2.v * u1.dy;
  if (variant == PdeVariant::full) conv_x = u1.v * u1.dx + conv_x;
  BasicResidualVector<S> r;
  r.r_mom_x = conv_x + inv_rho * f.p.dx - nu * (u1.dxx + u1.dyy);
  r.r_mom_y = u1.v * u2.dx + u2.v * u2.dy + inv_rho * f.p.dy - nu * (u2.dxx + u2.dyy);
  r.r_cont = u1.dx + u2.dy;
  return r;
}

// Parabolic inflow U_max (y - y_min)(y_max - y) / H^2. Throws ContractViolation
// for y outside [y_min, y_max].
double inflow_profile(double y, const FluidParams& params, const DomainSpec& spec);

// Two boundary residual components per point:
//   walls and cylinder: no slip (u1, u2)
//   inlet: (u1 - inflow, u2)
//   outlet: directional do-nothing nu grad u1 - (p / rho, 0)
template <class S>
std::array<S, 2> bc_residual(Point2 point, Segment seg, const BasicFieldJet<S>& f, const FluidParams& params,
                             const DomainSpec& spec) {
  switch (seg) {
    case Segment::bottom:
    case Segment::top:
    case Segment::cylinder:
      return {f.u1.v, f.u2.v};
    case Segment::inlet:
      return {f.u1.v - inflow_profile(point.y, params, spec), f.u2.v};
    case Segment::outlet:
      return {params.nu * f.u1.dx - f.p.v * (1.0 / params.rho), params.nu * f.u1.dy};
  }
  throw ContractViolation("bc_residual: unknown boundary segment");
}

template <class S>
S squared_norm(const BasicResidualVector<S>& r) {
  return r.r_mom_x * r.r_mom_x + r.r_mom_y * r.r_mom_y + r.r_cont * r.r_cont;
}

template <class S>
S squared_norm(const std::array<S, 2>& r) {
  return r[0] * r[0] + r[1] * r[1];
}

}  // namespace pinnfluence
