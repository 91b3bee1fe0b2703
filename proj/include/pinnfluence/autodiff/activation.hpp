#pragma once

#include <array>
#include <string>
#include <string_view>

namespace pinnfluence::ad {

enum class Activation { identity, tanh, gelu };

// Value and first three derivatives of an activation at one point.
struct ActivationDerivs {
  double g0 = 0.0;
  double g1 = 0.0;
  double g2 = 0.0;
  double g3 = 0.0;
};

// GELU is the exact form z * Phi(z) with Phi the standard normal CDF.
ActivationDerivs activation_derivs(Activation act, double z) noexcept;

// Plain value, no derivatives.
double activation_value(Activation act, double z) noexcept;

std::string_view to_string(Activation act) noexcept;
// Throws ValidationError on unknown names.
Activation activation_from_string(std::string_view name);

}  // namespace pinnfluence::ad
