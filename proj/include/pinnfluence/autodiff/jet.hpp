#pragma once

#include <span>

#include "pinnfluence/autodiff/activation.hpp"
#include "pinnfluence/autodiff/tape.hpp"
#include "pinnfluence/error.hpp"

namespace pinnfluence::ad {

// A scalar field value together with its first and second partials in (x, y).
// S is double for plain evaluation or Var when every component is recorded.
template <class S>
struct BasicJet2 {
  S v{};
  S dx{};
  S dy{};
  S dxx{};
  S dxy{};
  S dyy{};
};

using Jet2 = BasicJet2<double>;
using VarJet2 = BasicJet2<Var>;

inline Jet2 seed_x(double x) { return {x, 1.0, 0.0, 0.0, 0.0, 0.0}; }
inline Jet2 seed_y(double y) { return {y, 0.0, 1.0, 0.0, 0.0, 0.0}; }

template <class S>
BasicJet2<S> jet_constant(S c) {
  return {c, S{}, S{}, S{}, S{}, S{}};
}

// Affine map applied componentwise; the bias only enters the value.
template <class S>
BasicJet2<S> jet_linear(std::span<const BasicJet2<S>> inputs, std::span<const S> weights, const S& bias) {
  if (inputs.size() != weights.size())
    throw ContractViolation("jet_linear: weights length does not match inputs length");
  BasicJet2<S> out = jet_constant<S>(bias);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const S& w = weights[i];
    const BasicJet2<S>& in = inputs[i];
    out.v = out.v + w * in.v;
    out.dx = out.dx + w * in.dx;
    out.dy = out.dy + w * in.dy;
    out.dxx = out.dxx + w * in.dxx;
    out.dxy = out.dxy + w * in.dxy;
    out.dyy = out.dyy + w * in.dyy;
  }
  return out;
}

// Second-order chain rule for an elementwise activation g.
inline Jet2 jet_activation(const Jet2& in, Activation act) {
  const ActivationDerivs g = activation_derivs(act, in.v);
  return {g.g0,
          g.g1 * in.dx,
          g.g1 * in.dy,
          g.g2 * in.dx * in.dx + g.g1 * in.dxx,
          g.g2 * in.dx * in.dy + g.g1 * in.dxy,
          g.g2 * in.dy * in.dy + g.g1 * in.dyy};
}

inline VarJet2 jet_activation(const VarJet2& in, Activation act) {
  const Var g0 = activation_derivative(act, 0, in.v);
  const Var g1 = activation_derivative(act, 1, in.v);
  const Var g2 = activation_derivative(act, 2, in.v);
  return {g0,
          g1 * in.dx,
          g1 * in.dy,
          g2 * in.dx * in.dx + g1 * in.dxx,
          g2 * in.dx * in.dy + g1 * in.dxy,
          g2 * in.dy * in.dy + g1 * in.dyy};
}

}  // namespace pinnfluence::ad
