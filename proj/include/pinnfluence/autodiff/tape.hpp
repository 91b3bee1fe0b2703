#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <vector>

#include "pinnfluence/autodiff/activation.hpp"
#include "pinnfluence/error.hpp"

namespace pinnfluence::ad {

class Tape;

// Handle to a scalar recorded on a Tape. A Var without a tape is a constant.
class Var {
 public:
  Var() = default;
  Var(double constant) : value_(constant) {}  // NOLINT(google-explicit-constructor)

  double value() const noexcept { return value_; }
  bool is_constant() const noexcept { return tape_ == nullptr; }
  Tape* tape() const noexcept { return tape_; }
  std::uint32_t index() const noexcept { return index_; }

 private:
  friend class Tape;
  Var(Tape* tape, std::uint32_t index, double value) : tape_(tape), index_(index), value_(value) {}

  Tape* tape_ = nullptr;
  std::uint32_t index_ = 0;
  double value_ = 0.0;
};

// Multi-output operation recorded as one unit. `backward` receives the
// adjoints of its outputs and adds its vector-Jacobian product into the
// adjoint slots of its inputs (which must precede the block on the tape).
class BlockOp {
 public:
  virtual ~BlockOp() = default;
  virtual void backward(std::span<const double> output_adjoints, std::span<double> adjoints) const = 0;
};

// Reverse-mode tape. Nodes are appended in evaluation order, so the node list
// is topologically sorted by construction and one backward pass over it
// visits every node exactly once.
class Tape {
 public:
  static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  Var leaf(double value) { return push(kNone, 0.0, kNone, 0.0, value); }

  std::vector<Var> leaves(std::span<const double> values) {
    std::vector<Var> out;
    out.reserve(values.size());
    for (double v : values) out.push_back(leaf(v));
    return out;
  }

  Var unary(const Var& x, double value, double dvalue_dx) {
    if (x.is_constant()) return Var(value);
    check_owned(x);
    return push(x.index_, dvalue_dx, kNone, 0.0, value);
  }

  Var binary(const Var& a, double da, const Var& b, double db, double value) {
    if (a.is_constant() && b.is_constant()) return Var(value);
    if (a.is_constant()) return unary(b, value, db);
    if (b.is_constant()) return unary(a, value, da);
    check_owned(a);
    check_owned(b);
    return push(a.index_, da, b.index_, db, value);
  }

  // Records a block whose outputs take the given values. Returns one Var per
  // output, occupying consecutive tape slots.
  std::vector<Var> block(std::unique_ptr<BlockOp> op, std::span<const double> output_values);

  std::size_t size() const noexcept { return nodes_.size(); }
  void reset();

  // Adjoint of every node with respect to `output` (one full reverse sweep).
  void adjoints(const Var& output, std::vector<double>& adj) const;

  // Gradient of `output` with respect to `wrt`. Entries not reachable from
  // the output are zero. Throws ContractViolation for foreign or constant
  // outputs.
  std::vector<double> grad(const Var& output, std::span<const Var> wrt) const;
  void grad_into(const Var& output, std::span<const Var> wrt, std::span<double> out,
                 std::vector<double>& scratch) const;

  // Gradient with respect to a contiguous run of leaves [first, first + out.size()).
  void grad_range(const Var& output, std::uint32_t first, std::span<double> out,
                  std::vector<double>& scratch) const;

 private:
  struct Node {
    std::uint32_t a;
    std::uint32_t b;
    double da;
    double db;
    std::uint32_t block;  // index into blocks_ when this slot is a block's first output
  };

  struct Block {
    std::uint32_t first_output;
    std::uint32_t count;
    std::unique_ptr<BlockOp> op;
  };

  Var push(std::uint32_t a, double da, std::uint32_t b, double db, double value) {
    const auto index = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back({a, b, da, db, kNone});
    return Var(this, index, value);
  }

  void check_owned(const Var& v) const {
    if (v.tape_ != this || v.index_ >= nodes_.size())
      throw ContractViolation("variable is not recorded on this tape");
  }

  std::vector<Node> nodes_;
  std::vector<Block> blocks_;
};

inline Var operator+(const Var& a, const Var& b) {
  const double v = a.value() + b.value();
  Tape* t = a.tape() ? a.tape() : b.tape();
  return t ? t->binary(a, 1.0, b, 1.0, v) : Var(v);
}
inline Var operator-(const Var& a, const Var& b) {
  const double v = a.value() - b.value();
  Tape* t = a.tape() ? a.tape() : b.tape();
  return t ? t->binary(a, 1.0, b, -1.0, v) : Var(v);
}
inline Var operator*(const Var& a, const Var& b) {
  const double v = a.value() * b.value();
  Tape* t = a.tape() ? a.tape() : b.tape();
  return t ? t->binary(a, b.value(), b, a.value(), v) : Var(v);
}
inline Var operator/(const Var& a, const Var& b) {
  const double inv = 1.0 / b.value();
  const double v = a.value() * inv;
  Tape* t = a.tape() ? a.tape() : b.tape();
  return t ? t->binary(a, inv, b, -v * inv, v) : Var(v);
}
inline Var operator-(const Var& a) {
  return a.tape() ? a.tape()->unary(a, -a.value(), -1.0) : Var(-a.value());
}
inline Var operator+(const Var& a, double b) { return a + Var(b); }
inline Var operator+(double a, const Var& b) { return Var(a) + b; }
inline Var operator-(const Var& a, double b) { return a - Var(b); }
inline Var operator-(double a, const Var& b) { return Var(a) - b; }
inline Var operator*(const Var& a, double b) { return a * Var(b); }
inline Var operator*(double a, const Var& b) { return Var(a) * b; }
inline Var operator/(const Var& a, double b) { return a * (1.0 / b); }

inline Var& operator+=(Var& a, const Var& b) { return a = a + b; }
inline Var& operator-=(Var& a, const Var& b) { return a = a - b; }
inline Var& operator*=(Var& a, const Var& b) { return a = a * b; }

inline Var square(const Var& a) {
  const double v = a.value();
  return a.tape() ? a.tape()->unary(a, v * v, 2.0 * v) : Var(v * v);
}

// sqrt with a zero subgradient at the origin.
inline Var sqrt(const Var& a) {
  const double s = std::sqrt(a.value());
  const double d = s > 0.0 ? 0.5 / s : 0.0;
  return a.tape() ? a.tape()->unary(a, s, d) : Var(s);
}

inline double square(double a) { return a * a; }

// The `order`-th derivative of the activation (order 0..2) as a recorded
// function of its argument.
inline Var activation_derivative(Activation act, int order, const Var& z) {
  const ActivationDerivs d = activation_derivs(act, z.value());
  const double g[4] = {d.g0, d.g1, d.g2, d.g3};
  return z.tape() ? z.tape()->unary(z, g[order], g[order + 1]) : Var(g[order]);
}

}  // namespace pinnfluence::ad
