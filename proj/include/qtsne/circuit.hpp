#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "qtsne/state_vector.hpp"

namespace qtsne {

enum class GateKind { RY, RX, RZZ, CZ };

// Where a rotation takes its angle from: a literal value, a slot of the
// trainable parameter vector, or a slot of the per-datum feature vector.
enum class AngleSource { None, Fixed, Param, Feature };

struct GateOp {
  GateKind kind = GateKind::RY;
  std::array<int, 2> wires{0, 0};
  int n_wires = 1;
  AngleSource source = AngleSource::None;
  double fixed_angle = 0.0;
  int angle_index = -1;  // parameter or feature slot

  static GateOp ry(int q, double angle) { return {GateKind::RY, {q, 0}, 1, AngleSource::Fixed, angle, -1}; }
  static GateOp ry_param(int q, int k) { return {GateKind::RY, {q, 0}, 1, AngleSource::Param, 0.0, k}; }
  static GateOp ry_feature(int q, int j) { return {GateKind::RY, {q, 0}, 1, AngleSource::Feature, 0.0, j}; }
  static GateOp rx(int q, double angle) { return {GateKind::RX, {q, 0}, 1, AngleSource::Fixed, angle, -1}; }
  static GateOp rx_param(int q, int k) { return {GateKind::RX, {q, 0}, 1, AngleSource::Param, 0.0, k}; }
  static GateOp rzz(int qa, int qb, double angle) { return {GateKind::RZZ, {qa, qb}, 2, AngleSource::Fixed, angle, -1}; }
  static GateOp rzz_param(int qa, int qb, int k) { return {GateKind::RZZ, {qa, qb}, 2, AngleSource::Param, 0.0, k}; }
  static GateOp cz(int qa, int qb) { return {GateKind::CZ, {qa, qb}, 2, AngleSource::None, 0.0, -1}; }

  bool is_rotation() const { return kind != GateKind::CZ; }
};

// Ordered gate list with declared parameter/feature vector sizes.
struct CircuitProgram {
  int n_qubits = 0;
  std::vector<GateOp> ops;
  int n_params = 0;
  int n_features = 0;
};

inline void validate(const CircuitProgram& c) {
  check_qubit_count(c.n_qubits);
  for (const auto& op : c.ops) {
    for (int w = 0; w < op.n_wires; ++w) {
      if (op.wires[w] < 0 || op.wires[w] >= c.n_qubits)
        throw std::invalid_argument("gate wire out of range");
    }
    if (op.n_wires == 2 && op.wires[0] == op.wires[1])
      throw std::invalid_argument("two-qubit gate wires must be distinct");
    if (op.is_rotation()) {
      if (op.source == AngleSource::None)
        throw std::invalid_argument("rotation gate lacks an angle source");
      if (op.source == AngleSource::Param && (op.angle_index < 0 || op.angle_index >= c.n_params))
        throw std::invalid_argument("parameter index out of range");
      if (op.source == AngleSource::Feature && (op.angle_index < 0 || op.angle_index >= c.n_features))
        throw std::invalid_argument("feature index out of range");
    } else if (op.source != AngleSource::None) {
      throw std::invalid_argument("cz takes no angle");
    }
  }
}

namespace detail {

inline double resolve_angle(const GateOp& op, const std::vector<double>& theta,
                            const std::vector<double>& x) {
  switch (op.source) {
    case AngleSource::Fixed: return op.fixed_angle;
    case AngleSource::Param: return theta[static_cast<std::size_t>(op.angle_index)];
    case AngleSource::Feature: return x[static_cast<std::size_t>(op.angle_index)];
    case AngleSource::None: return 0.0;
  }
  return 0.0;
}

inline void apply_op(StateVector& s, const GateOp& op, double angle) {
  switch (op.kind) {
    case GateKind::RY: apply_ry(s, op.wires[0], angle); break;
    case GateKind::RX: apply_rx(s, op.wires[0], angle); break;
    case GateKind::RZZ: apply_rzz(s, op.wires[0], op.wires[1], angle); break;
    case GateKind::CZ: apply_cz(s, op.wires[0], op.wires[1]); break;
  }
}

}  // namespace detail

inline StateVector apply_gate(StateVector state, const GateOp& gate, double angle = 0.0) {
  detail::apply_op(state, gate, gate.source == AngleSource::Fixed ? gate.fixed_angle : angle);
  return state;
}

inline void check_run_args(const CircuitProgram& c, const std::vector<double>& theta,
                           const std::vector<double>& x, const StateVector& input) {
  if (static_cast<int>(theta.size()) != c.n_params)
    throw std::invalid_argument("theta size " + std::to_string(theta.size()) +
                                " != n_params " + std::to_string(c.n_params));
  if (static_cast<int>(x.size()) != c.n_features)
    throw std::invalid_argument("feature vector size " + std::to_string(x.size()) +
                                " != n_features " + std::to_string(c.n_features));
  if (input.n_qubits != c.n_qubits)
    throw std::invalid_argument("input state qubit count mismatch");
}

inline void run_circuit_inplace(const CircuitProgram& c, const std::vector<double>& theta,
                                const std::vector<double>& x, StateVector& state) {
  for (const auto& op : c.ops) detail::apply_op(state, op, detail::resolve_angle(op, theta, x));
}

inline StateVector run_circuit(const CircuitProgram& c, const std::vector<double>& theta,
                               const std::vector<double>& x, const StateVector& input) {
  check_run_args(c, theta, x, input);
  StateVector state = input;
  run_circuit_inplace(c, theta, x, state);
  return state;
}

// X observables on the given qubits, evaluated on the same final state.
inline std::vector<double> run_and_measure_x(const CircuitProgram& c,
                                             const std::vector<double>& theta,
                                             const std::vector<double>& x,
                                             const StateVector& input,
                                             const std::vector<int>& observable_qubits) {
  const StateVector out = run_circuit(c, theta, x, input);
  std::vector<double> values;
  values.reserve(observable_qubits.size());
  for (int q : observable_qubits) values.push_back(expectation_x(out, q));
  return values;
}

// Parameter-shift Jacobian of X-observable expectations with respect to
// theta: entry (mu, k) = [y_mu(theta_k + pi/2) - y_mu(theta_k - pi/2)] / 2,
// summed over every gate occurrence fed by parameter k (each occurrence is
// shifted individually). Walks the circuit once, branching off the cached
// prefix state at each parameterized gate, so results are bit-identical to
// restarting the full circuit per shift.
inline std::vector<std::vector<double>> param_shift_jacobian(
    const CircuitProgram& c, const std::vector<double>& theta, const std::vector<double>& x,
    const StateVector& input, const std::vector<int>& observable_qubits) {
  check_run_args(c, theta, x, input);
  const std::size_t n_obs = observable_qubits.size();
  std::vector<std::vector<double>> jac(n_obs, std::vector<double>(theta.size(), 0.0));

  constexpr double half_pi = 1.57079632679489661923;
  StateVector prefix = input;
  StateVector work;
  for (std::size_t p = 0; p < c.ops.size(); ++p) {
    const GateOp& op = c.ops[p];
    const double angle = detail::resolve_angle(op, theta, x);
    if (op.source == AngleSource::Param) {
      const auto k = static_cast<std::size_t>(op.angle_index);
      for (const double shift : {+half_pi, -half_pi}) {
        work = prefix;
        detail::apply_op(work, op, angle + shift);
        for (std::size_t q = p + 1; q < c.ops.size(); ++q)
          detail::apply_op(work, c.ops[q], detail::resolve_angle(c.ops[q], theta, x));
        const double sign = shift > 0 ? 0.5 : -0.5;
        for (std::size_t mu = 0; mu < n_obs; ++mu)
          jac[mu][k] += sign * expectation_x(work, observable_qubits[mu]);
      }
    }
    detail::apply_op(prefix, op, angle);
  }
  return jac;
}

}  // namespace qtsne
