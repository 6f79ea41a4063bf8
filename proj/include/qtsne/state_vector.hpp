#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtsne {

using cdouble = std::complex<double>;

// Dense n-qubit pure state. Basis index is little-endian: qubit 0 is the
// least-significant bit of the amplitude index.
struct StateVector {
  int n_qubits = 0;
  std::vector<cdouble> amps;

  std::size_t dim() const { return amps.size(); }
};

inline constexpr int kMaxQubits = 20;

inline void check_qubit_count(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits)
    throw std::invalid_argument("n_qubits must be in [1, " + std::to_string(kMaxQubits) +
                                "], got " + std::to_string(n_qubits));
}

inline StateVector zero_state(int n_qubits) {
  check_qubit_count(n_qubits);
  StateVector s;
  s.n_qubits = n_qubits;
  s.amps.assign(std::size_t{1} << n_qubits, cdouble{0.0, 0.0});
  s.amps[0] = 1.0;
  return s;
}

inline StateVector plus_state(int n_qubits) {
  check_qubit_count(n_qubits);
  StateVector s;
  s.n_qubits = n_qubits;
  const double amp = std::pow(2.0, -0.5 * n_qubits);
  s.amps.assign(std::size_t{1} << n_qubits, cdouble{amp, 0.0});
  return s;
}

inline double norm_squared(const StateVector& s) {
  double acc = 0.0;
  for (const auto& a : s.amps) acc += std::norm(a);
  return acc;
}

inline void check_wire(const StateVector& s, int q) {
  if (q < 0 || q >= s.n_qubits)
    throw std::out_of_range("qubit index " + std::to_string(q) + " out of range for " +
                            std::to_string(s.n_qubits) + " qubits");
}

// Sign convention: RY(theta) = e^{+i theta Y/2} = [[c, s], [-s, c]] with
// c = cos(theta/2), s = sin(theta/2). Note the unusual +i: it flips the sign
// of <X> relative to the more common e^{-i theta Y/2}, e.g.
// RY(pi)|0> = -|1> and <X> on RY(pi/2)|0> is -1.
inline void apply_ry(StateVector& s, int q, double theta) {
  check_wire(s, q);
  const double c = std::cos(0.5 * theta);
  const double sn = std::sin(0.5 * theta);
  const std::size_t step = std::size_t{1} << q;
  const std::size_t dim = s.dim();
  for (std::size_t g = 0; g < dim; g += 2 * step) {
    for (std::size_t i = g; i < g + step; ++i) {
      const cdouble a = s.amps[i];
      const cdouble b = s.amps[i + step];
      s.amps[i] = c * a + sn * b;
      s.amps[i + step] = -sn * a + c * b;
    }
  }
}

// RX(theta) = e^{-i theta X/2} = [[c, -is], [-is, c]]
inline void apply_rx(StateVector& s, int q, double theta) {
  check_wire(s, q);
  const double c = std::cos(0.5 * theta);
  const cdouble mis{0.0, -std::sin(0.5 * theta)};
  const std::size_t step = std::size_t{1} << q;
  const std::size_t dim = s.dim();
  for (std::size_t g = 0; g < dim; g += 2 * step) {
    for (std::size_t i = g; i < g + step; ++i) {
      const cdouble a = s.amps[i];
      const cdouble b = s.amps[i + step];
      s.amps[i] = c * a + mis * b;
      s.amps[i + step] = mis * a + c * b;
    }
  }
}

// RZZ(theta) = e^{-i theta (Z Z)/2}: phase e^{-i theta/2} on even-parity
// components of the two wires, e^{+i theta/2} on odd parity.
inline void apply_rzz(StateVector& s, int qa, int qb, double theta) {
  check_wire(s, qa);
  check_wire(s, qb);
  if (qa == qb) throw std::invalid_argument("rzz wires must be distinct");
  const cdouble even = std::polar(1.0, -0.5 * theta);
  const cdouble odd = std::polar(1.0, +0.5 * theta);
  const std::size_t ma = std::size_t{1} << qa;
  const std::size_t mb = std::size_t{1} << qb;
  const std::size_t dim = s.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    const bool parity = ((i & ma) != 0) != ((i & mb) != 0);
    s.amps[i] *= parity ? odd : even;
  }
}

// CZ: sign flip on the |11> component of the two wires.
inline void apply_cz(StateVector& s, int qa, int qb) {
  check_wire(s, qa);
  check_wire(s, qb);
  if (qa == qb) throw std::invalid_argument("cz wires must be distinct");
  const std::size_t ma = std::size_t{1} << qa;
  const std::size_t mb = std::size_t{1} << qb;
  const std::size_t dim = s.dim();
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & ma) && (i & mb)) s.amps[i] = -s.amps[i];
  }
}

// <X_q>; real and in [-1, 1].
inline double expectation_x(const StateVector& s, int q) {
  check_wire(s, q);
  const std::size_t step = std::size_t{1} << q;
  const std::size_t dim = s.dim();
  double acc = 0.0;
  for (std::size_t g = 0; g < dim; g += 2 * step) {
    for (std::size_t i = g; i < g + step; ++i) {
      const cdouble cross = std::conj(s.amps[i]) * s.amps[i + step];
      acc += cross.real();
    }
  }
  return 2.0 * acc;
}

// |<a|b>|^2
inline double fidelity(const StateVector& a, const StateVector& b) {
  if (a.n_qubits != b.n_qubits)
    throw std::invalid_argument("fidelity: qubit counts differ");
  cdouble overlap{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) overlap += std::conj(a.amps[i]) * b.amps[i];
  return std::norm(overlap);
}

inline cdouble overlap(const StateVector& a, const StateVector& b) {
  if (a.n_qubits != b.n_qubits)
    throw std::invalid_argument("overlap: qubit counts differ");
  cdouble acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a.amps[i]) * b.amps[i];
  return acc;
}

}  // namespace qtsne
