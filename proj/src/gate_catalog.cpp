// Copyright 2026 The qcmut authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcmut/gate_catalog.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qcmut/errors.hpp"

namespace qcmut {

namespace {

using C = std::complex<double>;

constexpr C kI{0.0, 1.0};

C cis(double t) { return {std::cos(t), std::sin(t)}; }

UMatrix m1(C a00, C a01, C a10, C a11) {
  UMatrix u(1);
  u(0, 0) = a00;
  u(0, 1) = a01;
  u(1, 0) = a10;
  u(1, 1) = a11;
  return u;
}

UMatrix diag2(C d0, C d1) { return m1(d0, 0.0, 0.0, d1); }

UMatrix diag4(C d0, C d1, C d2, C d3) {
  UMatrix u(2);
  u(0, 0) = d0;
  u(1, 1) = d1;
  u(2, 2) = d2;
  u(3, 3) = d3;
  return u;
}

// Controlled 1-qubit gate with the control on operand 0 (basis bit 0) and
// the target on operand 1.
UMatrix controlled(const UMatrix& v) {
  UMatrix u(2);
  u(0, 0) = 1.0;
  u(2, 2) = 1.0;
  u(1, 1) = v(0, 0);
  u(1, 3) = v(0, 1);
  u(3, 1) = v(1, 0);
  u(3, 3) = v(1, 1);
  return u;
}

// Kronecker product `high (x) low` where `low` acts on basis bit 0
// (operand 0) and `high` on basis bit 1.
UMatrix kron2(const UMatrix& high, const UMatrix& low) {
  UMatrix u(2);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      u(r, c) = high(r >> 1, c >> 1) * low(r & 1, c & 1);
    }
  }
  return u;
}

// exp(-i t/2 M) for involutory M (M^2 = I): cos(t/2) I - i sin(t/2) M.
UMatrix involution_rot(const UMatrix& m, double t) {
  const double c = std::cos(t / 2.0);
  const double s = std::sin(t / 2.0);
  UMatrix u(m.num_qubits());
  const int d = m.dim();
  for (int r = 0; r < d; ++r) {
    for (int col = 0; col < d; ++col) {
      u(r, col) = -kI * s * m(r, col);
      if (r == col) u(r, col) += c;
    }
  }
  return u;
}

UMatrix perm3(std::span<const int> image) {
  UMatrix u(3);
  for (int col = 0; col < 8; ++col) u(image[static_cast<std::size_t>(col)], col) = 1.0;
  return u;
}

UMatrix mat_x() { return m1(0.0, 1.0, 1.0, 0.0); }
UMatrix mat_y() { return m1(0.0, -kI, kI, 0.0); }
UMatrix mat_h() {
  const double s = 1.0 / std::numbers::sqrt2;
  return m1(s, s, s, -s);
}
UMatrix mat_sx() {
  return m1(C{0.5, 0.5}, C{0.5, -0.5}, C{0.5, -0.5}, C{0.5, 0.5});
}
UMatrix mat_rx(double t) {
  const double c = std::cos(t / 2.0), s = std::sin(t / 2.0);
  return m1(c, -kI * s, -kI * s, c);
}
UMatrix mat_ry(double t) {
  const double c = std::cos(t / 2.0), s = std::sin(t / 2.0);
  return m1(c, -s, s, c);
}
UMatrix mat_rz(double t) { return diag2(cis(-t / 2.0), cis(t / 2.0)); }
UMatrix mat_u(double theta, double phi, double lam) {
  const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
  return m1(c, -cis(lam) * s, cis(phi) * s, cis(phi + lam) * c);
}

UMatrix build_unitary(std::string_view name, std::span<const double> p) {
  const double pi = std::numbers::pi;
  // 1-qubit, no parameters
  if (name == "x") return mat_x();
  if (name == "h") return mat_h();
  if (name == "z") return diag2(1.0, -1.0);
  if (name == "y") return mat_y();
  if (name == "t") return diag2(1.0, cis(pi / 4.0));
  if (name == "sx") return mat_sx();
  if (name == "sdg") return diag2(1.0, -kI);
  if (name == "s") return diag2(1.0, kI);
  if (name == "tdg") return diag2(1.0, cis(-pi / 4.0));
  if (name == "id") return diag2(1.0, 1.0);
  // 1-qubit, parametric
  if (name == "p" || name == "u1") return diag2(1.0, cis(p[0]));
  if (name == "r") return mat_rx(p[0]);
  if (name == "rz") return mat_rz(p[0]);
  if (name == "ry") return mat_ry(p[0]);
  if (name == "rx") return mat_rx(p[0]);
  if (name == "u2") {
    const double s = 1.0 / std::numbers::sqrt2;
    return m1(s, -cis(p[1]) * s, cis(p[0]) * s, cis(p[0] + p[1]) * s);
  }
  if (name == "u" || name == "u3") return mat_u(p[0], p[1], p[2]);
  // 2-qubit, no parameters
  if (name == "swap") {
    UMatrix u(2);
    u(0, 0) = 1.0;
    u(1, 2) = 1.0;
    u(2, 1) = 1.0;
    u(3, 3) = 1.0;
    return u;
  }
  if (name == "iswap") {
    UMatrix u(2);
    u(0, 0) = 1.0;
    u(1, 2) = kI;
    u(2, 1) = kI;
    u(3, 3) = 1.0;
    return u;
  }
  if (name == "dcx") {
    // cx(0 -> 1) then cx(1 -> 0); basis permutation cycle 1 -> 2 -> 3 -> 1.
    UMatrix u(2);
    u(0, 0) = 1.0;
    u(2, 1) = 1.0;
    u(3, 2) = 1.0;
    u(1, 3) = 1.0;
    return u;
  }
  if (name == "cz") return diag4(1.0, 1.0, 1.0, -1.0);
  if (name == "cy") return controlled(mat_y());
  if (name == "cx") return controlled(mat_x());
  if (name == "csx") return controlled(mat_sx());
  if (name == "ch") return controlled(mat_h());
  // 2-qubit, parametric
  if (name == "rzz") {
    const C a = cis(-p[0] / 2.0), b = cis(p[0] / 2.0);
    return diag4(a, b, b, a);
  }
  if (name == "rzx") return involution_rot(kron2(mat_x(), diag2(1.0, -1.0)), p[0]);
  if (name == "ryy") return involution_rot(kron2(mat_y(), mat_y()), p[0]);
  if (name == "rxx") return involution_rot(kron2(mat_x(), mat_x()), p[0]);
  if (name == "cu1" || name == "cp") return diag4(1.0, 1.0, 1.0, cis(p[0]));
  if (name == "crz") return controlled(mat_rz(p[0]));
  if (name == "cry") return controlled(mat_ry(p[0]));
  if (name == "crx") return controlled(mat_rx(p[0]));
  // 3-qubit, no parameters
  if (name == "cswap") {
    const int image[8] = {0, 1, 2, 5, 4, 3, 6, 7};
    return perm3(image);
  }
  if (name == "ccx") {
    const int image[8] = {0, 1, 2, 7, 4, 5, 6, 3};
    return perm3(image);
  }
  throw UnknownGate("gate '" + std::string(name) + "' is not in the catalog");
}

}  // namespace

UMatrix::UMatrix(int num_qubits) : num_qubits_(num_qubits) {}

std::string EquivClassKey::str() const {
  std::ostringstream os;
  os << num_qubits << "q" << num_params << "p";
  return os.str();
}

GateCatalog::GateCatalog() {
  class_entries_ = {
      {{1, 0}, {"x", "h", "z", "y", "t", "sx", "sdg", "s", "tdg", "id"}},
      {{1, 1}, {"p", "u1", "r", "rz", "ry", "rx"}},
      {{1, 2}, {"u2"}},
      {{1, 3}, {"u", "u3"}},
      {{2, 0}, {"swap", "iswap", "dcx", "cz", "cy", "cx", "csx", "ch"}},
      {{2, 1}, {"rzz", "rzx", "ryy", "rxx", "cu1", "crz", "cry", "crx", "cp"}},
      {{3, 0}, {"cswap", "ccx"}},
  };
  for (const auto& entry : class_entries_) {
    class_keys_.push_back(entry.key);
    for (const auto name : entry.members) {
      specs_.push_back({name, entry.key});
    }
  }
}

const GateCatalog& GateCatalog::instance() {
  static const GateCatalog catalog;
  return catalog;
}

std::size_t GateCatalog::size() const { return specs_.size(); }

bool GateCatalog::contains(std::string_view name) const {
  for (const auto& spec : specs_) {
    if (spec.name == name) return true;
  }
  return false;
}

const GateSpec& GateCatalog::spec(std::string_view name) const {
  for (const auto& spec : specs_) {
    if (spec.name == name) return spec;
  }
  throw UnknownGate("gate '" + std::string(name) + "' is not in the catalog");
}

EquivClassKey GateCatalog::equivalence_class_of(std::string_view name) const {
  return spec(name).cls;
}

std::span<const EquivClassKey> GateCatalog::classes() const {
  return class_keys_;
}

std::span<const std::string_view> GateCatalog::class_members(
    EquivClassKey cls) const {
  for (const auto& entry : class_entries_) {
    if (entry.key == cls) return entry.members;
  }
  throw UnknownGate("no equivalence class " + cls.str());
}

std::vector<std::string_view> GateCatalog::eligible_for_insertion(
    int num_qubits) const {
  std::vector<std::string_view> out;
  for (const auto& spec : specs_) {
    if (spec.cls.num_qubits <= num_qubits) out.push_back(spec.name);
  }
  return out;
}

UMatrix unitary_of(std::string_view name, std::span<const double> params) {
  const auto& spec = GateCatalog::instance().spec(name);
  if (params.size() != static_cast<std::size_t>(spec.cls.num_params)) {
    throw ArityMismatch(std::string(name) + " expects " +
                        std::to_string(spec.cls.num_params) +
                        " parameter(s), got " + std::to_string(params.size()));
  }
  return build_unitary(name, params);
}

}  // namespace qcmut
