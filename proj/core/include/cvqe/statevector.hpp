// Copyright 2026 The cvqe Authors
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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cvqe/pauli.hpp"

namespace cvqe {

/// Dense complex amplitude vector over 2^n basis states, little-endian:
/// qubit q is bit q of the basis-state index.
class StateVector {
  public:
    explicit StateVector(int n_qubits);  // |0...0>
    static StateVector basis_state(int n_qubits, std::uint64_t index);
    static StateVector from_amplitudes(int n_qubits, std::vector<Complex> amps);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }

    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> amplitudes() { return amps_; }
    const Complex& operator[](std::uint64_t i) const { return amps_[i]; }

    double norm() const;
    /// <this|other>
    Complex inner(const StateVector& other) const;

  private:
    int n_qubits_;
    std::vector<Complex> amps_;
};

/// A PauliSum preprocessed for fast repeated application. Terms are grouped
/// by bit-flip mask and the per-group diagonal factors are tabulated, so one
/// apply makes a single pass over the amplitudes per distinct mask instead of
/// per term.
class CompiledPauliSum {
  public:
    struct PackedTerm {
        std::uint64_t x = 0;  // bits with X or Y
        std::uint64_t z = 0;  // bits with Z or Y
        Complex coeff;        // original coefficient times i^{#Y}
        double rotation_angle_scale = 0.0;  // real coefficient for exp paths
    };

    explicit CompiledPauliSum(const PauliSum& h);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }
    bool is_hermitian() const { return hermitian_; }
    bool is_diagonal() const { return diagonal_; }
    /// True iff all terms pairwise commute (exp factorizes exactly).
    bool all_terms_commute() const { return all_commute_; }
    double one_norm() const { return one_norm_; }
    const std::vector<PackedTerm>& packed_terms() const { return terms_; }

    /// out = H * in (overwrites out).
    void apply(std::span<const Complex> in, std::span<Complex> out) const;

    /// <psi|H|psi> without scratch storage.
    Complex expectation_raw(std::span<const Complex> psi) const;

  private:
    int n_qubits_;
    bool hermitian_ = true;
    bool diagonal_ = true;
    bool all_commute_ = true;
    double one_norm_ = 0.0;
    std::vector<PackedTerm> terms_;

    struct Group {
        std::uint64_t x;
        std::vector<Complex> diag;  // diag[i] multiplies in[i], lands on i^x
    };
    std::vector<Group> groups_;
};

/// Matrix-free H|psi>. Works for arbitrary (not necessarily Hermitian) sums.
StateVector apply(const PauliSum& h, const StateVector& psi);
StateVector apply(const CompiledPauliSum& h, const StateVector& psi);

/// Re<psi|H|psi> for Hermitian H. Throws on non-Hermitian input or if the
/// imaginary residue exceeds 1e-10.
double expectation(const PauliSum& h, const StateVector& psi);
double expectation(const CompiledPauliSum& h, const StateVector& psi);

/// <N_1 + N_{-1}> on a 4j-qubit register, via the diagonal Jordan-Wigner
/// number operators.
double particle_number(const StateVector& psi, int j);

}  // namespace cvqe
