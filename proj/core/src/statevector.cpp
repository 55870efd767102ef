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

#include "cvqe/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "cvqe/fermion.hpp"

namespace cvqe {

namespace {
constexpr int kMaxQubits = 26;  // 2^26 complex doubles = 1 GiB; desk-scale guard

int parity_sign(std::uint64_t bits) { return (std::popcount(bits) & 1) ? -1 : 1; }
}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("StateVector: unsupported qubit count");
    }
    amps_.assign(dim(), Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
    StateVector psi(n_qubits);
    if (index >= psi.dim()) throw std::invalid_argument("basis_state: index out of range");
    psi.amps_[0] = 0.0;
    psi.amps_[index] = 1.0;
    return psi;
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<Complex> amps) {
    StateVector psi(n_qubits);
    if (amps.size() != psi.dim()) {
        throw std::invalid_argument("from_amplitudes: wrong amplitude count");
    }
    psi.amps_ = std::move(amps);
    return psi;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const Complex& a : amps_) s += std::norm(a);
    return std::sqrt(s);
}

Complex StateVector::inner(const StateVector& other) const {
    if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("inner: size mismatch");
    Complex s{0.0, 0.0};
    for (std::uint64_t i = 0; i < dim(); ++i) s += std::conj(amps_[i]) * other.amps_[i];
    return s;
}

CompiledPauliSum::CompiledPauliSum(const PauliSum& h) : n_qubits_(h.n_qubits()) {
    if (n_qubits_ > kMaxQubits) throw std::invalid_argument("CompiledPauliSum: too many qubits");
    hermitian_ = h.is_hermitian();
    one_norm_ = h.one_norm();

    terms_.reserve(h.n_terms());
    for (const auto& [letters, c] : h.terms()) {
        PackedTerm t;
        int n_y = 0;
        for (std::size_t q = 0; q < letters.size(); ++q) {
            const std::uint64_t bit = std::uint64_t{1} << q;
            switch (letters[q]) {
                case 'I': break;
                case 'X': t.x |= bit; break;
                case 'Y': t.x |= bit; t.z |= bit; ++n_y; break;
                case 'Z': t.z |= bit; break;
                default: throw std::invalid_argument("CompiledPauliSum: bad letter");
            }
        }
        constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        t.coeff = c * kIPow[n_y & 3];
        t.rotation_angle_scale = c.real();
        if (t.x != 0) diagonal_ = false;
        terms_.push_back(t);
    }

    // two strings commute iff the symplectic product is even
    for (std::size_t a = 0; a < terms_.size() && all_commute_; ++a) {
        for (std::size_t b = a + 1; b < terms_.size(); ++b) {
            const int sp = std::popcount(terms_[a].x & terms_[b].z) +
                           std::popcount(terms_[a].z & terms_[b].x);
            if (sp & 1) {
                all_commute_ = false;
                break;
            }
        }
    }

    // tabulate per-mask diagonal factors
    const std::uint64_t d = dim();
    for (const auto& t : terms_) {
        auto it = std::find_if(groups_.begin(), groups_.end(),
                               [&](const Group& g) { return g.x == t.x; });
        if (it == groups_.end()) {
            groups_.push_back({t.x, std::vector<Complex>(d, Complex{0.0, 0.0})});
            it = groups_.end() - 1;
        }
        for (std::uint64_t i = 0; i < d; ++i) {
            it->diag[i] += t.coeff * static_cast<double>(parity_sign(i & t.z));
        }
    }
}

void CompiledPauliSum::apply(std::span<const Complex> in, std::span<Complex> out) const {
    const std::uint64_t d = dim();
    if (in.size() != d || out.size() != d) throw std::invalid_argument("apply: size mismatch");
    std::fill(out.begin(), out.end(), Complex{0.0, 0.0});
    for (const Group& g : groups_) {
        const Complex* diag = g.diag.data();
        const std::uint64_t x = g.x;
        for (std::uint64_t i = 0; i < d; ++i) {
            out[i ^ x] += diag[i] * in[i];
        }
    }
}

Complex CompiledPauliSum::expectation_raw(std::span<const Complex> psi) const {
    const std::uint64_t d = dim();
    if (psi.size() != d) throw std::invalid_argument("expectation: size mismatch");
    Complex acc{0.0, 0.0};
    for (const Group& g : groups_) {
        const Complex* diag = g.diag.data();
        const std::uint64_t x = g.x;
        Complex s{0.0, 0.0};
        for (std::uint64_t i = 0; i < d; ++i) {
            s += std::conj(psi[i ^ x]) * diag[i] * psi[i];
        }
        acc += s;
    }
    return acc;
}

StateVector apply(const CompiledPauliSum& h, const StateVector& psi) {
    if (h.n_qubits() != psi.n_qubits()) throw std::invalid_argument("apply: size mismatch");
    std::vector<Complex> out(psi.dim());
    h.apply(psi.amplitudes(), out);
    return StateVector::from_amplitudes(psi.n_qubits(), std::move(out));
}

StateVector apply(const PauliSum& h, const StateVector& psi) {
    return apply(CompiledPauliSum(h), psi);
}

double expectation(const CompiledPauliSum& h, const StateVector& psi) {
    if (!h.is_hermitian()) throw std::invalid_argument("expectation: non-Hermitian operator");
    if (h.n_qubits() != psi.n_qubits()) throw std::invalid_argument("expectation: size mismatch");
    const Complex v = h.expectation_raw(psi.amplitudes());
    if (std::abs(v.imag()) > 1e-10) {
        throw std::runtime_error("expectation: imaginary residue above tolerance");
    }
    return v.real();
}

double expectation(const PauliSum& h, const StateVector& psi) {
    return expectation(CompiledPauliSum(h), psi);
}

double particle_number(const StateVector& psi, int j) {
    if (j < 1) throw std::invalid_argument("particle_number: j must be >= 1");
    if (psi.n_qubits() != 4 * j) {
        throw std::invalid_argument("particle_number: state must have 4j qubits");
    }
    FermionOpSum n_total;
    for (int p = 0; p < 4 * j; ++p) {
        n_total.add_term({1.0, 0.0}, {{p, true}, {p, false}});
    }
    return expectation(jordan_wigner(n_total, 4 * j), psi);
}

}  // namespace cvqe
