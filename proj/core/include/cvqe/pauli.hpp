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

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace cvqe {

using Complex = std::complex<double>;

/// Coefficients with modulus below this are dropped when terms are collected.
inline constexpr double kCoeffDropTol = 1e-12;

/// A weighted n-qubit Pauli string. `letters[q]` is the operator acting on
/// qubit q, one of 'I', 'X', 'Y', 'Z' (qubit 0 is the leftmost character).
struct PauliString {
    std::string letters;
    Complex coeff{1.0, 0.0};

    PauliString() = default;
    PauliString(std::string letters_, Complex coeff_);

    std::size_t n_qubits() const { return letters.size(); }
};

/// Group product a*b with the correct phase. Throws on length mismatch.
PauliString pauli_multiply(const PauliString& a, const PauliString& b);
PauliString operator*(const PauliString& a, const PauliString& b);

/// A Hermitian-or-not sum of Pauli strings over a fixed register size.
/// Terms are collected by letter sequence; near-zero coefficients are
/// dropped. The term map is ordered, so iteration order is deterministic.
class PauliSum {
  public:
    using TermMap = std::map<std::string, Complex>;

    explicit PauliSum(int n_qubits);

    static PauliSum identity(int n_qubits, Complex coeff = {1.0, 0.0});

    int n_qubits() const { return n_qubits_; }
    const TermMap& terms() const { return terms_; }
    std::size_t n_terms() const { return terms_.size(); }

    /// Adds coeff * letters, collecting with any existing term.
    void add_term(const std::string& letters, Complex coeff);
    void add_term(const PauliString& p) { add_term(p.letters, p.coeff); }

    PauliSum& operator+=(const PauliSum& other);
    PauliSum& operator-=(const PauliSum& other);
    PauliSum& operator*=(Complex scale);

    friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
    friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
    friend PauliSum operator*(PauliSum a, Complex s) { return a *= s; }
    friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }

    /// Operator product, expanded and collected.
    PauliSum operator*(const PauliSum& other) const;

    PauliSum adjoint() const;

    bool is_hermitian(double tol = kCoeffDropTol) const;
    bool is_zero(double tol = kCoeffDropTol) const;
    double max_abs_coeff() const;
    /// Sum of |coeff| over terms; an upper bound on the operator norm.
    double one_norm() const;

    bool operator==(const PauliSum& other) const = default;

    /// One term per line: `<real> <imag> <letters>`.
    std::string to_text() const;
    static PauliSum from_text(const std::string& text);

  private:
    int n_qubits_;
    TermMap terms_;
};

inline PauliSum commutator(const PauliSum& a, const PauliSum& b) {
    return a * b - b * a;
}

}  // namespace cvqe
