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

#include <vector>

#include "cvqe/pauli.hpp"

namespace cvqe {

/// Label of a fermionic mode in the two-level collective models: a level
/// sigma in {-1,+1} and a magnetisation m in {-j,...,-1,1,...,j} (m = 0 is
/// excluded, each level holds 2j modes). The flat qubit index places the
/// lower level (sigma = -1) on qubits 0..2j-1 and orders m ascending within
/// a level.
struct ModeIndex {
    int sigma;  // -1 or +1
    int m;      // nonzero, |m| <= j

    /// Flat qubit index in [0, 4j).
    int qubit_index(int j) const;
};

/// One factor of a fermionic monomial: mode qubit index plus dagger flag.
struct FermionFactor {
    int mode;
    bool dagger;

    bool operator==(const FermionFactor&) const = default;
};

/// A product of ladder operators, applied right-to-left like a matrix
/// product (the last factor acts first).
struct FermionTerm {
    Complex coeff{1.0, 0.0};
    std::vector<FermionFactor> factors;
};

/// Sum of fermionic monomials over flat mode indices.
class FermionOpSum {
  public:
    FermionOpSum() = default;

    static FermionOpSum constant(Complex c);

    void add_term(FermionTerm term);
    void add_term(Complex coeff, std::vector<FermionFactor> factors);

    const std::vector<FermionTerm>& terms() const { return terms_; }

    FermionOpSum& operator+=(const FermionOpSum& other);
    FermionOpSum& operator-=(const FermionOpSum& other);
    FermionOpSum& operator*=(Complex scale);
    friend FermionOpSum operator+(FermionOpSum a, const FermionOpSum& b) { return a += b; }
    friend FermionOpSum operator-(FermionOpSum a, const FermionOpSum& b) { return a -= b; }
    friend FermionOpSum operator*(FermionOpSum a, Complex s) { return a *= s; }
    friend FermionOpSum operator*(Complex s, FermionOpSum a) { return a *= s; }

    /// Operator product (concatenates factor lists).
    FermionOpSum operator*(const FermionOpSum& other) const;

    /// Reverses factors, flips daggers, conjugates coefficients.
    FermionOpSum adjoint() const;

    /// Rewrites every monomial with creation operators (ascending mode) to
    /// the left of annihilation operators (descending mode), using the
    /// canonical anticommutation relations. Idempotent.
    FermionOpSum normal_ordered() const;

    /// Highest mode index referenced, plus one. Zero for pure constants.
    int min_modes() const;

  private:
    std::vector<FermionTerm> terms_;
};

/// Jordan-Wigner transform: c_p -> (prod_{q<p} Z_q)(X_p + iY_p)/2 and the
/// adjoint for creation operators. Throws if any mode index >= n_modes.
PauliSum jordan_wigner(const FermionOpSum& f, int n_modes);

}  // namespace cvqe
