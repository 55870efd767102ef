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

#include "cvqe/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace cvqe {

namespace {

int letter_code(char c) {
    switch (c) {
        case 'I': return 0;
        case 'X': return 1;
        case 'Y': return 2;
        case 'Z': return 3;
        default: throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
    }
}

constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};

// i-power of the single-qubit product a*b = i^phase * (a xor b),
// with codes I=0, X=1, Y=2, Z=3. Cyclic pairs (X,Y),(Y,Z),(Z,X) pick up +i,
// the reversed pairs -i.
constexpr int kPhaseExp[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
};

constexpr Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void validate_letters(const std::string& letters) {
    for (char c : letters) letter_code(c);
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

PauliString::PauliString(std::string letters_, Complex coeff_)
    : letters(std::move(letters_)), coeff(coeff_) {
    validate_letters(letters);
}

PauliString pauli_multiply(const PauliString& a, const PauliString& b) {
    if (a.letters.size() != b.letters.size()) {
        throw std::invalid_argument("pauli_multiply: length mismatch");
    }
    PauliString out;
    out.letters.resize(a.letters.size());
    int phase = 0;
    for (std::size_t q = 0; q < a.letters.size(); ++q) {
        const int ca = letter_code(a.letters[q]);
        const int cb = letter_code(b.letters[q]);
        out.letters[q] = kLetters[ca ^ cb];
        phase += kPhaseExp[ca][cb];
    }
    out.coeff = a.coeff * b.coeff * kIPow[phase & 3];
    return out;
}

PauliString operator*(const PauliString& a, const PauliString& b) {
    return pauli_multiply(a, b);
}

PauliSum::PauliSum(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("PauliSum: n_qubits must be >= 1");
}

PauliSum PauliSum::identity(int n_qubits, Complex coeff) {
    PauliSum s(n_qubits);
    s.add_term(std::string(static_cast<std::size_t>(n_qubits), 'I'), coeff);
    return s;
}

void PauliSum::add_term(const std::string& letters, Complex coeff) {
    if (letters.size() != static_cast<std::size_t>(n_qubits_)) {
        throw std::invalid_argument("PauliSum::add_term: letters length != n_qubits");
    }
    validate_letters(letters);
    auto [it, inserted] = terms_.try_emplace(letters, coeff);
    if (!inserted) it->second += coeff;
    if (std::abs(it->second) < kCoeffDropTol) terms_.erase(it);
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
    if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("PauliSum: size mismatch");
    for (const auto& [letters, c] : other.terms_) add_term(letters, c);
    return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
    if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("PauliSum: size mismatch");
    for (const auto& [letters, c] : other.terms_) add_term(letters, -c);
    return *this;
}

PauliSum& PauliSum::operator*=(Complex scale) {
    TermMap scaled;
    for (const auto& [letters, c] : terms_) {
        const Complex v = c * scale;
        if (std::abs(v) >= kCoeffDropTol) scaled.emplace(letters, v);
    }
    terms_ = std::move(scaled);
    return *this;
}

PauliSum PauliSum::operator*(const PauliSum& other) const {
    if (other.n_qubits_ != n_qubits_) throw std::invalid_argument("PauliSum: size mismatch");
    PauliSum out(n_qubits_);
    for (const auto& [la, ca] : terms_) {
        for (const auto& [lb, cb] : other.terms_) {
            const PauliString p = pauli_multiply({la, ca}, {lb, cb});
            out.add_term(p);
        }
    }
    return out;
}

PauliSum PauliSum::adjoint() const {
    PauliSum out(n_qubits_);
    for (const auto& [letters, c] : terms_) out.add_term(letters, std::conj(c));
    return out;
}

bool PauliSum::is_hermitian(double tol) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [tol](const auto& t) { return std::abs(t.second.imag()) <= tol; });
}

bool PauliSum::is_zero(double tol) const { return max_abs_coeff() <= tol; }

double PauliSum::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [letters, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

double PauliSum::one_norm() const {
    double s = 0.0;
    for (const auto& [letters, c] : terms_) s += std::abs(c);
    return s;
}

std::string PauliSum::to_text() const {
    std::string out;
    for (const auto& [letters, c] : terms_) {
        out += format_double(c.real());
        out += ' ';
        out += format_double(c.imag());
        out += ' ';
        out += letters;
        out += '\n';
    }
    return out;
}

PauliSum PauliSum::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    // parse everything first so the register size comes from the first term
    std::vector<std::tuple<double, double, std::string>> parsed;
    std::size_t width = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        double re = 0.0, im = 0.0;
        std::string letters;
        if (!(ls >> re >> im >> letters)) {
            throw std::invalid_argument("PauliSum::from_text: bad line: " + line);
        }
        validate_letters(letters);
        if (width == 0) width = letters.size();
        if (letters.size() != width) {
            throw std::invalid_argument("PauliSum::from_text: inconsistent letter length");
        }
        parsed.emplace_back(re, im, std::move(letters));
    }
    if (parsed.empty()) throw std::invalid_argument("PauliSum::from_text: empty input");
    PauliSum out(static_cast<int>(width));
    for (auto& [re, im, letters] : parsed) out.add_term(letters, {re, im});
    return out;
}

}  // namespace cvqe
