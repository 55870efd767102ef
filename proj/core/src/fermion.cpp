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

#include "cvqe/fermion.hpp"

#include <cmath>
#include <deque>
#include <map>
#include <stdexcept>
#include <utility>

namespace cvqe {

int ModeIndex::qubit_index(int j) const {
    if (j < 1) throw std::invalid_argument("ModeIndex: j must be >= 1");
    if (sigma != -1 && sigma != 1) throw std::invalid_argument("ModeIndex: sigma must be -1 or +1");
    if (m == 0 || m < -j || m > j) throw std::invalid_argument("ModeIndex: m out of range");
    const int rank = (m < 0) ? m + j : j + m - 1;
    return rank + (sigma == 1 ? 2 * j : 0);
}

FermionOpSum FermionOpSum::constant(Complex c) {
    FermionOpSum s;
    s.add_term(c, {});
    return s;
}

void FermionOpSum::add_term(FermionTerm term) {
    if (std::abs(term.coeff) < kCoeffDropTol) return;
    for (const auto& f : term.factors) {
        if (f.mode < 0) throw std::invalid_argument("FermionOpSum: negative mode index");
    }
    terms_.push_back(std::move(term));
}

void FermionOpSum::add_term(Complex coeff, std::vector<FermionFactor> factors) {
    add_term(FermionTerm{coeff, std::move(factors)});
}

FermionOpSum& FermionOpSum::operator+=(const FermionOpSum& other) {
    for (const auto& t : other.terms_) add_term(t);
    return *this;
}

FermionOpSum& FermionOpSum::operator-=(const FermionOpSum& other) {
    for (const auto& t : other.terms_) add_term({-t.coeff, t.factors});
    return *this;
}

FermionOpSum& FermionOpSum::operator*=(Complex scale) {
    std::vector<FermionTerm> scaled;
    for (auto& t : terms_) {
        const Complex c = t.coeff * scale;
        if (std::abs(c) >= kCoeffDropTol) scaled.push_back({c, std::move(t.factors)});
    }
    terms_ = std::move(scaled);
    return *this;
}

FermionOpSum FermionOpSum::operator*(const FermionOpSum& other) const {
    FermionOpSum out;
    for (const auto& a : terms_) {
        for (const auto& b : other.terms_) {
            FermionTerm t;
            t.coeff = a.coeff * b.coeff;
            t.factors = a.factors;
            t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
            out.add_term(std::move(t));
        }
    }
    return out;
}

FermionOpSum FermionOpSum::adjoint() const {
    FermionOpSum out;
    for (const auto& t : terms_) {
        FermionTerm a;
        a.coeff = std::conj(t.coeff);
        a.factors.assign(t.factors.rbegin(), t.factors.rend());
        for (auto& f : a.factors) f.dagger = !f.dagger;
        out.add_term(std::move(a));
    }
    return out;
}

namespace {

// Canonical monomial key for collection: daggers first ascending, then
// annihilators descending (both already enforced by the ordering pass).
using MonomialKey = std::vector<std::pair<int, bool>>;

MonomialKey key_of(const std::vector<FermionFactor>& fs) {
    MonomialKey k;
    k.reserve(fs.size());
    for (const auto& f : fs) k.emplace_back(f.mode, f.dagger);
    return k;
}

}  // namespace

FermionOpSum FermionOpSum::normal_ordered() const {
    std::map<MonomialKey, Complex> collected;
    std::deque<FermionTerm> work(terms_.begin(), terms_.end());

    while (!work.empty()) {
        FermionTerm t = std::move(work.front());
        work.pop_front();
        auto& fs = t.factors;

        bool split = false;
        for (std::size_t i = 0; i + 1 < fs.size() && !split; ++i) {
            const FermionFactor a = fs[i];
            const FermionFactor b = fs[i + 1];
            const bool swap_needed =
                (!a.dagger && b.dagger) ||
                (a.dagger && b.dagger && a.mode > b.mode) ||
                (!a.dagger && !b.dagger && a.mode < b.mode);
            if (!swap_needed) {
                if (a.dagger == b.dagger && a.mode == b.mode) {
                    split = true;  // c^2 = (c^dag)^2 = 0, term vanishes
                    fs.clear();
                    t.coeff = 0.0;
                }
                continue;
            }
            if (!a.dagger && b.dagger && a.mode == b.mode) {
                // c_p c_p^dag = 1 - c_p^dag c_p
                FermionTerm contracted;
                contracted.coeff = t.coeff;
                contracted.factors.assign(fs.begin(), fs.begin() + static_cast<long>(i));
                contracted.factors.insert(contracted.factors.end(),
                                          fs.begin() + static_cast<long>(i) + 2, fs.end());
                work.push_back(std::move(contracted));
                std::swap(fs[i], fs[i + 1]);
                t.coeff = -t.coeff;
            } else {
                std::swap(fs[i], fs[i + 1]);
                t.coeff = -t.coeff;
            }
            work.push_back(std::move(t));
            split = true;
        }
        if (split) continue;
        if (std::abs(t.coeff) < kCoeffDropTol) continue;
        collected[key_of(fs)] += t.coeff;
    }

    FermionOpSum out;
    for (const auto& [key, coeff] : collected) {
        if (std::abs(coeff) < kCoeffDropTol) continue;
        FermionTerm t;
        t.coeff = coeff;
        for (const auto& [mode, dagger] : key) t.factors.push_back({mode, dagger});
        out.add_term(std::move(t));
    }
    return out;
}

int FermionOpSum::min_modes() const {
    int n = 0;
    for (const auto& t : terms_) {
        for (const auto& f : t.factors) n = std::max(n, f.mode + 1);
    }
    return n;
}

PauliSum jordan_wigner(const FermionOpSum& f, int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("jordan_wigner: n_modes must be >= 1");
    if (f.min_modes() > n_modes) {
        throw std::out_of_range("jordan_wigner: mode index out of range");
    }

    // JW image of a single ladder operator as a 2-term PauliSum.
    auto ladder = [n_modes](int p, bool dagger) {
        std::string sx(static_cast<std::size_t>(n_modes), 'I');
        std::string sy = sx;
        for (int q = 0; q < p; ++q) {
            sx[static_cast<std::size_t>(q)] = 'Z';
            sy[static_cast<std::size_t>(q)] = 'Z';
        }
        sx[static_cast<std::size_t>(p)] = 'X';
        sy[static_cast<std::size_t>(p)] = 'Y';
        PauliSum s(n_modes);
        s.add_term(sx, {0.5, 0.0});
        // c = Z..Z (X + iY)/2 ; c^dag = Z..Z (X - iY)/2
        s.add_term(sy, {0.0, dagger ? -0.5 : 0.5});
        return s;
    };

    PauliSum out(n_modes);
    for (const auto& t : f.terms()) {
        PauliSum prod = PauliSum::identity(n_modes, t.coeff);
        for (const auto& factor : t.factors) {
            prod = prod * ladder(factor.mode, factor.dagger);
        }
        out += prod;
    }
    return out;
}

}  // namespace cvqe
