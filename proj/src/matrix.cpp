// Copyright 2026 The DiaQ Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "diaq/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "diaq/error.hpp"

namespace diaq {

std::size_t diag_len(DiagIndex d, std::size_t n_dim) {
    const std::size_t mag = d < 0 ? static_cast<std::size_t>(-d)
                                  : static_cast<std::size_t>(d);
    if (n_dim == 0 || mag > n_dim - 1) {
        throw RangeError("diagonal " + std::to_string(d) +
                         " is outside a " + std::to_string(n_dim) + "x" +
                         std::to_string(n_dim) + " matrix");
    }
    return n_dim - mag;
}

template <class T>
PlanarVector<T>
PlanarVector<T>::from_complex(const std::vector<std::complex<T>> &v) {
    PlanarVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.re[i] = v[i].real();
        out.im[i] = v[i].imag();
    }
    return out;
}

template <class T>
std::vector<std::complex<T>> PlanarVector<T>::to_complex() const {
    std::vector<std::complex<T>> out(size());
    for (std::size_t i = 0; i < size(); ++i) {
        out[i] = {re[i], im[i]};
    }
    return out;
}

template <class T> bool Diagonal<T>::all_below(T eps) const noexcept {
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (std::abs(values.re[k]) + std::abs(values.im[k]) > eps) {
            return false;
        }
    }
    return true;
}

template <class T> DiaqMatrix<T>::DiaqMatrix(std::size_t n_dim) : n_(n_dim) {
    if (n_dim == 0) {
        throw ShapeError("matrix dimension must be at least 1");
    }
}

template <class T> DiaqMatrix<T> DiaqMatrix<T>::identity(std::size_t n_dim) {
    DiaqMatrix m(n_dim);
    auto &d = m.diagonal(0);
    std::fill(d.values.re.begin(), d.values.re.end(), T{1});
    return m;
}

template <class T> std::size_t DiaqMatrix<T>::stored_values() const noexcept {
    std::size_t total = 0;
    for (const auto &[d, diag] : diags_) {
        total += diag.size();
    }
    return total;
}

template <class T> const Diagonal<T> *DiaqMatrix<T>::find(DiagIndex d) const {
    auto it = diags_.find(d);
    return it == diags_.end() ? nullptr : &it->second;
}

template <class T> Diagonal<T> *DiaqMatrix<T>::find(DiagIndex d) {
    auto it = diags_.find(d);
    return it == diags_.end() ? nullptr : &it->second;
}

template <class T> Diagonal<T> &DiaqMatrix<T>::diagonal(DiagIndex d) {
    auto it = diags_.find(d);
    if (it != diags_.end()) {
        return it->second;
    }
    return diags_.emplace(d, Diagonal<T>(d, n_)).first->second;
}

template <class T> void DiaqMatrix<T>::insert(Diagonal<T> diag) {
    const std::size_t expected = diag_len(diag.index, n_);
    if (diag.values.re.size() != expected || diag.values.im.size() != expected) {
        throw ShapeError("diagonal " + std::to_string(diag.index) +
                         " must hold " + std::to_string(expected) + " values");
    }
    const DiagIndex d = diag.index;
    diags_.insert_or_assign(d, std::move(diag));
}

template <class T>
std::complex<T> DiaqMatrix<T>::at(std::size_t row, std::size_t col) const {
    if (row >= n_ || col >= n_) {
        throw RangeError("element index out of range");
    }
    const DiagIndex d =
        static_cast<DiagIndex>(col) - static_cast<DiagIndex>(row);
    const Diagonal<T> *diag = find(d);
    if (diag == nullptr) {
        return {};
    }
    return diag->values[diag_pos(row, d)];
}

template <class T>
void DiaqMatrix<T>::set(std::size_t row, std::size_t col, std::complex<T> v) {
    if (row >= n_ || col >= n_) {
        throw RangeError("element index out of range");
    }
    const DiagIndex d =
        static_cast<DiagIndex>(col) - static_cast<DiagIndex>(row);
    diagonal(d).values.set(diag_pos(row, d), v);
}

template <class T> void DiaqMatrix<T>::prune(T eps) {
    std::erase_if(diags_,
                  [eps](const auto &entry) { return entry.second.all_below(eps); });
}

template struct PlanarVector<float>;
template struct PlanarVector<double>;
template struct Diagonal<float>;
template struct Diagonal<double>;
template class DiaqMatrix<float>;
template class DiaqMatrix<double>;

} // namespace diaq
