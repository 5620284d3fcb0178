// Copyright 2026 The qtt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtt/statevec.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qtt {

namespace {

void require_same_dims(const SparseState &a, const SparseState &b) {
    if (a.dims() != b.dims()) {
        throw std::invalid_argument("state dimension mismatch");
    }
}

uint64_t checked_product(const std::vector<uint64_t> &dims) {
    uint64_t total = 1;
    for (uint64_t d : dims) {
        if (d != 0 && total > UINT64_MAX / d) {
            return 0;
        }
        total *= d;
    }
    return total;
}

}  // namespace

SparseState::SparseState(std::vector<uint64_t> dims) : dims_(std::move(dims)) {
    for (uint64_t d : dims_) {
        if (d == 0) {
            throw std::invalid_argument("register of size zero");
        }
    }
}

SparseState SparseState::basis(std::vector<uint64_t> dims, BasisKey key) {
    SparseState s(std::move(dims));
    s.add(key, Rational(1));
    return s;
}

void SparseState::check_key(const BasisKey &key) const {
    if (key.size() != dims_.size()) {
        throw std::invalid_argument("basis key has " + std::to_string(key.size()) + " coordinates, state has " +
                                    std::to_string(dims_.size()) + " registers");
    }
    for (size_t r = 0; r < key.size(); r++) {
        if (key[r] >= dims_[r]) {
            throw std::out_of_range("basis coordinate " + std::to_string(key[r]) + " out of range for register " +
                                    std::to_string(r) + " of size " + std::to_string(dims_[r]));
        }
    }
}

Rational SparseState::amplitude(const BasisKey &key) const {
    auto it = amps_.find(key);
    return it == amps_.end() ? Rational(0) : it->second;
}

void SparseState::add(const BasisKey &key, const Rational &delta) {
    if (delta == 0) {
        return;
    }
    check_key(key);
    auto [it, inserted] = amps_.try_emplace(key, delta);
    if (!inserted) {
        it->second += delta;
        if (it->second == 0) {
            amps_.erase(it);
        }
    }
}

uint64_t SparseState::total_dimension() const {
    return checked_product(dims_);
}

uint64_t SparseState::flatten(const BasisKey &key) const {
    check_key(key);
    if (total_dimension() == 0) {
        throw std::overflow_error("state space too large to flatten");
    }
    uint64_t index = 0;
    for (size_t r = 0; r < dims_.size(); r++) {
        index = index * dims_[r] + key[r];
    }
    return index;
}

BasisKey SparseState::unflatten(uint64_t index) const {
    BasisKey key(dims_.size());
    for (size_t r = dims_.size(); r-- > 0;) {
        key[r] = index % dims_[r];
        index /= dims_[r];
    }
    return key;
}

OrthogonalMatrix::OrthogonalMatrix(uint64_t dimension, std::vector<Column> columns)
    : dimension_(dimension), columns_(std::move(columns)) {
}

OrthogonalMatrix OrthogonalMatrix::from_columns(uint64_t dimension, std::vector<Column> columns) {
    if (columns.size() != dimension) {
        throw std::invalid_argument("matrix needs exactly one column per dimension");
    }
    for (auto &col : columns) {
        std::sort(col.begin(), col.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
        Column merged;
        for (auto &[row, value] : col) {
            if (row >= dimension) {
                throw std::invalid_argument("matrix row index out of range");
            }
            if (!merged.empty() && merged.back().first == row) {
                throw std::invalid_argument("duplicate matrix entry");
            }
            if (value != 0) {
                merged.emplace_back(row, value);
            }
        }
        col = std::move(merged);
    }
    OrthogonalMatrix m(dimension, std::move(columns));
    m.verify();
    return m;
}

OrthogonalMatrix OrthogonalMatrix::from_rows(const std::vector<std::vector<Rational>> &rows) {
    uint64_t d = rows.size();
    std::vector<Column> columns(d);
    for (uint64_t r = 0; r < d; r++) {
        if (rows[r].size() != d) {
            throw std::invalid_argument("matrix is not square");
        }
        for (uint64_t c = 0; c < d; c++) {
            if (rows[r][c] != 0) {
                columns[c].emplace_back(r, rows[r][c]);
            }
        }
    }
    return from_columns(d, std::move(columns));
}

OrthogonalMatrix OrthogonalMatrix::identity(uint64_t dimension) {
    std::vector<Column> columns(dimension);
    for (uint64_t c = 0; c < dimension; c++) {
        columns[c].emplace_back(c, Rational(1));
    }
    return OrthogonalMatrix(dimension, std::move(columns));
}

void OrthogonalMatrix::verify() const {
    // (M^T M)[a][b] = sum over rows r of M[r][a] M[r][b]; accumulate row by row.
    std::vector<std::vector<std::pair<uint64_t, const Rational *>>> rows(dimension_);
    for (uint64_t c = 0; c < dimension_; c++) {
        for (const auto &[r, v] : columns_[c]) {
            rows[r].emplace_back(c, &v);
        }
    }
    std::map<std::pair<uint64_t, uint64_t>, Rational> gram;
    for (const auto &row : rows) {
        for (size_t x = 0; x < row.size(); x++) {
            for (size_t y = x; y < row.size(); y++) {
                gram[{row[x].first, row[y].first}] += *row[x].second * *row[y].second;
            }
        }
    }
    uint64_t diagonal_seen = 0;
    for (const auto &[idx, value] : gram) {
        if (idx.first == idx.second) {
            if (value != 1) {
                throw std::invalid_argument("matrix column " + std::to_string(idx.first) + " has squared norm " +
                                            to_string(value) + ", not 1");
            }
            diagonal_seen++;
        } else if (value != 0) {
            throw std::invalid_argument("matrix columns " + std::to_string(idx.first) + " and " +
                                        std::to_string(idx.second) + " are not orthogonal");
        }
    }
    if (diagonal_seen != dimension_) {
        throw std::invalid_argument("matrix has a zero column");
    }
}

Rational OrthogonalMatrix::entry(uint64_t row, uint64_t col) const {
    for (const auto &[r, v] : columns_.at(col)) {
        if (r == row) {
            return v;
        }
    }
    return 0;
}

OrthogonalMatrix OrthogonalMatrix::transpose() const {
    std::vector<Column> columns(dimension_);
    for (uint64_t c = 0; c < dimension_; c++) {
        for (const auto &[r, v] : columns_[c]) {
            columns[r].emplace_back(c, v);
        }
    }
    return OrthogonalMatrix(dimension_, std::move(columns));
}

std::vector<std::vector<Rational>> OrthogonalMatrix::to_rows() const {
    std::vector<std::vector<Rational>> rows(dimension_, std::vector<Rational>(dimension_));
    for (uint64_t c = 0; c < dimension_; c++) {
        for (const auto &[r, v] : columns_[c]) {
            rows[r][c] = v;
        }
    }
    return rows;
}

Rational norm_sq(const SparseState &state) {
    Rational total = 0;
    for (const auto &[key, amp] : state.amplitudes()) {
        total += amp * amp;
    }
    return total;
}

SparseState apply_matrix(const OrthogonalMatrix &m, const SparseState &state) {
    std::vector<size_t> all(state.num_registers());
    for (size_t r = 0; r < all.size(); r++) {
        all[r] = r;
    }
    return apply_matrix(m, state, all);
}

SparseState apply_matrix(const OrthogonalMatrix &m, const SparseState &state, std::span<const size_t> registers) {
    std::vector<uint64_t> sub_dims;
    std::vector<bool> used(state.num_registers(), false);
    for (size_t r : registers) {
        if (r >= state.num_registers() || used[r]) {
            throw std::invalid_argument("bad register selection for matrix application");
        }
        used[r] = true;
        sub_dims.push_back(state.dims()[r]);
    }
    uint64_t sub_total = checked_product(sub_dims);
    if (sub_total == 0 || sub_total != m.dimension()) {
        throw std::invalid_argument("matrix dimension " + std::to_string(m.dimension()) +
                                    " does not match the selected registers");
    }

    SparseState out(state.dims());
    for (const auto &[key, amp] : state.amplitudes()) {
        uint64_t sub_index = 0;
        for (size_t r : registers) {
            sub_index = sub_index * state.dims()[r] + key[r];
        }
        for (const auto &[row, entry] : m.column(sub_index)) {
            BasisKey target = key;
            uint64_t rest = row;
            for (size_t k = registers.size(); k-- > 0;) {
                size_t r = registers[k];
                target[r] = rest % state.dims()[r];
                rest /= state.dims()[r];
            }
            out.add(target, amp * entry);
        }
    }
    return out;
}

Rational inner_product(const SparseState &a, const SparseState &b) {
    require_same_dims(a, b);
    const auto &small = a.support_size() <= b.support_size() ? a : b;
    const auto &large = &small == &a ? b : a;
    Rational total = 0;
    for (const auto &[key, amp] : small.amplitudes()) {
        auto it = large.amplitudes().find(key);
        if (it != large.amplitudes().end()) {
            total += amp * it->second;
        }
    }
    return total;
}

Rational distance_sq(const SparseState &a, const SparseState &b) {
    require_same_dims(a, b);
    SparseState diff = a;
    for (const auto &[key, amp] : b.amplitudes()) {
        diff.add(key, -amp);
    }
    return norm_sq(diff);
}

std::map<uint64_t, Rational> measure_register(const SparseState &state, size_t reg, size_t width) {
    if (reg >= state.num_registers()) {
        throw std::out_of_range("register " + std::to_string(reg) + " out of range");
    }
    uint64_t size = state.dims()[reg];
    if (width >= 64 || size % (uint64_t{1} << width) != 0) {
        throw std::out_of_range("cannot measure " + std::to_string(width) + " cells of a register of size " +
                                std::to_string(size));
    }
    uint64_t stride = size >> width;
    std::map<uint64_t, Rational> probabilities;
    for (const auto &[key, amp] : state.amplitudes()) {
        probabilities[key[reg] / stride] += amp * amp;
    }
    return probabilities;
}

}  // namespace qtt
