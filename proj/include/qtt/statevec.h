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

#ifndef QTT_STATEVEC_H
#define QTT_STATEVEC_H

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "qtt/rational.h"

namespace qtt {

/// One coordinate per register. Ordered lexicographically, first register most significant.
using BasisKey = std::vector<uint64_t>;

/// A real state over a tensor product of registers, stored as a sparse amplitude map.
///
/// Zero amplitudes are never stored. The register sizes are part of the value, and every
/// binary operation checks them for equality.
class SparseState {
   public:
    SparseState() = default;
    explicit SparseState(std::vector<uint64_t> dims);

    const std::vector<uint64_t> &dims() const {
        return dims_;
    }
    size_t num_registers() const {
        return dims_.size();
    }
    const std::map<BasisKey, Rational> &amplitudes() const {
        return amps_;
    }
    size_t support_size() const {
        return amps_.size();
    }

    Rational amplitude(const BasisKey &key) const;

    /// Adds delta to the amplitude at key, removing the entry if the sum is zero.
    void add(const BasisKey &key, const Rational &delta);

    /// The single-term state |key> with amplitude one.
    static SparseState basis(std::vector<uint64_t> dims, BasisKey key);

    /// Product of register sizes, or 0 if it would overflow 64 bits.
    uint64_t total_dimension() const;

    /// Mixed-radix flattening; requires total_dimension() != 0.
    uint64_t flatten(const BasisKey &key) const;
    BasisKey unflatten(uint64_t index) const;

    bool operator==(const SparseState &other) const = default;

   private:
    void check_key(const BasisKey &key) const;

    std::vector<uint64_t> dims_;
    std::map<BasisKey, Rational> amps_;
};

/// A square real matrix with exactly orthonormal columns, stored column-sparse.
///
/// Construction verifies M^T M = I entry by entry and throws std::invalid_argument otherwise.
class OrthogonalMatrix {
   public:
    using Column = std::vector<std::pair<uint64_t, Rational>>;

    static OrthogonalMatrix from_rows(const std::vector<std::vector<Rational>> &rows);
    static OrthogonalMatrix from_columns(uint64_t dimension, std::vector<Column> columns);
    static OrthogonalMatrix identity(uint64_t dimension);

    uint64_t dimension() const {
        return dimension_;
    }
    const Column &column(uint64_t index) const {
        return columns_.at(index);
    }
    Rational entry(uint64_t row, uint64_t col) const;
    OrthogonalMatrix transpose() const;
    std::vector<std::vector<Rational>> to_rows() const;

   private:
    OrthogonalMatrix(uint64_t dimension, std::vector<Column> columns);
    void verify() const;

    uint64_t dimension_ = 0;
    std::vector<Column> columns_;
};

Rational norm_sq(const SparseState &state);

/// Applies the matrix to the whole space (all registers, mixed-radix flattened).
SparseState apply_matrix(const OrthogonalMatrix &m, const SparseState &state);

/// Applies the matrix to the listed registers (in the listed order, first most significant),
/// acting as the identity on the rest.
SparseState apply_matrix(const OrthogonalMatrix &m, const SparseState &state, std::span<const size_t> registers);

Rational inner_product(const SparseState &a, const SparseState &b);

/// norm_sq(a - b), computed directly from the difference.
Rational distance_sq(const SparseState &a, const SparseState &b);

/// Born-rule marginal over the first `width` binary cells of one register.
///
/// The register size must be divisible by 2^width; the outcome is the register value
/// divided by size / 2^width.
std::map<uint64_t, Rational> measure_register(const SparseState &state, size_t reg, size_t width);

}  // namespace qtt

#endif
