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

#ifndef QTT_BITS_H
#define QTT_BITS_H

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qtt {

/// Raised when a bit stream cannot be parsed under the expected framing.
struct MalformedStream : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A finite string over {0,1}. Multi-bit values are stored most significant bit first.
class BitString {
   public:
    BitString() = default;

    /// From a literal like "0110". Throws std::invalid_argument on other characters.
    static BitString from_string(std::string_view text);

    /// The width-bit big-endian rendering of value. Throws if value does not fit.
    static BitString from_value(uint64_t value, size_t width);

    size_t size() const {
        return bits_.size();
    }
    bool empty() const {
        return bits_.empty();
    }
    bool operator[](size_t index) const {
        return bits_[index];
    }

    void push_back(bool bit) {
        bits_.push_back(bit);
    }
    void append(const BitString &other);
    void append_value(uint64_t value, size_t width);

    /// Big-endian integer value of bits [offset, offset + width). Width is at most 64.
    uint64_t value_at(size_t offset, size_t width) const;
    uint64_t value() const {
        return value_at(0, size());
    }
    BitString substr(size_t offset, size_t width) const;

    std::string to_string() const;

    /// Hex digits of the bits padded with zeros on the right to a multiple of four.
    /// The bit length is not recoverable from the hex alone; dumps carry it separately.
    std::string to_hex() const;
    static BitString from_hex(std::string_view hex, size_t bit_length);

    bool operator==(const BitString &other) const = default;
    auto operator<=>(const BitString &other) const = default;

   private:
    std::vector<bool> bits_;
};

/// Sequential reader over a BitString. Reading past the end raises MalformedStream.
class BitReader {
   public:
    explicit BitReader(const BitString &bits) : bits_(bits) {
    }

    bool read_bit();
    uint64_t read_value(size_t width);
    BitString read_bits(size_t width);

    size_t position() const {
        return pos_;
    }
    size_t remaining() const {
        return bits_.size() - pos_;
    }
    bool at_end() const {
        return pos_ == bits_.size();
    }

   private:
    void require(size_t width) const;

    const BitString &bits_;
    size_t pos_ = 0;
};

}  // namespace qtt

#endif
