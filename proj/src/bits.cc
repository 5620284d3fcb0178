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

#include "qtt/bits.h"

namespace qtt {

BitString BitString::from_string(std::string_view text) {
    BitString result;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string literal contains '" + std::string(1, c) + "'");
        }
        result.push_back(c == '1');
    }
    return result;
}

BitString BitString::from_value(uint64_t value, size_t width) {
    BitString result;
    result.append_value(value, width);
    return result;
}

void BitString::append(const BitString &other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

void BitString::append_value(uint64_t value, size_t width) {
    if (width > 64 || (width < 64 && (value >> width) != 0)) {
        throw std::out_of_range("value " + std::to_string(value) + " does not fit in " + std::to_string(width) + " bits");
    }
    for (size_t k = width; k-- > 0;) {
        bits_.push_back(((value >> k) & 1) != 0);
    }
}

uint64_t BitString::value_at(size_t offset, size_t width) const {
    if (width > 64 || offset + width > bits_.size()) {
        throw std::out_of_range("bit range out of bounds");
    }
    uint64_t v = 0;
    for (size_t k = 0; k < width; k++) {
        v = (v << 1) | static_cast<uint64_t>(bits_[offset + k]);
    }
    return v;
}

BitString BitString::substr(size_t offset, size_t width) const {
    if (offset + width > bits_.size()) {
        throw std::out_of_range("bit range out of bounds");
    }
    BitString result;
    result.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(offset),
                        bits_.begin() + static_cast<std::ptrdiff_t>(offset + width));
    return result;
}

std::string BitString::to_string() const {
    std::string out;
    out.reserve(bits_.size());
    for (bool b : bits_) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

std::string BitString::to_hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    for (size_t k = 0; k < bits_.size(); k += 4) {
        unsigned nibble = 0;
        for (size_t j = 0; j < 4; j++) {
            nibble <<= 1;
            if (k + j < bits_.size() && bits_[k + j]) {
                nibble |= 1;
            }
        }
        out.push_back(kDigits[nibble]);
    }
    return out;
}

BitString BitString::from_hex(std::string_view hex, size_t bit_length) {
    if (hex.size() != (bit_length + 3) / 4) {
        throw std::invalid_argument("hex length does not match bit length");
    }
    BitString result;
    for (char c : hex) {
        unsigned nibble;
        if (c >= '0' && c <= '9') {
            nibble = static_cast<unsigned>(c - '0');
        } else if (c >= 'a' && c <= 'f') {
            nibble = static_cast<unsigned>(c - 'a' + 10);
        } else if (c >= 'A' && c <= 'F') {
            nibble = static_cast<unsigned>(c - 'A' + 10);
        } else {
            throw std::invalid_argument("bad hex digit");
        }
        result.append_value(nibble, 4);
    }
    for (size_t k = bit_length; k < result.size(); k++) {
        if (result[k]) {
            throw std::invalid_argument("nonzero hex padding");
        }
    }
    return result.substr(0, bit_length);
}

void BitReader::require(size_t width) const {
    if (width > remaining()) {
        throw MalformedStream("bit stream truncated: need " + std::to_string(width) + " bits at offset " +
                              std::to_string(pos_) + ", have " + std::to_string(remaining()));
    }
}

bool BitReader::read_bit() {
    require(1);
    return bits_[pos_++];
}

uint64_t BitReader::read_value(size_t width) {
    require(width);
    uint64_t v = bits_.value_at(pos_, width);
    pos_ += width;
    return v;
}

BitString BitReader::read_bits(size_t width) {
    require(width);
    BitString out = bits_.substr(pos_, width);
    pos_ += width;
    return out;
}

}  // namespace qtt
