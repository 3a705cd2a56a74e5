// Copyright 2026 The clusterproof Authors
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

#include "clusterproof/bits.h"

#include <bit>

#include "clusterproof/errors.h"

namespace clusterproof {

BitString::BitString(size_t n) : n_(n), words_((n + 63) / 64, 0) {}

BitString BitString::from_string(std::string_view bits) {
    BitString result(bits.size());
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            result.set(i);
        } else if (bits[i] != '0') {
            throw InvalidArgument("bit string may only contain '0' and '1': " + std::string(bits));
        }
    }
    return result;
}

BitString BitString::from_mask(uint64_t mask, size_t n) {
    if (n > 64) {
        throw InvalidArgument("from_mask supports at most 64 bits");
    }
    BitString result(n);
    if (n > 0) {
        result.words_[0] = n == 64 ? mask : (mask & ((uint64_t{1} << n) - 1));
    }
    return result;
}

BitString BitString::unit(size_t n, size_t v) {
    BitString result(n);
    result.set(v);
    return result;
}

BitString BitString::from_indices(size_t n, const std::vector<int> &indices) {
    BitString result(n);
    for (int i : indices) {
        result.set(static_cast<size_t>(i));
    }
    return result;
}

bool BitString::get(size_t i) const {
    if (i >= n_) {
        throw InvalidArgument("bit index " + std::to_string(i) + " out of range for length " + std::to_string(n_));
    }
    return (words_[i >> 6] >> (i & 63)) & 1;
}

void BitString::set(size_t i, bool value) {
    if (i >= n_) {
        throw InvalidArgument("bit index " + std::to_string(i) + " out of range for length " + std::to_string(n_));
    }
    uint64_t m = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= m;
    } else {
        words_[i >> 6] &= ~m;
    }
}

void BitString::flip(size_t i) { set(i, !get(i)); }

size_t BitString::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += static_cast<size_t>(std::popcount(w));
    }
    return total;
}

bool BitString::any() const {
    for (uint64_t w : words_) {
        if (w) {
            return true;
        }
    }
    return false;
}

std::vector<int> BitString::indices() const {
    std::vector<int> out;
    for (size_t i = 0; i < n_; i++) {
        if (get(i)) {
            out.push_back(static_cast<int>(i));
        }
    }
    return out;
}

uint64_t BitString::to_mask() const {
    if (n_ > 64) {
        throw InvalidArgument("to_mask supports at most 64 bits");
    }
    return words_.empty() ? 0 : words_[0];
}

std::string BitString::str() const {
    std::string out(n_, '0');
    for (size_t i = 0; i < n_; i++) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

void BitString::require_same_size(const BitString &other) const {
    if (n_ != other.n_) {
        throw InvalidArgument("bit string length mismatch: " + std::to_string(n_) + " vs " + std::to_string(other.n_));
    }
}

BitString &BitString::operator^=(const BitString &other) {
    require_same_size(other);
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitString BitString::operator^(const BitString &other) const {
    BitString result = *this;
    result ^= other;
    return result;
}

BitString BitString::operator&(const BitString &other) const {
    require_same_size(other);
    BitString result = *this;
    for (size_t k = 0; k < words_.size(); k++) {
        result.words_[k] &= other.words_[k];
    }
    return result;
}

int dot(const BitString &s, const BitString &t, DotMode mode) {
    if (s.size() != t.size()) {
        throw InvalidArgument("dot: length mismatch " + std::to_string(s.size()) + " vs " + std::to_string(t.size()));
    }
    int count = 0;
    const auto &a = s.words();
    const auto &b = t.words();
    for (size_t k = 0; k < a.size(); k++) {
        count += std::popcount(a[k] & b[k]);
    }
    return mode == DotMode::Parity ? (count & 1) : count;
}

}  // namespace clusterproof
