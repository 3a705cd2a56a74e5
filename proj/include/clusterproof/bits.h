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

#ifndef CLUSTERPROOF_BITS_H
#define CLUSTERPROOF_BITS_H

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace clusterproof {

enum class DotMode { Integer, Parity };

/// Fixed-length vector over GF(2), packed into 64-bit words.
///
/// Holds vertex subsets (x, p, q, s, t, triangle indicators) and adjacency
/// rows. Binary operations require equal lengths.
class BitString {
   public:
    BitString() = default;
    explicit BitString(size_t n);

    /// Parses a string of '0'/'1' characters; character i is bit i.
    static BitString from_string(std::string_view bits);
    /// Low `n` bits of `mask`, bit i of the mask is position i.
    static BitString from_mask(uint64_t mask, size_t n);
    /// The indicator 1_v.
    static BitString unit(size_t n, size_t v);
    static BitString from_indices(size_t n, const std::vector<int> &indices);

    size_t size() const { return n_; }
    bool get(size_t i) const;
    void set(size_t i, bool value = true);
    void flip(size_t i);

    size_t popcount() const;
    bool any() const;
    std::vector<int> indices() const;
    /// Requires size() <= 64.
    uint64_t to_mask() const;
    std::string str() const;

    BitString &operator^=(const BitString &other);
    BitString operator^(const BitString &other) const;
    BitString operator&(const BitString &other) const;
    bool operator==(const BitString &other) const = default;

    const std::vector<uint64_t> &words() const { return words_; }

   private:
    void require_same_size(const BitString &other) const;

    size_t n_ = 0;
    std::vector<uint64_t> words_;
};

/// s . t = sum_j s_j t_j, either as an integer or reduced mod 2.
int dot(const BitString &s, const BitString &t, DotMode mode = DotMode::Integer);

}  // namespace clusterproof

#endif
