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

#ifndef CLUSTERPROOF_RNG_H
#define CLUSTERPROOF_RNG_H

#include <cmath>
#include <cstdint>
#include <random>

namespace clusterproof {

inline constexpr const char *kPrngFamily = "mt19937_64/splitmix64-stream-v1";

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seeded generator with bit-exact output across platforms.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. Derived quantities avoid <random> distributions (which are
/// implementation-defined) so that any language with an MT19937-64 can
/// reproduce a run:
///   uniform()      = (next() >> 11) * 2^-53
///   below(k)       = floor(uniform() * k)
///   stream(m, i)   = Rng(splitmix64(m ^ splitmix64(i)))
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    /// Independent stream for trial `index` under master seed `master`.
    static Rng stream(uint64_t master, uint64_t index) {
        return Rng(splitmix64(master ^ splitmix64(index)));
    }

    uint64_t next() { return engine_(); }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    size_t below(size_t k) {
        auto r = static_cast<size_t>(uniform() * static_cast<double>(k));
        return r < k ? r : k - 1;
    }

    bool bernoulli(double p) { return uniform() < p; }

    /// Standard normal via Box-Muller; used only for random test states.
    double normal();

   private:
    std::mt19937_64 engine_;
};

inline double Rng::normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 1e-300) {
        u1 = 1e-300;
    }
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

}  // namespace clusterproof

#endif
