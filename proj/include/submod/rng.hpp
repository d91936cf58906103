// Copyright 2026 The Authors.
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

#ifndef SUBMOD_RNG_HPP
#define SUBMOD_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace submod {

// Seeded generator with hand-rolled draw mappings. std::mt19937_64's output
// stream is pinned by the standard, and the mappings below avoid the
// implementation-defined std::uniform_* distributions, so identical seeds
// give identical draws on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t v = engine_();
    while (v >= limit) v = engine_();
    return v % bound;
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform on the open interval (0, 1); exact endpoints are rejected.
  double unit_open() {
    double u = unit();
    while (u == 0.0) u = unit();
    return u;
  }

  bool bernoulli(double p) { return unit() < p; }

  // Fisher-Yates, iterating from the back.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // `count` draws without replacement, by partial Fisher-Yates over a copy.
  template <class T>
  std::vector<T> sample(std::vector<T> pool, std::size_t count) {
    if (count > pool.size()) {
      throw std::invalid_argument("Rng::sample: count exceeds pool");
    }
    for (std::size_t i = 0; i < count; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(below(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    return pool;
  }

 private:
  std::mt19937_64 engine_;
};

// FNV-1a, used to derive per-cell seeds from names and indices.
inline std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace submod

#endif  // SUBMOD_RNG_HPP
