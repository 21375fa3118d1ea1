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

#ifndef ASCOVER_SRC_BITSET64_HPP_
#define ASCOVER_SRC_BITSET64_HPP_

#include <bit>
#include <cstdint>
#include <vector>

namespace ascover::internal {

// Minimal fixed-universe bitset.  The application utilities evaluate set
// unions and intersections in their inner loops; packed words keep those
// evaluations cheap at benchmark scale.
class Bitset64 {
 public:
  Bitset64() = default;
  explicit Bitset64(int bits)
      : bits_(bits), words_((bits + 63) / 64, 0) {}

  static Bitset64 all_set(int bits) {
    Bitset64 set(bits);
    for (auto& word : set.words_) word = ~std::uint64_t{0};
    set.clear_padding();
    return set;
  }

  void set(int index) { words_[index >> 6] |= std::uint64_t{1} << (index & 63); }
  bool test(int index) const {
    return (words_[index >> 6] >> (index & 63)) & 1;
  }

  void or_with(const Bitset64& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  }
  void and_with(const Bitset64& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  }

  int count() const {
    int total = 0;
    for (std::uint64_t word : words_) total += std::popcount(word);
    return total;
  }

  int size_bits() const { return bits_; }

  bool operator==(const Bitset64&) const = default;

 private:
  void clear_padding() {
    if (bits_ % 64 != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << (bits_ % 64)) - 1;
    }
  }

  int bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ascover::internal

#endif  // ASCOVER_SRC_BITSET64_HPP_
