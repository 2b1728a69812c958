// Copyright 2026 The mupir Authors
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

#ifndef MUPIR_BLOCK_H_
#define MUPIR_BLOCK_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mupir {

// Content of one subsubfile. All blocks of a session share one length.
class Block {
 public:
  Block() = default;
  explicit Block(size_t length) : bytes_(length, 0) {}
  explicit Block(std::vector<uint8_t> bytes) : bytes_(std::move(bytes)) {}

  size_t size() const { return bytes_.size(); }
  std::span<const uint8_t> bytes() const { return bytes_; }
  std::span<uint8_t> mutable_bytes() { return bytes_; }

  bool IsZero() const;

  // In-place XOR; lengths must match.
  Block& operator^=(const Block& other);

  friend bool operator==(const Block&, const Block&) = default;

  std::string Hex() const;

 private:
  std::vector<uint8_t> bytes_;
};

Block operator^(Block lhs, const Block& rhs);

// Bytewise XOR of a nonempty list of equal-length blocks.
Block XorCombine(std::span<const Block> blocks);

}  // namespace mupir

#endif  // MUPIR_BLOCK_H_
