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

#include "mupir/block.h"

#include <algorithm>
#include <cstdio>

#include "mupir/error.h"

namespace mupir {

bool Block::IsZero() const {
  return std::all_of(bytes_.begin(), bytes_.end(),
                     [](uint8_t b) { return b == 0; });
}

Block& Block::operator^=(const Block& other) {
  Require(other.size() == size(), ErrorCode::kLengthMismatch,
          "cannot XOR blocks of " + std::to_string(size()) + " and " +
              std::to_string(other.size()) + " bytes");
  for (size_t i = 0; i < bytes_.size(); ++i) bytes_[i] ^= other.bytes_[i];
  return *this;
}

std::string Block::Hex() const {
  std::string out;
  out.reserve(bytes_.size() * 2);
  char buf[3];
  for (uint8_t b : bytes_) {
    std::snprintf(buf, sizeof(buf), "%02x", b);
    out += buf;
  }
  return out;
}

Block operator^(Block lhs, const Block& rhs) { return lhs ^= rhs; }

Block XorCombine(std::span<const Block> blocks) {
  Require(!blocks.empty(), ErrorCode::kLengthMismatch,
          "XorCombine needs at least one block");
  Block out = blocks.front();
  for (const Block& b : blocks.subspan(1)) out ^= b;
  return out;
}

}  // namespace mupir
