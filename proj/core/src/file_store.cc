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

#include "mupir/file_store.h"

#include <algorithm>
#include <limits>
#include <string>

#include "mupir/error.h"
#include "mupir/rng.h"

namespace mupir {

int Subpacketization(int S, int N) {
  Require(S >= 1 && N >= 1, ErrorCode::kInvalidDimension,
          "S and N must be positive");
  int64_t out = 1;
  for (int e = 1; e < N; ++e) {
    out *= S;
    Require(out <= std::numeric_limits<int>::max() / 2,
            ErrorCode::kInvalidDimension,
            "S^(N-1) too large for S=" + std::to_string(S) +
                " N=" + std::to_string(N));
  }
  return static_cast<int>(out);
}

FileStore::FileStore(int N, int K, int S, int block_bytes)
    : N_(N), K_(K), S_(S), block_bytes_(block_bytes) {
  Require(N >= 2, ErrorCode::kInvalidDimension, "need N >= 2 files");
  Require(S >= 2, ErrorCode::kInvalidDimension, "need S >= 2 databases");
  Require(K >= 1, ErrorCode::kInvalidDimension, "need K >= 1 subfiles");
  Require(block_bytes >= 1, ErrorCode::kInvalidDimension,
          "need block_bytes >= 1");
  sub_ = Subpacketization(S, N);
  const uint64_t total = static_cast<uint64_t>(N) * K * sub_ * block_bytes;
  Require(total <= (uint64_t{1} << 32), ErrorCode::kInvalidDimension,
          "store too large: " + std::to_string(total) + " bytes");
  data_.assign(total, 0);
}

FileStore FileStore::Build(int N, int K, int S, int block_bytes,
                           uint64_t seed) {
  FileStore store(N, K, S, block_bytes);
  Rng rng(seed);
  size_t i = 0;
  while (i < store.data_.size()) {
    uint64_t word = rng.Next();
    for (int b = 0; b < 8 && i < store.data_.size(); ++b, ++i) {
      store.data_[i] = static_cast<uint8_t>(word >> (8 * b));
    }
  }
  return store;
}

FileStore FileStore::FromBytes(int N, int K, int S, int block_bytes,
                               std::span<const uint8_t> raw) {
  FileStore store(N, K, S, block_bytes);
  Require(raw.size() <= store.data_.size(), ErrorCode::kInvalidDimension,
          "input of " + std::to_string(raw.size()) + " bytes exceeds " +
              std::to_string(store.data_.size()) + " byte store");
  std::copy(raw.begin(), raw.end(), store.data_.begin());
  return store;
}

size_t FileStore::file_bytes() const {
  return static_cast<size_t>(K_) * sub_ * block_bytes_;
}

size_t FileStore::Offset(int i, int j, int x) const {
  Require(i >= 1 && i <= N_ && j >= 1 && j <= K_ && x >= 1 && x <= sub_,
          ErrorCode::kOutOfRange,
          "atom (" + std::to_string(i) + "," + std::to_string(j) + "," +
              std::to_string(x) + ") outside store");
  return ((static_cast<size_t>(i - 1) * K_ + (j - 1)) * sub_ + (x - 1)) *
         block_bytes_;
}

std::span<const uint8_t> FileStore::view(int i, int j, int x) const {
  return std::span<const uint8_t>(data_).subspan(Offset(i, j, x),
                                                 block_bytes_);
}

Block FileStore::block(int i, int j, int x) const {
  auto v = view(i, j, x);
  return Block(std::vector<uint8_t>(v.begin(), v.end()));
}

void FileStore::set_block(int i, int j, int x, const Block& value) {
  Require(value.size() == static_cast<size_t>(block_bytes_),
          ErrorCode::kLengthMismatch, "block length differs from store");
  auto src = value.bytes();
  std::copy(src.begin(), src.end(), data_.begin() + Offset(i, j, x));
}

std::vector<Block> FileStore::file(int i) const {
  std::vector<Block> out;
  out.reserve(static_cast<size_t>(K_) * sub_);
  for (int j = 1; j <= K_; ++j) {
    for (int x = 1; x <= sub_; ++x) out.push_back(block(i, j, x));
  }
  return out;
}

}  // namespace mupir
