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

#ifndef MUPIR_FILE_STORE_H_
#define MUPIR_FILE_STORE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "mupir/block.h"

namespace mupir {

// S^(N-1), with overflow and range checks.
int Subpacketization(int S, int N);

// N files, each cut into K subfiles of S^(N-1) subsubfiles of block_bytes
// bytes. One store stands for all S database replicas.
class FileStore {
 public:
  // Pseudo-random content derived from seed.
  static FileStore Build(int N, int K, int S, int block_bytes, uint64_t seed);

  // Raw import: `raw` holds the N files back to back, each file laid out
  // subfile-major then subsubfile. Short input is zero padded; input longer
  // than N * file_bytes() is rejected.
  static FileStore FromBytes(int N, int K, int S, int block_bytes,
                             std::span<const uint8_t> raw);

  int N() const { return N_; }
  int K() const { return K_; }
  int S() const { return S_; }
  int block_bytes() const { return block_bytes_; }
  int subpacketization() const { return sub_; }

  size_t file_bytes() const;
  uint64_t file_bits() const { return file_bytes() * 8; }

  // 1-based file i, subfile j, subsubfile x.
  Block block(int i, int j, int x) const;
  std::span<const uint8_t> view(int i, int j, int x) const;
  void set_block(int i, int j, int x, const Block& value);

  // Every block of file i, ordered by subfile then subsubfile.
  std::vector<Block> file(int i) const;

 private:
  FileStore(int N, int K, int S, int block_bytes);
  size_t Offset(int i, int j, int x) const;

  int N_ = 0;
  int K_ = 0;
  int S_ = 0;
  int block_bytes_ = 0;
  int sub_ = 0;
  std::vector<uint8_t> data_;
};

}  // namespace mupir

#endif  // MUPIR_FILE_STORE_H_
