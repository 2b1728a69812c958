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

#include "mupir/transcript.h"

#include <algorithm>

namespace mupir {

const char* SchemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::kSingle:
      return "single";
    case Scheme::kMupir:
      return "mupir";
  }
  return "unknown";
}

bool SessionTranscript::IsBase(int user) const {
  if (scheme == Scheme::kSingle || base_set.empty()) return true;
  return std::binary_search(base_set.begin(), base_set.end(), user);
}

}  // namespace mupir
