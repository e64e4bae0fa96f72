// Copyright 2026 The tlsg authors
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

// Frozen output of tools/cellgen (weight cap 6). Each entry lists the cell
// sites as x,y,weight triplets over the 5x5 box, then the pin indices in the
// kind's pin order. The test suite re-certifies every entry.
//
// Include tlsg/cells.hpp, not this file.

#pragma once

namespace tlsg::detail {

inline const std::vector<RawCell>& builtin_cell_data() {
  static const std::vector<RawCell> data = {
  };
  return data;
}

}  // namespace tlsg::detail
