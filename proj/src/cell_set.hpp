// Copyright 2026 The stratify Authors
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

#pragma once

#include <algorithm>
#include <cstddef>
#include <unordered_set>
#include <vector>

#include "stratify/complex.hpp"

namespace stratify::detail {

// Insertion-ordered set of cells. Stars are usually a few dozen cells, so
// membership is a linear scan until the set grows past kLinearLimit.
class CellSet {
 public:
  bool insert(CellId c) {
    if (contains(c)) return false;
    items_.push_back(c);
    if (!index_.empty()) {
      index_.insert(c);
    } else if (items_.size() > kLinearLimit) {
      index_.insert(items_.begin(), items_.end());
    }
    return true;
  }

  bool contains(CellId c) const {
    if (!index_.empty()) return index_.count(c) != 0;
    return std::find(items_.begin(), items_.end(), c) != items_.end();
  }

  std::size_t size() const { return items_.size(); }
  CellId operator[](std::size_t i) const { return items_[i]; }

  std::vector<CellId> take_sorted() {
    std::sort(items_.begin(), items_.end());
    index_.clear();
    return std::move(items_);
  }

 private:
  static constexpr std::size_t kLinearLimit = 48;
  std::vector<CellId> items_;
  std::unordered_set<CellId> index_;
};

}  // namespace stratify::detail
