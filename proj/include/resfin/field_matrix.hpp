// Copyright 2026 The resfin Authors
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

#ifndef RESFIN_FIELD_MATRIX_HPP_
#define RESFIN_FIELD_MATRIX_HPP_

#include <span>
#include <string>
#include <vector>

#include "resfin/ratfunc.hpp"

namespace resfin {

// Square matrix over the rational function field, row-major.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(std::size_t size, std::vector<RatFunc> entries);

  static FieldMatrix identity(const BigInt& characteristic, std::size_t nvars,
                              std::size_t size);

  std::size_t size() const noexcept { return size_; }
  const RatFunc& at(std::size_t i, std::size_t j) const {
    return entries_[i * size_ + j];
  }
  const std::vector<RatFunc>& entries() const noexcept { return entries_; }

  friend FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b);
  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

  bool is_identity() const;
  RatFunc determinant() const;
  // Gauss-Jordan inverse; throws InvalidArgument when singular.
  FieldMatrix inverse() const;

  // "[[a, b], [c, d]]".
  std::string to_string(std::span<const std::string> names = {}) const;
  std::size_t hash() const noexcept;

 private:
  std::size_t size_ = 0;
  std::vector<RatFunc> entries_;
};

// Square matrix with polynomial entries.
struct PolyMatrix {
  std::size_t size = 0;
  std::vector<MultiPoly> entries;

  const MultiPoly& at(std::size_t i, std::size_t j) const {
    return entries[i * size + j];
  }
  bool is_zero() const;
};

}  // namespace resfin

template <>
struct std::hash<resfin::FieldMatrix> {
  std::size_t operator()(const resfin::FieldMatrix& m) const noexcept {
    return m.hash();
  }
};

#endif  // RESFIN_FIELD_MATRIX_HPP_
