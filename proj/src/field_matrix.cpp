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

#include "resfin/field_matrix.hpp"

#include "resfin/error.hpp"

namespace resfin {

FieldMatrix::FieldMatrix(std::size_t size, std::vector<RatFunc> entries)
    : size_(size), entries_(std::move(entries)) {
  if (entries_.size() != size_ * size_) {
    throw InvalidArgument("matrix is not square: " + std::to_string(entries_.size()) +
                          " entries for size " + std::to_string(size_));
  }
  for (const RatFunc& e : entries_) {
    if (e.characteristic() != entries_[0].characteristic() ||
        e.nvars() != entries_[0].nvars()) {
      throw RingMismatch("matrix entries over different rings");
    }
  }
}

FieldMatrix FieldMatrix::identity(const BigInt& characteristic, std::size_t nvars,
                                  std::size_t size) {
  std::vector<RatFunc> e;
  e.reserve(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      e.push_back(RatFunc::constant(characteristic, nvars, i == j ? 1 : 0));
    }
  }
  return FieldMatrix(size, std::move(e));
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.size_ != b.size_) throw RingMismatch("matrix size mismatch");
  const std::size_t n = a.size_;
  std::vector<RatFunc> c;
  c.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RatFunc acc = a.at(i, 0) * b.at(0, j);
      for (std::size_t k = 1; k < n; ++k) acc = acc + a.at(i, k) * b.at(k, j);
      c.push_back(std::move(acc));
    }
  }
  return FieldMatrix(n, std::move(c));
}

bool FieldMatrix::is_identity() const {
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      const RatFunc& e = at(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

RatFunc FieldMatrix::determinant() const {
  std::vector<RatFunc> a = entries_;
  const std::size_t n = size_;
  RatFunc det = RatFunc::constant(a[0].characteristic(), a[0].nvars(), 1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col].is_zero()) ++pivot;
    if (pivot == n) return RatFunc::constant(a[0].characteristic(), a[0].nvars(), 0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[pivot * n + j], a[col * n + j]);
      det = -det;
    }
    det = det * a[col * n + col];
    const RatFunc pinv = a[col * n + col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r * n + col].is_zero()) continue;
      const RatFunc factor = a[r * n + col] * pinv;
      for (std::size_t j = col; j < n; ++j) {
        a[r * n + j] = a[r * n + j] - factor * a[col * n + j];
      }
    }
  }
  return det;
}

FieldMatrix FieldMatrix::inverse() const {
  const std::size_t n = size_;
  std::vector<RatFunc> a = entries_;
  std::vector<RatFunc> inv = identity(a[0].characteristic(), a[0].nvars(), n).entries_;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col].is_zero()) ++pivot;
    if (pivot == n) throw InvalidArgument("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[pivot * n + j], a[col * n + j]);
        std::swap(inv[pivot * n + j], inv[col * n + j]);
      }
    }
    const RatFunc pinv = a[col * n + col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] = a[col * n + j] * pinv;
      inv[col * n + j] = inv[col * n + j] * pinv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col].is_zero()) continue;
      const RatFunc factor = a[r * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r * n + j] = a[r * n + j] - factor * a[col * n + j];
        inv[r * n + j] = inv[r * n + j] - factor * inv[col * n + j];
      }
    }
  }
  return FieldMatrix(n, std::move(inv));
}

std::string FieldMatrix::to_string(std::span<const std::string> names) const {
  std::string out = "[";
  for (std::size_t i = 0; i < size_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < size_; ++j) {
      if (j) out += ", ";
      out += at(i, j).to_string(names);
    }
    out += "]";
  }
  return out + "]";
}

std::size_t FieldMatrix::hash() const noexcept {
  std::size_t h = size_;
  for (const RatFunc& e : entries_) h = h * 0x100000001b3ULL ^ e.hash();
  return h;
}

bool PolyMatrix::is_zero() const {
  for (const MultiPoly& e : entries) {
    if (!e.is_zero()) return false;
  }
  return true;
}

}  // namespace resfin
