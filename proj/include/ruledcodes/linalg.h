/* Copyright 2026 The ruledcodes Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef RULEDCODES_LINALG_H_
#define RULEDCODES_LINALG_H_

#include <span>
#include <vector>

#include "ruledcodes/gf.h"

namespace ruledcodes {

// Dense row-major matrix of field encodings. The field is passed to every
// algorithm explicitly.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Elem& at(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  Elem at(int r, int c) const { return data_[size_t(r) * cols_ + c]; }
  std::span<Elem> row(int r) { return {data_.data() + size_t(r) * cols_, size_t(cols_)}; }
  std::span<const Elem> row(int r) const {
    return {data_.data() + size_t(r) * cols_, size_t(cols_)};
  }
  void append_row(std::span<const Elem> values);
  Matrix select_columns(std::span<const int> columns) const;
  Matrix select_rows(std::span<const int> rows) const;

  bool operator==(const Matrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Elem> data_;
};

struct EchelonForm {
  Matrix reduced;           // nonzero rows only, reduced row echelon form
  std::vector<int> pivots;  // pivot column of each row
};

EchelonForm ReducedRowEchelon(const FieldSpec& field, const Matrix& m);
int Rank(const FieldSpec& field, const Matrix& m);
// Basis of {v : m v = 0}; one vector per free column, free entry set to 1.
std::vector<std::vector<Elem>> NullSpace(const FieldSpec& field, const Matrix& m);
// Indices of a maximal independent subset of rows, chosen greedily top-down.
std::vector<int> IndependentRows(const FieldSpec& field, const Matrix& m);
bool RowSpaceContains(const FieldSpec& field, const Matrix& big, const Matrix& small);
bool RowSpaceEqual(const FieldSpec& field, const Matrix& a, const Matrix& b);
std::vector<Elem> VectorTimesMatrix(const FieldSpec& field, std::span<const Elem> v,
                                    const Matrix& m);

}  // namespace ruledcodes

#endif  // RULEDCODES_LINALG_H_
