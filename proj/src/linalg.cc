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

#include "ruledcodes/linalg.h"

#include <stdexcept>

namespace ruledcodes {

void Matrix::append_row(std::span<const Elem> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = static_cast<int>(values.size());
  if (static_cast<int>(values.size()) != cols_) {
    throw std::invalid_argument("append_row: width mismatch");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::select_columns(std::span<const int> columns) const {
  Matrix out(rows_, static_cast<int>(columns.size()));
  for (int r = 0; r < rows_; ++r) {
    for (size_t j = 0; j < columns.size(); ++j) out.at(r, static_cast<int>(j)) = at(r, columns[j]);
  }
  return out;
}

Matrix Matrix::select_rows(std::span<const int> rows) const {
  Matrix out(0, cols_);
  for (int r : rows) out.append_row(row(r));
  return out;
}

EchelonForm ReducedRowEchelon(const FieldSpec& field, const Matrix& m) {
  Matrix a = m;
  std::vector<int> pivots;
  int lead_row = 0;
  for (int c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
    int found = -1;
    for (int r = lead_row; r < a.rows(); ++r) {
      if (a.at(r, c) != 0) {
        found = r;
        break;
      }
    }
    if (found < 0) continue;
    if (found != lead_row) {
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(found, j), a.at(lead_row, j));
    }
    const Elem inv = field.inv(a.at(lead_row, c));
    for (int j = c; j < a.cols(); ++j) a.at(lead_row, j) = field.mul(a.at(lead_row, j), inv);
    for (int r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a.at(r, c) == 0) continue;
      const Elem factor = a.at(r, c);
      for (int j = c; j < a.cols(); ++j) {
        a.at(r, j) = field.sub(a.at(r, j), field.mul(factor, a.at(lead_row, j)));
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  Matrix reduced(0, a.cols());
  for (int r = 0; r < lead_row; ++r) reduced.append_row(a.row(r));
  return {std::move(reduced), std::move(pivots)};
}

int Rank(const FieldSpec& field, const Matrix& m) {
  return static_cast<int>(ReducedRowEchelon(field, m).pivots.size());
}

std::vector<std::vector<Elem>> NullSpace(const FieldSpec& field, const Matrix& m) {
  const EchelonForm ef = ReducedRowEchelon(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : ef.pivots) is_pivot[c] = true;
  std::vector<std::vector<Elem>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(m.cols(), 0);
    v[free] = 1;
    for (size_t r = 0; r < ef.pivots.size(); ++r) {
      v[ef.pivots[r]] = field.neg(ef.reduced.at(static_cast<int>(r), free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<int> IndependentRows(const FieldSpec& field, const Matrix& m) {
  std::vector<int> chosen;
  Matrix acc(0, m.cols());
  int rank = 0;
  for (int r = 0; r < m.rows(); ++r) {
    Matrix trial = acc;
    trial.append_row(m.row(r));
    const int new_rank = Rank(field, trial);
    if (new_rank > rank) {
      acc = std::move(trial);
      rank = new_rank;
      chosen.push_back(r);
    }
  }
  return chosen;
}

bool RowSpaceContains(const FieldSpec& field, const Matrix& big, const Matrix& small) {
  if (big.cols() != small.cols()) return false;
  Matrix stacked = big;
  for (int r = 0; r < small.rows(); ++r) stacked.append_row(small.row(r));
  return Rank(field, stacked) == Rank(field, big);
}

bool RowSpaceEqual(const FieldSpec& field, const Matrix& a, const Matrix& b) {
  return RowSpaceContains(field, a, b) && RowSpaceContains(field, b, a);
}

std::vector<Elem> VectorTimesMatrix(const FieldSpec& field, std::span<const Elem> v,
                                    const Matrix& m) {
  if (static_cast<int>(v.size()) != m.rows()) {
    throw std::invalid_argument("vector length does not match matrix rows");
  }
  std::vector<Elem> out(m.cols(), 0);
  for (int r = 0; r < m.rows(); ++r) {
    if (v[r] == 0) continue;
    for (int c = 0; c < m.cols(); ++c) out[c] = field.add(out[c], field.mul(v[r], m.at(r, c)));
  }
  return out;
}

}  // namespace ruledcodes
