/* Copyright (c) 2026 The ppersist Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License. */

#ifndef PPERSIST_MATRIX_HPP
#define PPERSIST_MATRIX_HPP

#include <optional>
#include <utility>
#include <vector>

#include "ppersist/field.hpp"

namespace ppersist {

class Matrix;

/// Result of left-to-right column reduction: A * v = r with v invertible
/// upper triangular and nonzero columns of r having pairwise distinct
/// lowest nonzero rows.
struct ColumnReduction;

/// Exact matrix over Q or Z/p. Entries are canonical Rat values (residues
/// in [0,p) for prime fields). Storage is dense row-major or sparse
/// per-row; compact() switches to sparse below 25% fill. Both storages
/// produce identical results everywhere.
///
/// Rank reduction follows the field: fraction-free elimination with
/// sparsity-based pivoting over Q, plain elimination through the runtime-
/// dispatched Z/p row kernels otherwise. Values are immutable once built
/// (set() is a construction helper) and safe to share across threads.
class Matrix {
  public:
    Matrix() : Matrix(0, 0, FieldSpec::rationals()) {}
    Matrix(int rows, int cols, FieldSpec fs);

    static Matrix zero(int rows, int cols, FieldSpec fs) { return Matrix(rows, cols, fs); }
    static Matrix identity(int n, FieldSpec fs);
    static Matrix from_rows(const std::vector<std::vector<Rat>>& rows, FieldSpec fs);
    static Matrix from_cols(const std::vector<std::vector<Rat>>& cols, FieldSpec fs);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }
    bool is_sparse() const { return sparse_; }

    Rat at(int i, int j) const;
    void set(int i, int j, const Rat& v);

    double density() const;
    void compact();
    Matrix as_sparse() const;
    Matrix as_dense() const;

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;

    Matrix mul(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const { return mul(rhs); }
    Matrix add(const Matrix& rhs) const;
    Matrix sub(const Matrix& rhs) const;
    Matrix scaled(const Rat& c) const;
    Matrix transpose() const;
    Matrix kronecker(const Matrix& rhs) const;
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    Matrix columns(const std::vector<int>& idx) const;
    std::vector<Rat> col_vec(int j) const;
    std::vector<Rat> apply(const std::vector<Rat>& v) const;  // A * v

    int rank() const;

    /// Reduced row echelon form (unique); pivot column indices appended to
    /// *pivots when given.
    Matrix rref(std::vector<int>* pivots = nullptr) const;

    /// Columns of the original matrix at the pivot positions: independent,
    /// spanning the column space, rank() many.
    Matrix image_basis() const;

    /// Kernel basis, one column per free variable, ascending.
    Matrix nullspace_basis() const;

    /// Particular solution of A x = b with free variables zero, or nullopt.
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

    /// Solves A X = B column-wise; nullopt if any column is inconsistent.
    std::optional<Matrix> solve_matrix(const Matrix& b) const;

    /// The workhorse of barcode extraction; see ColumnReduction.
    ColumnReduction column_reduce() const;

  private:
    int rows_, cols_;
    FieldSpec field_;
    bool sparse_ = false;
    std::vector<Rat> dense_;                                  // row-major
    std::vector<std::vector<std::pair<int, Rat>>> sparse_rows_;  // sorted by column

    int rank_rational_bareiss() const;
    int rank_mod_dense() const;
    int rank_mod_sparse() const;
};

struct ColumnReduction {
    Matrix r;
    Matrix v;
};

/// Factorizes A once (reduced row echelon with a recorded row transform)
/// and then answers A x = b queries in quadratic time. Solutions put free
/// variables at zero, matching Matrix::solve.
class LinearSolver {
  public:
    explicit LinearSolver(const Matrix& a);

    int rank() const { return static_cast<int>(pivots_.size()); }
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;
    std::optional<Matrix> solve_matrix(const Matrix& b) const;

  private:
    int rows_, cols_;
    FieldSpec field_;
    std::vector<int> pivots_;
    Matrix transform_;  // E with E A in reduced row echelon form
};

}  // namespace ppersist

#endif
