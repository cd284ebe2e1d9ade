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

#include "ppersist/matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "ppersist/kernels.hpp"

namespace ppersist {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

Matrix::Matrix(int rows, int cols, FieldSpec fs) : rows_(rows), cols_(cols), field_(fs) {
    require(rows >= 0 && cols >= 0, "Matrix: negative dimensions");
    dense_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

Matrix Matrix::identity(int n, FieldSpec fs) {
    Matrix m(n, n, fs);
    for (int i = 0; i < n; ++i) m.set(i, i, Rat(1));
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rat>>& rows, FieldSpec fs) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(r, c, fs);
    for (int i = 0; i < r; ++i) {
        require(static_cast<int>(rows[i].size()) == c, "Matrix: ragged rows");
        for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::from_cols(const std::vector<std::vector<Rat>>& cols, FieldSpec fs) {
    int c = static_cast<int>(cols.size());
    int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
    Matrix m(r, c, fs);
    for (int j = 0; j < c; ++j) {
        require(static_cast<int>(cols[j].size()) == r, "Matrix: ragged columns");
        for (int i = 0; i < r; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
}

Rat Matrix::at(int i, int j) const {
    require(i >= 0 && i < rows_ && j >= 0 && j < cols_, "Matrix::at out of range");
    if (!sparse_) return dense_[static_cast<size_t>(i) * cols_ + j];
    const auto& row = sparse_rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == j) return it->second;
    return Rat(0);
}

void Matrix::set(int i, int j, const Rat& v) {
    require(i >= 0 && i < rows_ && j >= 0 && j < cols_, "Matrix::set out of range");
    Rat nv = FieldOps(field_).normalize(v);
    if (!sparse_) {
        dense_[static_cast<size_t>(i) * cols_ + j] = nv;
        return;
    }
    auto& row = sparse_rows_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& e, int col) { return e.first < col; });
    if (it != row.end() && it->first == j) {
        if (nv == 0)
            row.erase(it);
        else
            it->second = nv;
    } else if (nv != 0) {
        row.insert(it, {j, nv});
    }
}

double Matrix::density() const {
    size_t total = static_cast<size_t>(rows_) * cols_;
    if (total == 0) return 0.0;
    size_t nnz = 0;
    if (sparse_) {
        for (const auto& row : sparse_rows_) nnz += row.size();
    } else {
        for (const auto& v : dense_)
            if (v != 0) ++nnz;
    }
    return static_cast<double>(nnz) / static_cast<double>(total);
}

void Matrix::compact() {
    if (!sparse_ && rows_ > 0 && cols_ > 0 && density() < 0.25) *this = as_sparse();
}

Matrix Matrix::as_sparse() const {
    if (sparse_) return *this;
    Matrix m(rows_, cols_, field_);
    m.sparse_ = true;
    m.dense_.clear();
    m.sparse_rows_.assign(rows_, {});
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Rat& v = dense_[static_cast<size_t>(i) * cols_ + j];
            if (v != 0) m.sparse_rows_[i].push_back({j, v});
        }
    return m;
}

Matrix Matrix::as_dense() const {
    if (!sparse_) return *this;
    Matrix m(rows_, cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : sparse_rows_[i]) m.dense_[static_cast<size_t>(i) * cols_ + j] = v;
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != o.at(i, j)) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

Matrix Matrix::mul(const Matrix& rhs) const {
    require(cols_ == rhs.rows_, "Matrix::mul: shape mismatch");
    require(field_ == rhs.field_, "Matrix::mul: field mismatch");
    FieldOps ops(field_);
    Matrix out(rows_, rhs.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            Rat a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                Rat b = rhs.at(k, j);
                if (b == 0) continue;
                out.set(i, j, ops.add(out.at(i, j), ops.mul(a, b)));
            }
        }
    return out;
}

Matrix Matrix::add(const Matrix& rhs) const {
    require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "Matrix::add: shape mismatch");
    require(field_ == rhs.field_, "Matrix::add: field mismatch");
    FieldOps ops(field_);
    Matrix out(rows_, cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, ops.add(at(i, j), rhs.at(i, j)));
    return out;
}

Matrix Matrix::sub(const Matrix& rhs) const {
    FieldOps ops(field_);
    return add(rhs.scaled(ops.normalize(Rat(-1))));
}

Matrix Matrix::scaled(const Rat& c) const {
    FieldOps ops(field_);
    Matrix out(rows_, cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, ops.mul(at(i, j), c));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
    return out;
}

Matrix Matrix::kronecker(const Matrix& rhs) const {
    require(field_ == rhs.field_, "Matrix::kronecker: field mismatch");
    FieldOps ops(field_);
    Matrix out(rows_ * rhs.rows_, cols_ * rhs.cols_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            Rat a = at(i, j);
            if (a == 0) continue;
            for (int k = 0; k < rhs.rows_; ++k)
                for (int l = 0; l < rhs.cols_; ++l) {
                    Rat b = rhs.at(k, l);
                    if (b == 0) continue;
                    out.set(i * rhs.rows_ + k, j * rhs.cols_ + l, ops.mul(a, b));
                }
        }
    return out;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.field_ == b.field_, "Matrix::hstack: mismatch");
    Matrix out(a.rows_, a.cols_ + b.cols_, a.field_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) out.set(i, j, a.at(i, j));
        for (int j = 0; j < b.cols_; ++j) out.set(i, a.cols_ + j, b.at(i, j));
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.cols_ && a.field_ == b.field_, "Matrix::vstack: mismatch");
    Matrix out(a.rows_ + b.rows_, a.cols_, a.field_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) out.set(i, j, a.at(i, j));
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) out.set(a.rows_ + i, j, b.at(i, j));
    return out;
}

Matrix Matrix::columns(const std::vector<int>& idx) const {
    Matrix out(rows_, static_cast<int>(idx.size()), field_);
    for (size_t j = 0; j < idx.size(); ++j)
        for (int i = 0; i < rows_; ++i) out.set(i, static_cast<int>(j), at(i, idx[j]));
    return out;
}

std::vector<Rat> Matrix::col_vec(int j) const {
    std::vector<Rat> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

std::vector<Rat> Matrix::apply(const std::vector<Rat>& x) const {
    require(static_cast<int>(x.size()) == cols_, "Matrix::apply: shape mismatch");
    FieldOps ops(field_);
    std::vector<Rat> out(rows_, Rat(0));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            Rat a = at(i, j);
            if (a != 0 && x[j] != 0) out[i] = ops.add(out[i], ops.mul(a, x[j]));
        }
    return out;
}

// ---------------------------------------------------------------------------
// rank

int Matrix::rank_rational_bareiss() const {
    // Clear denominators row-wise, then fraction-free elimination. The
    // division by the previous pivot is exact (Sylvester identity); this is
    // asserted because a silent truncation would corrupt every rank above.
    std::vector<std::vector<Int>> m(rows_);
    for (int i = 0; i < rows_; ++i) {
        Int lcm = 1;
        for (int j = 0; j < cols_; ++j) {
            Int den = boost::multiprecision::denominator(at(i, j));
            lcm = boost::multiprecision::lcm(lcm, den);
        }
        m[i].resize(cols_);
        for (int j = 0; j < cols_; ++j) {
            Rat v = at(i, j);
            m[i][j] = boost::multiprecision::numerator(v) *
                      (lcm / boost::multiprecision::denominator(v));
        }
    }

    auto nnz = [&](int i) {
        int c = 0;
        for (const Int& v : m[i])
            if (v != 0) ++c;
        return c;
    };

    int r = 0;
    Int prev = 1;
    for (int col = 0; col < cols_ && r < rows_; ++col) {
        int pivot = -1, best = -1;
        for (int i = r; i < rows_; ++i) {
            if (m[i][col] == 0) continue;
            int c = nnz(i);
            if (pivot < 0 || c < best) {
                pivot = i;
                best = c;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[r]);
        for (int i = r + 1; i < rows_; ++i) {
            for (int j = col + 1; j < cols_; ++j) {
                Int num = m[r][col] * m[i][j] - m[i][col] * m[r][j];
                Int q, rem;
                boost::multiprecision::divide_qr(num, prev, q, rem);
                if (rem != 0) throw std::logic_error("bareiss: inexact division");
                m[i][j] = q;
            }
            m[i][col] = 0;
        }
        prev = m[r][col];
        ++r;
    }
    return r;
}

int Matrix::rank_mod_dense() const {
    uint32_t p = field_.modulus;
    const auto& kn = kernels::select(p);
    std::vector<std::vector<uint32_t>> m(rows_, std::vector<uint32_t>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            m[i][j] = static_cast<uint32_t>(boost::multiprecision::numerator(at(i, j)));

    int r = 0;
    for (int col = 0; col < cols_ && r < rows_; ++col) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i)
            if (m[i][col] % p != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[r]);
        uint32_t inv = inverse_mod(m[r][col], p);
        kn.scale_mod(m[r].data() + col, inv, cols_ - col, p);
        for (int i = r + 1; i < rows_; ++i) {
            uint32_t c = m[i][col];
            if (c == 0) continue;
            kn.submul_mod(m[i].data() + col, m[r].data() + col, c, cols_ - col, p);
        }
        ++r;
    }
    return r;
}

int Matrix::rank_mod_sparse() const {
    uint32_t p = field_.modulus;
    using Row = std::vector<std::pair<int, uint32_t>>;
    std::vector<Row> rows;
    rows.reserve(rows_);
    for (int i = 0; i < rows_; ++i) {
        Row row;
        if (sparse_) {
            for (const auto& [j, v] : sparse_rows_[i])
                row.push_back({j, static_cast<uint32_t>(boost::multiprecision::numerator(v))});
        } else {
            for (int j = 0; j < cols_; ++j) {
                Rat v = at(i, j);
                if (v != 0)
                    row.push_back({j, static_cast<uint32_t>(boost::multiprecision::numerator(v))});
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }

    auto axpy_sparse = [&](const Row& a, const Row& b, uint32_t c) {
        // a - c*b, merged by column
        Row out;
        out.reserve(a.size() + b.size());
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
                out.push_back(a[i++]);
            } else if (i >= a.size() || b[j].first < a[i].first) {
                uint64_t v = p - static_cast<uint64_t>(c) * b[j].second % p;
                if (v == p) v = 0;
                if (v != 0) out.push_back({b[j].first, static_cast<uint32_t>(v)});
                ++j;
            } else {
                uint64_t v =
                    (a[i].second + p - static_cast<uint64_t>(c) * b[j].second % p) % p;
                if (v != 0) out.push_back({a[i].first, static_cast<uint32_t>(v)});
                ++i;
                ++j;
            }
        }
        return out;
    };

    int rank = 0;
    while (!rows.empty()) {
        int lead = cols_;
        for (const auto& row : rows) lead = std::min(lead, row.front().first);
        int pivot = -1;
        size_t best = 0;
        for (size_t i = 0; i < rows.size(); ++i)
            if (rows[i].front().first == lead && (pivot < 0 || rows[i].size() < best)) {
                pivot = static_cast<int>(i);
                best = rows[i].size();
            }
        Row prow = std::move(rows[pivot]);
        rows.erase(rows.begin() + pivot);
        ++rank;
        uint32_t pinv = inverse_mod(prow.front().second, p);
        std::vector<Row> next;
        next.reserve(rows.size());
        for (auto& row : rows) {
            if (row.front().first == lead) {
                uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(row.front().second) *
                                                   pinv % p);
                Row reduced = axpy_sparse(row, prow, c);
                if (!reduced.empty()) next.push_back(std::move(reduced));
            } else {
                next.push_back(std::move(row));
            }
        }
        rows = std::move(next);
    }
    return rank;
}

int Matrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    if (field_.kind == FieldKind::Rationals) return rank_rational_bareiss();
    return sparse_ ? rank_mod_sparse() : rank_mod_dense();
}

// ---------------------------------------------------------------------------
// rref and everything built on it

Matrix Matrix::rref(std::vector<int>* pivots) const {
    FieldOps ops(field_);
    std::vector<std::vector<Rat>> m(rows_, std::vector<Rat>(cols_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j);

    int r = 0;
    for (int col = 0; col < cols_ && r < rows_; ++col) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[r]);
        Rat inv = ops.inv(m[r][col]);
        for (int j = col; j < cols_; ++j) m[r][j] = ops.mul(m[r][j], inv);
        for (int i = 0; i < rows_; ++i) {
            if (i == r || m[i][col] == 0) continue;
            Rat c = m[i][col];
            for (int j = col; j < cols_; ++j)
                m[i][j] = ops.sub(m[i][j], ops.mul(c, m[r][j]));
        }
        if (pivots) pivots->push_back(col);
        ++r;
    }
    return Matrix::from_rows(m, field_);
}

Matrix Matrix::image_basis() const {
    std::vector<int> pivots;
    rref(&pivots);
    return columns(pivots);
}

Matrix Matrix::nullspace_basis() const {
    std::vector<int> pivots;
    Matrix r = rref(&pivots);
    FieldOps ops(field_);
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rat>> basis;
    for (int j = 0; j < cols_; ++j) {
        if (is_pivot[j]) continue;
        std::vector<Rat> v(cols_, Rat(0));
        v[j] = Rat(1);
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = ops.neg(r.at(static_cast<int>(k), j));
        basis.push_back(std::move(v));
    }
    return Matrix::from_cols(basis, field_);
}

std::optional<std::vector<Rat>> Matrix::solve(const std::vector<Rat>& b) const {
    require(static_cast<int>(b.size()) == rows_, "Matrix::solve: shape mismatch");
    Matrix aug = hstack(*this, Matrix::from_cols({b}, field_));
    std::vector<int> pivots;
    Matrix r = aug.rref(&pivots);
    for (int c : pivots)
        if (c == cols_) return std::nullopt;
    std::vector<Rat> x(cols_, Rat(0));
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = r.at(static_cast<int>(k), cols_);
    return x;
}

std::optional<Matrix> Matrix::solve_matrix(const Matrix& b) const {
    require(b.rows() == rows_, "Matrix::solve_matrix: shape mismatch");
    Matrix out(cols_, b.cols(), field_);
    for (int j = 0; j < b.cols(); ++j) {
        auto x = solve(b.col_vec(j));
        if (!x) return std::nullopt;
        for (int i = 0; i < cols_; ++i) out.set(i, j, (*x)[i]);
    }
    return out;
}

LinearSolver::LinearSolver(const Matrix& a)
    : rows_(a.rows()), cols_(a.cols()), field_(a.field()), transform_(0, 0, a.field()) {
    Matrix aug = Matrix::hstack(a, Matrix::identity(rows_, field_));
    // row-reduce, pivoting only within the first cols_ columns
    FieldOps ops(field_);
    std::vector<std::vector<Rat>> m(rows_, std::vector<Rat>(aug.cols()));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < aug.cols(); ++j) m[i][j] = aug.at(i, j);
    int r = 0;
    for (int col = 0; col < cols_ && r < rows_; ++col) {
        int pivot = -1;
        for (int i = r; i < rows_; ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[pivot], m[r]);
        Rat inv = ops.inv(m[r][col]);
        for (int j = 0; j < aug.cols(); ++j) m[r][j] = ops.mul(m[r][j], inv);
        for (int i = 0; i < rows_; ++i) {
            if (i == r || m[i][col] == 0) continue;
            Rat c = m[i][col];
            for (int j = 0; j < aug.cols(); ++j) m[i][j] = ops.sub(m[i][j], ops.mul(c, m[r][j]));
        }
        pivots_.push_back(col);
        ++r;
    }
    transform_ = Matrix(rows_, rows_, field_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j) transform_.set(i, j, m[i][cols_ + j]);
}

std::optional<std::vector<Rat>> LinearSolver::solve(const std::vector<Rat>& b) const {
    if (static_cast<int>(b.size()) != rows_)
        throw std::invalid_argument("LinearSolver::solve: shape mismatch");
    std::vector<Rat> y = transform_.apply(b);
    for (int i = rank(); i < rows_; ++i)
        if (y[i] != 0) return std::nullopt;
    std::vector<Rat> x(cols_, Rat(0));
    for (int i = 0; i < rank(); ++i) x[pivots_[i]] = y[i];
    return x;
}

std::optional<Matrix> LinearSolver::solve_matrix(const Matrix& b) const {
    if (b.rows() != rows_) throw std::invalid_argument("LinearSolver: shape mismatch");
    Matrix out(cols_, b.cols(), field_);
    for (int j = 0; j < b.cols(); ++j) {
        auto x = solve(b.col_vec(j));
        if (!x) return std::nullopt;
        for (int i = 0; i < cols_; ++i) out.set(i, j, (*x)[i]);
    }
    return out;
}

ColumnReduction Matrix::column_reduce() const {
    FieldOps ops(field_);
    std::vector<std::vector<Rat>> r(cols_);  // columns
    for (int j = 0; j < cols_; ++j) r[j] = col_vec(j);
    std::vector<std::vector<Rat>> v(cols_, std::vector<Rat>(cols_, Rat(0)));
    for (int j = 0; j < cols_; ++j) v[j][j] = Rat(1);

    auto low = [&](int j) {
        for (int i = rows_ - 1; i >= 0; --i)
            if (r[j][i] != 0) return i;
        return -1;
    };

    std::vector<int> owner(rows_ + 1, -1);  // owner[low] = column
    for (int j = 0; j < cols_; ++j) {
        int l = low(j);
        while (l >= 0 && owner[l] >= 0) {
            int k = owner[l];
            Rat c = ops.div(r[j][l], r[k][l]);
            for (int i = 0; i <= l; ++i)
                if (r[k][i] != 0) r[j][i] = ops.sub(r[j][i], ops.mul(c, r[k][i]));
            for (int i = 0; i < cols_; ++i)
                if (v[k][i] != 0) v[j][i] = ops.sub(v[j][i], ops.mul(c, v[k][i]));
            l = low(j);
        }
        if (l >= 0) owner[l] = j;
    }

    ColumnReduction out{Matrix(rows_, cols_, field_), Matrix(cols_, cols_, field_)};
    for (int j = 0; j < cols_; ++j) {
        for (int i = 0; i < rows_; ++i)
            if (r[j][i] != 0) out.r.set(i, j, r[j][i]);
        for (int i = 0; i < cols_; ++i)
            if (v[j][i] != 0) out.v.set(i, j, v[j][i]);
    }
    return out;
}

}  // namespace ppersist
