#include "eulercat/qmat.hpp"

#include <algorithm>
#include <sstream>

namespace eulercat {

QMat::QMat(std::vector<std::string> row_labels, std::vector<std::string> col_labels)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      data_(row_labels_.size() * col_labels_.size()) {}

QMat QMat::from_rows(std::vector<std::string> labels,
                     std::initializer_list<std::initializer_list<long>> rows) {
    QMat m(labels, labels);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = Rat(v);
        ++i;
    }
    return m;
}

QMat QMat::identity(std::vector<std::string> labels) {
    QMat m(labels, labels);
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = Rat(1);
    return m;
}

std::optional<std::size_t> QMat::row_index(std::string_view label) const {
    auto it = std::find(row_labels_.begin(), row_labels_.end(), label);
    if (it == row_labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - row_labels_.begin());
}

std::optional<std::size_t> QMat::col_index(std::string_view label) const {
    auto it = std::find(col_labels_.begin(), col_labels_.end(), label);
    if (it == col_labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - col_labels_.begin());
}

const Rat& QMat::entry(std::string_view row, std::string_view col) const {
    auto i = row_index(row);
    auto j = col_index(col);
    if (!i || !j)
        throw InputError("UNKNOWN_LABEL",
                         "no matrix entry (" + std::string(row) + ", " + std::string(col) + ")");
    return at(*i, *j);
}

QMat QMat::transpose() const {
    QMat t(col_labels_, row_labels_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) t.at(j, i) = at(i, j);
    return t;
}

QMat QMat::operator*(const QMat& rhs) const {
    if (cols() != rhs.rows())
        throw InputError("SHAPE_MISMATCH", "matrix product shape mismatch");
    QMat r(row_labels_, rhs.col_labels_);
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t k = 0; k < cols(); ++k) {
            const Rat& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols(); ++j) {
                if (rhs.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * rhs.at(k, j);
            }
        }
    return r;
}

QMat QMat::operator+(const QMat& rhs) const {
    if (rows() != rhs.rows() || cols() != rhs.cols())
        throw InputError("SHAPE_MISMATCH", "matrix sum shape mismatch");
    QMat r(row_labels_, col_labels_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + rhs.data_[i];
    return r;
}

QMat QMat::operator-(const QMat& rhs) const {
    if (rows() != rhs.rows() || cols() != rhs.cols())
        throw InputError("SHAPE_MISMATCH", "matrix difference shape mismatch");
    QMat r(row_labels_, col_labels_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - rhs.data_[i];
    return r;
}

bool QMat::same_entries(const QMat& rhs) const {
    return rows() == rhs.rows() && cols() == rhs.cols() && data_ == rhs.data_;
}

bool QMat::is_identity() const {
    if (rows() != cols()) return false;
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j)
            if (at(i, j) != Rat(i == j ? 1 : 0)) return false;
    return true;
}

bool QMat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rat& r) { return r.is_zero(); });
}

Rat QMat::entry_sum() const {
    Rat s;
    for (const Rat& r : data_) s += r;
    return s;
}

std::vector<Rat> QMat::row_sums() const {
    std::vector<Rat> s(rows());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) s[i] += at(i, j);
    return s;
}

std::vector<Rat> QMat::col_sums() const {
    std::vector<Rat> s(cols());
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) s[j] += at(i, j);
    return s;
}

std::string QMat::to_text() const {
    std::ostringstream out;
    out << "rows:";
    for (std::size_t i = 0; i < rows(); ++i) out << (i ? "," : " ") << row_labels_[i];
    out << "\ncols:";
    for (std::size_t j = 0; j < cols(); ++j) out << (j ? "," : " ") << col_labels_[j];
    out << '\n';
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < cols(); ++j) out << (j ? " " : "") << at(i, j).str();
        out << '\n';
    }
    return out.str();
}

namespace {

// Row-reduces `m` in place to reduced row echelon form with first-nonzero
// pivoting. Returns the pivot column of each pivot row, in order.
std::vector<std::size_t> rref(std::vector<std::vector<Rat>>& m) {
    std::vector<std::size_t> pivot_cols;
    if (m.empty()) return pivot_cols;
    const std::size_t nrows = m.size(), ncols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < nrows; ++col) {
        std::size_t pr = row;
        while (pr < nrows && m[pr][col].is_zero()) ++pr;
        if (pr == nrows) continue;
        std::swap(m[row], m[pr]);
        const Rat inv = Rat(1) / m[row][col];
        for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            const Rat factor = m[i][col];
            for (std::size_t j = col; j < ncols; ++j) m[i][j] -= factor * m[row][j];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

}  // namespace

std::size_t QMat::rank() const {
    std::vector<std::vector<Rat>> m(rows(), std::vector<Rat>(cols()));
    for (std::size_t i = 0; i < rows(); ++i)
        for (std::size_t j = 0; j < cols(); ++j) m[i][j] = at(i, j);
    return rref(m).size();
}

std::optional<QMat> QMat::inverse() const {
    if (rows() != cols()) return std::nullopt;
    const std::size_t n = rows();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = at(i, j);
        m[i][n + i] = Rat(1);
    }
    std::vector<std::size_t> pivots = rref(m);
    // [A|I] always has rank n; A is invertible exactly when no pivot falls in
    // the identity block.
    if (!pivots.empty() && pivots.back() >= n) return std::nullopt;
    if (pivots.size() != n) return std::nullopt;
    // Inverse of the (a,b)-indexed matrix is (b,a)-indexed in spirit, but the
    // incidence-algebra convention keeps the same object order on both sides.
    QMat inv(row_labels_, col_labels_);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = m[i][n + j];
    return inv;
}

AffineSolutionSet solve_affine(const QMat& a, std::span<const Rat> b) {
    if (b.size() != a.rows())
        throw InputError("SHAPE_MISMATCH", "right-hand side length does not match row count");
    const std::size_t nrows = a.rows(), ncols = a.cols();
    std::vector<std::vector<Rat>> m(nrows, std::vector<Rat>(ncols + 1));
    for (std::size_t i = 0; i < nrows; ++i) {
        for (std::size_t j = 0; j < ncols; ++j) m[i][j] = a.at(i, j);
        m[i][ncols] = b[i];
    }
    const std::vector<std::size_t> pivots = rref(m);

    AffineSolutionSet sol;
    sol.labels = a.col_labels();
    if (!pivots.empty() && pivots.back() == ncols) {
        sol.kind = AffineSolutionSet::Kind::None;  // pivot in the b column
        return sol;
    }
    std::vector<bool> is_pivot_col(ncols, false);
    for (std::size_t c : pivots) is_pivot_col[c] = true;

    sol.particular.assign(ncols, Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) sol.particular[pivots[r]] = m[r][ncols];

    for (std::size_t c = 0; c < ncols; ++c) {
        if (is_pivot_col[c]) continue;
        std::vector<Rat> basis(ncols, Rat(0));
        basis[c] = Rat(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) basis[pivots[r]] = -m[r][c];
        sol.nullspace.push_back(std::move(basis));
    }
    sol.kind = sol.nullspace.empty() ? AffineSolutionSet::Kind::Unique
                                     : AffineSolutionSet::Kind::Family;
    return sol;
}

}  // namespace eulercat
