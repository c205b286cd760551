#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eulercat/rational.hpp"

namespace eulercat {

// Dense matrix of exact rationals with named row/column indices. The label
// order is the matrix indexing; all operations preserve it.
class QMat {
public:
    QMat() = default;
    QMat(std::vector<std::string> row_labels, std::vector<std::string> col_labels);
    // Square matrix from integer entries, same labels on both sides.
    static QMat from_rows(std::vector<std::string> labels,
                          std::initializer_list<std::initializer_list<long>> rows);
    static QMat identity(std::vector<std::string> labels);

    std::size_t rows() const { return row_labels_.size(); }
    std::size_t cols() const { return col_labels_.size(); }
    Rat& at(std::size_t i, std::size_t j) { return data_[i * cols() + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return data_[i * cols() + j]; }

    const std::vector<std::string>& row_labels() const { return row_labels_; }
    const std::vector<std::string>& col_labels() const { return col_labels_; }
    std::optional<std::size_t> row_index(std::string_view label) const;
    std::optional<std::size_t> col_index(std::string_view label) const;
    // Entry by labels; throws InputError on an unknown label.
    const Rat& entry(std::string_view row, std::string_view col) const;

    QMat transpose() const;
    QMat operator*(const QMat& rhs) const;
    QMat operator+(const QMat& rhs) const;
    QMat operator-(const QMat& rhs) const;
    bool operator==(const QMat& rhs) const = default;
    // Entry-wise comparison ignoring labels (for comparisons up to canonical
    // reindexing, where position is the correspondence).
    bool same_entries(const QMat& rhs) const;

    bool is_identity() const;
    bool is_zero() const;
    Rat entry_sum() const;
    std::vector<Rat> row_sums() const;
    std::vector<Rat> col_sums() const;

    // Plain-text rendering: label header lines, then row-major entries.
    std::string to_text() const;

    std::size_t rank() const;
    // Exact inverse, or nullopt when singular.
    std::optional<QMat> inverse() const;

private:
    std::vector<std::string> row_labels_, col_labels_;
    std::vector<Rat> data_;
};

// Outcome of solving A x = b over the rationals: no solution, a unique one,
// or an affine family (particular solution plus a kernel basis).
struct AffineSolutionSet {
    enum class Kind { None, Unique, Family };
    Kind kind = Kind::None;
    std::vector<std::string> labels;          // variable names = column labels of A
    std::vector<Rat> particular;              // empty when kind == None
    std::vector<std::vector<Rat>> nullspace;  // basis of ker A; empty unless Family
};

// Exact Gauss-Jordan with first-nonzero pivoting.
AffineSolutionSet solve_affine(const QMat& a, std::span<const Rat> b);

}  // namespace eulercat
