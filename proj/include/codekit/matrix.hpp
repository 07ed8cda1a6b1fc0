#ifndef CODEKIT_MATRIX_HPP
#define CODEKIT_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "codekit/field.hpp"

namespace codekit {

// Dense row-major matrix over a finite field.
class MatrixGF {
  public:
    MatrixGF(FieldPtr field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols),
          a_(rows * cols, 0) {}

    const FieldPtr& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    const Elem* row(std::size_t r) const { return a_.data() + r * cols_; }
    Elem* row(std::size_t r) { return a_.data() + r * cols_; }

    static MatrixGF identity(FieldPtr field, std::size_t n);

    bool operator==(const MatrixGF& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ &&
               field_->order() == o.field_->order() &&
               field_->characteristic() == o.field_->characteristic() &&
               a_ == o.a_;
    }
    bool operator!=(const MatrixGF& o) const { return !(*this == o); }

  private:
    FieldPtr field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

struct RrefResult {
    MatrixGF mat;
    std::size_t rank;
    std::vector<std::size_t> pivots;
};

RrefResult rref(const MatrixGF& m);

// Rows form a canonical (RREF) basis of the right null space {x : M x^T = 0}.
MatrixGF kernel_basis(const MatrixGF& m);

MatrixGF mat_mul(const MatrixGF& a, const MatrixGF& b);
MatrixGF transpose(const MatrixGF& m);
std::optional<MatrixGF> inverse(const MatrixGF& m);

// Reduces v against an RREF matrix; true iff v lies in its row space.
bool in_row_space(const MatrixGF& rref_mat,
                  const std::vector<std::size_t>& pivots,
                  std::vector<Elem> v);

} // namespace codekit

#endif
