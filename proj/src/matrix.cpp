#include "codekit/matrix.hpp"

#include <stdexcept>

namespace codekit {

MatrixGF MatrixGF::identity(FieldPtr field, std::size_t n) {
    MatrixGF m(std::move(field), n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RrefResult rref(const MatrixGF& m) {
    const FiniteField& f = *m.field();
    MatrixGF r = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        std::size_t piv = row;
        while (piv < r.rows() && r.at(piv, col) == 0)
            ++piv;
        if (piv == r.rows())
            continue;
        if (piv != row)
            for (std::size_t c = 0; c < r.cols(); ++c)
                std::swap(r.at(row, c), r.at(piv, c));
        Elem scale = f.inv(r.at(row, col));
        if (scale != 1)
            for (std::size_t c = col; c < r.cols(); ++c)
                r.at(row, c) = f.mul(r.at(row, c), scale);
        for (std::size_t rr = 0; rr < r.rows(); ++rr) {
            if (rr == row)
                continue;
            Elem factor = r.at(rr, col);
            if (factor == 0)
                continue;
            for (std::size_t c = col; c < r.cols(); ++c)
                r.at(rr, c) = f.sub(r.at(rr, c), f.mul(factor, r.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), row, std::move(pivots)};
}

MatrixGF kernel_basis(const MatrixGF& m) {
    auto rr = rref(m);
    std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : rr.pivots)
        is_pivot[p] = true;

    const FiniteField& f = *m.field();
    MatrixGF basis(m.field(), n - rr.rank, n);
    std::size_t out = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free])
            continue;
        basis.at(out, free) = 1;
        for (std::size_t i = 0; i < rr.rank; ++i)
            basis.at(out, rr.pivots[i]) = f.neg(rr.mat.at(i, free));
        ++out;
    }
    return rref(basis).mat;
}

MatrixGF mat_mul(const MatrixGF& a, const MatrixGF& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix dimension mismatch");
    const FiniteField& f = *a.field();
    MatrixGF c(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            Elem aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
        }
    return c;
}

MatrixGF transpose(const MatrixGF& m) {
    MatrixGF t(m.field(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            t.at(j, i) = m.at(i, j);
    return t;
}

std::optional<MatrixGF> inverse(const MatrixGF& m) {
    if (m.rows() != m.cols())
        return std::nullopt;
    std::size_t n = m.rows();
    MatrixGF aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] >= n)
        return std::nullopt;
    MatrixGF inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv.at(i, j) = rr.mat.at(i, n + j);
    return inv;
}

bool in_row_space(const MatrixGF& rref_mat,
                  const std::vector<std::size_t>& pivots,
                  std::vector<Elem> v) {
    const FiniteField& f = *rref_mat.field();
    if (v.size() != rref_mat.cols())
        throw std::invalid_argument("vector length mismatch");
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        Elem c = v[pivots[i]];
        if (c == 0)
            continue;
        for (std::size_t j = 0; j < v.size(); ++j)
            v[j] = f.sub(v[j], f.mul(c, rref_mat.at(i, j)));
    }
    for (Elem x : v)
        if (x != 0)
            return false;
    return true;
}

} // namespace codekit
