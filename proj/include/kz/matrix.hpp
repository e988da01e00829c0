#pragma once

#include <vector>

#include "kz/vecpoly.hpp"

namespace kz {

/// Dense matrix of polynomials, row-major. Columns are the natural relation
/// vectors for cokernel presentations; rows serialize through the CLI.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(RingPtr ring, size_t rows, size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols),
          a_(rows * cols, Polynomial(ring_)) {}

    const RingPtr& ring() const { return ring_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Polynomial& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Polynomial& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    PolyMatrix transposed() const;

    VecElem col_vec(size_t c) const; // column as element of P^rows
    std::vector<VecElem> columns() const;
    static PolyMatrix from_columns(const RingPtr& ring, size_t rows,
                                   const std::vector<VecElem>& cols);

    bool is_zero() const;

private:
    RingPtr ring_;
    size_t rows_ = 0, cols_ = 0;
    std::vector<Polynomial> a_;
};

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

} // namespace kz
