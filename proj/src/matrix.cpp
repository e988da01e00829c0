#include "kz/matrix.hpp"

namespace kz {

PolyMatrix PolyMatrix::transposed() const {
    PolyMatrix t(ring_, cols_, rows_);
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

VecElem PolyMatrix::col_vec(size_t c) const {
    ModOrder o{ring_->order, false};
    std::vector<Polynomial> comps;
    comps.reserve(rows_);
    for (size_t r = 0; r < rows_; ++r) comps.push_back(at(r, c));
    if (comps.empty()) return VecElem(ring_, 0);
    return VecElem::from_vector(comps, o);
}

std::vector<VecElem> PolyMatrix::columns() const {
    std::vector<VecElem> out;
    out.reserve(cols_);
    for (size_t c = 0; c < cols_; ++c) out.push_back(col_vec(c));
    return out;
}

PolyMatrix PolyMatrix::from_columns(const RingPtr& ring, size_t rows,
                                    const std::vector<VecElem>& cols) {
    PolyMatrix m(ring, rows, cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].rank != rows) throw InputError("from_columns: rank mismatch");
        auto comps = cols[c].to_vector();
        for (size_t r = 0; r < rows; ++r) m.at(r, c) = comps[r];
    }
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& f : a_)
        if (!f.is_zero()) return false;
    return true;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw InputError("matrix multiply: shape mismatch");
    PolyMatrix out(a.ring(), a.rows(), b.cols());
    for (size_t r = 0; r < a.rows(); ++r)
        for (size_t c = 0; c < b.cols(); ++c) {
            Polynomial acc(a.ring());
            for (size_t k = 0; k < a.cols(); ++k) acc = acc + a.at(r, k) * b.at(k, c);
            out.at(r, c) = acc;
        }
    return out;
}

} // namespace kz
