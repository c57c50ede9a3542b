#include "pend/linsolve.hpp"

namespace pend {

std::vector<int> rref(SMatrix& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Scalar inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

int rank(SMatrix m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Scalar>> kernel_basis(const SMatrix& m0) {
    SMatrix m = m0;
    if (m.empty()) return {};
    size_t cols = m[0].size();
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[fc] = Scalar(1);
        for (size_t pi = 0; pi < pivots.size(); ++pi) {
            // row pi has pivot at pivots[pi]
            v[pivots[pi]] = -m[pi][fc];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace pend
