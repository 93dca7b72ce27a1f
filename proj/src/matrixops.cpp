#include "germlab/matrixops.hpp"

#include "germlab/errors.hpp"

namespace germlab {

PolyMatrix jacobian_matrix(const std::vector<Poly>& funcs, const std::vector<int>& vars) {
    PolyMatrix m;
    m.reserve(funcs.size());
    for (const auto& f : funcs) {
        std::vector<Poly> row;
        row.reserve(vars.size());
        for (int v : vars)
            row.push_back(f.derivative(v));
        m.push_back(std::move(row));
    }
    return m;
}

namespace {

// Cofactor expansion along the first row of the submatrix given by `rows` x
// `cols` (index lists into m).
Poly det_rec(const PolyMatrix& m, const std::vector<int>& rows, std::vector<int>& cols, size_t row_at) {
    const RingPtr& ring = m[0][0].ring();
    if (cols.size() == 1)
        return m[static_cast<size_t>(rows[row_at])][static_cast<size_t>(cols[0])];
    Poly acc = Poly::zero(ring);
    for (size_t j = 0; j < cols.size(); ++j) {
        const Poly& pivot = m[static_cast<size_t>(rows[row_at])][static_cast<size_t>(cols[j])];
        if (pivot.is_zero())
            continue;
        int col = cols[j];
        cols.erase(cols.begin() + static_cast<long>(j));
        Poly sub = det_rec(m, rows, cols, row_at + 1);
        cols.insert(cols.begin() + static_cast<long>(j), col);
        Poly contrib = pivot * sub;
        acc = (j % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return acc;
}

} // namespace

Poly determinant(const PolyMatrix& m) {
    if (m.empty() || m.size() != m[0].size())
        throw InputError("determinant of a non-square matrix");
    std::vector<int> rows, cols;
    for (size_t i = 0; i < m.size(); ++i) {
        rows.push_back(static_cast<int>(i));
        cols.push_back(static_cast<int>(i));
    }
    return det_rec(m, rows, cols, 0);
}

std::vector<Poly> minors_ideal(const PolyMatrix& m, int k) {
    if (m.empty())
        throw InputError("minors of an empty matrix");
    int nrows = static_cast<int>(m.size());
    int ncols = static_cast<int>(m[0].size());
    if (k <= 0 || k > nrows || k > ncols)
        throw InputError("minor size out of range");

    std::vector<Poly> out;
    std::vector<int> rows(static_cast<size_t>(k)), cols(static_cast<size_t>(k));

    // Lexicographic enumeration of k-subsets.
    auto next_subset = [](std::vector<int>& s, int n) {
        int k2 = static_cast<int>(s.size());
        int i = k2 - 1;
        while (i >= 0 && s[static_cast<size_t>(i)] == n - k2 + i)
            --i;
        if (i < 0)
            return false;
        ++s[static_cast<size_t>(i)];
        for (int j = i + 1; j < k2; ++j)
            s[static_cast<size_t>(j)] = s[static_cast<size_t>(j - 1)] + 1;
        return true;
    };

    for (int i = 0; i < k; ++i)
        rows[static_cast<size_t>(i)] = i;
    do {
        for (int i = 0; i < k; ++i)
            cols[static_cast<size_t>(i)] = i;
        do {
            std::vector<int> c = cols;
            out.push_back(det_rec(m, rows, c, 0));
        } while (next_subset(cols, ncols));
    } while (next_subset(rows, nrows));
    return out;
}

} // namespace germlab
