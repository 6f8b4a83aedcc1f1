#include "qrs/linalg.hpp"

#include <algorithm>

namespace qrs {

std::vector<int> rref_inplace(SMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pr = -1;
        for (int i = row; i < rows; ++i)
            if (!m[i][col].is_zero()) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        const Scalar inv = m[row][col].inv();
        for (int j = col; j < cols; ++j) m[row][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            const Scalar f = m[i][col];
            for (int j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    m.resize(pivots.size(), SVec{});
    return pivots;
}

namespace {

// Clear each row to integer-polynomial form; returns the cleared matrix and
// the product of the row multipliers as a Scalar.
std::pair<std::vector<std::vector<Poly>>, Scalar> clear_rows(const SMat& a) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<Poly>> p(n);
    Scalar scale(1);
    for (int i = 0; i < n; ++i) {
        Poly l(1);
        for (const auto& x : a[i]) {
            const Poly& d = x.den();
            Poly g = poly_gcd(l, d);
            l = l * (*poly_divide_exact(d, g));
        }
        scale *= Scalar(l, Poly(1));
        p[i].reserve(a[i].size());
        for (const auto& x : a[i]) {
            p[i].push_back(x.num() * (*poly_divide_exact(l, x.den())));
        }
    }
    return {std::move(p), scale};
}

Poly det_bareiss_poly(std::vector<std::vector<Poly>> m, int& sign) {
    const int n = static_cast<int>(m.size());
    sign = 1;
    if (n == 0) return Poly(1);
    Poly prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k].is_zero()) {
            int sw = -1;
            for (int i = k + 1; i < n; ++i)
                if (!m[i][k].is_zero()) {
                    sw = i;
                    break;
                }
            if (sw < 0) return Poly();
            std::swap(m[k], m[sw]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Poly t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                m[i][j] = *poly_divide_exact(t, prev);
            }
            m[i][k] = Poly();
        }
        prev = m[k][k];
    }
    return m[n - 1][n - 1];
}

}  // namespace

Scalar det_bareiss(const SMat& a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return Scalar(1);
    auto [p, scale] = clear_rows(a);
    int sign = 1;
    Poly d = det_bareiss_poly(std::move(p), sign);
    Scalar out(std::move(d), Poly(1));
    out /= scale;
    if (sign < 0) out = -out;
    return out;
}

SMat invert(const SMat& a) {
    const int n = static_cast<int>(a.size());
    const Scalar det = det_bareiss(a);
    if (det.is_zero()) throw SingularGram("matrix of size " + std::to_string(n));
    SMat inv(n, SVec(n, Scalar(0)));
    if (n == 0) return inv;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            SMat minor;
            minor.reserve(n - 1);
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                SVec row;
                row.reserve(n - 1);
                for (int c = 0; c < n; ++c)
                    if (c != j) row.push_back(a[r][c]);
                minor.push_back(std::move(row));
            }
            Scalar cof = det_bareiss(minor);
            if ((i + j) % 2) cof = -cof;
            inv[j][i] = cof / det;
        }
    }
    return inv;
}

std::vector<SVec> nullspace(const SMat& a, int cols) {
    SMat m = a;
    std::vector<int> pivots = rref_inplace(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<SVec> out;
    for (int freeCol = 0; freeCol < cols; ++freeCol) {
        if (is_pivot[freeCol]) continue;
        SVec v(cols, Scalar(0));
        v[freeCol] = Scalar(1);
        for (size_t r = 0; r < pivots.size(); ++r) {
            v[pivots[r]] = -m[r][freeCol];
        }
        out.push_back(std::move(v));
    }
    return out;
}

int rank_of(SMat m) { return static_cast<int>(rref_inplace(m).size()); }

SMat identity_mat(int n) {
    SMat m(n, SVec(n, Scalar(0)));
    for (int i = 0; i < n; ++i) m[i][i] = Scalar(1);
    return m;
}

}  // namespace qrs
