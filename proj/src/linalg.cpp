#include "nadyn/linalg.hpp"

#include "nadyn/error.hpp"

#include <utility>

namespace nadyn {

Integer determinant(IntMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) fail(Errc::InvalidArgument, "determinant of a non-square matrix");
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(t);
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::vector<std::vector<Scalar>> nullspace(RatMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[r], m[piv]);
        const Scalar inv = Scalar(1) / m[r][c];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Scalar f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols, Scalar(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Integer> charpoly(const IntMatrix& m) {
    // Faddeev-LeVerrier with exact rationals; the divisions by k are exact in Z.
    const std::size_t n = m.size();
    std::vector<Integer> c(n + 1, Integer(0));
    c[n] = 1;
    IntMatrix M(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix next(n, std::vector<Integer>(n, Integer(0)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Integer s = 0;
                for (std::size_t l = 0; l < n; ++l) s += m[i][l] * M[l][j];
                next[i][j] = s;
            }
            next[i][i] += c[n - k + 1];
        }
        M = std::move(next);
        Integer tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += m[i][l] * M[l][i];
        Integer q = -tr;
        mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
        c[n - k] = q;
    }
    return c;
}

}  // namespace nadyn
