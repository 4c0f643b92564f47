#include "ainov/linalg.hpp"

#include <stdexcept>

namespace ainov {

int matrix_rank(RatMatrix m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    int rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

Rat matrix_det(RatMatrix m) {
    std::size_t nn = m.size();
    for (const auto& r : m)
        if (r.size() != nn) throw std::invalid_argument("determinant of non-square matrix");
    Rat det(1);
    for (std::size_t col = 0; col < nn; ++col) {
        std::size_t pivot = col;
        while (pivot < nn && m[pivot][col] == 0) ++pivot;
        if (pivot == nn) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < nn; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < nn; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

bool is_symmetric(const RatMatrix& m) {
    std::size_t nn = m.size();
    for (const auto& r : m)
        if (r.size() != nn) return false;
    for (std::size_t i = 0; i < nn; ++i)
        for (std::size_t j = i + 1; j < nn; ++j)
            if (m[i][j] != m[j][i]) return false;
    return true;
}

std::optional<RatVector> solve_linear(const RatMatrix& A, const RatVector& b) {
    std::size_t rows = A.size();
    std::size_t cols = rows ? A[0].size() : 0;
    if (b.size() != rows) throw std::invalid_argument("solve_linear dimension mismatch");

    RatMatrix m(rows, RatVector(cols + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = A[r][c];
        m[r][cols] = b[r];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rat f = m[r][col] / m[row][col];
            for (std::size_t c = col; c <= cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r)
        if (m[r][cols] != 0) return std::nullopt;

    RatVector x(cols, Rat(0));
    for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = m[r][cols] / m[r][pivot_col[r]];
    return x;
}

int definiteness(const RatMatrix& m) {
    std::size_t nn = m.size();
    if (nn == 0) return 1;
    if (!is_symmetric(m)) return 0;
    bool pos = true, neg = true;
    for (std::size_t k = 1; k <= nn; ++k) {
        RatMatrix lead(k, RatVector(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) lead[i][j] = m[i][j];
        Rat d = matrix_det(std::move(lead));
        if (d <= 0) pos = false;
        if ((k % 2 == 1 && d >= 0) || (k % 2 == 0 && d <= 0)) neg = false;
        if (!pos && !neg) return 0;
    }
    return pos ? 1 : -1;
}

Rat quadratic_form(const RatMatrix& m, const RatVector& v) {
    if (m.size() != v.size()) throw std::invalid_argument("quadratic form dimension mismatch");
    Rat out(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) out += v[i] * m[i][j] * v[j];
    }
    return out;
}

}  // namespace ainov
