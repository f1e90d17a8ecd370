#include "definetti/exact_linalg.hpp"

#include <utility>

// Bareiss elimination: after step k every entry is a minor of the original
// matrix, so the division by the previous pivot is exact. Row swaps only flip
// the sign of subsequent pivots.

namespace definetti {

namespace {

// Forward pass on an augmented (rows x cols, cols >= rows) integer matrix.
// Returns +1/-1 for the row-swap parity, or 0 when the square part is singular.
int bareiss_forward(IntMatrix& m) {
    const int n = m.rows;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) { piv = r; break; }
            if (piv < 0) return 0;
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(k, c), m.at(piv, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < m.cols; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = t / prev;
            }
            m.at(i, k) = 0;
        }
        prev = m.at(k, k);
    }
    return sign;
}

} // namespace

Int bareiss_det(IntMatrix m) {
    if (m.rows != m.cols) throw std::invalid_argument("bareiss_det: matrix not square");
    if (m.rows == 0) return 1;
    int sign = bareiss_forward(m);
    if (sign == 0) return 0;
    return sign * m.at(m.rows - 1, m.rows - 1);
}

std::vector<Int> leading_principal_minors(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("leading_principal_minors: matrix not square");
    std::vector<Int> out;
    out.reserve(m.rows);
    for (int k = 1; k <= m.rows; ++k) {
        IntMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(i, j);
        out.push_back(bareiss_det(std::move(sub)));
    }
    return out;
}

std::vector<Rat> solve_linear(const IntMatrix& a, const std::vector<Rat>& b) {
    const int n = a.rows;
    if (a.cols != n) throw std::invalid_argument("solve_linear: matrix not square");
    if (static_cast<int>(b.size()) != n) throw std::invalid_argument("solve_linear: rhs size mismatch");

    Int scale = 1;
    for (const Rat& v : b) scale = lcm(scale, denominator(v));

    IntMatrix aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n) = numerator(b[i]) * (scale / denominator(b[i]));
    }
    if (bareiss_forward(aug) == 0) throw std::domain_error("solve_linear: singular matrix");

    std::vector<Rat> x(n);
    for (int i = n - 1; i >= 0; --i) {
        Rat acc(aug.at(i, n));
        for (int j = i + 1; j < n; ++j) acc -= Rat(aug.at(i, j)) * x[j];
        x[i] = acc / Rat(aug.at(i, i));
    }
    for (Rat& v : x) v /= Rat(scale);
    return x;
}

IntMatrix transpose(const IntMatrix& m) {
    IntMatrix t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

} // namespace definetti
