#include "definetti/semidefinite.hpp"

#include "definetti/exact_linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace definetti {

bool SymmetricMatrix::is_symmetric() const {
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

SymmetricMatrix SymmetricMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
    SymmetricMatrix m(static_cast<int>(rows.size()));
    for (int i = 0; i < m.dim; ++i) {
        if (static_cast<int>(rows[i].size()) != m.dim)
            throw std::invalid_argument("from_rows: ragged rows");
        for (int j = 0; j < m.dim; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Rat principal_minor_det(const SymmetricMatrix& m, const std::vector<int>& rows) {
    const int k = static_cast<int>(rows.size());
    for (int r : rows)
        if (r < 1 || r > m.dim) throw std::out_of_range("principal_minor_det: index out of range");
    // Clear denominators row by row, then fraction-free elimination.
    IntMatrix sub(k, k);
    Rat scale = 1;
    for (int i = 0; i < k; ++i) {
        Int den = 1;
        for (int j = 0; j < k; ++j) den = lcm(den, denominator(m.at(rows[i] - 1, rows[j] - 1)));
        for (int j = 0; j < k; ++j) {
            const Rat& v = m.at(rows[i] - 1, rows[j] - 1);
            sub.at(i, j) = numerator(v) * (den / denominator(v));
        }
        scale /= Rat(den);
    }
    return Rat(bareiss_det(std::move(sub))) * scale;
}

PsdVerdict is_psd_exact(const SymmetricMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("is_psd_exact: matrix not symmetric");
    const int d = m.dim;
    SymmetricMatrix a = m;
    std::vector<int> live(d);
    for (int i = 0; i < d; ++i) live[i] = i;

    PsdVerdict verdict;
    auto fail_with = [&](std::vector<int> extra) {
        for (const auto& p : verdict.pivots) extra.push_back(p.first - 1);
        std::sort(extra.begin(), extra.end());
        verdict.minor_rows.clear();
        for (int r : extra) verdict.minor_rows.push_back(r + 1);
        verdict.minor_det = principal_minor_det(m, verdict.minor_rows);
        assert(verdict.minor_det < 0);
        verdict.is_psd = false;
        verdict.pivots.clear();
    };

    while (!live.empty()) {
        for (int i : live) {
            if (a.at(i, i) < 0) {
                fail_with({i});
                return verdict;
            }
        }
        for (int i : live) {
            if (a.at(i, i) != 0) continue;
            for (int j : live) {
                if (j != i && a.at(i, j) != 0) {
                    fail_with({i, j});
                    return verdict;
                }
            }
        }
        int piv = -1;
        for (int i : live)
            if (a.at(i, i) > 0) { piv = i; break; }
        if (piv < 0) break; // working matrix is zero
        verdict.pivots.emplace_back(piv + 1, a.at(piv, piv));
        for (int r : live) {
            if (r == piv || a.at(r, piv) == 0) continue;
            Rat f = a.at(r, piv) / a.at(piv, piv);
            for (int c : live)
                if (c != piv) a.at(r, c) -= f * a.at(piv, c);
            a.at(r, piv) = 0;
        }
        live.erase(std::find(live.begin(), live.end(), piv));
    }
    verdict.is_psd = true;
    return verdict;
}

namespace {

// Cyclic Jacobi on a row-major symmetric matrix; diagonalizes in place and
// accumulates rotations into vecs when non-null (columns = eigenvectors).
void jacobi_diagonalize(std::vector<double>& m, int n, std::vector<double>* vecs) {
    auto at = [&](int i, int j) -> double& { return m[static_cast<size_t>(i) * n + j]; };
    if (vecs) {
        vecs->assign(static_cast<size_t>(n) * n, 0.0);
        for (int i = 0; i < n; ++i) (*vecs)[static_cast<size_t>(i) * n + i] = 1.0;
    }
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
        if (off < 1e-300) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::abs(apq) < 1e-300) continue;
                double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int i = 0; i < n; ++i) {
                    double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    double api = at(p, i), aqi = at(q, i);
                    at(p, i) = c * api - s * aqi;
                    at(q, i) = s * api + c * aqi;
                }
                if (vecs) {
                    for (int i = 0; i < n; ++i) {
                        double vip = (*vecs)[static_cast<size_t>(i) * n + p];
                        double viq = (*vecs)[static_cast<size_t>(i) * n + q];
                        (*vecs)[static_cast<size_t>(i) * n + p] = c * vip - s * viq;
                        (*vecs)[static_cast<size_t>(i) * n + q] = s * vip + c * viq;
                    }
                }
            }
        }
    }
}

} // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int dim) {
    jacobi_diagonalize(a, dim, nullptr);
    std::vector<double> ev(dim);
    for (int i = 0; i < dim; ++i) ev[i] = a[static_cast<size_t>(i) * dim + i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

PsdVerdict is_psd_float(const SymmetricMatrix& m, double tol) {
    const int d = m.dim;
    std::vector<double> a(static_cast<size_t>(d) * d);
    double maxabs = 0;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            double v = rat_to_double(m.at(i, j));
            if (!std::isfinite(v)) throw std::invalid_argument("is_psd_float: non-finite entry");
            a[static_cast<size_t>(i) * d + j] = v;
            maxabs = std::max(maxabs, std::abs(v));
        }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            size_t ij = static_cast<size_t>(i) * d + j, ji = static_cast<size_t>(j) * d + i;
            if (std::abs(a[ij] - a[ji]) > tol * std::max(1.0, maxabs))
                throw std::invalid_argument("is_psd_float: matrix not symmetric within tol");
            a[ij] = a[ji] = 0.5 * (a[ij] + a[ji]);
        }

    std::vector<double> vecs;
    jacobi_diagonalize(a, d, &vecs);

    PsdVerdict verdict;
    verdict.is_psd = true;
    if (d == 0) return verdict;
    int argmin = 0;
    double lmin = a[0], lmaxabs = std::abs(a[0]);
    for (int i = 1; i < d; ++i) {
        double li = a[static_cast<size_t>(i) * d + i];
        if (li < lmin) { lmin = li; argmin = i; }
        lmaxabs = std::max(lmaxabs, std::abs(li));
    }
    verdict.is_psd = lmin >= -tol * std::max(1.0, lmaxabs);
    if (!verdict.is_psd) {
        verdict.witness.resize(d);
        for (int i = 0; i < d; ++i) verdict.witness[i] = vecs[static_cast<size_t>(i) * d + argmin];
    }
    return verdict;
}

SymmetricMatrix kron(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    SymmetricMatrix out(a.dim * b.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int p = 0; p < b.dim; ++p)
                for (int q = 0; q < b.dim; ++q)
                    out.at(i * b.dim + p, j * b.dim + q) = a.at(i, j) * b.at(p, q);
    return out;
}

} // namespace definetti
