#include "definetti/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace definetti {

double AtomicMeasure::total_weight() const {
    double t = 0;
    for (const auto& a : atoms) t += a.weight;
    return t;
}

std::vector<double> moments_of(const AtomicMeasure& mu, int n) {
    std::vector<double> m(static_cast<size_t>(n) + 1, 0.0);
    for (const auto& atom : mu.atoms) {
        double pw = 1.0;
        for (int i = 0; i <= n; ++i) {
            m[static_cast<size_t>(i)] += atom.weight * pw;
            pw *= atom.location;
        }
    }
    return m;
}

std::vector<double> law_of(const AtomicMeasure& mu, int n) {
    std::vector<double> x(static_cast<size_t>(n) + 1, 0.0);
    for (const auto& atom : mu.atoms) {
        const double p = atom.location, q = 1.0 - atom.location;
        for (int i = 0; i <= n; ++i)
            x[static_cast<size_t>(i)] += atom.weight * std::pow(p, n - i) * std::pow(q, i);
    }
    return x;
}

std::pair<SymmetricMatrix, SymmetricMatrix> jurkat_matrices(const std::vector<Rat>& m) {
    const int n = static_cast<int>(m.size()) - 1;
    if (n < 0) throw std::invalid_argument("jurkat_matrices: empty moment vector");
    if (n % 2 == 0) {
        SymmetricMatrix h(n / 2 + 1), k(n / 2);
        for (int i = 0; i < h.dim; ++i)
            for (int j = 0; j < h.dim; ++j) h.at(i, j) = m[static_cast<size_t>(i + j)];
        for (int i = 0; i < k.dim; ++i)
            for (int j = 0; j < k.dim; ++j)
                k.at(i, j) = m[static_cast<size_t>(i + j + 1)] - m[static_cast<size_t>(i + j + 2)];
        return {h, k};
    }
    SymmetricMatrix h((n + 1) / 2), k((n + 1) / 2);
    for (int i = 0; i < h.dim; ++i)
        for (int j = 0; j < h.dim; ++j) h.at(i, j) = m[static_cast<size_t>(i + j + 1)];
    for (int i = 0; i < k.dim; ++i)
        for (int j = 0; j < k.dim; ++j)
            k.at(i, j) = m[static_cast<size_t>(i + j)] - m[static_cast<size_t>(i + j + 1)];
    return {h, k};
}

namespace {

// Least squares via Householder QR on the selected columns. Rows >= 1,
// 0 < |passive| <= rows assumed by the caller.
std::vector<double> ls_solve(const std::vector<double>& a, int rows, int cols,
                             const std::vector<int>& passive, const std::vector<double>& b) {
    const int np = static_cast<int>(passive.size());
    std::vector<double> q(static_cast<size_t>(rows) * np);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < np; ++c)
            q[static_cast<size_t>(r) * np + c] = a[static_cast<size_t>(r) * cols + passive[static_cast<size_t>(c)]];
    std::vector<double> rhs = b;

    for (int c = 0; c < np; ++c) {
        double norm = 0;
        for (int r = c; r < rows; ++r) norm = std::hypot(norm, q[static_cast<size_t>(r) * np + c]);
        if (norm == 0) continue;
        if (q[static_cast<size_t>(c) * np + c] > 0) norm = -norm;
        std::vector<double> v(static_cast<size_t>(rows - c));
        for (int r = c; r < rows; ++r) v[static_cast<size_t>(r - c)] = q[static_cast<size_t>(r) * np + c];
        v[0] -= norm;
        double vnorm2 = 0;
        for (double t : v) vnorm2 += t * t;
        if (vnorm2 == 0) continue;
        for (int cc = c; cc < np; ++cc) {
            double dot = 0;
            for (int r = c; r < rows; ++r) dot += v[static_cast<size_t>(r - c)] * q[static_cast<size_t>(r) * np + cc];
            double f = 2 * dot / vnorm2;
            for (int r = c; r < rows; ++r) q[static_cast<size_t>(r) * np + cc] -= f * v[static_cast<size_t>(r - c)];
        }
        double dot = 0;
        for (int r = c; r < rows; ++r) dot += v[static_cast<size_t>(r - c)] * rhs[static_cast<size_t>(r)];
        double f = 2 * dot / vnorm2;
        for (int r = c; r < rows; ++r) rhs[static_cast<size_t>(r)] -= f * v[static_cast<size_t>(r - c)];
    }

    std::vector<double> z(static_cast<size_t>(np), 0.0);
    for (int i = np - 1; i >= 0; --i) {
        double diag = q[static_cast<size_t>(i) * np + i];
        if (std::abs(diag) < 1e-300) { z[static_cast<size_t>(i)] = 0; continue; }
        double acc = rhs[static_cast<size_t>(i)];
        for (int j = i + 1; j < np; ++j) acc -= q[static_cast<size_t>(i) * np + j] * z[static_cast<size_t>(j)];
        z[static_cast<size_t>(i)] = acc / diag;
    }
    return z;
}

} // namespace

namespace detail {

NnlsResult nnls(const std::vector<double>& a, int rows, int cols, const std::vector<double>& b) {
    NnlsResult res;
    res.weights.assign(static_cast<size_t>(cols), 0.0);
    std::vector<bool> passive(static_cast<size_t>(cols), false);
    std::vector<int> pset;

    double bnorm = 0;
    for (double v : b) bnorm = std::max(bnorm, std::abs(v));
    const double grad_tol = 1e-13 * std::max(1.0, bnorm);
    const int max_iter = 6 * std::max(rows, cols) + 30;

    std::vector<double> residual = b;
    auto refresh_residual = [&] {
        residual = b;
        for (int c : pset) {
            double w = res.weights[static_cast<size_t>(c)];
            if (w == 0) continue;
            for (int r = 0; r < rows; ++r) residual[static_cast<size_t>(r)] -= w * a[static_cast<size_t>(r) * cols + c];
        }
    };

    while (res.iterations < max_iter) {
        ++res.iterations;
        // gradient of 1/2||Aw-b||^2 restricted to the active (zero) set
        int best = -1;
        double best_g = grad_tol;
        for (int c = 0; c < cols; ++c) {
            if (passive[static_cast<size_t>(c)]) continue;
            double g = 0;
            for (int r = 0; r < rows; ++r) g += a[static_cast<size_t>(r) * cols + c] * residual[static_cast<size_t>(r)];
            if (g > best_g) { best_g = g; best = c; } // strict '>' keeps the lowest index on ties
        }
        if (best < 0) break;
        passive[static_cast<size_t>(best)] = true;
        pset.push_back(best);
        std::sort(pset.begin(), pset.end());

        // inner loop: keep the passive weights strictly positive
        while (true) {
            std::vector<double> z = ls_solve(a, rows, cols, pset, b);
            bool all_pos = true;
            for (double v : z)
                if (v <= 0) { all_pos = false; break; }
            if (all_pos) {
                for (size_t i = 0; i < pset.size(); ++i)
                    res.weights[static_cast<size_t>(pset[i])] = z[i];
                break;
            }
            double alpha = std::numeric_limits<double>::infinity();
            for (size_t i = 0; i < pset.size(); ++i) {
                if (z[i] > 0) continue;
                double w = res.weights[static_cast<size_t>(pset[i])];
                double step = w / (w - z[i]);
                alpha = std::min(alpha, step);
            }
            if (!std::isfinite(alpha)) alpha = 0;
            for (size_t i = 0; i < pset.size(); ++i) {
                int c = pset[i];
                double w = res.weights[static_cast<size_t>(c)];
                res.weights[static_cast<size_t>(c)] = w + alpha * (z[i] - w);
            }
            std::vector<int> keep;
            for (int c : pset) {
                if (res.weights[static_cast<size_t>(c)] <= 1e-300) {
                    res.weights[static_cast<size_t>(c)] = 0;
                    passive[static_cast<size_t>(c)] = false;
                } else {
                    keep.push_back(c);
                }
            }
            pset = std::move(keep);
            if (pset.empty()) break;
        }
        refresh_residual();
    }

    double rn = 0;
    for (double v : residual) rn += v * v;
    res.residual_norm = std::sqrt(rn);
    return res;
}

} // namespace detail

namespace {

struct WeightedFit {
    std::vector<double> weights;
    double residual_max = 0;
    double residual_norm = 0;
};

// Re-solve nonnegative weights for fixed atom locations against the moments.
WeightedFit fit_weights(const std::vector<double>& locs, const std::vector<double>& m) {
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(locs.size());
    std::vector<double> a(static_cast<size_t>(rows) * cols);
    for (int c = 0; c < cols; ++c) {
        double pw = 1.0;
        for (int r = 0; r < rows; ++r) {
            a[static_cast<size_t>(r) * cols + c] = pw;
            pw *= locs[static_cast<size_t>(c)];
        }
    }
    auto sol = detail::nnls(a, rows, cols, m);
    WeightedFit fit;
    fit.weights = sol.weights;
    fit.residual_norm = sol.residual_norm;
    for (int r = 0; r < rows; ++r) {
        double acc = -m[static_cast<size_t>(r)];
        for (int c = 0; c < cols; ++c) acc += a[static_cast<size_t>(r) * cols + c] * sol.weights[static_cast<size_t>(c)];
        fit.residual_max = std::max(fit.residual_max, std::abs(acc));
    }
    return fit;
}

constexpr double kGolden = 0.6180339887498949;

// One golden-section pass over atom r within [center-h, center+h] (clamped),
// minimizing the weight-resolved residual norm.
double refine_atom(std::vector<double> locs, size_t r, double h, const std::vector<double>& m) {
    double lo = std::max(0.0, locs[r] - h);
    double hi = std::min(1.0, locs[r] + h);
    double c = hi - kGolden * (hi - lo);
    double d = lo + kGolden * (hi - lo);
    for (int it = 0; it < 48 && hi - lo > 1e-15; ++it) {
        locs[r] = c;
        double fc = fit_weights(locs, m).residual_norm;
        locs[r] = d;
        double fd = fit_weights(locs, m).residual_norm;
        if (fc < fd)
            hi = d;
        else
            lo = c;
        c = hi - kGolden * (hi - lo);
        d = lo + kGolden * (hi - lo);
    }
    return 0.5 * (lo + hi);
}

double residual_at(const std::vector<double>& locs, const std::vector<double>& wts,
                   const std::vector<double>& m, std::vector<double>& out) {
    const int rows = static_cast<int>(m.size());
    out.assign(static_cast<size_t>(rows), 0.0);
    for (int i = 0; i < rows; ++i) out[static_cast<size_t>(i)] = -m[static_cast<size_t>(i)];
    for (size_t a = 0; a < locs.size(); ++a) {
        double pw = 1.0;
        for (int i = 0; i < rows; ++i) {
            out[static_cast<size_t>(i)] += wts[a] * pw;
            pw *= locs[a];
        }
    }
    double norm = 0;
    for (double v : out) norm += v * v;
    return std::sqrt(norm);
}

// Damped Gauss-Newton on (locations, weights) jointly; the step is solved by
// Householder QR of the column-scaled damped system, which tolerates the
// near-singular Vandermonde Jacobians that clustered atoms produce.
void gauss_newton_polish(std::vector<double>& locs, std::vector<double>& wts,
                         const std::vector<double>& m, double target) {
    const int rows = static_cast<int>(m.size());
    const int r = static_cast<int>(locs.size());
    if (r == 0) return;
    const int dim = 2 * r;
    const int stacked = rows + dim;

    std::vector<double> f;
    double fnorm = residual_at(locs, wts, m, f);
    double lambda = 1e-8;
    for (int it = 0; it < 150 && fnorm > target && lambda < 1e12; ++it) {
        // J[i][a] = d residual_i / d p_a ; J[i][r+a] = d / d w_a
        std::vector<double> jac(static_cast<size_t>(rows) * dim, 0.0);
        for (int a = 0; a < r; ++a) {
            double pw = 1.0; // p^(i-1)
            for (int i = 0; i < rows; ++i) {
                jac[static_cast<size_t>(i) * dim + r + a] = (i == 0) ? 1.0 : pw * locs[static_cast<size_t>(a)];
                if (i >= 1) {
                    jac[static_cast<size_t>(i) * dim + a] = i * wts[static_cast<size_t>(a)] * pw;
                    pw *= locs[static_cast<size_t>(a)];
                }
            }
        }
        std::vector<double> scale(static_cast<size_t>(dim), 0.0);
        for (int i = 0; i < rows; ++i)
            for (int a = 0; a < dim; ++a) {
                double v = jac[static_cast<size_t>(i) * dim + a];
                scale[static_cast<size_t>(a)] += v * v;
            }
        for (double& s : scale) s = s > 0 ? std::sqrt(s) : 1.0;

        // [ J S^-1 ; sqrt(lambda) I ] step = [ -f ; 0 ]
        std::vector<double> a(static_cast<size_t>(stacked) * dim, 0.0);
        std::vector<double> b(static_cast<size_t>(stacked), 0.0);
        for (int i = 0; i < rows; ++i) {
            for (int c = 0; c < dim; ++c)
                a[static_cast<size_t>(i) * dim + c] = jac[static_cast<size_t>(i) * dim + c] / scale[static_cast<size_t>(c)];
            b[static_cast<size_t>(i)] = -f[static_cast<size_t>(i)];
        }
        for (int c = 0; c < dim; ++c)
            a[static_cast<size_t>(rows + c) * dim + c] = std::sqrt(lambda);

        for (int c = 0; c < dim; ++c) {
            double norm = 0;
            for (int i = c; i < stacked; ++i) norm = std::hypot(norm, a[static_cast<size_t>(i) * dim + c]);
            if (norm == 0) continue;
            if (a[static_cast<size_t>(c) * dim + c] > 0) norm = -norm;
            std::vector<double> v(static_cast<size_t>(stacked - c));
            for (int i = c; i < stacked; ++i) v[static_cast<size_t>(i - c)] = a[static_cast<size_t>(i) * dim + c];
            v[0] -= norm;
            double vn = 0;
            for (double t : v) vn += t * t;
            if (vn == 0) continue;
            for (int cc = c; cc < dim; ++cc) {
                double dot = 0;
                for (int i = c; i < stacked; ++i) dot += v[static_cast<size_t>(i - c)] * a[static_cast<size_t>(i) * dim + cc];
                double fct = 2 * dot / vn;
                for (int i = c; i < stacked; ++i) a[static_cast<size_t>(i) * dim + cc] -= fct * v[static_cast<size_t>(i - c)];
            }
            double dot = 0;
            for (int i = c; i < stacked; ++i) dot += v[static_cast<size_t>(i - c)] * b[static_cast<size_t>(i)];
            double fct = 2 * dot / vn;
            for (int i = c; i < stacked; ++i) b[static_cast<size_t>(i)] -= fct * v[static_cast<size_t>(i - c)];
        }
        std::vector<double> step(static_cast<size_t>(dim), 0.0);
        for (int i = dim - 1; i >= 0; --i) {
            double acc = b[static_cast<size_t>(i)];
            for (int j = i + 1; j < dim; ++j) acc -= a[static_cast<size_t>(i) * dim + j] * step[static_cast<size_t>(j)];
            double diag = a[static_cast<size_t>(i) * dim + i];
            step[static_cast<size_t>(i)] = std::abs(diag) < 1e-300 ? 0.0 : acc / diag;
        }
        for (int c = 0; c < dim; ++c) step[static_cast<size_t>(c)] /= scale[static_cast<size_t>(c)];

        std::vector<double> l2 = locs, w2 = wts;
        for (int c = 0; c < r; ++c) {
            l2[static_cast<size_t>(c)] = std::clamp(l2[static_cast<size_t>(c)] + step[static_cast<size_t>(c)], 0.0, 1.0);
            w2[static_cast<size_t>(c)] = std::max(w2[static_cast<size_t>(c)] + step[static_cast<size_t>(r + c)], 0.0);
        }
        std::vector<double> f2;
        double f2norm = residual_at(l2, w2, m, f2);
        if (f2norm < fnorm) {
            locs = std::move(l2);
            wts = std::move(w2);
            f = std::move(f2);
            fnorm = f2norm;
            lambda = std::max(lambda * 0.25, 1e-14);
        } else {
            lambda *= 10;
        }
    }
}

// Joint polish first (cheap, usually sufficient from a cluster start), then
// golden-section coordinate descent for the cases the polish cannot move,
// then a final polish.
double descend(std::vector<double>& locs, std::vector<double>& wts, const std::vector<double>& m,
               double bracket0, double target) {
    if (locs.empty()) {
        std::vector<double> f;
        return residual_at(locs, wts, m, f);
    }
    wts = fit_weights(locs, m).weights;
    gauss_newton_polish(locs, wts, m, target);
    {
        auto fit = fit_weights(locs, m);
        wts = fit.weights;
        if (fit.residual_norm <= target) return fit.residual_norm;
    }

    std::vector<double> brackets(locs.size(), bracket0);
    double best = fit_weights(locs, m).residual_norm;
    int stalled = 0;
    for (int pass = 0; pass < 24 && stalled < 2 && best > target; ++pass) {
        for (size_t r = 0; r < locs.size(); ++r) {
            double refined = refine_atom(locs, r, brackets[r], m);
            // trust-region style: grow with movement, shrink slowly, never collapse
            brackets[r] = std::clamp(std::max(4 * std::abs(refined - locs[r]), brackets[r] / 4),
                                     1e-11, bracket0);
            locs[r] = refined;
        }
        double now = fit_weights(locs, m).residual_norm;
        stalled = now > best * (1 - 1e-3) ? stalled + 1 : 0;
        best = std::min(best, now);
    }
    wts = fit_weights(locs, m).weights;
    gauss_newton_polish(locs, wts, m, target);
    wts = fit_weights(locs, m).weights;
    return fit_weights(locs, m).residual_norm;
}

// Near-duplicate atoms create a fourth-order-flat valley (two atoms at
// distance d with a common barycenter perturb the moments only at order d^2),
// where both descent stages stall above the target. Escape by tentatively
// merging close pairs and dropping light atoms: a move that reaches the
// target or merely keeps the residual (a "lateral" move) is kept, since the
// smaller parameterization is what lets the joint polish converge.
double merge_and_reoptimize(std::vector<double>& locs, std::vector<double>& wts,
                            const std::vector<double>& m, double bracket0, double target) {
    double current = descend(locs, wts, m, bracket0, target);
    if (current > 1e-4) return current; // not in the flat-valley regime; refine the grid instead
    for (int round = 0; round < 16 && current > target && locs.size() > 1; ++round) {
        std::vector<std::pair<double, std::pair<size_t, size_t>>> pairs;
        for (size_t i = 0; i < locs.size(); ++i)
            for (size_t j = i + 1; j < locs.size(); ++j)
                pairs.push_back({std::abs(locs[i] - locs[j]), {i, j}});
        std::sort(pairs.begin(), pairs.end());

        struct Candidate {
            std::vector<double> locs, wts;
            double bracket;
        };
        std::vector<Candidate> candidates;
        for (size_t t = 0; t < pairs.size() && t < 6; ++t) {
            auto [i, j] = pairs[t].second;
            Candidate cand;
            double w = wts[i] + wts[j];
            double p = w > 0 ? (locs[i] * wts[i] + locs[j] * wts[j]) / w : 0.5 * (locs[i] + locs[j]);
            for (size_t s = 0; s < locs.size(); ++s) {
                if (s == i || s == j) continue;
                cand.locs.push_back(locs[s]);
                cand.wts.push_back(wts[s]);
            }
            cand.locs.push_back(std::clamp(p, 0.0, 1.0));
            cand.wts.push_back(w);
            // the surviving atoms may have to travel about the pair gap
            cand.bracket = std::max(bracket0, 4 * pairs[t].first);
            candidates.push_back(std::move(cand));
        }
        for (size_t i = 0; i < locs.size(); ++i) {
            if (wts[i] > 0.05) continue;
            Candidate cand;
            for (size_t s = 0; s < locs.size(); ++s) {
                if (s == i) continue;
                cand.locs.push_back(locs[s]);
                cand.wts.push_back(wts[s]);
            }
            cand.bracket = std::max(bracket0, 0.01);
            candidates.push_back(std::move(cand));
        }

        bool moved = false;
        int tried = 0;
        for (auto& cand : candidates) {
            if (++tried > 8) break;
            double res = descend(cand.locs, cand.wts, m, cand.bracket, target);
            if (res <= target || res < current * 1.02) {
                locs = std::move(cand.locs);
                wts = std::move(cand.wts);
                current = res;
                moved = true;
                break;
            }
        }
        if (!moved) break;
    }
    return current;
}

// Real roots of the monic polynomial z^r + sum_t coeff[t] z^t inside [0,1],
// by sign-change scan and bisection.
std::vector<double> unit_interval_roots(const std::vector<double>& coeff) {
    const int r = static_cast<int>(coeff.size());
    auto poly = [&](double z) {
        double v = 1.0;
        for (int t = r - 1; t >= 0; --t) v = v * z + coeff[static_cast<size_t>(t)];
        return v;
    };
    std::vector<double> roots;
    const int scan = 4096;
    double prev = poly(0.0);
    if (prev == 0) roots.push_back(0.0);
    for (int g = 1; g <= scan; ++g) {
        double z = static_cast<double>(g) / scan;
        double cur = poly(z);
        if (cur == 0) {
            roots.push_back(z);
        } else if (prev != 0 && std::signbit(cur) != std::signbit(prev)) {
            double lo = static_cast<double>(g - 1) / scan, hi = z;
            for (int it = 0; it < 80 && hi - lo > 1e-16; ++it) {
                double mid = 0.5 * (lo + hi);
                if (std::signbit(poly(mid)) == std::signbit(poly(lo)))
                    lo = mid;
                else
                    hi = mid;
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev = cur;
    }
    return roots;
}

// Candidate supports from the annihilating polynomial of a moment Hankel
// system (Prony). The principal representations of the truncated problem on
// [0,1] pin a root at an endpoint, which corresponds to running the
// annihilator on an endpoint-weighted moment sequence:
//   root at 0 -> the sequence (m_1, ..., m_n)          (p-weighted measure)
//   root at 1 -> the sequence (m_i - m_{i+1})          ((1-p)-weighted)
//   both      -> (m_{i+1} - m_{i+2})                   (p(1-p)-weighted)
// Each candidate is tentative: kept only if NNLS weights plus a polish
// actually match the original moments. Root extraction can be brittle, so
// this never becomes the final authority.
bool hankel_kernel_candidate(const std::vector<double>& m, double target,
                             std::vector<double>& locs_out, std::vector<double>& wts_out) {
    const int n = static_cast<int>(m.size()) - 1;

    struct Variant {
        std::vector<double> seq;
        std::vector<double> preset;
    };
    std::vector<Variant> variants;
    variants.push_back({m, {}});
    if (n >= 1) {
        variants.push_back({{m.begin() + 1, m.end()}, {0.0}});
        std::vector<double> diff;
        for (int i = 0; i < n; ++i) diff.push_back(m[static_cast<size_t>(i)] - m[static_cast<size_t>(i + 1)]);
        variants.push_back({diff, {1.0}});
    }
    if (n >= 2) {
        std::vector<double> mid;
        for (int i = 0; i + 2 <= n; ++i)
            mid.push_back(m[static_cast<size_t>(i + 1)] - m[static_cast<size_t>(i + 2)]);
        variants.push_back({mid, {0.0, 1.0}});
    }

    auto try_support = [&](std::vector<double> locs) {
        if (locs.empty()) return false;
        std::vector<double> wts = fit_weights(locs, m).weights;
        gauss_newton_polish(locs, wts, m, target * 0.1);
        auto fit = fit_weights(locs, m);
        if (fit.residual_norm <= target) {
            locs_out = std::move(locs);
            wts_out = fit.weights;
            return true;
        }
        return false;
    };

    for (const auto& [seq, preset] : variants) {
        const int len = static_cast<int>(seq.size());
        if (try_support(preset)) return true;
        // determined annihilator systems only: rows = len - r >= r
        for (int r = 1; 2 * r <= len; ++r) {
            const int rows = len - r;
            std::vector<double> a(static_cast<size_t>(rows) * r);
            std::vector<double> b(static_cast<size_t>(rows));
            for (int i = 0; i < rows; ++i) {
                for (int t = 0; t < r; ++t) a[static_cast<size_t>(i) * r + t] = seq[static_cast<size_t>(i + t)];
                b[static_cast<size_t>(i)] = -seq[static_cast<size_t>(i + r)];
            }
            std::vector<int> all_cols(static_cast<size_t>(r));
            for (int t = 0; t < r; ++t) all_cols[static_cast<size_t>(t)] = t;
            std::vector<double> coeff = ls_solve(a, rows, r, all_cols, b);
            std::vector<double> locs = unit_interval_roots(coeff);
            if (locs.empty()) continue;
            locs.insert(locs.end(), preset.begin(), preset.end());
            if (try_support(std::move(locs))) return true;
        }
    }
    return false;
}

AtomicMeasure assemble(const std::vector<double>& locs, const std::vector<double>& weights) {
    AtomicMeasure mu;
    for (size_t i = 0; i < locs.size(); ++i)
        if (weights[i] >= 1e-12) mu.atoms.push_back({locs[i], weights[i]});
    // merge near-coincident atoms (weighted mean location)
    std::sort(mu.atoms.begin(), mu.atoms.end(),
              [](const auto& x, const auto& y) { return x.location < y.location; });
    std::vector<AtomicMeasure::Atom> merged;
    for (const auto& atom : mu.atoms) {
        if (!merged.empty() && atom.location - merged.back().location < 1e-7) {
            auto& last = merged.back();
            double w = last.weight + atom.weight;
            last.location = (last.location * last.weight + atom.location * atom.weight) / w;
            last.weight = w;
        } else {
            merged.push_back(atom);
        }
    }
    mu.atoms = std::move(merged);
    return mu;
}

} // namespace

RecoveryResult recover_measure(const std::vector<double>& m, double tol) {
    if (m.empty()) throw std::invalid_argument("recover_measure: empty moment vector");
    for (double v : m)
        if (!std::isfinite(v)) throw std::invalid_argument("recover_measure: non-finite moment");

    RecoveryResult out;
    const double inner_target = std::min(tol * 1e-3, 1e-13);

    for (int grid = 256; grid <= 8192; grid *= 2) {
        out.grid_points = grid + 1;
        std::vector<double> nodes(static_cast<size_t>(grid) + 1);
        for (int g = 0; g <= grid; ++g) nodes[static_cast<size_t>(g)] = static_cast<double>(g) / grid;
        const int rows = static_cast<int>(m.size());
        const int cols = grid + 1;
        std::vector<double> a(static_cast<size_t>(rows) * cols);
        for (int c = 0; c <= grid; ++c) {
            double pw = 1.0;
            for (int r = 0; r < rows; ++r) {
                a[static_cast<size_t>(r) * cols + c] = pw;
                pw *= nodes[static_cast<size_t>(c)];
            }
        }
        auto sol = detail::nnls(a, rows, cols, m);

        // cluster adjacent support columns into candidate atoms
        std::vector<double> locs, wts;
        int last_idx = -10;
        for (int c = 0; c <= grid; ++c) {
            double w = sol.weights[static_cast<size_t>(c)];
            if (w <= 1e-12) continue;
            if (c - last_idx <= 2 && !locs.empty()) {
                double tot = wts.back() + w;
                locs.back() = (locs.back() * wts.back() + nodes[static_cast<size_t>(c)] * w) / tot;
                wts.back() = tot;
            } else {
                locs.push_back(nodes[static_cast<size_t>(c)]);
                wts.push_back(w);
            }
            last_idx = c;
        }
        if (locs.empty()) locs.push_back(0.0);

        double reached = merge_and_reoptimize(locs, wts, m, 2.0 / grid, inner_target);
        if (reached > inner_target) {
            std::vector<double> kl, kw;
            if (hankel_kernel_candidate(m, inner_target, kl, kw)) {
                locs = std::move(kl);
                wts = std::move(kw);
            }
        }

        out.measure = assemble(locs, fit_weights(locs, m).weights);
        std::vector<double> merged_locs;
        for (const auto& atom : out.measure.atoms) merged_locs.push_back(atom.location);
        auto final_fit = fit_weights(merged_locs, m);
        for (size_t i = 0; i < merged_locs.size(); ++i) out.measure.atoms[i].weight = final_fit.weights[i];
        out.measure.atoms.erase(
            std::remove_if(out.measure.atoms.begin(), out.measure.atoms.end(),
                           [](const auto& atom) { return atom.weight < 1e-12; }),
            out.measure.atoms.end());
        out.max_residual = final_fit.residual_max;
        if (out.max_residual <= tol) {
            out.feasible = true;
            return out;
        }
    }
    out.feasible = false;
    return out;
}

RecoveryResult recover_measure(const std::vector<Rat>& m, double tol) {
    auto [h, k] = jurkat_matrices(m);
    if (!is_psd_exact(h).is_psd || !is_psd_exact(k).is_psd) {
        RecoveryResult out;
        out.feasible = false;
        out.max_residual = std::numeric_limits<double>::infinity();
        return out;
    }
    std::vector<double> md;
    md.reserve(m.size());
    for (const Rat& v : m) md.push_back(rat_to_double(v));
    return recover_measure(md, tol);
}

} // namespace definetti
