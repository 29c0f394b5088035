#include "waring/exactlin.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace waring {

std::size_t rat_complexity(const Rat& x) {
    const Int num = numerator(x);
    const Int den = denominator(x);
    std::size_t bits = 0;
    if (num != 0) bits += mpz_sizeinbase(num.backend().data(), 2);
    bits += mpz_sizeinbase(den.backend().data(), 2);
    return bits;
}

std::optional<Rat> rationalize(double x, double tol, std::uint64_t den_bound) {
    if (!std::isfinite(x)) return std::nullopt;
    const double target = tol * std::max(1.0, std::abs(x));
    // Continued fraction convergents p_k/q_k of x.
    double v = x;
    Int p_prev = 1, q_prev = 0;
    Int p = 0, q = 1;  // starts at convergent before the first term
    for (int iter = 0; iter < 64; ++iter) {
        const double fl = std::floor(v);
        if (std::abs(fl) > 9.0e18) return std::nullopt;
        Int a(static_cast<long long>(fl));
        Int p_next = a * p + p_prev;
        Int q_next = a * q + q_prev;
        p_prev = p; q_prev = q;
        p = p_next; q = q_next;
        if (q > Int(den_bound)) return std::nullopt;
        Rat approx(p, q);
        if (std::abs(to_double(approx) - x) <= target) return approx;
        const double frac = v - fl;
        if (frac <= 1e-18) break;
        v = 1.0 / frac;
    }
    Rat approx(p, q);
    if (std::abs(to_double(approx) - x) <= target) return approx;
    return std::nullopt;
}

std::optional<Rat> rationalize(Cx x, double tol, std::uint64_t den_bound) {
    if (std::abs(x.imag()) > tol * std::max(1.0, std::abs(x))) return std::nullopt;
    return rationalize(x.real(), tol, den_bound);
}

std::optional<Rat> rational_root(const Rat& x, int d) {
    if (d <= 0) return std::nullopt;
    if (d == 1) return x;
    if (x == 0) return Rat(0);
    const bool neg = x < 0;
    if (neg && d % 2 == 0) return std::nullopt;
    const Int num = neg ? Int(-numerator(x)) : numerator(x);
    const Int den = denominator(x);
    Int rn, rd;
    const int num_exact =
        mpz_root(rn.backend().data(), num.backend().data(), static_cast<unsigned long>(d));
    const int den_exact =
        mpz_root(rd.backend().data(), den.backend().data(), static_cast<unsigned long>(d));
    if (!num_exact || !den_exact) return std::nullopt;
    Rat r(rn, rd);
    return neg ? Rat(-r) : r;
}

std::string rat_to_string(const Rat& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

Rat rat_from_string(const std::string& tok) {
    try {
        const auto slash = tok.find('/');
        if (slash == std::string::npos) return Rat(Int(tok));
        Int num(tok.substr(0, slash));
        Int den(tok.substr(slash + 1));
        if (den <= 0) throw ParseError("denominator must be positive: " + tok);
        return Rat(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad rational token: " + tok);
    }
}

// ---------------------------------------------------------------------------
// rref / kernel / solve
// ---------------------------------------------------------------------------

RrefResult rref(const RatMatrix& A) {
    RrefResult out;
    out.R = A;
    const Eigen::Index rows = A.rows(), cols = A.cols();
    Eigen::Index lead = 0;
    for (Eigen::Index col = 0; col < cols && lead < rows; ++col) {
        // pick the cheapest nonzero pivot (least bit growth), lowest row on ties
        Eigen::Index pivot = -1;
        std::size_t best = 0;
        for (Eigen::Index r = lead; r < rows; ++r) {
            if (out.R(r, col) == 0) continue;
            const std::size_t c = rat_complexity(out.R(r, col));
            if (pivot < 0 || c < best) {
                pivot = r;
                best = c;
            }
        }
        if (pivot < 0) continue;
        out.R.row(lead).swap(out.R.row(pivot));
        const Rat inv = Rat(1) / out.R(lead, col);
        for (Eigen::Index j = col; j < cols; ++j) out.R(lead, j) *= inv;
        for (Eigen::Index r = 0; r < rows; ++r) {
            if (r == lead || out.R(r, col) == 0) continue;
            const Rat factor = out.R(r, col);
            for (Eigen::Index j = col; j < cols; ++j)
                out.R(r, j) -= factor * out.R(lead, j);
        }
        out.pivot_cols.push_back(static_cast<int>(col));
        ++lead;
    }
    out.rank = static_cast<int>(out.pivot_cols.size());
    return out;
}

std::vector<RatVector> kernel_basis(const RatMatrix& A) {
    const auto rr = rref(A);
    const Eigen::Index cols = A.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (int c : rr.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<RatVector> basis;
    for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        RatVector v = RatVector::Zero(cols);
        v(free_col) = 1;
        for (int r = 0; r < rr.rank; ++r) {
            const Eigen::Index pc = rr.pivot_cols[static_cast<std::size_t>(r)];
            v(pc) = -rr.R(r, free_col);
        }
        // normalize first nonzero entry to 1
        for (Eigen::Index i = 0; i < cols; ++i) {
            if (v(i) != 0) {
                const Rat inv = Rat(1) / v(i);
                for (Eigen::Index j = i; j < cols; ++j) v(j) *= inv;
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

int rank_of(const RatMatrix& A) {
    if (A.size() == 0) return 0;
    return rref(A).rank;
}

std::optional<RatVector> solve_exact(const RatMatrix& A, const RatVector& b) {
    const Eigen::Index rows = A.rows(), cols = A.cols();
    RatMatrix aug(rows, cols + 1);
    aug.leftCols(cols) = A;
    aug.col(cols) = b;
    const auto rr = rref(aug);
    // inconsistent iff some pivot lands in the augmented column
    if (!rr.pivot_cols.empty() && rr.pivot_cols.back() == static_cast<int>(cols))
        return std::nullopt;
    RatVector x = RatVector::Zero(cols);
    for (int r = 0; r < rr.rank; ++r)
        x(rr.pivot_cols[static_cast<std::size_t>(r)]) = rr.R(r, cols);
    return x;
}

bool in_row_space(const RatMatrix& A, const RatVector& v) {
    RatMatrix stacked(A.rows() + 1, A.cols());
    stacked.topRows(A.rows()) = A;
    stacked.row(A.rows()) = v.transpose();
    return rank_of(stacked) == rank_of(A);
}

// ---------------------------------------------------------------------------
// univariate polynomials over Q
// ---------------------------------------------------------------------------

RatPoly poly_trim(RatPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int poly_degree(const RatPoly& p) {
    for (std::size_t i = p.size(); i > 0; --i)
        if (p[i - 1] != 0) return static_cast<int>(i - 1);
    return -1;
}

Rat poly_eval(const RatPoly& p, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = p.size(); i > 0; --i) acc = acc * x + p[i - 1];
    return acc;
}

RatPoly poly_derivative(const RatPoly& p) {
    if (p.size() <= 1) return {};
    RatPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * Rat(static_cast<long>(i));
    return poly_trim(std::move(d));
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return poly_trim(std::move(out));
}

RatPoly poly_monic(const RatPoly& p) {
    RatPoly q = poly_trim(p);
    if (q.empty()) return q;
    const Rat inv = Rat(1) / q.back();
    for (auto& c : q) c *= inv;
    return q;
}

std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b) {
    RatPoly rem = poly_trim(a);
    RatPoly den = poly_trim(b);
    if (den.empty()) throw ZeroPolynomial();
    if (rem.size() < den.size()) return {{}, rem};
    RatPoly quot(rem.size() - den.size() + 1, Rat(0));
    const Rat lead_inv = Rat(1) / den.back();
    for (std::size_t k = quot.size(); k > 0; --k) {
        const std::size_t top = den.size() - 1 + (k - 1);
        if (top >= rem.size() || rem[top] == 0) continue;
        const Rat q = rem[top] * lead_inv;
        quot[k - 1] = q;
        for (std::size_t j = 0; j < den.size(); ++j) rem[(k - 1) + j] -= q * den[j];
    }
    return {poly_trim(std::move(quot)), poly_trim(std::move(rem))};
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = poly_trim(a), y = poly_trim(b);
    while (!y.empty()) {
        RatPoly r = poly_divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return poly_monic(x);
}

bool poly_is_squarefree(const RatPoly& p) {
    const RatPoly q = poly_trim(p);
    if (poly_degree(q) <= 1) return poly_degree(q) >= 0;
    return poly_degree(poly_gcd(q, poly_derivative(q))) == 0;
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
    std::vector<std::pair<RatPoly, int>> out;
    RatPoly f = poly_monic(p);
    if (poly_degree(f) <= 0) return out;
    RatPoly fp = poly_derivative(f);
    RatPoly a = poly_gcd(f, fp);
    RatPoly c = poly_divmod(f, a).first;
    RatPoly d = poly_divmod(fp, a).first;
    {
        RatPoly cp = poly_derivative(c);
        for (std::size_t i = 0; i < d.size(); ++i) d[i] -= (i < cp.size() ? cp[i] : Rat(0));
        d = poly_trim(std::move(d));
    }
    int mult = 1;
    while (poly_degree(c) > 0) {
        RatPoly ai = poly_gcd(c, d);
        if (poly_degree(ai) > 0) out.emplace_back(ai, mult);
        c = poly_divmod(c, ai).first;
        RatPoly t = poly_divmod(d, ai).first;
        RatPoly cp = poly_derivative(c);
        d.assign(std::max(t.size(), cp.size()), Rat(0));
        for (std::size_t i = 0; i < t.size(); ++i) d[i] = t[i];
        for (std::size_t i = 0; i < cp.size(); ++i) d[i] -= cp[i];
        d = poly_trim(std::move(d));
        ++mult;
    }
    return out;
}

// ---------------------------------------------------------------------------
// complex roots
// ---------------------------------------------------------------------------

namespace {

Cx horner(const std::vector<Cx>& c, Cx x) {
    Cx acc(0.0, 0.0);
    for (std::size_t i = c.size(); i > 0; --i) acc = acc * x + c[i - 1];
    return acc;
}

std::vector<Cx> cx_derivative(const std::vector<Cx>& c) {
    if (c.size() <= 1) return {};
    std::vector<Cx> d(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) d[i - 1] = c[i] * static_cast<double>(i);
    return d;
}

struct Cluster {
    Cx centroid;
    std::vector<Cx> members;
};

double cluster_spread(const Cluster& c) {
    double s = 0.0;
    for (const Cx& z : c.members) s = std::max(s, std::abs(z - c.centroid));
    return s;
}

Cx mean_of(const std::vector<Cx>& zs) {
    Cx acc(0.0, 0.0);
    for (const Cx& z : zs) acc += z;
    return acc / static_cast<double>(zs.size());
}

}  // namespace

std::vector<RootCluster> poly_roots(const std::vector<Cx>& coeffs, double cluster_tol) {
    double scale = 0.0;
    for (const Cx& c : coeffs) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) throw ZeroPolynomial();

    std::vector<Cx> c = coeffs;
    while (!c.empty() && std::abs(c.back()) <= 1e-12 * scale) c.pop_back();
    const int n = static_cast<int>(c.size()) - 1;
    if (n < 1) throw ZeroPolynomial();

    // companion matrix of the monic polynomial
    CxMatrix comp = CxMatrix::Zero(n, n);
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = -c[static_cast<std::size_t>(i)] / c.back();
    Eigen::ComplexEigenSolver<CxMatrix> es(comp, false);
    std::vector<Cx> roots(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) roots[static_cast<std::size_t>(i)] = es.eigenvalues()(i);

    // one Newton step per root, kept only when it reduces the residual
    const std::vector<Cx> dc = cx_derivative(c);
    for (Cx& r : roots) {
        const Cx p = horner(c, r);
        const Cx dp = horner(dc, r);
        if (std::abs(dp) > 1e-300) {
            const Cx r2 = r - p / dp;
            if (std::abs(horner(c, r2)) < std::abs(p)) r = r2;
        }
    }

    // deterministic clustering
    std::sort(roots.begin(), roots.end(), [](const Cx& a, const Cx& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    std::vector<Cluster> clusters;
    for (const Cx& r : roots) clusters.push_back({r, {r}});

    const double eps = 2.220446049250313e-16;
    const auto merge_radius = [&](int mult, double mag) {
        if (mult <= 2) return cluster_tol;
        return std::max(cluster_tol,
                        24.0 * n * std::pow(eps, 1.0 / mult) * std::max(1.0, mag));
    };
    // validation bound for merges wider than cluster_tol: a genuine k-fold
    // root keeps the residual at the centroid below ~spread^k
    const auto merge_valid = [&](const Cluster& merged) {
        const int k = static_cast<int>(merged.members.size());
        if (k <= 2) return true;
        const double spread = cluster_spread(merged);
        const double bound = scale * std::pow(4.0 * spread + 1e-13, k);
        return std::abs(horner(c, merged.centroid)) <= bound;
    };

    bool changed = true;
    while (changed) {
        changed = false;
        double best_dist = 0.0;
        int bi = -1, bj = -1;
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            for (std::size_t j = i + 1; j < clusters.size(); ++j) {
                const double dist = std::abs(clusters[i].centroid - clusters[j].centroid);
                const int mult = static_cast<int>(clusters[i].members.size() +
                                                  clusters[j].members.size());
                const double mag =
                    std::max(std::abs(clusters[i].centroid), std::abs(clusters[j].centroid));
                if (dist > merge_radius(mult, mag)) continue;
                if (bi < 0 || dist < best_dist) {
                    best_dist = dist;
                    bi = static_cast<int>(i);
                    bj = static_cast<int>(j);
                }
            }
        }
        if (bi >= 0) {
            Cluster merged;
            merged.members = clusters[static_cast<std::size_t>(bi)].members;
            merged.members.insert(merged.members.end(),
                                  clusters[static_cast<std::size_t>(bj)].members.begin(),
                                  clusters[static_cast<std::size_t>(bj)].members.end());
            merged.centroid = mean_of(merged.members);
            const double dist = std::abs(clusters[static_cast<std::size_t>(bi)].centroid -
                                         clusters[static_cast<std::size_t>(bj)].centroid);
            if (dist <= cluster_tol || merge_valid(merged)) {
                clusters[static_cast<std::size_t>(bi)] = merged;
                clusters.erase(clusters.begin() + bj);
                changed = true;
            } else {
                // keep the pair apart: widen their distance bookkeeping by
                // removing them from future adaptive merges via no-op (the
                // residual check will keep failing); break to avoid a loop
                break;
            }
        }
    }

    std::vector<RootCluster> out;
    out.reserve(clusters.size());
    for (const Cluster& cl : clusters)
        out.push_back({CxApprox(cl.centroid), static_cast<int>(cl.members.size())});
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.root.re() != b.root.re()) return a.root.re() < b.root.re();
        return a.root.im() < b.root.im();
    });
    return out;
}

std::vector<RootCluster> poly_roots(const RatPoly& coeffs, double cluster_tol) {
    std::vector<Cx> c;
    c.reserve(coeffs.size());
    for (const Rat& x : coeffs) c.emplace_back(to_double(x), 0.0);
    return poly_roots(c, cluster_tol);
}

}  // namespace waring
