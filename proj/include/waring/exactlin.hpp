#ifndef WARING_EXACTLIN_HPP
#define WARING_EXACTLIN_HPP

#include "waring/errors.hpp"
#include "waring/scalars.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace waring {

// ---------------------------------------------------------------------------
// Exact linear algebra over Q. All routines are deterministic: pivot choice
// depends only on the input entries (smallest numerator+denominator bit
// size, then lowest row index).
// ---------------------------------------------------------------------------

struct RrefResult {
    RatMatrix R;
    int rank = 0;
    std::vector<int> pivot_cols;
};

RrefResult rref(const RatMatrix& A);

// Basis of the right null space; each vector's first nonzero entry is 1.
// Size of the result is cols(A) - rank(A).
std::vector<RatVector> kernel_basis(const RatMatrix& A);

int rank_of(const RatMatrix& A);

// One exact solution of Ax = b (free variables set to 0), or nullopt when
// the system is inconsistent.
std::optional<RatVector> solve_exact(const RatMatrix& A, const RatVector& b);

// Membership of v in the row space of A, decided exactly.
bool in_row_space(const RatMatrix& A, const RatVector& v);

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q, coefficients in ascending degree.
// Used for Hankel kernels, square-free decomposition and exact root
// deflation. Trailing zeros are trimmed by normalize().
// ---------------------------------------------------------------------------

using RatPoly = std::vector<Rat>;

RatPoly poly_trim(RatPoly p);
int poly_degree(const RatPoly& p);  // -1 for the zero polynomial
Rat poly_eval(const RatPoly& p, const Rat& x);
RatPoly poly_derivative(const RatPoly& p);
RatPoly poly_mul(const RatPoly& a, const RatPoly& b);
RatPoly poly_monic(const RatPoly& p);
// Quotient and remainder of a by b (b nonzero).
std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b);
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);  // monic
bool poly_is_squarefree(const RatPoly& p);

// Yun square-free decomposition: list of (monic factor, multiplicity) with
// p ~ prod factor^multiplicity, factors pairwise coprime and square-free.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);

// ---------------------------------------------------------------------------
// Complex root finding: companion-matrix eigenvalues, one Newton polish per
// root, then deterministic clustering. Multiplicities sum to the degree and
// the returned list is sorted lexicographically by (re, im) of the cluster
// centroid. Clustering merges roots closer than `cluster_tol`; beyond that
// radius a merge is attempted only at the scale machine precision allows
// for a k-fold root (~eps^{1/k}) and must pass a residual check, so exact
// multiple roots collapse while well-separated simple roots never do.
// ---------------------------------------------------------------------------

struct RootCluster {
    CxApprox root;
    int multiplicity = 1;
};

std::vector<RootCluster> poly_roots(const std::vector<Cx>& coeffs,
                                    double cluster_tol = 1e-7);

std::vector<RootCluster> poly_roots(const RatPoly& coeffs,
                                    double cluster_tol = 1e-7);

}  // namespace waring

#endif
