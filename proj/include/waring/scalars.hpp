#ifndef WARING_SCALARS_HPP
#define WARING_SCALARS_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace waring {

// Exact scalars: GMP-backed rationals, canonical by construction
// (gcd(num, den) = 1, den > 0, zero is 0/1).
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

// Approximate scalar standing in for the algebraically closed field.
using Cx = std::complex<double>;

using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using CxMatrix = Eigen::MatrixXcd;
using CxVector = Eigen::VectorXcd;

// Numerical policy knobs, threaded explicitly (no globals).
struct Tolerances {
    double cluster = 1e-7;    // root clusters closer than this merge
    double equality = 1e-9;   // CxApprox equality radius
    double residual = 1e-8;   // reconstruction / interpolation acceptance
    double lstsq = 1e-10;     // complex least-squares target residual
};

// A complex value carrying its own comparison radius. Two CxApprox are
// equal iff |a - b| <= max(tol_a, tol_b).
struct CxApprox {
    Cx z{0.0, 0.0};
    double tol = 1e-9;

    CxApprox() = default;
    CxApprox(double re, double im, double t = 1e-9) : z(re, im), tol(t) {}
    explicit CxApprox(Cx v, double t = 1e-9) : z(v), tol(t) {}

    double re() const { return z.real(); }
    double im() const { return z.imag(); }

    friend bool approx_equal(const CxApprox& a, const CxApprox& b) {
        return std::abs(a.z - b.z) <= std::max(a.tol, b.tol);
    }
};

inline double to_double(const Rat& x) { return x.convert_to<double>(); }

inline Cx to_cx(const Rat& x) { return Cx(to_double(x), 0.0); }

inline CxVector to_cx(const RatVector& v) {
    CxVector out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = to_cx(v(i));
    return out;
}

inline CxMatrix to_cx(const RatMatrix& a) {
    CxMatrix out(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out(i, j) = to_cx(a(i, j));
    return out;
}

// Bit-size proxy used for pivot selection in exact elimination.
std::size_t rat_complexity(const Rat& x);

// Continued-fraction reconstruction of a nearby rational: returns p/q with
// |x - p/q| <= tol * max(1, |x|) and q <= den_bound, or nullopt.
std::optional<Rat> rationalize(double x, double tol = 1e-9,
                               std::uint64_t den_bound = 10000000ull);

// Componentwise reconstruction of a complex value with negligible
// imaginary part; nullopt when |im| exceeds the tolerance.
std::optional<Rat> rationalize(Cx x, double tol = 1e-9,
                               std::uint64_t den_bound = 10000000ull);

// Exact d-th root: returns r with r^d == x when one exists over Q.
std::optional<Rat> rational_root(const Rat& x, int d);

std::string rat_to_string(const Rat& x);       // canonical "num/den"
Rat rat_from_string(const std::string& tok);   // ParseError on bad token

}  // namespace waring

#endif
