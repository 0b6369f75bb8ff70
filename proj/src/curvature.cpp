#include "mms/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace mms {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_integer(double x) { return x == std::floor(x); }

void check_profile_domain(double K, double N, double t) {
    if (t < 0.0) throw std::domain_error("s_profile: negative t");
    if (K != 0.0 && N <= 1.0) throw std::domain_error("s_profile: N must exceed 1 when K != 0");
    if (K > 0.0 && t > conjugate_radius(K, N) * (1.0 + 1e-12))
        throw std::domain_error("s_profile: t beyond the conjugate radius");
}

// definite integrals over [0,u] of sin^m and sinh^m, by the standard
// reduction formulas
double int_sin_pow(double u, long m) {
    if (m == 0) return u;
    if (m == 1) return 1.0 - std::cos(u);
    return (-std::pow(std::sin(u), m - 1) * std::cos(u)) / m +
           (static_cast<double>(m - 1) / m) * int_sin_pow(u, m - 2);
}

double int_sinh_pow(double u, long m) {
    if (m == 0) return u;
    if (m == 1) return std::cosh(u) - 1.0;
    return (std::pow(std::sinh(u), m - 1) * std::cosh(u)) / m -
           (static_cast<double>(m - 1) / m) * int_sinh_pow(u, m - 2);
}

double adaptive_simpson(double a, double b, double fa, double fm, double fb, double whole,
                        double tol, int depth, const auto& f) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::fabs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(a, m, fa, flm, fm, left, tol / 2.0, depth - 1, f) +
           adaptive_simpson(m, b, fm, frm, fb, right, tol / 2.0, depth - 1, f);
}

}  // namespace

double conjugate_radius(double K, double N) {
    if (K <= 0.0) return kInf;
    return std::numbers::pi * std::sqrt((N - 1.0) / K);
}

double s_profile(double K, double N, double t) {
    check_profile_domain(K, N, t);
    if (K == 0.0) return std::pow(t, N - 1.0);
    // normalized so the K -> 0 limit recovers t^{N-1}
    const double a = std::sqrt(std::fabs(K) / (N - 1.0));
    if (K > 0.0) return std::pow(std::sin(a * t) / a, N - 1.0);
    return std::pow(std::sinh(a * t) / a, N - 1.0);
}

double volume_profile(double K, double N, double r) {
    check_profile_domain(K, N, r);
    if (r == 0.0) return 0.0;
    if (K == 0.0) return std::pow(r, N) / N;

    const double a = std::sqrt(std::fabs(K) / (N - 1.0));
    if (is_integer(N)) {
        const long m = static_cast<long>(N) - 1;
        return (K > 0.0 ? int_sin_pow(a * r, m) : int_sinh_pow(a * r, m)) / std::pow(a, N);
    }
    auto f = [&](double t) { return s_profile(K, N, t); };
    const double fa = f(0.0), fb = f(r), fm = f(r / 2.0);
    const double whole = r / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(0.0, r, fa, fm, fb, whole, 1e-10, 48, f);
}

BGReport bishop_gromov_test(const Space& space, double K, double N, double tolerance,
                            const BGOptions& opts) {
    BGReport rep;
    rep.tolerance = tolerance;
    if (space.size() < 2) return rep;

    std::vector<double> radii = opts.radii;
    if (radii.empty()) {
        const double lo = space.resolution(), hi = space.diameter();
        const std::size_t count = 16;
        for (std::size_t i = 0; i < count; ++i)
            radii.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
    }
    std::vector<std::size_t> centers = opts.centers;
    if (centers.empty())
        for (std::size_t i = 0; i < space.size(); ++i) centers.push_back(i);

    for (std::size_t c : centers) {
        double prev_ratio = -1.0, prev_r = 0.0;
        for (double r : radii) {
            const double ratio = space.ball_mass(c, r, true) / volume_profile(K, N, r);
            if (prev_ratio >= 0.0 && ratio > prev_ratio * (1.0 + tolerance))
                rep.violations.push_back({c, prev_r, r, prev_ratio, ratio});
            prev_ratio = ratio;
            prev_r = r;
        }
    }
    return rep;
}

long net_cardinality_bound(double K, double N, double D, double epsilon) {
    if (epsilon <= 0.0 || epsilon > 2.0 * D)
        throw std::domain_error("net_cardinality_bound: epsilon out of (0, 2D]");
    const double ratio = volume_profile(K, N, D) / volume_profile(K, N, epsilon / 2.0);
    return static_cast<long>(std::floor(ratio * (1.0 + 1e-12)));
}

long intersection_degree_bound(double K, double N, double epsilon) {
    if (epsilon <= 0.0) throw std::domain_error("intersection_degree_bound: nonpositive epsilon");
    const double ratio = volume_profile(K, N, 4.5 * epsilon) /
                         volume_profile(K, N, epsilon / 2.0);
    return static_cast<long>(std::ceil(ratio * (1.0 - 1e-12)));
}

long intersection_degree_bound_uniform(double K, double N, double D, std::size_t grid_size) {
    const double hi = 2.0 * D / 9.0;
    const double lo = hi / 1024.0;
    double best = 0.0;
    for (std::size_t i = 0; i < grid_size; ++i) {
        const double eps = lo * std::pow(hi / lo, static_cast<double>(i) / (grid_size - 1));
        best = std::max(best, volume_profile(K, N, 4.5 * eps) /
                                  volume_profile(K, N, eps / 2.0));
    }
    return static_cast<long>(std::ceil(best * (1.0 - 1e-12)));
}

long same_pattern_bound(double K, double N, double C, double epsilon) {
    if (C < 1.0) throw std::domain_error("same_pattern_bound: C must be >= 1");
    const double k = std::ceil(C);
    const double nprime = std::ceil(volume_profile(K, N, (4.0 * k + 1.0) * epsilon / 2.0) /
                                    volume_profile(K, N, epsilon / 2.0) * (1.0 - 1e-12));
    return 2 * (static_cast<long>(nprime) - 1);
}

BoundsReport bounds_report(double K, double N, double D, double epsilon, double C) {
    return BoundsReport{net_cardinality_bound(K, N, D, epsilon),
                        intersection_degree_bound(K, N, epsilon),
                        same_pattern_bound(K, N, C, epsilon), epsilon, C};
}

double distortion_coefficient(double K, double N, double t, double d,
                              bool squared_distance_exponent) {
    if (t < 0.0 || t > 1.0) throw std::domain_error("distortion_coefficient: t out of [0,1]");
    if (d < 0.0) throw std::domain_error("distortion_coefficient: negative distance");
    if (t == 0.0) return 1.0;
    if (std::isinf(N)) {
        const double dd = squared_distance_exponent ? d * d : d;
        return std::exp(K / 6.0 * (1.0 - t * t) * dd);
    }
    if (N == 1.0) return K > 0.0 ? kInf : 1.0;
    if (K == 0.0) return 1.0;
    const double alpha = std::sqrt(std::fabs(K) / (N - 1.0)) * d;
    if (K > 0.0) {
        if (alpha > std::numbers::pi) return kInf;
        if (alpha == 0.0) return 1.0;
        return std::pow(std::sin(t * alpha) / (t * std::sin(alpha)), N - 1.0);
    }
    if (alpha == 0.0) return 1.0;
    return std::pow(std::sinh(t * alpha) / (t * std::sinh(alpha)), N - 1.0);
}

namespace {

// symmetric Jacobi eigenvalue sweep, enough for the tiny (n <= 3)
// forms arising here
double min_eigenvalue(std::vector<double> a, std::size_t n) {
    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p * n + q] * a[p * n + q];
        if (off < 1e-24) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a[p * n + q]) < 1e-18) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * a[p * n + q]);
                const double sign = theta >= 0.0 ? 1.0 : -1.0;
                const double tt = sign / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(tt * tt + 1.0), s = tt * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k * n + p], akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p * n + k], aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
    }
    double mn = a[0];
    for (std::size_t i = 1; i < n; ++i) mn = std::min(mn, a[i * n + i]);
    return mn;
}

}  // namespace

double weighted_euclidean_ricci(const ScalarField& V, double N_eff,
                                const std::vector<std::size_t>& query) {
    const std::size_t dim = V.shape.size();
    if (query.size() != dim) throw std::invalid_argument("ricci: query dimension mismatch");
    if (!std::isinf(N_eff) && N_eff <= static_cast<double>(dim))
        throw std::domain_error("ricci: N_eff must exceed the ambient dimension");
    for (std::size_t k = 0; k < dim; ++k)
        if (query[k] == 0 || query[k] + 1 >= V.shape[k])
            throw std::domain_error("ricci: query on the grid boundary");

    std::vector<std::size_t> strides(dim, 1);
    for (std::size_t k = dim - 1; k-- > 0;) strides[k] = strides[k + 1] * V.shape[k + 1];
    std::size_t base = 0;
    for (std::size_t k = 0; k < dim; ++k) base += query[k] * strides[k];
    const double h = V.spacing;
    auto at = [&](std::ptrdiff_t off) { return V.values[static_cast<std::size_t>(
        static_cast<std::ptrdiff_t>(base) + off)]; };

    std::vector<double> grad(dim), hess(dim * dim);
    for (std::size_t k = 0; k < dim; ++k) {
        const std::ptrdiff_t sk = static_cast<std::ptrdiff_t>(strides[k]);
        grad[k] = (at(sk) - at(-sk)) / (2.0 * h);
        hess[k * dim + k] = (at(sk) - 2.0 * at(0) + at(-sk)) / (h * h);
        for (std::size_t l = k + 1; l < dim; ++l) {
            const std::ptrdiff_t sl = static_cast<std::ptrdiff_t>(strides[l]);
            const double v =
                (at(sk + sl) - at(sk - sl) - at(-sk + sl) + at(-sk - sl)) / (4.0 * h * h);
            hess[k * dim + l] = v;
            hess[l * dim + k] = v;
        }
    }

    if (!std::isinf(N_eff)) {
        const double denom = N_eff - static_cast<double>(dim);
        for (std::size_t k = 0; k < dim; ++k)
            for (std::size_t l = 0; l < dim; ++l)
                hess[k * dim + l] -= grad[k] * grad[l] / denom;
    }
    return min_eigenvalue(hess, dim);
}

CdAhlforsBound cd_ahlfors_bound(double K, double N, double D, std::size_t grid_size) {
    if (K < 0.0) throw std::domain_error("cd_ahlfors_bound: requires K >= 0");
    CdAhlforsBound out;
    out.c1_note = "lower constant scales with the total mass of the space; "
                  "see cd_ahlfors_empirical_C1";
    if (K == 0.0) {
        out.C2 = 1.0 / N;
        return out;
    }
    double sup = 0.0;
    for (std::size_t i = 1; i <= grid_size; ++i) {
        const double r = D * static_cast<double>(i) / grid_size;
        sup = std::max(sup, volume_profile(K, N, r) / std::pow(r, N));
    }
    // the ratio peaks at r -> 0 where it tends to 1/N
    out.C2 = std::max(sup, 1.0 / N);
    return out;
}

double cd_ahlfors_empirical_C1(const Space& space, double N, const std::vector<double>& radii) {
    double c1 = kInf;
    for (std::size_t x = 0; x < space.size(); ++x)
        for (double r : radii)
            c1 = std::min(c1, space.ball_mass(x, r, true) / std::pow(r, N));
    return c1;
}

}  // namespace mms
