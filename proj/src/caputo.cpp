#include "frakgeo/caputo.hpp"

#include <cmath>
#include <vector>

namespace frakgeo {

namespace {

bool near_nonpositive_integer(double x) {
    if (x > 0.5) return false;
    double r = std::round(x);
    return r <= 0.0 && std::fabs(x - r) < 1e-12;
}

} // namespace

double caputo_gamma_factor(double p, FractionalOrder alpha) {
    if (p < 0.0) throw DomainError("caputo power rule requires exponent p >= 0");
    if (alpha.is_integer()) return p; // Gamma(p+1)/Gamma(p) exactly
    double denom_arg = p + 1.0 - alpha.value();
    if (near_nonpositive_integer(denom_arg))
        throw DomainError("gamma pole: p + 1 - alpha is a non-positive integer");
    if (denom_arg <= 0.0)
        throw DomainError("gamma argument p + 1 - alpha must be positive");
    return std::tgamma(p + 1.0) / std::tgamma(denom_arg);
}

double caputo_power(double p, FractionalOrder alpha, double x_rel) {
    if (p < 0.0) throw DomainError("caputo_power requires p >= 0");
    if (x_rel < 0.0) throw DomainError("caputo_power requires x_rel >= 0");
    if (p == 0.0) return 0.0;
    double q = p - alpha.value();
    if (x_rel == 0.0) {
        if (q < 0.0)
            throw SingularityError("derivative of (x-x0)^p singular at the terminal for p < alpha");
        if (q == 0.0) return caputo_gamma_factor(p, alpha);
        return 0.0;
    }
    return caputo_gamma_factor(p, alpha) * std::pow(x_rel, q);
}

double caputo_quadrature(const AxisGrid& grid, std::span<const double> f,
                         FractionalOrder alpha, double at) {
    if (static_cast<int>(f.size()) != grid.count)
        throw MismatchError("sample array does not match the grid");
    int k = grid.index_of(at);
    if (k == 0) return 0.0;
    double h = grid.step;
    if (alpha.is_integer()) {
        // local limit: one-sided backward difference at the node
        return (f[static_cast<std::size_t>(k)] - f[static_cast<std::size_t>(k - 1)]) / h;
    }
    double a = alpha.value();
    double scale = std::pow(h, -a) / std::tgamma(2.0 - a);
    double acc = 0.0;
    for (int j = 0; j < k; ++j) {
        double m1 = static_cast<double>(k - j);
        double m0 = static_cast<double>(k - j - 1);
        double w = std::pow(m1, 1.0 - a) - std::pow(m0, 1.0 - a);
        acc += w * (f[static_cast<std::size_t>(j + 1)] - f[static_cast<std::size_t>(j)]);
    }
    return scale * acc;
}

double rl_left_reference(const AxisGrid& grid, std::span<const double> f,
                         FractionalOrder alpha, double at) {
    double caputo = caputo_quadrature(grid, f, alpha, at);
    if (alpha.is_integer()) return caputo; // boundary term carries 1/Gamma(0) = 0
    double a = alpha.value();
    double rel = at - grid.start;
    if (rel == 0.0)
        throw SingularityError("RL derivative singular at the terminal");
    return caputo + f[0] * std::pow(rel, -a) / std::tgamma(1.0 - a);
}

namespace {

void integer_line_derivative(const AxisGrid& grid, std::span<const double> f,
                             std::span<double> out) {
    int P = grid.count;
    double h = grid.step;
    auto v = [&](int i) { return f[static_cast<std::size_t>(i)]; };
    for (int k = 0; k < P; ++k) {
        double d;
        if (P >= 5 && k >= 2 && k <= P - 3) {
            d = (v(k - 2) - 8.0 * v(k - 1) + 8.0 * v(k + 1) - v(k + 2)) / (12.0 * h);
        } else if (k == 0) {
            d = (-3.0 * v(0) + 4.0 * v(1) - v(2)) / (2.0 * h);
        } else if (k == P - 1) {
            d = (3.0 * v(P - 1) - 4.0 * v(P - 2) + v(P - 3)) / (2.0 * h);
        } else {
            d = (v(k + 1) - v(k - 1)) / (2.0 * h);
        }
        out[static_cast<std::size_t>(k)] = d;
    }
}

} // namespace

void caputo_line_derivative(const AxisGrid& grid, std::span<const double> f,
                            FractionalOrder alpha, std::span<double> out) {
    if (static_cast<int>(f.size()) != grid.count || f.size() != out.size())
        throw MismatchError("line buffers do not match the grid");
    if (alpha.is_integer()) {
        integer_line_derivative(grid, f, out);
        return;
    }
    int P = grid.count;
    double a = alpha.value();
    double scale = std::pow(grid.step, -a) / std::tgamma(2.0 - a);

    // distance-indexed kernel increments: b[m] = m^(1-a) - (m-1)^(1-a)
    std::vector<double> b(static_cast<std::size_t>(P));
    b[0] = 0.0;
    for (int m = 1; m < P; ++m)
        b[static_cast<std::size_t>(m)] =
            std::pow(static_cast<double>(m), 1.0 - a) - std::pow(static_cast<double>(m - 1), 1.0 - a);

    double f0 = f[0];
    if (std::isnan(f0) && P >= 4 && !std::isnan(f[1]) && !std::isnan(f[2]) && !std::isnan(f[3]))
        f0 = 3.0 * f[1] - 3.0 * f[2] + f[3];

    out[0] = 0.0;
    for (int k = 1; k < P; ++k) {
        double acc = 0.0;
        for (int j = 0; j < k; ++j) {
            double lo = (j == 0) ? f0 : f[static_cast<std::size_t>(j)];
            acc += b[static_cast<std::size_t>(k - j)] * (f[static_cast<std::size_t>(j + 1)] - lo);
        }
        out[static_cast<std::size_t>(k)] = scale * acc;
    }
}

} // namespace frakgeo
