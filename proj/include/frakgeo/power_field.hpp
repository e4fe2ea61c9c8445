#pragma once

#include <span>
#include <vector>

#include "frakgeo/caputo.hpp"
#include "frakgeo/chart.hpp"

namespace frakgeo {

/// One term coeff * prod_axis (u^axis - terminal^axis)^exponents[axis].
struct Monomial {
    double coeff = 0.0;
    std::vector<double> exponents; // size chart.dim(), each >= 0 at construction
};

/// Finite sum of shifted-power monomials on a chart. Closed under left
/// Caputo differentiation by the power rule, which keeps every derivative
/// of a polynomial Lagrangian exact. Canonical form: terms sorted by
/// exponent vector, equal exponent vectors merged, zero coefficients
/// dropped. Differentiation may push an exponent into (-1, 0); such fields
/// are flagged singular_at_terminal and can only be evaluated strictly
/// inside the domain.
class PowerField {
public:
    PowerField(ChartSpec chart, std::vector<Monomial> terms);

    static PowerField zero(const ChartSpec& chart);
    static PowerField constant(const ChartSpec& chart, double c);
    /// The coordinate function u^axis itself: (u - t)^1 + t.
    static PowerField coordinate(const ChartSpec& chart, int axis);
    /// A single shifted power (u^axis - t)^p.
    static PowerField shifted_power(const ChartSpec& chart, int axis, double p,
                                    double coeff = 1.0);

    const ChartSpec& chart() const { return chart_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool singular_at_terminal() const { return singular_; }
    double max_abs_coeff() const;

    double eval(std::span<const double> u) const;

    /// Monomial-wise left Caputo derivative along one axis.
    PowerField caputo_partial(int axis, FractionalOrder alpha) const;
    /// Ordinary partial derivative (the alpha = 1 limit).
    PowerField classical_partial(int axis) const;

    PowerField operator-() const;
    friend PowerField operator+(const PowerField& a, const PowerField& b);
    friend PowerField operator-(const PowerField& a, const PowerField& b);
    friend PowerField operator*(const PowerField& a, const PowerField& b);
    friend PowerField operator*(double s, const PowerField& f);
    friend PowerField operator*(const PowerField& f, double s) { return s * f; }

private:
    void canonicalize();

    ChartSpec chart_;
    std::vector<Monomial> terms_;
    bool singular_ = false;
};

/// Spec-facing name for the monomial-wise Caputo derivative.
inline PowerField caputo_partial_power(const PowerField& f, int axis,
                                       FractionalOrder alpha) {
    return f.caputo_partial(axis, alpha);
}

} // namespace frakgeo
