#include "frakgeo/power_field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace frakgeo {

namespace {

// Exponents produced along different differentiation orders can differ in
// the last ulp; merging keys are exponents quantized to 1e-12.
std::int64_t exponent_key(double e) { return std::llround(e * 1e12); }

std::vector<std::int64_t> term_key(const Monomial& m) {
    std::vector<std::int64_t> k(m.exponents.size());
    for (std::size_t i = 0; i < m.exponents.size(); ++i) k[i] = exponent_key(m.exponents[i]);
    return k;
}

} // namespace

PowerField::PowerField(ChartSpec chart, std::vector<Monomial> terms)
    : chart_(std::move(chart)), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (static_cast<int>(t.exponents.size()) != chart_.dim())
            throw MismatchError("monomial exponent vector does not match the chart dimension");
    canonicalize();
}

PowerField PowerField::zero(const ChartSpec& chart) { return PowerField(chart, {}); }

PowerField PowerField::constant(const ChartSpec& chart, double c) {
    if (c == 0.0) return zero(chart);
    Monomial m;
    m.coeff = c;
    m.exponents.assign(static_cast<std::size_t>(chart.dim()), 0.0);
    return PowerField(chart, {std::move(m)});
}

PowerField PowerField::coordinate(const ChartSpec& chart, int axis) {
    PowerField f = shifted_power(chart, axis, 1.0);
    double t = chart.terminal(axis);
    if (t != 0.0) f = f + constant(chart, t);
    return f;
}

PowerField PowerField::shifted_power(const ChartSpec& chart, int axis, double p,
                                     double coeff) {
    if (p < 0.0) throw DomainError("shifted power exponent must be >= 0 at construction");
    Monomial m;
    m.coeff = coeff;
    m.exponents.assign(static_cast<std::size_t>(chart.dim()), 0.0);
    m.exponents[static_cast<std::size_t>(axis)] = p;
    return PowerField(chart, {std::move(m)});
}

void PowerField::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Monomial& a, const Monomial& b) {
        return term_key(a) < term_key(b);
    });
    std::vector<Monomial> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && term_key(merged.back()) == term_key(t))
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    terms_.clear();
    singular_ = false;
    for (auto& t : merged) {
        if (t.coeff == 0.0) continue;
        for (double e : t.exponents)
            if (e < 0.0) singular_ = true;
        terms_.push_back(std::move(t));
    }
}

double PowerField::max_abs_coeff() const {
    double m = 0.0;
    for (const auto& t : terms_) m = std::max(m, std::fabs(t.coeff));
    return m;
}

double PowerField::eval(std::span<const double> u) const {
    if (static_cast<int>(u.size()) != chart_.dim())
        throw MismatchError("evaluation point dimension mismatch");
    double acc = 0.0;
    for (const auto& t : terms_) {
        double v = t.coeff;
        for (int ax = 0; ax < chart_.dim(); ++ax) {
            double e = t.exponents[static_cast<std::size_t>(ax)];
            if (exponent_key(e) == 0) continue;
            double rel = u[static_cast<std::size_t>(ax)] - chart_.terminal(ax);
            if (rel < 0.0) {
                if (rel < -1e-12 * (1.0 + std::fabs(chart_.terminal(ax))))
                    throw DomainError("evaluation point precedes a terminal");
                rel = 0.0;
            }
            if (rel == 0.0) {
                if (e < 0.0)
                    throw SingularityError("terminal-singular field evaluated at its terminal");
                v = 0.0;
                break;
            }
            v *= std::pow(rel, e);
        }
        acc += v;
    }
    return acc;
}

PowerField PowerField::caputo_partial(int axis, FractionalOrder alpha) const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        double p = t.exponents[static_cast<std::size_t>(axis)];
        if (exponent_key(p) == 0) continue; // constant along this axis
        if (p < 0.0)
            throw SingularityError(
                "cannot Caputo-differentiate a terminal-singular field along its singular axis");
        Monomial d = t;
        d.coeff = t.coeff * caputo_gamma_factor(p, alpha);
        d.exponents[static_cast<std::size_t>(axis)] = p - alpha.value();
        out.push_back(std::move(d));
    }
    return PowerField(chart_, std::move(out));
}

PowerField PowerField::classical_partial(int axis) const {
    return caputo_partial(axis, FractionalOrder(1.0));
}

PowerField PowerField::operator-() const { return -1.0 * *this; }

PowerField operator+(const PowerField& a, const PowerField& b) {
    if (!(a.chart_ == b.chart_)) throw MismatchError("chart mismatch in field addition");
    std::vector<Monomial> t = a.terms_;
    t.insert(t.end(), b.terms_.begin(), b.terms_.end());
    return PowerField(a.chart_, std::move(t));
}

PowerField operator-(const PowerField& a, const PowerField& b) { return a + (-b); }

PowerField operator*(const PowerField& a, const PowerField& b) {
    if (!(a.chart_ == b.chart_)) throw MismatchError("chart mismatch in field product");
    std::vector<Monomial> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            Monomial m;
            m.coeff = ta.coeff * tb.coeff;
            m.exponents.resize(ta.exponents.size());
            for (std::size_t i = 0; i < m.exponents.size(); ++i)
                m.exponents[i] = ta.exponents[i] + tb.exponents[i];
            out.push_back(std::move(m));
        }
    return PowerField(a.chart_, std::move(out));
}

PowerField operator*(double s, const PowerField& f) {
    std::vector<Monomial> t = f.terms_;
    for (auto& m : t) m.coeff *= s;
    return PowerField(f.chart_, std::move(t));
}

} // namespace frakgeo
