#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "frakgeo/errors.hpp"

namespace frakgeo {

/// Order of the left Caputo derivative. Restricted to 0 < alpha <= 1;
/// alpha = 1 is the ordinary (integer) limit and is handled exactly.
class FractionalOrder {
public:
    explicit FractionalOrder(double alpha) : alpha_(alpha) {
        if (!(alpha > 0.0) || alpha > 1.0)
            throw DomainError("fractional order must satisfy 0 < alpha <= 1");
    }
    double value() const { return alpha_; }
    bool is_integer() const { return alpha_ == 1.0; }

    friend bool operator==(FractionalOrder a, FractionalOrder b) {
        return a.alpha_ == b.alpha_;
    }

private:
    double alpha_;
};

/// Local chart on the tangent bundle: n base coordinates x^j followed by
/// n fibre coordinates y^b, each with its own lower Caputo terminal.
/// Axis indices run 0..2n-1; axes [0,n) are horizontal, [n,2n) vertical.
class ChartSpec {
public:
    ChartSpec(int n, std::vector<double> terminals_x, std::vector<double> terminals_y)
        : n_(n) {
        if (n < 1) throw DomainError("chart dimension must be positive");
        if (static_cast<int>(terminals_x.size()) != n ||
            static_cast<int>(terminals_y.size()) != n)
            throw DomainError("terminal arrays must have length n");
        terminal_.reserve(2 * static_cast<std::size_t>(n));
        terminal_.insert(terminal_.end(), terminals_x.begin(), terminals_x.end());
        terminal_.insert(terminal_.end(), terminals_y.begin(), terminals_y.end());
    }

    /// All terminals at the origin (the usual choice).
    explicit ChartSpec(int n)
        : ChartSpec(n, std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)) {}

    int n() const { return n_; }
    int dim() const { return 2 * n_; }
    bool is_horizontal(int axis) const { return axis < n_; }
    bool is_vertical(int axis) const { return axis >= n_; }
    /// Horizontal index i -> vertical axis n+i and back.
    int vertical_axis(int i) const { return n_ + i; }
    int horizontal_index(int axis) const { return axis - n_; }
    double terminal(int axis) const { return terminal_[static_cast<std::size_t>(axis)]; }
    const std::vector<double>& terminals() const { return terminal_; }

    friend bool operator==(const ChartSpec& a, const ChartSpec& b) {
        return a.n_ == b.n_ && a.terminal_ == b.terminal_;
    }

private:
    int n_;
    std::vector<double> terminal_;
};

/// Uniform 1-D grid anchored at a Caputo terminal.
struct AxisGrid {
    double start = 0.0;
    double step = 0.0;
    int count = 0;

    AxisGrid() = default;
    AxisGrid(double start_, double upper, int count_)
        : start(start_), count(count_) {
        if (count_ < 3) throw DomainError("axis grid needs at least 3 points");
        if (!(upper > start_)) throw DomainError("axis upper bound must exceed the terminal");
        step = (upper - start_) / static_cast<double>(count_ - 1);
    }

    double coord(int i) const { return start + static_cast<double>(i) * step; }
    double upper() const { return coord(count - 1); }

    /// Index of an on-grid point; throws DomainError if `x` precedes the
    /// terminal or does not land on a node.
    int index_of(double x) const {
        if (x < start - 1e-12 * (1.0 + std::fabs(start)))
            throw DomainError("point precedes the grid terminal");
        double c = (x - start) / step;
        int i = static_cast<int>(std::lround(c));
        if (i < 0 || i >= count || std::fabs(c - static_cast<double>(i)) > 1e-8)
            throw DomainError("point is off-grid");
        return i;
    }

    friend bool operator==(const AxisGrid& a, const AxisGrid& b) {
        return a.start == b.start && a.step == b.step && a.count == b.count;
    }
};

} // namespace frakgeo
