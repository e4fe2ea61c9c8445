#pragma once

#include <functional>
#include <span>
#include <vector>

#include "frakgeo/caputo.hpp"
#include "frakgeo/chart.hpp"

namespace frakgeo {

/// Rectangular evaluation lattice: one uniform axis grid per coordinate,
/// each anchored at its Caputo terminal (the L1 memory sum needs samples
/// on the whole segment [terminal, u]). Row-major linearization, axis 0
/// slowest.
class Lattice {
public:
    Lattice(ChartSpec chart, std::vector<double> upper, std::vector<int> points);

    const ChartSpec& chart() const { return chart_; }
    int dim() const { return chart_.dim(); }
    const AxisGrid& axis(int a) const { return axes_[static_cast<std::size_t>(a)]; }
    const std::vector<AxisGrid>& axes() const { return axes_; }
    std::size_t node_count() const { return count_; }
    std::size_t stride(int a) const { return strides_[static_cast<std::size_t>(a)]; }

    void node_coords(std::size_t linear, std::span<double> u) const;
    std::vector<double> node_coords(std::size_t linear) const;
    int node_index(std::size_t linear, int a) const {
        return static_cast<int>((linear / stride(a)) % static_cast<std::size_t>(axis(a).count));
    }

    friend bool operator==(const Lattice& a, const Lattice& b) {
        return a.chart_ == b.chart_ && a.axes_ == b.axes_;
    }

private:
    ChartSpec chart_;
    std::vector<AxisGrid> axes_;
    std::vector<std::size_t> strides_;
    std::size_t count_ = 1;
};

/// Scalar field sampled on a Lattice. Nodes where a value is undefined
/// (terminal singularities, degenerate metric inversion) hold NaN; masked
/// reductions and the L1 terminal fix-up deal with them downstream.
class GridField {
public:
    GridField(Lattice lattice, std::vector<double> values);
    explicit GridField(Lattice lattice, double fill = 0.0);

    /// Sample a callable node by node; SingularityError becomes NaN.
    static GridField sample(const Lattice& lattice,
                            const std::function<double(std::span<const double>)>& fn);

    const Lattice& lattice() const { return lat_; }
    std::span<const double> values() const { return v_; }
    double value(std::size_t linear) const { return v_[linear]; }
    double& value(std::size_t linear) { return v_[linear]; }

    /// Multilinear interpolation; clamps roundoff-level overshoot, throws
    /// DomainError for genuinely exterior points.
    double eval(std::span<const double> u) const;

    GridField caputo_partial(int axis, FractionalOrder alpha) const;

    GridField operator-() const;
    friend GridField operator+(const GridField& a, const GridField& b);
    friend GridField operator-(const GridField& a, const GridField& b);
    friend GridField operator*(const GridField& a, const GridField& b);
    friend GridField operator*(double s, const GridField& f);
    friend GridField operator*(const GridField& f, double s) { return s * f; }

private:
    Lattice lat_;
    std::vector<double> v_;
};

inline GridField caputo_partial_grid(const GridField& f, int axis, FractionalOrder alpha) {
    return f.caputo_partial(axis, alpha);
}

/// Node mask skipping `lower` cells at the start and `upper` cells at the
/// end of every axis. Residual maxima use margins of 2 on both sides: the
/// L1 sum has no history at the first nodes and degraded accuracy at the
/// last ones, and integer-limit stencils are one-sided there.
struct InteriorMask {
    int lower = 2;
    int upper = 2;
    bool contains(const Lattice& lat, std::size_t linear) const {
        for (int a = 0; a < lat.dim(); ++a) {
            int i = lat.node_index(linear, a);
            if (i < lower || i >= lat.axis(a).count - upper) return false;
        }
        return true;
    }
};

/// Largest |value| over unmasked, non-NaN nodes.
double max_abs_interior(const GridField& f, InteriorMask mask = {});
/// Number of unmasked nodes contributing to such maxima.
std::size_t interior_count(const Lattice& lat, InteriorMask mask = {});

} // namespace frakgeo
