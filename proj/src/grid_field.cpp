#include "frakgeo/grid_field.hpp"

#include <cmath>
#include <limits>

namespace frakgeo {

Lattice::Lattice(ChartSpec chart, std::vector<double> upper, std::vector<int> points)
    : chart_(std::move(chart)) {
    const int d = chart_.dim();
    if (static_cast<int>(upper.size()) != d || static_cast<int>(points.size()) != d)
        throw MismatchError("lattice spec must give one upper bound and point count per axis");
    axes_.reserve(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a)
        axes_.emplace_back(chart_.terminal(a), upper[static_cast<std::size_t>(a)],
                           points[static_cast<std::size_t>(a)]);
    strides_.assign(static_cast<std::size_t>(d), 1);
    for (int a = d - 2; a >= 0; --a)
        strides_[static_cast<std::size_t>(a)] =
            strides_[static_cast<std::size_t>(a + 1)] *
            static_cast<std::size_t>(axes_[static_cast<std::size_t>(a + 1)].count);
    count_ = strides_[0] * static_cast<std::size_t>(axes_[0].count);
}

void Lattice::node_coords(std::size_t linear, std::span<double> u) const {
    for (int a = 0; a < dim(); ++a)
        u[static_cast<std::size_t>(a)] = axis(a).coord(node_index(linear, a));
}

std::vector<double> Lattice::node_coords(std::size_t linear) const {
    std::vector<double> u(static_cast<std::size_t>(dim()));
    node_coords(linear, u);
    return u;
}

GridField::GridField(Lattice lattice, std::vector<double> values)
    : lat_(std::move(lattice)), v_(std::move(values)) {
    if (v_.size() != lat_.node_count())
        throw MismatchError("value array does not match the lattice");
}

GridField::GridField(Lattice lattice, double fill)
    : lat_(std::move(lattice)), v_(lat_.node_count(), fill) {}

GridField GridField::sample(const Lattice& lattice,
                            const std::function<double(std::span<const double>)>& fn) {
    GridField g(lattice);
    std::vector<double> u(static_cast<std::size_t>(lattice.dim()));
    for (std::size_t i = 0; i < lattice.node_count(); ++i) {
        lattice.node_coords(i, u);
        try {
            g.v_[i] = fn(u);
        } catch (const SingularityError&) {
            g.v_[i] = std::numeric_limits<double>::quiet_NaN();
        }
    }
    return g;
}

double GridField::eval(std::span<const double> u) const {
    const int d = lat_.dim();
    if (static_cast<int>(u.size()) != d)
        throw MismatchError("evaluation point dimension mismatch");
    std::vector<int> base(static_cast<std::size_t>(d));
    std::vector<double> w(static_cast<std::size_t>(d));
    for (int a = 0; a < d; ++a) {
        const AxisGrid& g = lat_.axis(a);
        double c = (u[static_cast<std::size_t>(a)] - g.start) / g.step;
        double span = static_cast<double>(g.count - 1);
        if (c < -1e-9 || c > span + 1e-9)
            throw DomainError("interpolation point lies outside the lattice");
        c = std::min(std::max(c, 0.0), span);
        int i0 = std::min(static_cast<int>(c), g.count - 2);
        base[static_cast<std::size_t>(a)] = i0;
        w[static_cast<std::size_t>(a)] = c - static_cast<double>(i0);
    }
    double acc = 0.0;
    const int corners = 1 << d;
    for (int mask = 0; mask < corners; ++mask) {
        double wt = 1.0;
        std::size_t linear = 0;
        for (int a = 0; a < d; ++a) {
            int bit = (mask >> a) & 1;
            wt *= bit ? w[static_cast<std::size_t>(a)] : 1.0 - w[static_cast<std::size_t>(a)];
            linear += lat_.stride(a) *
                      static_cast<std::size_t>(base[static_cast<std::size_t>(a)] + bit);
        }
        if (wt != 0.0) acc += wt * v_[linear];
    }
    return acc;
}

GridField GridField::caputo_partial(int axis, FractionalOrder alpha) const {
    GridField out(lat_);
    const AxisGrid& g = lat_.axis(axis);
    const std::size_t stride = lat_.stride(axis);
    const int P = g.count;
    std::vector<double> line(static_cast<std::size_t>(P));
    std::vector<double> dline(static_cast<std::size_t>(P));
    for (std::size_t base = 0; base < lat_.node_count(); ++base) {
        if (lat_.node_index(base, axis) != 0) continue;
        for (int k = 0; k < P; ++k)
            line[static_cast<std::size_t>(k)] = v_[base + stride * static_cast<std::size_t>(k)];
        caputo_line_derivative(g, line, alpha, dline);
        for (int k = 0; k < P; ++k)
            out.v_[base + stride * static_cast<std::size_t>(k)] = dline[static_cast<std::size_t>(k)];
    }
    return out;
}

GridField GridField::operator-() const { return -1.0 * *this; }

namespace {
void require_same(const GridField& a, const GridField& b) {
    if (!(a.lattice() == b.lattice()))
        throw MismatchError("grid fields live on different lattices");
}
} // namespace

GridField operator+(const GridField& a, const GridField& b) {
    require_same(a, b);
    GridField r = a;
    for (std::size_t i = 0; i < r.lattice().node_count(); ++i) r.value(i) += b.value(i);
    return r;
}

GridField operator-(const GridField& a, const GridField& b) {
    require_same(a, b);
    GridField r = a;
    for (std::size_t i = 0; i < r.lattice().node_count(); ++i) r.value(i) -= b.value(i);
    return r;
}

GridField operator*(const GridField& a, const GridField& b) {
    require_same(a, b);
    GridField r = a;
    for (std::size_t i = 0; i < r.lattice().node_count(); ++i) r.value(i) *= b.value(i);
    return r;
}

GridField operator*(double s, const GridField& f) {
    GridField r = f;
    for (std::size_t i = 0; i < r.lattice().node_count(); ++i) r.value(i) *= s;
    return r;
}

double max_abs_interior(const GridField& f, InteriorMask mask) {
    double m = 0.0;
    for (std::size_t i = 0; i < f.lattice().node_count(); ++i) {
        if (!mask.contains(f.lattice(), i)) continue;
        double v = f.value(i);
        if (std::isnan(v)) continue;
        m = std::max(m, std::fabs(v));
    }
    return m;
}

std::size_t interior_count(const Lattice& lat, InteriorMask mask) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < lat.node_count(); ++i)
        if (mask.contains(lat, i)) ++c;
    return c;
}

} // namespace frakgeo
