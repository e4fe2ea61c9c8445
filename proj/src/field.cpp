#include "frakgeo/field.hpp"

namespace frakgeo {

GridField Field::sampled(const Lattice& lat) const {
    if (is_grid()) {
        if (!(grid().lattice() == lat))
            throw MismatchError("grid field lives on a different lattice");
        return grid();
    }
    const PowerField& p = power();
    return GridField::sample(lat, [&](std::span<const double> u) { return p.eval(u); });
}

Field Field::caputo_partial(int axis, FractionalOrder alpha) const {
    if (is_power()) return power().caputo_partial(axis, alpha);
    return grid().caputo_partial(axis, alpha);
}

Field Field::operator-() const {
    if (is_power()) return -power();
    return -grid();
}

namespace {

template <class Op>
Field combine(const Field& a, const Field& b, Op op) {
    if (a.is_power() && b.is_power()) return Field(op(a.power(), b.power()));
    const Lattice& lat = a.is_grid() ? a.grid().lattice() : b.grid().lattice();
    return Field(op(a.sampled(lat), b.sampled(lat)));
}

} // namespace

Field operator+(const Field& a, const Field& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}

Field operator-(const Field& a, const Field& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}

Field operator*(const Field& a, const Field& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}

Field operator*(double s, const Field& f) {
    if (f.is_power()) return s * f.power();
    return s * f.grid();
}

} // namespace frakgeo
