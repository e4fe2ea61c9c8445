#pragma once

#include <variant>

#include "frakgeo/grid_field.hpp"
#include "frakgeo/power_field.hpp"

namespace frakgeo {

/// Scalar field in either representation. Symbolic PowerFields stay
/// symbolic as long as possible (exact power-rule derivatives); anything
/// combined with a GridField is sampled onto that field's lattice first.
class Field {
public:
    /*implicit*/ Field(PowerField f) : v_(std::move(f)) {}
    /*implicit*/ Field(GridField f) : v_(std::move(f)) {}

    bool is_power() const { return std::holds_alternative<PowerField>(v_); }
    bool is_grid() const { return std::holds_alternative<GridField>(v_); }
    const PowerField& power() const { return std::get<PowerField>(v_); }
    const GridField& grid() const { return std::get<GridField>(v_); }

    const ChartSpec& chart() const {
        return is_power() ? power().chart() : grid().lattice().chart();
    }

    double eval(std::span<const double> u) const {
        return is_power() ? power().eval(u) : grid().eval(u);
    }

    /// Representation on a lattice; a GridField must already live on it.
    GridField sampled(const Lattice& lat) const;

    Field caputo_partial(int axis, FractionalOrder alpha) const;

    Field operator-() const;
    friend Field operator+(const Field& a, const Field& b);
    friend Field operator-(const Field& a, const Field& b);
    friend Field operator*(const Field& a, const Field& b);
    friend Field operator*(double s, const Field& f);
    friend Field operator*(const Field& f, double s) { return s * f; }

private:
    std::variant<PowerField, GridField> v_;
};

} // namespace frakgeo
