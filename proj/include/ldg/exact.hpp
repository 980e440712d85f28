/// @file exact.hpp
/// @brief Closed-form traveling-wave and trigonometric solutions with the
/// x- and t-derivatives the error norms and residual oracles need.

#pragma once

#include <functional>
#include <vector>

namespace ldg {

/// One traveling component evaluated through the phase s = x - x0 - speed*t.
/// SechPoly is c2*sech^2(beta*s) + c4*sech^4(beta*s); Cosine and Sine are
/// amp*cos(s) and amp*sin(s).
struct WaveComponent {
    enum class Shape { SechPoly, Cosine, Sine };
    Shape shape = Shape::SechPoly;
    double c2 = 0.0;
    double c4 = 0.0;
    double beta = 1.0;
    double amp = 0.0;
    double x0 = 0.0;
    double speed = 0.0;

    /// d^order/ds^order at phase s, order in 0..3.
    double phase_deriv(int order, double s) const;
};

WaveComponent sech_component(double c2, double c4, double beta, double x0, double speed);
WaveComponent cosine_component(double amp, double x0, double speed);
WaveComponent sine_component(double amp, double x0, double speed);

/// Sum of components plus a constant offset.
struct ClosedForm {
    double constant = 0.0;
    std::vector<WaveComponent> components;

    double value(double x, double t) const;
    /// Spatial derivative, order in 1..3.
    double dx(int order, double x, double t) const;
    double dt(double x, double t) const;
    /// Mixed derivative d/dt d^2/dx^2, for the dispersive residual oracle.
    double dt_dxx(double x, double t) const;

    /// x -> value(x, t) closure for projections and error norms.
    std::function<double(double)> at_time(double t) const;
};

} // namespace ldg
