#include "ldg/exact.hpp"

#include <cmath>

#include "ldg/check.hpp"

namespace ldg {

double WaveComponent::phase_deriv(int order, double s) const {
    LDG_CHECK(order >= 0 && order <= 3, "derivative order out of range");
    switch (shape) {
        case Shape::Cosine:
            switch (order) {
                case 0: return amp * std::cos(s);
                case 1: return -amp * std::sin(s);
                case 2: return -amp * std::cos(s);
                default: return amp * std::sin(s);
            }
        case Shape::Sine:
            switch (order) {
                case 0: return amp * std::sin(s);
                case 1: return amp * std::cos(s);
                case 2: return -amp * std::sin(s);
                default: return -amp * std::cos(s);
            }
        case Shape::SechPoly:
        default: {
            // g = sech^2(beta s): g' = -2 beta T g with T = tanh(beta s),
            // g'' = beta^2 (4g - 6g^2), g''' = beta^2 g' (4 - 12g).
            const double g = 1.0 / (std::cosh(beta * s) * std::cosh(beta * s));
            const double tgh = std::tanh(beta * s);
            const double g1 = -2.0 * beta * tgh * g;
            const double g2 = beta * beta * (4.0 * g - 6.0 * g * g);
            const double g3 = beta * beta * g1 * (4.0 - 12.0 * g);
            switch (order) {
                case 0: return c2 * g + c4 * g * g;
                case 1: return c2 * g1 + c4 * 2.0 * g * g1;
                case 2: return c2 * g2 + c4 * 2.0 * (g1 * g1 + g * g2);
                default: return c2 * g3 + c4 * (6.0 * g1 * g2 + 2.0 * g * g3);
            }
        }
    }
}

WaveComponent sech_component(double c2, double c4, double beta, double x0, double speed) {
    WaveComponent c;
    c.shape = WaveComponent::Shape::SechPoly;
    c.c2 = c2;
    c.c4 = c4;
    c.beta = beta;
    c.x0 = x0;
    c.speed = speed;
    return c;
}

WaveComponent cosine_component(double amp, double x0, double speed) {
    WaveComponent c;
    c.shape = WaveComponent::Shape::Cosine;
    c.amp = amp;
    c.x0 = x0;
    c.speed = speed;
    return c;
}

WaveComponent sine_component(double amp, double x0, double speed) {
    WaveComponent c;
    c.shape = WaveComponent::Shape::Sine;
    c.amp = amp;
    c.x0 = x0;
    c.speed = speed;
    return c;
}

double ClosedForm::value(double x, double t) const {
    double acc = constant;
    for (const auto& c : components) acc += c.phase_deriv(0, x - c.x0 - c.speed * t);
    return acc;
}

double ClosedForm::dx(int order, double x, double t) const {
    LDG_CHECK(order >= 1 && order <= 3, "derivative order out of range");
    double acc = 0.0;
    for (const auto& c : components) acc += c.phase_deriv(order, x - c.x0 - c.speed * t);
    return acc;
}

double ClosedForm::dt(double x, double t) const {
    double acc = 0.0;
    for (const auto& c : components)
        acc += -c.speed * c.phase_deriv(1, x - c.x0 - c.speed * t);
    return acc;
}

double ClosedForm::dt_dxx(double x, double t) const {
    double acc = 0.0;
    for (const auto& c : components)
        acc += -c.speed * c.phase_deriv(3, x - c.x0 - c.speed * t);
    return acc;
}

std::function<double(double)> ClosedForm::at_time(double t) const {
    return [form = *this, t](double x) { return form.value(x, t); };
}

} // namespace ldg
