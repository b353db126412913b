#include "mcshane/kernel.hpp"
#include "mcshane/errors.hpp"

#include <cmath>

namespace mcshane {

namespace {

constexpr double kSingularMargin = 1e-3;   // guard radius around poles / branch points
constexpr double kAtanhFormLimit = 1.0 - 1e-8;

void require_finite(complex_t v, const char* who) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw std::domain_error(std::string(who) + ": result is not finite");
}

} // namespace

complex_t principal_log(complex_t w) {
    if (w.real() == 0.0 && w.imag() == 0.0)
        throw pole_error("principal_log: argument is zero");
    // fold -0 imaginary parts onto the +0 side so the negative real axis
    // maps to Im = +pi, keeping Im in (-pi, pi]
    double im = (w.imag() == 0.0) ? +0.0 : w.imag();
    complex_t r(std::log(std::abs(w)), std::atan2(im, w.real()));
    require_finite(r, "principal_log");
    return r;
}

complex_t principal_atanh(complex_t w) {
    if (w.imag() == 0.0 && (w.real() == 1.0 || w.real() == -1.0))
        throw pole_error("principal_atanh: argument is a branch point (+1 or -1)");
    if (std::abs(w) < 0.5) {
        // away from the branch cuts; library atanh is accurate for small args
        complex_t r = std::atanh(w);
        require_finite(r, "principal_atanh");
        return r;
    }
    // half-log form inherits Im in (-pi/2, pi/2] from principal_log
    complex_t r = 0.5 * principal_log((1.0 + w) / (1.0 - w));
    require_finite(r, "principal_atanh");
    return r;
}

complex_t g_func(complex_t x, complex_t y, complex_t z, GsForm form) {
    const complex_t E = std::exp(y + z);
    const complex_t den = std::cosh(x) + E;
    if (std::abs(den) < kSingularMargin)
        throw singular_configuration("g_func: atanh-form argument near a pole");
    const complex_t arg = std::sinh(x) / den;
    if (std::abs(arg - 1.0) < kSingularMargin || std::abs(arg + 1.0) < kSingularMargin)
        throw singular_configuration("g_func: argument near a branch point");
    const complex_t num_log = std::exp(x) + E;
    const complex_t den_log = std::exp(-x) + E;
    if (std::abs(num_log) < kSingularMargin || std::abs(den_log) < kSingularMargin)
        throw singular_configuration("g_func: log-form argument near a pole");

    complex_t r;
    if (form == GsForm::atanh_form ||
        (form == GsForm::automatic && std::abs(arg) <= kAtanhFormLimit)) {
        r = 2.0 * principal_atanh(arg);
    } else {
        r = principal_log(num_log / den_log);
    }
    require_finite(r, "g_func");
    return r;
}

complex_t s_func(complex_t x, complex_t y, complex_t z, GsForm form) {
    const complex_t den = std::cosh(z) + std::cosh(x) * std::cosh(y);
    if (std::abs(den) < kSingularMargin)
        throw singular_configuration("s_func: atanh-form argument near a pole");
    const complex_t arg = std::sinh(x) * std::sinh(y) / den;
    if (std::abs(arg - 1.0) < kSingularMargin || std::abs(arg + 1.0) < kSingularMargin)
        throw singular_configuration("s_func: argument near a branch point");
    const complex_t num_log = std::cosh(z) + std::cosh(x + y);
    const complex_t den_log = std::cosh(z) + std::cosh(x - y);
    if (std::abs(num_log) < kSingularMargin || std::abs(den_log) < kSingularMargin)
        throw singular_configuration("s_func: log-form argument near a pole");

    complex_t r;
    if (form == GsForm::atanh_form ||
        (form == GsForm::automatic && std::abs(arg) <= kAtanhFormLimit)) {
        r = principal_atanh(arg);
    } else {
        r = 0.5 * principal_log(num_log / den_log);
    }
    require_finite(r, "s_func");
    return r;
}

double length_from_trace(double t) {
    if (!(t >= 2.0))
        throw std::domain_error("length_from_trace: trace must be >= 2");
    return 2.0 * std::acosh(t / 2.0);
}

complex_t mirzakhani_d(complex_t a, complex_t b, complex_t c) {
    return 2.0 * g_func(a / 2.0, b / 2.0, c / 2.0);
}

complex_t mirzakhani_r(complex_t a, complex_t b, complex_t c) {
    return a / 2.0 - 2.0 * s_func(a / 2.0, c / 2.0, b / 2.0);
}

} // namespace mcshane
