#pragma once

#include <complex>

namespace mcshane {

using complex_t = std::complex<double>;

// Which closed form of G / S to evaluate.  `automatic` uses the atanh form
// unless the atanh argument has magnitude above 1 - 1e-8, where the log form
// is better conditioned.
enum class GsForm { automatic, atanh_form, log_form };

// Principal complex logarithm with Im in (-pi, pi].  Throws pole_error at 0.
complex_t principal_log(complex_t w);

// Principal inverse hyperbolic tangent with Im in (-pi/2, pi/2].
// Throws pole_error at +1 / -1.
complex_t principal_atanh(complex_t w);

// G(x,y,z) = 2 atanh(sinh x / (cosh x + e^{y+z}))
//          = log((e^x + e^{y+z}) / (e^{-x} + e^{y+z})).
// Twice the gap width seen from the x-side of a pair of pants with half
// boundary lengths (x, y, z), continued to complex arguments.
// Throws singular_configuration within 1e-3 of a pole or branch point of
// either form.
complex_t g_func(complex_t x, complex_t y, complex_t z, GsForm form = GsForm::automatic);

// S(x,y,z) = atanh(sinh x sinh y / (cosh z + cosh x cosh y))
//          = (1/2) log((cosh z + cosh(x+y)) / (cosh z + cosh(x-y))).
// Half the orthogonal projection of the y-side onto the x-side.
complex_t s_func(complex_t x, complex_t y, complex_t z, GsForm form = GsForm::automatic);

// Translation length 2 arccosh(t/2) of a hyperbolic element of trace t >= 2.
// Throws std::domain_error for t < 2.
double length_from_trace(double t);

// Mirzakhani's D and R in terms of G and S:
//   D(a,b,c) = 2 G(a/2, b/2, c/2)
//   R(a,b,c) = a/2 - 2 S(a/2, c/2, b/2)
complex_t mirzakhani_d(complex_t a, complex_t b, complex_t c);
complex_t mirzakhani_r(complex_t a, complex_t b, complex_t c);

} // namespace mcshane
