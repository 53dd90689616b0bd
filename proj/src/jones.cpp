#include "chiroptics/jones.hpp"

#include <cmath>

#include "chiroptics/errors.hpp"

namespace chiroptics {

namespace {

bool finite(const std::complex<double>& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Attenuation-and-phase factor for one circular component.
std::complex<double> slab_factor(const std::complex<double>& n, double length,
                                 double lambda_vac) {
    const double arg = 2.0 * kPi * length / lambda_vac;
    // exp(-arg*chi) * exp(-i*arg*n')
    return std::exp(std::complex<double>(-arg * n.imag(), -arg * n.real()));
}

} // namespace

void validate(const JonesField& field) {
    if (!finite(field.e_x) || !finite(field.e_y))
        throw validation_error("JonesField: amplitudes must be finite");
    if (!(field.omega > 0.0) || !std::isfinite(field.omega))
        throw validation_error("JonesField: omega must be finite and > 0");
}

void validate(const ChiralSlab& slab) {
    if (!finite(slab.n_l) || !finite(slab.n_r))
        throw validation_error("ChiralSlab: indices must be finite");
    if (slab.n_l.imag() < 0.0 || slab.n_r.imag() < 0.0)
        throw validation_error("ChiralSlab: Im(n) must be >= 0 (absorbing medium)");
    if (!(slab.length >= 0.0) || !std::isfinite(slab.length))
        throw validation_error("ChiralSlab: length must be finite and >= 0");
    if (!(slab.lambda_vac > 0.0) || !std::isfinite(slab.lambda_vac))
        throw validation_error("ChiralSlab: lambda_vac must be finite and > 0");
}

CircularAmplitudes circular_decompose(const JonesField& field) {
    const std::complex<double> i{0.0, 1.0};
    return {0.5 * (field.e_x - i * field.e_y), 0.5 * (field.e_x + i * field.e_y)};
}

JonesField circular_compose(const CircularAmplitudes& amps, double omega) {
    const std::complex<double> i{0.0, 1.0};
    return {amps.a_r + amps.a_l, i * (amps.a_r - amps.a_l), omega};
}

JonesField propagate(const JonesField& field, const ChiralSlab& slab) {
    validate(field);
    validate(slab);
    CircularAmplitudes amps = circular_decompose(field);
    amps.a_r *= slab_factor(slab.n_r, slab.length, slab.lambda_vac);
    amps.a_l *= slab_factor(slab.n_l, slab.length, slab.lambda_vac);
    return circular_compose(amps, field.omega);
}

double rotation_angle(const ChiralSlab& slab) {
    validate(slab);
    return kPi * (slab.n_l.real() - slab.n_r.real()) * slab.length / slab.lambda_vac;
}

double rotatory_power(const ChiralSlab& slab) {
    validate(slab);
    if (slab.length == 0.0)
        throw validation_error("rotatory power undefined at L = 0");
    return (kPi / slab.lambda_vac) * (slab.n_l.real() - slab.n_r.real());
}

double ellipticity_angle(const ChiralSlab& slab) {
    validate(slab);
    const double chi_prime = 0.5 * (slab.n_r.imag() - slab.n_l.imag());
    return std::atan(std::tanh(2.0 * kPi * chi_prime * slab.length / slab.lambda_vac));
}

double ellipticity_angle_small(const ChiralSlab& slab) {
    validate(slab);
    return (kPi / slab.lambda_vac) * (slab.n_r.imag() - slab.n_l.imag()) * slab.length;
}

PolarizationReadout ellipse_axes(const JonesField& field_in, const ChiralSlab& slab) {
    validate(field_in);
    const CircularAmplitudes in = circular_decompose(field_in);
    const double mr = std::abs(in.a_r);
    const double ml = std::abs(in.a_l);
    if (std::abs(mr - ml) > 1e-9 * (mr + ml))
        throw validation_error("ellipse_axes: input must be linearly polarized "
                               "(|a_r| == |a_l|)");

    const JonesField out = propagate(field_in, slab);
    const CircularAmplitudes amps = circular_decompose(out);
    const double ar = std::abs(amps.a_r);
    const double al = std::abs(amps.a_l);

    PolarizationReadout readout;
    readout.delta = rotation_angle(slab);
    readout.major_axis = al + ar;
    readout.minor_axis = al - ar;  // sign tracks which circular component survives
    readout.psi = std::atan2(readout.minor_axis, readout.major_axis);
    return readout;
}

double polarization_azimuth(const JonesField& field) {
    validate(field);
    const double s1 = std::norm(field.e_x) - std::norm(field.e_y);
    const double s2 = 2.0 * (std::conj(field.e_x) * field.e_y).real();
    // math-convention azimuth is 0.5*atan2(s2, s1); clockwise-positive is its negative
    double delta = -0.5 * std::atan2(s2, s1);
    if (delta <= -0.5 * kPi) delta += kPi;
    return delta;
}

double field_ellipticity_angle(const JonesField& field) {
    const CircularAmplitudes amps = circular_decompose(field);
    const double ar = std::abs(amps.a_r);
    const double al = std::abs(amps.a_l);
    if (ar + al == 0.0) return 0.0;
    return std::atan((al - ar) / (al + ar));
}

double intensity(const JonesField& field) {
    return std::norm(field.e_x) + std::norm(field.e_y);
}

} // namespace chiroptics
