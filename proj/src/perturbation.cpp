#include "chiroptics/perturbation.hpp"

#include <cmath>
#include <complex>
#include <string>

#include "chiroptics/errors.hpp"

namespace chiroptics {

namespace {

std::array<double, 3> cross(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double rdot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

std::complex<double> cdot_real(const cvec3& a, const std::array<double, 3>& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

void axpy(cvec3& y, const std::complex<double>& s, const std::array<double, 3>& x) {
    for (int j = 0; j < 3; ++j) y[j] += s * x[j];
}

} // namespace

DrivePhasors drive_phasors(const PlaneWaveDrive& drive, const Constants& kc) {
    const std::complex<double> i{0.0, 1.0};
    const std::array<double, 3> sxa = cross(drive.direction, drive.amplitude);
    DrivePhasors ph;
    const std::complex<double> s = -i * (drive.omega / kc.c);
    axpy(ph.e, s, drive.amplitude);
    axpy(ph.b, s, sxa);
    for (int j = 0; j < 3; ++j) {
        ph.dbdt[j] = i * drive.omega * ph.b[j];
        ph.dedt[j] = i * drive.omega * ph.e[j];
    }
    return ph;
}

InducedDipoles induced_dipoles_oracle(const MoleculeModel& model, std::size_t m,
                                      const PlaneWaveDrive& drive, const Constants& kc) {
    if (m >= model.size())
        throw validation_error("induced_dipoles_oracle: state index out of range");
    if (!(drive.omega > 0.0))
        throw validation_error("induced_dipoles_oracle: omega must be > 0");
    const double dir_norm = std::sqrt(rdot(drive.direction, drive.direction));
    if (std::abs(dir_norm - 1.0) > 1e-9)
        throw validation_error("induced_dipoles_oracle: direction must be a unit vector");
    const double amp_norm = std::sqrt(rdot(drive.amplitude, drive.amplitude));
    if (std::abs(rdot(drive.direction, drive.amplitude)) > 1e-9 * (amp_norm + 1e-300))
        throw validation_error("induced_dipoles_oracle: drive must be transverse "
                               "(amplitude perpendicular to direction)");

    const std::size_t n = model.size();
    const double w = drive.omega;
    const std::complex<double> i{0.0, 1.0};
    const std::array<double, 3> sxa = cross(drive.direction, drive.amplitude);

    // resonance guard on the first-order denominators
    for (std::size_t k = 0; k < n; ++k) {
        if (k == m) continue;
        const double w_mk = -model.omega_km(k, m, kc.hbar);
        if (std::abs(std::abs(w_mk) - w) <= 1e-6 * (std::abs(w_mk) + w))
            throw regime_error("induced_dipoles_oracle: omega within the guard band of "
                               "transition (" + std::to_string(k) + "," + std::to_string(m) +
                               "); only valid off resonance");
    }

    // Coefficients of exp(+i w t) and exp(-i w t) in the first-order
    // expectation, isotropically averaged at the contraction:
    //   <m|F|k>(scalar) -> (1/3)(<m|F|k>.<k|G|m>) (field vector)
    cvec3 d_plus{}, d_minus{}, mu_plus{}, mu_minus{};
    for (std::size_t k = 0; k < n; ++k) {
        if (k == m) continue;
        const double w_km = model.omega_km(k, m, kc.hbar);
        const double w_mk = -w_km;
        const std::complex<double> da = 2.0 * kc.hbar * (w_mk - w);  // a_km denominator
        const std::complex<double> db = 2.0 * kc.hbar * (w_mk + w);  // b_km denominator

        // <k|h|m> = -(i w_km / c) <k|p|m>.A + (i w / c) <k|mu|m>.(sigma x A);
        // <k|h*|m> repeats the p term and flips the mu term (A real).
        // The isotropic average replaces each dyad by (1/3)(dot) times the
        // source field vector, so only the channel coefficients survive:
        const std::complex<double> cp_plus = -(i * w_km / kc.c) / da;
        const std::complex<double> cmu_plus = (i * w / kc.c) / da;
        const std::complex<double> cp_minus = -(i * w_km / kc.c) / db;
        const std::complex<double> cmu_minus = -(i * w / kc.c) / db;

        const double p2 = norm2(model.p(m, k));                       // <m|p|k>.<k|p|m>
        const std::complex<double> z = dot(model.p(m, k), model.mu(k, m));
        const std::complex<double> zc = std::conj(z);                 // <m|mu|k>.<k|p|m>

        axpy(d_plus, (p2 / 3.0) * cp_plus, drive.amplitude);
        axpy(d_plus, (z / 3.0) * cmu_plus, sxa);
        axpy(d_minus, (p2 / 3.0) * cp_minus, drive.amplitude);
        axpy(d_minus, (z / 3.0) * cmu_minus, sxa);

        // magnetic dipole: p-sourced channel only (mu^2 dropped)
        axpy(mu_plus, (zc / 3.0) * cp_plus, drive.amplitude);
        axpy(mu_minus, (zc / 3.0) * cp_minus, drive.amplitude);
    }

    // d(t) = sum (+) e^{iwt} + (-) e^{-iwt} + c.c.  ->  phasor 2((+) + conj(-))
    InducedDipoles out;
    for (int j = 0; j < 3; ++j) {
        out.d[j] = 2.0 * (d_plus[j] + std::conj(d_minus[j]));
        out.mu[j] = 2.0 * (mu_plus[j] + std::conj(mu_minus[j]));
    }
    return out;
}

} // namespace chiroptics
