#include "chiroptics/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "chiroptics/errors.hpp"

namespace chiroptics {

void validate(const CottonBand& band) {
    if (!(band.lambda0 > 0.0)) throw validation_error("CottonBand: lambda0 must be > 0");
    if (!(band.g >= 0.0)) throw validation_error("CottonBand: g must be >= 0");
    if (!std::isfinite(band.amplitude)) throw validation_error("CottonBand: amplitude must be finite");
}

CottonBand cotton_band_from_transition(double number_density, double rotational_strength,
                                       double lambda0, double gamma0, const Constants& kc) {
    if (!(number_density >= 0.0))
        throw validation_error("cotton_band_from_transition: number density must be >= 0");
    if (!(lambda0 > 0.0))
        throw validation_error("cotton_band_from_transition: lambda0 must be > 0");
    if (!(gamma0 >= 0.0))
        throw validation_error("cotton_band_from_transition: gamma0 must be >= 0");
    CottonBand band;
    band.amplitude = (8.0 * kPi / (3.0 * kc.c * kc.hbar)) * number_density *
                     rotational_strength * lambda0 * lambda0;
    band.lambda0 = lambda0;
    band.g = gamma0 * lambda0 / (4.0 * kPi * kc.c);
    return band;
}

std::complex<double> cotton_lineshape(const CottonBand& band, double lambda) {
    validate(band);
    if (!(lambda > 0.0)) throw validation_error("cotton_lineshape: lambda must be > 0");
    const double d = lambda * lambda - band.lambda0 * band.lambda0;
    const double gl = band.g * lambda * band.lambda0;
    const double denom = d * d + gl * gl;
    return {band.amplitude * d / denom, band.amplitude * gl / denom};
}

double drude_rotation(const std::vector<DrudeBand>& bands, double lambda) {
    if (!(lambda > 0.0)) throw validation_error("drude_rotation: lambda must be > 0");
    double sum = 0.0;
    for (const DrudeBand& b : bands) {
        if (!(b.lambda0 > 0.0)) throw validation_error("drude_rotation: lambda0 must be > 0");
        const double d = lambda * lambda - b.lambda0 * b.lambda0;
        if (std::abs(d) <= 1e-9 * b.lambda0 * b.lambda0)
            throw regime_error("drude_rotation: lambda at a band resonance, the Drude "
                               "form is invalid there");
        sum += b.amplitude / d;
    }
    return sum;
}

double biot_limit(double amplitude, double lambda) {
    if (!(lambda > 0.0)) throw validation_error("biot_limit: lambda must be > 0");
    return amplitude / (lambda * lambda);
}

void validate(const SpectrumGrid& grid) {
    if (grid.abscissa.size() != grid.values.size())
        throw validation_error("SpectrumGrid: abscissa and values must have equal length");
    for (std::size_t i = 0; i + 1 < grid.abscissa.size(); ++i)
        if (!(grid.abscissa[i] < grid.abscissa[i + 1]))
            throw validation_error("SpectrumGrid: abscissa must be strictly increasing at index " +
                                   std::to_string(i));
    for (double x : grid.abscissa)
        if (!(x > 0.0) || !std::isfinite(x))
            throw validation_error("SpectrumGrid: abscissa must be finite and > 0");
}

namespace {

// (2/pi) PV int numer(w')/(w'^2 - a^2) dw' at interior grid points, with
// analytic tail models beyond the grid. tail(a) must return the raw tail
// integral (no 2/pi). Also reports the rms of the tail contributions.
struct PVOptions {
    double (*tail_lo)(double a, const std::vector<double>& w, const std::vector<double>& nu);
    double (*tail_hi)(double a, const std::vector<double>& w, const std::vector<double>& nu);
};

std::vector<double> pv_transform(const std::vector<double>& w, const std::vector<double>& numer,
                                 const PVOptions& opt, double* tail_rms) {
    const std::size_t n = w.size();
    if (n < 8)
        throw regime_error("kramers_kronig: grid too coarse, fewer than 4 points around "
                           "every exclusion window");

    // cumulative trapezoid of numer/(w'^2 - a^2) cannot be precomputed per a,
    // so accumulate directly; n is a few thousand and this is O(n^2).
    std::vector<double> out(n - 2, 0.0);
    double tail_sq = 0.0;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double a = w[i];
        const double dl = a - w[i - 1];
        const double dr = w[i + 1] - a;

        // local window [w_{i-1}, w_{i+1}]: integrand = h(w')/(w' - a),
        // h(w') = numer(w')/(w' + a); odd part analytic, even part from the
        // centered slope of h.
        const double h_m = numer[i - 1] / (w[i - 1] + a);
        const double h_0 = numer[i] / (w[i] + a);
        const double h_p = numer[i + 1] / (w[i + 1] + a);
        const double slope = (h_p - h_m) / (w[i + 1] - w[i - 1]);
        const double local = h_0 * std::log(dr / dl) + slope * (dr + dl);

        double acc = 0.0;
        auto kernel = [a](double wp, double nu) { return nu / (wp * wp - a * a); };
        for (std::size_t j = 0; j + 1 < i; ++j)
            acc += 0.5 * (kernel(w[j], numer[j]) + kernel(w[j + 1], numer[j + 1])) *
                   (w[j + 1] - w[j]);
        for (std::size_t j = i + 1; j + 1 < n; ++j)
            acc += 0.5 * (kernel(w[j], numer[j]) + kernel(w[j + 1], numer[j + 1])) *
                   (w[j + 1] - w[j]);

        const double tails = opt.tail_lo(a, w, numer) + opt.tail_hi(a, w, numer);
        tail_sq += tails * tails;
        out[i - 1] = (2.0 / kPi) * (acc + local + tails);
    }
    if (tail_rms) *tail_rms = (2.0 / kPi) * std::sqrt(tail_sq / static_cast<double>(n - 2));
    return out;
}

double rms(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s / std::max<std::size_t>(v.size(), 1));
}

// Fit Re = a_inf + C / w^2 over the last K points.
double fit_asymptote(const std::vector<double>& w, const std::vector<std::complex<double>>& v) {
    const std::size_t n = w.size();
    const std::size_t K = std::min<std::size_t>(8, n);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = n - K; i < n; ++i) {
        const double x = 1.0 / (w[i] * w[i]);
        const double y = v[i].real();
        sx += x; sy += y; sxx += x * x; sxy += x * y;
    }
    const double kk = static_cast<double>(K);
    const double det = kk * sxx - sx * sx;
    if (det == 0.0) return sy / kk;
    return (sy * sxx - sx * sxy) / det;
}

// tails for numer = w' * Im(w'):  Im ~ Im_1 * (w'/w_1) below, Im ~ Im_N (w_N/w')^2 above
double tail_lo_imag(double a, const std::vector<double>& w, const std::vector<double>& nu) {
    const double w1 = w.front();
    if (a <= w1) return 0.0;
    const double nu0 = nu.front();  // = w1 * Im_1; model numer ~ nu0 (w'/w1)^2
    return (nu0 / (w1 * w1)) * (w1 + (a / 2.0) * std::log(std::abs((w1 - a) / (w1 + a))));
}
double tail_hi_imag(double a, const std::vector<double>& w, const std::vector<double>& nu) {
    const double wn = w.back();
    if (wn <= a) return 0.0;
    const double im_n = nu.back() / wn;  // numer ~ im_n * wn^2 / w'
    return im_n * wn * wn * (1.0 / (2.0 * a * a)) * std::log(wn * wn / (wn * wn - a * a));
}

// tails for numer = Re - asymptote: ~ const below, ~ (w_N/w')^2 above
double tail_lo_real(double a, const std::vector<double>& w, const std::vector<double>& nu) {
    const double w1 = w.front();
    if (a <= w1) return 0.0;
    return nu.front() * (1.0 / (2.0 * a)) * std::log(std::abs((w1 - a) / (w1 + a)));
}
double tail_hi_real(double a, const std::vector<double>& w, const std::vector<double>& nu) {
    const double wn = w.back();
    if (wn <= a) return 0.0;
    return nu.back() * wn * wn *
           ((1.0 / (2.0 * a * a * a)) * std::log((wn + a) / (wn - a)) - 1.0 / (a * a * wn));
}

} // namespace

KKResult kramers_kronig(const SpectrumGrid& grid, KKDirection direction) {
    validate(grid);
    if (grid.domain != SpectrumGrid::Domain::omega)
        throw validation_error("kramers_kronig: grid must be in the omega domain");
    const std::size_t n = grid.abscissa.size();
    if (n < 8)
        throw regime_error("kramers_kronig: grid too coarse, fewer than 4 points around "
                           "every exclusion window");

    const std::vector<double>& w = grid.abscissa;
    KKResult result;
    result.asymptote = fit_asymptote(w, grid.values);

    std::vector<double> numer(n);
    PVOptions opt{};
    if (direction == KKDirection::real_from_imag) {
        for (std::size_t i = 0; i < n; ++i) numer[i] = w[i] * grid.values[i].imag();
        opt.tail_lo = tail_lo_imag;
        opt.tail_hi = tail_hi_imag;
    } else {
        for (std::size_t i = 0; i < n; ++i) numer[i] = grid.values[i].real() - result.asymptote;
        opt.tail_lo = tail_lo_real;
        opt.tail_hi = tail_hi_real;
    }

    double tail_rms = 0.0;
    const std::vector<double> t = pv_transform(w, numer, opt, &tail_rms);

    result.grid.domain = SpectrumGrid::Domain::omega;
    result.grid.abscissa.assign(w.begin() + 1, w.end() - 1);
    result.grid.values.resize(n - 2);
    std::vector<double> transformed(n - 2);
    for (std::size_t i = 0; i < n - 2; ++i) {
        if (direction == KKDirection::real_from_imag) {
            transformed[i] = result.asymptote + t[i];
            result.grid.values[i] = {transformed[i], grid.values[i + 1].imag()};
        } else {
            transformed[i] = -w[i + 1] * t[i];
            result.grid.values[i] = {grid.values[i + 1].real(), transformed[i]};
        }
    }
    const double scale = rms(transformed);
    result.truncation_estimate = scale > 0.0 ? tail_rms / scale : tail_rms;
    return result;
}

KKConsistency kk_consistency_residual(const SpectrumGrid& grid) {
    const KKResult kk = kramers_kronig(grid, KKDirection::imag_from_real);
    const std::size_t n = kk.grid.abscissa.size();
    std::vector<double> diff(n), im_given(n), im_rec(n);
    for (std::size_t i = 0; i < n; ++i) {
        im_given[i] = grid.values[i + 1].imag();
        im_rec[i] = kk.grid.values[i].imag();
        diff[i] = im_given[i] - im_rec[i];
    }
    const double scale = std::max(rms(im_given), rms(im_rec));
    KKConsistency out;
    out.residual = scale > 0.0 ? rms(diff) / scale : 0.0;
    out.truncation_estimate = kk.truncation_estimate;
    return out;
}

} // namespace chiroptics
