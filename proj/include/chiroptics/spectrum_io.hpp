#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chiroptics/dispersion.hpp"

namespace chiroptics {

/**
 * Plot-ready spectrum files: tab-separated text, '#'-commented header naming
 * columns and units, one row per wavelength, machine-readable flag column
 * last ("ok" or "resonant"). Deterministic formatting; identical inputs
 * produce byte-identical files.
 */
struct SpectrumRecord {
    double lambda_nm = 0.0;
    double alpha_rad_per_cm = 0.0;   // rotation per unit length
    double psi_rad_per_cm = 0.0;     // ellipticity per unit length
    double alpha_deg_per_dm = 0.0;   // = alpha_rad_per_cm * (180/pi) * 10
    bool resonant_flag = false;
};

SpectrumRecord make_record(double lambda_nm, double alpha_rad_per_cm, double psi_rad_per_cm,
                           bool resonant = false);

void write_spectrum(std::ostream& out, const std::vector<SpectrumRecord>& records,
                    const std::string& title);
void write_spectrum_file(const std::string& path, const std::vector<SpectrumRecord>& records,
                         const std::string& title);

std::vector<SpectrumRecord> read_spectrum(std::istream& in);
std::vector<SpectrumRecord> read_spectrum_file(const std::string& path);

/// Non-flagged rows as an omega-domain grid of alpha + i psi, ascending in
/// omega, for the KK machinery.
SpectrumGrid spectrum_to_omega_grid(const std::vector<SpectrumRecord>& records,
                                    const Constants& k = Constants::cgs());

} // namespace chiroptics
