#include "chiroptics/spectrum_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "chiroptics/errors.hpp"

namespace chiroptics {

SpectrumRecord make_record(double lambda_nm, double alpha_rad_per_cm, double psi_rad_per_cm,
                           bool resonant) {
    SpectrumRecord rec;
    rec.lambda_nm = lambda_nm;
    rec.alpha_rad_per_cm = alpha_rad_per_cm;
    rec.psi_rad_per_cm = psi_rad_per_cm;
    rec.alpha_deg_per_dm = rad_per_cm_to_deg_per_dm(alpha_rad_per_cm);
    rec.resonant_flag = resonant;
    return rec;
}

void write_spectrum(std::ostream& out, const std::vector<SpectrumRecord>& records,
                    const std::string& title) {
    out << "# " << title << "\n";
    out << "# columns: lambda_nm  alpha_rad_per_cm  psi_rad_per_cm  alpha_deg_per_dm  flag\n";
    out << "# alpha: rotation of the polarization plane per unit length (clockwise positive)\n";
    out << "# psi:   ellipticity per unit length (positive Cotton effect positive)\n";
    char buf[160];
    for (const SpectrumRecord& r : records) {
        std::snprintf(buf, sizeof(buf), "%.16e\t%.16e\t%.16e\t%.16e\t%s\n", r.lambda_nm,
                      r.alpha_rad_per_cm, r.psi_rad_per_cm, r.alpha_deg_per_dm,
                      r.resonant_flag ? "resonant" : "ok");
        out << buf;
    }
}

void write_spectrum_file(const std::string& path, const std::vector<SpectrumRecord>& records,
                         const std::string& title) {
    std::ofstream out(path, std::ios::binary);  // binary: byte-stable line endings
    if (!out) throw validation_error("cannot write spectrum file: " + path);
    write_spectrum(out, records, title);
}

std::vector<SpectrumRecord> read_spectrum(std::istream& in) {
    std::vector<SpectrumRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        SpectrumRecord r;
        std::string flag;
        if (!(ss >> r.lambda_nm >> r.alpha_rad_per_cm >> r.psi_rad_per_cm >> r.alpha_deg_per_dm >>
              flag))
            throw validation_error("spectrum file: malformed row at line " +
                                   std::to_string(lineno));
        if (flag != "ok" && flag != "resonant")
            throw validation_error("spectrum file: unknown flag '" + flag + "' at line " +
                                   std::to_string(lineno));
        r.resonant_flag = (flag == "resonant");
        records.push_back(r);
    }
    return records;
}

std::vector<SpectrumRecord> read_spectrum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open spectrum file: " + path);
    return read_spectrum(in);
}

SpectrumGrid spectrum_to_omega_grid(const std::vector<SpectrumRecord>& records,
                                    const Constants& kc) {
    struct Point {
        double omega;
        std::complex<double> value;
    };
    std::vector<Point> pts;
    pts.reserve(records.size());
    for (const SpectrumRecord& r : records) {
        if (r.resonant_flag) continue;
        if (!(r.lambda_nm > 0.0))
            throw validation_error("spectrum_to_omega_grid: wavelengths must be > 0");
        pts.push_back({omega_from_lambda(nm_to_cm(r.lambda_nm), kc),
                       {r.alpha_rad_per_cm, r.psi_rad_per_cm}});
    }
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.omega < b.omega; });

    SpectrumGrid grid;
    grid.domain = SpectrumGrid::Domain::omega;
    for (const Point& p : pts) {
        if (!grid.abscissa.empty() && !(p.omega > grid.abscissa.back()))
            throw validation_error("spectrum_to_omega_grid: duplicate wavelength in spectrum");
        grid.abscissa.push_back(p.omega);
        grid.values.push_back(p.value);
    }
    return grid;
}

} // namespace chiroptics
