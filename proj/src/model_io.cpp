#include "chiroptics/model_io.hpp"

#include <complex>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "chiroptics/errors.hpp"

namespace chiroptics {

using nlohmann::json;

namespace {

std::complex<double> parse_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw validation_error(where + ": complex values must be [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

cvec3 parse_cvec3(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3)
        throw validation_error(where + ": expected three [re, im] components");
    return {parse_complex(j[0], where), parse_complex(j[1], where), parse_complex(j[2], where)};
}

json dump_complex(const std::complex<double>& z) {
    return json::array({z.real(), z.imag()});
}

json dump_cvec3(const cvec3& v) {
    return json::array({dump_complex(v[0]), dump_complex(v[1]), dump_complex(v[2])});
}

bool is_zero(const cvec3& v) {
    return v[0] == std::complex<double>{} && v[1] == std::complex<double>{} &&
           v[2] == std::complex<double>{};
}

} // namespace

ModelFile parse_model_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("model file: JSON parse error: ") + e.what());
    }

    if (!j.contains("states") || !j["states"].is_array() || j["states"].empty())
        throw validation_error("model file: needs a non-empty 'states' array");
    const std::size_t n = j["states"].size();

    std::vector<double> energies(n, 0.0), gammas(n, 0.0);
    for (std::size_t m = 0; m < n; ++m) {
        const json& st = j["states"][m];
        if (!st.contains("energy"))
            throw validation_error("model file: state " + std::to_string(m) + " missing energy");
        energies[m] = st["energy"].get<double>();
        if (st.contains("gamma")) gammas[m] = st["gamma"].get<double>();
        if (!(gammas[m] >= 0.0))
            throw validation_error("model file: state " + std::to_string(m) + " has gamma < 0");
    }

    std::vector<cvec3> p(n * n, cvec3{});
    std::vector<cvec3> mu(n * n, cvec3{});
    std::vector<bool> p_set(n * n, false), mu_set(n * n, false);

    auto place = [n](std::vector<cvec3>& mat, std::vector<bool>& set_flags, std::size_t row,
                     std::size_t col, const cvec3& value, const char* name) {
        const std::size_t idx = row * n + col;
        const std::size_t idx_t = col * n + row;
        if (set_flags[idx]) {
            for (int c = 0; c < 3; ++c) {
                const double scale = std::abs(mat[idx][c]) + std::abs(value[c]);
                if (std::abs(mat[idx][c] - value[c]) > 1e-10 * scale + 1e-300)
                    throw validation_error(std::string("model file: conflicting ") + name +
                                           " element at (" + std::to_string(row) + "," +
                                           std::to_string(col) + ") — Hermitian partner disagrees");
            }
            return;
        }
        mat[idx] = value;
        set_flags[idx] = true;
        if (idx != idx_t) {
            mat[idx_t] = conj(value);
            set_flags[idx_t] = true;
        }
    };

    if (j.contains("transitions")) {
        for (const json& tr : j["transitions"]) {
            if (!tr.contains("m") || !tr.contains("k"))
                throw validation_error("model file: transition missing 'm' or 'k'");
            const std::size_t m = tr["m"].get<std::size_t>();
            const std::size_t k = tr["k"].get<std::size_t>();
            if (m >= n || k >= n)
                throw validation_error("model file: transition (" + std::to_string(m) + "," +
                                       std::to_string(k) + ") indexes past " + std::to_string(n) +
                                       " states");
            const std::string where =
                "transition (" + std::to_string(m) + "," + std::to_string(k) + ")";
            if (m == k) {
                // permanent dipoles; must be real
                auto check_real = [&](const cvec3& v, const char* name) {
                    for (int c = 0; c < 3; ++c)
                        if (v[c].imag() != 0.0)
                            throw validation_error("model file: diagonal " + std::string(name) +
                                                   " at state " + std::to_string(m) +
                                                   " must be real");
                };
                if (tr.contains("p")) {
                    const cvec3 v = parse_cvec3(tr["p"], where + " p");
                    check_real(v, "p");
                    place(p, p_set, m, m, v, "p");
                }
                if (tr.contains("mu")) {
                    const cvec3 v = parse_cvec3(tr["mu"], where + " mu");
                    check_real(v, "mu");
                    place(mu, mu_set, m, m, v, "mu");
                }
                continue;
            }
            if (tr.contains("p"))
                place(p, p_set, m, k, parse_cvec3(tr["p"], where + " p"), "p");  // <m|p|k>
            if (tr.contains("mu"))
                place(mu, mu_set, k, m, parse_cvec3(tr["mu"], where + " mu"), "mu");  // <k|mu|m>
        }
    }

    ModelFile out;
    if (j.contains("name")) out.name = j["name"].get<std::string>();
    out.model = MoleculeModel(std::move(energies), std::move(gammas), std::move(p), std::move(mu));
    if (j.contains("number_density")) {
        out.number_density = j["number_density"].get<double>();
        if (!(out.number_density >= 0.0))
            throw validation_error("model file: number_density must be >= 0");
    }
    if (j.contains("weights")) {
        out.weights = j["weights"].get<std::vector<double>>();
        if (out.weights.size() != n)
            throw validation_error("model file: weights length != state count");
    }
    if (j.contains("mixture")) {
        for (const json& comp : j["mixture"]) {
            MixtureEntry e;
            if (!comp.contains("fraction"))
                throw validation_error("model file: mixture entry missing 'fraction'");
            e.fraction = comp["fraction"].get<double>();
            if (!(e.fraction >= 0.0))
                throw validation_error("model file: mixture fractions must be >= 0");
            if (comp.contains("mirror")) e.mirror = comp["mirror"].get<bool>();
            out.mixture.push_back(e);
        }
    }
    return out;
}

ModelFile load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open model file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_model_json(ss.str());
}

void save_model_file(const ModelFile& file, const std::string& path) {
    const std::size_t n = file.model.size();
    json j;
    if (!file.name.empty()) j["name"] = file.name;
    if (file.number_density > 0.0) j["number_density"] = file.number_density;
    j["states"] = json::array();
    for (std::size_t m = 0; m < n; ++m)
        j["states"].push_back({{"energy", file.model.energy(m)}, {"gamma", file.model.gamma(m)}});
    j["transitions"] = json::array();
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t k = m; k < n; ++k) {
            const cvec3& pe = file.model.p(m, k);
            const cvec3& me = file.model.mu(k, m);
            if (is_zero(pe) && is_zero(me)) continue;
            json tr = {{"m", m}, {"k", k}};
            if (!is_zero(pe)) tr["p"] = dump_cvec3(pe);
            if (!is_zero(me)) tr["mu"] = dump_cvec3(me);
            j["transitions"].push_back(tr);
        }
    }
    if (!file.weights.empty()) j["weights"] = file.weights;
    if (!file.mixture.empty()) {
        j["mixture"] = json::array();
        for (const MixtureEntry& e : file.mixture)
            j["mixture"].push_back({{"fraction", e.fraction}, {"mirror", e.mirror}});
    }
    std::ofstream out(path);
    if (!out) throw validation_error("cannot write model file: " + path);
    out << j.dump(2) << "\n";
}

} // namespace chiroptics
