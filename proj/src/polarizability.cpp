#include "corrlat/polarizability.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

#include "corrlat/constants.hpp"

namespace corrlat {

double epsilon_imag_axis(const LorentzOscillator& material, double xi) {
    if (!(material.B1 > 0.0) || !(material.omega1 > 0.0))
        throw DomainError("epsilon_imag_axis: material requires B1 > 0 and omega1 > 0");
    if (xi < 0.0) throw DomainError("epsilon_imag_axis: xi must be >= 0");
    const double w2 = material.omega1 * material.omega1;
    return 1.0 + material.B1 * w2 / (xi * xi + w2);
}

DepolarizationFactors depolarization_factors(double aspect) {
    if (!(aspect >= 1.0))
        throw DomainError("depolarization_factors: aspect must be >= 1");
    double np;
    if (aspect == 1.0) {
        return {1.0 / 3.0, 1.0 / 3.0}; // exact, avoids (1 - 1/3)/2 rounding
    } else {
        const double e2 = 1.0 - 1.0 / (aspect * aspect);
        const double e = std::sqrt(e2);
        if (e < 0.5) {
            // (1/2e) ln((1+e)/(1-e)) - 1 = sum_{k>=1} e^{2k}/(2k+1); summed in
            // this form to avoid the small-e cancellation.
            double sum = 0.0;
            double pow_e = 1.0; // e^{2(k-1)}
            for (int k = 1; k < 200; ++k) {
                const double term = pow_e / (2.0 * k + 1.0);
                sum += term;
                if (term < 1e-18 * sum) break;
                pow_e *= e2;
            }
            np = (1.0 - e2) * sum;
        } else {
            np = ((1.0 - e2) / e2) *
                 ((0.5 / e) * std::log((1.0 + e) / (1.0 - e)) - 1.0);
        }
    }
    return {np, 0.5 * (1.0 - np)};
}

double SpheroidParticle::volume() const {
    return (4.0 / 3.0) * kPi * semi_minor * semi_minor * semi_major;
}

void SpheroidParticle::validate() const {
    if (!(semi_minor > 0.0) || !(semi_major >= semi_minor))
        throw DomainError("SpheroidParticle: requires semi_major >= semi_minor > 0");
    if (!(material.B1 > 0.0) || !(material.omega1 > 0.0))
        throw DomainError("SpheroidParticle: material requires B1 > 0 and omega1 > 0");
    if (density < 0.0) throw DomainError("SpheroidParticle: density must be >= 0");
}

AlphaComponents alpha_components(const SpheroidParticle& particle, double xi) {
    particle.validate();
    const double chi = epsilon_imag_axis(particle.material, xi) - 1.0;
    const DepolarizationFactors n = depolarization_factors(particle.aspect());
    const double pref = kEpsilon0 * particle.volume() * kPrintedAlphaScale;
    return {pref * chi / (1.0 + chi * n.parallel),
            pref * chi / (1.0 + chi * n.transverse)};
}

PrincipalMoments principal_moments(const SpheroidParticle& particle) {
    particle.validate();
    const DepolarizationFactors n = depolarization_factors(particle.aspect());
    const double pref = kHbar * kEpsilon0 * particle.volume() * kPrintedAlphaScale *
                        particle.material.B1 * particle.material.omega1 / 2.0;
    return {pref / std::sqrt(1.0 + n.parallel * particle.material.B1),
            pref / std::sqrt(1.0 + n.transverse * particle.material.B1)};
}

PrincipalMoments principal_moments_quadrature(const SpheroidParticle& particle,
                                              const Tolerance& tol) {
    particle.validate();
    auto moment = [&](bool parallel) {
        auto f = [&](double xi) {
            const AlphaComponents a = alpha_components(particle, xi);
            return parallel ? a.parallel : a.transverse;
        };
        return kHbar / kPi *
               integrate_semi_infinite(f, tol, particle.material.omega1);
    };
    return {moment(true), moment(false)};
}

namespace {

MomentMatrix rotate_principal(const PrincipalMoments& pm, double phi, double theta) {
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    const double d = pm.parallel - pm.transverse;
    MomentMatrix m;
    m.xx = pm.transverse + d * nx * nx;
    m.yy = pm.transverse + d * ny * ny;
    m.zz = pm.transverse + d * nz * nz;
    m.xy = d * nx * ny;
    m.xz = d * nx * nz;
    m.yz = d * ny * nz;
    return m;
}

} // namespace

MomentMatrix moment_matrix(const SpheroidParticle& particle) {
    return rotate_principal(principal_moments(particle), particle.phi, particle.theta);
}

MomentMatrix moment_matrix_quadrature(const SpheroidParticle& particle,
                                      const Tolerance& tol) {
    return rotate_principal(principal_moments_quadrature(particle, tol),
                            particle.phi, particle.theta);
}

std::vector<MaterialRecord> load_material_catalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("material catalog: cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("material catalog: invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) throw ConfigError("material catalog: expected a JSON array");
    std::vector<MaterialRecord> records;
    for (const auto& entry : doc) {
        for (const auto& [key, _] : entry.items()) {
            if (key != "name" && key != "B1" && key != "omega1_rad_s" &&
                key != "density_kg_m3")
                throw ConfigError("material catalog: unknown key '" + key + "'");
        }
        MaterialRecord rec;
        try {
            rec.name = entry.at("name").get<std::string>();
            rec.material.B1 = entry.at("B1").get<double>();
            rec.material.omega1 = entry.at("omega1_rad_s").get<double>();
            rec.density = entry.at("density_kg_m3").get<double>();
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError(std::string("material catalog: bad record: ") + e.what());
        }
        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace corrlat
