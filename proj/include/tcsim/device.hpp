// device.hpp — static device constants, flux-to-frequency mapping for
// asymmetric SQUIDs, and frequency-dependent coupling strengths.
#pragma once

#include "tcsim/types.hpp"

#include <optional>
#include <string>

namespace tcsim {

enum class GateKind { CZ, ISWAP };

enum class CouplingStrategy {
    TABLE1_SQRT,   // g_ref * sqrt(fi*fj) / sqrt(fi_ref*fj_ref), refs from the device table
    CAPACITANCE,   // leading-order circuit couplings from the capacitance set
};

struct SquidParams {
    double ej1_ghz = 0.0;  // larger junction
    double ej2_ghz = 0.0;
    double ec_ghz = 0.0;
};

struct TransientExponential {
    double amplitude = 0.0;  // dimensionless settling amplitude a_k
    double tau_ns = 0.0;
};

struct DeviceParams {
    double f1_ghz = 4.16;
    double eta1_ghz = -0.220;
    double etac_ghz = -0.090;
    double eta2_ghz = -0.210;

    // reference couplings quoted with all elements at coupling_ref_ghz
    double g1c_ref_ghz = 0.0725;
    double g2c_ref_ghz = 0.0715;
    double g12_ref_ghz = 0.0050;
    double coupling_ref_ghz = 4.16;

    double t1_qb1_ns = 60e3;
    double t1_cplr_ns = 10e3;
    double t1_qb2_ns = 30e3;

    SquidParams squid_qb2{13.0, 2.8, 0.19};
    SquidParams squid_cplr{46.0, 25.0, 0.085};

    // capacitances in fF: C1, Cc, C2, C1c, C2c, C12
    double c1_ff = 95.0, cc_ff = 228.0, c2_ff = 98.0;
    double c1c_ff = 5.36, c2c_ff = 5.36, c12_ff = 0.125;

    CouplingStrategy coupling_strategy = CouplingStrategy::TABLE1_SQRT;

    std::vector<TransientExponential> transient_qb2;
    std::vector<TransientExponential> transient_cplr;

    void validate() const;

    static DeviceParams table1();  // canonical values incl. Table S3 transients
    static DeviceParams from_json_file(const std::string& path);
    std::string to_json() const;
};

// f01 = sqrt(8 Ec EJ(phi)) - Ec with
// EJ(phi) = sqrt((EJ1+EJ2)^2 cos^2(pi phi) + (EJ1-EJ2)^2 sin^2(pi phi)).
double transmon_frequency(double ej1_ghz, double ej2_ghz, double ec_ghz,
                          double flux_phi0);

// Leading-order sqrt(fi*fj) scaling anchored at reference frequencies.
double coupling_at(double fi_ghz, double fj_ghz, double g_ref_ghz,
                   double fi_ref_ghz, double fj_ref_ghz);

struct OperatingPoint {
    double f1 = 0.0, fc = 0.0, f2 = 0.0;  // GHz
    double g1c = 0.0, g2c = 0.0, g12 = 0.0;

    SystemFrequencies frequencies(const DeviceParams& dev) const {
        return SystemFrequencies{f1, fc, f2, dev.eta1_ghz, dev.etac_ghz, dev.eta2_ghz,
                                 g1c, g2c, g12};
    }
};

// Couplings evaluated at the given frequencies under the device's strategy.
OperatingPoint operating_point(const DeviceParams& dev, double f1, double fc, double f2);

// CZ idle: (4.16, 5.45, 4.00) GHz; iSWAP idle: (4.16, 5.8, 4.16) GHz.
OperatingPoint idle_config(const DeviceParams& dev, GateKind gate);

}  // namespace tcsim
