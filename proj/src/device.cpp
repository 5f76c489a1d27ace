#include "tcsim/device.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>

namespace tcsim {

using nlohmann::json;

void DeviceParams::validate() const {
    if (t1_qb1_ns <= 0 || t1_cplr_ns <= 0 || t1_qb2_ns <= 0)
        throw std::invalid_argument("DeviceParams: T1 times must be positive");
    for (const SquidParams* s : {&squid_qb2, &squid_cplr}) {
        if (!(s->ej1_ghz >= s->ej2_ghz && s->ej2_ghz > 0))
            throw std::invalid_argument("DeviceParams: require EJ1 >= EJ2 > 0");
        if (s->ec_ghz <= 0)
            throw std::invalid_argument("DeviceParams: Ec must be positive");
    }
    for (double c : {c1_ff, cc_ff, c2_ff, c1c_ff, c2c_ff, c12_ff})
        if (c <= 0) throw std::invalid_argument("DeviceParams: capacitances must be positive");
    for (const auto* tm : {&transient_qb2, &transient_cplr})
        for (const auto& e : *tm)
            if (e.tau_ns <= 0)
                throw std::invalid_argument("DeviceParams: transient tau must be positive");
}

DeviceParams DeviceParams::table1() {
    DeviceParams d;
    d.transient_qb2 = {{-0.00179, 21.9}, {-0.01024, 50.0}, {-0.00251, 87.0},
                       {-0.00484, 158.0}, {-0.00487, 773.0}, {-0.01143, 26440.0}};
    d.transient_cplr = {{-0.00220, 31.0}, {-0.00459, 32.4}, {-0.00567, 45.7},
                        {-0.00938, 127.0}, {-0.00358, 730.0}, {-0.01360, 30000.0}};
    return d;
}

double transmon_frequency(double ej1, double ej2, double ec, double flux) {
    if (ec <= 0) throw std::invalid_argument("transmon_frequency: Ec must be positive");
    const double c = std::cos(M_PI * flux);
    const double s = std::sin(M_PI * flux);
    const double ej = std::sqrt((ej1 + ej2) * (ej1 + ej2) * c * c +
                                (ej1 - ej2) * (ej1 - ej2) * s * s);
    return std::sqrt(8.0 * ec * ej) - ec;
}

double coupling_at(double fi, double fj, double g_ref, double fi_ref, double fj_ref) {
    if (fi <= 0 || fj <= 0 || fi_ref <= 0 || fj_ref <= 0)
        throw std::invalid_argument("coupling_at: frequencies must be positive");
    return g_ref * std::sqrt(fi * fj) / std::sqrt(fi_ref * fj_ref);
}

OperatingPoint operating_point(const DeviceParams& dev, double f1, double fc, double f2) {
    OperatingPoint op;
    op.f1 = f1;
    op.fc = fc;
    op.f2 = f2;
    switch (dev.coupling_strategy) {
        case CouplingStrategy::TABLE1_SQRT: {
            const double r = dev.coupling_ref_ghz;
            op.g1c = coupling_at(f1, fc, dev.g1c_ref_ghz, r, r);
            op.g2c = coupling_at(f2, fc, dev.g2c_ref_ghz, r, r);
            op.g12 = coupling_at(f1, f2, dev.g12_ref_ghz, r, r);
            break;
        }
        case CouplingStrategy::CAPACITANCE: {
            op.g1c = 0.5 * dev.c1c_ff / std::sqrt(dev.c1_ff * dev.cc_ff) * std::sqrt(f1 * fc);
            op.g2c = 0.5 * dev.c2c_ff / std::sqrt(dev.c2_ff * dev.cc_ff) * std::sqrt(f2 * fc);
            op.g12 = 0.5 * (dev.c12_ff + dev.c1c_ff * dev.c2c_ff / dev.cc_ff) /
                     std::sqrt(dev.c1_ff * dev.c2_ff) * std::sqrt(f1 * f2);
            break;
        }
    }
    return op;
}

OperatingPoint idle_config(const DeviceParams& dev, GateKind gate) {
    dev.validate();
    switch (gate) {
        case GateKind::CZ: return operating_point(dev, 4.16, 5.45, 4.00);
        case GateKind::ISWAP: return operating_point(dev, 4.16, 5.8, 4.16);
    }
    throw std::invalid_argument("idle_config: bad gate kind");
}

namespace {

json squid_to_json(const SquidParams& s) {
    return json{{"ej1_ghz", s.ej1_ghz}, {"ej2_ghz", s.ej2_ghz}, {"ec_ghz", s.ec_ghz}};
}

SquidParams squid_from_json(const json& j) {
    return SquidParams{j.at("ej1_ghz").get<double>(), j.at("ej2_ghz").get<double>(),
                       j.at("ec_ghz").get<double>()};
}

json transients_to_json(const std::vector<TransientExponential>& v) {
    json arr = json::array();
    for (const auto& e : v) arr.push_back({{"amplitude", e.amplitude}, {"tau_ns", e.tau_ns}});
    return arr;
}

std::vector<TransientExponential> transients_from_json(const json& j) {
    std::vector<TransientExponential> v;
    for (const auto& e : j)
        v.push_back({e.at("amplitude").get<double>(), e.at("tau_ns").get<double>()});
    return v;
}

}  // namespace

std::string DeviceParams::to_json() const {
    json j{
        {"f1_ghz", f1_ghz},
        {"eta1_ghz", eta1_ghz},
        {"etac_ghz", etac_ghz},
        {"eta2_ghz", eta2_ghz},
        {"g1c_ref_ghz", g1c_ref_ghz},
        {"g2c_ref_ghz", g2c_ref_ghz},
        {"g12_ref_ghz", g12_ref_ghz},
        {"coupling_ref_ghz", coupling_ref_ghz},
        {"t1_qb1_ns", t1_qb1_ns},
        {"t1_cplr_ns", t1_cplr_ns},
        {"t1_qb2_ns", t1_qb2_ns},
        {"squid_qb2", squid_to_json(squid_qb2)},
        {"squid_cplr", squid_to_json(squid_cplr)},
        {"c1_ff", c1_ff}, {"cc_ff", cc_ff}, {"c2_ff", c2_ff},
        {"c1c_ff", c1c_ff}, {"c2c_ff", c2c_ff}, {"c12_ff", c12_ff},
        {"coupling_strategy",
         coupling_strategy == CouplingStrategy::CAPACITANCE ? "capacitance" : "table1_sqrt"},
        {"transient_qb2", transients_to_json(transient_qb2)},
        {"transient_cplr", transients_to_json(transient_cplr)},
    };
    return j.dump(2);
}

DeviceParams DeviceParams::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open device file: " + path);
    json j = json::parse(in);
    DeviceParams d;
    d.f1_ghz = j.at("f1_ghz").get<double>();
    d.eta1_ghz = j.at("eta1_ghz").get<double>();
    d.etac_ghz = j.at("etac_ghz").get<double>();
    d.eta2_ghz = j.at("eta2_ghz").get<double>();
    d.g1c_ref_ghz = j.at("g1c_ref_ghz").get<double>();
    d.g2c_ref_ghz = j.at("g2c_ref_ghz").get<double>();
    d.g12_ref_ghz = j.at("g12_ref_ghz").get<double>();
    d.coupling_ref_ghz = j.at("coupling_ref_ghz").get<double>();
    d.t1_qb1_ns = j.at("t1_qb1_ns").get<double>();
    d.t1_cplr_ns = j.at("t1_cplr_ns").get<double>();
    d.t1_qb2_ns = j.at("t1_qb2_ns").get<double>();
    d.squid_qb2 = squid_from_json(j.at("squid_qb2"));
    d.squid_cplr = squid_from_json(j.at("squid_cplr"));
    d.c1_ff = j.at("c1_ff").get<double>();
    d.cc_ff = j.at("cc_ff").get<double>();
    d.c2_ff = j.at("c2_ff").get<double>();
    d.c1c_ff = j.at("c1c_ff").get<double>();
    d.c2c_ff = j.at("c2c_ff").get<double>();
    d.c12_ff = j.at("c12_ff").get<double>();
    if (j.contains("coupling_strategy")) {
        const std::string s = j.at("coupling_strategy").get<std::string>();
        if (s == "capacitance") d.coupling_strategy = CouplingStrategy::CAPACITANCE;
        else if (s == "table1_sqrt") d.coupling_strategy = CouplingStrategy::TABLE1_SQRT;
        else throw std::runtime_error("unknown coupling_strategy: " + s);
    }
    if (j.contains("transient_qb2")) d.transient_qb2 = transients_from_json(j.at("transient_qb2"));
    if (j.contains("transient_cplr")) d.transient_cplr = transients_from_json(j.at("transient_cplr"));
    d.validate();
    return d;
}

}  // namespace tcsim
