// types.hpp — shared aliases and small domain types for the three-qutrit system
#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace tcsim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Tensor order is fixed everywhere: QB1 (x) CPLR (x) QB2.
enum class Subsystem : int { QB1 = 0, CPLR = 1, QB2 = 2 };

inline const char* to_string(Subsystem s) {
    switch (s) {
        case Subsystem::QB1: return "QB1";
        case Subsystem::CPLR: return "CPLR";
        case Subsystem::QB2: return "QB2";
    }
    return "?";
}

// Per-subsystem level counts. Default three qutrits; the coupler can be
// truncated to two levels for the eta_c -> infinity comparison.
struct Dims {
    int q1 = 3;
    int c = 3;
    int q2 = 3;

    int total() const { return q1 * c * q2; }
    int of(Subsystem s) const {
        switch (s) {
            case Subsystem::QB1: return q1;
            case Subsystem::CPLR: return c;
            case Subsystem::QB2: return q2;
        }
        return 0;
    }
    bool operator==(const Dims&) const = default;

    static Dims uniform(int levels) {
        if (levels < 2) throw std::invalid_argument("Dims: levels must be >= 2");
        return Dims{levels, levels, levels};
    }
    static Dims coupler_levels(int cl) {
        if (cl < 2) throw std::invalid_argument("Dims: coupler levels must be >= 2");
        return Dims{3, cl, 3};
    }
};

// Occupation-number label |n1, nc, n2>.
struct BasisLabel {
    int n1 = 0;
    int nc = 0;
    int n2 = 0;

    bool operator==(const BasisLabel&) const = default;

    int flat(const Dims& d) const {
        if (n1 < 0 || n1 >= d.q1 || nc < 0 || nc >= d.c || n2 < 0 || n2 >= d.q2)
            throw std::invalid_argument("BasisLabel: occupation out of range for dims");
        return (n1 * d.c + nc) * d.q2 + n2;
    }
    static BasisLabel unflat(int idx, const Dims& d) {
        if (idx < 0 || idx >= d.total())
            throw std::invalid_argument("BasisLabel: flat index out of range");
        BasisLabel b;
        b.n2 = idx % d.q2;
        b.nc = (idx / d.q2) % d.c;
        b.n1 = idx / (d.q2 * d.c);
        return b;
    }
    std::string str() const {
        return "|" + std::to_string(n1) + std::to_string(nc) + std::to_string(n2) + ">";
    }
};

// Linear frequencies and anharmonicities in GHz, couplings in GHz.
// Hamiltonian entries are rad/ns (2*pi multiplied in at assembly).
struct SystemFrequencies {
    double f1 = 0.0, fc = 0.0, f2 = 0.0;
    double eta1 = 0.0, etac = 0.0, eta2 = 0.0;
    double g1c = 0.0, g2c = 0.0, g12 = 0.0;
};

// Raised when a bare label cannot be attached to an eigenstate.
struct LabelAmbiguityError : std::runtime_error {
    BasisLabel label;
    double best_overlap;
    LabelAmbiguityError(BasisLabel lab, double ov)
        : std::runtime_error("ambiguous eigenstate labeling for " + lab.str() +
                             " (best overlap " + std::to_string(ov) + ")"),
          label(lab), best_overlap(ov) {}
};

}  // namespace tcsim
