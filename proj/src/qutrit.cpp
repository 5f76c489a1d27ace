#include "tcsim/qutrit.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tcsim {

namespace {

Matrix lowering_single(int levels) {
    Matrix m = Matrix::Zero(levels, levels);
    for (int n = 1; n < levels; ++n)
        m(n - 1, n) = std::sqrt(static_cast<double>(n));
    return m;
}

Matrix kron3(const Matrix& a, const Matrix& b, const Matrix& c) {
    Matrix ab(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            ab.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    Matrix abc(ab.rows() * c.rows(), ab.cols() * c.cols());
    for (int i = 0; i < ab.rows(); ++i)
        for (int j = 0; j < ab.cols(); ++j)
            abc.block(i * c.rows(), j * c.cols(), c.rows(), c.cols()) = ab(i, j) * c;
    return abc;
}

}  // namespace

Matrix lowering_operator(Subsystem s, const Dims& dims) {
    if (dims.q1 < 2 || dims.c < 2 || dims.q2 < 2)
        throw std::invalid_argument("lowering_operator: all levels must be >= 2");
    Matrix i1 = Matrix::Identity(dims.q1, dims.q1);
    Matrix ic = Matrix::Identity(dims.c, dims.c);
    Matrix i2 = Matrix::Identity(dims.q2, dims.q2);
    switch (s) {
        case Subsystem::QB1: return kron3(lowering_single(dims.q1), ic, i2);
        case Subsystem::CPLR: return kron3(i1, lowering_single(dims.c), i2);
        case Subsystem::QB2: return kron3(i1, ic, lowering_single(dims.q2));
    }
    throw std::invalid_argument("lowering_operator: bad subsystem");
}

HamiltonianBuilder::HamiltonianBuilder(const Dims& dims, bool include_counter_rotating)
    : dims_(dims), crw_(include_counter_rotating) {
    Matrix b[3];
    for (int i = 0; i < 3; ++i)
        b[i] = lowering_operator(static_cast<Subsystem>(i), dims);
    for (int i = 0; i < 3; ++i) {
        Matrix bd = b[i].adjoint();
        number_[i] = bd * b[i];
        anharm_[i] = bd * bd * b[i] * b[i];
    }
    // pair order: (QB1,CPLR), (QB2,CPLR), (QB1,QB2)
    const int pi[3] = {0, 2, 0};
    const int pj[3] = {1, 1, 2};
    for (int p = 0; p < 3; ++p) {
        const Matrix& bi = b[pi[p]];
        const Matrix& bj = b[pj[p]];
        exchange_[p] = bi.adjoint() * bj + bi * bj.adjoint();
        counter_[p] = bi.adjoint() * bj.adjoint() + bi * bj;
    }
}

void HamiltonianBuilder::assemble(const SystemFrequencies& f, Matrix& out) const {
    const int d = dims_.total();
    if (out.rows() != d || out.cols() != d) out.resize(d, d);
    const double fr[3] = {f.f1, f.fc, f.f2};
    const double eta[3] = {f.eta1, f.etac, f.eta2};
    const double g[3] = {f.g1c, f.g2c, f.g12};
    out.setZero();
    for (int i = 0; i < 3; ++i) {
        out += (kTwoPi * fr[i]) * number_[i];
        out += (kTwoPi * eta[i] / 2.0) * anharm_[i];
    }
    for (int p = 0; p < 3; ++p) {
        out += (kTwoPi * g[p]) * exchange_[p];
        if (crw_) out -= (kTwoPi * g[p]) * counter_[p];
    }
}

Matrix HamiltonianBuilder::build(const SystemFrequencies& f) const {
    Matrix out;
    assemble(f, out);
    return out;
}

Matrix build_hamiltonian(const SystemFrequencies& f, int levels) {
    return HamiltonianBuilder(Dims::uniform(levels)).build(f);
}

Matrix build_hamiltonian(const SystemFrequencies& f, const Dims& dims) {
    return HamiltonianBuilder(dims).build(f);
}

bool is_hermitian(const Matrix& H, double rel_tol) {
    double scale = H.norm();
    if (scale == 0.0) return true;
    return (H - H.adjoint()).norm() <= rel_tol * scale;
}

EigenSystem eigen_solve(const Matrix& H) {
    if (H.rows() != H.cols())
        throw std::invalid_argument("eigen_solve: matrix must be square");
    if (!is_hermitian(H))
        throw std::invalid_argument("eigen_solve: matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(H);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigen_solve: decomposition failed");
    EigenSystem es;
    es.values = solver.eigenvalues();
    es.vectors = solver.eigenvectors();
    // phase fix: largest-magnitude component real-positive
    for (int k = 0; k < es.vectors.cols(); ++k) {
        int imax = 0;
        double amax = 0.0;
        for (int i = 0; i < es.vectors.rows(); ++i) {
            double a = std::abs(es.vectors(i, k));
            if (a > amax) { amax = a; imax = i; }
        }
        Complex z = es.vectors(imax, k);
        if (std::abs(z) > 0)
            es.vectors.col(k) *= std::conj(z) / std::abs(z);
    }
    return es;
}

StateLabeling::StateLabeling(const Matrix& H, const Dims& dims, double cluster_tol)
    : dims_(dims) {
    if (H.rows() != dims.total())
        throw std::invalid_argument("StateLabeling: dims do not match matrix");
    EigenSystem es = eigen_solve(H);
    const int d = dims.total();
    basis_ = es.vectors;
    eigenvalues_ = es.values;

    // cluster nearly degenerate eigenvalues and rotate each cluster toward the
    // bare basis (orthogonal Procrustes on the dominant bare rows)
    int start = 0;
    while (start < d) {
        int end = start + 1;
        while (end < d && es.values(end) - es.values(end - 1) < cluster_tol) ++end;
        const int m = end - start;
        if (m > 1) {
            Matrix sub = basis_.middleCols(start, m);
            std::vector<int> rows(d);
            std::iota(rows.begin(), rows.end(), 0);
            std::partial_sort(rows.begin(), rows.begin() + m, rows.end(),
                              [&](int a, int b) {
                                  return sub.row(a).squaredNorm() > sub.row(b).squaredNorm();
                              });
            std::sort(rows.begin(), rows.begin() + m);
            Matrix target = Matrix::Zero(d, m);
            for (int i = 0; i < m; ++i) target(rows[i], i) = 1.0;
            Matrix M = sub.adjoint() * target;
            Eigen::JacobiSVD<Matrix> svd(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
            basis_.middleCols(start, m) = sub * (svd.matrixU() * svd.matrixV().adjoint());
        }
        start = end;
    }
    // re-fix phases after rotation
    for (int k = 0; k < d; ++k) {
        int imax = 0;
        double amax = 0.0;
        for (int i = 0; i < d; ++i) {
            double a = std::abs(basis_(i, k));
            if (a > amax) { amax = a; imax = i; }
        }
        Complex z = basis_(imax, k);
        if (std::abs(z) > 0) basis_.col(k) *= std::conj(z) / std::abs(z);
    }

    energies_.resize(d);
    for (int k = 0; k < d; ++k)
        energies_(k) = std::real(Complex(basis_.col(k).adjoint() * H * basis_.col(k)));

    // greedy assignment by descending best overlap, conflicts resolved by
    // moving to the next-best free column
    assign_.assign(d, -1);
    overlap_.assign(d, 0.0);
    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> best(d, 0.0);
    for (int idx = 0; idx < d; ++idx) {
        for (int k = 0; k < d; ++k)
            best[idx] = std::max(best[idx], std::norm(basis_(idx, k)));
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) { return best[a] > best[b]; });
    std::vector<bool> used(d, false);
    for (int idx : order) {
        std::vector<int> cols(d);
        std::iota(cols.begin(), cols.end(), 0);
        std::sort(cols.begin(), cols.end(), [&](int a, int b) {
            return std::norm(basis_(idx, a)) > std::norm(basis_(idx, b));
        });
        for (int k : cols) {
            if (used[k]) continue;
            assign_[idx] = k;
            overlap_[idx] = std::norm(basis_(idx, k));
            used[k] = true;
            break;
        }
    }
}

int StateLabeling::eigen_index(const BasisLabel& lab) const {
    int idx = lab.flat(dims_);
    if (overlap_[idx] < 0.5) throw LabelAmbiguityError(lab, overlap_[idx]);
    return assign_[idx];
}

Vector StateLabeling::state(const BasisLabel& lab) const {
    return basis_.col(eigen_index(lab));
}

double StateLabeling::energy(const BasisLabel& lab) const {
    return energies_(eigen_index(lab));
}

double StateLabeling::overlap(const BasisLabel& lab) const {
    return overlap_[lab.flat(dims_)];
}

double StateLabeling::pair_energy_sum(const BasisLabel& a, const BasisLabel& b) const {
    const int ia = a.flat(dims_), ib = b.flat(dims_);
    const int d = dims_.total();
    std::vector<int> cols(d);
    std::iota(cols.begin(), cols.end(), 0);
    auto proj = [&](int k) { return std::norm(basis_(ia, k)) + std::norm(basis_(ib, k)); };
    std::partial_sort(cols.begin(), cols.begin() + 2, cols.end(),
                      [&](int x, int y) { return proj(x) > proj(y); });
    double p = 0.5 * (proj(cols[0]) + proj(cols[1]));
    if (p < 0.5) throw LabelAmbiguityError(a, p);
    return energies_(cols[0]) + energies_(cols[1]);
}

std::map<int, int> StateLabeling::assignment() const {
    std::map<int, int> out;
    for (int idx = 0; idx < dims_.total(); ++idx) out[idx] = assign_[idx];
    return out;
}

std::map<int, int> label_eigenstates(const Matrix& H, const Dims& dims) {
    StateLabeling lab(H, dims);
    // surface ambiguity errors for any label below threshold
    for (int idx = 0; idx < dims.total(); ++idx)
        lab.eigen_index(BasisLabel::unflat(idx, dims));
    return lab.assignment();
}

}  // namespace tcsim
