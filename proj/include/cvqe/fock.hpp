#pragma once

#include <complex>
#include <Eigen/Dense>

#include "cvqe/errors.hpp"

namespace cvqe {

using complexd = std::complex<double>;
using cvec = Eigen::VectorXcd;
using cmat = Eigen::MatrixXcd;

/// Truncated Fock basis {|0>, ..., |n_max>}.
///
/// Quadrature convention used throughout: X+ = (a + a^dag)/2, X- = (a - a^dag)/(2i),
/// so the vacuum variance of either quadrature is 1/4 and the vacuum Wigner
/// function peaks at 2/pi. All thresholds and homodyne results are in these units.
struct FockDim {
    int n_max = 40;

    FockDim() = default;
    explicit FockDim(int nmax) : n_max(nmax) {
        if (n_max < 1) throw DimensionError("FockDim: n_max must be >= 1");
    }
    int dim() const { return n_max + 1; }
    bool operator==(const FockDim& o) const { return n_max == o.n_max; }
};

/// Largest |s| accepted by squeezing constructors at the default cutoff.
inline constexpr double kDefaultSqueezeMax = 2.0;

/// Dimensionless squeezing parameter of S(s) = exp[-(s/2)(a^2 - a^dag^2)].
/// s > 0 squeezes the phase quadrature (V- = e^{-2s}/4) and antisqueezes the
/// amplitude quadrature (V+ = e^{+2s}/4).
struct SqueezeParam {
    double s = 0.0;
    double s_max = kDefaultSqueezeMax;

    SqueezeParam() = default;
    explicit SqueezeParam(double s_, double s_max_ = kDefaultSqueezeMax) : s(s_), s_max(s_max_) {
        if (!(std::abs(s) <= s_max))
            throw ContractError("SqueezeParam: |s| exceeds s_max");
    }
};

/// Pure single-mode state, complex amplitudes over the truncated basis.
/// Immutable value type; all operations return new states.
class PureState {
public:
    PureState(cvec amplitudes, FockDim dim);

    const cvec& amplitudes() const { return amp_; }
    FockDim dim() const { return dim_; }

    double norm2() const { return amp_.squaredNorm(); }
    /// Population above 0.9*n_max (truncation diagnostic).
    double tail_mass() const;
    double population(int n) const;

    PureState normalized() const;

    complexd mean_a() const;
    double mean_x() const { return mean_a().real(); }
    double mean_p() const { return mean_a().imag(); }
    double mean_photon() const;
    double var_x() const;
    double var_p() const;

    complexd overlap(const PureState& other) const;

private:
    cvec amp_;
    FockDim dim_;
};

/// Mixed single-mode state as a Hermitian matrix over the truncated basis.
class DensityOperator {
public:
    DensityOperator(cmat matrix, FockDim dim);
    static DensityOperator from_pure(const PureState& psi);

    const cmat& matrix() const { return mat_; }
    FockDim dim() const { return dim_; }

    double trace() const { return mat_.trace().real(); }
    double purity() const;
    double tail_mass() const;
    double population(int n) const { return mat_(n, n).real(); }

    DensityOperator normalized() const;

    complexd mean_a() const;
    double mean_x() const { return mean_a().real(); }
    double mean_p() const { return mean_a().imag(); }
    double var_x() const;
    double var_p() const;

private:
    cmat mat_;
    FockDim dim_;
};

/// Joint state of (transmitted, reflected) modes; amplitudes indexed (n_t, n_r).
class TwoModeState {
public:
    TwoModeState(cmat amplitudes, FockDim dim);

    /// amp(n_t, n_r)
    const cmat& amplitudes() const { return amp_; }
    FockDim dim() const { return dim_; }
    double norm2() const { return amp_.squaredNorm(); }

    /// Reduced density operator of the transmitted mode.
    DensityOperator reduced_transmitted() const;
    /// Reduced density operator of the reflected mode.
    DensityOperator reduced_reflected() const;

private:
    cmat amp_;
    FockDim dim_;
};

/// |n>.
PureState make_fock(int n, FockDim dim);

/// S(s)|0>, even-photon expansion; errors if the lost mass beyond n_max is >= 1e-10.
PureState make_squeezed_vacuum(SqueezeParam s, FockDim dim);

/// Coherent state of amplitude gamma = gamma+ + i gamma-; quadrature means (gamma+, gamma-).
PureState make_coherent(complexd gamma, FockDim dim);

/// <x|n> with vacuum variance 1/4: psi_0(x) = (2/pi)^{1/4} e^{-x^2}.
double quadrature_wavefunction(int n, double x);
/// psi_0..psi_n at x in one upward recurrence.
void quadrature_wavefunctions(int n_max, double x, double* out);

/// Unitary displacement D(gamma) = exp[gamma a^dag - gamma* a] via the matrix
/// exponential of the truncated generator (internally padded for accuracy).
PureState apply_displacement(const PureState& state, complexd gamma);

/// Unitary squeeze S(s); same evaluation scheme as apply_displacement.
PureState apply_squeeze(const PureState& state, SqueezeParam s);

/// Dense truncated displacement matrix on dim (padded evaluation, clipped back).
cmat displacement_matrix(complexd gamma, FockDim dim);
/// Dense truncated squeeze matrix.
cmat squeeze_matrix(double s, FockDim dim);

/// exp(A) for anti-Hermitian A via the Hermitian eigendecomposition of iA.
cmat expm_antihermitian(const cmat& a);

} // namespace cvqe
