#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dunkl/geometry.hpp"
#include "dunkl/radial.hpp"
#include "dunkl/rank1.hpp"

namespace dunkl {

struct CheckReport {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string grid;
  std::string detail;
};

CheckReport make_report(std::string name, double residual, double tolerance, std::string grid = "",
                        std::string detail = "");

/// Merges reports: worst residual-to-tolerance ratio wins, pass requires all.
CheckReport combine_reports(std::string name, const std::vector<CheckReport>& parts);

struct TestFunction {
  std::string id;
  std::function<double(double)> f;
  TailClass tail;
};

/// Gaussians of width 1/2, 1, 2; a C-infinity bump of radius 5; a ball of radius 2 with an erfc edge.
std::vector<TestFunction> test_family();

/// The five reference geometries (n, gamma): (1,0) (1,1) (2,0.5) (3,0) (3,1.25).
std::vector<DunklGeometry> reference_geometries();

namespace oracle {

/// Ascending series for t^{-a} J_a(t) in long double.
long double scaled_bessel_series(long double a, long double t);
/// E_k(x, i xi) by its power series in long double.
cplx dunkl_kernel_series(double x, double xi, double k);
/// n = 1 wave with velocity exp(-x^2/2) and position exp(-x^2).
double dalembert_gaussian(double x, double t);
/// n = 3 radial wave with the same data.
double spherical_means_gaussian(double r, double t);
/// Measure of {r : |Phi_{1/2}(r)| > s} for Phi_{1/2}(r) = c (1 - r^2)^{-1/2} on [0, 1).
double phi_half_distribution(double s, const DunklGeometry& geom);

}  // namespace oracle

// Transform-layer checks.
CheckReport check_phi_transform(const std::vector<cplx>& zs, const std::vector<DunklGeometry>& geoms,
                         double rho_max = 40.0, double tolerance = 1e-7);
CheckReport check_gaussian_fixed_point(const DunklGeometry& geom);
CheckReport check_double_transform(const DunklGeometry& geom);
CheckReport check_plancherel(const DunklGeometry& geom);
CheckReport check_hausdorff_young(const DunklGeometry& geom);
CheckReport check_young(const DunklGeometry& geom);
CheckReport check_laplacian_eigen(const DunklGeometry& geom);
std::vector<CheckReport> check_transform_identities(const DunklGeometry& geom);

// Special functions.
CheckReport check_sonine(cplx mu, cplx nu_s, const std::vector<double>& t_grid);
CheckReport check_sonine_grid();
CheckReport check_bessel_recurrence();
CheckReport check_bessel_derivative();
CheckReport check_gamma_reflection();
/// Fits log sup_t (1+t)^{eta+1/2} |K_{eta+i zeta}(t)| = a + b zeta for each eta; residual is the largest b.
CheckReport check_bessel_decay_slope();

// Wave layer.
CheckReport check_dalembert();
CheckReport check_spherical_means();
CheckReport check_huygens();
CheckReport check_finite_speed(const DunklGeometry& geom);
CheckReport check_energy(const DunklGeometry& geom);
/// Wave solution against the dilated S_alpha representation.
CheckReport check_wave_s_alpha_identity(const DunklGeometry& geom);

// Rank one.
CheckReport check_rank1_eigen(double k);
CheckReport check_kernel_ode(double k);
CheckReport check_kernel_series(double k);
CheckReport check_riesz_square(double k);
CheckReport check_riesz_bounded(double k, const std::vector<double>& ps);
CheckReport check_translation_sup(double k);
CheckReport check_translation_contraction(double k);
CheckReport check_translated_psi_growth(double k, const std::vector<double>& ys);

// Multiplier layer.
CheckReport check_weak_type_phi_half(const DunklGeometry& geom);
/// m(rho) = min(1, rho^{-t}) from L^p to L^q with 1/p - 1/q = t/D, plus a growth probe 0.1 below the line.
CheckReport check_hl_multiplier(double t_exp, const DunklGeometry& geom, double p);
/// A_psi from L^p to L^inf in rank one; p <= n + 2 gamma throws RangeError.
CheckReport check_apsi(const DunklGeometry& geom, double p);
/// check_apsi at p = n + 2 gamma + 1/2.
CheckReport check_apsi(const DunklGeometry& geom);

// Dilation sweeps.
enum class Verdict { bounded, growing };
std::string to_string(Verdict v);

struct SweepRow {
  double p;
  double q;
  std::string family;
  double lambda;
  double t;
  double ratio;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  /// Relative change of the sup when the lambda range grows from 2^{+-6} to 2^{+-8}.
  double saturation = 0.0;
  /// max ratio at lambda = 2^8 over the ratio at 2^4, per family.
  double growth = 0.0;
  Verdict verdict = Verdict::bounded;
};

/// ||S_alpha f_lambda||_q / ||f_lambda||_p for dilated Gaussians (and the dual pairing) over
/// lambda = 2^{-8..8}. (p, q) outside the case's region throws ArgumentError unless expect_growth.
SweepResult sweep_s_alpha(double alpha, SAlphaCase c, double p, double q, const DunklGeometry& geom,
                          bool expect_growth = false);

enum class WaveLine { q1, q2 };
std::string to_string(WaveLine l);
WaveLine wave_line_from_string(const std::string& s);

/// ||u(t)||_q / ||f||_p for velocity data on the given line, q = line(p).
SweepResult sweep_wave_estimate(const std::vector<double>& ps, WaveLine line, const std::vector<double>& ts,
                                const DunklGeometry& geom);
/// Rank-one mixed data: ||u(t)||_q / (||f||_p + ||D_k g||_p) with non-even f, g.
SweepResult sweep_wave_rank1(const std::vector<double>& ps, WaveLine line, const std::vector<double>& ts,
                             double k);

/// Named batches used by the CLI: identities (bessel + transform), bessel, transform, wave, rank1,
/// multipliers, sweeps, all.
std::vector<CheckReport> run_suite(const std::string& name);
std::vector<std::string> suite_names();

}  // namespace dunkl
