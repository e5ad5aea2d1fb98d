#pragma once

#include <Eigen/Dense>
#include <vector>

namespace pra {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Standard normal density.
double norm_pdf(double x);

/// Standard normal CDF, accurate over the full double range.
double norm_cdf(double x);

/// Inverse standard normal CDF. Acklam's rational approximation refined by
/// one Halley step against erfc; relative error below 1e-14 away from the
/// endpoints. Throws for p outside (0, 1).
double norm_quantile(double p);

/// Empirical quantile of a sample with linear interpolation between order
/// statistics (the common "type 7" rule). `sorted` must be ascending.
double sample_quantile(const std::vector<double>& sorted, double p);

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Hermite rule transformed for a standard normal weight:
/// integral of f against N(0,1) ~ sum w_i f(x_i).
QuadratureRule gauss_hermite_normal(int n);

/// Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

}  // namespace pra
