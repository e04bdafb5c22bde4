#pragma once

#include "numerics.hpp"

#include <utility>
#include <vector>

namespace freud {

struct NystromResult {
    Real s;
    unsigned nodes = 0;
    Real log_det;           // eigenvalue route
    Real log_det_lu;        // pivoted LU on the same matrix
    Real residual_estimate; // |log_det(nodes) - log_det(nodes / 2)|
    Real truncation_bound;  // eigenvalues dropped below the precision floor
};

// log det(I - K_s) on (-1, 1) for K_s(u, v) = sin(pi s (u - v)) / (pi (u - v)).
// Doubles the node count from `nodes` until the residual is below 1e-8.
NystromResult sine_det(const Real& s, unsigned nodes, const PrecisionContext& ctx, unsigned max_nodes = 400);
// Single evaluation at a fixed node count, no convergence loop.
NystromResult sine_det_fixed(const Real& s, unsigned nodes, const PrecisionContext& ctx);

struct KernelReportRow {
    unsigned n = 0;
    Real lambda1;              // lambda(n, 1)
    std::vector<Real> errors;  // one per point
    Real max_error;
};

struct KernelReport {
    std::vector<KernelReportRow> rows;
    // Errors nonincreasing in n, each step allowed a 20% rise.
    bool monotone = false;
};

KernelReport kernel_convergence_report(const Real& beta, const std::vector<unsigned>& nsizes,
                                       const std::vector<std::pair<Real, Real>>& points,
                                       const PrecisionContext& ctx);

}  // namespace freud
