#pragma once

// Constructors for the explicit metric families: the general family solving
// the self-duality system, the Osserman families with nonzero and vanishing
// scalar curvature, strict metrics (coefficients independent of x1, x2),
// the para-Kahler family and the anti-self-dual example.

#include <array>
#include <stdexcept>

#include "walker/linalg.hpp"
#include "walker/metric.hpp"

namespace walker {

struct CoefficientError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// All fields must depend on (x3, x4) only; they default to zero.
struct SelfDualCoefficients {
  ScalarField calA, calB, calC, calD, calE, calF;
  ScalarField P, Q, S, T, U, V;
  ScalarField xi, eta, gam;
};

// a = x1^3 calA + x1^2 calB + x1^2 x2 calC + x1 x2 calD + x1 P + x2 Q + xi
// b = x2^3 calC + x2^2 calE + x1 x2^2 calA + x1 x2 calF + x1 S + x2 T + eta
// c = 1/2 x1^2 calF + 1/2 x2^2 calD + x1^2 x2 calA + x1 x2^2 calC
//     + 1/2 x1 x2 (calB + calE) + x1 U + x2 V + gam
// Throws CoefficientError when a coefficient depends on x1 or x2.
WalkerMetric make_selfdual(const SelfDualCoefficients& c);

struct TypeIICoefficients {
  double tau = 6.0;              // nonzero scalar curvature
  ScalarField P, Q, S, T, U, V;  // functions of (x3, x4)
};

// The Osserman family with scalar curvature tau != 0:
// a = x1^2 tau/6 + x1 P + x2 Q + (6/tau){Q(T-U) + V(P-V) - 2(Q_4 - V_3)}
// b = x2^2 tau/6 + x1 S + x2 T + (6/tau){S(P-V) + U(T-U) - 2(S_3 - U_4)}
// c = x1 x2 tau/6 + x1 U + x2 V + (6/tau){-QS + UV + T_3 - U_3 + P_4 - V_4}
// Einstein and self-dual by construction; Jacobi spectrum
// {0, tau/6, tau/24, tau/24}. Throws CoefficientError when tau == 0 or a
// coefficient depends on x1 or x2.
WalkerMetric make_typeII(const TypeIICoefficients& c);

struct RicciFlatFamily {
  WalkerMetric metric;
  // left minus right of the three constraint equations; the metric is
  // Ricci-flat (hence Osserman) exactly where all three vanish
  std::array<ScalarField, 3> residuals;
};

// The scalar-curvature-zero branch: a = x1 P + x2 Q + xi, b = x1 S + x2 T +
// eta, c = x1 U + x2 V + gam, with the candidate solution's constraint
// residuals returned for the caller to inspect (the constraint system has no
// general closed-form solution, so candidates are verified, not solved for).
RicciFlatFamily make_ricciflat_selfdual(
    const ScalarField& P, const ScalarField& Q, const ScalarField& S,
    const ScalarField& T, const ScalarField& U, const ScalarField& V,
    const ScalarField& xi, const ScalarField& eta, const ScalarField& gam);

struct StrictFamily {
  WalkerMetric metric;
  // 2 c_34 - a_44 - b_33: the Jacobi operators vanish identically where this
  // is zero and are two-step nilpotent elsewhere
  ScalarField indicator;
};

// Coefficients depending on (x3, x4) only. Ricci-flat and self-dual.
StrictFamily make_strict(const ScalarField& a3, const ScalarField& b3,
                         const ScalarField& c3);

struct ParaKahlerFamily {
  WalkerMetric metric;
  double alpha = 0.0;

  // The paracomplex structure: J d1 = -d1, J d2 = -d2,
  // J d3 = -a d1 - c d2 + d3, J d4 = -c d1 - b d2 + d4.
  // Satisfies J^2 = Id and g(J., J.) = -g(., .).
  Mat4 J(const Point& p) const;
};

// (alpha x1^2, alpha x2^2, alpha x1 x2): scalar curvature 6 alpha,
// diagonalizable Jacobi operators with spectrum {0, alpha, alpha/4, alpha/4}.
ParaKahlerFamily make_parakahler(double alpha);

// a = b = c = x1^2 + x2^2 - 2 x1 x2: scalar-flat, Ricci-flat, vanishing
// self-dual Weyl half, nonvanishing anti-self-dual half, two-step nilpotent
// Jacobi operators for generic non-null directions.
WalkerMetric make_antiselfdual_example();

}  // namespace walker
