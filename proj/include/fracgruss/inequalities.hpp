#pragma once

#include <cstddef>

#include "fracgruss/expression.hpp"
#include "fracgruss/params.hpp"
#include "fracgruss/report.hpp"

namespace fracgruss {

/// Evaluation context of the two-parameter results: one operator with
/// (alpha, beta), a second with (delta, lambda) in its alpha/beta slots, and
/// shared rho, eta, k. Both are evaluated at the same x with the same rule
/// size.
struct TwoParamCase {
  OperatorParams first;   // (alpha, beta)
  OperatorParams second;  // (delta, lambda)
  double x;
  std::size_t nodes;

  TwoParamCase(OperatorParams first_, OperatorParams second_, double x_,
               std::size_t nodes_ = kDefaultNodes);
};

/// Tuning knobs shared by the checkers.
struct CheckOptions {
  double tol = kDefaultTol;
  std::size_t cert_grid = kDefaultCertGrid;
};

/// One-parameter remainder functional
///   T(phi,psi,omega) = (Jw - Jp)(Jp - Js) + L*J(p*s) - Jp*Js
///                    + L*J(p*w) - Jp*Jw - L*J(s*w) + Js*Jw
/// with J the left-sided operator under p at x and L = lambda_value(p, x)
/// (p = phi, s = psi, w = omega). Nonnegative whenever psi <= phi <= omega.
double functional_T(const FunctionSpec& phi, const FunctionSpec& psi, const FunctionSpec& omega,
                    const OperatorParams& p, double x, std::size_t n = kDefaultNodes);

/// Two-parameter remainder functional of the mixed Cauchy-Schwarz bound;
/// uses both operators of the case and both lambda weights.
double functional_K(const FunctionSpec& phi, const FunctionSpec& psi, const FunctionSpec& omega,
                    const TwoParamCase& c);

/// J1(z2) J2(v) + J1(v) J2(z1) >= J1(v) J2(v) + J1(z2) J2(z1).
CheckReport check_thm1(const BoundedFunction& v, const TwoParamCase& c, CheckOptions opt = {});

/// M L1 J2(v) + m L2 J1(v) >= J1(v) J2(v) + m M L1 L2 for constant bounds.
CheckReport check_cor1(const FunctionSpec& v, const ConstantBounds& b, const TwoParamCase& c,
                       CheckOptions opt = {});

/// One-parameter identity: L J(v^2) - (Jv)^2 equals the six-term envelope
/// expansion. Reports an identity residual.
CheckReport residual_lemma1(const BoundedFunction& v, const OperatorParams& p, double x,
                            std::size_t n = kDefaultNodes, CheckOptions opt = {});

/// [L J(vu) - Jv Ju]^2 <= T(v,z1,z2) T(u,g1,g2).
CheckReport check_thm2(const BoundedFunction& v, const BoundedFunction& u,
                       const OperatorParams& p, double x, std::size_t n = kDefaultNodes,
                       CheckOptions opt = {});

/// Cauchy-Schwarz step: (L J(uv) - Ju Jv)^2 <= (L J(u^2) - (Ju)^2)(L J(v^2) - (Jv)^2).
CheckReport check_cs_one_param(const FunctionSpec& v, const FunctionSpec& u,
                               const OperatorParams& p, double x, std::size_t n = kDefaultNodes,
                               CheckOptions opt = {});

/// Two-parameter identity behind the mixed bound. Implements the weighted
/// form L2 J1(v^2) + L1 J2(v^2) - 2 J2(v) J1(v) = ...; the unweighted variant
/// of the left side is surfaced in inputs["variant_lhs_unweighted"].
CheckReport residual_lemma2(const BoundedFunction& v, const TwoParamCase& c,
                            CheckOptions opt = {});

/// |L2 J1(uv) + L1 J2(vu) - J2(u) J1(v) - J2(v) J1(u)| <= sqrt(K_v K_u).
/// K values in [-tol*scale, 0) are clamped to 0 before the square root; a
/// value below -tol*scale raises InconsistencyError.
CheckReport check_thm3(const BoundedFunction& v, const BoundedFunction& u, const TwoParamCase& c,
                       CheckOptions opt = {});

enum class Thm4Part { a, b, c, d };

/// Cross-bound product inequalities, parts (a)-(d).
CheckReport check_thm4(Thm4Part part, const BoundedFunction& v, const BoundedFunction& u,
                       const TwoParamCase& c, CheckOptions opt = {});

enum class Cor2Part { A, B, C, D };

/// Constant-bound corollaries of the part (a)-(d) inequalities.
/// vb bounds v (m, M), ub bounds u (n, N).
CheckReport check_cor2(Cor2Part part, const FunctionSpec& v, const FunctionSpec& u,
                       const ConstantBounds& vb, const ConstantBounds& ub, const TwoParamCase& c,
                       CheckOptions opt = {});

/// Constant-bound covariance gap: |L J(vu) - Jv Ju| <= L^2 (M-m)(P-p).
/// vb bounds v (m, M), ub bounds u (p, P).
CheckReport check_dahmani_remark(const FunctionSpec& v, const FunctionSpec& u,
                                 const ConstantBounds& vb, const ConstantBounds& ub,
                                 const OperatorParams& p, double x,
                                 std::size_t n = kDefaultNodes, CheckOptions opt = {});

}  // namespace fracgruss
