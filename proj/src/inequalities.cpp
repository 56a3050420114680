#include "fracgruss/inequalities.hpp"

#include <cmath>

#include "fracgruss/errors.hpp"
#include "fracgruss/operators.hpp"

namespace fracgruss {

namespace {

struct Ctx {
  const OperatorParams& p1;
  const OperatorParams& p2;
  double x;
  std::size_t n;

  double J1(const FunctionSpec& f) const { return left_integral(f, p1, x, n).value; }
  double J2(const FunctionSpec& f) const { return left_integral(f, p2, x, n).value; }
  double lam1() const { return lambda_value(p1, x); }
  double lam2() const { return lambda_value(p2, x); }
};

Ctx one_param_ctx(const OperatorParams& p, double x, std::size_t n) { return Ctx{p, p, x, n}; }

Ctx case_ctx(const TwoParamCase& c) { return Ctx{c.first, c.second, c.x, c.nodes}; }

// Cancellation between large constituent products is the only noise source
// in these functionals, so every builder can append the products it combines
// to a term list; verdict scales are taken over those.

/// L * J(f*g) - Jf * Jg under one parameter pack; shared by check_thm2 and
/// check_cs_one_param so the two report the same quantity bit-for-bit.
double covariance_gap(const Ctx& ctx, const FunctionSpec& f, const FunctionSpec& g,
                      std::vector<double>* terms = nullptr) {
  double weighted = ctx.lam1() * ctx.J1(f * g);
  double split = ctx.J1(f) * ctx.J1(g);
  if (terms) terms->insert(terms->end(), {weighted, split});
  return weighted - split;
}

double T_of(const Ctx& ctx, const FunctionSpec& phi, const FunctionSpec& psi,
            const FunctionSpec& omega, std::vector<double>* terms = nullptr) {
  double Jp = ctx.J1(phi);
  double Js = ctx.J1(psi);
  double Jw = ctx.J1(omega);
  double L = ctx.lam1();
  double parts[] = {(Jw - Jp) * (Jp - Js),
                    L * ctx.J1(phi * psi),
                    -Jp * Js,
                    L * ctx.J1(phi * omega),
                    -Jp * Jw,
                    -L * ctx.J1(psi * omega),
                    Js * Jw};
  double sum = 0.0;
  for (double part : parts) {
    sum += part;
    if (terms) terms->push_back(part);
  }
  return sum;
}

double K_of(const Ctx& ctx, const FunctionSpec& phi, const FunctionSpec& psi,
            const FunctionSpec& omega, std::vector<double>* terms = nullptr) {
  double J1p = ctx.J1(phi), J1s = ctx.J1(psi), J1w = ctx.J1(omega);
  double J2p = ctx.J2(phi), J2s = ctx.J2(psi), J2w = ctx.J2(omega);
  double L1 = ctx.lam1(), L2 = ctx.lam2();
  double parts[] = {(J2w - J2p) * (J1p - J1s),
                    (J2p - J2s) * (J1w - J1p),
                    -J2w * J1p,
                    -J2p * J1w,
                    -J2p * J1s,
                    -J2s * J1p,
                    J2w * J1s,
                    J2s * J1w,
                    L2 * ctx.J1(psi * phi),
                    L2 * ctx.J1(omega * phi),
                    -L2 * ctx.J1(psi * omega),
                    L1 * ctx.J2(psi * phi),
                    L1 * ctx.J2(omega * phi),
                    -L1 * ctx.J2(psi * omega)};
  double sum = 0.0;
  for (double part : parts) {
    sum += part;
    if (terms) terms->push_back(part);
  }
  return sum;
}

/// sqrt of a provably-nonnegative quantity: tiny negatives (quadrature noise)
/// clamp to 0; anything below -tol*scale is a genuine violation.
double sqrt_clamped(double value, double tol, double scale, const char* label) {
  if (value < -tol * scale) {
    throw InconsistencyError(std::string(label) + " is negative beyond tolerance: " +
                             format_double(value) + " with scale " + format_double(scale));
  }
  return std::sqrt(std::max(0.0, value));
}

nlohmann::json params_json(const OperatorParams& p) {
  return {{"rho", p.rho}, {"alpha", p.alpha}, {"beta", p.beta}, {"eta", p.eta}, {"k", p.k}};
}

nlohmann::json case_json(const TwoParamCase& c) {
  nlohmann::json j = params_json(c.first);
  j["delta"] = c.second.alpha;
  j["lambda"] = c.second.beta;
  return {{"params", j}, {"x", c.x}, {"nodes", c.nodes}};
}

nlohmann::json bounded_json(const BoundedFunction& f) {
  return {{"fn", f.fn.serialize()},
          {"lower", f.lower.serialize()},
          {"upper", f.upper.serialize()}};
}

nlohmann::json const_bounds_json(const FunctionSpec& f, const ConstantBounds& b) {
  return {{"fn", f.serialize()}, {"lo", b.m}, {"hi", b.M}};
}

}  // namespace

TwoParamCase::TwoParamCase(OperatorParams first_, OperatorParams second_, double x_,
                           std::size_t nodes_)
    : first(first_), second(second_), x(x_), nodes(nodes_) {
  if (first.rho != second.rho || first.eta != second.eta || first.k != second.k) {
    throw PreconditionError("a TwoParamCase varies only (alpha, beta) vs (delta, lambda); "
                            "rho, eta, k must match");
  }
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("TwoParamCase requires x > 0");
  if (nodes < 1) throw DomainError("node count must be at least 1");
}

double functional_T(const FunctionSpec& phi, const FunctionSpec& psi, const FunctionSpec& omega,
                    const OperatorParams& p, double x, std::size_t n) {
  return T_of(one_param_ctx(p, x, n), phi, psi, omega);
}

double functional_K(const FunctionSpec& phi, const FunctionSpec& psi, const FunctionSpec& omega,
                    const TwoParamCase& c) {
  return K_of(case_ctx(c), phi, psi, omega);
}

CheckReport check_thm1(const BoundedFunction& v, const TwoParamCase& c, CheckOptions opt) {
  v.certify(c.x, opt.cert_grid);
  Ctx ctx = case_ctx(c);
  double J1v = ctx.J1(v.fn), J2v = ctx.J2(v.fn);
  double J1z2 = ctx.J1(v.upper), J2z1 = ctx.J2(v.lower);
  double greater = J1z2 * J2v + J1v * J2z1;
  double lesser = J1v * J2v + J1z2 * J2z1;
  CheckReport r = make_inequality_report(
      "thm1", lesser, greater, {J1z2 * J2v, J1v * J2z1, J1v * J2v, J1z2 * J2z1}, opt.tol);
  r.inputs = case_json(c);
  r.inputs["v"] = bounded_json(v);
  return r;
}

CheckReport check_cor1(const FunctionSpec& v, const ConstantBounds& b, const TwoParamCase& c,
                       CheckOptions opt) {
  certify_constant_bounds(v, b, c.x, opt.cert_grid);
  Ctx ctx = case_ctx(c);
  double J1v = ctx.J1(v), J2v = ctx.J2(v);
  double L1 = ctx.lam1(), L2 = ctx.lam2();
  double greater = b.M * L1 * J2v + b.m * L2 * J1v;
  double lesser = J1v * J2v + b.m * b.M * L1 * L2;
  CheckReport r = make_inequality_report(
      "cor1", lesser, greater, {b.M * L1 * J2v, b.m * L2 * J1v, J1v * J2v, b.m * b.M * L1 * L2},
      opt.tol);
  r.inputs = case_json(c);
  r.inputs["v"] = const_bounds_json(v, b);
  return r;
}

CheckReport residual_lemma1(const BoundedFunction& v, const OperatorParams& p, double x,
                            std::size_t n, CheckOptions opt) {
  v.certify(x, opt.cert_grid);
  Ctx ctx = one_param_ctx(p, x, n);
  const FunctionSpec &fn = v.fn, &z1 = v.lower, &z2 = v.upper;
  double Jv = ctx.J1(fn), Jz1 = ctx.J1(z1), Jz2 = ctx.J1(z2);
  double L = ctx.lam1();

  double lhs = L * ctx.J1(fn * fn) - Jv * Jv;
  double cross = ctx.J1((z2 - fn) * (fn - z1));
  double rhs = (Jz2 - Jv) * (Jv - Jz1) - L * cross                //
               + L * ctx.J1(z1 * fn) - Jz1 * Jv                   //
               + L * ctx.J1(z2 * fn) - Jz2 * Jv                   //
               - L * ctx.J1(z1 * z2) + Jz2 * Jz1;

  CheckReport r = make_identity_report(
      "lemma1", lhs, rhs,
      {lhs, (Jz2 - Jv) * (Jv - Jz1), L * cross, L * ctx.J1(z1 * fn), Jz1 * Jv,
       L * ctx.J1(z2 * fn), Jz2 * Jv, L * ctx.J1(z1 * z2), Jz2 * Jz1},
      opt.tol);
  r.inputs = {{"params", params_json(p)}, {"x", x}, {"nodes", n}, {"v", bounded_json(v)}};
  return r;
}

CheckReport check_thm2(const BoundedFunction& v, const BoundedFunction& u,
                       const OperatorParams& p, double x, std::size_t n, CheckOptions opt) {
  v.certify(x, opt.cert_grid);
  u.certify(x, opt.cert_grid);
  Ctx ctx = one_param_ctx(p, x, n);
  std::vector<double> terms;
  double gap = covariance_gap(ctx, v.fn, u.fn, &terms);
  double Tv = T_of(ctx, v.fn, v.lower, v.upper, &terms);
  double Tu = T_of(ctx, u.fn, u.lower, u.upper, &terms);
  double lhs = gap * gap;
  double rhs = Tv * Tu;
  terms.insert(terms.end(), {lhs, Tv, Tu, rhs});
  CheckReport r = make_inequality_report("thm2", lhs, rhs, terms, opt.tol);
  r.inputs = {{"params", params_json(p)}, {"x", x},
              {"nodes", n},               {"v", bounded_json(v)},
              {"u", bounded_json(u)}};
  return r;
}

CheckReport check_cs_one_param(const FunctionSpec& v, const FunctionSpec& u,
                               const OperatorParams& p, double x, std::size_t n,
                               CheckOptions opt) {
  Ctx ctx = one_param_ctx(p, x, n);
  std::vector<double> terms;
  double gap = covariance_gap(ctx, v, u, &terms);
  double Ju = ctx.J1(u), Jv = ctx.J1(v);
  double L = ctx.lam1();
  double var_u = L * ctx.J1(u * u) - Ju * Ju;
  double var_v = L * ctx.J1(v * v) - Jv * Jv;
  double lhs = gap * gap;
  double rhs = var_u * var_v;
  terms.insert(terms.end(),
               {L * ctx.J1(u * u), Ju * Ju, L * ctx.J1(v * v), Jv * Jv, lhs, rhs});
  CheckReport r = make_inequality_report("cs1", lhs, rhs, terms, opt.tol);
  r.inputs = {{"params", params_json(p)},
              {"x", x},
              {"nodes", n},
              {"v", v.serialize()},
              {"u", u.serialize()}};
  return r;
}

CheckReport residual_lemma2(const BoundedFunction& v, const TwoParamCase& c, CheckOptions opt) {
  v.certify(c.x, opt.cert_grid);
  Ctx ctx = case_ctx(c);
  const FunctionSpec &fn = v.fn, &z1 = v.lower, &z2 = v.upper;
  double J1v = ctx.J1(fn), J1z1 = ctx.J1(z1), J1z2 = ctx.J1(z2);
  double J2v = ctx.J2(fn), J2z1 = ctx.J2(z1), J2z2 = ctx.J2(z2);
  double L1 = ctx.lam1(), L2 = ctx.lam2();
  FunctionSpec vsq = fn * fn;
  FunctionSpec cross = (z2 - fn) * (fn - z1);

  double lhs = L2 * ctx.J1(vsq) + L1 * ctx.J2(vsq) - 2.0 * J2v * J1v;
  double rhs = (J2z2 - J2v) * (J1v - J1z1)                              //
               + (J2v - J2z1) * (J1z2 - J1v)                            //
               - ctx.J1(cross) * L2 - ctx.J2(cross) * L1                //
               - J2z2 * J1v - J2v * J1z2                                //
               - J2v * J1z1 - J2z1 * J1v                                //
               + J2z2 * J1z1 + J2z1 * J1z2                              //
               + L2 * (ctx.J1(z1 * fn) + ctx.J1(z2 * fn) - ctx.J1(z1 * z2)) +
               L1 * (ctx.J2(z1 * fn) + ctx.J2(z2 * fn) - ctx.J2(z1 * z2));

  CheckReport r = make_identity_report(
      "lemma2", lhs, rhs,
      {lhs, L2 * ctx.J1(vsq), L1 * ctx.J2(vsq), 2.0 * J2v * J1v, J2z2 * J1v, J2v * J1z2,
       J2z2 * J1z1, L2 * ctx.J1(z1 * fn), L1 * ctx.J2(z2 * fn)},
      opt.tol);
  r.inputs = case_json(c);
  r.inputs["v"] = bounded_json(v);
  // Also surface the variant left side without the L1 weight on J2(v^2);
  // only the weighted form balances, which the residual above asserts.
  r.inputs["variant_lhs_unweighted"] = L2 * ctx.J1(vsq) + ctx.J2(vsq) - 2.0 * J2v * J1v;
  return r;
}

CheckReport check_thm3(const BoundedFunction& v, const BoundedFunction& u, const TwoParamCase& c,
                       CheckOptions opt) {
  v.certify(c.x, opt.cert_grid);
  u.certify(c.x, opt.cert_grid);
  Ctx ctx = case_ctx(c);
  double L1 = ctx.lam1(), L2 = ctx.lam2();
  std::vector<double> terms = {L2 * ctx.J1(u.fn * v.fn), L1 * ctx.J2(v.fn * u.fn),
                               ctx.J2(u.fn) * ctx.J1(v.fn), ctx.J2(v.fn) * ctx.J1(u.fn)};
  double mixed = terms[0] + terms[1] - terms[2] - terms[3];
  double Kv = K_of(ctx, v.fn, v.lower, v.upper, &terms);
  double Ku = K_of(ctx, u.fn, u.lower, u.upper, &terms);

  double lhs = std::abs(mixed);
  double scale_hint = report_scale(terms);
  double rhs = sqrt_clamped(Kv, opt.tol, scale_hint, "K(v)") *
               sqrt_clamped(Ku, opt.tol, scale_hint, "K(u)");
  terms.insert(terms.end(), {lhs, Kv, Ku, rhs});
  CheckReport r = make_inequality_report("thm3", lhs, rhs, terms, opt.tol);
  r.inputs = case_json(c);
  r.inputs["v"] = bounded_json(v);
  r.inputs["u"] = bounded_json(u);
  return r;
}

CheckReport check_thm4(Thm4Part part, const BoundedFunction& v, const BoundedFunction& u,
                       const TwoParamCase& c, CheckOptions opt) {
  v.certify(c.x, opt.cert_grid);
  u.certify(c.x, opt.cert_grid);
  Ctx ctx = case_ctx(c);

  // Each part pairs one operator applied to v and its envelopes with the
  // other applied to u and its envelopes. ga+gb >= la+lb is the statement;
  // the four products set the verdict scale.
  double ga = 0.0, gb = 0.0, la = 0.0, lb = 0.0;
  std::string id;
  switch (part) {
    case Thm4Part::a: {
      double J1v = ctx.J1(v.fn), J1z2 = ctx.J1(v.upper);
      double J2u = ctx.J2(u.fn), J2g1 = ctx.J2(u.lower);
      ga = J2u * J1z2, gb = J2g1 * J1v;
      la = J2g1 * J1z2, lb = J2u * J1v;
      id = "thm4a";
      break;
    }
    case Thm4Part::b: {
      double J2v = ctx.J2(v.fn), J2z1 = ctx.J2(v.lower);
      double J1u = ctx.J1(u.fn), J1g2 = ctx.J1(u.upper);
      ga = J2z1 * J1u, gb = J1g2 * J2v;
      la = J2z1 * J1g2, lb = J2v * J1u;
      id = "thm4b";
      break;
    }
    case Thm4Part::c: {
      double J1v = ctx.J1(v.fn), J1z2 = ctx.J1(v.upper);
      double J2u = ctx.J2(u.fn), J2g2 = ctx.J2(u.upper);
      ga = J1z2 * J2g2, gb = J1v * J2u;
      la = J1z2 * J2u, lb = J2g2 * J1v;
      id = "thm4c";
      break;
    }
    case Thm4Part::d: {
      double J1v = ctx.J1(v.fn), J1z1 = ctx.J1(v.lower);
      double J2u = ctx.J2(u.fn), J2g1 = ctx.J2(u.lower);
      ga = J1z1 * J2g1, gb = J1v * J2u;
      la = J1z1 * J2u, lb = J2g1 * J1v;
      id = "thm4d";
      break;
    }
  }
  CheckReport r = make_inequality_report(id, la + lb, ga + gb, {ga, gb, la, lb}, opt.tol);
  r.inputs = case_json(c);
  r.inputs["v"] = bounded_json(v);
  r.inputs["u"] = bounded_json(u);
  return r;
}

CheckReport check_cor2(Cor2Part part, const FunctionSpec& v, const FunctionSpec& u,
                       const ConstantBounds& vb, const ConstantBounds& ub, const TwoParamCase& c,
                       CheckOptions opt) {
  certify_constant_bounds(v, vb, c.x, opt.cert_grid);
  certify_constant_bounds(u, ub, c.x, opt.cert_grid);
  Ctx ctx = case_ctx(c);
  double J1v = ctx.J1(v), J2u = ctx.J2(u), J1u = ctx.J1(u), J2v = ctx.J2(v);
  double L1 = ctx.lam1(), L2 = ctx.lam2();
  double m = vb.m, M = vb.M, nn = ub.m, N = ub.M;

  double ga = 0.0, gb = 0.0, la = 0.0, lb = 0.0;
  std::string id;
  switch (part) {
    case Cor2Part::A:
      ga = M * L1 * J2u, gb = nn * L2 * J1v;
      la = nn * M * L2 * L1, lb = J2u * J1v;
      id = "cor2a";
      break;
    case Cor2Part::B:
      ga = m * L2 * J1u, gb = N * L1 * J2v;
      la = m * N * L2 * L1, lb = J2v * J1u;
      id = "cor2b";
      break;
    case Cor2Part::C:
      ga = M * N * L1 * L2, gb = J1v * J2u;
      la = M * L1 * J2u, lb = N * L2 * J1v;
      id = "cor2c";
      break;
    case Cor2Part::D:
      ga = m * nn * L1 * L2, gb = J1v * J2u;
      la = m * L1 * J2u, lb = nn * L2 * J1v;
      id = "cor2d";
      break;
  }
  CheckReport r = make_inequality_report(id, la + lb, ga + gb, {ga, gb, la, lb}, opt.tol);
  r.inputs = case_json(c);
  r.inputs["v"] = const_bounds_json(v, vb);
  r.inputs["u"] = const_bounds_json(u, ub);
  return r;
}

CheckReport check_dahmani_remark(const FunctionSpec& v, const FunctionSpec& u,
                                 const ConstantBounds& vb, const ConstantBounds& ub,
                                 const OperatorParams& p, double x, std::size_t n,
                                 CheckOptions opt) {
  certify_constant_bounds(v, vb, x, opt.cert_grid);
  certify_constant_bounds(u, ub, x, opt.cert_grid);
  Ctx ctx = one_param_ctx(p, x, n);
  double gap = covariance_gap(ctx, v, u);
  double L = ctx.lam1();
  double lhs = std::abs(gap);
  double rhs = L * L * (vb.M - vb.m) * (ub.M - ub.m);
  CheckReport r = make_inequality_report("dahmani", lhs, rhs, {lhs, rhs, L * L}, opt.tol);
  r.inputs = {{"params", params_json(p)},
              {"x", x},
              {"nodes", n},
              {"v", const_bounds_json(v, vb)},
              {"u", const_bounds_json(u, ub)}};
  return r;
}

}  // namespace fracgruss
