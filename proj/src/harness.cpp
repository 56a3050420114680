#include "fracgruss/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <thread>

#include "fracgruss/errors.hpp"

namespace fracgruss {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitMix64::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

std::uint64_t SplitMix64::below(std::uint64_t bound) { return next() % bound; }

std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t index) {
  SplitMix64 g{master_seed ^ (kGolden * (index + 1))};
  return g.next();
}

std::string family_name(CaseFamily f) {
  switch (f) {
    case CaseFamily::constant: return "constant";
    case CaseFamily::monomial: return "monomial";
    case CaseFamily::polynomial: return "polynomial";
    case CaseFamily::trig_poly: return "trig_poly";
    case CaseFamily::exp_mix: return "exp_mix";
  }
  throw DomainError("bad family enum");
}

CaseFamily family_from_name(const std::string& name) {
  for (CaseFamily f : all_families()) {
    if (family_name(f) == name) return f;
  }
  throw ParseError("unknown case family '" + name + "'");
}

const std::vector<CaseFamily>& all_families() {
  static const std::vector<CaseFamily> fams = {CaseFamily::constant, CaseFamily::monomial,
                                               CaseFamily::polynomial, CaseFamily::trig_poly,
                                               CaseFamily::exp_mix};
  return fams;
}

namespace {

FunctionSpec draw_function(SplitMix64& rng, CaseFamily family) {
  switch (family) {
    case CaseFamily::constant:
      return FunctionSpec::constant(rng.uniform(-2.0, 2.0));
    case CaseFamily::monomial: {
      double coeff = rng.uniform(-2.0, 2.0);
      auto degree = static_cast<double>(rng.below(5));  // 0..4
      return FunctionSpec::scale(coeff, FunctionSpec::power(degree));
    }
    case CaseFamily::polynomial: {
      auto degree = 1 + rng.below(3);  // 1..3
      std::vector<FunctionSpec> terms;
      terms.push_back(FunctionSpec::constant(rng.uniform(-1.5, 1.5)));
      for (std::uint64_t i = 1; i <= degree; ++i) {
        terms.push_back(FunctionSpec::scale(rng.uniform(-1.5, 1.5),
                                            FunctionSpec::power(static_cast<double>(i))));
      }
      return FunctionSpec::sum(std::move(terms));
    }
    case CaseFamily::trig_poly: {
      double a0 = rng.uniform(-1.5, 1.5);
      double a1 = rng.uniform(-1.5, 1.5), w1 = rng.uniform(0.5, 3.0);
      double a2 = rng.uniform(-1.5, 1.5), w2 = rng.uniform(0.5, 3.0);
      return FunctionSpec::sum(
          {FunctionSpec::constant(a0),
           FunctionSpec::scale(a1, FunctionSpec::sin_of(
                                       FunctionSpec::scale(w1, FunctionSpec::variable()))),
           FunctionSpec::scale(a2, FunctionSpec::cos_of(
                                       FunctionSpec::scale(w2, FunctionSpec::variable())))});
    }
    case CaseFamily::exp_mix: {
      double a0 = rng.uniform(-1.5, 1.5);
      double a1 = rng.uniform(-1.5, 1.5), rate = rng.uniform(-1.0, 1.0);
      double a2 = rng.uniform(-1.5, 1.5);
      return FunctionSpec::sum(
          {FunctionSpec::constant(a0),
           FunctionSpec::scale(a1, FunctionSpec::exp_of(
                                       FunctionSpec::scale(rate, FunctionSpec::variable()))),
           FunctionSpec::scale(a2, FunctionSpec::variable())});
    }
  }
  throw DomainError("bad family enum");
}

BoundedFunction draw_bounded(SplitMix64& rng, CaseFamily family) {
  FunctionSpec fn = draw_function(rng, family);
  if (family == CaseFamily::constant) {
    return BoundedFunction{fn, fn, fn};
  }
  auto margin = [&rng] {
    double c = rng.uniform(0.05, 1.5);
    return FunctionSpec::scale(
        c, FunctionSpec::sum({FunctionSpec::constant(1.0), FunctionSpec::power(2.0)}));
  };
  return BoundedFunction{fn, fn - margin(), fn + margin()};
}

}  // namespace

GeneratedCase generate_case(std::uint64_t seed, CaseFamily family, double x_max,
                            std::size_t nodes) {
  if (!(x_max >= 0.3)) throw DomainError("x_max must be at least 0.3");
  SplitMix64 rng{seed};

  // Draw order is part of the reproducibility contract; do not reorder.
  double rho = rng.uniform(0.4, 2.5);
  double eta = rng.uniform(-0.9, 2.0);
  double k = rng.uniform(-1.5, 1.5);
  double alpha = rng.uniform(0.2, 3.0);
  double beta = rng.uniform(-1.5, 1.5);
  double delta = rng.uniform(0.2, 3.0);
  double lambda = rng.uniform(-1.5, 1.5);
  double x = rng.uniform(0.3, x_max);

  BoundedFunction v = draw_bounded(rng, family);
  BoundedFunction u = draw_bounded(rng, family);

  TwoParamCase params(OperatorParams(rho, alpha, beta, eta, k),
                      OperatorParams(rho, delta, lambda, eta, k), x, nodes);
  v.certify(x);
  u.certify(x);
  return GeneratedCase{std::move(v), std::move(u), params, seed};
}

const std::vector<std::string>& known_theorem_ids() {
  static const std::vector<std::string> ids = {
      "thm1",  "cor1",  "lemma1", "thm2",  "cs1",   "lemma2",  "thm3",  "thm4a",
      "thm4b", "thm4c", "thm4d",  "cor2a", "cor2b", "cor2c",   "cor2d", "dahmani"};
  return ids;
}

bool is_identity_check(const std::string& theorem_id) {
  return theorem_id == "lemma1" || theorem_id == "lemma2" || theorem_id == "comp";
}

CheckReport run_check(const std::string& id, const GeneratedCase& gc, CheckOptions opt) {
  const TwoParamCase& c = gc.params;
  const OperatorParams& p = c.first;

  CheckReport r = [&] {
    if (id == "thm1") return check_thm1(gc.v, c, opt);
    if (id == "cor1") return check_cor1(gc.v.fn, grid_extrema(gc.v.fn, c.x, opt.cert_grid), c, opt);
    if (id == "lemma1") return residual_lemma1(gc.v, p, c.x, c.nodes, opt);
    if (id == "thm2") return check_thm2(gc.v, gc.u, p, c.x, c.nodes, opt);
    if (id == "cs1") return check_cs_one_param(gc.v.fn, gc.u.fn, p, c.x, c.nodes, opt);
    if (id == "lemma2") return residual_lemma2(gc.v, c, opt);
    if (id == "thm3") return check_thm3(gc.v, gc.u, c, opt);
    if (id == "thm4a") return check_thm4(Thm4Part::a, gc.v, gc.u, c, opt);
    if (id == "thm4b") return check_thm4(Thm4Part::b, gc.v, gc.u, c, opt);
    if (id == "thm4c") return check_thm4(Thm4Part::c, gc.v, gc.u, c, opt);
    if (id == "thm4d") return check_thm4(Thm4Part::d, gc.v, gc.u, c, opt);
    if (id == "cor2a" || id == "cor2b" || id == "cor2c" || id == "cor2d") {
      Cor2Part part = id == "cor2a"   ? Cor2Part::A
                      : id == "cor2b" ? Cor2Part::B
                      : id == "cor2c" ? Cor2Part::C
                                      : Cor2Part::D;
      return check_cor2(part, gc.v.fn, gc.u.fn, grid_extrema(gc.v.fn, c.x, opt.cert_grid),
                        grid_extrema(gc.u.fn, c.x, opt.cert_grid), c, opt);
    }
    if (id == "dahmani") {
      return check_dahmani_remark(gc.v.fn, gc.u.fn, grid_extrema(gc.v.fn, c.x, opt.cert_grid),
                                  grid_extrema(gc.u.fn, c.x, opt.cert_grid), p, c.x, c.nodes,
                                  opt);
    }
    throw ParseError("unknown theorem id '" + id + "'");
  }();
  r.seed = gc.seed;
  return r;
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json failed = nlohmann::json::array();
  for (const auto& f : failures) {
    failed.push_back({{"seed", f.seed},
                      {"theorem_id", f.theorem_id},
                      {"slack", f.slack},
                      {"inputs", f.inputs}});
  }
  return nlohmann::json{{"total", total},
                        {"passed", passed},
                        {"failed", failed},
                        {"max_residual", max_residual},
                        {"wall_time_s", wall_time_s}};
}

SuiteReport run_suite(const SuiteConfig& config) {
  auto t0 = std::chrono::steady_clock::now();

  std::vector<std::string> ids = config.theorems.empty() ? known_theorem_ids() : config.theorems;
  for (const auto& id : ids) {
    const auto& known = known_theorem_ids();
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw ParseError("unknown theorem id '" + id + "'");
    }
  }
  if (config.families.empty()) throw ParseError("suite config needs at least one family");
  if (config.nodes < 1) throw DomainError("node count must be at least 1");

  CheckOptions opt;
  if (config.tolerance) opt.tol = *config.tolerance;

  std::vector<std::vector<CheckReport>> slots(config.trials);

  auto run_trial = [&](std::size_t index) {
    std::uint64_t seed = derive_trial_seed(config.master_seed, index);
    CaseFamily family = config.families[index % config.families.size()];
    std::vector<CheckReport>& out = slots[index];
    out.reserve(ids.size());
    try {
      GeneratedCase gc = generate_case(seed, family, config.x_max, config.nodes);
      for (const auto& id : ids) {
        try {
          out.push_back(run_check(id, gc, opt));
        } catch (const std::exception& e) {
          CheckReport r;
          r.theorem_id = id;
          r.seed = seed;
          r.tol = opt.tol;
          r.holds = false;
          r.slack = std::numeric_limits<double>::quiet_NaN();
          r.inputs = {{"error", e.what()}, {"family", family_name(family)}};
          out.push_back(std::move(r));
        }
      }
    } catch (const std::exception& e) {
      for (const auto& id : ids) {
        CheckReport r;
        r.theorem_id = id;
        r.seed = seed;
        r.tol = opt.tol;
        r.holds = false;
        r.slack = std::numeric_limits<double>::quiet_NaN();
        r.inputs = {{"error", std::string("case generation failed: ") + e.what()},
                    {"family", family_name(family)}};
        out.push_back(std::move(r));
      }
    }
  };

  std::size_t workers = std::max<std::size_t>(1, config.threads);
  if (workers == 1 || config.trials <= 1) {
    for (std::size_t i = 0; i < config.trials; ++i) run_trial(i);
  } else {
    std::atomic<std::size_t> next_index{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next_index.fetch_add(1);
          if (i >= config.trials) return;
          run_trial(i);
        }
      });
    }
    for (auto& t : pool) t.join();
  }

  SuiteReport report;
  for (std::size_t i = 0; i < config.trials; ++i) {
    for (auto& check : slots[i]) {
      ++report.total;
      double residual;
      if (std::isnan(check.slack)) {
        residual = std::numeric_limits<double>::infinity();
      } else if (is_identity_check(check.theorem_id)) {
        residual = check.slack / check.scale;
      } else {
        residual = std::max(0.0, -check.slack) / check.scale;
      }
      report.max_residual = std::max(report.max_residual, residual);
      if (check.holds) {
        ++report.passed;
      } else {
        report.failures.push_back(SuiteReport::Failure{check.seed, check.theorem_id, check.slack,
                                                       check.inputs});
      }
      report.checks.push_back(std::move(check));
    }
  }
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace fracgruss
