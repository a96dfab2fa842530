#include "ncpoisson_tools/commands.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>

#include "ncpoisson/json_io.hpp"
#include "ncpoisson/ncpoisson.hpp"

namespace ncpoisson::tools {

namespace {

using nlohmann::json;

/// Requested tolerances below this cannot be met by double arithmetic.
constexpr double kFloatFloor = 1e-15;

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Error: return "error";
  }
  return "error";
}

class Runner {
 public:
  Runner(Report& report, const RunConfig& config, std::string prefix)
      : report_(report), config_(config), prefix_(std::move(prefix)) {}

  /// Runs fn and compares its residual with the configured tolerance.
  void run(const std::string& name, const std::string& anchor, const std::function<double()>& fn) {
    Record r;
    r.name = prefix_ + name;
    r.anchor = anchor;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.residual = fn();
      if (r.residual <= config_.tol) {
        r.status = Status::Pass;
      } else if (config_.tol < kFloatFloor && std::isfinite(r.residual)) {
        r.status = Status::Error;
        r.diagnostic = "ToleranceUnachievable: residual above requested tol, which is below double precision";
      } else {
        r.status = Status::Fail;
      }
    } catch (const std::exception& e) {
      r.status = Status::Error;
      r.residual = std::numeric_limits<double>::quiet_NaN();
      r.diagnostic = e.what();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    report_.add(std::move(r));
  }

  /// Boolean check; residual 0 on success, 1 on failure.
  void expect(const std::string& name, const std::string& anchor, const std::function<bool()>& fn) {
    run(name, anchor, [&fn] { return fn() ? 0.0 : 1.0; });
  }

 private:
  Report& report_;
  const RunConfig& config_;
  std::string prefix_;
};

struct Degrees {
  int section;  ///< random sections
  int form;     ///< connection forms
  int field;    ///< vector field coefficients
  int lambda;   ///< bracket coefficient
};

Degrees degrees_for(int cap) {
  return Degrees{cap >= 4 ? 1 : 0, cap >= 4 ? 1 : 0, cap >= 3 ? 1 : 0, std::min(2, cap / 2)};
}

Connection random_connection(Rng& rng, const Model& model, int degree) {
  std::vector<PolyMat> forms;
  for (int v = 0; v < model.vars; ++v) forms.push_back(random_section(rng, model, degree));
  return Connection(std::move(forms));
}

VectorField random_field(Rng& rng, const Model& model, int degree) {
  std::vector<Poly> coeffs;
  for (int v = 0; v < model.vars; ++v) coeffs.push_back(random_poly(rng, model.vars, model.cap, degree));
  return VectorField(std::move(coeffs));
}

PolyMat constant_section(const MatC& m, const Model& model) { return PolyMat::from_matrix(m, model.vars, model.cap); }

// ---------------------------------------------------------------------------

void derivation_suite(Runner& run, int n, Rng& rng, const RunConfig& config, json& results) {
  const int expected = n == 1 ? 0 : n * n - 1;
  std::optional<DerivationSpace> space;
  try {
    space = derivation_space(n);
    results["der_dim"] = space->dim;
  } catch (const std::exception&) {
  }
  const auto need_space = [&]() -> const DerivationSpace& {
    if (!space) throw Error(ErrorCode::Inconsistent, "derivation space unavailable");
    return *space;
  };

  run.run("derivations.space_dim", "derivations-are-inner",
          [&] { return std::abs(static_cast<double>(need_space().dim - expected)); });
  run.run("derivations.inner_resolution", "derivations-are-inner", [&] {
    double worst = 0.0;
    for (const auto& d : need_space().basis) {
      const PolyMat g = solve_inner_generator(d, config.tol);
      worst = std::max(worst, basis_distance(d, Derivation::inner(g)));
    }
    return worst;
  });
  run.run("derivations.leibniz", "derivations-are-inner", [&] {
    double worst = 0.0;
    for (const auto& d : need_space().basis) worst = std::max(worst, sampled_leibniz_defect(d, rng.next(), 4, 0));
    return worst;
  });
  run.run("derivations.center_invariant", "center-invariant", [&] {
    double worst = 0.0;
    const PolyMat one = PolyMat::identity(Model::matrix(n));
    for (const auto& d : need_space().basis) worst = std::max(worst, d.apply(one).max_abs());
    return worst;
  });
  run.run("derivations.inner_round_trip", "derivations-are-inner", [&] {
    double worst = 0.0;
    for (int s = 0; s < config.samples; ++s) {
      const PolyMat g = PolyMat::from_matrix(random_matrix(rng, n));
      worst = std::max(worst, distance(solve_inner_generator(Derivation::inner(g)), traceless_part(g)));
    }
    return worst;
  });
  run.run("derivations.bracket_closure", "derivations-are-inner", [&] {
    const auto& basis = need_space().basis;
    double worst = 0.0;
    for (std::size_t a = 0; a + 1 < basis.size(); ++a) {
      worst = std::max(worst, sampled_leibniz_defect(der_bracket(basis[a], basis[a + 1]), rng.next(), 2, 0));
    }
    return worst;
  });
  if (n >= 2) {
    run.run("commutators.witnesses", "commutators-generate", [&] {
      double worst = 0.0;
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          worst = std::max(worst, max_abs(express_in_commutators(n, i, j).multiply_out() - elementary(n, i, j)));
        }
      }
      return worst;
    });
  }
}

void classification_suite(Runner& run, int n, json& results, const RunConfig& config) {
  std::optional<ClassificationResult> cr;
  std::string failure;
  try {
    cr = classify_matrix_brackets(n);
    results["space_dim"] = cr->space_dim;
  } catch (const std::exception& e) {
    failure = e.what();
  }
  const auto need = [&]() -> const ClassificationResult& {
    if (!cr) throw Error(ErrorCode::ClassificationMismatch, failure);
    return *cr;
  };
  const int expected = n == 1 ? 0 : 1;
  run.run("classification.space_dim", "matrix-bracket-classification",
          [&] { return std::abs(static_cast<double>(need().space_dim - expected)); });
  run.run("classification.proportionality", "matrix-bracket-classification",
          [&] { return need().proportionality_deviation; });
  run.run("classification.jacobi", "matrix-bracket-classification", [&] { return need().jacobi_residual; });
  run.run("classification.h3", "hamiltonian-conditions", [&] { return need().h3_residual; });
  if (n >= 2) {
    run.run("classification.projector_hamiltonians", "projector-hamiltonians", [&] {
      const HamiltonianMap& f = need().generator;
      std::vector<Scalar> ks;
      for (const auto& p : projector_basis(n)) {
        const PolyMat image = f.apply(PolyMat::from_matrix(p));
        const MatC t = traceless_part(p);
        const MatC fi = image.constant_matrix();
        const Scalar k = (t.adjoint() * fi).trace() / (t.adjoint() * t).trace();
        ks.push_back(k);
        if (max_abs(fi - k * t) > config.tol) return max_abs(fi - k * t);
      }
      double spread = 0.0;
      for (const auto& k : ks) spread = std::max(spread, std::abs(k - ks.front()));
      return spread;
    });
  }
}

void hamiltonian_suite(Runner& run, int n, Rng& rng, const RunConfig& config) {
  if (n < 2) return;
  const Degrees deg = degrees_for(config.cap);
  const Model model = Model::bundle(n, config.vars, config.cap);
  const int domain = config.cap - deg.lambda;
  const Poly lambda = random_poly(rng, config.vars, config.cap, deg.lambda);
  std::optional<HamiltonianMap> f;
  std::optional<HamiltonianDefects> d;
  std::string failure;
  try {
    f = HamiltonianMap::scalar_multiple(model, domain, lambda);
    d = hamiltonian_checks(*f);
  } catch (const std::exception& e) {
    failure = e.what();
  }
  const auto need = [&]() -> const HamiltonianDefects& {
    if (!d) throw Error(ErrorCode::Inconsistent, failure);
    return *d;
  };
  run.run("hamiltonian.h1", "hamiltonian-conditions", [&] { return need().h1; });
  run.run("hamiltonian.h2", "hamiltonian-conditions", [&] { return need().h2; });
  run.run("hamiltonian.h3", "hamiltonian-conditions", [&] { return need().h3; });
  run.run("hamiltonian.bundle_lambda", "bundle-bracket-classification", [&] {
    need();
    return distance(classify_bundle_bracket(*f, config.tol), lambda);
  });
  run.expect("hamiltonian.bundle_degenerate", "bundle-brackets-degenerate", [&] {
    const Nondegeneracy nd = is_nondegenerate(Bracket::polynomial(lambda), model, config.tol);
    return !nd.nondegenerate && nd.witness &&
           distance(rho(*nd.witness, config.tol), VectorField::coordinate(0, config.vars, config.cap)) <= config.tol;
  });
}

void projector_suite(Runner& run, int n, Rng& rng, const RunConfig& config) {
  const Model model = Model::matrix(n);
  const Bracket b = Bracket::scalar(random_scalar(rng));
  ProjectorBlock worst;
  std::string failure;
  try {
    for (const auto& p : projector_basis(n)) {
      const auto r = projector_block_check(b, PolyMat::from_matrix(p), PolyMat::from_matrix(random_matrix(rng, n)));
      worst.identity_defect = std::max(worst.identity_defect, r.identity_defect);
      worst.block_leak = std::max(worst.block_leak, r.block_leak);
    }
    for (int s = 0; s < config.samples; ++s) {
      const MatC g = MatC::Identity(n, n) + 0.3 * random_matrix(rng, n);
      const MatC p = g * elementary(n, 1, 1) * g.inverse();
      const auto r = projector_block_check(b, PolyMat::from_matrix(p), PolyMat::from_matrix(random_matrix(rng, n)));
      worst.identity_defect = std::max(worst.identity_defect, r.identity_defect);
      worst.block_leak = std::max(worst.block_leak, r.block_leak);
    }
  } catch (const std::exception& e) {
    failure = e.what();
  }
  const auto need = [&] {
    if (!failure.empty()) throw Error(ErrorCode::Inconsistent, failure);
  };
  run.run("projector.identity_defect", "projector-hamiltonians", [&] {
    need();
    return worst.identity_defect;
  });
  run.run("projector.block_leak", "projector-hamiltonians", [&] {
    need();
    return worst.block_leak;
  });
  run.run("projector.center_commutators", "center-brackets-commutators", [&] {
    const Degrees deg = degrees_for(config.cap);
    const Model bundle = Model::bundle(n, config.vars, config.cap);
    const Bracket lb = Bracket::polynomial(random_poly(rng, config.vars, config.cap, std::min(deg.lambda, config.cap - 1)));
    double w = center_comm_check(Bracket::scalar(1.0), PolyMat::identity(model), PolyMat::from_matrix(random_matrix(rng, n)),
                                 PolyMat::from_matrix(random_matrix(rng, n)))
                   .max_abs();
    for (int s = 0; s < config.samples; ++s) {
      const PolyMat z = PolyMat::scalar_section(random_poly(rng, config.vars, config.cap, 1), n);
      const PolyMat a = random_section(rng, bundle, 0);
      const PolyMat c = random_section(rng, bundle, 0);
      w = std::max(w, center_comm_check(lb, z, a, c).max_abs());
    }
    return w;
  });
}

void ideal_suite(Runner& run, int n, Rng& rng, const RunConfig& config) {
  const Degrees deg = degrees_for(config.cap);
  const Model model = Model::bundle(n, config.vars, config.cap);
  const Point x0 = random_point(rng, config.vars);
  const Ideal ideal = Ideal::points({x0});
  const Bracket b = Bracket::polynomial(random_poly(rng, config.vars, config.cap, std::min(1, config.cap - 1)));
  const Connection conn = random_connection(rng, model, std::min(deg.form, config.cap - 1));
  const std::uint64_t ideal_seed = rng.next();

  run.run("ideals.poisson_ideal", "point-ideal-locally-proper",
          [&] { return poisson_ideal_max_residual(b, ideal, model, config.samples, ideal_seed); });
  run.expect("ideals.locally_proper", "point-ideal-locally-proper",
             [&] { return locally_proper_witness(ideal, conn, config.tol).escape > config.tol; });
  run.run("ideals.lift_square", "point-ideal-submanifold", [&] {
    double worst = 0.0;
    const Poly f = vanishing_polynomial(ideal, model, x0);
    for (int s = 0; s < config.samples; ++s) {
      const MatC m0 = traceless_part(random_matrix(rng, n));
      const Derivation d = Derivation::table(n, Derivation::inner(PolyMat::from_matrix(m0)).to_table());
      const Derivation lifted = lift_derivation(model, x0, d, config.tol);
      const PolyMat phi = random_section(rng, model, deg.section);
      worst = std::max(worst, lift_square_defect(lifted, d, x0, phi));
      if (!contains(ideal, lifted.apply(f * phi), config.tol)) worst = std::max(worst, 1.0);
    }
    return worst;
  });
  run.expect("ideals.degeneracy", "degeneracy-criterion", [&] {
    const bool poisson = is_poisson_ideal(b, ideal, model, std::min(config.samples, 10), ideal_seed, config.tol);
    const bool proper = locally_proper_witness(ideal, conn, config.tol).escape > config.tol;
    const Nondegeneracy nd = is_nondegenerate(b, model, config.tol);
    return poisson && proper && !nd.nondegenerate && nd.witness.has_value();
  });
  run.run("ideals.zero_set", "zero-set", [&] {
    const Point x1 = random_point(rng, config.vars);
    const Ideal two = Ideal::points({x0, x1});
    double r = zero_set_consistency(two, model);
    if (!zero_set(Ideal::unit()).empty()) r = std::max(r, 1.0);
    if (config.vars == 2) r = std::max(r, zero_set_consistency(Ideal::slice(0, x0[0]), model));
    return r;
  });
}

void connection_suite(Runner& run, int n, Rng& rng, const RunConfig& config, json& results) {
  const Degrees deg = degrees_for(config.cap);
  const Model model = Model::bundle(n, config.vars, config.cap);

  run.run("connection.rho", "covariant-derivation", [&] {
    double worst = 0.0;
    for (int s = 0; s < config.samples; ++s) {
      const Connection conn = random_connection(rng, model, deg.form);
      const VectorField x = random_field(rng, model, deg.field);
      worst = std::max(worst, distance(rho(covariant(conn, x), config.tol), x));
    }
    return worst;
  });
  run.run("connection.leibniz", "covariant-derivation", [&] {
    double worst = 0.0;
    for (int s = 0; s < config.samples; ++s) {
      const Derivation d = covariant(random_connection(rng, model, deg.form), random_field(rng, model, deg.field));
      const PolyMat a = random_section(rng, model, deg.section);
      const PolyMat c = random_section(rng, model, deg.section);
      worst = std::max(worst, leibniz_defect(d, a, c).max_abs());
    }
    return worst;
  });
  run.run("connection.curvature", "curvature-defect", [&] {
    double worst = 0.0;
    for (int s = 0; s < std::min(config.samples, 20); ++s) {
      const Connection conn = random_connection(rng, model, deg.form);
      const auto cd = curvature_defect(conn, random_field(rng, model, deg.field), random_field(rng, model, deg.field));
      worst = std::max(worst, cd.max_residual);
      if (config.vars == 1) worst = std::max(worst, cd.curvature.max_abs());
    }
    return worst;
  });
  run.run("connection.flat_curvature", "curvature-defect", [&] {
    const PolyMat c = constant_section(random_matrix(rng, n), model);
    const Connection constant(std::vector<PolyMat>(config.vars, c));
    double worst = 0.0;
    for (const auto& conn : {Connection::flat(model), constant}) {
      const auto cd = curvature_defect(conn, random_field(rng, model, deg.field), random_field(rng, model, deg.field));
      worst = std::max({worst, cd.curvature.max_abs(), cd.max_residual});
    }
    return worst;
  });
  run.run("connection.rho_homomorphism", "covariant-derivation", [&] {
    double worst = 0.0;
    const Connection flat = Connection::flat(model);
    for (int s = 0; s < std::min(config.samples, 20); ++s) {
      const VectorField x = random_field(rng, model, deg.field);
      const VectorField y = random_field(rng, model, deg.field);
      worst = std::max(worst, distance(rho(der_bracket(covariant(flat, x), covariant(flat, y)), config.tol), lie_bracket(x, y)));
    }
    return worst;
  });
  run.run("connection.module_linearity", "covariant-derivation", [&] {
    double worst = 0.0;
    for (int s = 0; s < std::min(config.samples, 20); ++s) {
      const Connection conn = random_connection(rng, model, deg.form);
      const VectorField x = random_field(rng, model, 0);
      const Poly p = Poly::monomial(Exponent{1, 0}, 1.0, model.vars, model.cap);
      const PolyMat phi = random_section(rng, model, 0);
      worst = std::max(worst, distance(covariant(conn, x.scaled(p)).apply(phi), p * covariant(conn, x).apply(phi)));
    }
    return worst;
  });
  run.run("connection.decomposition", "derivation-decomposition", [&] {
    double worst = 0.0;
    const Connection flat = Connection::flat(model);
    for (int s = 0; s < std::min(config.samples, 50); ++s) {
      const VectorField x = random_field(rng, model, deg.field);
      const PolyMat phi = traceless_part(random_section(rng, model, deg.section));
      const auto dec = decompose_derivation(Derivation::inner(phi) + covariant(flat, x), config.tol);
      worst = std::max({worst, distance(dec.field, x), distance(dec.inner, phi), dec.residual});
    }
    return worst;
  });
  std::optional<QmaReport> qma;
  try {
    qma = verify_quotient_manifold_conditions(n, config.vars, config.cap, config.tol);
    results["commutant_dim"] = qma->commutant_dim;
    results["qma"] = {{"q1", qma->q1}, {"q2", qma->q2}, {"q3", qma->q3}};
  } catch (const std::exception&) {
  }
  run.expect("connection.quotient_manifold", "quotient-manifold-center", [&] {
    if (!qma) throw Error(ErrorCode::Inconsistent, "quotient-manifold verification failed to run");
    return qma->all() && qma->commutant_dim == static_cast<int>(monomials_up_to(config.vars, config.cap).size());
  });
}

void symplectic_suite(Runner& run, int n, Rng& rng, const RunConfig& config) {
  if (n < 2) return;
  const Model model = Model::matrix(n);
  Scalar k = random_scalar(rng);
  if (std::abs(k) < 0.1) k += 0.5;
  const Bracket b = Bracket::scalar(k);
  std::optional<TwoForm> omega;
  std::string failure;
  try {
    omega = form_from_bracket(b, n, config.tol);
  } catch (const std::exception& e) {
    failure = e.what();
  }
  const auto need = [&]() -> const TwoForm& {
    if (!omega) throw Error(ErrorCode::Degenerate, failure);
    return *omega;
  };
  const auto rand_mat = [&] { return PolyMat::from_matrix(random_matrix(rng, n)); };

  run.run("symplectic.round_trip", "symplectic-from-bracket", [&] {
    double worst = 0.0;
    for (int s = 0; s < config.samples; ++s) {
      const PolyMat a = rand_mat();
      const PolyMat c = rand_mat();
      worst = std::max(worst, distance(need()(b.ham(a), b.ham(c)), b.eval(a, c)));
    }
    return worst;
  });
  run.run("symplectic.interior", "hamiltonian-interior", [&] {
    double worst = 0.0;
    for (int s = 0; s < config.samples; ++s) {
      const PolyMat a = rand_mat();
      const Derivation y = Derivation::inner(rand_mat());
      const PolyMat lhs = interior(need(), b.ham(a))(y);
      const PolyMat rhs = exact_differential(a)(y);
      worst = std::max(worst, (lhs + rhs).max_abs());
    }
    return worst;
  });
  run.run("symplectic.closed", "closed-form-jacobi", [&] {
    double worst = 0.0;
    for (int s = 0; s < std::min(config.samples, 20); ++s) {
      const PolyMat a = rand_mat();
      const PolyMat c = rand_mat();
      const PolyMat e = rand_mat();
      const PolyMat dw = exterior_derivative(need(), b.ham(a), b.ham(c), b.ham(e));
      worst = std::max({worst, dw.max_abs(), distance(dw, jacobiator(b, a, c, e))});
    }
    return worst;
  });
  run.run("symplectic.representation_independence", "symplectic-from-bracket", [&] {
    double worst = 0.0;
    const PolyMat one = PolyMat::identity(model);
    for (int s = 0; s < std::min(config.samples, 20); ++s) {
      const PolyMat a = rand_mat();
      const PolyMat c = rand_mat();
      const HamRepresentation y{{1.0, c}};
      const HamRepresentation r1{{1.0, a}};
      const HamRepresentation r2{{1.0, a + one}};
      const HamRepresentation r3{{0.5, a}, {0.5, a}};
      const PolyMat v1 = form_on_representations(b, r1, y);
      worst = std::max({worst, distance(v1, form_on_representations(b, r2, y)),
                        distance(v1, form_on_representations(b, r3, y)),
                        distance(v1, need()(derivation_of(b, r3), derivation_of(b, y)))});
    }
    return worst;
  });
  run.expect("symplectic.nondegenerate_form", "symplectic-from-bracket",
             [&] { return is_nondegenerate_form(need(), n, config.tol).nondegenerate; });
}

}  // namespace

void validate(const RunConfig& config) {
  if (config.n_list.empty()) throw ConfigError("n list must not be empty");
  for (int n : config.n_list) {
    if (n < 1) throw ConfigError("n must be ≥ 1");
  }
  if (config.vars < 1 || config.vars > 2) throw ConfigError("vars must be 1 or 2");
  if (config.cap < 1) throw ConfigError("cap must be ≥ 1");
  if (!(config.tol > 0.0) || !std::isfinite(config.tol)) throw ConfigError("tol must be > 0");
  if (config.samples < 1) throw ConfigError("samples must be ≥ 1");
}

void Report::add(Record r) {
  const std::string key = r.name;
  if (!records_.emplace(key, std::move(r)).second) throw std::logic_error("duplicate check name " + key);
}

int Report::count(Status s) const {
  int c = 0;
  for (const auto& [name, r] : records_) c += r.status == s ? 1 : 0;
  return c;
}

json Report::to_json(const RunConfig& config) const {
  json records = json::array();
  for (const auto& [name, r] : records_) {
    json j{{"name", r.name}, {"anchor", r.anchor}, {"status", status_name(r.status)}};
    j["residual"] = std::isfinite(r.residual) ? json(r.residual) : json(nullptr);
    if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
    if (config.timings) j["runtime_ms"] = r.runtime_ms;
    records.push_back(std::move(j));
  }
  return {{"command", command_},
          {"config",
           {{"n", config.n_list},
            {"vars", config.vars},
            {"cap", config.cap},
            {"tol", config.tol},
            {"seed", config.seed},
            {"samples", config.samples},
            {"bundle", config.bundle},
            {"prng", "mt19937_64"}}},
          {"records", records},
          {"results", results_},
          {"summary",
           {{"total", static_cast<int>(records_.size())},
            {"pass", count(Status::Pass)},
            {"fail", count(Status::Fail)},
            {"error", count(Status::Error)}}}};
}

Report cmd_verify(const RunConfig& config) {
  validate(config);
  Report report("verify");
  Rng master(config.seed);
  for (int n : config.n_list) {
    Runner run(report, config, "n" + std::to_string(n) + ".");
    json& results = report.results(n);
    Rng r1 = master.fork();
    Rng r2 = master.fork();
    Rng r3 = master.fork();
    Rng r4 = master.fork();
    Rng r5 = master.fork();
    Rng r6 = master.fork();
    derivation_suite(run, n, r1, config, results);
    classification_suite(run, n, results, config);
    hamiltonian_suite(run, n, r2, config);
    projector_suite(run, n, r3, config);
    ideal_suite(run, n, r4, config);
    connection_suite(run, n, r5, config, results);
    symplectic_suite(run, n, r6, config);
  }
  return report;
}

Report cmd_classify(const RunConfig& config) {
  validate(config);
  Report report("classify");
  Rng master(config.seed);
  for (int n : config.n_list) {
    Runner run(report, config, "n" + std::to_string(n) + ".");
    json& results = report.results(n);
    if (!config.bundle) {
      classification_suite(run, n, results, config);
      try {
        const auto cr = classify_matrix_brackets(n);
        results = ncpoisson::json::to_json(cr);
      } catch (const std::exception&) {
      }
      continue;
    }

    // Bundle mode: lambda of degree <= 3, tabulated on sections of degree <= cap.
    constexpr int kLambdaDegree = 3;
    const Model model = Model::bundle(n, config.vars, config.cap + kLambdaDegree);
    const int domain = std::max(config.cap, kLambdaDegree);
    const Model wide = Model::bundle(n, config.vars, domain + kLambdaDegree);
    Rng rng = master.fork();
    double max_error = 0.0;
    int count = 0;
    run.run("bundle_classification.lambda_round_trip", "bundle-bracket-classification", [&] {
      if (n < 2) throw Error(ErrorCode::Unsupported, "bundle classification needs fiber dimension >= 2");
      for (int s = 0; s < config.samples; ++s) {
        const Poly lambda = random_poly(rng, config.vars, wide.cap, kLambdaDegree);
        const HamiltonianMap f = HamiltonianMap::scalar_multiple(wide, domain, lambda);
        max_error = std::max(max_error, distance(classify_bundle_bracket(f, config.tol), lambda));
        ++count;
      }
      return max_error;
    });
    (void)model;
    results["bundle_max_error"] = max_error;
    results["lambdas"] = count;
  }
  return report;
}

}  // namespace ncpoisson::tools
