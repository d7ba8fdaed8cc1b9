// Command-line frontend: builders and verifiers for the hyperplane
// library, with machine-readable reports and deterministic sampling.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "walpha/cubic.hpp"
#include "walpha/embeddings.hpp"
#include "walpha/fpp.hpp"
#include "walpha/models.hpp"
#include "walpha/projections.hpp"
#include "walpha/sampling.hpp"

using json = nlohmann::json;
using namespace walpha;

namespace {

struct Check {
  std::string name;
  std::string status;  // pass | fail | undecided
  std::string witness;
};

struct Report {
  std::string command;
  json inputs = json::object();
  std::vector<Check> checks;

  void add(const std::string& name, bool ok, const std::string& witness = "") {
    checks.push_back({name, ok ? "pass" : "fail", witness});
  }
  void undecided(const std::string& name, const std::string& witness = "") {
    checks.push_back({name, "undecided", witness});
  }

  int exit_code() const {
    bool any_fail = false, all_pass = true;
    for (const auto& c : checks) {
      if (c.status == "fail") any_fail = true;
      if (c.status != "pass") all_pass = false;
    }
    if (any_fail) return 1;
    return all_pass ? 0 : 1;
  }

  int emit(bool as_json, bool deterministic) const {
    const int code = exit_code();
    if (as_json) {
      json j;
      j["command"] = command;
      j["inputs"] = inputs;
      j["checks"] = json::array();
      for (const auto& c : checks)
        j["checks"].push_back(
            {{"name", c.name}, {"status", c.status}, {"witness", c.witness}});
      j["exit_code"] = code;
      if (!deterministic)
        j["timestamp"] = std::chrono::duration_cast<std::chrono::seconds>(
                             std::chrono::system_clock::now().time_since_epoch())
                             .count();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "command: " << command << "\n";
      for (auto it = inputs.begin(); it != inputs.end(); ++it)
        std::cout << "input " << it.key() << ": "
                  << (it.value().is_string() ? it.value().get<std::string>()
                                             : it.value().dump())
                  << "\n";
      for (const auto& c : checks) {
        std::cout << "[" << c.status << "] " << c.name;
        if (!c.witness.empty()) std::cout << ": " << c.witness;
        std::cout << "\n";
      }
      if (!deterministic)
        std::cout << "time: "
                  << std::chrono::duration_cast<std::chrono::seconds>(
                         std::chrono::system_clock::now().time_since_epoch())
                         .count()
                  << "\n";
      std::cout << "exit: " << code << "\n";
    }
    return code;
  }
};

std::string yn(bool b) { return b ? "yes" : "no"; }

void add_sample_report(Report& rep, const std::string& name,
                       const EmbeddingReport& er) {
  std::string w = std::to_string(er.checked) + " samples";
  if (!er.all_passed())
    w = er.failures.front().what + " at " + er.failures.front().witness;
  rep.add(name, er.all_passed(), w);
}

// ------------------------------------------------------------------ model

Omega2Member parse_model_witness(const Omega2Model& m, const std::string& name,
                                 const std::string& row1,
                                 const std::string& row2) {
  if (!row1.empty() || !row2.empty()) {
    PrimalVec r1 = row1.empty() ? PrimalVec::zero() : parse_primal(row1);
    PrimalVec r2 = row2.empty() ? PrimalVec::zero() : parse_primal(row2);
    return {r1, r2};
  }
  if (name == "all-ones") return Omega2Member::all_ones();
  if (name == "zero") return Omega2Member::zero();
  if (name == "sampled") {
    std::mt19937_64 rng(0);
    return sample_model_member(m, rng);
  }
  throw ParseError("unknown witness name: " + name +
                   " (use all-ones, zero, sampled, or explicit rows)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verifiers for the l1-predual hyperplanes of c"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  bool as_json = false, deterministic = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", as_json, "emit the report as one JSON object");
  app.add_flag("--deterministic", deterministic, "suppress the timestamp");
  app.add_option("--seed", seed, "sampling seed")->capture_default_str();

  std::string alpha_s, beta_s, r_s, eps_s = "1/2", tol_s = "1/100";
  long samples = 50, kk = 1, kmax = 4, nmax = 6, probe = 32, window = 6;
  int row = 1;

  auto* classify_cmd = app.add_subcommand("classify", "classification flags");
  classify_cmd->add_option("--alpha", alpha_s)->required();

  auto* rstar_cmd = app.add_subcommand("rstar", "norm of the cluster point");
  rstar_cmd->add_option("--alpha", alpha_s)->required();

  auto* dist_cmd = app.add_subcommand("distance", "Banach-Mazur distance to c");
  dist_cmd->add_option("--r", r_s)->required();

  auto* projconst_cmd =
      app.add_subcommand("projconst", "projection-constant bound in c");
  projconst_cmd->add_option("--alpha", alpha_s)->required();

  auto* containsc_cmd =
      app.add_subcommand("containsc", "isometric copy of c inside");
  containsc_cmd->add_option("--alpha", alpha_s)->required();

  auto* fpp_cmd = app.add_subcommand("fpp", "stable fixed-point verdict");
  fpp_cmd->add_option("--alpha", alpha_s)->required();
  std::string fpp_eps;
  fpp_cmd->add_option("--eps", fpp_eps, "tolerance for the almost-isometric r");

  auto* embed_cmd = app.add_subcommand("embed", "isometric embedding check");
  embed_cmd->add_option("--beta", beta_s)->required();
  embed_cmd->add_option("--alpha", alpha_s)->required();
  embed_cmd->add_option("--samples", samples)->capture_default_str();

  auto* kernel_cmd =
      app.add_subcommand("kernel", "kernel functional of the prepend map");
  kernel_cmd->add_option("--beta", beta_s)->required();
  kernel_cmd->add_option("--r", r_s)->required();

  auto* comp_cmd =
      app.add_subcommand("components", "component transport check");
  comp_cmd->add_option("--beta", beta_s)->required();
  comp_cmd->add_option("--alpha", alpha_s)->required();
  comp_cmd->add_option("--samples", samples)->capture_default_str();

  auto* matrix_cmd = app.add_subcommand("matrix", "representing-matrix window");
  matrix_cmd->add_option("--alpha", alpha_s)->required();
  matrix_cmd->add_option("--n", window, "window size")->capture_default_str();

  auto* delta_cmd =
      app.add_subcommand("delta", "window determinants, two routes");
  delta_cmd->add_option("--alpha", alpha_s)->required();
  delta_cmd->add_option("--kmax", kmax)->capture_default_str();
  delta_cmd->add_option("--nmax", nmax)->capture_default_str();

  auto* limit_cmd =
      app.add_subcommand("limitcheck", "quantitative row-limit condition");
  limit_cmd->add_option("--alpha", alpha_s)->required();
  limit_cmd->add_option("--k", kk)->capture_default_str();
  limit_cmd->add_option("--tol", tol_s)->capture_default_str();

  auto* project_cmd = app.add_subcommand("project", "build a projection");
  auto* thm71_cmd =
      project_cmd->add_subcommand("thm71", "projection onto an embedded copy");
  thm71_cmd->add_option("--alpha", alpha_s)->required();
  thm71_cmd->add_option("--eps", eps_s)->capture_default_str();
  thm71_cmd->add_option("--probe", probe)->capture_default_str();
  auto* l1_cmd = project_cmd->add_subcommand("l1", "block projection of l1");
  std::string spec_path, apply_s;
  l1_cmd->add_option("--spec", spec_path, "JSON block description")->required();
  l1_cmd->add_option("--apply", apply_s, "functional to project");

  auto* opnorm_cmd =
      app.add_subcommand("opnorm", "operator-norm bound of the projection");
  opnorm_cmd->add_option("--alpha", alpha_s)->required();
  opnorm_cmd->add_option("--eps", eps_s)->capture_default_str();
  opnorm_cmd->add_option("--probe", probe)->capture_default_str();

  auto* model_cmd =
      app.add_subcommand("model", "two-constraint predual models");
  std::string model_id, check_kind, witness_name = "all-ones";
  std::string witness_row1, witness_row2;
  model_cmd->add_option("id", model_id, "catalog identifier")->required();
  model_cmd->add_option("--check", check_kind,
                        "membership | P | S | cor41 | rstar");
  model_cmd->add_option("--witness", witness_name)->capture_default_str();
  model_cmd->add_option("--witness-row1", witness_row1);
  model_cmd->add_option("--witness-row2", witness_row2);
  model_cmd->add_option("--row", row)->capture_default_str();

  auto* splus_cmd = app.add_subcommand(
      "splus-demo", "shift isometry on the nonnegative unit sphere");
  splus_cmd->add_option("--samples", samples)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  Report rep;
  try {
    if (*classify_cmd) {
      rep.command = "classify";
      rep.inputs["alpha"] = alpha_s;
      const auto cr = classify(WAlphaSpace(parse_dual(alpha_s)));
      rep.add("classified", true,
              "C=" + yn(cr.in_C) + " C0=" + yn(cr.in_C0) + " A=" +
                  yn(cr.in_A) + " A0=" + yn(cr.in_A0) + " M=" + yn(cr.in_M) +
                  " G=" + to_string(cr.in_G) +
                  (cr.notes.empty() ? "" : " (" + cr.notes + ")"));
    } else if (*rstar_cmd) {
      rep.command = "rstar";
      rep.inputs["alpha"] = alpha_s;
      rep.add("rstar", true, WAlphaSpace(parse_dual(alpha_s)).rstar().str());
    } else if (*dist_cmd) {
      rep.command = "distance";
      rep.inputs["r"] = r_s;
      rep.add("bm-distance", true, bm_distance_c(Rational::parse(r_s)).str());
    } else if (*projconst_cmd) {
      rep.command = "projconst";
      rep.inputs["alpha"] = alpha_s;
      rep.add("projection-constant-bound", true,
              projection_constant_bound(parse_dual(alpha_s)).str());
    } else if (*containsc_cmd) {
      rep.command = "containsc";
      rep.inputs["alpha"] = alpha_s;
      const WAlphaSpace space(parse_dual(alpha_s));
      const auto s = sign_summary(space.alpha());
      rep.add("contains-c", contains_c(space),
              "rstar=" + space.rstar().str() + " negatives-finite=" +
                  yn(s.negatives_finite) + " zeros-infinite=" +
                  yn(s.zeros_infinite));
    } else if (*fpp_cmd) {
      rep.command = "fpp";
      rep.inputs["alpha"] = alpha_s;
      std::optional<Rational> eps;
      if (!fpp_eps.empty()) {
        rep.inputs["eps"] = fpp_eps;
        eps = Rational::parse(fpp_eps);
      }
      const WAlphaSpace space(parse_dual(alpha_s));
      const auto v = fpp_verdict(space, eps);
      rep.add("stable-fpp", v.stable, "rstar=" + space.rstar().str());
      if (v.almost_isometric_r)
        rep.add("almost-isometric-r", true, v.almost_isometric_r->str());
    } else if (*embed_cmd || *comp_cmd) {
      rep.command = *embed_cmd ? "embed" : "components";
      rep.inputs["beta"] = beta_s;
      rep.inputs["alpha"] = alpha_s;
      rep.inputs["samples"] = samples;
      const auto e = embed_general(parse_dual(beta_s), parse_dual(alpha_s));
      const auto xs = sample_members(e.source, samples, seed);
      if (*embed_cmd) add_sample_report(rep, "isometry", verify_isometry(e, xs));
      add_sample_report(rep, "component-transport",
                        component_property_check(e, xs));
    } else if (*kernel_cmd) {
      rep.command = "kernel";
      rep.inputs["beta"] = beta_s;
      rep.inputs["r"] = r_s;
      const auto e =
          embed_beta_into_re1(parse_dual(beta_s), Rational::parse(r_s));
      rep.add("kernel-functional", true,
              hyperplane_kernel_functional(e).str());
    } else if (*matrix_cmd) {
      rep.command = "matrix";
      rep.inputs["alpha"] = alpha_s;
      rep.inputs["n"] = window;
      const RepresentingMatrix m(parse_dual(alpha_s));
      bool sums_ok = true;
      std::ostringstream table;
      for (long n = 1; n <= window; ++n) {
        table << "n=" << n << ":";
        for (long i = 1; i <= n; ++i) table << " " << m.a(i, n).str();
        table << ";";
        sums_ok = sums_ok && m.row_abs_sum(n) <= Rational(1);
      }
      rep.add("row-abs-sums-bounded", sums_ok, table.str());
    } else if (*delta_cmd) {
      rep.command = "delta";
      rep.inputs["alpha"] = alpha_s;
      rep.inputs["kmax"] = kmax;
      rep.inputs["nmax"] = nmax;
      const RepresentingMatrix m(parse_dual(alpha_s));
      bool equal = true, coeffs_ok = true;
      std::ostringstream table;
      for (long k = 1; k <= kmax; ++k) {
        table << "k=" << k << ":";
        for (long w = 1; w <= nmax; ++w) {
          const Rational d = m.delta_direct(k, w);
          equal = equal && d == m.delta_recursive(k, w);
          table << " " << d.str();
        }
        table << ";";
        const auto c = m.expand_in_basis(k, k + nmax);
        for (long j = k + 1; j <= k + nmax; ++j)
          coeffs_ok = coeffs_ok && c[j - 1] == m.delta_recursive(k, j - k);
      }
      rep.add("direct-equals-recursive", equal, table.str());
      rep.add("expansion-coefficients-match", coeffs_ok);
    } else if (*limit_cmd) {
      rep.command = "limitcheck";
      rep.inputs["alpha"] = alpha_s;
      rep.inputs["k"] = kk;
      rep.inputs["tol"] = tol_s;
      const RepresentingMatrix m(parse_dual(alpha_s));
      const auto lr = m.limit_condition_check(kk, Rational::parse(tol_s));
      rep.add("limit-condition", lr.passed,
              "eps=" + lr.eps.str() + " N=" + std::to_string(lr.tail_cutoff) +
                  " M=" + std::to_string(lr.entry_cutoff) + " window=" +
                  std::to_string(lr.window) + " residual=" +
                  lr.residual.str());
    } else if (*thm71_cmd) {
      rep.command = "project thm71";
      rep.inputs["alpha"] = alpha_s;
      rep.inputs["eps"] = eps_s;
      rep.inputs["probe"] = probe;
      const Rational eps = Rational::parse(eps_s);
      const auto P = thm71_projection(parse_dual(alpha_s), eps);
      rep.add("built", true, "r=" + P.r.str() + " stable-from=" +
                                  std::to_string(P.stable_from));
      bool idem = true, member = true;
      for (const auto& x : sample_members(P.space, 25, seed)) {
        const PrimalVec px = P.apply(x);
        member = member && P.space.contains(px);
        idem = idem && P.apply(px) == px;
      }
      rep.add("range-in-space", member, "25 samples");
      rep.add("idempotent", idem, "25 samples");
      const auto nb = operator_norm_upper(P, probe);
      const bool bounded = nb.bound <= Rational(1) + eps;
      if (nb.certified)
        rep.add("norm-bound", bounded, nb.bound.str() + " certified");
      else
        rep.undecided("norm-bound", nb.bound.str() + " uncertified");
    } else if (*l1_cmd) {
      rep.command = "project l1";
      rep.inputs["spec"] = spec_path;
      std::ifstream in(spec_path);
      if (!in) throw ParseError("cannot open spec file: " + spec_path);
      json j = json::parse(in);
      std::vector<L1Block> blocks;
      for (const auto& b : j.at("blocks")) {
        L1Block blk;
        for (const auto& i : b.at("sigma")) blk.sigma.push_back(i.get<long>());
        blk.ustar = parse_dual(b.at("ustar").get<std::string>());
        blk.ustarstar = parse_dual(b.at("ustarstar").get<std::string>());
        blocks.push_back(std::move(blk));
      }
      const long nblocks = static_cast<long>(blocks.size());
      L1Projection P(
          blocks, nullptr,
          [nblocks](long) { return std::optional<long>(nblocks); });
      rep.add("structure-valid", true,
              std::to_string(nblocks) + " blocks");
      if (!apply_s.empty()) {
        rep.inputs["apply"] = apply_s;
        const DualVec x = parse_dual(apply_s);
        const DualVec px = P.apply(x);
        rep.add("applied", true, px.str());
        rep.add("norm-nonexpansive", px.l1_norm() <= x.l1_norm(),
                px.l1_norm().str() + " <= " + x.l1_norm().str());
      }
    } else if (*opnorm_cmd) {
      rep.command = "opnorm";
      rep.inputs["alpha"] = alpha_s;
      rep.inputs["eps"] = eps_s;
      rep.inputs["probe"] = probe;
      const Rational eps = Rational::parse(eps_s);
      const auto P = thm71_projection(parse_dual(alpha_s), eps);
      const auto nb = operator_norm_upper(P, probe);
      if (nb.certified)
        rep.add("operator-norm-bound", nb.bound <= Rational(1) + eps,
                nb.bound.str() + " certified, target " +
                    (Rational(1) + eps).str());
      else
        rep.undecided("operator-norm-bound", nb.bound.str() + " uncertified");
    } else if (*model_cmd) {
      rep.command = "model";
      rep.inputs["id"] = model_id;
      const Omega2Model m = model_catalog(model_id);
      if (check_kind.empty() || check_kind == "rstar") {
        rep.add("well-formed", true,
                "x1*: (" + m.x1star.row1.str() + " | " + m.x1star.row2.str() +
                    "), x2*: (" + m.x2star.row1.str() + " | " +
                    m.x2star.row2.str() + ")");
        rep.add("rstar", true, model_rstar(m).str());
      }
      if (check_kind.empty()) {
        rep.add("S-row1", condition_S_check(m, 1));
        rep.add("S-row2", condition_S_check(m, 2));
        bool closed = true;
        const auto fs = sample_model_members(m, 8, seed);
        for (size_t i = 0; i + 1 < fs.size(); ++i)
          closed = closed && model_membership(m, fs[i] + fs[i + 1]) &&
                   model_membership(m, scaled(fs[i], Rational(-5, 2)));
        rep.add("members-linear-subspace", closed, "8 samples");
      } else if (check_kind == "S") {
        rep.inputs["row"] = row;
        rep.add("condition-S", condition_S_check(m, row));
      } else if (check_kind == "membership") {
        const auto f =
            parse_model_witness(m, witness_name, witness_row1, witness_row2);
        rep.inputs["witness"] = witness_name;
        rep.add("membership", model_membership(m, f));
      } else if (check_kind == "P") {
        rep.inputs["row"] = row;
        rep.inputs["witness"] = witness_row1.empty() && witness_row2.empty()
                                    ? witness_name
                                    : witness_row1 + " | " + witness_row2;
        const auto f =
            parse_model_witness(m, witness_name, witness_row1, witness_row2);
        try {
          rep.add("condition-P", condition_P_witness_check(m, f, row),
                  "|<cluster,f>| vs " + cluster_point(m, row).l1_norm().str());
        } catch (const NotAMember& e) {
          rep.add("condition-P", false, std::string("witness rejected: ") +
                                            e.what());
        } catch (const NotUnitNorm& e) {
          rep.add("condition-P", false, std::string("witness rejected: ") +
                                            e.what());
        }
      } else if (check_kind == "cor41") {
        rep.inputs["row"] = row;
        rep.inputs["witness"] = witness_row1.empty() && witness_row2.empty()
                                    ? witness_name
                                    : witness_row1 + " | " + witness_row2;
        const auto f =
            parse_model_witness(m, witness_name, witness_row1, witness_row2);
        try {
          const auto cr = cor41_witness_check(m, f, row);
          rep.add("basis-converges", cr.basis_converges, cr.cluster_identity);
          rep.add("supports-disjoint", cr.supports_disjoint);
          rep.add("values-one", cr.values_one);
        } catch (const NotAMember& e) {
          rep.add("witness-is-member", false, e.what());
        }
      } else {
        throw ParseError("unknown --check kind: " + check_kind);
      }
    } else if (*splus_cmd) {
      rep.command = "splus-demo";
      rep.inputs["samples"] = samples;
      const auto xs = sample_splus_many(samples, seed);
      bool iso = true, nofix = true;
      long pairs = 0;
      for (size_t i = 0; i + 1 < xs.size(); ++i) {
        try {
          const Rational before = (xs[i].vec() - xs[i + 1].vec()).l1_norm();
          const Rational after =
              (shift_splus(xs[i]).vec() - shift_splus(xs[i + 1]).vec())
                  .l1_norm();
          iso = iso && after == before;
          ++pairs;
        } catch (const ResultNotRepresentable&) {
        }
      }
      for (const auto& x : xs)
        nofix = nofix && !(shift_splus(x).vec() == x.vec());
      rep.add("shift-isometry", iso, std::to_string(pairs) + " pairs");
      rep.add("no-fixed-point", nofix, std::to_string(xs.size()) + " samples");
      rep.add("image-of-e1", true, shift_splus(SPlusVec(DualVec::basis(1)))
                                       .vec()
                                       .str());
    }
  } catch (const Error& e) {
    if (as_json) {
      std::cout << json({{"command", rep.command},
                         {"error", e.what()},
                         {"exit_code", 2}})
                       .dump(2)
                << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 2;
  }

  return rep.emit(as_json, deterministic);
}
