// Command-line front end. Every command reads an instance file (JSON, from -i
// or stdin) where it needs one and writes a JSON report to stdout (or -o).
// Exit codes: 0 success / check true, 1 check false, 2 invalid input.

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "galecubic/acceptance.hpp"
#include "galecubic/epwfano.hpp"
#include "galecubic/equivariant.hpp"
#include "galecubic/gale.hpp"
#include "galecubic/gmlink.hpp"
#include "galecubic/groebner.hpp"
#include "galecubic/invariants.hpp"
#include "galecubic/io.hpp"
#include "galecubic/lagrangian.hpp"
#include "galecubic/lattice.hpp"

using namespace galecubic;

namespace {

struct Options {
  std::string input, output, field;
  std::uint64_t seed = 20240601;
  std::size_t samples = 0;  // 0: the command's default
  std::size_t choice = 1;   // L_1, L_2 or L_3
  std::string params, xi, side = "both";
  std::vector<std::string> points;
  std::vector<int> only;
};

struct Outcome {
  Json report;
  int code = 0;
};

InstanceFile read_instance(const Options& o) {
  Json j;
  try {
    if (o.input.empty() || o.input == "-") {
      j = Json::parse(std::cin);
    } else {
      std::ifstream in(o.input);
      if (!in) throw InvalidInput("cannot open " + o.input);
      j = Json::parse(in);
    }
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  InstanceFile inst = instance_from_json(j);
  if (!o.field.empty() && &Field::parse(o.field) != inst.field)
    throw InvalidInput("--field " + o.field + " disagrees with the instance field " + inst.field->descriptor());
  return inst;
}

const Field& field_or(const Options& o, const char* fallback) { return Field::parse(o.field.empty() ? fallback : o.field); }

std::size_t samples_or(const Options& o, std::size_t fallback) { return o.samples ? o.samples : fallback; }

std::size_t choice_index(const Options& o) {
  if (o.choice < 1 || o.choice > 3) throw InvalidInput("--choice-of-L must be 1, 2 or 3");
  return o.choice - 1;
}

const NonSyzygeticEquation& first_equation(const InstanceFile& inst) {
  if (inst.equations.empty()) throw InvalidInput("the instance has no equation");
  return inst.equations[0];
}

std::vector<EPWPoint> points_from(const Options& o, const Field& f, std::size_t expected) {
  if (o.points.size() != expected)
    throw InvalidInput("expected " + std::to_string(expected) + " --point option(s), got " + std::to_string(o.points.size()));
  std::vector<EPWPoint> out;
  for (const auto& p : o.points) {
    std::vector<Scalar> v = parse_scalar_list(f, p);
    if (v.size() != 6) throw InvalidInput("a point has 6 coordinates: " + p);
    out.emplace_back(v);
  }
  return out;
}

Json subspace_json(const ProjectiveSubspace& s) { return matrix_to_json(s.points().transpose()); }

std::pair<RhoLagrangianData, std::optional<QPPresentation>> lagrangian_of(const InstanceFile& inst, std::size_t i) {
  if (inst.lagrangian) return {validate(*inst.lagrangian), std::nullopt};
  const auto& eqs = inst.equations;
  if (eqs.size() >= 2 && eqs[0].sign > 0 && eqs[1].sign < 0) {
    auto [a, qp] = lagrangian_from_pair(eqs[0], eqs[1], i);
    return {a, qp};
  }
  auto [a, qp] = lagrangian_from_gale(first_equation(inst), i);
  return {a, qp};
}

A4FamilyParams params_from(const Options& o, const Field& f, const std::optional<A4FamilyParams>& given) {
  if (o.params.empty() && given) return *given;
  A4FamilyParams p = A4FamilyParams::example(f);
  if (!o.params.empty()) {
    const auto v = parse_scalar_list(f, o.params);
    if (v.size() != 5) throw InvalidInput("--params takes alpha,beta,gamma,delta,lambda");
    p.alpha = v[0];
    p.beta = v[1];
    p.gamma = v[2];
    p.delta = v[3];
    p.lambda = v[4];
  }
  if (!o.xi.empty()) p.xi = parse_scalar_list(f, o.xi).at(0);
  return p;
}

Outcome gale_dual_cmd(const Options& o) {
  InstanceFile inst = read_instance(o);
  if (inst.equations.empty()) throw InvalidInput("the instance has no equation");
  for (auto& e : inst.equations) e = gale_dual(e);
  return {instance_to_json(inst)};
}

Outcome gale_validate_cmd(const Options& o) {
  const InstanceFile inst = read_instance(o);
  const auto& eqs = inst.equations;
  if (eqs.empty()) throw InvalidInput("the instance has no equation");
  Json r{{"command", "gale validate"}};
  bool ok = true;
  Json each = Json::array();
  for (const auto& e : eqs) {
    const bool full = rank(coefficient_map(e)) == 6, lv = e.l_forms_valid();
    each.push_back(Json{{"rank6", full}, {"l_forms_valid", lv}});
    ok = ok && full && lv;
  }
  r["equations"] = each;
  if (eqs.size() >= 2) {
    const bool pair = is_gale_pair(eqs[0], eqs[1]);
    r["gale_pair"] = pair;
    r["composition_zero"] = composition_zero(eqs[0], eqs[1]);
    ok = ok && pair;
  }
  r["valid"] = ok;
  return {r, ok ? 0 : 1};
}

Outcome lagrangian_from_gale_cmd(const Options& o) {
  InstanceFile inst = read_instance(o);
  inst.lagrangian.reset();
  const auto [a, qp] = lagrangian_of(inst, choice_index(o));
  inst.lagrangian = a.A;
  Json r = instance_to_json(inst);
  r["choice_of_L"] = o.choice;
  r["alpha_zero"] = is_zero(qp->alpha);
  r["sigma"] = matrix_to_json(qp->sigma);
  r["adapted_basis"] = matrix_to_json(qp->basis.transpose());
  return {r};
}

Outcome lagrangian_check_cmd(const Options& o) {
  const InstanceFile inst = read_instance(o);
  if (!inst.lagrangian) throw InvalidInput("the instance has no lagrangian");
  const LagrangianCheck c = check_lagrangian(*inst.lagrangian);
  Json r{{"dim", c.dim},           {"dim_E", c.dim_E},       {"dim_F", c.dim_F},
         {"dimension_ok", c.dimension_ok}, {"lagrangian_ok", c.lagrangian_ok}, {"rho_ok", c.rho_ok},
         {"failures", c.failures}, {"ok", c.ok()}};
  return {r, c.ok() ? 0 : 1};
}

Outcome invariants_selftest_cmd(const Options& o) {
  const Field& f = field_or(o, "rational");
  std::mt19937_64 rng(o.seed);
  bool ok = (sigma_quadric(f) - sigma_trace_form(f)).is_zero();
  Json r{{"sigma_trace_identity", ok}};
  const MultiPoly sigma = sigma_quadric(f);
  std::size_t invariant = 0, n = samples_or(o, 5);
  auto random_sl3 = [&] {
    for (;;) {
      FMatrix g = zeros(f, 3, 3);
      for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) g(x, y) = f.from_int(static_cast<long>(rng() % 9) - 4);
      const Scalar d = det(g);
      if (d.is_zero()) continue;
      for (std::size_t y = 0; y < 3; ++y) g(0, y) = g(0, y) / d;
      return g;
    }
  };
  for (std::size_t k = 0; k < n; ++k) {
    const FMatrix g = random_sl3(), h = random_sl3();
    invariant += generator_invariance(g, h).all_invariant() && fixed_by(sigma, g33_action(g, h));
  }
  r["samples"] = n;
  r["invariant_samples"] = invariant;
  ok = ok && invariant == n;
  r["ok"] = ok;
  return {r, ok ? 0 : 1};
}

Outcome epw_contains_cmd(const Options& o) {
  const InstanceFile inst = read_instance(o);
  const RhoLagrangianData a = lagrangian_of(inst, choice_index(o)).first;
  const EPWPoint p = points_from(o, a.field(), 1)[0];
  const EPWMembership m = epw_contains(a, p);
  return {Json{{"point", vector_to_json(p.lambda())}, {"member", m.member}, {"nullity", m.nullity}},
          m.member ? 0 : 1};
}

Outcome epw_line_degree_cmd(const Options& o) {
  const InstanceFile inst = read_instance(o);
  const RhoLagrangianData a = lagrangian_of(inst, choice_index(o)).first;
  const auto pts = points_from(o, a.field(), 2);
  const LineDegree d = epw_line_degree(a, pts[0], pts[1]);
  Json r{{"coefficients", vector_to_json(d.poly.coeffs())},
         {"degree", d.poly.degree()},
         {"at_infinity", d.at_infinity},
         {"line_on_sextic", d.poly.is_zero()}};
  if (a.field().order() && !d.poly.is_zero()) r["roots"] = vector_to_json(d.poly.roots_by_scan());
  return {r};
}

Outcome epw_conic_cmd(const Options& o) {
  const InstanceFile inst = read_instance(o);
  const NonSyzygeticEquation& eq = first_equation(inst);
  const EPWPoint p = points_from(o, *eq.field, 1)[0];
  const ResidualConic rc = residual_conic(eq, choice_index(o), p);
  const Scalar d = det(rc.matrix);
  return {Json{{"matrix", matrix_to_json(rc.matrix)},
               {"parametrization", matrix_to_json(rc.param)},
               {"determinant", scalar_to_json(d)},
               {"singular", d.is_zero()}}};
}

Outcome epw_harvest_cmd(const Options& o) {
  const InstanceFile inst = read_instance(o);
  const RhoLagrangianData a = lagrangian_of(inst, choice_index(o)).first;
  const std::size_t n = samples_or(o, 10);
  Json pts = Json::array();
  for (const auto& p : harvest_epw_points(a, n, o.seed)) pts.push_back(vector_to_json(p.lambda()));
  const bool ok = pts.size() == n;
  return {Json{{"requested", n}, {"points", pts}}, ok ? 0 : 1};
}

Outcome fano_from_epw_cmd(const Options& o) {
  const InstanceFile inst = read_instance(o);
  const NonSyzygeticEquation& eq = first_equation(inst);
  const EPWPoint p = points_from(o, *eq.field, 1)[0];
  const ConicLines cl = epw_to_lines(eq, choice_index(o), p);
  Json r{{"conic", matrix_to_json(cl.conic)}, {"rank", cl.rank}, {"split", cl.lines.has_value()}};
  if (!cl.singular_point.empty()) r["singular_point"] = vector_to_json(cl.singular_point);
  if (cl.lines) r["lines"] = Json::array({subspace_json(cl.lines->first), subspace_json(cl.lines->second)});
  if (cl.discriminant) r["discriminant"] = scalar_to_json(*cl.discriminant);
  return {r};
}

Outcome fano_to_epw_cmd(const Options& o) {
  const InstanceFile inst = read_instance(o);
  const NonSyzygeticEquation& eq = first_equation(inst);
  const Field& f = *eq.field;
  if (o.points.size() != 2) throw InvalidInput("a line is given by two --point options in P^5");
  FMatrix cols = zeros(f, 6, 2);
  for (std::size_t k = 0; k < 2; ++k) {
    const auto v = parse_scalar_list(f, o.points[k]);
    if (v.size() != 6) throw InvalidInput("a point of P^5 has 6 coordinates");
    for (std::size_t r = 0; r < 6; ++r) cols(r, k) = v[r];
  }
  const ProjectiveSubspace line = ProjectiveSubspace::span_of(cols);
  if (line.dim() != 1) throw InvalidInput("the two points do not span a line");
  if (!cubic_polynomial(eq).substitute_linear(line.points()).is_zero())
    throw InvalidInput("the line does not lie on the cubic");
  return {Json{{"point", vector_to_json(line_to_epw(eq, choice_index(o), line).lambda())}}};
}

Outcome fano_roundtrip_cmd(const Options& o) {
  const InstanceFile inst = read_instance(o);
  const NonSyzygeticEquation& eq = first_equation(inst);
  const std::size_t i = choice_index(o);
  const RhoLagrangianData a = lagrangian_from_gale(eq, i).first;
  std::size_t usable = 0, split = 0, ok = 0;
  for (const auto& p : harvest_epw_points(a, samples_or(o, 20), o.seed)) {
    const PiGamma pg = pi_gamma(eq, i, p);
    if (!pg.pi_is_plane || !pg.gamma_is_line) continue;
    ++usable;
    const ConicLines cl = epw_to_lines(eq, i, p);
    if (!cl.lines) continue;
    ++split;
    ok += line_to_epw(eq, i, cl.lines->first) == p && line_to_epw(eq, i, cl.lines->second) == p;
  }
  const bool pass = split > 0 && ok == split;
  return {Json{{"points", usable}, {"split", split}, {"roundtrips", ok}, {"ok", pass}}, pass ? 0 : 1};
}

Outcome gm_membership_cmd(const Options& o) {
  const Field& f = field_or(o, "rational");
  const auto [xe, xf] = big_cubics(f);
  Json r = Json::object();
  bool ok = true;
  for (const auto& [name, cubic, side] : {std::tuple{"E", &xe, kSideE}, std::tuple{"F", &xf, kSideF}}) {
    if (o.side != "both" && o.side != name) continue;
    const auto ideal = z15_ideal(f, side);
    const auto cert = ideal_membership_deg3(*cubic, ideal);
    Json s{{"member", cert.has_value()}};
    if (cert) {
      s["verified"] = verify_certificate(*cubic, ideal, *cert);
      Json m = Json::array();
      for (const auto& l : *cert) m.push_back(poly_to_json(l));
      s["multipliers"] = m;
      ok = ok && s["verified"].get<bool>();
    } else {
      ok = false;
    }
    r[name] = s;
  }
  if (r.empty()) throw InvalidInput("--side must be E, F or both");
  r["ok"] = ok;
  return {r, ok ? 0 : 1};
}

Outcome lattice_count_cmd(const Options&) {
  return {Json(enumerate_glue_groups(build_DS_DT()).groups.size())};
}

Outcome lattice_orbits_cmd(const Options&) {
  const DSDT d = build_DS_DT();
  const GlueEnumeration en = enumerate_glue_groups(d);
  const OrbitDecomposition od = group_action_orbits(d, en.groups);
  Json orbits = Json::array();
  for (const auto& orb : od.orbits) {
    bool pm = true;
    for (const auto& g : orb.stabilizer) pm = pm && g.is_plus_minus_identity();
    orbits.push_back(Json{{"size", orb.members.size()},
                          {"stabilizer_order", orb.stabilizer.size()},
                          {"stabilizer_is_plus_minus_identity", pm}});
  }
  return {Json{{"glue_groups", en.groups.size()},
               {"group_order", od.group_order},
               {"orbits", orbits},
               {"fm_partner_count", od.fm_partner_count()}}};
}

Outcome smooth_check_cmd(const Options& o) {
  const InstanceFile inst = read_instance(o);
  if (inst.equations.empty()) throw InvalidInput("the instance has no equation");
  Json each = Json::array();
  bool all = true;
  for (const auto& e : inst.equations) {
    const bool s = smooth_check(cubic_polynomial(e));
    each.push_back(s);
    all = all && s;
  }
  return {Json{{"smooth", each}, {"all_smooth", all}}, all ? 0 : 1};
}

Outcome a4_emit_cmd(const Options& o) {
  const Field& f = field_or(o, "prime:97");
  const A4FamilyParams p = params_from(o, f, std::nullopt);
  const A4Family fam = a4_family(p);
  InstanceFile inst;
  inst.field = &f;
  inst.equations = {fam.X_E, fam.X_F};
  inst.generators = fam.action.generators;
  inst.params = p;
  return {instance_to_json(inst)};
}

Outcome a4_verify_cmd(const Options& o) {
  const InstanceFile inst = read_instance(o);
  const Field& f = *inst.field;
  const A4Family fam = a4_family(params_from(o, f, inst.params));
  Json r = Json::object();
  bool ok = true;
  auto record = [&](const char* key, bool v) {
    r[key] = v;
    ok = ok && v;
  };
  if (!inst.equations.empty())
    record("equations_match_family",
           inst.equations.size() == 2 && inst.equations[0] == fam.X_E && inst.equations[1] == fam.X_F);
  if (!inst.generators.empty()) record("generators_match_family", inst.generators == fam.action.generators);
  record("gale_pair", is_gale_pair(fam.X_E, fam.X_F));
  const bool have_actions = fam.action.plus_variables.size() == 3;
  record("stable_lagrangian", have_actions);
  if (have_actions) {
    const QPPresentation qp = lagrangian_from_pair(fam.X_E, fam.X_F, 0).second;
    bool displayed = true;
    for (std::size_t k = 0; k < 3; ++k) {
      const auto rr = restricted_action(qp.basis, fam.action.generators[k]);
      displayed = displayed && rr && *rr == fam.action.displayed[k];
    }
    record("displayed_generators", displayed);
    Json inv = Json::object();
    bool all = true;
    for (const auto& [name, eq, acts] : {std::tuple{"X_E", &fam.X_E, &fam.action.plus_variables},
                                         std::tuple{"X_F", &fam.X_F, &fam.action.minus_variables}}) {
      Json side = Json::object();
      for (const auto& res : invariance_scalars(cubic_polynomial(*eq), *acts, fam.action.names)) {
        side[res.name] = res.scalar ? scalar_to_json(*res.scalar) : Json(nullptr);
        all = all && res.invariant;
      }
      inv[name] = side;
    }
    r["invariance_scalars"] = inv;
    record("invariant", all);
  }
  const auto& d = fam.action.displayed;
  record("a4_relations", check_a4_relations(d[0], d[1], d[2]).presents_a4());
  if (f.order() && !f.is_extension()) {
    record("X_E_smooth", smooth_check(cubic_polynomial(fam.X_E)));
    record("X_F_smooth", smooth_check(cubic_polynomial(fam.X_F)));
    for (const auto& [name, eq] : {std::pair{"X_E", &fam.X_E}, std::pair{"X_F", &fam.X_F}}) {
      const EquivarianceReport rep = equivariance_probe(*eq, 0, fam.action, samples_or(o, 30), o.seed);
      r[std::string("equivariance_") + name] =
          Json{{"points", rep.points}, {"checks", rep.checks}, {"line_checks", rep.line_checks},
               {"failures", rep.failures}, {"error", rep.error}};
      record((std::string("commutes_") + name).c_str(), rep.commutes());
    }
  } else {
    r["note"] = "smoothness and the EPW probe need a prime field";
  }
  r["ok"] = ok;
  return {r, ok ? 0 : 1};
}

Outcome selftest_all_cmd(const Options& o) {
  Json table = Json::object();
  bool all = true;
  for (const auto& res : run_acceptance(o.seed, o.only)) {
    std::cerr << format_result(res) << "\n";
    table[res.key] = Json{{"id", res.id},     {"title", res.title},     {"pass", res.pass},
                          {"seconds", res.seconds}, {"budget", res.budget}, {"detail", res.detail}};
    all = all && res.pass;
  }
  return {Json{{"seed", o.seed}, {"results", table}, {"all_pass", all}}, all ? 0 : 1};
}

void write_report(const Options& o, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (o.output.empty() || o.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw InvalidInput("cannot write " + o.output);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gale duality, rho-Lagrangians, EPW sextics and cubic fourfolds"};
  app.require_subcommand(1);
  Options o;
  app.add_option("-i,--input", o.input, "instance file (JSON); stdin when omitted");
  app.add_option("-o,--output", o.output, "report file; stdout when omitted");
  app.add_option("--field", o.field, "rational, prime:p, cyclo3:rational, cyclo3:prime:p");
  app.add_option("--seed", o.seed, "seed for randomized commands");
  app.add_option("--samples", o.samples, "number of samples");
  app.add_option("--choice-of-L", o.choice, "which L-form (1, 2 or 3) builds the Lagrangian");
  app.add_option("--params", o.params, "alpha,beta,gamma,delta,lambda for the A4 family");
  app.add_option("--xi", o.xi, "cube root of unity for the A4 family");
  app.add_option("--point", o.points, "comma-separated coordinates; a:b for a + b*xi (repeatable)");
  app.add_option("--side", o.side, "E, F or both (gm membership)");
  app.add_option("--only", o.only, "criterion numbers (selftest all)");

  std::function<Outcome(const Options&)> run;
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto leaf = [&](CLI::App* g, const std::string& name, const std::string& help, Outcome (*fn)(const Options&)) {
    g->add_subcommand(name, help)->fallthrough()->callback([&run, fn] { run = fn; });
  };

  CLI::App* gale = group("gale", "Gale duality");
  leaf(gale, "dual", "replace each equation by its Gale dual", gale_dual_cmd);
  leaf(gale, "validate", "rank and L-form checks; Gale pair test for two equations", gale_validate_cmd);
  CLI::App* lag = group("lagrangian", "rho-Lagrangian subspaces");
  leaf(lag, "from-gale", "the Lagrangian attached to the pair and the choice of L", lagrangian_from_gale_cmd);
  leaf(lag, "check", "dimension, isotropy and the rho-condition", lagrangian_check_cmd);
  CLI::App* inv = group("invariants", "G33 invariants");
  leaf(inv, "selftest", "sigma identity and invariance under random SL3 x SL3", invariants_selftest_cmd);
  CLI::App* epw = group("epw", "the EPW sextic");
  leaf(epw, "contains", "membership of --point", epw_contains_cmd);
  leaf(epw, "line-degree", "restriction to the line through two --point options", epw_line_degree_cmd);
  leaf(epw, "conic", "residual conic at --point", epw_conic_cmd);
  leaf(epw, "harvest", "random points of the sextic (prime fields)", epw_harvest_cmd);
  CLI::App* fano = group("fano", "lines on the cubic");
  leaf(fano, "to-epw", "the EPW point of the line through two --point options", fano_to_epw_cmd);
  leaf(fano, "from-epw", "the lines attached to the EPW point --point", fano_from_epw_cmd);
  leaf(fano, "roundtrip", "EPW point to lines and back on harvested points", fano_roundtrip_cmd);
  CLI::App* gm = group("gm", "Gushel-Mukai quadrics");
  leaf(gm, "membership", "the big cubics in the ideal of the Pfaffians and sigma", gm_membership_cmd);
  CLI::App* lat = group("lattice", "overlattices and glue groups");
  leaf(lat, "count", "number of glue groups", lattice_count_cmd);
  leaf(lat, "orbits", "orbits under O(S) x {+1, -1} and the partner count", lattice_orbits_cmd);
  CLI::App* smooth = group("smooth", "smoothness");
  leaf(smooth, "check", "Jacobian ideal supported at the origin (prime fields)", smooth_check_cmd);
  CLI::App* a4 = group("a4", "the A4-invariant family");
  leaf(a4, "emit", "the two cubics and the group as an instance file", a4_emit_cmd);
  leaf(a4, "verify", "duality, invariance, relations, smoothness, equivariance", a4_verify_cmd);
  CLI::App* self = group("selftest", "acceptance suite");
  leaf(self, "all", "run every criterion; table keyed by criterion name", selftest_all_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return 0;
    std::cerr << app.help();
    return 2;
  }
  try {
    const Outcome out = run(o);
    write_report(o, out.report);
    return out.code;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
