// Python bindings. Values cross the boundary in the JSON interchange format
// (as text); the Python package converts to and from native objects.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "galecubic/acceptance.hpp"
#include "galecubic/epwfano.hpp"
#include "galecubic/equivariant.hpp"
#include "galecubic/gale.hpp"
#include "galecubic/groebner.hpp"
#include "galecubic/io.hpp"
#include "galecubic/lagrangian.hpp"
#include "galecubic/lattice.hpp"

namespace py = pybind11;
using namespace galecubic;

namespace {

const Field& field(const std::string& d) { return Field::parse(d); }

NonSyzygeticEquation equation(const std::string& f, const std::string& eq) {
  return equation_from_json(field(f), Json::parse(eq));
}

FMatrix lagrangian(const std::string& f, const std::string& cols) {
  const Json j = Json::parse(cols);
  return matrix_from_json(field(f), j, j.size(), 20).transpose();
}

EPWPoint point(const std::string& f, const std::string& p) { return EPWPoint(vector_from_json(field(f), Json::parse(p), 6)); }

std::string dump(const Json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Gale duality, rho-Lagrangians, EPW sextics and cubic fourfolds";
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);

  m.def("gale_dual", [](const std::string& f, const std::string& eq) {
    return dump(equation_to_json(gale_dual(equation(f, eq))));
  });
  m.def("is_gale_pair", [](const std::string& f, const std::string& a, const std::string& b) {
    return is_gale_pair(equation(f, a), equation(f, b));
  });
  m.def("cubic_polynomial", [](const std::string& f, const std::string& eq) {
    return dump(poly_to_json(cubic_polynomial(equation(f, eq))));
  });
  m.def("lagrangian_from_gale", [](const std::string& f, const std::string& eq, std::size_t i) {
    const auto [a, qp] = lagrangian_from_gale(equation(f, eq), i);
    return dump(Json{{"lagrangian", matrix_to_json(a.A.transpose())},
                     {"alpha_zero", is_zero(qp.alpha)},
                     {"sigma", matrix_to_json(qp.sigma)}});
  });
  m.def("check_lagrangian", [](const std::string& f, const std::string& cols) {
    const LagrangianCheck c = check_lagrangian(lagrangian(f, cols));
    return dump(Json{{"dim", c.dim}, {"dim_E", c.dim_E}, {"dim_F", c.dim_F}, {"ok", c.ok()}, {"failures", c.failures}});
  });
  m.def("epw_contains", [](const std::string& f, const std::string& cols, const std::string& p) {
    const EPWMembership r = epw_contains(validate(lagrangian(f, cols)), point(f, p));
    return py::make_tuple(r.member, r.nullity);
  });
  m.def("harvest_epw_points",
        [](const std::string& f, const std::string& cols, std::size_t count, std::uint64_t seed) {
          Json out = Json::array();
          for (const auto& p : harvest_epw_points(validate(lagrangian(f, cols)), count, seed))
            out.push_back(vector_to_json(p.lambda()));
          return dump(out);
        });
  m.def("epw_to_lines", [](const std::string& f, const std::string& eq, std::size_t i, const std::string& p) {
    const ConicLines cl = epw_to_lines(equation(f, eq), i, point(f, p));
    Json out{{"rank", cl.rank}, {"split", cl.lines.has_value()}};
    if (cl.lines)
      out["lines"] = Json::array({matrix_to_json(cl.lines->first.points().transpose()),
                                  matrix_to_json(cl.lines->second.points().transpose())});
    return dump(out);
  });
  m.def("line_to_epw", [](const std::string& f, const std::string& eq, std::size_t i, const std::string& pts) {
    const FMatrix rows = matrix_from_json(field(f), Json::parse(pts), 2, 6);
    const ProjectiveSubspace line = ProjectiveSubspace::span_of(rows.transpose());
    const NonSyzygeticEquation e = equation(f, eq);
    if (line.dim() != 1) throw InvalidInput("the two points do not span a line");
    if (!cubic_polynomial(e).substitute_linear(line.points()).is_zero())
      throw InvalidInput("the line does not lie on the cubic");
    return dump(vector_to_json(line_to_epw(e, i, line).lambda()));
  });
  m.def("smooth_check", [](const std::string& f, const std::string& eq) {
    return smooth_check(cubic_polynomial(equation(f, eq)));
  });
  m.def("lattice_count", [] { return enumerate_glue_groups(build_DS_DT()).groups.size(); });
  m.def("lattice_orbits", [] {
    const DSDT d = build_DS_DT();
    const OrbitDecomposition od = group_action_orbits(d, enumerate_glue_groups(d).groups);
    std::vector<std::size_t> sizes;
    for (const auto& o : od.orbits) sizes.push_back(o.members.size());
    return py::make_tuple(sizes, od.fm_partner_count());
  });
  m.def("a4_emit", [](const std::string& f, const std::vector<std::string>& params) {
    const Field& fl = field(f);
    A4FamilyParams p = A4FamilyParams::example(fl);
    if (!params.empty()) {
      if (params.size() != 5) throw InvalidInput("params are alpha, beta, gamma, delta, lambda");
      Scalar* slots[] = {&p.alpha, &p.beta, &p.gamma, &p.delta, &p.lambda};
      for (std::size_t k = 0; k < 5; ++k) *slots[k] = parse_scalar_list(fl, params[k]).at(0);
    }
    const A4Family fam = a4_family(p);
    InstanceFile inst{&fl, {fam.X_E, fam.X_F}, std::nullopt, fam.action.generators, p};
    return dump(instance_to_json(inst));
  });
  m.def("roundtrip_instance", [](const std::string& j) { return dump(instance_to_json(instance_from_json(Json::parse(j)))); });
  m.def("run_acceptance", [](std::uint64_t seed, const std::vector<int>& ids) {
    py::list out;
    for (const auto& r : run_acceptance(seed, ids)) {
      py::dict d;
      d["id"] = r.id;
      d["key"] = r.key;
      d["pass"] = r.pass;
      d["seconds"] = r.seconds;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  });
}
