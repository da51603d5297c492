#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>

#include "cli_io.hpp"
#include "toric/code.hpp"
#include "toric/format.hpp"
#include "toric/resolution.hpp"

namespace toric::cli {

namespace {

std::string gap_rational(const RationalVector& v) {
  std::string s = "[ ";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + " ]";
}

std::string word_text(const FiniteField& f, const Word& w) {
  std::string s = "( ";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + f.format(w[i]);
  return s + " )";
}

json words_json(const FiniteField& f, const std::vector<Word>& ws) {
  json out = json::array();
  for (const auto& w : ws) {
    json row = json::array();
    for (auto x : w) {
      if (f.degree() == 1) row.push_back(x);
      else row.push_back(f.format(x));
    }
    out.push_back(row);
  }
  return out;
}

std::vector<std::vector<IntVector>> display_lists(const Fan& f, const std::vector<Cone>& cones) {
  std::vector<std::vector<IntVector>> out;
  for (const auto& c : cones) out.push_back(f.display(c));
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with toric varieties, fans, divisors and toric codes.", "toric"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  std::vector<std::string> budgets;
  app.add_option("--budget", budgets, "Budget override NAME=N or N (repeatable); takes precedence over TORIC_BUDGET");

  std::map<CLI::App*, std::function<void()>> handlers;
  auto command = [&](const std::string& name, const std::string& alias, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    if (!alias.empty()) s->alias(alias);
    return s;
  };
  bool json_mode = false;
  auto emit = [&](const json& j, const std::string& text) {
    if (json_mode) out << j.dump() << "\n";
    else out << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  };

  // Shared argument slots; each subcommand binds the ones it uses.
  std::string input, cone_arg, fan_arg, lattice_arg, w_arg, points_arg, polytope_arg, tau_arg, s1_arg, s2_arg,
      basis_arg, case_arg;
  std::int64_t q = 0, k = 0, a = 0, b = 0;
  std::optional<std::int64_t> dim_filter;
  bool flag_a = false, flag_b = false;

  auto lattice_or_standard = [&](std::size_t n) {
    return lattice_arg.empty() ? Lattice::standard(n) : Lattice(matrix_from(load(lattice_arg)));
  };
  auto pick = [](const std::string& named, const std::string& positional, const char* what) {
    if (!named.empty()) return named;
    if (!positional.empty()) return positional;
    throw ParseError(std::string("missing ") + what);
  };

  // Cones and semigroups.
  {
    auto* s = command("dual-semigroup-gens", "dual_semigp_gens", "Hilbert basis of the dual semigroup");
    s->add_option("CONE", input, "Cone JSON or file");
    s->add_option("--cone", cone_arg, "Cone JSON or file");
    s->add_option("--lattice", lattice_arg, "Lattice basis rows");
    handlers[s] = [&] {
      Cone c = cone_from(load(pick(cone_arg, input, "cone")));
      auto hb = hilbert_basis(c, lattice_or_standard(c.ambient_dim()));
      emit(to_json(hb.gens), gap(hb.gens));
    };
  }
  {
    auto* s = command("in-dual-cone", "in_dual_cone", "Test membership of w in the dual cone");
    s->add_option("CONE", input, "Cone JSON or file");
    s->add_option("--cone", cone_arg, "Cone JSON or file");
    s->add_option("--w", w_arg, "Dual vector")->required();
    handlers[s] = [&] {
      Cone c = cone_from(load(pick(cone_arg, input, "cone")));
      IntVector w = vector_from(load(w_arg));
      if (w.size() != c.ambient_dim()) throw ParseError("w has the wrong length");
      bool r = in_dual_cone(w, c);
      emit(r, bool_text(r));
    };
  }
  {
    auto* s = command("dual-lattice", "dual_lattice", "Rescaled basis and denominator of the dual lattice");
    s->add_option("BASIS", input, "Lattice basis rows");
    s->add_option("--basis", basis_arg, "Lattice basis rows");
    s->add_flag("--reduced", flag_a, "Print a Lagrange-reduced basis (rank 2) instead of the Hermite form");
    handlers[s] = [&] {
      auto d = dual_lattice(Lattice(matrix_from(load(pick(basis_arg, input, "basis")))));
      if (flag_a) d.rescaled_basis = reduce_rank2(d.rescaled_basis);
      emit({{"rescaled_basis", to_json(d.rescaled_basis.rows())}, {"denominator", to_json(d.denominator)}},
           magma_lattice(d.rescaled_basis.rows(), d.denominator));
    };
  }

  // Affine toric varieties.
  {
    auto* s = command("ideal", "ideal_affine_toric_variety", "Binomial ideal of U_sigma");
    s->add_option("CONE", input, "Cone JSON or file");
    s->add_option("--cone", cone_arg, "Cone JSON or file");
    s->add_option("--lattice", lattice_arg, "Lattice basis rows");
    handlers[s] = [&] {
      Cone c = cone_from(load(pick(cone_arg, input, "cone")));
      auto v = affine_toric_variety(c, lattice_or_standard(c.ambient_dim()));
      emit(to_json(v.ideal), magma_ideal(v.ideal));
    };
  }
  {
    auto* s = command("embed", "embedding_affine_toric_variety", "Dense torus embedding into U_sigma");
    s->add_option("CONE", input, "Cone JSON or file");
    s->add_option("--cone", cone_arg, "Cone JSON or file");
    s->add_option("--lattice", lattice_arg, "Lattice basis rows");
    handlers[s] = [&] {
      Cone c = cone_from(load(pick(cone_arg, input, "cone")));
      auto m = torus_embedding(c, lattice_or_standard(c.ambient_dim()));
      emit(to_json(m), magma_embedding(m));
    };
  }
  {
    auto* s = command("desing", "desing_affine_toric_variety", "Resolution of a 2D affine toric variety");
    s->add_option("CONE", input, "Cone JSON or file");
    s->add_option("--cone", cone_arg, "Cone JSON or file");
    s->add_option("--lattice", lattice_arg, "Lattice basis rows");
    s->add_flag("--patches", flag_a, "Also print the chart of every regular subcone");
    handlers[s] = [&] {
      Cone c = cone_from(load(pick(cone_arg, input, "cone")));
      auto d = desing_affine_toric_variety(c, lattice_or_standard(c.ambient_dim()));
      std::string text = magma_chart(d.map.torus_chart);
      json patches = json::array();
      for (std::size_t i = 0; i < d.map.patches.size(); ++i) {
        const auto& p = d.map.patches[i];
        patches.push_back({{"subcone", to_json(p.subcone)}, {"map", to_json(p.map)}});
        if (flag_a) text += "Patch " + std::to_string(i + 1) + ": " + gap(p.subcone.generators()) + "\n" + magma_chart(p.map);
      }
      emit({{"inserted_rays", to_json(d.refinement.inserted_rays)},
            {"torus_chart", to_json(d.map.torus_chart)},
            {"patches", patches}},
           text);
    };
  }
  {
    auto* s = command("toric-points", "toric_points", "F_q-points of a binomial ideal, q prime");
    s->add_option("IDEAL", input, "Ideal JSON or file");
    s->add_option("--q", q, "Field size")->required();
    handlers[s] = [&] {
      auto pts = toric_points(ideal_from(load(pick("", input, "ideal"))), q);
      json j = pts;
      std::string text;
      for (const auto& p : pts) {
        text += "( ";
        for (std::size_t i = 0; i < p.size(); ++i) text += (i ? ", " : "") + std::to_string(p[i]);
        text += " )\n";
      }
      emit(j, text);
    };
  }

  // Fans.
  auto fan_command = [&](const std::string& name, const std::string& alias, const std::string& help) {
    auto* s = command(name, alias, help);
    s->add_option("FAN", input, "Fan JSON or file");
    s->add_option("--fan", fan_arg, "Fan JSON or file");
    return s;
  };
  auto the_fan = [&] { return fan_from(load(pick(fan_arg, input, "fan"))); };
  {
    auto* s = fan_command("validate-fan", "validate_fan", "Check the fan axioms");
    handlers[s] = [&] {
      Fan f = the_fan();
      emit(to_json(f), "true");
    };
  }
  {
    auto* s = fan_command("is-complete", "is_complete", "Whether the fan covers the whole space");
    handlers[s] = [&] {
      bool r = is_complete(the_fan());
      emit(r, bool_text(r));
    };
  }
  {
    auto* s = fan_command("subcones", "subcones_of_fan", "All cones of the fan");
    s->add_option("--dim", dim_filter, "Only cones of this dimension");
    handlers[s] = [&] {
      Fan f = the_fan();
      std::vector<Cone> cs;
      for (const auto& c : f.cones())
        if (!dim_filter || static_cast<std::int64_t>(c.dim()) == *dim_filter) cs.push_back(c);
      auto lists = display_lists(f, cs);
      json j = json::array();
      for (const auto& l : lists) j.push_back(to_json(l));
      emit(j, gap(lists));
    };
  }
  {
    auto* s = fan_command("n-cones-dim", "number_of_cones_dim", "Number of cones of dimension k");
    s->add_option("--k", k, "Dimension")->required();
    handlers[s] = [&] {
      if (k < 0) throw DomainError("k must be nonnegative");
      auto r = number_of_cones_dim(the_fan(), static_cast<std::size_t>(k));
      emit(r, std::to_string(r));
    };
  }
  {
    auto* s = fan_command("star", "", "Cones containing sigma, as lists of generators");
    s->add_option("--cone", cone_arg, "The cone sigma")->required();
    s->add_flag("--projected", flag_a, "Print the projected fan instead");
    handlers[s] = [&] {
      Fan f = the_fan();
      Star st = star(cone_from(load(cone_arg)), f);
      json j = json::array();
      for (const auto& l : st.raw) j.push_back(to_json(l));
      if (!flag_a) {
        emit({{"raw", j}, {"projected", to_json(st.projected)}}, gap(st.raw));
        return;
      }
      std::vector<std::vector<IntVector>> proj;
      for (const auto& c : st.projected.cones()) proj.push_back(c.generators());
      emit({{"raw", j}, {"projected", to_json(st.projected)}}, gap(proj));
    };
  }
  {
    auto* s = fan_command("betti", "betti_number", "Betti number b_k of X(fan)");
    s->add_option("--k", k, "Degree")->required();
    handlers[s] = [&] {
      if (k < 0) throw DomainError("k must be nonnegative");
      std::string warning;
      Integer r = betti_number(the_fan(), static_cast<std::size_t>(k), &warning);
      if (!warning.empty()) err << "warning: " << warning << "\n";
      emit(to_json(r), r.str());
    };
  }
  {
    auto* s = fan_command("euler", "euler_characteristic", "Euler characteristic of X(fan)");
    handlers[s] = [&] {
      Integer r = euler_characteristic(the_fan());
      emit(to_json(r), r.str());
    };
  }
  {
    auto* s = fan_command("cardinality", "cardinality_of_X", "Number of F_q-points of X(fan)");
    s->add_option("--q", q, "Field size")->required();
    handlers[s] = [&] {
      Integer r = cardinality_of_X(the_fan(), q);
      emit(to_json(r), r.str());
    };
  }
  {
    auto* s = fan_command("aut-group", "fan_automorphism_group", "Automorphisms of the fan in GL_n(Z)");
    s->add_flag("--elements", flag_a, "List the matrices");
    handlers[s] = [&] {
      auto g = fan_automorphism_group(the_fan());
      std::string text = std::to_string(g.elements.size()) + "\n";
      json els = json::array();
      for (const auto& m : g.elements) {
        els.push_back(to_json(m.rows()));
        if (flag_a) text += gap(m.rows()) + "\n";
      }
      emit({{"order", g.elements.size()}, {"elements", els}}, text);
    };
  }
  {
    auto* s = command("glue", "gluing_map", "Gluing maps of two cones along a common face tau");
    s->add_option("--tau", tau_arg, "Common face")->required();
    s->add_option("--sigma1", s1_arg, "First cone")->required();
    s->add_option("--sigma2", s2_arg, "Second cone")->required();
    s->add_option("--lattice", lattice_arg, "Lattice basis rows");
    handlers[s] = [&] {
      Cone tau = cone_from(load(tau_arg));
      auto [m1, m2] = gluing_map(tau, cone_from(load(s1_arg)), cone_from(load(s2_arg)),
                                 lattice_or_standard(tau.ambient_dim()));
      emit({{"sigma1", to_json(m1)}, {"sigma2", to_json(m2)}},
           "U_tau -> U_sigma1\n" + magma_chart(m1) + "U_tau -> U_sigma2\n" + magma_chart(m2));
    };
  }

  // Divisors and polytopes.
  auto divisor_command = [&](const std::string& name, const std::string& alias, const std::string& help) {
    auto* s = command(name, alias, help);
    s->add_option("DIVISOR", input, "Divisor JSON or file");
    s->add_option("--fan", fan_arg, "Fan, when the divisor does not carry one");
    return s;
  };
  auto the_divisor = [&] {
    std::optional<Fan> f;
    if (!fan_arg.empty()) f = fan_from(load(fan_arg));
    return divisor_from(load(pick("", input, "divisor")), f ? &*f : nullptr);
  };
  {
    auto* s = divisor_command("divisor-polytope", "divisor_polytope", "The polytope P_D");
    handlers[s] = [&] {
      TDivisor d = the_divisor();
      LatticePolytope p = divisor_polytope(d);
      std::string text = "vertices: [ ";
      for (std::size_t i = 0; i < p.vertices().size(); ++i) text += (i ? ", " : "") + gap_rational(p.vertices()[i]);
      text += " ]\n";
      json ineqs = json::array();
      for (std::size_t i = 0; i < d.fan.rays().size(); ++i) {
        text += "<x, " + gap(d.fan.rays()[i]) + "> >= " + Integer(-d.coefficients[i]).str() + "\n";
        ineqs.push_back(json::array({to_json(d.fan.rays()[i]), to_json(d.coefficients[i])}));
      }
      json j = to_json(p);
      j["inequalities"] = ineqs;
      emit(j, text);
    };
  }
  {
    auto* s = divisor_command("lattice-points", "divisor_polytope_lattice_points", "Lattice points of P_D or a polytope");
    s->add_option("--polytope", polytope_arg, "Polytope JSON or file instead of a divisor");
    handlers[s] = [&] {
      auto pts = polytope_arg.empty() ? lattice_points(divisor_polytope(the_divisor()))
                                      : lattice_points(polytope_from(load(polytope_arg)));
      emit(to_json(pts), gap(pts));
    };
  }
  {
    auto* s = divisor_command("riemann-roch", "riemann_roch", "Monomial basis of L(D)");
    s->alias("rr");
    handlers[s] = [&] {
      TDivisor d = the_divisor();
      auto exps = riemann_roch(d);
      auto names = numbered("x", d.fan.ambient_dim());
      std::vector<std::string> items;
      for (const auto& e : exps) items.push_back(magma_fraction(e, names));
      emit(to_json(exps), magma_sequence(items));
    };
  }
  {
    auto* s = divisor_command("is-cartier", "is_cartier", "Whether D is Cartier");
    handlers[s] = [&] {
      bool r = is_cartier(the_divisor());
      emit(r, bool_text(r));
    };
  }

  // Codes.
  auto code_command = [&](const std::string& name, const std::string& alias, const std::string& help) {
    auto* s = command(name, alias, help);
    s->add_option("POINTS", input, "Lattice points JSON or file");
    s->add_option("--points", points_arg, "Lattice points JSON or file");
    s->add_option("--q", q, "Field size")->required();
    return s;
  };
  {
    auto* s = code_command("toric-code", "toric_code", "Parameters [n, k, d] of the toric code");
    s->add_flag("--list-codewords", flag_a, "Also list all codewords");
    s->add_flag("--no-distance", flag_b, "Skip the minimum distance");
    handlers[s] = [&] {
      ToricCode c = toric_code(points_from(load(pick(points_arg, input, "points"))), q);
      FiniteField f(q);
      std::optional<std::size_t> d;
      if (!flag_b) d = minimum_distance(c);
      std::string text = flag_b ? "[" + std::to_string(c.length) + ", " + std::to_string(c.k) +
                                      "] Linear Code over GF(" + std::to_string(q) + ")"
                                : magma_code_header(c.length, c.k, *d, q);
      json j = {{"n", c.length}, {"k", c.k}, {"q", q}, {"generator_rows", words_json(f, c.generator_rows)}};
      if (d) j["d"] = *d;
      if (flag_a) {
        auto ws = codewords(c);
        for (const auto& w : ws) text += "\n" + word_text(f, w);
        j["codewords"] = words_json(f, ws);
      }
      emit(j, text);
    };
  }
  {
    auto* s = code_command("codewords", "toric_codewords", "All codewords of the toric code");
    handlers[s] = [&] {
      ToricCode c = toric_code(points_from(load(pick(points_arg, input, "points"))), q);
      FiniteField f(q);
      auto ws = codewords(c);
      std::string text;
      for (const auto& w : ws) text += word_text(f, w) + "\n";
      emit(words_json(f, ws), text);
    };
  }
  {
    auto* s = command("hansen-bound", "hansen_bound", "Hansen's parameters for the standard polytopes");
    s->add_option("--case", case_arg, "A, B or C")->required();
    s->add_option("--a", a, "a")->required();
    s->add_option("--b", b, "b (case C)");
    s->add_option("--q", q, "Field size")->required();
    s->add_flag("--check", flag_a, "Compute the actual minimum distance too");
    handlers[s] = [&] {
      HansenCase hc;
      try {
        hc = parse_hansen_case(case_arg);
      } catch (const DomainError& e) {
        throw ParseError(e.what());
      }
      HansenBound hb = hansen_bound(hc, a, b, q);
      json j = {{"case", to_string(hc)}, {"n", hb.n}, {"k", hb.k}, {"d_lower", hb.d_lower}};
      std::string text = "[" + std::to_string(hb.n) + ", " + std::to_string(hb.k) + ", >=" + std::to_string(hb.d_lower) + "]";
      if (flag_a) {
        auto cc = check_distance_conjecture(hc, a, b, q);
        j["d"] = cc.actual;
        j["equal"] = cc.equal;
        text += "\nd = " + std::to_string(cc.actual) + (cc.equal ? " (bound attained)" : " (bound not attained)");
      }
      emit(j, text);
    };
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    if (app.get_subcommands().empty() && !app.remaining().empty()) {
      err << "unknown subcommand: " << app.remaining().front() << "\n";
      return 2;
    }
    app.exit(e, out, err);
    return 2;
  }
  json_mode = format == "json";

  if (!budgets.empty()) {
    std::string joined;
    for (const auto& x : budgets) joined += (joined.empty() ? "" : ",") + x;
    ::setenv("TORIC_BUDGET", joined.c_str(), 1);
  }

  try {
    handlers.at(app.get_subcommands().front())();
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace toric::cli
