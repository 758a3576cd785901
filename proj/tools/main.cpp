#include "schober/dot.hpp"
#include "schober/errors.hpp"
#include "schober/json_io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

using namespace schober;

namespace {

// matrix/vector arguments accept inline JSON ("[[1,0],[0,1]]") or a filename
json load_json_arg(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '[' || arg[0] == '{')) {
    try {
      return json::parse(arg);
    } catch (const json::exception& e) {
      throw ParseError(e.what());
    }
  }
  return load_json_file(arg);
}

RibbonGraph load_graph(const std::string& path) {
  RibbonGraph g = graph_from_json(load_json_file(path));
  Diagnostics d = validate(g);
  if (!d.ok()) throw DomainError(d.violations.front());
  return g;
}

SchoberDatum load_schober(const std::string& path) {
  SchoberDatum s = schober_from_json(load_json_file(path));
  Diagnostics d = validate_schober(s);
  if (!d.ok()) throw DomainError(d.violations.front());
  return s;
}

Edge load_edge(const RibbonGraph& g, HalfedgeId id) {
  auto e = find_edge(g, id);
  if (!e) throw DomainError("unknown-edge", std::to_string(id));
  return *e;
}

// framing with winding -2 around every vertex and 0 on the cycle basis;
// used when a verb needs a line field and none was given
LineField default_framing(const RibbonGraph& g) {
  std::map<VertexId, std::int64_t> vt;
  for (VertexId v : g.vertices()) vt[v] = -2;
  std::map<HalfedgeId, std::int64_t> ct;
  for (const auto& [eid, loop] : generating_loops(g).cycle_loops) ct[eid] = 0;
  return solve_line_field(g, vt, ct);
}

void emit_ok(const json& result) {
  json out;
  out["ok"] = true;
  out["result"] = result;
  std::cout << out.dump() << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"ribbon-graph schober calculus"};
  app.require_subcommand(1);

  std::string graph_path, schober_path, schober2_path, curve_path, line_field_path;
  std::string k0_path, word_text, euler_arg, f_arg, g_arg, eta_arg;
  std::int64_t n_arg = 0, m_arg = 0;
  int edge_id = 0;

  auto* validate_cmd = app.add_subcommand("validate", "check ribbon graph invariants");
  validate_cmd->add_option("--graph", graph_path)->required();

  auto* invariants_cmd = app.add_subcommand("invariants", "genus, boundary walks, Euler characteristic");
  invariants_cmd->add_option("--graph", graph_path)->required();

  auto* exit_paths_cmd = app.add_subcommand("exit-paths", "exit path category presentation");
  exit_paths_cmd->add_option("--graph", graph_path)->required();

  auto* contract_cmd = app.add_subcommand("contract", "contract an internal non-loop edge");
  contract_cmd->add_option("--graph", graph_path)->required();
  contract_cmd->add_option("--edge", edge_id)->required();

  auto* winding_cmd = app.add_subcommand("winding", "winding number of a closed curve");
  winding_cmd->add_option("--graph", graph_path)->required();
  winding_cmd->add_option("--curve", curve_path)->required();
  winding_cmd->add_option("--line-field", line_field_path);

  auto* framing_cmd = app.add_subcommand("framing-check", "is the line field a framing");
  framing_cmd->add_option("--graph", graph_path)->required();
  framing_cmd->add_option("--line-field", line_field_path)->required();

  auto* transport_cmd = app.add_subcommand("transport", "transport word along a curve");
  transport_cmd->add_option("--schober", schober_path)->required();
  transport_cmd->add_option("--curve", curve_path)->required();

  auto* monodromy_cmd = app.add_subcommand("monodromy", "framing-corrected monodromy word");
  monodromy_cmd->add_option("--schober", schober_path)->required();
  monodromy_cmd->add_option("--curve", curve_path)->required();
  monodromy_cmd->add_option("--line-field", line_field_path)->required();

  auto* rep_cmd = app.add_subcommand("monodromy-rep", "monodromy on the generating loops");
  rep_cmd->add_option("--schober", schober_path)->required();
  rep_cmd->add_option("--line-field", line_field_path)->required();

  auto* push_cmd = app.add_subcommand("push-contract", "contraction pushforward of a schober");
  push_cmd->add_option("--schober", schober_path)->required();
  push_cmd->add_option("--edge", edge_id)->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "nonsingular classification up to conjugation");
  equiv_cmd->add_option("--schober", schober_path)->required();
  equiv_cmd->add_option("--schober2", schober2_path)->required();
  equiv_cmd->add_option("--line-field", line_field_path)->required();

  auto* orientable_cmd = app.add_subcommand("orientable", "alternating orientation test");
  orientable_cmd->add_option("--graph", graph_path)->required();

  auto* glue_cmd = app.add_subcommand("glue-signs", "per-halfedge gluing signs");
  glue_cmd->add_option("--schober", schober_path)->required();
  glue_cmd->add_option("--n", n_arg)->required();

  auto* k0_word_cmd = app.add_subcommand("k0-word", "K0 matrix of a functor word");
  k0_word_cmd->add_option("--word", word_text)->required();
  k0_word_cmd->add_option("--k0", k0_path)->required();

  auto* k0_rep_cmd = app.add_subcommand("k0-rep", "K0 monodromy representation");
  k0_rep_cmd->add_option("--schober", schober_path)->required();
  k0_rep_cmd->add_option("--k0", k0_path)->required();
  k0_rep_cmd->add_option("--line-field", line_field_path);

  auto* serre_cmd = app.add_subcommand("serre", "Serre matrix of a unimodular Euler form");
  serre_cmd->add_option("--euler", euler_arg)->required();

  auto* cy_cmd = app.add_subcommand("cy-check", "weak Calabi-Yau symmetry of an Euler form");
  cy_cmd->add_option("--euler", euler_arg)->required();
  cy_cmd->add_option("--n", n_arg)->required();

  auto* relcy_cmd = app.add_subcommand("rel-cy-check", "relative Calabi-Yau identity at K0");
  relcy_cmd->add_option("--euler", euler_arg)->required();
  relcy_cmd->add_option("--f", f_arg)->required();
  relcy_cmd->add_option("--g", g_arg)->required();
  relcy_cmd->add_option("--m", m_arg)->required();

  auto* local_cmd = app.add_subcommand("local-matrix", "local model restriction matrix");
  local_cmd->add_option("--m", m_arg)->required();

  auto* eta_cmd = app.add_subcommand("eta-check", "monodromy invariance of an eta vector");
  eta_cmd->add_option("--schober", schober_path)->required();
  eta_cmd->add_option("--k0", k0_path)->required();
  eta_cmd->add_option("--eta", eta_arg)->required();
  eta_cmd->add_option("--line-field", line_field_path);

  auto* dot_cmd = app.add_subcommand("dot", "Graphviz dump");
  dot_cmd->add_option("--graph", graph_path);
  dot_cmd->add_option("--schober", schober_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e); // --help
    json out;
    out["ok"] = false;
    out["error"] = "parse-error";
    out["detail"] = e.what();
    std::cout << out.dump() << "\n";
    return 2;
  }

  try {
    if (*validate_cmd) {
      RibbonGraph g = graph_from_json(load_json_file(graph_path));
      Diagnostics d = validate(g);
      if (!d.ok()) throw DomainError(d.violations.front());
      emit_ok(diagnostics_to_json(d));
    } else if (*invariants_cmd) {
      emit_ok(surface_to_json(surface_invariants(load_graph(graph_path))));
    } else if (*exit_paths_cmd) {
      ExitPathPresentation p = exit_path_category(load_graph(graph_path));
      json arrows = json::array();
      for (const auto& a : p.arrows)
        arrows.push_back({{"from", a.from}, {"to", a.edge}, {"halfedge", a.via}});
      emit_ok({{"vertices", p.vertex_objects},
               {"edges", p.edge_objects},
               {"arrows", arrows}});
    } else if (*contract_cmd) {
      RibbonGraph g = load_graph(graph_path);
      ContractionResult r = contract(g, load_edge(g, edge_id));
      json vm = json::object();
      for (const auto& [a, b] : r.vertex_map) vm[std::to_string(a)] = b;
      emit_ok({{"graph", graph_to_json(r.graph)},
               {"vertex_map", vm},
               {"removed_halfedges", r.removed_halfedges},
               {"merged_vertex", r.merged_vertex}});
    } else if (*winding_cmd) {
      RibbonGraph g = load_graph(graph_path);
      Curve c = curve_from_json(load_json_file(curve_path));
      LineField l;
      if (!line_field_path.empty())
        l = line_field_from_json(load_json_file(line_field_path));
      emit_ok({{"winding", winding(g, c, l)}});
    } else if (*framing_cmd) {
      RibbonGraph g = load_graph(graph_path);
      LineField l = line_field_from_json(load_json_file(line_field_path));
      emit_ok({{"framing", is_framing(l, g)}});
    } else if (*transport_cmd) {
      SchoberDatum s = load_schober(schober_path);
      Curve c = curve_from_json(load_json_file(curve_path));
      emit_ok({{"word", to_string(transport(s, c))}});
    } else if (*monodromy_cmd) {
      SchoberDatum s = load_schober(schober_path);
      Curve c = curve_from_json(load_json_file(curve_path));
      LineField l = line_field_from_json(load_json_file(line_field_path));
      emit_ok({{"word", to_string(monodromy(s, l, c))}});
    } else if (*rep_cmd) {
      SchoberDatum s = load_schober(schober_path);
      LineField l = line_field_from_json(load_json_file(line_field_path));
      json rep = json::object();
      for (const auto& [name, w] : monodromy_rep(s, l)) rep[name] = to_string(w);
      emit_ok({{"monodromy", rep}});
    } else if (*push_cmd) {
      SchoberDatum s = load_schober(schober_path);
      SchoberContraction r = pushforward_contract(s, load_edge(s.graph, edge_id));
      json vm = json::object();
      for (const auto& [a, b] : r.vertex_map) vm[std::to_string(a)] = b;
      emit_ok({{"schober", schober_to_json(r.schober)},
               {"vertex_map", vm},
               {"removed_halfedges", r.removed_halfedges},
               {"merged_vertex", r.merged_vertex}});
    } else if (*equiv_cmd) {
      SchoberDatum s1 = load_schober(schober_path);
      SchoberDatum s2 = load_schober(schober2_path);
      LineField l = line_field_from_json(load_json_file(line_field_path));
      emit_ok({{"equivalent", nonsingular_equiv(s1, s2, l)}});
    } else if (*orientable_cmd) {
      emit_ok({{"orientable", is_orientable(load_graph(graph_path))}});
    } else if (*glue_cmd) {
      SchoberDatum s = load_schober(schober_path);
      GluingSigns gs = gluing_sign_solve(s, n_arg);
      json vs = json::object(), hs = json::object();
      for (const auto& [v, sign] : gs.vertex_sign) vs[std::to_string(v)] = sign;
      for (const auto& [h, sign] : gs.halfedge_sign) hs[std::to_string(h)] = sign;
      emit_ok({{"feasible", gs.feasible},
               {"vertex_signs", vs},
               {"halfedge_signs", hs},
               {"twisted_edges", gs.twisted_edges}});
    } else if (*k0_word_cmd) {
      K0Assignment a = assignment_from_json(load_json_arg(k0_path));
      Diagnostics d = validate_assignment(a);
      if (!d.ok()) throw DomainError(d.violations.front());
      emit_ok({{"matrix", matrix_to_json(k0_of_word(parse_word(word_text), a))}});
    } else if (*k0_rep_cmd) {
      SchoberDatum s = load_schober(schober_path);
      K0Assignment a = assignment_from_json(load_json_arg(k0_path));
      Diagnostics d = validate_assignment(a);
      if (!d.ok()) throw DomainError(d.violations.front());
      LineField l = line_field_path.empty()
                        ? default_framing(s.graph)
                        : line_field_from_json(load_json_file(line_field_path));
      json rep = json::object();
      for (const auto& [name, m] : k0_monodromy_rep(s, l, a))
        rep[name] = matrix_to_json(m);
      emit_ok({{"monodromy", rep}});
    } else if (*serre_cmd) {
      EulerForm e{matrix_from_json(load_json_arg(euler_arg))};
      emit_ok({{"serre", matrix_to_json(serre_matrix(e))}});
    } else if (*cy_cmd) {
      EulerForm e{matrix_from_json(load_json_arg(euler_arg))};
      emit_ok({{"weak_cy", weak_cy_check(e, n_arg)}});
    } else if (*relcy_cmd) {
      EulerForm e{matrix_from_json(load_json_arg(euler_arg))};
      ZMatrix f = matrix_from_json(load_json_arg(f_arg));
      ZMatrix g = matrix_from_json(load_json_arg(g_arg));
      emit_ok({{"relative_cy", relative_cy_check(e, f, g, m_arg)}});
    } else if (*local_cmd) {
      emit_ok({{"matrix",
                matrix_to_json(local_model_restriction_matrix(static_cast<int>(m_arg)))}});
    } else if (*eta_cmd) {
      SchoberDatum s = load_schober(schober_path);
      K0Assignment a = assignment_from_json(load_json_arg(k0_path));
      json ej = load_json_arg(eta_arg);
      std::vector<std::int64_t> eta;
      try {
        eta = ej.get<std::vector<std::int64_t>>();
      } catch (const json::exception& ex) {
        throw ParseError(ex.what());
      }
      LineField l = line_field_path.empty()
                        ? default_framing(s.graph)
                        : line_field_from_json(load_json_file(line_field_path));
      emit_ok({{"preserved", eta_invariance_check(k0_monodromy_rep(s, l, a), eta)}});
    } else if (*dot_cmd) {
      if (!schober_path.empty())
        std::cout << to_dot(load_schober(schober_path));
      else if (!graph_path.empty())
        std::cout << to_dot(load_graph(graph_path));
      else
        throw ParseError("dot needs --graph or --schober");
    }
  } catch (const DomainError& e) {
    json out;
    out["ok"] = false;
    out["error"] = e.code();
    std::cout << out.dump() << "\n";
    return 1;
  } catch (const ParseError& e) {
    json out;
    out["ok"] = false;
    out["error"] = "parse-error";
    out["detail"] = e.what();
    std::cout << out.dump() << "\n";
    return 2;
  }
  return 0;
}
