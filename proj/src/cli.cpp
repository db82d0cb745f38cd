#include "cyclotri/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "cyclotri/diff_cycle.hpp"
#include "cyclotri/error.hpp"
#include "cyclotri/expansion.hpp"
#include "cyclotri/homology.hpp"
#include "cyclotri/io.hpp"
#include "cyclotri/manifold.hpp"
#include "cyclotri/morse.hpp"
#include "cyclotri/mpqr.hpp"

namespace cyclotri::cli {

using nlohmann::ordered_json;

namespace {

std::string fnv1a(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string scalar_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + scalar_text(v[i]);
    return out;
  }
  if (v.is_object()) {
    std::string out;
    bool first = true;
    for (const auto& [k, x] : v.items()) {
      out += (first ? "" : " ") + k + "=" + scalar_text(x);
      first = false;
    }
    return out;
  }
  return v.dump();
}

// Human-readable rendering of a report; every value comes from the JSON.
std::string render_text(const ordered_json& report) {
  std::ostringstream os;
  os << "command: " << report["command"].get<std::string>() << '\n';
  if (!report["input_digest"].is_null()) os << "input: " << report["input_digest"].get<std::string>() << '\n';
  for (const auto& [key, value] : report["results"].items()) {
    if (key == "homology") {
      os << "H_* = " << value.get<std::string>() << '\n';
    } else if (value.is_array() && !value.empty() && value[0].is_object()) {
      os << key << ":\n";
      for (const auto& row : value) os << "  " << scalar_text(row) << '\n';
    } else {
      os << key << ": " << scalar_text(value) << '\n';
    }
  }
  os << "status: " << report["status"].get<std::string>() << '\n';
  return os.str();
}

struct Context {
  std::istream& in;
  std::ostream& out;
  std::string format = "text";
  std::uint64_t seed = 1;
};

void emit_report(Context& ctx, const std::string& command, const std::string* input,
                 ordered_json results, bool ok) {
  ordered_json report;
  report["command"] = command;
  report["input_digest"] = input ? ordered_json(fnv1a(*input)) : ordered_json(nullptr);
  report["results"] = std::move(results);
  report["status"] = ok ? "ok" : "failed";
  if (ctx.format == "json") ctx.out << report.dump(2) << '\n';
  else ctx.out << render_text(report);
}

void write_output(Context& ctx, const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    ctx.out << data;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << data;
}

ordered_json cycles_json(const CyclicComplex& cc) {
  ordered_json arr = ordered_json::array();
  for (const auto& d : cc.cycles()) arr.push_back(d.to_string());
  return arr;
}

ordered_json homology_json(const HomologyGroups& h) {
  ordered_json groups = ordered_json::array();
  for (const auto& g : h.groups) {
    ordered_json t = ordered_json::array();
    for (const auto& x : g.torsion) t.push_back(x.get_str());
    groups.push_back({{"betti", g.betti}, {"torsion", t}});
  }
  return groups;
}

ordered_json manifold_json(const ManifoldReport& r) {
  ordered_json j;
  j["manifold"] = r.is_manifold;
  j["links_checked"] = r.links.size();
  j["first_failing_vertex"] = r.first_failing ? ordered_json(*r.first_failing) : ordered_json(nullptr);
  j["summary"] = r.summary();
  return j;
}

CyclicComplex as_cyclic(const AnyComplex& c) {
  if (const auto* cc = std::get_if<CyclicComplex>(&c)) return *cc;
  const auto& sc = std::get<SimplicialComplex>(c);
  return compress(sc, sc.label_bound());
}

ManifoldReport manifold_report(const AnyComplex& c) {
  if (const auto* cc = std::get_if<CyclicComplex>(&c)) return is_combinatorial_3_manifold(*cc);
  return is_combinatorial_3_manifold(std::get<SimplicialComplex>(c));
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic combinatorial 3-manifolds: generation, verification and analysis", "cyclotri"};
  app.fallthrough();
  app.require_subcommand(1);
  Context ctx{in, out};
  app.add_option("--format", ctx.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", ctx.seed, "Seed for randomized analyses");

  int n = 0, l = 0, p = 0, q = 0, r = 0, k = 0;
  std::string file, output, tri_output, rsl = "identity", to, part;
  bool check_only = false;
  HeegaardSearchOptions search;

  auto* gen = app.add_subcommand("gen", "Generate complexes")->require_subcommand(1);
  auto* gen_c4 = gen->add_subcommand("c4", "Boundary of the cyclic 4-polytope");
  gen_c4->add_option("--n", n, "Vertex count")->required();
  gen_c4->add_option("-o,--output", output, "Output .dc file");
  gen_c4->add_option("--tri", tri_output, "Also write a facet list");
  auto* gen_mpqr = gen->add_subcommand("mpqr", "The complex M(p,q,r)");
  gen_mpqr->add_option("--p", p)->required();
  gen_mpqr->add_option("--q", q)->required();
  gen_mpqr->add_option("--r", r)->required();
  gen_mpqr->add_option("-o,--output", output, "Output .dc file");
  gen_mpqr->add_option("--tri", tri_output, "Also write a facet list");
  auto* gen_split = gen->add_subcommand("torus-split", "Solid-torus split of the cyclic polytope boundary");
  gen_split->add_option("--n", n)->required();
  gen_split->add_option("--l", l)->required();
  gen_split->add_option("--part", part, "Emit one half as .dc instead of a report")
      ->check(CLI::IsMember({"a", "b"}));

  auto* verify = app.add_subcommand("verify", "Verify properties")->require_subcommand(1);
  auto* verify_manifold = verify->add_subcommand("manifold", "Every vertex link is a 2-sphere");
  verify_manifold->add_option("file", file, "Input (.dc or .tri, - for stdin)")->required();
  auto* verify_neighbourly = verify->add_subcommand("neighbourly", "All vertex pairs are edges");
  verify_neighbourly->add_option("file", file)->required();

  auto* analyze = app.add_subcommand("analyze", "Analyze a complex")->require_subcommand(1);
  auto* an_homology = analyze->add_subcommand("homology", "Integral homology");
  an_homology->add_option("file", file)->required();
  auto* an_morse = analyze->add_subcommand("morse", "Critical points of an rsl-function");
  an_morse->add_option("file", file)->required();
  an_morse->add_option("--rsl", rsl, "identity, random:SEED or search");
  an_morse->add_option("--restarts", search.restarts, "Random restarts of the search")->check(CLI::NonNegativeNumber);
  an_morse->add_option("--iterations", search.iterations, "Swap attempts per restart")->check(CLI::NonNegativeNumber);
  auto* an_mult = analyze->add_subcommand("multipliers", "Multipliers of a cyclic complex");
  an_mult->add_option("file", file)->required();
  auto* an_seifert = analyze->add_subcommand("seifert", "Predicted Seifert data of M(p,q,r)");
  an_seifert->add_option("--p", p)->required();
  an_seifert->add_option("--q", q)->required();
  an_seifert->add_option("--r", r)->required();

  auto* expand_cmd = app.add_subcommand("expand", "Expansion M_k of a short-cycle family");
  expand_cmd->add_option("file", file)->required();
  expand_cmd->add_option("--k", k)->required();
  expand_cmd->add_flag("--check-only", check_only, "Only report the criterion");
  expand_cmd->add_option("-o,--output", output, "Output .dc file");

  auto* convert = app.add_subcommand("convert", "Convert between .dc and .tri");
  convert->add_option("file", file)->required();
  convert->add_option("--to", to)->required()->check(CLI::IsMember({"dc", "tri"}));
  convert->add_option("-o,--output", output, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "cyclotri: " << e.what() << '\n';
    return 2;
  }

  try {
    if (gen_c4->parsed()) {
      const CyclicComplex cc = cyclic_polytope_boundary(n);
      write_output(ctx, output, format_dc(cc));
      if (!tri_output.empty()) write_output(ctx, tri_output, format_tri(expand(cc)));
      return 0;
    }
    if (gen_mpqr->parsed()) {
      const CyclicComplex cc = build_M(p, q, r);
      write_output(ctx, output, format_dc(cc));
      if (!tri_output.empty()) write_output(ctx, tri_output, format_tri(expand(cc)));
      return 0;
    }
    if (gen_split->parsed()) {
      const auto [a, b] = torus_decomposition(n, l);
      if (!part.empty()) {
        write_output(ctx, "", format_dc(part == "a" ? a : b));
        return 0;
      }
      ordered_json res;
      res["n"] = n;
      res["l"] = l;
      bool ok = true;
      for (const auto& [name, half] : {std::pair{"A", &a}, std::pair{"B", &b}}) {
        const SolidTorusEvidence ev = solid_torus_evidence(expand(*half));
        res[name] = {{"cycles", cycles_json(*half)},
                     {"components", ev.components},
                     {"circle_homology", ev.circle_homology},
                     {"torus_boundary", ev.torus_boundary},
                     {"collapses_to_curve", ev.collapses_to_curve}};
        ok = ok && ev.holds();
      }
      emit_report(ctx, "gen torus-split", nullptr, res, ok);
      return ok ? 0 : 1;
    }
    if (verify_manifold->parsed()) {
      const std::string text = read_input(file, ctx.in);
      const ManifoldReport mr = manifold_report(parse_any(text));
      emit_report(ctx, "verify manifold", &text, manifold_json(mr), mr.is_manifold);
      return mr.is_manifold ? 0 : 1;
    }
    if (verify_neighbourly->parsed()) {
      const std::string text = read_input(file, ctx.in);
      const SimplicialComplex c = as_simplicial(parse_any(text));
      const bool ok = is_neighbourly(c);
      ordered_json res;
      res["neighbourly"] = ok;
      res["vertices"] = c.vertex_count();
      res["edges"] = c.dimension() >= 1 ? c.faces(1).size() : 0;
      emit_report(ctx, "verify neighbourly", &text, res, ok);
      return ok ? 0 : 1;
    }
    if (an_homology->parsed()) {
      const std::string text = read_input(file, ctx.in);
      const SimplicialComplex c = as_simplicial(parse_any(text));
      const HomologyGroups h = homology_groups(c);
      ordered_json res;
      res["homology"] = h.to_string();
      res["groups"] = homology_json(h);
      res["euler_characteristic"] = euler_characteristic(c);
      emit_report(ctx, "analyze homology", &text, res, true);
      return 0;
    }
    if (an_morse->parsed()) {
      const std::string text = read_input(file, ctx.in);
      const SimplicialComplex c = as_simplicial(parse_any(text));
      const ManifoldReport mr = is_combinatorial_3_manifold(c);
      if (!mr.is_manifold) {
        emit_report(ctx, "analyze morse", &text, manifold_json(mr), false);
        return 1;
      }
      ordered_json res;
      RslFunction f = RslFunction::identity(c.label_bound());
      if (rsl == "search") {
        HeegaardSearchOptions opts = search;
        opts.seed = ctx.seed;
        const HeegaardBound hb = heegaard_upper_bound(c, opts);
        f = hb.witness;
        res["heegaard_genus_bound"] = hb.genus_bound;
        res["witness_restart"] = hb.witness_restart;
        res["witness_order"] = f.order();
      } else if (rsl.rfind("random:", 0) == 0) {
        std::uint64_t s = 0;
        try {
          s = std::stoull(rsl.substr(7));
        } catch (const std::exception&) {
          throw Error("bad --rsl seed '" + rsl.substr(7) + "'");
        }
        f = RslFunction::random(c.label_bound(), s);
        res["order"] = f.order();
      } else if (rsl != "identity") {
        throw Error("--rsl must be identity, random:SEED or search");
      }
      const LinkTable table(c);
      const auto points = table.critical_points(f);
      const MorseVector mv = morse_vector(c, points);
      res["morse_vector"] = mv.to_string();
      res["total"] = mv.total();
      ordered_json table_json = ordered_json::array();
      for (const auto& cp : points) {
        table_json.push_back({{"vertex", cp.vertex}, {"index", cp.index}, {"multiplicity", cp.multiplicity}});
      }
      res["critical_points"] = table_json;
      emit_report(ctx, "analyze morse", &text, res, true);
      return 0;
    }
    if (an_mult->parsed()) {
      const std::string text = read_input(file, ctx.in);
      const CyclicComplex cc = as_cyclic(parse_any(text));
      ordered_json res;
      res["n"] = cc.n();
      res["multipliers"] = multipliers(cc);
      emit_report(ctx, "analyze multipliers", &text, res, true);
      return 0;
    }
    if (an_seifert->parsed()) {
      const SeifertData s = expected_seifert(p, q, r);
      ordered_json res;
      res["p"] = p;
      res["q"] = q;
      res["r"] = r;
      res["a"] = s.a;
      res["b"] = s.b;
      res["description"] = s.to_string();
      if (s.connected_sum.empty()) {
        res["base_genus"] = s.base_genus;
        ordered_json fibres = ordered_json::array();
        for (const auto& f : s.fibres) {
          fibres.push_back({{"alpha", f.alpha}, {"beta", f.beta}, {"multiplicity", f.multiplicity}});
        }
        res["fibres"] = fibres;
        res["b1"] = s.b1;
        res["b2"] = s.b2;
        res["b3"] = s.b3;
      }
      res["residual"] = s.residual.get_str();
      res["homology"] = expected_homology(p, q, r).to_string();
      emit_report(ctx, "analyze seifert", nullptr, res, s.residual == 0);
      return s.residual == 0 ? 0 : 1;
    }
    if (expand_cmd->parsed()) {
      const std::string text = read_input(file, ctx.in);
      const CyclicComplex cc = as_cyclic(parse_any(text));
      const ExpandabilityReport rep = check_expandable(cc);
      if (check_only || !rep.expandable) {
        ordered_json res;
        res["expandable"] = rep.expandable;
        res["even"] = rep.even;
        res["short_cycle_present"] = rep.short_cycle_present;
        ordered_json viol = ordered_json::array();
        for (const auto& [d, k0] : rep.violators) viol.push_back({{"cycle", d.to_string()}, {"k0", k0}});
        res["violators"] = viol;
        res["summary"] = rep.summary();
        if (!rep.expandable) {
          err << "cyclotri: " << rep.summary() << '\n';
          emit_report(ctx, "expand", &text, res, false);
          return 1;
        }
        emit_report(ctx, "expand", &text, res, true);
        return 0;
      }
      write_output(ctx, output, format_dc(expand_family(ExpansionFamily::from(cc), k)));
      return 0;
    }
    if (convert->parsed()) {
      const std::string text = read_input(file, ctx.in);
      const AnyComplex c = parse_any(text);
      write_output(ctx, output, to == "dc" ? format_dc(as_cyclic(c)) : format_tri(as_simplicial(c)));
      return 0;
    }
  } catch (const InternalError& e) {
    err << "cyclotri: internal error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "cyclotri: " << e.what() << '\n';
    return 2;
  }
  err << "cyclotri: no command\n";
  return 2;
}

}  // namespace cyclotri::cli
