#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wfk/charmap/charmap.hpp"
#include "wfk/errors.hpp"
#include "wfk/fock/verify.hpp"
#include "wfk/groups/builtins.hpp"
#include "wfk/groups/json.hpp"
#include "wfk/mckay/mckay.hpp"
#include "wfk/series/series.hpp"
#include "wfk/wreath/heisenberg.hpp"

using json = nlohmann::json;

namespace {

enum class Format { json, csv, pretty };

struct Output {
  json data;
  std::string csv;
  const wfk::Report* report = nullptr;
};

struct Context {
  Format format = Format::json;
  std::string emit;
  std::size_t budget = wfk::wreath::kDefaultBudget;
};

std::size_t resolve_budget(std::size_t flag) {
  if (flag) return flag;
  if (const char* env = std::getenv("WFK_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw wfk::InvalidInput("WFK_BUDGET is not a number");
    }
  }
  return wfk::wreath::kDefaultBudget;
}

wfk::groups::GroupHandle load_group(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) {
    std::ifstream in(spec);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw wfk::InvalidInput("cannot parse group file " + spec + ": " + e.what());
    }
    return wfk::groups::make_group(wfk::groups::group_from_json(j), spec);
  }
  return wfk::groups::builtin_group(spec);
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string s;
  for (std::size_t i = 0; i < cells.size(); ++i) s += (i ? "," : "") + cells[i];
  return s + "\n";
}

std::string report_pretty(const wfk::Report& r) {
  std::ostringstream out;
  out << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.probes.size() << " probes";
  if (!r.skipped.empty()) out << ", " << r.skipped.size() << " skipped";
  out << ")\n";
  for (const auto& p : r.probes)
    if (!p.equal) out << "  mismatch " << p.probe << "\n    lhs " << p.lhs << "\n    rhs " << p.rhs << "\n";
  for (const auto& s : r.skipped) out << "  skipped " << s << "\n";
  return out.str();
}

std::string report_csv(const wfk::Report& r) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::string s = "probe,lhs,rhs,equal\n";
  for (const auto& p : r.probes) s += csv_row({quote(p.probe), quote(p.lhs), quote(p.rhs), p.equal ? "true" : "false"});
  return s;
}

int emit(const Context& ctx, const Output& out) {
  std::string text;
  switch (ctx.format) {
    case Format::json:
      text = out.data.dump() + "\n";
      break;
    case Format::csv:
      text = out.report ? report_csv(*out.report) : out.csv;
      break;
    case Format::pretty:
      text = out.report ? report_pretty(*out.report) : out.data.dump(2) + "\n";
      break;
  }
  if (ctx.emit.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(ctx.emit);
    if (!f) throw wfk::InvalidInput("cannot write " + ctx.emit);
    f << text;
  }
  return out.report && !out.report->pass() ? 2 : 0;
}

int emit_report(const Context& ctx, const wfk::Report& r) {
  Output out;
  out.data = r.to_json();
  out.report = &r;
  return emit(ctx, out);
}

json type_json(const wfk::wreath::TypeFunction& t) {
  json classes = json::object();
  for (std::size_t c = 0; c < t.by_class.size(); ++c) classes[std::to_string(c)] = t.by_class[c].parts;
  return json{{"classes", classes}};
}

std::vector<std::string> rational_strings(const std::vector<wfk::exact::Rational>& v) {
  std::vector<std::string> s;
  for (const auto& r : v) s.push_back(r.get_str());
  return s;
}

Output series_output(const wfk::series::PowerSeries& s, const std::vector<std::string>& vars) {
  Output out;
  json terms = json::array();
  out.csv = csv_row(vars) ;
  out.csv.pop_back();
  out.csv += ",coefficient\n";
  for (const auto& [e, c] : s.terms()) {
    json term;
    std::vector<std::string> row;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      int idx = vars[v] == "q" ? 0 : vars[v] == "t" ? 1 : vars[v] == "x" ? 2 : 3;
      term[vars[v]] = e[idx];
      row.push_back(std::to_string(e[idx]));
    }
    term["coefficient"] = c.get_str();
    row.push_back(c.get_str());
    terms.push_back(term);
    out.csv += csv_row(row);
  }
  out.data = json{{"order", s.order()}, {"terms", terms}, {"text", s.to_string()}};
  return out;
}

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> v;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      v.push_back(std::stol(item));
    } catch (const std::exception&) {
      throw wfk::InvalidInput("expected a comma-separated integer list: " + s);
    }
  }
  return v;
}

// "s,t=h;s,t=h".
std::map<std::pair<int, int>, long> parse_hodge(const std::string& s) {
  std::map<std::pair<int, int>, long> h;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ';')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw wfk::InvalidInput("hodge entry needs s,t=value: " + item);
    auto st = parse_longs(item.substr(0, eq));
    if (st.size() != 2) throw wfk::InvalidInput("hodge entry needs two indices: " + item);
    h[{static_cast<int>(st[0]), static_cast<int>(st[1])}] = parse_longs(item.substr(eq + 1)).at(0);
  }
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with wreath products, Fock spaces and Hilbert-scheme series"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  bool as_csv = false, as_pretty = false, as_json = false;
  std::size_t budget_flag = 0;
  app.add_flag("--json", as_json, "JSON output (default)");
  app.add_flag("--csv", as_csv, "CSV output");
  app.add_flag("--pretty", as_pretty, "human-readable output");
  app.add_option("--emit", ctx.emit, "write output to this file");
  app.add_option("--budget", budget_flag, "element-count ceiling for explicit groups (env WFK_BUDGET)");

  std::function<int()> action;

  // group
  auto* group_cmd = app.add_subcommand("group", "conjugacy classes and character table");
  std::string group_spec;
  group_cmd->add_option("--builtin,--group", group_spec, "builtin spec or JSON file")->required();
  group_cmd->callback([&] {
    action = [&] {
      auto g = load_group(group_spec);
      Output out;
      const auto& t = g->characters();
      out.data = json{{"name", g->name()},
                      {"order", g->order()},
                      {"group", wfk::groups::group_to_json(g->group())},
                      {"classes", wfk::groups::classes_to_json(g->classes())},
                      {"characters", wfk::groups::character_table_to_json(t)}};
      std::vector<std::string> head{"irreducible", "degree"};
      for (std::size_t c = 0; c < g->num_classes(); ++c) head.push_back("class" + std::to_string(c));
      out.csv = csv_row(head);
      for (std::size_t i = 0; i < t.size(); ++i) {
        std::vector<std::string> row{std::to_string(i), std::to_string(t.degrees[i])};
        for (const auto& x : t.irreducibles[i]) row.push_back(x.to_string());
        out.csv += csv_row(row);
      }
      return emit(ctx, out);
    };
  });

  // wreath-classes
  auto* wc_cmd = app.add_subcommand("wreath-classes", "conjugacy class types of a wreath product");
  int wc_n = 1;
  wc_cmd->add_option("--group", group_spec, "base group")->required();
  wc_cmd->add_option("--n", wc_n, "level")->required()->check(CLI::NonNegativeNumber);
  wc_cmd->callback([&] {
    action = [&] {
      auto g = load_group(group_spec);
      auto lv = wfk::wreath::make_level(g, wc_n);
      Output out;
      json types = json::array();
      out.csv = "index,type,centralizer\n";
      for (std::size_t i = 0; i < lv->size(); ++i) {
        auto tj = type_json(lv->type(i));
        tj["centralizer"] = lv->centralizer(i).get_str();
        types.push_back(tj);
        out.csv += csv_row({std::to_string(i), "\"" + lv->type(i).to_string() + "\"", lv->centralizer(i).get_str()});
      }
      out.data = json{{"group", g->name()}, {"n", wc_n}, {"count", lv->size()}, {"order", lv->order().get_str()},
                      {"types", types}};
      return emit(ctx, out);
    };
  });

  // mckay
  auto* mk_cmd = app.add_subcommand("mckay", "McKay graph, affine Cartan matrix and type");
  mk_cmd->add_option("--group", group_spec, "finite subgroup of SL2 with a matrix model")->required();
  mk_cmd->callback([&] {
    action = [&] {
      auto d = wfk::mckay::mckay_data(load_group(group_spec));
      Output out;
      out.data = json{{"matrix", d.cartan},
                      {"adjacency", d.adjacency},
                      {"marks", d.marks},
                      {"type", wfk::mckay::classify_affine_ade(d.cartan)}};
      for (const auto& row : d.cartan) {
        std::vector<std::string> cells;
        for (long x : row) cells.push_back(std::to_string(x));
        out.csv += csv_row(cells);
      }
      return emit(ctx, out);
    };
  });

  // fock
  auto* fock_cmd = app.add_subcommand("fock", "Fock space models");
  fock_cmd->require_subcommand(1);
  fock_cmd->fallthrough();
  std::string model_spec = "p2", fock_suite = "heisenberg";
  int fock_cutoff = 3, fock_modes = 2;
  auto* fv = fock_cmd->add_subcommand("verify", "check Heisenberg, Virasoro or boundary relations");
  fv->add_option("--model", model_spec, "model JSON file or builtin name");
  fv->add_option("--suite", fock_suite, "heisenberg | virasoro | boundary")
      ->check(CLI::IsMember({"heisenberg", "virasoro", "boundary"}));
  fv->add_option("--cutoff", fock_cutoff, "largest weight of test vectors")->check(CLI::NonNegativeNumber);
  fv->add_option("--modes", fock_modes, "largest |mode|")->check(CLI::NonNegativeNumber);
  bool drop_canonical = false;
  fv->add_flag("--drop-canonical", drop_canonical, "treat the canonical class as zero");
  fv->callback([&] {
    action = [&] {
      auto algebra = wfk::fock::load_model(model_spec);
      if (drop_canonical) algebra = algebra.with_canonical_class(std::nullopt);
      wfk::fock::FockModel m(std::move(algebra));
      wfk::Report r = fock_suite == "heisenberg" ? wfk::fock::heisenberg_report(m, fock_modes, fock_cutoff)
                      : fock_suite == "virasoro" ? wfk::fock::virasoro_report(m, fock_modes, fock_cutoff)
                                                 : wfk::fock::boundary_report(m, fock_modes, fock_cutoff);
      return emit_report(ctx, r);
    };
  });
  auto* fd = fock_cmd->add_subcommand("dims", "graded dimensions of a Fock model");
  fd->add_option("--model", model_spec, "model JSON file or builtin name");
  fd->add_option("--cutoff", fock_cutoff, "largest weight")->check(CLI::NonNegativeNumber);
  fd->callback([&] {
    action = [&] {
      wfk::fock::FockModel m(wfk::fock::load_model(model_spec));
      auto dims = wfk::fock::graded_dimension(*m.space(), fock_cutoff);
      Output out;
      out.data = json{{"model", m.algebra().name()}, {"dimensions", dims}};
      std::vector<std::string> cells;
      for (long d : dims) cells.push_back(std::to_string(d));
      out.csv = csv_row(cells);
      return emit(ctx, out);
    };
  });

  // series
  auto* series_cmd = app.add_subcommand("series", "generating functions");
  series_cmd->require_subcommand(1);
  series_cmd->fallthrough();
  int order = 6;
  std::string betti = "1,0,1,0,1", hodge = "0,0=1;1,1=1;2,2=1";
  long euler_e = 1, h_even = 1, h_odd = 0;
  int points = 1, nmax = 4;
  auto* sg = series_cmd->add_subcommand("gottsche", "Poincare series of Hilbert schemes of points");
  sg->add_option("--betti", betti, "b0,b1,b2,b3,b4");
  sg->add_option("--order", order, "q order (inclusive)")->check(CLI::NonNegativeNumber);
  sg->callback([&] {
    action = [&] {
      auto b = parse_longs(betti);
      if (b.size() != 5) throw wfk::InvalidInput("--betti needs five numbers");
      return emit(ctx, series_output(wfk::series::gottsche_poincare({b[0], b[1], b[2], b[3], b[4]}, order), {"q", "t"}));
    };
  });
  auto* sdim = series_cmd->add_subcommand("dimension", "total dimension series");
  sdim->add_option("--even", h_even, "even cohomology dimension");
  sdim->add_option("--odd", h_odd, "odd cohomology dimension");
  sdim->add_option("--order", order, "q order (inclusive)")->check(CLI::NonNegativeNumber);
  auto coeff_output = [](const wfk::series::PowerSeries& s) {
    Output out;
    auto c = rational_strings(wfk::series::q_coefficients(s));
    out.data = json{{"coefficients", c}};
    out.csv = csv_row(c);
    return out;
  };
  sdim->callback([&] {
    action = [&] { return emit(ctx, coeff_output(wfk::series::gottsche_dimension(h_even, h_odd, order))); };
  });
  auto* se = series_cmd->add_subcommand("euler", "Euler characteristic series");
  se->add_option("--e", euler_e, "Euler characteristic")->required();
  se->add_option("--order", order, "q order (inclusive)")->check(CLI::NonNegativeNumber);
  se->callback([&] { action = [&] { return emit(ctx, coeff_output(wfk::series::euler_product(euler_e, order))); }; });
  auto* sh = series_cmd->add_subcommand("hodge", "Hodge polynomial series");
  sh->add_option("--hodge", hodge, "entries s,t=h separated by ';'");
  sh->add_option("--order", order, "q order (inclusive)")->check(CLI::NonNegativeNumber);
  sh->callback([&] {
    action = [&] { return emit(ctx, series_output(wfk::series::hodge_product(parse_hodge(hodge), order), {"q", "x", "y"})); };
  });
  auto* so = series_cmd->add_subcommand("orbifold-euler", "orbifold Euler numbers of wreath powers");
  so->add_option("--group", group_spec, "group acting trivially on the points")->required();
  so->add_option("--points", points, "number of points")->check(CLI::PositiveNumber);
  so->add_option("--nmax", nmax, "largest power")->check(CLI::NonNegativeNumber);
  so->callback([&] {
    action = [&] {
      auto s = wfk::series::GSet::trivial_action(load_group(group_spec), points);
      return emit_report(ctx, wfk::series::wreath_orbifold_euler_check(s, nmax, ctx.budget));
    };
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "named verification suites");
  verify_cmd->require_subcommand(1);
  verify_cmd->fallthrough();
  int modes = 1, levels = 2, n = 3, cutoff = 3, cls = -1;
  std::string v_group = "builtin:cyclic:2";
  auto add_group = [&](CLI::App* c) { c->add_option("--group", v_group, "base group"); };
  auto* vh = verify_cmd->add_subcommand("heisenberg", "wreath Heisenberg relations");
  add_group(vh);
  vh->add_option("--modes", modes, "largest |mode|")->check(CLI::NonNegativeNumber);
  vh->add_option("--levels", levels, "largest source level")->check(CLI::NonNegativeNumber);
  vh->callback([&] {
    action = [&] { return emit_report(ctx, wfk::wreath::heisenberg_relations_report(load_group(v_group), modes, levels, ctx.budget)); };
  });
  auto* vt = verify_cmd->add_subcommand("transport", "Heisenberg action through the characteristic map");
  add_group(vt);
  vt->add_option("--cutoff", cutoff, "largest level")->check(CLI::NonNegativeNumber);
  vt->callback([&] {
    action = [&] { return emit_report(ctx, wfk::charmap::verify_heisenberg_transport(load_group(v_group), cutoff, ctx.budget)); };
  });
  auto* vc = verify_cmd->add_subcommand("conv-cubic", "convolution by transpositions against the cubic operator");
  vc->add_option("--n", n, "largest level")->check(CLI::NonNegativeNumber);
  vc->callback([&] { action = [&] { return emit_report(ctx, wfk::charmap::conv_cubic_check(n, ctx.budget)); }; });
  auto* vf = verify_cmd->add_subcommand("fw-virasoro", "Virasoro relations from the convolution bracket");
  add_group(vf);
  vf->add_option("--class", cls, "class index c (default: first non-identity class)");
  vf->add_option("--modes", modes, "largest |mode|")->check(CLI::NonNegativeNumber);
  vf->add_option("--levels", levels, "largest level")->check(CLI::NonNegativeNumber);
  vf->callback([&] {
    action = [&] {
      auto g = load_group(v_group);
      int c = cls >= 0 ? cls : (g->num_classes() > 1 ? 1 : 0);
      return emit_report(ctx, wfk::charmap::fw_virasoro_check(g, c, modes, levels, ctx.budget));
    };
  });
  auto* vl = verify_cmd->add_subcommand("lehn-sorger", "filtered convolution against the boundary operator");
  vl->add_option("--n", n, "level")->check(CLI::Range(0, 7));
  vl->callback([&] { action = [&] { return emit_report(ctx, wfk::charmap::lehn_sorger_check(n, ctx.budget)); }; });
  auto* ve = verify_cmd->add_subcommand("exp", "exponential formulas for eta and epsilon");
  add_group(ve);
  ve->add_option("--n", n, "largest level")->check(CLI::NonNegativeNumber);
  ve->callback([&] { action = [&] { return emit_report(ctx, wfk::charmap::exp_formula_check(load_group(v_group), n, ctx.budget)); }; });
  auto* vk = verify_cmd->add_subcommand("koszul-thom", "Koszul complex against eta_n(xi)");
  add_group(vk);
  vk->add_option("--n", n, "level")->check(CLI::NonNegativeNumber);
  vk->callback([&] { action = [&] { return emit_report(ctx, wfk::mckay::koszul_thom_check(load_group(v_group), n, ctx.budget)); }; });
  auto* vo = verify_cmd->add_subcommand("orbifold-euler", "orbifold Euler numbers of wreath powers");
  add_group(vo);
  vo->add_option("--points", points, "number of points")->check(CLI::PositiveNumber);
  vo->add_option("--nmax", nmax, "largest power")->check(CLI::NonNegativeNumber);
  vo->callback([&] {
    action = [&] {
      auto s = wfk::series::GSet::trivial_action(load_group(v_group), points);
      return emit_report(ctx, wfk::series::wreath_orbifold_euler_check(s, nmax, ctx.budget));
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  if (static_cast<int>(as_csv) + static_cast<int>(as_pretty) + static_cast<int>(as_json) > 1) {
    std::cerr << json{{"error", "Usage"}, {"message", "choose one of --json, --csv, --pretty"}}.dump() << "\n";
    return 1;
  }
  ctx.format = as_csv ? Format::csv : as_pretty ? Format::pretty : Format::json;
  try {
    ctx.budget = resolve_budget(budget_flag);
    return action();
  } catch (const wfk::Error& e) {
    std::cerr << json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}
