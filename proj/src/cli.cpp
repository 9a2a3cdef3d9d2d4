#include "lcylab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "lcylab/json_io.hpp"

namespace lcylab::cli {

namespace {

using json_io::json;

/// Bad input detected after argument parsing (exit 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    parts.push_back(item);
  }
  return parts;
}

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    throw InputError("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw InputError("not an integer: '" + s + "'");
  return v;
}

std::vector<long> parse_long_list(const std::string& text) {
  std::vector<long> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_long(p));
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& p : split(text, ',')) {
    try {
      out.push_back(parse_rational(p));
    } catch (const std::invalid_argument&) {
      throw InputError("not a rational: '" + p + "'");
    }
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string emit(const json& j) { return j.dump(2) + "\n"; }

std::string rays_text(const fan2d::Fan2D& fan) {
  std::string s = "rays:";
  for (const auto& v : fan.rays()) s += " " + fan2d::to_string(v);
  return s + "\n";
}

std::string profile_text(const fan2d::SelfIntersectionProfile& p) {
  std::string s = "selfints:";
  for (const auto& q : p.values) s += " " + to_string(q);
  return s + "\n";
}

std::string index_set_text(const std::set<std::size_t>& s) {
  std::string out = "{";
  for (auto i : s) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

// Shared option state; one instance per dispatch call.
struct Options {
  std::string format = "text";
  unsigned jobs = 1;
  std::optional<std::size_t> budget;

  // fan inputs
  std::string fan_file, rays, standard;
  std::size_t cone = 0, ray_index = 0, i = 0, j = 0;
  std::string weights;

  // cycle inputs
  std::string cycle_file, cycle, other, seed;
  std::optional<long> hirzebruch;
  std::size_t node = 0, index = 0, max_len = 0;
  std::optional<long> n_max;

  // poly inputs
  std::string poly_file, expr, vars, point, var, params, param_map;
  bool projective = false;

  // classify
  std::string descriptor_file, descriptor_json;

  std::string example;

  Format fmt() const { return format == "json" ? Format::Json : Format::Text; }

  cycles::EnumerationOptions enumeration() const {
    cycles::EnumerationOptions e;
    if (const char* env = std::getenv("LCYLAB_BUDGET")) {
      const long v = parse_long(env);
      if (v <= 0) throw InputError("LCYLAB_BUDGET must be positive");
      e.budget = static_cast<std::size_t>(v);
    }
    if (budget) e.budget = *budget;
    e.jobs = std::max(1U, jobs);
    return e;
  }
};

fan2d::Fan2D load_fan(const Options& o) {
  const int given = !o.fan_file.empty() + !o.rays.empty() + !o.standard.empty();
  if (given != 1) throw InputError("give exactly one of --file, --rays, --standard");
  if (!o.fan_file.empty()) return json_io::fan_from_json(read_json_file(o.fan_file));
  if (!o.standard.empty()) {
    if (o.standard == "plane") return fan2d::standard_fan(fan2d::StandardFan::plane());
    if (o.standard == "p121")
      return fan2d::standard_fan(fan2d::StandardFan::weighted_plane_121());
    if (o.standard.rfind("hirzebruch:", 0) == 0)
      return fan2d::standard_fan(
          fan2d::StandardFan::hirzebruch(parse_long(o.standard.substr(11))));
    throw InputError("unknown standard fan '" + o.standard + "'");
  }
  std::vector<std::pair<Integer, Integer>> rays;
  for (const auto& r : split(o.rays, ';')) {
    auto xy = parse_long_list(r);
    if (xy.size() != 2) throw InputError("each ray needs two coordinates: '" + r + "'");
    rays.emplace_back(xy[0], xy[1]);
  }
  return fan2d::make_fan(rays);
}

cycles::CurveCycle cycle_from_text(const std::string& text) {
  std::vector<cycles::Entry> entries;
  for (long v : parse_long_list(text)) entries.push_back(v);
  return cycles::CurveCycle(std::move(entries));
}

cycles::CurveCycle load_cycle(const Options& o) {
  if (o.cycle_file.empty() == o.cycle.empty())
    throw InputError("give exactly one of --file, --cycle");
  if (!o.cycle_file.empty()) return json_io::cycle_from_json(read_json_file(o.cycle_file));
  return cycle_from_text(o.cycle);
}

poly::MultiPoly load_poly(const Options& o) {
  if (o.poly_file.empty() == o.expr.empty())
    throw InputError("give exactly one of --file, --expr");
  if (!o.poly_file.empty()) return json_io::poly_from_json(read_json_file(o.poly_file));
  if (o.vars.empty()) throw InputError("--expr needs --vars");
  return poly::parse_poly(o.expr, split(o.vars, ','));
}

std::string fan_output(const fan2d::Fan2D& fan, Format f) {
  return f == Format::Json ? emit(json_io::fan_to_json(fan)) : rays_text(fan);
}

std::string cycle_output(const cycles::CurveCycle& c, Format f) {
  return f == Format::Json ? emit(json_io::cycle_to_json(c)) : cycles::to_string(c) + "\n";
}

std::string poly_output(const poly::MultiPoly& p, Format f) {
  if (f == Format::Json) {
    json j = json_io::poly_to_json(p);
    j["text"] = poly::to_string(p);
    return emit(j);
  }
  return poly::to_string(p) + "\n";
}

std::string scalar_output(const char* key, const json& value, const std::string& text,
                          Format f) {
  return f == Format::Json ? emit(json{{key, value}}) : text + "\n";
}

// Routes a point to the chart where it is affine when --projective is set.
std::pair<poly::MultiPoly, std::vector<Rational>> located_point(const Options& o) {
  auto p = load_poly(o);
  auto pt = parse_rational_list(o.point);
  if (!o.projective) return {std::move(p), std::move(pt)};
  auto chart = poly::affine_chart_at(p, pt);
  return {std::move(chart.equation), std::move(chart.point)};
}

}  // namespace

std::string render_report(const cycles::LemmaReport& report, Format format) {
  if (format == Format::Json) return emit(json_io::lemma_report_to_json(report));
  std::ostringstream s;
  s << "seed (" << report.b1 << "," << report.b2 << "," << report.b3 << ")  max_len "
    << report.max_len << "  n_max " << report.n_max << "\n";
  for (const auto& [k, m] : report.per_length) {
    const auto& sizes = report.family_sizes.at(k);
    s << "length " << k << ": min mismatch " << m << "  (" << sizes.first << " x "
      << sizes.second << " cycles)\n";
  }
  if (report.witness)
    s << "witness: " << cycles::to_string(report.witness->left) << " vs "
      << cycles::to_string(report.witness->right) << "  rotation "
      << report.witness->alignment.rotation
      << (report.witness->alignment.reflected ? " reflected" : "") << "\n";
  s << (report.ok ? "OK" : "FAILED") << "\n";
  return s.str();
}

std::string render_report(const lcverify::VerificationReport& report, Format format) {
  if (format == Format::Json) return emit(json_io::report_to_json(report));
  std::ostringstream s;
  s << report.example_id << "\n";
  for (const auto& c : report.checks)
    s << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
  for (const auto& n : report.notes) s << "  note: " << n << "\n";
  s << (report.overall() ? "OK" : "FAILED") << "\n";
  return s.str();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  std::function<int()> action;

  CLI::App app{"Toric fan, boundary cycle and quartic surface checks", "lcylab"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    cmd->add_option("--jobs", o.jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);
    cmd->add_option("--budget", o.budget, "State budget for enumeration")
        ->check(CLI::PositiveNumber);
  };
  auto leaf = [&](CLI::App* group, const char* name, const char* help,
                  std::function<int()> body) {
    CLI::App* cmd = group->add_subcommand(name, help);
    common(cmd);
    cmd->callback([&action, body] { action = body; });
    return cmd;
  };

  // fan --------------------------------------------------------------------
  CLI::App* fan = app.add_subcommand("fan", "Complete fans in the plane lattice");
  fan->require_subcommand(1);
  auto fan_input = [&](CLI::App* cmd) {
    cmd->add_option("--file", o.fan_file, "Fan JSON file");
    cmd->add_option("--rays", o.rays, "Rays as 'x,y;x,y;...'");
    cmd->add_option("--standard", o.standard, "plane | p121 | hirzebruch:N");
  };
  fan_input(leaf(fan, "make", "Validate and print a fan",
                 [&] { out << fan_output(load_fan(o), o.fmt()); return kExitOk; }));
  fan_input(leaf(fan, "smooth", "Smoothness test", [&] {
    const bool s = fan2d::is_smooth(load_fan(o));
    out << scalar_output("smooth", s, s ? "smooth" : "singular", o.fmt());
    return kExitOk;
  }));
  fan_input(leaf(fan, "selfint", "Self-intersection numbers", [&] {
    const auto p = fan2d::self_intersections(load_fan(o));
    out << (o.fmt() == Format::Json ? emit(json_io::profile_to_json(p)) : profile_text(p));
    return kExitOk;
  }));
  auto* blowup = leaf(fan, "blowup", "Star subdivision of a cone", [&] {
    out << fan_output(fan2d::star_subdivide(load_fan(o), o.cone), o.fmt());
    return kExitOk;
  });
  fan_input(blowup);
  blowup->add_option("--cone", o.cone, "Cone index")->required();
  auto* wblowup = leaf(fan, "wblowup", "Weighted star subdivision of a cone", [&] {
    auto w = parse_long_list(o.weights);
    if (w.size() != 2) throw InputError("--weights needs two entries");
    out << fan_output(fan2d::weighted_star_subdivide(load_fan(o), o.cone, w[0], w[1]), o.fmt());
    return kExitOk;
  });
  fan_input(wblowup);
  wblowup->add_option("--cone", o.cone, "Cone index")->required();
  wblowup->add_option("--weights", o.weights, "Weights a,b")->required();
  auto* contract = leaf(fan, "contract", "Remove a ray", [&] {
    out << fan_output(fan2d::contract_ray(load_fan(o), o.ray_index), o.fmt());
    return kExitOk;
  });
  fan_input(contract);
  contract->add_option("--ray", o.ray_index, "Ray index")->required();
  auto* l41 = leaf(fan, "lemma41", "Separating ray, refinement and fibration split", [&] {
    const auto r = lcverify::lemma41_construction(load_fan(o), o.i, o.j);
    if (o.fmt() == Format::Json) {
      out << emit(json_io::lemma41_to_json(r));
    } else {
      out << "rho0: " << fan2d::to_string(r.rho0) << "\n" << rays_text(r.refined)
          << "over_zero: " << index_set_text(r.split.over_zero) << "\n"
          << "over_infinity: " << index_set_text(r.split.over_infinity) << "\n"
          << "horizontal: " << index_set_text(r.split.horizontal) << "\n";
    }
    return kExitOk;
  });
  fan_input(l41);
  l41->add_option("--i", o.i, "First ray index")->required();
  l41->add_option("--j", o.j, "Second ray index")->required();

  // cycle ------------------------------------------------------------------
  CLI::App* cyc = app.add_subcommand("cycle", "Boundary cycles of curves");
  cyc->require_subcommand(1);
  auto cycle_input = [&](CLI::App* cmd) {
    cmd->add_option("--file", o.cycle_file, "Cycle JSON file");
    cmd->add_option("--cycle", o.cycle, "Self-intersections 'a,b,c,...'");
  };
  auto* cblow = leaf(cyc, "blowup", "Blow up a node", [&] {
    out << cycle_output(cycles::blow_up_node(load_cycle(o), o.node), o.fmt());
    return kExitOk;
  });
  cycle_input(cblow);
  cblow->add_option("--node", o.node, "Node index")->required();
  auto* ccon = leaf(cyc, "contract", "Contract a (-1)-curve", [&] {
    out << cycle_output(cycles::contract_at(load_cycle(o), o.index), o.fmt());
    return kExitOk;
  });
  cycle_input(ccon);
  ccon->add_option("--index", o.index, "Entry index")->required();
  cycle_input(leaf(cyc, "canon", "Dihedral canonical form", [&] {
    out << cycle_output(cycles::canonical_form(load_cycle(o)), o.fmt());
    return kExitOk;
  }));
  auto* mism = leaf(cyc, "mismatch", "Least dihedral mismatch of two cycles", [&] {
    const auto a = cycles::best_alignment(load_cycle(o), cycle_from_text(o.other));
    if (o.fmt() == Format::Json)
      out << emit({{"mismatch", a.mismatch}, {"rotation", a.rotation}, {"reflected", a.reflected}});
    else
      out << a.mismatch << "\n";
    return kExitOk;
  });
  cycle_input(mism);
  mism->add_option("--other", o.other, "Second cycle 'a,b,c,...'")->required();
  auto* enumc = leaf(cyc, "enumerate", "Cycles reachable by node blow-ups", [&] {
    if (o.seed.empty() == !o.hirzebruch.has_value())
      throw InputError("give exactly one of --seed, --hirzebruch");
    cycles::CycleSeed seed;
    if (o.hirzebruch) {
      seed = cycles::CycleSeed::hirzebruch(*o.hirzebruch);
    } else {
      auto b = parse_long_list(o.seed);
      if (b.size() != 3) throw InputError("--seed needs three entries");
      seed = cycles::CycleSeed::triple(b[0], b[1], b[2]);
    }
    const auto all = cycles::enumerate_from_seed(seed, o.max_len, o.enumeration());
    if (o.fmt() == Format::Json) {
      json list = json::array();
      for (const auto& c : all) list.push_back(c.selfints());
      out << emit({{"cycles", list}, {"count", all.size()}});
    } else {
      for (const auto& c : all) out << cycles::to_string(c) << "\n";
    }
    return kExitOk;
  });
  enumc->add_option("--seed", o.seed, "Triple seed b1,b2,b3");
  enumc->add_option("--hirzebruch", o.hirzebruch, "Hirzebruch seed n");
  enumc->add_option("--max-len", o.max_len, "Largest cycle length")->required();
  auto* vl = leaf(cyc, "verify-lemma", "Brute-force three-mismatch check", [&] {
    auto b = parse_long_list(o.seed);
    if (b.size() != 3) throw InputError("--seed needs three entries");
    const long n_max = o.n_max.value_or(static_cast<long>(o.max_len) + 2);
    const auto report =
        cycles::verify_lemma(b[0], b[1], b[2], o.max_len, n_max, o.enumeration());
    out << render_report(report, o.fmt());
    return report.ok ? kExitOk : kExitVerificationFailed;
  });
  vl->add_option("--seed", o.seed, "Triple seed b1,b2,b3")->required();
  vl->add_option("--max-len", o.max_len, "Largest cycle length")->required();
  vl->add_option("--n-max", o.n_max, "Largest Hirzebruch parameter (default max-len + 2)");
  cycle_input(leaf(cyc, "realize", "Rebuild a smooth fan from a cycle", [&] {
    const auto fan = cycles::realize_as_fan(load_cycle(o));
    if (o.fmt() == Format::Json)
      out << emit({{"realizable", fan.has_value()},
                   {"fan", fan ? json_io::fan_to_json(*fan) : json(nullptr)}});
    else
      out << (fan ? rays_text(*fan) : std::string("not realizable\n"));
    return kExitOk;
  }));

  // poly -------------------------------------------------------------------
  CLI::App* pol = app.add_subcommand("poly", "Exact polynomial checks");
  pol->require_subcommand(1);
  auto poly_input = [&](CLI::App* cmd) {
    cmd->add_option("--file", o.poly_file, "Polynomial JSON file");
    cmd->add_option("--expr", o.expr, "Polynomial expression");
    cmd->add_option("--vars", o.vars, "Variables 'x,y,z'");
  };
  auto with_point = [&](CLI::App* cmd) {
    cmd->add_option("--point", o.point, "Coordinates 'a,b/c,...'")->required();
    cmd->add_flag("--projective", o.projective, "Treat the point as projective");
  };
  poly_input(leaf(pol, "parse", "Parse and normalize", [&] {
    out << poly_output(load_poly(o), o.fmt());
    return kExitOk;
  }));
  auto* pev = leaf(pol, "eval", "Evaluate at a point", [&] {
    const auto v = poly::evaluate_at(load_poly(o), parse_rational_list(o.point));
    out << scalar_output("value", to_string(v), to_string(v), o.fmt());
    return kExitOk;
  });
  poly_input(pev);
  pev->add_option("--point", o.point, "Coordinates 'a,b/c,...'")->required();
  auto* pdiff = leaf(pol, "diff", "Partial derivative", [&] {
    out << poly_output(poly::partial_derivative(load_poly(o), o.var), o.fmt());
    return kExitOk;
  });
  poly_input(pdiff);
  pdiff->add_option("--var", o.var, "Variable")->required();
  auto* pmult = leaf(pol, "mult", "Multiplicity at a point", [&] {
    auto [p, pt] = located_point(o);
    const auto m = poly::multiplicity_at_point(p, pt);
    out << scalar_output("multiplicity", m, std::to_string(m), o.fmt());
    return kExitOk;
  });
  poly_input(pmult);
  with_point(pmult);
  auto* pw = leaf(pol, "wmult", "Weighted multiplicity at the origin", [&] {
    const auto m = poly::weighted_multiplicity(load_poly(o), parse_long_list(o.weights));
    out << scalar_output("weighted_multiplicity", json_io::integer_to_json(m), m.get_str(),
                         o.fmt());
    return kExitOk;
  });
  poly_input(pw);
  pw->add_option("--weights", o.weights, "Weights 'a,b,c'")->required();
  auto* ph = leaf(pol, "whom", "Weighted homogeneity", [&] {
    const auto w = poly::is_weighted_homogeneous(load_poly(o), parse_long_list(o.weights));
    out << scalar_output("weight", w ? json_io::integer_to_json(*w) : json(nullptr),
                         w ? w->get_str() : std::string("not weighted homogeneous"), o.fmt());
    return kExitOk;
  });
  poly_input(ph);
  ph->add_option("--weights", o.weights, "Weights 'a,b,c'")->required();
  auto* phr = leaf(pol, "hessrank", "Rank of the Hessian at a point", [&] {
    auto [p, pt] = located_point(o);
    const auto r = poly::hessian_rank_at(p, pt);
    out << scalar_output("hessian_rank", r, std::to_string(r), o.fmt());
    return kExitOk;
  });
  poly_input(phr);
  with_point(phr);
  auto* pso = leaf(pol, "singular-on", "Does the gradient vanish on a parametrized curve", [&] {
    std::map<std::string, std::string> images;
    for (const auto& m : split(o.param_map, ';')) {
      const auto eq = m.find('=');
      if (eq == std::string::npos) throw InputError("--map entries look like 'x=expr'");
      auto name = m.substr(0, eq);
      name.erase(name.find_last_not_of(" \t") + 1);
      images[name] = m.substr(eq + 1);
    }
    const auto param = poly::make_parametrization(split(o.params, ','), images);
    const bool v = poly::gradient_vanishes_on_curve(load_poly(o), param);
    out << scalar_output("singular_along_curve", v, v ? "true" : "false", o.fmt());
    return kExitOk;
  });
  poly_input(pso);
  pso->add_option("--params", o.params, "Parameter variables 's,u'")->required();
  pso->add_option("--map", o.param_map, "Images 't=s^2;x=0;...'")->required();

  // classify ---------------------------------------------------------------
  auto* cls = leaf(&app, "classify", "Cluster-type verdict for a quartic case", [&] {
    if (o.descriptor_file.empty() == o.descriptor_json.empty())
      throw InputError("give exactly one of --file, --json");
    json j;
    if (!o.descriptor_file.empty()) {
      j = read_json_file(o.descriptor_file);
    } else {
      try {
        j = json::parse(o.descriptor_json);
      } catch (const json::exception& e) {
        throw InputError(e.what());
      }
    }
    const auto v = lcverify::classify_quartic_pair(json_io::descriptor_from_json(j));
    out << (o.fmt() == Format::Json
                ? emit(json_io::verdict_to_json(v))
                : std::string(to_string(v.value)) + " (" + v.justification + ")\n");
    return kExitOk;
  });
  cls->add_option("--file", o.descriptor_file, "Descriptor JSON file");
  cls->add_option("--json", o.descriptor_json, "Inline descriptor JSON");

  // examples ---------------------------------------------------------------
  CLI::App* ex = app.add_subcommand("examples", "Embedded worked quartics");
  ex->require_subcommand(1);
  auto* exv = leaf(ex, "verify", "Run the checks for one example or all", [&] {
    std::vector<lcverify::ExampleId> ids;
    if (o.example == "all") {
      ids = lcverify::all_examples();
    } else if (auto id = lcverify::parse_example_id(o.example)) {
      ids.push_back(*id);
    } else {
      throw InputError("unknown example '" + o.example + "'");
    }
    bool ok = true;
    std::vector<lcverify::VerificationReport> reports;
    for (auto id : ids) {
      reports.push_back(lcverify::verify_example(id));
      ok = ok && reports.back().overall();
    }
    if (o.fmt() == Format::Json && ids.size() > 1) {
      json list = json::array();
      for (const auto& r : reports) list.push_back(json_io::report_to_json(r));
      out << emit({{"overall", ok}, {"reports", list}});
    } else {
      for (const auto& r : reports) out << render_report(r, o.fmt());
    }
    return ok ? kExitOk : kExitVerificationFailed;
  });
  exv->add_option("id", o.example, "nodal-conic | nodal-line | normal-quartic | all")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const json_io::SchemaError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const fan2d::FanError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const cycles::CycleError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const poly::PolyError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const lcverify::DescriptorError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace lcylab::cli
