#include "puiseux/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "puiseux/canonical.hpp"
#include "puiseux/report.hpp"

namespace puiseux {

namespace {

struct Options {
  std::string output = "text";
  std::optional<std::int64_t> budget;
  std::string spec_path;
  std::string element;
  std::int64_t limit = 10;
  std::int64_t count = 10;
  std::optional<std::size_t> depth;
  std::vector<std::string> interval;
  std::string eps;
  std::string T;
  // construct
  std::string seed = "calkin_wilf";
  bool details = false;
  int cantor_depth = 1;
  std::string form;
  std::string first;
  std::string second;
  std::vector<std::string> prefix;
  std::optional<std::int64_t> start;
};

std::int64_t effective_budget(const Options& o) {
  if (o.budget) {
    if (*o.budget <= 0) throw InputError("--budget must be positive");
    return *o.budget;
  }
  if (const char* env = std::getenv("PUISEUX_BUDGET"); env && *env) {
    const BigInt b = parse_natural(env);
    if (b <= 0 || !b.fits_slong_p()) throw InputError("PUISEUX_BUDGET must be a positive integer");
    return b.get_si();
  }
  return kDefaultBudget;
}

MonoidSpec load_spec(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot open spec file \"" + path + "\"");
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  return parse_spec(text);
}

void emit(const Json& j, const Options& o, std::ostream& out) {
  if (o.output == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << to_text(j);
  }
}

std::vector<Rat> parse_rats(const std::vector<std::string>& items) {
  std::vector<Rat> out;
  for (const auto& s : items) out.push_back(Rat::parse(s));
  return out;
}

int dispatch(const std::string& cmd, const std::string& sub, const Options& o, std::istream& in,
             std::ostream& out) {
  const std::int64_t budget = effective_budget(o);

  if (cmd == "construct") {
    if (sub == "dense-atoms") {
      const auto d = build_dense_atoms(o.count, parse_seed(o.seed));
      if (o.details) {
        emit(to_json(d), o, out);
      } else {
        out << to_json_text(d.spec);
      }
    } else if (sub == "cantor") {
      const auto c = build_cantor_shift(o.cantor_depth);
      if (o.details) {
        emit(to_json(c), o, out);
      } else {
        out << to_json_text(c.spec);
      }
    } else {
      IncreasingParams p;
      p.form = parse_increasing_form(o.form);
      p.first = Rat::parse(o.first);
      if (!o.second.empty()) p.second = Rat::parse(o.second);
      p.prefix = parse_rats(o.prefix);
      p.start = o.start;
      out << to_json_text(build_increasing(p));
    }
    return kExitDefinite;
  }

  const MonoidSpec spec = load_spec(o.spec_path, in);

  if (cmd == "classify") {
    const auto v = classify_density(spec);
    emit(to_json(v), o, out);
    return v.cls == DensityClass::kUnknown ? kExitUndecided : kExitDefinite;
  }
  if (cmd == "atoms") {
    const auto v = atoms(spec, o.limit, budget);
    emit(to_json(v), o, out);
    return v.kind == AtomicityKind::kUnknown ? kExitUndecided : kExitDefinite;
  }
  if (cmd == "member") {
    const Rat x = Rat::parse(o.element);
    const auto r = spec_member(spec, x, budget);
    Json j;
    j["element"] = x.str();
    j.update(to_json(r));
    emit(j, o, out);
    return r.verdict == Membership::kUnknown ? kExitUndecided : kExitDefinite;
  }
  if (cmd == "factorize") {
    const Rat x = Rat::parse(o.element);
    const auto s = factorizations(spec, x, budget);
    Json j;
    j["element"] = x.str();
    j.update(to_json(s));
    emit(j, o, out);
    return s.complete ? kExitDefinite : kExitUndecided;
  }
  if (cmd == "lengths") {
    const Rat x = Rat::parse(o.element);
    const auto s = length_set(spec, x, budget);
    Json j;
    j["element"] = x.str();
    j.update(to_json(s));
    emit(j, o, out);
    return s.complete ? kExitDefinite : kExitUndecided;
  }
  if (cmd == "frobenius") {
    const auto fg = finite_generating_set(spec);
    if (!fg) throw InputError("frobenius needs a finitely generated monoid");
    const CanonicalFG c = canonicalize(*fg);
    const std::int64_t f = c.monoid().frobenius();
    Json j;
    j["frobenius"] = (SignedRat(c.scale) * SignedRat(f)).str();
    j["conductor_min"] = (c.scale * Rat(f + 1)).str();
    j["scale"] = c.scale.str();
    Json gens = Json::array();
    for (std::int64_t g : c.monoid().minimal_generators()) gens.push_back(g);
    j["numerical_monoid"] = gens;
    emit(j, o, out);
    return kExitDefinite;
  }
  if (cmd == "closure") {
    const auto g = difference_group(spec);
    Json j;
    j["group"] = to_json(g);
    if (g.kind == GroupKind::kUnknown) {
      emit(j, o, out);
      return kExitUndecided;
    }
    const ClosureDescription c{g};
    j["membership"] = "x in closure iff x >= 0 and x in gp(M)";
    j["generators"] = rat_list(c.generators(static_cast<std::size_t>(o.count)));
    j["root_closed"] = structurally_root_closed(spec);
    emit(j, o, out);
    return kExitDefinite;
  }
  if (cmd == "gp") {
    const auto r = gp_density(spec);
    Json j = to_json(r);
    j["group"] = to_json(difference_group(spec));
    emit(j, o, out);
    return r.kind == GpDensityKind::kUnknown ? kExitUndecided : kExitDefinite;
  }
  if (cmd == "conductor") {
    const auto r = conductor(spec);
    emit(to_json(r), o, out);
    return r.kind == ConductorKind::kUnknown ? kExitUndecided : kExitDefinite;
  }
  if (cmd == "probe") {
    if (o.interval.size() != 2) throw InputError("probe needs --interval LO HI");
    if (o.eps.empty()) throw InputError("probe needs --eps E");
    const auto r = probe_density(spec, Rat::parse(o.interval[0]), Rat::parse(o.interval[1]),
                                 Rat::parse(o.eps), budget, o.depth);
    emit(to_json(r), o, out);
    return r.result == ProbeOutcome::kInconclusive ? kExitUndecided : kExitDefinite;
  }
  if (cmd == "isolate") {
    if (o.T.empty()) throw InputError("isolate needs --T X");
    const auto r = right_isolation(spec, Rat::parse(o.T), budget, o.depth);
    emit(to_json(r), o, out);
    return kExitDefinite;
  }
  throw InputError("unknown subcommand " + cmd);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations on Puiseux monoids", "puiseux"};
  app.require_subcommand(1);
  app.add_option("--output", o.output, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--budget", o.budget, "Search/enumeration budget (overrides PUISEUX_BUDGET)");

  auto spec_cmd = [&](const std::string& name, const std::string& help) {
    CLI::App* c = app.add_subcommand(name, help);
    c->fallthrough();
    c->add_option("spec", o.spec_path, "Spec JSON file, or - for stdin")->required();
    return c;
  };
  spec_cmd("classify", "Density class from the rule table");
  spec_cmd("atoms", "Atoms and atomicity")->add_option("--limit", o.limit, "Atoms to show");
  for (const auto& [name, help] : {std::pair{"member", "Membership of an element"},
                                   std::pair{"factorize", "Factorizations of an element"},
                                   std::pair{"lengths", "Factorization lengths of an element"}}) {
    spec_cmd(name, help)
        ->add_option("element", o.element, "Rational a or a/b")
        ->required();
  }
  spec_cmd("frobenius", "Frobenius number of a finitely generated monoid");
  spec_cmd("closure", "Root closure")->add_option("--count", o.count, "Closure generators to show");
  spec_cmd("gp", "Density of the difference group");
  spec_cmd("conductor", "Conductor from the rule table");
  {
    CLI::App* c = spec_cmd("probe", "Epsilon-density probe");
    c->add_option("--interval", o.interval, "LO HI")->expected(2);
    c->add_option("--eps", o.eps, "Resolution");
    c->add_option("--depth", o.depth, "Generator depth");
  }
  {
    CLI::App* c = spec_cmd("isolate", "Right isolation radii");
    c->add_option("--T", o.T, "Upper bound");
    c->add_option("--depth", o.depth, "Use the first D generators");
  }
  CLI::App* construct = app.add_subcommand("construct", "Build example specs");
  construct->require_subcommand(1);
  construct->fallthrough();
  {
    CLI::App* c = construct->add_subcommand("dense-atoms", "Atoms approximating a dense sequence");
    c->fallthrough();
    c->add_option("--count", o.count, "Atoms to materialize");
    c->add_option("--seed", o.seed, "calkin_wilf or dyadic");
    c->add_flag("--details", o.details, "Print the entry table rather than spec JSON");
  }
  {
    CLI::App* c = construct->add_subcommand("cantor", "Cantor endpoint shift");
    c->fallthrough();
    c->add_option("--depth", o.cantor_depth, "Removal rounds");
    c->add_flag("--details", o.details, "Print the generator list rather than spec JSON");
  }
  {
    CLI::App* c = construct->add_subcommand("increasing", "Increasing catalog sequence");
    c->fallthrough();
    c->add_option("--form", o.form, "affine, harmonic, prime_reciprocal or geometric")->required();
    c->add_option("--first", o.first, "offset, shift or ratio")->required();
    c->add_option("--second", o.second, "step or scale");
    c->add_option("--prefix", o.prefix, "Explicit prefix terms");
    c->add_option("--start", o.start, "First tail index");
  }

  std::vector<std::string> argv_storage{"puiseux"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitDefinite : kExitInputError;
  }

  std::string cmd;
  std::string sub;
  for (const CLI::App* c : app.get_subcommands()) cmd = c->get_name();
  for (const CLI::App* c : construct->get_subcommands()) sub = c->get_name();

  try {
    return dispatch(cmd, sub, o, in, out);
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace puiseux
