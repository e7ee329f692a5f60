#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "cmcflat/admissibility.hpp"
#include "cmcflat/errors.hpp"
#include "cmcflat/geometry.hpp"
#include "cmcflat/json_io.hpp"
#include "cmcflat/lattice_expr.hpp"
#include "cmcflat/periodicity.hpp"
#include "export.hpp"

namespace cmcflat::cli {

namespace {

constexpr double kDefaultPeriodBound = 60.0;

// Non-exact numeric flag: a fraction "n/d" or a decimal literal.
double parse_real(const std::string& text) {
  if (text.find('/') != std::string::npos) return Rational::parse(text).to_double();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParseError("not a number: \"" + text + "\"");
  }
  if (used != text.size()) throw ParseError("not a number: \"" + text + "\"");
  return v;
}

void emit(const std::string& path, const std::string& contents, std::ostream& out) {
  if (path.empty())
    out << contents;
  else
    write_atomic(path, contents);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

struct ConstructArgs {
  std::string h, rho, preset, extend, out;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  const int modes = (!a.h.empty() || !a.rho.empty()) + !a.preset.empty() + !a.extend.empty();
  if (modes != 1) throw DomainError("construct needs exactly one of --h/--rho, --preset or --extend");

  std::ostringstream summary;
  MiyataData data;
  if (!a.extend.empty()) {
    const Immersion base = Immersion::build(miyata_from_json(read_file(a.extend)));
    const Immersion ext = extend_dimension(base);
    data = ext.data();
    summary << "ambient_dim " << base.ambient_dim() << " -> " << ext.ambient_dim() << "\n";
  } else {
    StructureParams sp;
    if (!a.preset.empty()) {
      if (a.preset != "sasahara") throw DomainError("unknown preset \"" + a.preset + "\" (known: sasahara)");
      sp = structure_params(0.5, rho_max(0.5));
    } else {
      if (a.h.empty() || a.rho.empty()) throw DomainError("construct needs both --h and --rho");
      sp = structure_params(parse_real(a.h), parse_real(a.rho));
    }
    data = canonicalize(lift(sp));
    summary << "R1' " << fmt(sp.r1_prime) << "\nR2' " << fmt(sp.r2_prime) << "\nrho " << fmt(sp.rho) << "\nrho_tilde "
            << fmt(sp.rho_tilde) << "\nlambda1 " << fmt(sp.lambda1) << "\nlambda2 " << fmt(sp.lambda2) << "\n";
  }
  emit(a.out, dump(to_json(data)), out);
  (a.out.empty() ? err : out) << summary.str();
  return kExitOk;
}

struct VerifyArgs {
  std::string params, out;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (a.samples == 0) throw DomainError("--samples must be positive");
  const MiyataData data = miyata_from_json(read_file(a.params));
  const Immersion im = Immersion::build_unchecked(data);
  VerifyOptions opts;
  opts.samples = a.samples;
  opts.seed = a.seed;
  const VerificationReport report = verify_immersion(im, opts);
  emit(a.out, dump(to_json(report)), out);
  if (report.all_passed()) return kExitOk;
  for (const std::string& name : report.failed_names()) err << "failed: " << name << "\n";
  return kExitCheckFailed;
}

struct LatticeArgs {
  std::string params, a, b, q, out;
  double bound = kDefaultPeriodBound;
};

std::pair<long long, long long> exact_root(const std::string& flag, const std::string& text) {
  const auto root = rational_sqrt_exact(Rational::parse(text));
  if (!root) throw ExactnessError(flag + " = " + text + " is not the square of a rational");
  return {root->numerator().convert_to<long long>(), root->denominator().convert_to<long long>()};
}

int cmd_lattice(const LatticeArgs& a, std::ostream& out) {
  const int modes = !a.params.empty() + (!a.a.empty() || !a.b.empty()) + !a.q.empty();
  if (modes != 1) throw DomainError("lattice needs exactly one of --params, --a/--b or --q");
  Json j;
  if (!a.params.empty()) {
    if (!(a.bound > 0.0)) throw DomainError("--bound must be positive");
    const Immersion im = Immersion::build(miyata_from_json(read_file(a.params)));
    j = lattice_json(period_lattice(im, a.bound));
    j["search_bound"] = a.bound;
  } else if (!a.q.empty()) {
    TorusVerdict v;
    v.kind = TorusVerdictKind::case_i;
    v.case_i = torus_case_i(Rational::parse(a.q));
    v.h = v.case_i->h;
    j = to_json(v);
  } else {
    if (a.a.empty() || a.b.empty()) throw DomainError("lattice needs both --a and --b");
    const auto [p, q] = exact_root("--a", a.a);
    const auto [r, t] = exact_root("--b", a.b);
    TorusVerdict v;
    v.kind = TorusVerdictKind::case_ii;
    v.case_ii = torus_case_ii(p, q, r, t);
    v.h = v.case_ii->params.h;
    j = to_json(v);
  }
  emit(a.out, dump(j), out);
  return kExitOk;
}

int cmd_torus_exists(const std::string& h, long long bound, const std::string& path, std::ostream& out) {
  if (bound <= 0) throw DomainError("--bound must be positive");
  emit(path, dump(to_json(torus_exists(Rational::parse(h), bound))), out);
  return kExitOk;
}

int cmd_admissible(const std::string& lattice, const std::string& h, const std::string& path, std::ostream& out) {
  const Lattice2 lat = parse_lattice_json(read_file(lattice));
  emit(path, dump(to_json(admissible(lat, Rational::parse(h)))), out);
  return kExitOk;
}

struct ExportArgs {
  std::string params, projection = "coords", out;
  std::vector<int> grid;
  std::vector<double> range;
  std::uint64_t seed = 0;
};

int cmd_export(const ExportArgs& a, std::ostream& out) {
  if (a.grid.size() != 2) throw DomainError("--grid needs two integers nx ny");
  GridSpec g;
  g.nx = a.grid[0];
  g.ny = a.grid[1];
  if (!a.range.empty()) {
    if (a.range.size() != 4) throw DomainError("--range needs x0 x1 y0 y1");
    g.x0 = a.range[0];
    g.x1 = a.range[1];
    g.y0 = a.range[2];
    g.y1 = a.range[3];
  }
  Projection proj = Projection::coords;
  if (a.projection == "pca3")
    proj = Projection::pca3;
  else if (a.projection != "coords")
    throw DomainError("--projection must be coords or pca3");

  const Immersion im = Immersion::build(miyata_from_json(read_file(a.params)));
  const std::string csv = grid_csv(im, g);
  const std::string obj = grid_obj(im, g, proj, a.seed);
  write_atomic(a.out + ".csv", csv);
  write_atomic(a.out + ".obj", obj);
  out << a.out << ".csv\n" << a.out << ".obj\n";

  const MiyataData& d = im.data();
  if (d.m() == 1 && d.mu[0] == Complex(1.0, 0.0)) {
    const Lattice2 lat = period_lattice(im, kDefaultPeriodBound);
    if (lat.rank() == 2) {
      write_atomic(a.out + ".domain.json", fundamental_domain_json(lat));
      out << a.out << ".domain.json\n";
    }
  }
  return kExitOk;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
    if (!o) throw ParseError("cannot write " + tmp.string());
    o << contents;
    o.flush();
    if (!o) throw ParseError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw ParseError("cannot rename onto " + path + ": " + ec.message());
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Flat CMC proper-biharmonic immersions into spheres", "cmcflat"};
  app.require_subcommand(1);
  // "--h" is the mean-curvature flag, so help is long-form only.
  app.set_help_flag("--help", "Print this help message and exit");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build MiyataData for a family member, a preset, or an extension");
  construct->add_option("--h", ca.h, "mean curvature h in (0,1)");
  construct->add_option("--rho", ca.rho, "rho in [0, (1/2)arccos((h-1)/(1+h))]");
  construct->add_option("--preset", ca.preset, "named example (sasahara)");
  construct->add_option("--extend", ca.extend, "MiyataData file to raise in dimension");
  construct->add_option("--out", ca.out, "output file (default: stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run the geometric invariant suite");
  verify->add_option("--params", va.params, "MiyataData file")->required();
  verify->add_option("--samples", va.samples, "number of random sample points");
  verify->add_option("--seed", va.seed, "seed for the sample points");
  verify->add_option("--out", va.out, "report file (default: stdout)");

  LatticeArgs la;
  auto* lattice = app.add_subcommand("lattice", "Period lattice of an immersion or of a torus family");
  lattice->add_option("--params", la.params, "MiyataData file (m = 1, mu_1 = 1)");
  lattice->add_option("--a", la.a, "a = p^2/q^2 (exact)");
  lattice->add_option("--b", la.b, "b = r^2/t^2 (exact)");
  lattice->add_option("--q", la.q, "rational q > 1 (exact)");
  lattice->add_option("--bound", la.bound, "search radius for --params");
  lattice->add_option("--out", la.out, "output file (default: stdout)");

  std::string te_h, te_out;
  long long te_bound = 20;
  auto* torus = app.add_subcommand("torus-exists", "Decide whether a torus with mean curvature h exists in S^5");
  torus->add_option("--h", te_h, "h in (0,1) as n/d")->required();
  torus->add_option("--bound", te_bound, "bound on p, q, r, t");
  torus->add_option("--out", te_out, "output file (default: stdout)");

  std::string ad_lattice, ad_h, ad_out;
  auto* adm = app.add_subcommand("admissible", "Decide admissibility of a flat torus for mean curvature h");
  adm->add_option("--lattice", ad_lattice, "lattice JSON with exact generator expressions")->required();
  adm->add_option("--h", ad_h, "h in (0,1) as n/d")->required();
  adm->add_option("--out", ad_out, "output file (default: stdout)");

  ExportArgs ea;
  auto* exp = app.add_subcommand("export", "Sample an immersion to CSV/OBJ and its fundamental domain");
  exp->add_option("--params", ea.params, "MiyataData file")->required();
  exp->add_option("--grid", ea.grid, "nx ny")->expected(2)->required();
  exp->add_option("--range", ea.range, "x0 x1 y0 y1")->expected(4);
  exp->add_option("--projection", ea.projection, "coords or pca3");
  exp->add_option("--seed", ea.seed, "seed for the PCA sample");
  exp->add_option("--out", ea.out, "output path prefix")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(ca, out, err);
    if (*verify) return cmd_verify(va, out, err);
    if (*lattice) return cmd_lattice(la, out);
    if (*torus) return cmd_torus_exists(te_h, te_bound, te_out, out);
    if (*adm) return cmd_admissible(ad_lattice, ad_h, ad_out, out);
    if (*exp) return cmd_export(ea, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cmcflat::cli
