#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "adjspec/dgraph_io.hpp"
#include "adjspec/errors.hpp"
#include "adjspec/families.hpp"
#include "adjspec/kernel.hpp"
#include "adjspec/numeric.hpp"
#include "adjspec/operators.hpp"
#include "adjspec/report.hpp"
#include "adjspec/structure.hpp"

namespace adjspec::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.3.0";

struct Options {
  std::string input;
  std::string family;
  std::string out;
  std::string format = "json";
  std::optional<unsigned> interior;
  bool timings = false;

  unsigned dim = 1;
  unsigned width = 4;
  unsigned base_width = 4;
  unsigned base_dim = 1;
  unsigned n = 2;
  std::string factors = "lattice:1:4,lattice:1:4";
  std::string d = "10,01";
  std::string coeffs;

  std::string checks = "admissible,adapted,identities";
  std::string mode = "structural";
  std::optional<unsigned> margin;
  std::string symmetry;
  std::string op = "H";
  std::string kind = "compact";
  std::string sizes = "4,5,6,7,8";
  std::string lambdas = "0";
  std::string mus = "1,0.5,0.25";
};

struct Loaded {
  Window window;
  std::optional<ScalarFunction> phi;
  std::string phi_source;
  std::optional<Family> family;
  std::vector<Family> factors;
  json descriptor;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

unsigned parse_unsigned(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(text, &used);
    if (used == text.size()) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  throw Error(Errc::BadParams, "bad " + what + ": " + text);
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(Errc::BadParams, "bad " + what + ": " + text);
}

std::string normalize(std::string name) {
  std::string out;
  for (char c : name) {
    if (c == '-' || c == '_') continue;
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

Family make_simple(const std::string& name, unsigned dim, unsigned width) {
  const std::string key = normalize(name);
  if (key == "lattice") return gen_lattice(dim, width);
  if (key == "halfplane") return gen_half_plane(width);
  if (key == "ladderrungs") return gen_ladder_rungs(width);
  if (key == "ladderalt") return gen_ladder_alt(width);
  throw Error(Errc::BadParams, "unknown family " + name);
}

// Factors: "lattice:DIM:W" or "NAME:W".
Family make_factor(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.empty()) throw Error(Errc::BadParams, "empty factor");
  if (normalize(parts[0]) == "lattice") {
    if (parts.size() != 3) throw Error(Errc::BadParams, "lattice factor is lattice:DIM:W, got " + text);
    return gen_lattice(parse_unsigned(parts[1], "factor dimension"), parse_unsigned(parts[2], "factor width"));
  }
  if (parts.size() != 2) throw Error(Errc::BadParams, "factor is NAME:W, got " + text);
  return make_simple(parts[0], 1, parse_unsigned(parts[1], "factor width"));
}

// size overrides the window parameter (width, or base width for Fock layers).
Family make_family(const Options& o, std::vector<Family>* factors_out, std::optional<unsigned> size = std::nullopt) {
  const std::string key = normalize(o.family);
  if (key == "fock" || key == "focklayer") {
    const Family base = gen_lattice(o.base_dim, size.value_or(o.base_width));
    return gen_fock_layer(base, o.n, max_vertices_from_env());
  }
  if (key == "dproduct") {
    std::vector<Family> factors;
    for (const auto& item : split(o.factors, ',')) factors.push_back(make_factor(item));
    std::vector<std::vector<int>> d;
    for (const auto& t : split(o.d, ',')) {
      std::vector<int> tuple;
      for (char c : t) {
        if (c != '0' && c != '1') throw Error(Errc::BadD, "D tuples are strings of 0 and 1, got " + t);
        tuple.push_back(c - '0');
      }
      d.push_back(std::move(tuple));
    }
    std::vector<Rational> c;
    if (o.coeffs.empty()) {
      c.assign(factors.size(), Rational(1));
    } else {
      for (const auto& q : split(o.coeffs, ',')) c.push_back(parse_rational(q));
    }
    Family f = d_product(factors, d, c);
    if (factors_out) *factors_out = std::move(factors);
    return f;
  }
  return make_simple(o.family, o.dim, size.value_or(o.width));
}

Loaded load(const Options& o) {
  if (o.input.empty() == o.family.empty()) throw Error(Errc::BadParams, "give exactly one of --input and --family");
  Loaded l;
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw Error(Errc::ParseError, "cannot read " + o.input);
    GraphFile file = read_dgraph(in);
    l.window = std::move(file.window);
    l.descriptor = {{"file", o.input}};
    if (file.phi) {
      l.phi = std::move(file.phi);
      l.phi_source = "input";
    }
  } else {
    Family f = make_family(o, &l.factors);
    l.window = f.window;
    l.phi = f.phi;
    l.phi_source = "family";
    l.descriptor = {{"family", f.descriptor()}};
    l.family = std::move(f);
  }
  if (o.interior) l.window.interior_radius = *o.interior;
  const DirectedGraph& g = l.window.graph;
  l.descriptor["vertices"] = g.size();
  l.descriptor["arcs"] = g.arc_count();
  l.descriptor["boundary_vertices"] = g.boundary().size();
  l.descriptor["max_degree"] = g.max_degree();
  l.descriptor["oriented"] = l.window.oriented;
  return l;
}

// Φ from the input, or a synthesized position function when the graph is
// univoque. nullopt otherwise.
const ScalarFunction* ensure_phi(Loaded& l) {
  if (!l.phi && l.window.oriented && !l.window.graph.empty()) {
    UnivocityResult u = synthesize_position_function(l.window);
    if (u.univoque) {
      l.phi = std::move(u.phi);
      l.phi_source = "synthesized";
    }
  }
  return l.phi ? &*l.phi : nullptr;
}

unsigned radius_for(const Options& o, unsigned fallback) { return std::max(fallback, o.interior.value_or(0)); }

json admissible_section(const Options& o, const Loaded& l, bool& admissible) {
  if (!l.window.oriented) {
    Window w = l.window;
    w.interior_radius = radius_for(o, kUniformityRadius);
    const OrientationSearchResult r = check_admissible_any_orientation(w);
    admissible = r.admissible;
    json out = to_json(r);
    out["mode"] = "any_orientation";
    return out;
  }
  Window w = l.window;
  w.interior_radius = radius_for(o, kUniformityRadius);
  AdmissibilityResult r = check_admissible(w);
  admissible = r.admissible;
  json out = to_json(r);
  if (r.uniformity.witness && l.family) {
    if (auto canon = canonical_lattice_witness(*l.family, *r.uniformity.witness)) {
      json& wj = out["uniformity"]["witness"];
      wj["found_at"] = {{"x", wj["x"]}, {"y", wj["y"]}};
      wj["x"] = canon->x;
      wj["y"] = canon->y;
      wj["common_fathers"] = canon->common_fathers;
      wj["common_sons"] = canon->common_sons;
      // The normality defect of U sits at the same pair.
      if (l.window.oriented) {
        const DirectedGraph& g = l.window.graph;
        const SparseOperator u = assemble(g, OperatorKind::U);
        const SparseOperator us = u.adjoint();
        const std::size_t x = g.index_of(canon->x), y = g.index_of(canon->y);
        GaussianRational defect = (u * us).at(x, y) - (us * u).at(x, y);
        wj["normality_defect"] = complex_json(defect);
      }
    }
  }
  return out;
}

json kernel_section(const Loaded& l, const ScalarFunction* phi) {
  const DirectedGraph& g = l.window.graph;
  const KernelReport structural = structural_kernel_basis(l.window);
  json out = {{"structural", to_json(structural)}};
  // Every structural vector is annihilated by H, and by K for a position
  // function, on the constrained rows.
  const SparseOperator h = assemble(g, OperatorKind::H);
  std::optional<SparseOperator> k;
  if (phi && l.window.oriented && is_position_function(g, phi->values_on(g))) {
    k = assemble(g, OperatorKind::K, phi->values_on(g));
  }
  const auto rows = interior_indices(g, 1);
  std::optional<std::pair<std::size_t, std::string>> failure;
  for (std::size_t b = 0; b < structural.basis.size() && !failure; ++b) {
    std::vector<GaussianRational> f(structural.basis[b].begin(), structural.basis[b].end());
    const auto hf = h.apply(f);
    std::optional<std::vector<GaussianRational>> kf;
    if (k) kf = k->apply(f);
    for (std::size_t x : rows) {
      if (!hf[x].is_zero()) {
        failure.emplace(b, "H at " + g.id(x));
        break;
      }
      if (kf && !(*kf)[x].is_zero()) {
        failure.emplace(b, "K at " + g.id(x));
        break;
      }
    }
  }
  json containment = {{"pass", !failure}, {"operators", k ? json{"H", "K"} : json{"H"}}};
  if (failure) containment["witness"] = {{"basis_vector", failure->first}, {"nonzero", failure->second}};
  out["containment"] = std::move(containment);
  return out;
}

json spectrum_section(const Loaded& l) {
  const DirectedGraph& g = l.window.graph;
  const SparseOperator h = assemble(g, OperatorKind::H);
  const SpectrumResult s = spectrum(h);
  const double schur = schur_bound(h).get_d();
  json out = spectrum_summary_json(s);
  out["schur_bound"] = to_string(schur_bound(h));
  const double top = s.eigenvalues.empty()
                         ? 0.0
                         : std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
  json bound = {{"pass", top <= schur + kZeroTolerance}};
  if (!(top <= schur + kZeroTolerance)) bound["witness"] = {{"max_abs_eigenvalue", decimal(top)}};
  out["norm_bound"] = std::move(bound);

  const bool bipartite = l.window.oriented && synthesize_position_function(l.window).univoque;
  if (bipartite) {
    double worst = 0;
    const std::size_t n = s.eigenvalues.size();
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(s.eigenvalues[i] + s.eigenvalues[n - 1 - i]));
    const double tol = kZeroTolerance * std::max(1.0, schur);
    json sym = {{"pass", worst <= tol}, {"max_asymmetry", decimal(worst)}};
    if (worst > tol) sym["witness"] = {{"max_asymmetry", decimal(worst)}};
    out["symmetric_about_zero"] = std::move(sym);
  }
  return out;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw Error(Errc::ParseError, "cannot write " + o.out);
  file << text;
}

json header(const Loaded& l) {
  return {{"tool", {{"name", "adjspec"}, {"version", kVersion}}}, {"input", l.descriptor}};
}

int cmd_generate(const Options& o, std::ostream& out) {
  Loaded l = load(o);
  emit(o, write_dgraph(l.window, l.phi ? &*l.phi : nullptr), out);
  return kExitPass;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  Loaded l = load(o);
  const ScalarFunction* phi = ensure_phi(l);
  const DirectedGraph& g = l.window.graph;

  const std::vector<std::string> known = {"admissible", "adapted", "identities", "kernel", "spectrum", "tensor"};
  const auto requested = split(o.checks, ',');
  for (const auto& c : requested) {
    if (std::find(known.begin(), known.end(), c) == known.end()) throw Error(Errc::BadParams, "unknown check " + c);
  }

  json report = header(l);
  report["input"]["phi_source"] = phi ? l.phi_source : "none";
  json checks = json::object();
  json timings = json::object();
  std::optional<bool> admissible;

  for (const auto& name : requested) {
    const auto start = clock::now();
    if (name == "admissible") {
      bool ok = false;
      checks[name] = admissible_section(o, l, ok);
      admissible = ok;
    } else if (name == "adapted") {
      if (!phi) {
        checks[name] = {{"skipped", "no Phi given and the graph admits no position function"}};
      } else {
        checks[name] = to_json(verify_adapted(g, *phi, radius_for(o, kAdaptedRadius)));
      }
    } else if (name == "identities") {
      if (!phi) {
        checks[name] = {{"skipped", "no Phi given and the graph admits no position function"}};
      } else {
        try {
          checks[name] = to_json(verify_identities(l.window, *phi));
        } catch (const Error& e) {
          if (e.code() != Errc::NotSemiAdapted) throw;
          checks[name] = {{"error", std::string(to_string(e.code()))}, {"witness", {{"message", e.what()}}}};
        }
      }
    } else if (name == "kernel") {
      checks[name] = kernel_section(l, phi);
    } else if (name == "spectrum") {
      checks[name] = spectrum_section(l);
    } else if (name == "tensor") {
      if (!l.family || l.factors.empty()) {
        checks[name] = {{"skipped", "only D-products have a tensor assembly"}};
      } else {
        checks[name] = to_json(tensor_assembly_check(*l.family, l.factors));
      }
    }
    timings[name] = std::chrono::duration<double, std::milli>(clock::now() - start).count();
  }

  if (admissible) report["admissible"] = *admissible;
  report["checks"] = std::move(checks);
  const bool pass = !has_witness(report["checks"]);
  report["pass"] = pass;
  if (o.timings) report["timings_ms"] = std::move(timings);
  emit(o, report.dump(2) + "\n", out);
  return pass ? kExitPass : kExitCheckFailed;
}

int cmd_kernel(const Options& o, std::ostream& out) {
  Loaded l = load(o);
  const ScalarFunction* phi = ensure_phi(l);
  json report = header(l);
  json kernels = json::array();
  const std::vector<std::string> modes =
      o.mode == "all" ? std::vector<std::string>{"structural", "numericH", "numericK"} : split(o.mode, ',');
  for (const auto& mode : modes) {
    if (mode == "structural") {
      kernels.push_back(to_json(structural_kernel_basis(l.window, o.margin)));
    } else if (mode == "numericH") {
      kernels.push_back(to_json(ker_H_basis(l.window, o.margin)));
    } else if (mode == "numericK") {
      if (!phi) throw Error(Errc::MissingPhi, "numericK needs Phi");
      kernels.push_back(to_json(ker_K_basis(l.window, *phi, o.margin)));
    } else {
      throw Error(Errc::BadParams, "unknown kernel mode " + mode);
    }
  }
  report["kernels"] = std::move(kernels);
  if (!o.symmetry.empty()) {
    if (o.symmetry != "flip" || !l.family) throw Error(Errc::BadParams, "--symmetry flip needs a ladder family");
    const auto tau = vertical_flip(*l.family);
    report["symmetry"] = to_json(symmetry_kernel_check(l.window, tau), l.window.graph);
  }
  emit(o, report.dump(2) + "\n", out);
  return kExitPass;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  Loaded l = load(o);
  const DirectedGraph& g = l.window.graph;
  SparseOperator op;
  const std::string which = o.op;
  if (which == "H") {
    op = assemble(g, OperatorKind::H);
  } else if (which == "xy") {
    op = GaussianRational(-2) * assemble(g, OperatorKind::H);
    op.set_symmetry(Symmetry::Hermitian);
  } else {
    const ScalarFunction* phi = ensure_phi(l);
    if (!phi) throw Error(Errc::MissingPhi, "operator " + which + " needs Phi");
    const auto values = phi->values_on(g);
    if (which == "K") {
      op = assemble(g, OperatorKind::K, values);
    } else if (which == "L") {
      op = assemble(g, OperatorKind::L, values);
    } else if (which == "A") {
      op = assemble(g, OperatorKind::A, values);
    } else if (which == "A'") {
      op = assemble(g, OperatorKind::APrime, values);
    } else {
      throw Error(Errc::BadParams, "unknown operator " + which);
    }
  }
  const SpectrumResult s = spectrum(op);
  if (o.format == "csv") {
    emit(o, spectrum_csv(s), out);
    return kExitPass;
  }
  json report = header(l);
  report["operator"] = which;
  json summary = spectrum_summary_json(s);
  summary["schur_bound"] = to_string(schur_bound(op));
  json values = json::array();
  for (double v : s.eigenvalues) values.push_back(decimal(v));
  summary["eigenvalues"] = std::move(values);
  report["spectrum"] = std::move(summary);
  emit(o, report.dump(2) + "\n", out);
  return kExitPass;
}

int cmd_probe(const Options& o, std::ostream& out) {
  if (o.kind == "compact") {
    if (o.family.empty()) throw Error(Errc::BadParams, "the compact probe needs --family");
    std::vector<unsigned> sizes;
    for (const auto& s : split(o.sizes, ',')) sizes.push_back(parse_unsigned(s, "window size"));
    const unsigned margin = o.margin.value_or(1);
    auto generate = [&](unsigned size) { return make_family(o, nullptr, size).window; };
    const CompactProbeResult r = compact_support_probe(generate, sizes, margin);
    json report = {{"tool", {{"name", "adjspec"}, {"version", kVersion}}},
                   {"input", {{"family", make_family(o, nullptr, sizes.empty() ? o.width : sizes.front()).name}}},
                   {"probe", to_json(r)}};
    emit(o, report.dump(2) + "\n", out);
    return kExitPass;
  }
  if (o.kind != "resolvent") throw Error(Errc::BadParams, "unknown probe kind " + o.kind);

  Loaded l = load(o);
  const ScalarFunction* phi = ensure_phi(l);
  if (!phi) throw Error(Errc::MissingPhi, "the resolvent probe needs Phi");
  const DirectedGraph& g = l.window.graph;
  const auto values = phi->values_on(g);
  const SparseOperator h = assemble(g, OperatorKind::H);
  const SparseOperator k = assemble(g, OperatorKind::K, values);
  const auto inner = interior_indices(g, 1);
  const std::size_t x0 = inner.empty() ? 0 : inner[inner.size() / 2];
  std::vector<GaussianRational> delta(g.size());
  delta[x0] = 1;
  const std::vector<GaussianRational> f = k.apply(delta);
  std::vector<double> lambdas, mus;
  for (const auto& s : split(o.lambdas, ',')) lambdas.push_back(parse_double(s, "lambda"));
  for (const auto& s : split(o.mus, ',')) mus.push_back(parse_double(s, "mu"));
  const auto samples = resolvent_probe(h, f, lambdas, mus, &k, values);

  json report = header(l);
  json list = json::array();
  for (const auto& s : samples) {
    json item = {{"lambda", decimal(s.lambda)},
                 {"mu", decimal(s.mu)},
                 {"sign", s.sign},
                 {"value", {{"re", decimal(s.value.real())}, {"im", decimal(s.value.imag())}}},
                 {"abs", decimal(std::abs(s.value))}};
    if (s.f_norm) item["f_norm"] = decimal(*s.f_norm);
    if (s.ratio) item["ratio"] = decimal(*s.ratio);
    list.push_back(std::move(item));
  }
  report["probe"] = {{"kind", "resolvent"}, {"f", "K delta at " + g.id(x0)}, {"samples", std::move(list)}};
  emit(o, report.dump(2) + "\n", out);
  return kExitPass;
}

void add_source_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--input", o.input, "dgraph-v1 file");
  cmd->add_option("--family", o.family,
                  "lattice | half-plane | ladder-rungs | ladder-alt | dproduct | fock (camelCase accepted)");
  cmd->add_option("--dim", o.dim, "lattice dimension")->capture_default_str();
  cmd->add_option("--width", o.width, "window half-width")->capture_default_str();
  cmd->add_option("--base-width", o.base_width, "Fock layer: base half-width")->capture_default_str();
  cmd->add_option("--base-dim", o.base_dim, "Fock layer: base lattice dimension")->capture_default_str();
  cmd->add_option("--n", o.n, "Fock layer: number of particles")->capture_default_str();
  cmd->add_option("--factors", o.factors, "D-product factors, e.g. lattice:1:4,ladder-alt:3")->capture_default_str();
  cmd->add_option("--d", o.d, "D set as 0/1 strings, e.g. 10,01")->capture_default_str();
  cmd->add_option("--coeffs", o.coeffs, "D-product coefficients c_j (default all 1)");
  cmd->add_option("--interior", o.interior, "lower bound on every interior radius");
  cmd->add_option("--out", o.out, "write the report here instead of stdout");
  cmd->add_option("--format", o.format, "json | csv (csv: spectrum only)")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Admissibility, adapted functions, operator identities and kernels of directed graphs", "adjspec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  auto* generate = app.add_subcommand("generate", "emit a family window as dgraph-v1");
  auto* analyze = app.add_subcommand("analyze", "run checks and write an analysis report");
  auto* kernel = app.add_subcommand("kernel", "structural and numeric kernels");
  auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues of an operator");
  auto* probe = app.add_subcommand("probe", "compact-support or resolvent probe");
  for (auto* cmd : {generate, analyze, kernel, spectrum_cmd, probe}) add_source_options(cmd, o);

  analyze->add_option("--checks", o.checks, "admissible,adapted,identities,kernel,spectrum,tensor")
      ->capture_default_str();
  analyze->add_flag("--timings", o.timings, "include wall-clock timings (makes reports run-dependent)");
  kernel->add_option("--mode", o.mode, "structural | numericH | numericK | all")->capture_default_str();
  kernel->add_option("--margin", o.margin, "restrict to vectors supported this far from the boundary");
  kernel->add_option("--symmetry", o.symmetry, "flip: compare with flip-antisymmetric vectors (ladders)");
  spectrum_cmd->add_option("--operator", o.op, "H | K | L | A | A' | xy")->capture_default_str();
  probe->add_option("--kind", o.kind, "compact | resolvent")->capture_default_str();
  probe->add_option("--sizes", o.sizes, "window sizes for the compact probe")->capture_default_str();
  probe->add_option("--margin", o.margin, "support margin for the compact probe (default 1)");
  probe->add_option("--lambda", o.lambdas, "resolvent: lambda grid")->capture_default_str();
  probe->add_option("--mu", o.mus, "resolvent: mu ladder")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (o.format == "csv" && !spectrum_cmd->parsed()) throw Error(Errc::BadParams, "csv output is for spectrum only");
    if (generate->parsed()) return cmd_generate(o, out);
    if (analyze->parsed()) return cmd_analyze(o, out);
    if (kernel->parsed()) return cmd_kernel(o, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(o, out);
    if (probe->parsed()) return cmd_probe(o, out);
  } catch (const Error& e) {
    err << "adjspec: " << e.what() << "\n";
    return e.code() == Errc::ResourceCap ? kExitResourceCap : kExitUsage;
  } catch (const std::exception& e) {
    err << "adjspec: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace adjspec::cli
