#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlattice/agree.hpp"
#include "qlattice/analytic.hpp"
#include "qlattice/errors.hpp"
#include "qlattice/parallel.hpp"
#include "qlattice/tolerances.hpp"
#include "qlattice/units.hpp"

namespace qlattice::cli {

namespace {

constexpr std::size_t kMaxDivisorPairs = 400;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) s += ' ';
    s += args[i];
  }
  return s;
}

std::vector<std::string> split(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty()) out.push_back(token);
  }
  return out;
}

Index parse_index(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("not an integer: '" + s + "'");
  }
}

double parse_real(const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("not a number: '" + s + "'");
  }
}

/// Rejects pre-clamp values outside [0,1] by more than the tolerance, then clamps.
double checked_probability(double v, const std::string& label) {
  if (v < -tol::kProbabilityRange || v > 1.0 + tol::kProbabilityRange) {
    throw NumericError(label + " = " + fmt17(v) + " lies outside [0, 1]");
  }
  return std::clamp(v, 0.0, 1.0);
}

/// Sink for a command's primary output: the --out file when given, else stdout.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
      return;
    }
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw IoError("cannot open '" + path + "' for writing");
    stream_ = file_.get();
    path_ = path;
  }

  std::ostream& stream() { return *stream_; }

  void finish() {
    stream_->flush();
    if (!*stream_) throw IoError("write failed" + (path_.empty() ? "" : " for '" + path_ + "'"));
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
  std::string path_;
};

struct RunInfo {
  std::string invocation;
  std::uint64_t seed = 0;
};

void write_metadata(std::ostream& os, const RunInfo& info,
                    const std::vector<std::string>& extra = {}) {
  os << "# qlattice " << kVersion << "\n";
  os << "# invocation: " << info.invocation << "\n";
  os << "# seed: " << info.seed << "\n";
  os << "# tolerances: construction=" << fmt17(tol::kConstruction)
     << " cross_method=" << fmt17(tol::kCrossMethod)
     << " negative_clamp=" << fmt17(tol::kNegativeClamp)
     << " cli_residual=" << fmt17(tol::kCliResidual)
     << " probability_range=" << fmt17(tol::kProbabilityRange)
     << " quadrature=" << fmt17(tol::kQuadrature) << "\n";
  for (const auto& line : extra) os << "# " << line << "\n";
}

std::vector<Index> resolve_widths(Index d, const std::string& spec) {
  if (d < 1) throw UsageError("--d must be >= 1");
  if (spec.empty() || spec == "all-divisors") {
    auto all = divisors(d);
    if (all.size() * all.size() > kMaxDivisorPairs) {
      throw UsageError("all-divisors of d=" + std::to_string(d) + " gives " +
                       std::to_string(all.size() * all.size()) + " pairs (cap " +
                       std::to_string(kMaxDivisorPairs) + "); pass an explicit --widths list");
    }
    return all;
  }
  std::vector<Index> widths;
  for (const auto& token : split(spec)) {
    const Index w = parse_index(token);
    if (w < 1 || w > d || d % w != 0) {
      throw UsageError("width " + token + " does not divide d=" + std::to_string(d));
    }
    widths.push_back(w);
  }
  if (widths.empty()) throw UsageError("--widths is empty");
  std::sort(widths.begin(), widths.end());
  widths.erase(std::unique(widths.begin(), widths.end()), widths.end());
  return widths;
}

MethodSet resolve_methods(const std::string& spec) {
  try {
    return parse_methods(spec);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

LatticeConfig make_config(Index d, Index w_x, Index w_p) {
  try {
    return {d, w_x, w_p};
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

// ---------------------------------------------------------------------------

struct AgreeArgs {
  Index d = 0;
  Index w_x = 0;
  Index w_p = 0;
  std::string methods = "closed";
  std::string out;
};

int cmd_agree(const AgreeArgs& a, const RunInfo& info, std::ostream& out, std::ostream& err) {
  const LatticeConfig config = make_config(a.d, a.w_x, a.w_p);
  const MethodSet methods = resolve_methods(a.methods);
  const AgreeResult r = evaluate_agree(config, methods);

  nlohmann::ordered_json doc;
  doc["version"] = kVersion;
  doc["invocation"] = info.invocation;
  doc["d"] = config.d();
  doc["w_x"] = config.w_x();
  doc["w_p"] = config.w_p();

  out << "d=" << config.d() << " w_x=" << config.w_x() << " w_p=" << config.w_p() << "\n";
  for (const auto& v : labelled_values(r, methods)) {
    const double value = v.is_probability ? checked_probability(v.value, v.label) : v.value;
    out << v.label << "=" << fmt17(value) << "\n";
    doc["values"][v.label] = value;
  }
  if (methods.contains(Method::bounds) && config.w_x() != config.w_p()) {
    out << "bounds=not-applicable (w_x != w_p)\n";
  }
  if (const auto res = r.brute_residual()) {
    out << "residual_brute=" << fmt17(*res) << "\n";
    doc["residuals"]["brute"] = *res;
  }
  if (const auto res = r.gram_residual()) {
    out << "residual_gram=" << fmt17(*res) << "\n";
    doc["residuals"]["gram"] = *res;
  }
  const bool ok = r.max_residual() <= tol::kCliResidual;
  doc["ok"] = ok;

  if (!a.out.empty()) {
    Sink sink(a.out, out);
    sink.stream() << doc.dump(2) << "\n";
    sink.finish();
  }
  if (!ok) {
    err << "cross-method residual " << fmt17(r.max_residual()) << " exceeds "
        << fmt17(tol::kCliResidual) << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct SweepArgs {
  Index d = 0;
  std::string widths = "all-divisors";
  std::string methods = "closed";
  std::string out;
};

int cmd_sweep(const SweepArgs& a, const RunInfo& info, std::ostream& out) {
  const std::vector<Index> widths = resolve_widths(a.d, a.widths);
  const MethodSet methods = resolve_methods(a.methods);
  if (methods.contains(Method::brute) && a.d > kBruteCap) {
    throw ResourceError("brute method limited to d <= " + std::to_string(kBruteCap));
  }

  struct Cell {
    Index w_x;
    Index w_p;
  };
  std::vector<Cell> cells;
  for (Index wx : widths) {
    for (Index wp : widths) cells.push_back({wx, wp});
  }

  std::vector<std::string> rows(cells.size());
  parallel_for(cells.size(), [&](std::size_t i) {
    const LatticeConfig config(a.d, cells[i].w_x, cells[i].w_p);
    const AgreeResult r = evaluate_agree(config, methods);
    std::string block;
    for (const auto& v : labelled_values(r, methods)) {
      const double value = v.is_probability ? checked_probability(v.value, v.label) : v.value;
      block += std::to_string(a.d) + "," + std::to_string(cells[i].w_x) + "," +
               std::to_string(cells[i].w_p) + "," + v.label + "," + fmt17(value) + "\n";
    }
    rows[i] = std::move(block);
  });

  Sink sink(a.out, out);
  write_metadata(sink.stream(), info);
  sink.stream() << "d,w_x,w_p,method,value\n";
  for (const auto& block : rows) sink.stream() << block;
  sink.finish();
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct CurveArgs {
  Index w_p_max = 16;
  std::string d_list;
  std::string out;
};

int cmd_curve(const CurveArgs& a, const RunInfo& info, std::ostream& out) {
  if (a.w_p_max < 1) throw UsageError("--wp must be >= 1");
  std::vector<Index> lattices;
  for (const auto& token : split(a.d_list)) {
    const Index d = parse_index(token);
    if (d < 1) throw UsageError("--d entries must be >= 1");
    lattices.push_back(d);
  }

  std::vector<std::string> extra;
  if (!lattices.empty()) {
    extra.emplace_back("closed_d<d> columns: exact average at w_x = d / w_p (blank when w_p does not divide d)");
  }

  Sink sink(a.out, out);
  write_metadata(sink.stream(), info, extra);
  auto& os = sink.stream();
  os << "w_p,curve_value";
  for (Index d : lattices) os << ",closed_d" << d;
  os << "\n";
  for (Index wp = 1; wp <= a.w_p_max; ++wp) {
    os << wp << "," << fmt17(checked_probability(curve_value(wp).value, "curve_value"));
    for (Index d : lattices) {
      os << ",";
      if (wp <= d && d % wp == 0) {
        os << fmt17(checked_probability(closed_form(d, d / wp, wp), "closed"));
      }
    }
    os << "\n";
  }
  os << "inf," << fmt17(checked_probability(curve_limit_integral(), "curve_limit"));
  for (std::size_t i = 0; i < lattices.size(); ++i) os << ",";
  os << "\n";
  sink.finish();
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct PerturbArgs {
  Index d = 10000;
  std::string ratios = "1,2,3,4";
  std::string out;
};

Index nearest_divisor(Index d, double target) {
  Index best = 1;
  double best_gap = std::abs(target - 1.0);
  for (Index w : divisors(d)) {
    const double gap = std::abs(target - static_cast<double>(w));
    if (gap < best_gap) {
      best = w;
      best_gap = gap;
    }
  }
  return best;
}

int cmd_perturb(const PerturbArgs& a, const RunInfo& info, std::ostream& out) {
  if (a.d < 1) throw UsageError("--d must be >= 1");
  std::vector<double> ratios;
  for (const auto& token : split(a.ratios)) {
    const double r = parse_real(token);
    if (!(r > 0.0)) throw UsageError("--ratios entries must be > 0");
    ratios.push_back(r);
  }
  if (ratios.empty()) throw UsageError("--ratios is empty");

  const double root = std::sqrt(static_cast<double>(a.d));
  std::vector<std::string> extra;
  std::vector<Index> momentum_widths;
  for (double r : ratios) {
    const double target = r * root;
    const Index wp = nearest_divisor(a.d, target);
    const bool exact = static_cast<double>(wp) == target;
    extra.push_back("ratio " + fmt17(r) + ": w_p=" + std::to_string(wp) +
                    (exact ? " (exact)" : " (nearest divisor of target " + fmt17(target) + ")"));
    momentum_widths.push_back(wp);
  }
  extra.emplace_back("pert_integral is the integral approximation; rel_err = |integral - exact| / exact, nan where exact = 0");

  const std::vector<Index> position_widths = divisors(a.d);
  Sink sink(a.out, out);
  write_metadata(sink.stream(), info, extra);
  auto& os = sink.stream();
  os << "d,w_x,w_p,pert_exact,pert_integral,rel_err\n";
  for (Index wp : momentum_widths) {
    for (Index wx : position_widths) {
      const double exact = perturbation_exact(a.d, wx, wp);
      const double integral = perturbation_integral(a.d, wx, wp);
      const double rel = exact == 0.0 ? std::nan("") : std::abs(integral - exact) / exact;
      os << a.d << "," << wx << "," << wp << "," << fmt17(exact) << "," << fmt17(integral) << ","
         << fmt17(rel) << "\n";
    }
  }
  sink.finish();
  return kExitOk;
}

// ---------------------------------------------------------------------------

struct BoundsArgs {
  Index d = 0;
  std::string widths;
  std::string out;
};

int cmd_bounds(const BoundsArgs& a, const RunInfo& info, std::ostream& out) {
  if (a.d < 1) throw UsageError("--d must be >= 1");
  std::vector<Index> widths;
  if (a.widths.empty() || a.widths == "all-divisors") {
    widths = divisors(a.d);
  } else {
    widths = resolve_widths(a.d, a.widths);
  }

  std::vector<std::string> rows(widths.size());
  bool all_hold = true;
  std::vector<char> holds(widths.size(), 1);
  parallel_for(widths.size(), [&](std::size_t i) {
    const Index w = widths[i];
    const double closed = checked_probability(closed_form(a.d, w, w), "closed");
    const BoundPair b = bounds(a.d, w);
    bool ok = true;
    if (b.upper) ok = ok && closed <= *b.upper + tol::kConstruction;
    if (b.lower) ok = ok && closed >= *b.lower - tol::kConstruction;
    holds[i] = ok ? 1 : 0;
    rows[i] = std::to_string(a.d) + "," + std::to_string(w) + "," + fmt17(closed) + "," +
              (b.upper ? fmt17(*b.upper) : "") + "," + (b.lower ? fmt17(*b.lower) : "") + "," +
              (ok ? "1" : "0") + "\n";
  });
  for (char h : holds) all_hold = all_hold && h;

  Sink sink(a.out, out);
  write_metadata(sink.stream(), info, {"diagonal w_x = w_p = w; blank bound = outside its validity domain"});
  sink.stream() << "d,w,closed,upper_bound,lower_bound,holds\n";
  for (const auto& row : rows) sink.stream() << row;
  sink.finish();
  return all_hold ? kExitOk : kExitNumeric;
}

// ---------------------------------------------------------------------------

struct UnitsArgs {
  double hbar = 1.0 / (2.0 * std::numbers::pi);
  double length = 1.0;
  std::string d = "1";
  double w_x = 1.0;
  double w_p = 1.0;
  std::string out;
};

int cmd_units(const UnitsArgs& a, const RunInfo& info, std::ostream& out) {
  const double d = parse_real(a.d);
  if (!(a.hbar > 0.0) || !(a.length > 0.0) || !(d >= 1.0) || !(a.w_x >= 1.0) ||
      !(a.w_p >= 1.0)) {
    throw UsageError("--hbar and --length must be > 0; --d, --wx, --wp must be >= 1");
  }
  PhysicalUnits u{};
  CoarseCell cell{};
  try {
    u = derive_units(a.hbar, a.length, d);
    cell = coarse_to_units(u, a.w_x, a.w_p);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  const double planck_cell = 2.0 * std::numbers::pi * a.hbar;

  out << "delta_x=" << fmt17(u.delta_x) << "\n"
      << "delta_p=" << fmt17(u.delta_p) << "\n"
      << "Delta_x=" << fmt17(cell.delta_X) << "\n"
      << "Delta_p=" << fmt17(cell.delta_P) << "\n"
      << "phase_cell_over_2pi_hbar=" << fmt17(cell.phase_cell / planck_cell) << "\n"
      << "l_u=" << fmt17(u.l_u) << "\n"
      << "log10_l_u=" << fmt17(std::log10(u.l_u)) << "\n";
  if (!u.d_is_exact()) out << "note: d is not exactly representable as an integer (> 2^53)\n";

  if (!a.out.empty()) {
    nlohmann::ordered_json doc;
    doc["version"] = kVersion;
    doc["invocation"] = info.invocation;
    doc["hbar"] = u.hbar;
    doc["length"] = u.length;
    doc["d"] = u.d;
    doc["d_exact"] = u.d_is_exact();
    doc["delta_x"] = u.delta_x;
    doc["delta_p"] = u.delta_p;
    doc["Delta_x"] = cell.delta_X;
    doc["Delta_p"] = cell.delta_P;
    doc["phase_cell_over_2pi_hbar"] = cell.phase_cell / planck_cell;
    doc["l_u"] = u.l_u;
    Sink sink(a.out, out);
    sink.stream() << doc.dump(2) << "\n";
    sink.finish();
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coarse-grained position-momentum-position measurements on a periodic lattice",
               "qlattice"};
  app.set_version_flag("--version", std::string("qlattice ") + kVersion);
  app.require_subcommand(1);
  RunInfo info{join_args(args), 0};

  AgreeArgs agree;
  auto* agree_cmd = app.add_subcommand("agree", "Evaluate <p_agree> for one (d, w_x, w_p)");
  agree_cmd->add_option("--d", agree.d, "Lattice dimension")->required();
  agree_cmd->add_option("--wx", agree.w_x, "Position coarse-graining width")->required();
  agree_cmd->add_option("--wp", agree.w_p, "Momentum coarse-graining width")->required();
  agree_cmd->add_option("--methods", agree.methods,
                        "Comma list of brute,bounds,closed,continuum,gram,perturbation");
  agree_cmd->add_option("--out", agree.out, "Write a JSON record to this path");
  agree_cmd->add_option("--seed", info.seed, "Recorded in metadata");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "CSV over a (w_x, w_p) grid");
  sweep_cmd->add_option("--d", sweep.d, "Lattice dimension")->required();
  sweep_cmd->add_option("--widths", sweep.widths, "Comma list of widths or all-divisors");
  sweep_cmd->add_option("--methods", sweep.methods, "Comma list of methods");
  sweep_cmd->add_option("--out", sweep.out, "Output CSV path (stdout if omitted)");
  sweep_cmd->add_option("--seed", info.seed, "Recorded in metadata");

  CurveArgs curve;
  auto* curve_cmd = app.add_subcommand("curve", "Curve values on w_x w_p = d and their limit");
  curve_cmd->add_option("--wp", curve.w_p_max, "Largest w_p to tabulate");
  curve_cmd->add_option("--d", curve.d_list, "Optional comma list of d for exact columns");
  curve_cmd->add_option("--out", curve.out, "Output CSV path (stdout if omitted)");
  curve_cmd->add_option("--seed", info.seed, "Recorded in metadata");

  PerturbArgs perturb;
  auto* perturb_cmd = app.add_subcommand("perturb", "Perturbation profiles at w_p = ratio * sqrt(d)");
  perturb_cmd->add_option("--d", perturb.d, "Lattice dimension");
  perturb_cmd->add_option("--ratios", perturb.ratios, "Comma list of w_p / sqrt(d)");
  perturb_cmd->add_option("--out", perturb.out, "Output CSV path (stdout if omitted)");
  perturb_cmd->add_option("--seed", info.seed, "Recorded in metadata");

  BoundsArgs bounds_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "Diagonal closed form against its bounds");
  bounds_cmd->add_option("--d", bounds_args.d, "Lattice dimension")->required();
  bounds_cmd->add_option("--widths", bounds_args.widths, "Comma list of widths or all-divisors");
  bounds_cmd->add_option("--out", bounds_args.out, "Output CSV path (stdout if omitted)");
  bounds_cmd->add_option("--seed", info.seed, "Recorded in metadata");

  UnitsArgs units;
  auto* units_cmd = app.add_subcommand("units", "Physical-unit report for a lattice");
  units_cmd->add_option("--hbar", units.hbar, "Reduced Planck constant (default 1/(2 pi))");
  units_cmd->add_option("--length", units.length, "Total length L");
  units_cmd->add_option("--d", units.d, "Lattice dimension (real, may exceed 2^53)");
  units_cmd->add_option("--wx", units.w_x, "Position coarse-graining width");
  units_cmd->add_option("--wp", units.w_p, "Momentum coarse-graining width");
  units_cmd->add_option("--out", units.out, "Write a JSON record to this path");

  try {
    // CLI11 consumes arguments in reverse order, without the program name.
    std::vector<std::string> rev(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(rev.begin(), rev.end());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*agree_cmd) return cmd_agree(agree, info, out, err);
    if (*sweep_cmd) return cmd_sweep(sweep, info, out);
    if (*curve_cmd) return cmd_curve(curve, info, out);
    if (*perturb_cmd) return cmd_perturb(perturb, info, out);
    if (*bounds_cmd) return cmd_bounds(bounds_args, info, out);
    if (*units_cmd) return cmd_units(units, info, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitUsage;
}

}  // namespace qlattice::cli
