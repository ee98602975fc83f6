#include "unigate/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <ios>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "unigate/canonical.hpp"
#include "unigate/channels.hpp"
#include "unigate/config.hpp"
#include "unigate/ensembles.hpp"
#include "unigate/errors.hpp"
#include "unigate/gates.hpp"
#include "unigate/matrix_io.hpp"
#include "unigate/schmidt.hpp"
#include "unigate/stats.hpp"

namespace unigate {

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

// Options shared by every command.
struct Common {
  std::size_t threads = 1;
  bool deterministic = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--threads", c.threads, "Worker threads; never changes the output")->check(CLI::PositiveNumber);
  cmd->add_flag("--deterministic", c.deterministic, "Omit timestamps from outputs");
}

// Rounding residue below 1e-14 prints as 0; JSON outputs keep raw values.
std::string fmt(double x) {
  if (std::abs(x) < 1e-14) x = 0.0;
  std::ostringstream os;
  os << std::setprecision(12) << x;
  return os.str();
}

template <typename Range>
std::string fmt_list(const Range& xs) {
  std::string s;
  for (const auto& x : xs) {
    if (!s.empty()) s += ',';
    s += fmt(static_cast<double>(x));
  }
  return s;
}

std::string utc_timestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) parts.push_back(part);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_real(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size() && std::isfinite(v)) return v;
  } catch (const std::exception&) {
  }
  throw ParseError("bad number '" + text + "' in " + what);
}

std::size_t parse_size(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used == text.size() && v >= 0) return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
  }
  throw ParseError("bad integer '" + text + "' in " + what);
}

std::vector<double> parse_reals(const std::string& text, const std::string& what) {
  std::vector<double> xs;
  for (const auto& p : split(text, ',')) xs.push_back(parse_real(p, what));
  if (xs.empty()) throw ParseError(what + " is empty");
  return xs;
}

// "2..5" or "2,3,5".
std::vector<std::size_t> parse_sizes(const std::string& text, const std::string& what) {
  std::vector<std::size_t> xs;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const std::size_t lo = parse_size(text.substr(0, dots), what);
    const std::size_t hi = parse_size(text.substr(dots + 2), what);
    if (hi < lo) throw ParseError(what + ": empty range '" + text + "'");
    for (std::size_t n = lo; n <= hi; ++n) xs.push_back(n);
  } else {
    for (const auto& p : split(text, ',')) xs.push_back(parse_size(p, what));
  }
  if (xs.empty()) throw ParseError(what + " is empty");
  return xs;
}

Dims parse_dims(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw ParseError("--dims expects A,B");
  const Dims d{parse_size(parts[0], "--dims"), parse_size(parts[1], "--dims")};
  if (d.a == 0 || d.b == 0) throw ParseError("--dims must be positive");
  return d;
}

Dims square_split(std::size_t rows) {
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(rows))));
  if (n * n != rows) throw DimensionError("cannot infer dims of a " + std::to_string(rows) + "-row matrix; pass --dims");
  return {n, n};
}

void require_positive(std::size_t v, const char* flag) {
  if (v == 0) throw ParseError(std::string(flag) + " must be at least 1");
}

void write_json(const std::string& path, json j, const Common& c) {
  if (!c.deterministic) j["generated_at"] = utc_timestamp();
  write_text_file(path, j.dump(2) + "\n");
}

// Trailer for non-deterministic runs.
void finish(std::ostream& out, const Common& c, Clock::time_point start) {
  if (c.deterministic) return;
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  out << "timestamp=" << utc_timestamp() << "\n";
  out << "elapsed_ms=" << ms << "\n";
}

// analyze -------------------------------------------------------------------

struct AnalyzeArgs {
  std::string input, gate, dims, output, name;
};

int cmd_analyze(const AnalyzeArgs& a, const Common& c, std::ostream& out) {
  const auto start = Clock::now();
  Matrix u;
  std::optional<Dims> dims;
  std::string name = a.name;
  if (!a.input.empty()) {
    const ComplexMatrix m = read_matrix_file(a.input);
    u = m.values;
    dims = m.dims;
    if (name.empty()) name = a.input;
  } else {
    const GateId id = parse_gate_name(a.gate);
    u = build(id);
    dims = gate_dims(id);
    if (name.empty()) name = a.gate;
  }
  if (!a.dims.empty()) dims = parse_dims(a.dims);
  if (u.rows() != u.cols()) throw DimensionError("gate matrix is not square");
  if (!dims) dims = square_split(static_cast<std::size_t>(u.rows()));
  if (dims->total() != static_cast<std::size_t>(u.rows()))
    throw DimensionError("dims " + std::to_string(dims->a) + "," + std::to_string(dims->b) + " do not match a " +
                         std::to_string(u.rows()) + "-row matrix");

  const double residual = unitarity_residual(u);
  out << "name=" << name << "\n";
  out << "dims=" << dims->a << "," << dims->b << "\n";
  out << "unitarity_residual=" << fmt(residual) << "\n";
  if (residual >= Tolerances::kUnitarity) throw NotUnitaryError("gate is not unitary (residual " + fmt(residual) + ")");

  const GateReport r = analyze_gate(u, *dims, name);
  json j = to_json(r);

  json ch;
  if (dims->a == dims->b) {
    // For N = M the Choi eigenvalues are Lambda_k / N.
    const auto ev = hermitian_eigen(choi_from_unitary(u, *dims)).eigenvalues;
    ch["choi_eigenvalues"] = std::vector<double>(ev.data(), ev.data() + ev.size());
  }
  if (r.two_qubit) {
    const BlochMap bm = bloch_map(unistochastic_channel(u, *dims));
    const bool cp = is_cp(bm.eta);
    ch["eta"] = bm.eta.eta;
    ch["cp"] = cp;
    ch["unistochastic"] = cp && is_unistochastic(bm.eta).unistochastic;
  } else {
    j["warning"] = "two-qubit invariants need dims 2,2; report limited to Schmidt spectrum and entropies";
  }
  j["channel"] = ch;

  out << "Lambda=" << fmt_list(r.spectrum.coefficients) << "\n";
  out << "schmidt_rank=" << r.schmidt_rank << "\n";
  out << "S=" << fmt(r.entropy) << "\n";
  out << "S2=" << fmt(r.renyi2) << "\n";
  out << "S4=" << fmt(r.renyi4) << "\n";
  out << "purity=" << fmt(r.purity) << "\n";
  if (r.two_qubit) {
    out << "alpha=" << fmt_list(r.canonical.content.alpha) << "\n";
    out << "eta=" << fmt_list(r.eta.eta) << "\n";
    out << "pe_class=" << pe_code(r.pe.pe_class) << "\n";
    out << "hull_distance=" << fmt(r.pe.hull_distance) << "\n";
    out << "spe=" << (r.special_pe ? "yes" : "no") << "\n";
  } else {
    out << "warning=two-qubit invariants skipped\n";
  }
  if (!a.output.empty()) {
    write_json(a.output, j, c);
    out << "report=" << a.output << "\n";
  }
  finish(out, c, start);
  return kExitOk;
}

// table1 --------------------------------------------------------------------

int cmd_table1(const std::string& output, const Common& c, std::ostream& out) {
  const auto start = Clock::now();
  const auto rows = table1();
  json arr = json::array();
  std::vector<std::string> flagged;
  for (const auto& row : rows) {
    arr.push_back(to_json(row));
    const auto& r = row.report;
    out << row.gate << ".alpha=" << fmt_list(r.canonical.content.alpha) << "\n";
    out << row.gate << ".Lambda=" << fmt_list(r.spectrum.coefficients) << "\n";
    out << row.gate << ".eta=" << fmt_list(r.eta.eta) << "\n";
    out << row.gate << ".pe_class=" << pe_code(r.pe.pe_class) << "\n";
    out << row.gate << ".flagged=" << (row.note.empty() ? "no" : "yes") << "\n";
    if (!row.note.empty()) flagged.push_back(row.gate);
  }
  out << "rows=" << rows.size() << "\n";
  std::string f;
  for (const auto& g : flagged) f += (f.empty() ? "" : ",") + g;
  out << "flagged_rows=" << f << "\n";
  if (!output.empty()) {
    write_json(output, json{{"rows", arr}}, c);
    out << "report=" << output << "\n";
  }
  finish(out, c, start);
  return kExitOk;
}

// sample --------------------------------------------------------------------

struct SampleArgs {
  std::string ensemble = "cue";
  std::size_t dim = 4;
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_sample(const SampleArgs& a, const Common& c, std::ostream& out) {
  const auto start = Clock::now();
  require_positive(a.count, "--count");
  EnsembleSpec spec;
  spec.kind = parse_ensemble(a.ensemble);
  spec.dim = a.dim;
  spec.count = a.count;
  spec.seed = a.seed;
  const auto records = sample_records(spec, c.threads);
  write_text_file(a.output, records_to_csv(records));

  std::vector<double> r, s1, s2;
  for (const auto& rec : records) {
    r.push_back(rec.r);
    s1.push_back(rec.s1);
    s2.push_back(rec.s2);
  }
  const auto er = estimate(r), e1 = estimate(s1), e2 = estimate(s2);
  out << "ensemble=" << ensemble_name(spec.kind) << "\n";
  out << "dim=" << spec.dim << "\n";
  out << "rows=" << records.size() << "\n";
  out << "mean_r=" << fmt(er.mean) << "\n";
  out << "mean_r_std_error=" << fmt(er.std_error) << "\n";
  out << "mean_S1=" << fmt(e1.mean) << "\n";
  out << "mean_S1_std_error=" << fmt(e1.std_error) << "\n";
  out << "mean_S2=" << fmt(e2.mean) << "\n";
  out << "mean_S2_std_error=" << fmt(e2.std_error) << "\n";
  out << "csv=" << a.output << "\n";
  finish(out, c, start);
  return kExitOk;
}

// pe-volume -----------------------------------------------------------------

int cmd_pe_volume(std::size_t samples, std::uint64_t seed, const std::string& output, const Common& c,
                  std::ostream& out) {
  const auto start = Clock::now();
  require_positive(samples, "--samples");
  const PeFraction mc = mc_pe_fraction(samples, seed, c.threads);
  const Volumes v = integrate_volumes();
  const double exact = 8.0 / (3.0 * std::numbers::pi);
  out << "samples=" << samples << "\n";
  out << "mc_fraction=" << fmt(mc.fraction.mean) << "\n";
  out << "std_error=" << fmt(mc.fraction.std_error) << "\n";
  out << "boundary=" << mc.boundary << "\n";
  out << "interior=" << mc.interior << "\n";
  out << "quadrature_ratio=" << fmt(v.ratio) << "\n";
  out << "v_w=" << fmt(v.v_w) << "\n";
  out << "v_pe=" << fmt(v.v_pe) << "\n";
  out << "closed_form=" << fmt(exact) << "\n";
  if (!output.empty()) {
    std::ostringstream csv;
    csv << std::setprecision(17);
    csv << "quantity,value,std_error\n";
    csv << "mc_fraction," << mc.fraction.mean << "," << mc.fraction.std_error << "\n";
    csv << "quadrature_ratio," << v.ratio << ",\n";
    csv << "v_w," << v.v_w << ",\n";
    csv << "v_pe," << v.v_pe << ",\n";
    csv << "closed_form," << exact << ",\n";
    write_text_file(output, csv.str());
    out << "csv=" << output << "\n";
  }
  finish(out, c, start);
  return kExitOk;
}

// mean-entropy --------------------------------------------------------------

struct EntropyArgs {
  std::string n = "2..5";
  std::string q = "1,2,4,8";
  std::size_t samples = 20000;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_mean_entropy(const EntropyArgs& a, const Common& c, std::ostream& out) {
  const auto start = Clock::now();
  require_positive(a.samples, "--samples");
  const auto ns = parse_sizes(a.n, "--n");
  const auto qs = parse_reals(a.q, "--q");
  for (std::size_t n : ns)
    if (n < 2) throw ParseError("--n values must be at least 2");
  for (double q : qs)
    if (q <= 0.0) throw ParseError("--q values must be positive");

  std::ostringstream csv;
  csv << std::setprecision(17);
  csv << "N,q,mean,std_error,samples,asymptote,random_vector\n";
  for (std::size_t n : ns) {
    const auto est = mc_mean_entropies(n, qs, a.samples, a.seed, c.threads);
    const double ln_n = std::log(static_cast<double>(n));
    for (std::size_t k = 0; k < qs.size(); ++k) {
      const double q = qs[k];
      std::optional<double> asym;
      if (q == 1.0 || q == 2.0 || q == 4.0) asym = 2.0 * ln_n - entropy_offset(q);
      std::optional<double> rv;
      if (q == 1.0) rv = random_vector_mean_entropy(n);
      csv << n << "," << q << "," << est[k].mean << "," << est[k].std_error << "," << est[k].samples << ",";
      if (asym) csv << *asym;
      csv << ",";
      if (rv) csv << *rv;
      csv << "\n";
      const std::string key = "N" + std::to_string(n) + ".q" + fmt(q);
      out << key << ".mean=" << fmt(est[k].mean) << "\n";
      out << key << ".std_error=" << fmt(est[k].std_error) << "\n";
      if (asym) out << key << ".asymptote=" << fmt(*asym) << "\n";
    }
  }
  if (!a.output.empty()) {
    write_text_file(a.output, csv.str());
    out << "csv=" << a.output << "\n";
  }
  finish(out, c, start);
  return kExitOk;
}

// check-unistochastic -------------------------------------------------------

int cmd_check_unistochastic(const std::string& eta_text, const std::string& output, const Common& c,
                            std::ostream& out) {
  const auto start = Clock::now();
  const auto xs = parse_reals(eta_text, "--eta");
  if (xs.size() != 3) throw ParseError("--eta expects three numbers");
  const DampingVector eta{{xs[0], xs[1], xs[2]}};
  out << "eta=" << fmt_list(eta.eta) << "\n";
  if (!is_cp(eta)) {
    out << "cp=no\n";
    out << "verdict=not-CP\n";
    finish(out, c, start);
    return kExitOk;
  }
  const UnistochasticVerdict v = is_unistochastic(eta);
  out << "cp=yes\n";
  out << "unistochastic=" << (v.unistochastic ? "yes" : "no") << "\n";
  out << "verdict=" << (v.unistochastic ? "unistochastic" : "not-unistochastic") << "\n";
  if (v.witness) {
    const Vec3 alpha = alpha_from_eta(eta).alpha;
    out << "witness_alpha=" << fmt_list(alpha) << "\n";
    if (!output.empty()) {
      write_matrix_file(output, ComplexMatrix{*v.witness, Dims{2, 2}});
      out << "witness=" << output << "\n";
    }
  }
  finish(out, c, start);
  return kExitOk;
}

// channel-apply -------------------------------------------------------------

struct ApplyArgs {
  std::string input, state, dims, output;
};

int cmd_channel_apply(const ApplyArgs& a, const Common& c, std::ostream& out) {
  const auto start = Clock::now();
  const ComplexMatrix um = read_matrix_file(a.input);
  const ComplexMatrix rm = read_matrix_file(a.state);
  std::optional<Dims> dims = um.dims;
  if (!a.dims.empty()) dims = parse_dims(a.dims);
  if (um.values.rows() != um.values.cols()) throw DimensionError("gate matrix is not square");
  if (!dims) dims = square_split(static_cast<std::size_t>(um.values.rows()));
  if (dims->total() != static_cast<std::size_t>(um.values.rows()))
    throw DimensionError("dims do not match the gate matrix");
  const double residual = unitarity_residual(um.values);
  if (residual >= Tolerances::kUnitarity) {
    out << "unitarity_residual=" << fmt(residual) << "\n";
    throw NotUnitaryError("gate is not unitary (residual " + fmt(residual) + ")");
  }
  const Matrix rho = env_channel_apply(um.values, rm.values, *dims);
  const Channel ch = unistochastic_channel(um.values, *dims);
  const double choi_gap = (apply_choi(ch.choi, rm.values) - rho).norm();
  const double kraus_gap = (apply_kraus(ch.kraus, rm.values) - rho).norm();
  out << "dims=" << dims->a << "," << dims->b << "\n";
  out << "trace=" << fmt(rho.trace().real()) << "\n";
  out << "purity=" << fmt((rho * rho).trace().real()) << "\n";
  out << "kraus_operators=" << ch.kraus.size() << "\n";
  out << "choi_agreement=" << fmt(choi_gap) << "\n";
  out << "kraus_agreement=" << fmt(kraus_gap) << "\n";
  if (!a.output.empty()) {
    write_matrix_file(a.output, ComplexMatrix{rho, std::nullopt});
    out << "state=" << a.output << "\n";
  }
  finish(out, c, start);
  return kExitOk;
}

// sv-hist and purity --------------------------------------------------------

struct HistArgs {
  std::size_t n = 2;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::size_t bins = 50;
  std::string output;
  std::string curve;
};

int cmd_sv_hist(const HistArgs& a, const Common& c, std::ostream& out) {
  const auto start = Clock::now();
  require_positive(a.samples, "--samples");
  require_positive(a.bins, "--bins");
  if (a.n < 2) throw ParseError("--n must be at least 2");
  const Histogram h = singular_value_histogram(a.n, a.samples, a.seed, c.threads, a.bins);
  write_text_file(a.output, h.to_csv());
  out << "n=" << a.n << "\n";
  out << "samples=" << a.samples << "\n";
  out << "recorded=" << h.recorded << "\n";
  out << "csv=" << a.output << "\n";
  finish(out, c, start);
  return kExitOk;
}

int cmd_purity(const HistArgs& a, const Common& c, std::ostream& out) {
  const auto start = Clock::now();
  require_positive(a.samples, "--samples");
  require_positive(a.bins, "--bins");
  if (a.n < 2) throw ParseError("--n must be at least 2");
  if (!a.curve.empty() && a.n != 2) throw ParseError("--curve is only available for --n 2");
  const PurityResult p = mc_purity(a.n, a.samples, a.seed, c.threads, a.bins);
  out << "n=" << a.n << "\n";
  out << "mean_r=" << fmt(p.mean.mean) << "\n";
  out << "std_error=" << fmt(p.mean.std_error) << "\n";
  if (p.fast_path) out << "fast_path_mean_r=" << fmt(p.fast_path->mean) << "\n";
  if (!a.output.empty()) {
    write_text_file(a.output, p.hist.to_csv());
    out << "csv=" << a.output << "\n";
  }
  if (!a.curve.empty()) {
    const auto dens = purity_density_curve(a.bins);
    std::ostringstream csv;
    csv << std::setprecision(17) << "bin_lo,bin_hi,density\n";
    for (std::size_t k = 0; k < dens.size(); ++k)
      csv << p.hist.bin_lo(k) << "," << p.hist.bin_hi(k) << "," << dens[k] << "\n";
    write_text_file(a.curve, csv.str());
    out << "curve=" << a.curve << "\n";
  }
  finish(out, c, start);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nonlocal properties of bipartite unitary gates and their unistochastic channels", "unigate"};
  app.require_subcommand(1);

  Common common;
  const unsigned hw = std::thread::hardware_concurrency();
  common.threads = hw == 0 ? 1 : hw;

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "Invariant report of one gate");
  auto* in_opt = analyze->add_option("--input", an.input, "Matrix file");
  auto* gate_opt = analyze->add_option("--gate", an.gate, "Built-in gate name, e.g. cnot or fourier:3");
  in_opt->excludes(gate_opt);
  analyze->add_option("--dims", an.dims, "Bipartite split A,B");
  analyze->add_option("--output", an.output, "JSON report");
  analyze->add_option("--name", an.name, "Name recorded in the report");
  add_common(analyze, common);

  std::string t1_out;
  auto* t1 = app.add_subcommand("table1", "Invariants of the eight reference two-qubit gates");
  t1->add_option("--output", t1_out, "JSON report");
  add_common(t1, common);

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "Sample an ensemble to CSV");
  sample->add_option("--ensemble", sa.ensemble, "cue, scue or coe");
  sample->add_option("--dim", sa.dim, "Matrix size N^2");
  sample->add_option("--count,--samples", sa.count, "Number of samples")->required();
  sample->add_option("--seed", sa.seed, "64-bit seed")->required();
  sample->add_option("--output", sa.output, "CSV file")->required();
  add_common(sample, common);

  std::size_t pv_samples = 100000;
  std::uint64_t pv_seed = 0;
  std::string pv_out;
  auto* pe = app.add_subcommand("pe-volume", "Fraction of perfect entanglers, by Monte Carlo and quadrature");
  pe->add_option("--samples,--count", pv_samples, "Monte Carlo samples");
  pe->add_option("--seed", pv_seed, "64-bit seed")->required();
  pe->add_option("--output", pv_out, "CSV file");
  add_common(pe, common);

  EntropyArgs ea;
  auto* me = app.add_subcommand("mean-entropy", "Mean Renyi entropies of CUE(N^2) gates");
  me->add_option("--n", ea.n, "Local dimensions: 2..5 or 2,3,4");
  me->add_option("--q", ea.q, "Renyi orders, comma separated");
  me->add_option("--samples,--count", ea.samples, "Samples per N");
  me->add_option("--seed", ea.seed, "64-bit seed")->required();
  me->add_option("--output", ea.output, "CSV file");
  add_common(me, common);

  std::string cu_eta, cu_out;
  auto* cu = app.add_subcommand("check-unistochastic", "Test a one-qubit damping vector");
  cu->add_option("--eta", cu_eta, "eta1,eta2,eta3")->required();
  cu->add_option("--output", cu_out, "Witness gate matrix file");
  add_common(cu, common);

  ApplyArgs aa;
  auto* ca = app.add_subcommand("channel-apply", "Apply the environment channel of a gate to a state");
  ca->add_option("--input", aa.input, "Gate matrix file")->required();
  ca->add_option("--state", aa.state, "Density matrix file")->required();
  ca->add_option("--dims", aa.dims, "System and environment sizes N,M");
  ca->add_option("--output", aa.output, "Output density matrix file");
  add_common(ca, common);

  HistArgs sv;
  auto* svh = app.add_subcommand("sv-hist", "Histogram of singular values of reshuffled CUE(N^2) gates");
  svh->add_option("--n", sv.n, "Local dimension");
  svh->add_option("--samples,--count", sv.samples, "Samples");
  svh->add_option("--seed", sv.seed, "64-bit seed")->required();
  svh->add_option("--bins", sv.bins, "Histogram bins");
  svh->add_option("--output", sv.output, "CSV file")->required();
  add_common(svh, common);

  HistArgs pu;
  auto* pur = app.add_subcommand("purity", "Distribution of the Schmidt purity of random gates");
  pur->add_option("--n", pu.n, "Local dimension");
  pur->add_option("--samples,--count", pu.samples, "Samples");
  pur->add_option("--seed", pu.seed, "64-bit seed")->required();
  pur->add_option("--bins", pu.bins, "Histogram bins");
  pur->add_option("--output", pu.output, "Histogram CSV");
  pur->add_option("--curve", pu.curve, "Analytic density CSV (N = 2)");
  add_common(pur, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      if (an.input.empty() && an.gate.empty()) throw ParseError("analyze needs --input or --gate");
      return cmd_analyze(an, common, out);
    }
    if (t1->parsed()) return cmd_table1(t1_out, common, out);
    if (sample->parsed()) return cmd_sample(sa, common, out);
    if (pe->parsed()) return cmd_pe_volume(pv_samples, pv_seed, pv_out, common, out);
    if (me->parsed()) return cmd_mean_entropy(ea, common, out);
    if (cu->parsed()) return cmd_check_unistochastic(cu_eta, cu_out, common, out);
    if (ca->parsed()) return cmd_channel_apply(aa, common, out);
    if (svh->parsed()) return cmd_sv_hist(sv, common, out);
    if (pur->parsed()) return cmd_purity(pu, common, out);
    return kExitUsage;
  } catch (const NotUnitaryError& e) {
    err << "error: " << e.what() << "\n";
    return kExitNotUnitary;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace unigate
