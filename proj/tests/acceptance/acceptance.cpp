// Acceptance suite: one PASS/FAIL line per criterion. Tolerances, sample
// counts and seeds are fixed here; `--only NAME` runs a single criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <unistd.h>

#include "unigate/canonical.hpp"
#include "unigate/channels.hpp"
#include "unigate/cli.hpp"
#include "unigate/ensembles.hpp"
#include "unigate/gates.hpp"
#include "unigate/matrix_io.hpp"
#include "unigate/schmidt.hpp"

using namespace unigate;

namespace {

constexpr double kPi = std::numbers::pi;
const double kPeFraction = 8.0 / (3.0 * kPi);

std::size_t worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  // Records a failed condition; the message is kept for the summary line.
  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (!pass) detail << "; ";
    if (pass) detail.str("");
    pass = false;
    detail << what;
  }
};

std::string fmt(double x, int digits = 6) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

void table1_reproduction(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = table1();
  const double elapsed = seconds_since(t0);
  o.require(rows.size() == 8, "expected 8 rows");
  std::size_t flagged = 0;
  for (const auto& r : rows) {
    const bool b_gate = r.gate == "b-gate";
    o.require(r.alpha_matches, r.name + ": alpha");
    o.require(r.delta_matches, r.name + ": delta");
    o.require(r.rank_matches, r.name + ": Schmidt rank");
    o.require(r.pe_matches, r.name + ": PE class");
    o.require(r.oracle_confirms, r.name + ": SVD oracle disagrees");
    if (!b_gate) {
      o.require(r.lambda_matches, r.name + ": Lambda");
      o.require(r.eta_matches, r.name + ": eta");
      o.require(r.note.empty(), r.name + ": unexpectedly flagged");
    } else {
      // Computed values, confirmed against the printed ones being wrong.
      const auto& l = r.report.spectrum.coefficients;
      const double hi = (2 + std::sqrt(2.0)) / 2, lo = (2 - std::sqrt(2.0)) / 2;
      o.require(std::abs(l[0] - hi) < 1e-8 && std::abs(l[1] - hi) < 1e-8 && std::abs(l[2] - lo) < 1e-8 &&
                    std::abs(l[3] - lo) < 1e-8,
                "B-gate Lambda is not ((2+-sqrt2)/2 pairs)");
      const auto& e = r.report.eta.eta;
      o.require(std::abs(e[0] - std::sqrt(0.5)) < 1e-8 && std::abs(e[1]) < 1e-8 && std::abs(e[2]) < 1e-8,
                "B-gate eta is not (sqrt2/2, 0, 0)");
      o.require(!r.lambda_matches && !r.eta_matches && !r.note.empty(), "B-gate discrepancy not flagged");
    }
    flagged += r.note.empty() ? 0 : 1;
  }
  // The flag must reach the command-line output.
  const char* argv[] = {"unigate", "table1", "--deterministic"};
  std::ostringstream out, err;
  const int code = run_cli(3, argv, out, err);
  o.require(code == kExitOk && out.str().find("b-gate.flagged=yes") != std::string::npos &&
                out.str().find("flagged_rows=b-gate\n") != std::string::npos,
            "CLI output does not flag the B-gate row");
  o.require(elapsed < 1.0, "runtime " + fmt(elapsed) + " s exceeds 1 s");
  if (o.pass) o.detail << "8 rows match to 1e-8, B-gate Lambda/eta flagged and SVD-confirmed, " << fmt(elapsed, 3) << " s";
}

void mean_purity(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const PurityResult two = mc_purity(2, 100000, 20240601, worker_count());
  const PurityResult three = mc_purity(3, 10000, 20240602, worker_count());
  const double elapsed = seconds_since(t0);
  o.require(std::abs(two.mean.mean - 0.4) <= 0.005, "<r>_2 = " + fmt(two.mean.mean) + " not within 0.005 of 0.4");
  o.require(std::abs(three.mean.mean - 0.2) <= 0.01, "<r>_3 = " + fmt(three.mean.mean) + " not within 0.01 of 0.2");
  o.require(elapsed < 60.0, "runtime " + fmt(elapsed) + " s exceeds 60 s");
  if (o.pass)
    o.detail << "<r>_2 = " << fmt(two.mean.mean) << " (1e5 SCUE(4)), <r>_3 = " << fmt(three.mean.mean)
             << " (1e4 CUE(9)), " << fmt(elapsed, 3) << " s";
}

void pe_volume(Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  const PeFraction mc = mc_pe_fraction(100000, 7, worker_count());
  const Volumes v = integrate_volumes();
  const double elapsed = seconds_since(t0);
  o.require(std::abs(mc.fraction.mean - kPeFraction) <= 0.010,
            "MC fraction " + fmt(mc.fraction.mean) + " not within 0.010 of 8/(3pi)");
  o.require(std::abs(v.ratio - kPeFraction) <= 1e-3, "quadrature ratio " + fmt(v.ratio, 10) + " not within 1e-3");
  o.require(elapsed < 300.0, "runtime " + fmt(elapsed) + " s exceeds 5 min");
  if (o.pass)
    o.detail << "MC " << fmt(mc.fraction.mean) << " +- " << fmt(mc.fraction.std_error, 2) << ", quadrature "
             << fmt(v.ratio, 10) << ", 8/(3pi) = " << fmt(kPeFraction, 10) << ", " << fmt(elapsed, 3) << " s";
}

void density_gof(Outcome& o) {
  const ChiSquareResult a = alpha_goodness_of_fit(100000, 11, worker_count(), 20);
  const ChiSquareResult c = coe_goodness_of_fit(100000, 12, worker_count(), 20);
  o.require(a.p_value > 0.001, "alpha chi2 p = " + fmt(a.p_value));
  o.require(c.p_value > 0.001, "COE chi2 p = " + fmt(c.p_value));
  if (o.pass)
    o.detail << "alpha: chi2 = " << fmt(a.statistic) << " dof " << a.dof << " p = " << fmt(a.p_value, 3)
             << "; COE(4): chi2 = " << fmt(c.statistic) << " dof " << c.dof << " p = " << fmt(c.p_value, 3);
}

void entropy_scaling(Outcome& o) {
  // Band around the large-N asymptote 2 ln N - c_q, q = 1, 2.
  std::ostringstream all;
  for (std::size_t n = 2; n <= 5; ++n) {
    const double tol = n <= 3 ? 0.10 : 0.05;
    const auto est = mc_mean_entropies(n, {1.0, 2.0}, 10000, 500 + n, worker_count());
    const double ln = 2.0 * std::log(static_cast<double>(n));
    const double d1 = est[0].mean - (ln - entropy_offset(1.0));
    const double d2 = est[1].mean - (ln - entropy_offset(2.0));
    o.require(std::abs(d1) <= tol, "N=" + std::to_string(n) + " S1 off by " + fmt(d1, 3) + " > " + fmt(tol));
    o.require(std::abs(d2) <= tol, "N=" + std::to_string(n) + " S2 off by " + fmt(d2, 3) + " > " + fmt(tol));
    all << (n > 2 ? ", " : "") << "N=" << n << " dS1 " << fmt(d1, 3) << " dS2 " << fmt(d2, 3);
  }
  if (o.pass) o.detail << all.str();
  else o.detail << " [" << all.str() << "]";
}

void structured_entropies(Outcome& o) {
  double worst = 0.0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const std::string ns = std::to_string(n);
    const double ln = std::log(static_cast<double>(n));
    const std::vector<std::pair<std::string, double>> cases = {
        {"swap:" + ns, 2 * ln}, {"fourier:" + ns, 2 * ln}, {"gxor+:" + ns, ln}, {"gxor-:" + ns, ln}};
    for (const auto& [name, expect] : cases) {
      const double s = entanglement_entropy(schmidt_spectrum(build(parse_gate_name(name)), {n, n}));
      worst = std::max(worst, std::abs(s - expect));
      o.require(std::abs(s - expect) <= 1e-10, name + ": S = " + fmt(s, 15));
    }
  }
  if (o.pass) o.detail << "SWAP, Fourier, GXOR+- for N = 2..6, max deviation " << fmt(worst, 3);
}

void channel_equivalence(Outcome& o) {
  const EnsembleSpec spec{EnsembleKind::Cue, 4, 100, 31};
  double worst_action = 0.0, worst_choi = 0.0, worst_entropy = 0.0;
  for (std::size_t i = 0; i < spec.count; ++i) {
    const Matrix u = sample_unitary(spec, i);
    const Channel ch = unistochastic_channel(u, {2, 2});
    const auto ev = hermitian_eigen(ch.choi).eigenvalues;
    worst_choi = std::max({worst_choi, std::max(0.0, -ev.minCoeff()), std::abs(ch.choi.trace() - 2.0)});
    const Matrix half = Matrix::Identity(2, 2) / 2.0;
    worst_choi = std::max(worst_choi, (apply_kraus(ch.kraus, half) - half).cwiseAbs().maxCoeff());
    // Entropy of the Choi spectrum, normalized by its trace.
    double s = 0.0;
    for (Eigen::Index k = 0; k < ev.size(); ++k) {
      const double p = ev(k) / 2.0;
      if (p > 0) s -= p * std::log(p);
    }
    worst_entropy = std::max(worst_entropy, std::abs(s - entanglement_entropy(schmidt_spectrum(u, {2, 2}))));
    CounterRng rng(32, i);
    for (int k = 0; k < 10; ++k) {
      Matrix g(2, 2);
      for (Eigen::Index a = 0; a < 2; ++a)
        for (Eigen::Index b = 0; b < 2; ++b) g(a, b) = rng.complex_normal();
      Matrix rho = g * g.adjoint();
      rho /= rho.trace().real();
      const Matrix pt = env_channel_apply(u, rho, {2, 2});
      const Matrix kr = apply_kraus(ch.kraus, rho);
      const Matrix cj = apply_choi(ch.choi, rho);
      worst_action = std::max({worst_action, (pt - kr).cwiseAbs().maxCoeff(), (pt - cj).cwiseAbs().maxCoeff(),
                               (kr - cj).cwiseAbs().maxCoeff()});
    }
  }
  o.require(worst_action <= 1e-10, "Kraus/partial-trace/Choi disagree by " + fmt(worst_action, 3));
  o.require(worst_choi <= 1e-10, "Choi PSD/trace/unitality off by " + fmt(worst_choi, 3));
  o.require(worst_entropy <= 1e-10, "Choi entropy differs from S(U) by " + fmt(worst_entropy, 3));
  if (o.pass)
    o.detail << "100 U x 10 states: actions agree to " << fmt(worst_action, 3) << ", Choi checks " << fmt(worst_choi, 3)
             << ", entropy " << fmt(worst_entropy, 3);
}

void unistochasticity(Outcome& o) {
  const DampingVector pauli{{-1.0 / 3, -1.0 / 3, -1.0 / 3}};
  o.require(is_cp(pauli) && !is_unistochastic(pauli).unistochastic, "symmetric Pauli channel not rejected");

  std::size_t cp = 0, accepted = 0;
  double worst = 0.0;
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) {
      for (int k = 0; k <= 20; ++k) {
        const DampingVector eta{{(i - 10) / 10.0, (j - 10) / 10.0, (k - 10) / 10.0}};
        if (!is_cp(eta)) continue;
        ++cp;
        const UnistochasticVerdict v = is_unistochastic(eta);
        if (!v.unistochastic) continue;
        ++accepted;
        const BlochMap bm = bloch_map(unistochastic_channel(*v.witness, {2, 2}));
        const Eigen::Matrix3d target = Eigen::Vector3d(eta.eta[0], eta.eta[1], eta.eta[2]).asDiagonal();
        worst = std::max(worst, (bm.t - target).cwiseAbs().maxCoeff());
      }
    }
  }
  o.require(worst <= 1e-8, "witness Bloch matrix misses diag(eta) by " + fmt(worst, 3));

  // Damping vectors of sampled channels satisfy the printed inequalities.
  const EnsembleSpec spec{EnsembleKind::Cue, 4, 10000, 33};
  std::size_t violations = 0;
  for (std::size_t s = 0; s < spec.count; ++s) {
    const auto e = bloch_map(unistochastic_channel(sample_unitary(spec, s), {2, 2})).eta.eta;
    const double tol = 1e-10;
    const bool literal = e[0] * e[1] <= e[2] + tol && e[1] * e[2] <= e[0] + tol && e[2] * e[0] <= e[1] + tol;
    violations += literal ? 0 : 1;
  }
  o.require(violations == 0, std::to_string(violations) + " sampled channels violate the inequalities");
  if (o.pass)
    o.detail << "Pauli(-1/3) rejected; grid: " << accepted << " of " << cp << " CP vectors accepted, witness error "
             << fmt(worst, 3) << "; 10000 samples, 0 violations";
}

void no_rank_three(Outcome& o) {
  std::size_t rank3 = 0, points = 0;
  auto count = [&](const Matrix& u) {
    const auto l = schmidt_spectrum(u, {2, 2}).coefficients;
    std::size_t above = 0;
    for (double x : l) above += x > 1e-10 ? 1 : 0;
    rank3 += above == 3 ? 1 : 0;
    ++points;
  };
  const int g = 50;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      for (int k = 0; k < g; ++k) {
        const Vec3 a{kPi / 2 * i / (g - 1), kPi / 4 * j / (g - 1), kPi / 4 * k / (g - 1)};
        if (in_weyl_chamber(a, 1e-12)) count(canonical_gate(a));
      }
  const std::size_t grid = points;
  const EnsembleSpec spec{EnsembleKind::Cue, 4, 10000, 34};
  for (std::size_t s = 0; s < spec.count; ++s) count(sample_unitary(spec, s));
  o.require(rank3 == 0, std::to_string(rank3) + " spectra with exactly three entries above 1e-10");
  if (o.pass) o.detail << grid << " chamber grid points and 10000 samples, none of rank 3";
}

void determinism(Outcome& o) {
  const auto dir = std::filesystem::temp_directory_path();
  std::vector<std::string> texts;
  for (const char* threads : {"1", "2", "8"}) {
    const std::string path =
        (dir / ("unigate_accept_" + std::to_string(::getpid()) + "_" + threads + ".csv")).string();
    const char* argv[] = {"unigate", "sample",    "--ensemble", "scue",          "--dim", "4",
                          "--count", "5000",      "--seed",     "7",             "--output", path.c_str(),
                          "--threads", threads,   "--deterministic"};
    std::ostringstream out, err;
    const int code = run_cli(15, argv, out, err);
    o.require(code == kExitOk, std::string("sample with ") + threads + " threads failed: " + err.str());
    texts.push_back(code == kExitOk ? read_text_file(path) : std::string());
    std::filesystem::remove(path);
  }
  o.require(!texts[0].empty() && texts[0] == texts[1] && texts[0] == texts[2], "CSV differs across thread counts");
  if (o.pass) o.detail << "5000-row SCUE(4) CSV identical for 1, 2 and 8 threads (" << texts[0].size() << " bytes)";
}

struct Criterion {
  const char* name;
  std::function<void(Outcome&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {"table1", table1_reproduction},
      {"mean-purity", mean_purity},
      {"pe-volume", pe_volume},
      {"density-gof", density_gof},
      {"entropy-scaling", entropy_scaling},
      {"structured-entropies", structured_entropies},
      {"channel-equivalence", channel_equivalence},
      {"unistochasticity", unistochasticity},
      {"no-rank-three", no_rank_three},
      {"determinism", determinism},
  };

  std::string only;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      only = argv[++i];
    } else if (a == "--list") {
      for (const auto& c : criteria) std::cout << c.name << "\n";
      return 0;
    } else {
      std::cerr << "usage: acceptance [--only NAME] [--list]\n";
      return 2;
    }
  }

  int failures = 0, ran = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && only != c.name) continue;
    ++ran;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << " [" << fmt(seconds_since(t0), 3) << " s]: "
              << o.detail.str() << std::endl;
    failures += o.pass ? 0 : 1;
  }
  if (ran == 0) {
    std::cerr << "no criterion named '" << only << "'\n";
    return 2;
  }
  return failures == 0 ? 0 : 1;
}
