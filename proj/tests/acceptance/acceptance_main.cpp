// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every tolerance is pinned here, in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "qbio/abl.hpp"
#include "qbio/bounds.hpp"
#include "qbio/constants.hpp"
#include "qbio/density_matrix.hpp"
#include "qbio/double_well.hpp"
#include "qbio/grover.hpp"
#include "qbio/lindblad.hpp"
#include "qbio/mcfadden.hpp"
#include "qbio/operators.hpp"
#include "qbio/replicator.hpp"
#include "qbio/rng.hpp"
#include "qbio/units.hpp"
#include "support/test_support.hpp"

using namespace qbio;

namespace {

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

  void require(bool condition, const std::string& detail) {
    if (!condition && failure_.empty()) failure_ = detail;
  }

  template <typename F>
  double timed_seconds(F&& body) {
    const auto start = std::chrono::steady_clock::now();
    body();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
  }

  bool report() const {
    if (failure_.empty()) {
      std::printf("[PASS] criterion %2d: %s\n", id_, title_.c_str());
      return true;
    }
    std::printf("[FAIL] criterion %2d: %s\n        %s\n", id_, title_.c_str(),
                failure_.c_str());
    return false;
  }

 private:
  int id_;
  std::string title_;
  std::string failure_;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

// --------------------------------------------------------------------------

void criterion_1(Criterion& c) {
  double n1 = 0.0, n3 = 0.0;
  const double elapsed = c.timed_seconds([&] {
    n1 = grover::items_for_iterations(1.0);
    n3 = grover::items_for_iterations(3.0);
  });
  c.require(std::abs(n1 - 4.0) <= 1e-12, "items(Q=1) = " + num(n1) + ", want 4.0 +- 1e-12");
  c.require(std::abs(n3 - 20.2) <= 0.05, "items(Q=3) = " + num(n3) + ", want 20.2 +- 0.05");
  c.require(elapsed < 1e-3, "runtime " + num(elapsed) + " s, want < 1 ms");
}

void criterion_2(Criterion& c) {
  const double exact = grover::run_grover(grover::GroverProblem(4, {1}, 1));
  c.require(std::abs(exact - 1.0) <= 1e-12,
            "M=4 Q=1 success = " + num(exact) + ", want 1.0 +- 1e-12");

  const double elapsed = c.timed_seconds([&] {
    CounterRng rng(424242);
    double worst = 0.0;
    for (int trial = 0; trial < 300; ++trial) {
      const auto m = static_cast<Eigen::Index>(2 + rng.below(1023));
      const auto k = static_cast<Eigen::Index>(
          1 + rng.below(std::min<std::uint64_t>(4, static_cast<std::uint64_t>(m))));
      const long q = static_cast<long>(rng.below(51));
      std::vector<Eigen::Index> marked;
      while (static_cast<Eigen::Index>(marked.size()) < k) {
        const auto idx = static_cast<Eigen::Index>(rng.below(m));
        if (std::find(marked.begin(), marked.end(), idx) == marked.end()) {
          marked.push_back(idx);
        }
      }
      const double sim = grover::run_grover(grover::GroverProblem(m, marked, q));
      const double closed = grover::predict(m, k, q).success_probability;
      worst = std::max(worst, std::abs(sim - closed));
    }
    c.require(worst <= 1e-10,
              "worst |simulated - closed| = " + num(worst) + ", want <= 1e-10");
  });
  c.require(elapsed < 5.0, "grid runtime " + num(elapsed) + " s, want < 5 s");
}

void criterion_3(Criterion& c) {
  const double t100 =
      bounds::folding_time_limit(bounds::ProteinSpec::with_defaults(100)).value();
  const double t1000 =
      bounds::folding_time_limit(bounds::ProteinSpec::with_defaults(1000)).value();
  c.require(t100 >= 1e-4 && t100 <= 4e-3,
            "T(100) = " + num(t100) + " s, want within [1e-4, 4e-3]");
  c.require(t1000 >= 0.08 && t1000 <= 1.2,
            "T(1000) = " + num(t1000) + " s, want within [0.08, 1.2]");
  const double ratio = t1000 / t100;
  c.require(std::abs(ratio - 1000.0) <= 1e-9 * 1000.0,
            "cubic ratio = " + num(ratio) + ", want 1000 within 1e-9 relative");
}

void criterion_4(Criterion& c) {
  const bounds::MotorSpec spec = bounds::MotorSpec::polymerase_defaults();
  const double v_cm =
      bounds::convert_to(bounds::motor_velocity_bound(spec), "cm/s");
  c.require(v_cm >= 0.5e-5 && v_cm <= 2e-5,
            "hbar/(mL) = " + num(v_cm) + " cm/s, want within [0.5e-5, 2e-5]");

  const bounds::TensionResponse resp =
      bounds::motor_speed_under_tension(bounds::newtons(0.0), spec);
  const double stall_pn = bounds::convert_to(resp.stall_force, "pN");
  c.require(std::abs(stall_pn - 100.0 / 3.0) <= 1e-9,
            "model stall = " + num(stall_pn) + " pN, want 33.3");
  c.require(resp.stall_ratio >= 0.7 && resp.stall_ratio <= 1.3,
            "stall residual ratio " + num(resp.stall_ratio) +
                " vs measured 40 pN, want within [0.7, 1.3]");
}

void criterion_5(Criterion& c) {
  const double tau =
      bounds::thermal_decoherence_time(500.0 * constants::dalton(),
                                       bounds::kelvins(300.0), bounds::metres(1e-9),
                                       bounds::per_second(1e12))
          .value();
  c.require(tau <= 1e-13, "tau = " + num(tau) + " s, want <= 1e-13");
}

void criterion_6(Criterion& c) {
  const double elapsed = c.timed_seconds([&] {
    const double gamma = 0.8;
    const lindblad::LindbladModel model(Eigen::MatrixXcd::Zero(2, 2),
                                        {{quantum::sigma_z(), gamma}});
    Eigen::VectorXcd plus(2);
    plus << 1, 1;
    const quantum::DensityMatrix rho0 =
        quantum::DensityMatrix::pure(quantum::StateVector(plus));
    const double t_end = 5.0 / gamma;
    const lindblad::Trajectory traj =
        lindblad::evolve_lindblad(model, rho0, lindblad::default_grid(model, t_end));

    double worst_rel = 0.0;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
      const double expected = 0.5 * std::exp(-2.0 * gamma * traj.times[i]);
      const double got = std::abs(traj.states[i].matrix()(0, 1));
      worst_rel = std::max(worst_rel, std::abs(got - expected) / expected);
    }
    c.require(worst_rel <= 1e-6,
              "dephasing relative error " + num(worst_rel) + ", want <= 1e-6");
    c.require(traj.max_trace_drift <= 1e-9 * t_end,
              "trace drift " + num(traj.max_trace_drift) + " over t = " +
                  num(t_end) + ", want <= 1e-9 per unit time");

    // convergence ratio on the same case at coarse steps
    const auto error_at = [&](double dt) {
      const lindblad::Trajectory run =
          lindblad::evolve_lindblad(model, rho0, lindblad::TimeGrid(2.0, dt));
      const double expected = 0.5 * std::exp(-2.0 * gamma * 2.0);
      return std::abs(std::abs(run.final_state().matrix()(0, 1)) - expected);
    };
    const double ratio = error_at(0.1) / error_at(0.05);
    c.require(ratio >= 8.0 && ratio <= 32.0,
              "RK4 error ratio dt/dt2 = " + num(ratio) + ", want within [8, 32]");
  });
  c.require(elapsed < 10.0, "runtime " + num(elapsed) + " s, want < 10 s");
}

void criterion_7(Criterion& c) {
  const lindblad::DoubleWellSpec spec{1.0, 2.0, 0.5, 0.0};
  double previous = -1.0;
  for (const double gamma : {0.0, 1.0, 5.0, 25.0, 125.0}) {
    const double survival = lindblad::zeno_survival(gamma, spec, 10.0);
    c.require(survival > previous, "survival(" + num(gamma) + ") = " + num(survival) +
                                       " not above survival at previous rate " +
                                       num(previous));
    previous = survival;
  }
  const double frozen = lindblad::zeno_survival(1e4, spec, 10.0, 2e-5);
  c.require(frozen >= 0.99,
            "survival at rate 1e4 = " + num(frozen) + ", want >= 0.99");
}

void criterion_8(Criterion& c) {
  // collective coupling, no drive: exact decoherence-free subspace
  {
    const double gamma = 1.0;
    const lindblad::DfsResult dfs =
        lindblad::dfs_entanglement_demo(gamma, 0.0, 100.0 / gamma, true);
    double worst = 0.0;
    for (const double value : dfs.concurrence) {
      worst = std::max(worst, std::abs(value - 1.0));
    }
    c.require(worst <= 1e-9, "collective concurrence deviates by " + num(worst) +
                                 " from 1, want <= 1e-9 up to t = 100/gamma");
  }
  // independent dephasing: strict monotone decay
  {
    const lindblad::DfsResult dfs = lindblad::dfs_entanglement_demo(0.5, 0.0, 1.0, false);
    bool monotone = true;
    for (std::size_t i = 1; i < dfs.concurrence.size(); ++i) {
      if (dfs.concurrence[i] >= dfs.concurrence[i - 1]) monotone = false;
    }
    c.require(monotone, "independent-dephasing concurrence is not strictly decreasing");
  }
  // drive on: concurrence at t = 5/omega non-decreasing across the rate grid
  {
    const double omega = 1.0;
    double previous = -1.0;
    for (const double gamma : {0.0, 0.5, 1.0, 2.0, 4.0}) {
      const lindblad::DfsResult dfs =
          lindblad::dfs_entanglement_demo(gamma, omega, 5.0 / omega, true);
      const double at_end = dfs.concurrence.back();
      c.require(at_end >= previous - 1e-9,
                "driven concurrence(" + num(gamma) + ") = " + num(at_end) +
                    " fell below previous grid point " + num(previous));
      previous = at_end;
    }
  }
}

void criterion_9(Criterion& c) {
  const double omega1 = 1.0, omega2 = 2.0, gap = 0.5;
  const double window = 2.0 * std::numbers::pi / (omega2 - omega1);  // one beat

  const lindblad::DoubleWellSpec free_spec{omega1, omega2, gap, 0.0};
  const quantum::DensityMatrix rho0 =
      quantum::DensityMatrix::pure(lindblad::left_band_superposition());

  // step counts chosen so both runs record on the identical 1024-point grid
  const lindblad::Trajectory free_run = lindblad::evolve_lindblad(
      lindblad::double_well_model(free_spec), rho0,
      lindblad::TimeGrid(window, window / 16384.0, 1025));

  std::vector<double> free_coherence(free_run.states.size());
  std::size_t degraded = 0;
  for (std::size_t i = 0; i < free_run.states.size(); ++i) {
    free_coherence[i] = lindblad::band_coherence(free_run.states[i]);
    if (free_coherence[i] < 0.5) ++degraded;
  }
  c.require(degraded > 0, "bath-free coherence never fell below 0.5 in the window");

  const double strong_rate = 50.0 * std::max(omega1, omega2);
  const lindblad::DoubleWellSpec pinned_spec{omega1, omega2, gap, strong_rate};
  const lindblad::Trajectory pinned = lindblad::evolve_lindblad(
      lindblad::double_well_model(pinned_spec), rho0,
      lindblad::TimeGrid(window, window / 131072.0, 1025));

  c.require(pinned.times.size() == free_run.times.size(),
            "record grids differ: " + num(static_cast<double>(pinned.times.size())) +
                " vs " + num(static_cast<double>(free_run.times.size())));
  const double index = lindblad::synchrony_index_where(pinned, free_coherence, 0.5);
  c.require(index >= 0.9, "synchrony index over the degraded window = " + num(index) +
                              ", want >= 0.9");
}

void criterion_10(Criterion& c) {
  const double elapsed = c.timed_seconds([&] {
    // classical hitting times
    const replicator::SequenceSpace space(2, 10);
    for (const Eigen::Index k : {Eigen::Index{1}, Eigen::Index{4}}) {
      const replicator::ClassicalSearchResult r = replicator::classical_search(
          space, replicator::ReplicatorSet::first(space, k), 10000, 20240607);
      const double expected = 1024.0 / static_cast<double>(k);
      c.require(std::abs(r.mean_hitting_time - expected) <= 3.0 * r.std_error,
                "classical mean (k=" + num(static_cast<double>(k)) + ") = " +
                    num(r.mean_hitting_time) + " +- " + num(r.std_error) +
                    ", want within 3 SE of " + num(expected));
    }

    // grover query scaling
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = 0;
    for (const int length : {4, 6, 8, 10, 12}) {
      const replicator::SequenceSpace s(2, length);
      const replicator::GroverSearchResult g =
          replicator::grover_search(s, replicator::ReplicatorSet::first(s, 1));
      const double x = std::log(static_cast<double>(s.num_sequences));
      const double y = std::log(static_cast<double>(g.queries));
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++n;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    c.require(std::abs(slope - 0.5) <= 0.1,
              "log-log query slope = " + num(slope) + ", want 0.5 +- 0.1");

    // first-detection dynamics vs the dense-propagator oracle at M = 256
    const replicator::SequenceSpace walk_space(2, 8);
    const replicator::ReplicatorSet marked =
        replicator::ReplicatorSet::first(walk_space, 1);
    replicator::McFaddenParams params;
    params.hop_rate = 1.0;
    params.detect_rate = 1.0;
    params.t_max = 20.0;
    params.dt_override = 5e-4;
    const replicator::McFaddenResult rk =
        replicator::mcfadden_search(walk_space, marked, params);
    c.require(rk.max_norm_accounting_error <= 1e-8,
              "norm accounting error " + num(rk.max_norm_accounting_error) +
                  ", want <= 1e-8");

    const replicator::McFaddenResult oracle =
        replicator::mcfadden_search_matrix_exponential(walk_space, marked, params,
                                                       200);
    double worst = 0.0;
    for (std::size_t i = 0; i < oracle.times.size(); ++i) {
      const auto it = std::lower_bound(rk.times.begin(), rk.times.end(),
                                       oracle.times[i] - 1e-9);
      if (it == rk.times.end() || std::abs(*it - oracle.times[i]) > 1e-6) continue;
      const std::size_t j = static_cast<std::size_t>(it - rk.times.begin());
      worst = std::max(worst,
                       std::abs(rk.detection_cdf[j] - oracle.detection_cdf[i]));
    }
    c.require(worst <= 1e-6, "detection CDF vs dense propagator differs by " +
                                 num(worst) + ", want <= 1e-6");
  });
  c.require(elapsed < 120.0, "runtime " + num(elapsed) + " s, want < 2 minutes");
}

void criterion_11(Criterion& c) {
  using quantum::HermitianOp;
  using quantum::StateVector;
  const double s = 1.0 / std::sqrt(2.0);
  Eigen::VectorXcd x_up(2), y_up(2);
  x_up << s, s;
  y_up << s, std::complex<double>(0, s);

  const replicator::PrePostSpec x_spec{StateVector(x_up), StateVector(y_up),
                                       HermitianOp(quantum::sigma_x())};
  const auto x_out = replicator::abl_probabilities(x_spec);
  c.require(std::abs(x_out[0].probability - 1.0) <= 1e-12 &&
                std::abs(x_out[1].probability) <= 1e-12,
            "sigma_x outcomes = (" + num(x_out[0].probability) + ", " +
                num(x_out[1].probability) + "), want (1, 0)");

  const replicator::PrePostSpec z_spec{StateVector(x_up), StateVector(y_up),
                                       HermitianOp(quantum::sigma_z())};
  const auto z_out = replicator::abl_probabilities(z_spec);
  c.require(std::abs(z_out[0].probability - 0.5) <= 1e-12 &&
                std::abs(z_out[1].probability - 0.5) <= 1e-12,
            "sigma_z outcomes = (" + num(z_out[0].probability) + ", " +
                num(z_out[1].probability) + "), want (0.5, 0.5)");

  test::GaussianSource g(20240608);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(g.integer_below(7));
    const Eigen::MatrixXcd a = test::random_complex_matrix(dim, g);
    const replicator::PrePostSpec spec{
        test::random_state(dim, g), test::random_state(dim, g),
        HermitianOp(Eigen::MatrixXcd(0.5 * (a + a.adjoint())))};
    double total = 0.0;
    for (const auto& outcome : replicator::abl_probabilities(spec)) {
      total += outcome.probability;
    }
    worst = std::max(worst, std::abs(total - 1.0));
  }
  c.require(worst <= 1e-12,
            "worst |sum - 1| over random triples = " + num(worst) + ", want <= 1e-12");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> table = {
      {"closed-form iteration solver anchors (Q=1 -> 4, Q=3 -> 20.2)", criterion_1},
      {"amplitude amplification matches sin^2((2Q+1)theta) on the grid", criterion_2},
      {"folding-time ceiling brackets the millisecond/second anchors", criterion_3},
      {"motor velocity bound and linear stall residual", criterion_4},
      {"warm-wet decoherence time is below 1e-13 s", criterion_5},
      {"dephasing integrator accuracy, trace drift, RK4 order", criterion_6},
      {"survival is monotone in monitoring rate (Zeno freezing)", criterion_7},
      {"decoherence-free subspace preserves singlet entanglement", criterion_8},
      {"strong bath synchronizes the double-well beats", criterion_9},
      {"replicator searches: classical, amplified, first-detection", criterion_10},
      {"pre/post-selected measurement probabilities", criterion_11},
  };

  int failures = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    Criterion criterion(static_cast<int>(i + 1), table[i].first);
    try {
      table[i].second(criterion);
    } catch (const std::exception& e) {
      criterion.require(false, std::string("unexpected exception: ") + e.what());
    }
    if (!criterion.report()) ++failures;
  }

  if (failures == 0) {
    std::printf("ACCEPTANCE: all %zu criteria passed\n", table.size());
    return 0;
  }
  std::printf("ACCEPTANCE: %d of %zu criteria FAILED\n", failures, table.size());
  return 1;
}
