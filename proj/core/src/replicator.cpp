#include "qbio/replicator.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "qbio/grover.hpp"
#include "qbio/rng.hpp"
#include "qbio/state.hpp"

namespace qbio::replicator {

SequenceSpace::SequenceSpace(int alphabet_size_in, int length_in)
    : alphabet_size(alphabet_size_in), length(length_in), num_sequences(0) {
  if (alphabet_size < 2) throw DegenerateInput("SequenceSpace: alphabet size must be >= 2");
  if (length < 1) throw DegenerateInput("SequenceSpace: length must be >= 1");
  Eigen::Index m = 1;
  for (int i = 0; i < length; ++i) {
    m *= alphabet_size;
    if (m > quantum::kMaxStateDim) {
      throw DegenerateInput("SequenceSpace: b^n exceeds cap 65536");
    }
  }
  num_sequences = m;
}

ReplicatorSet::ReplicatorSet(const SequenceSpace& space,
                             std::vector<Eigen::Index> marked_in)
    : marked(std::move(marked_in)) {
  if (marked.empty()) throw DegenerateInput("ReplicatorSet: marked set is empty");
  std::sort(marked.begin(), marked.end());
  if (std::adjacent_find(marked.begin(), marked.end()) != marked.end()) {
    throw DegenerateInput("ReplicatorSet: marked indices must be distinct");
  }
  if (marked.front() < 0 || marked.back() >= space.num_sequences) {
    throw DimensionError("ReplicatorSet: marked index out of range");
  }
}

ReplicatorSet ReplicatorSet::first(const SequenceSpace& space, Eigen::Index count) {
  if (count < 1 || count > space.num_sequences) {
    throw DegenerateInput("ReplicatorSet::first: need 1 <= count <= M");
  }
  std::vector<Eigen::Index> marked(count);
  for (Eigen::Index i = 0; i < count; ++i) marked[i] = i;
  return ReplicatorSet(space, std::move(marked));
}

ReplicatorSet ReplicatorSet::all(const SequenceSpace& space) {
  return first(space, space.num_sequences);
}

namespace {

struct TrialSums {
  std::uint64_t draws = 0;
  unsigned __int128 draws_sq = 0;
};

// One geometric trial: counter-based stream keyed by (seed, trial index).
std::uint32_t hitting_time(const std::vector<char>& is_marked, std::uint64_t m,
                           std::uint64_t seed, std::uint64_t trial) {
  CounterRng rng = CounterRng::stream(seed, trial);
  std::uint32_t draws = 0;
  for (;;) {
    ++draws;
    if (is_marked[rng.below(m)]) return draws;
  }
}

}  // namespace

ClassicalSearchResult classical_search(const SequenceSpace& space,
                                       const ReplicatorSet& replicators,
                                       long trials, std::uint64_t seed,
                                       int threads) {
  if (trials < 1) throw DegenerateInput("classical_search: trials must be >= 1");

  std::vector<char> is_marked(space.num_sequences, 0);
  for (const Eigen::Index i : replicators.marked) is_marked[i] = 1;
  const auto m = static_cast<std::uint64_t>(space.num_sequences);

  ClassicalSearchResult result;
  result.trials = trials;
  result.hitting_times.assign(trials, 0);

  int workers = threads > 0 ? threads
                            : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, 32);
  workers = static_cast<int>(std::min<long>(workers, trials));

  const auto run_range = [&](long begin, long end) {
    TrialSums sums;
    for (long t = begin; t < end; ++t) {
      const std::uint32_t h =
          hitting_time(is_marked, m, seed, static_cast<std::uint64_t>(t));
      result.hitting_times[t] = h;
      sums.draws += h;
      sums.draws_sq += static_cast<unsigned __int128>(h) * h;
    }
    return sums;
  };

  TrialSums total;
  if (workers == 1) {
    total = run_range(0, trials);
  } else {
    std::vector<std::future<TrialSums>> futures;
    const long chunk = (trials + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const long begin = w * chunk;
      const long end = std::min<long>(trials, begin + chunk);
      if (begin >= end) break;
      futures.push_back(std::async(std::launch::async, run_range, begin, end));
    }
    for (auto& f : futures) {
      const TrialSums s = f.get();
      total.draws += s.draws;
      total.draws_sq += s.draws_sq;
    }
  }

  const double n = static_cast<double>(trials);
  const double mean = static_cast<double>(total.draws) / n;
  const double mean_sq = static_cast<double>(total.draws_sq) / n;
  const double variance = std::max(0.0, (mean_sq - mean * mean) * n / std::max(1.0, n - 1.0));
  result.total_draws = total.draws;
  result.mean_hitting_time = mean;
  result.std_error = std::sqrt(variance / n);
  return result;
}

GroverSearchResult grover_search(const SequenceSpace& space,
                                 const ReplicatorSet& replicators) {
  const double effective = static_cast<double>(space.num_sequences) /
                           static_cast<double>(replicators.marked.size());
  const grover::IterationCount q = grover::optimal_iterations(effective);
  const grover::GroverProblem problem(space.num_sequences, replicators.marked,
                                      q.rounded);
  return {q.rounded, grover::run_grover(problem), effective};
}

}  // namespace qbio::replicator
