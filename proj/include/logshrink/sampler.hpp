#pragma once

#include <cstdint>
#include <vector>

#include "logshrink/common.hpp"

namespace logshrink {

struct SamplerConfig {
  std::size_t window_h = 20;   // fixed window length
  double xi = 0.01;            // sample rate per clustering iteration
  double theta = 4.0;          // HAC linkage distance threshold
  std::size_t sample_m = 16;   // sampled-candidate count
  double minority_p = 0.03;    // assumed minority-type proportion for k_min
  std::size_t max_iterations = 10;
  std::size_t kmin_ceiling = 64;  // returned when the k_min bound is unsatisfiable
  // Reproduces the literal draw-size rule min(ceil(xi*N), k_min) instead of
  // the max() form used by default.
  bool strict_paper_min = false;
};

struct SequenceVector {
  uint32_t window_index = 0;
  uint32_t start_row = 0;  // [start_row, end_row) over matched rows
  uint32_t end_row = 0;
  std::vector<uint32_t> counts;  // event-frequency vector over the vocabulary
  std::vector<double> weighted;  // counts[e] * idf[e]
};

struct KMinResult {
  std::size_t k = 2;
  bool capped = false;  // no k satisfied the bound; ceiling returned
};

// Smallest k >= 2 with C(k,2) * p^(k-2) * (1-p)^2 >= 1 - e^-6, by direct
// iteration. Unsatisfiable bounds return the configured ceiling, flagged.
KMinResult k_min(double p, std::size_t ceiling = 64);

// Non-overlapping consecutive windows over the matched-event stream; the
// final partial window is kept. Fills counts only.
std::vector<SequenceVector> make_windows(const std::vector<uint32_t>& event_ids,
                                         std::size_t vocab_size, std::size_t h);

// w(e) = ln(N / n_e) with n_e the number of windows containing e; events in
// no window get weight 0.
std::vector<double> idf_weights(const std::vector<SequenceVector>& windows,
                                std::size_t vocab_size);

void apply_idf(std::vector<SequenceVector>& windows,
               const std::vector<double>& weights);

struct ClusterAssignment {
  std::vector<uint32_t> cluster_of;          // per window
  std::vector<std::vector<double>> centers;  // per cluster
  std::size_t k = 0;
};

// Iterative draw / HAC / nearest-centroid assignment over the weighted
// vectors. Deterministic for a fixed seed; leftovers after max_iterations
// become singleton clusters.
ClusterAssignment cluster_sequences(const std::vector<SequenceVector>& vectors,
                                    const SamplerConfig& cfg, uint64_t seed);

// Quota sampling: ceil(M/k) per cluster, capped by cluster size, trimmed from
// the largest clusters (never below one per cluster) and topped up from spare
// capacity toward min(total, max(k, M)). Returns sorted window indices.
std::vector<uint32_t> sample_sequences(const ClusterAssignment& assignment,
                                       std::size_t m, uint64_t seed);

}  // namespace logshrink
