//
// Copyright 2026 The dpcondorcet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "dpcondorcet/distribution.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace dpcondorcet {

double LogSumExp(absl::Span<const double> values) {
  if (values.empty()) return -std::numeric_limits<double>::infinity();
  const double peak = *std::max_element(values.begin(), values.end());
  if (!std::isfinite(peak)) return peak;
  double sum = 0.0;
  for (double v : values) sum += std::exp(v - peak);
  return peak + std::log(sum);
}

std::vector<double> LogScores(const EdgeProb& edges) {
  const int m = edges.size();
  std::vector<double> scores(m, 0.0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (b != a) scores[a] += edges.log_p(a, b);
    }
  }
  return scores;
}

WinnerDistribution WinnerDistributionFromEdges(const EdgeProb& edges) {
  WinnerDistribution d;
  d.log_scores = LogScores(edges);
  const double log_total = LogSumExp(d.log_scores);
  d.probs.reserve(d.log_scores.size());
  for (double s : d.log_scores) d.probs.push_back(std::exp(s - log_total));
  return d;
}

WinnerDistribution ComputeWinnerDistribution(const NoiseSpec& spec,
                                             const MajorityMargins& margins) {
  return WinnerDistributionFromEdges(EdgeProb(spec, margins));
}

WinnerDistribution ComputeWinnerDistribution(const NoiseSpec& spec,
                                             const Profile& profile) {
  return ComputeWinnerDistribution(spec, ProfileMargins(profile));
}

double CwExistenceProb(const EdgeProb& edges) {
  return std::exp(LogSumExp(LogScores(edges)));
}

double ExpectedRounds(const EdgeProb& edges) {
  return std::exp(-LogSumExp(LogScores(edges)));
}

Alternative SampleWinner(const WinnerDistribution& d, Rng& rng) {
  const double u = rng.UniformDouble();
  double cumulative = 0.0;
  for (int a = 0; a < d.size(); ++a) {
    cumulative += d.probs[a];
    if (u < cumulative) return a;
  }
  // Rounding left the total a hair below 1; fall back to the last
  // alternative with positive mass.
  for (int a = d.size() - 1; a > 0; --a) {
    if (d.probs[a] > 0) return a;
  }
  return 0;
}

}  // namespace dpcondorcet
