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

// Exact winner distribution of the randomized Condorcet method.
//
// Conditioning a single noisy graph on having a Condorcet winner gives
// P[a] proportional to the product over b != a of p(a, b). Products are
// formed as sums of logs and normalized with log-sum-exp.

#ifndef DPCONDORCET_DISTRIBUTION_H_
#define DPCONDORCET_DISTRIBUTION_H_

#include <vector>

#include "absl/types/span.h"
#include "dpcondorcet/ballots.h"
#include "dpcondorcet/mechanisms.h"
#include "dpcondorcet/random.h"
#include "dpcondorcet/tally.h"

namespace dpcondorcet {

struct WinnerDistribution {
  std::vector<double> probs;
  // Unnormalized: log_scores[a] = sum_{b != a} ln p(a, b).
  std::vector<double> log_scores;

  int size() const { return static_cast<int>(probs.size()); }
};

// Numerically stable ln(sum exp(x)). -inf for an empty input.
double LogSumExp(absl::Span<const double> values);

// ln P[a single noisy graph has Condorcet winner a], for each a.
std::vector<double> LogScores(const EdgeProb& edges);

WinnerDistribution WinnerDistributionFromEdges(const EdgeProb& edges);
WinnerDistribution ComputeWinnerDistribution(const NoiseSpec& spec,
                                             const MajorityMargins& margins);
WinnerDistribution ComputeWinnerDistribution(const NoiseSpec& spec,
                                             const Profile& profile);

// P[a single noisy graph has a Condorcet winner] = sum_a exp(score[a]).
double CwExistenceProb(const EdgeProb& edges);

// Mean number of graphs the rejection sampler draws: 1 / CwExistenceProb.
double ExpectedRounds(const EdgeProb& edges);

// Categorical draw from d.probs using one uniform.
Alternative SampleWinner(const WinnerDistribution& d, Rng& rng);

}  // namespace dpcondorcet

#endif  // DPCONDORCET_DISTRIBUTION_H_
