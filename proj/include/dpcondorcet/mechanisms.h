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

// Edge-noise models for the randomized Condorcet method and its
// repeat-until-Condorcet-winner sampler.
//
// Each unordered pair {a, b} of alternatives gets one independent noisy
// comparison. G(w) is the probability that the noisy edge says "a beats b"
// when the true majority margin is w:
//
//   LAP  single Laplace(1/lambda) perturbation of the margin; G is the
//        Laplace CDF: 1 - exp(-lambda w)/2 for w >= 0, exp(lambda w)/2 else.
//   EXP  exponential mechanism on the tally; G(w) = 1/(1 + exp(-lambda w/2)).
//   RR   randomized response on Sgn(w); G = e^l/(1+e^l), 1/(1+e^l) or 1/2.

#ifndef DPCONDORCET_MECHANISMS_H_
#define DPCONDORCET_MECHANISMS_H_

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "dpcondorcet/ballots.h"
#include "dpcondorcet/random.h"
#include "dpcondorcet/tally.h"

namespace dpcondorcet {

enum class Mechanism { kLaplace, kExponential, kRandomizedResponse };

// "lap", "exp", "rr".
absl::string_view MechanismName(Mechanism mechanism);
absl::StatusOr<Mechanism> ParseMechanism(absl::string_view name);

class NoiseSpec {
 public:
  // Fails unless lambda is positive and finite.
  static absl::StatusOr<NoiseSpec> Create(Mechanism mechanism, double lambda);

  Mechanism mechanism() const { return mechanism_; }
  double lambda() const { return lambda_; }

 private:
  NoiseSpec(Mechanism mechanism, double lambda)
      : mechanism_(mechanism), lambda_(lambda) {}

  Mechanism mechanism_;
  double lambda_;
};

// G_lambda(margin).
double EdgeWinProbability(const NoiseSpec& spec, int64_t margin);

// ln G_lambda(margin), accurate where G underflows or is close to 1.
double LogEdgeWinProbability(const NoiseSpec& spec, int64_t margin);

// Per-edge win probabilities for a whole margin matrix. Off-diagonal entries
// satisfy p(a,b) + p(b,a) = 1; the diagonal is unused and left at 0.
class EdgeProb {
 public:
  EdgeProb(const NoiseSpec& spec, const MajorityMargins& margins);

  // Builds from an explicit probability matrix; entries must lie in (0, 1)
  // with complementary pairs. Intended for tests and analytic cases.
  static absl::StatusOr<EdgeProb> FromMatrix(const SquareMatrix<double>& p);

  int size() const { return p_.size(); }
  double p(int a, int b) const { return p_(a, b); }
  double log_p(int a, int b) const { return log_p_(a, b); }

 private:
  EdgeProb() = default;

  SquareMatrix<double> p_;
  SquareMatrix<double> log_p_;
};

EdgeProb ComputeEdgeProbs(const NoiseSpec& spec, const MajorityMargins& margins);

// One noisy majority graph. Pairs are drawn once each in row-major order over
// a < b, and U(b,a) = -U(a,b); no entry is ever 0. LAP draws the Laplace
// noise variable itself; EXP and RR flip a G-biased coin.
Umg SampleNoisyUmg(const NoiseSpec& spec, const MajorityMargins& margins,
                   Rng& rng);

struct RejectionSample {
  Alternative winner;
  int64_t rounds;
};

inline constexpr int64_t kDefaultMaxRounds = 1'000'000;

// Draws noisy graphs until one has a Condorcet winner. Fails with
// ResourceExhausted if max_rounds graphs have none.
absl::StatusOr<RejectionSample> RejectionSampleWinner(
    const NoiseSpec& spec, const MajorityMargins& margins, Rng& rng,
    int64_t max_rounds = kDefaultMaxRounds);

absl::StatusOr<RejectionSample> RejectionSampleWinner(
    const NoiseSpec& spec, const Profile& profile, Rng& rng,
    int64_t max_rounds = kDefaultMaxRounds);

}  // namespace dpcondorcet

#endif  // DPCONDORCET_MECHANISMS_H_
