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

// Closed-form privacy and axiom-satisfaction levels as functions of the
// mechanism, the noise level lambda and the number of alternatives m.

#ifndef DPCONDORCET_BOUNDS_H_
#define DPCONDORCET_BOUNDS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "dpcondorcet/mechanisms.h"

namespace dpcondorcet {

struct DpBounds {
  double eps_lower;
  double eps_upper;
};

// Exact-DP budget bracket. eps_upper = 2(m-1)lambda for every mechanism.
// eps_lower = (m-1)lambda for RR, and for LAP/EXP
//   ln( (G^{m-1}(2) - G^{m-1}(-2)) / (G(2) - G(-2)) * 2^{m-2}/(m-1) )
//     + (m-1)lambda.
absl::StatusOr<DpBounds> ComputeDpBounds(Mechanism mechanism, double lambda,
                                         int m);

// The factor inside the logarithm above, in its printed closed form.
double LowerBoundRatio(const NoiseSpec& spec, int m);

// The same factor as the finite series
//   sum_{k=0}^{m-2} G^k(2) G^{m-2-k}(-2) / ((m-1) G^{m-2}(0)).
double LowerBoundRatioSeries(const NoiseSpec& spec, int m);

// Guaranteed alpha of alpha-p-Condorcet:
//   RR  e^lambda
//   EXP (1 + e^{lambda/2}) / (1 + e^{-lambda/2})^{m-1}
//   LAP 2 e^lambda (1 - e^{-lambda}/2)^{m-1}
absl::StatusOr<double> AlphaPCondorcet(Mechanism mechanism, double lambda,
                                       int m);

// Largest m for which the LAP or EXP guarantee above is still >= 1.
// Saturates at INT64_MAX. RR is rejected: it is p-Condorcet for every m.
absl::StatusOr<int64_t> PCondorcetMaxM(Mechanism mechanism, double lambda);

// e^{(2-2m)lambda}, the SD-strategyproofness level shared by all three rules.
double AlphaSdSp(double lambda, int m);

struct AxiomDpRelation {
  // No eps-DP rule is alpha-p-Condorcet with alpha above this.
  double alpha_cap;
  // Every eps-DP rule is at least this SD-strategyproof.
  double sdsp_floor;
};

absl::StatusOr<AxiomDpRelation> AxiomDpRelations(double eps);

struct BoundRow {
  Mechanism mechanism;
  double lambda;
  int m;
  double eps_lower;
  double eps_upper;
  double alpha_pcond;
  double alpha_sdsp;
};

struct BoundTable {
  std::vector<BoundRow> rows;
};

// One row per (mechanism, lambda), ordered by mechanism (lap, exp, rr) and
// then by ascending lambda. Duplicate mechanisms and lambdas are collapsed.
absl::StatusOr<BoundTable> EmitCurves(absl::Span<const Mechanism> mechanisms,
                                      absl::Span<const double> lambda_grid,
                                      int m);

inline constexpr char kBoundCsvHeader[] =
    "mechanism,lambda,m,eps_lower,eps_upper,alpha_pcond,alpha_sdsp";

// Header line plus one line per row, 12 significant digits.
std::string BoundTableToCsv(const BoundTable& table);

}  // namespace dpcondorcet

#endif  // DPCONDORCET_BOUNDS_H_
