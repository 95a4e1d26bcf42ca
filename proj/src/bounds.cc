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

#include "dpcondorcet/bounds.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace dpcondorcet {

namespace {

absl::Status CheckArgs(double lambda, int m) {
  if (!std::isfinite(lambda) || lambda <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("lambda must be positive and finite, got ", lambda));
  }
  if (m < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("need at least 2 alternatives, got ", m));
  }
  return absl::OkStatus();
}

// ln(1 + e^x) without overflow.
double Softplus(double x) {
  return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

std::string Sig12(double x) { return absl::StrFormat("%.12g", x); }

}  // namespace

double LowerBoundRatio(const NoiseSpec& spec, int m) {
  const double up = EdgeWinProbability(spec, 2);
  const double down = EdgeWinProbability(spec, -2);
  return (std::pow(up, m - 1) - std::pow(down, m - 1)) / (up - down) *
         std::pow(2.0, m - 2) / (m - 1);
}

double LowerBoundRatioSeries(const NoiseSpec& spec, int m) {
  const double up = EdgeWinProbability(spec, 2);
  const double down = EdgeWinProbability(spec, -2);
  const double tie = EdgeWinProbability(spec, 0);
  double sum = 0.0;
  for (int k = 0; k <= m - 2; ++k) {
    sum += std::pow(up, k) * std::pow(down, m - 2 - k);
  }
  return sum / ((m - 1) * std::pow(tie, m - 2));
}

absl::StatusOr<DpBounds> ComputeDpBounds(Mechanism mechanism, double lambda,
                                         int m) {
  if (absl::Status s = CheckArgs(lambda, m); !s.ok()) return s;
  const double linear = (m - 1) * lambda;
  if (mechanism == Mechanism::kRandomizedResponse) {
    return DpBounds{linear, 2 * linear};
  }
  const NoiseSpec spec = *NoiseSpec::Create(mechanism, lambda);
  return DpBounds{std::log(LowerBoundRatio(spec, m)) + linear, 2 * linear};
}

absl::StatusOr<double> AlphaPCondorcet(Mechanism mechanism, double lambda,
                                       int m) {
  if (absl::Status s = CheckArgs(lambda, m); !s.ok()) return s;
  switch (mechanism) {
    case Mechanism::kRandomizedResponse:
      return std::exp(lambda);
    case Mechanism::kExponential:
      return (1 + std::exp(lambda / 2)) /
             std::pow(1 + std::exp(-lambda / 2), m - 1);
    case Mechanism::kLaplace:
      return 2 * std::exp(lambda) * std::pow(1 - std::exp(-lambda) / 2, m - 1);
  }
  return absl::InternalError("unhandled mechanism");
}

absl::StatusOr<int64_t> PCondorcetMaxM(Mechanism mechanism, double lambda) {
  if (absl::Status s = CheckArgs(lambda, 2); !s.ok()) return s;
  double bound;
  switch (mechanism) {
    case Mechanism::kRandomizedResponse:
      return absl::InvalidArgumentError(
          "rr satisfies p-Condorcet for every number of alternatives");
    case Mechanism::kExponential: {
      // ln(e^{l/2} + 1) - l/2 == ln(1 + e^{-l/2}).
      const double top = Softplus(lambda / 2);
      bound = top / std::log1p(std::exp(-lambda / 2)) + 1;
      break;
    }
    case Mechanism::kLaplace:
      // ln 2 - ln(2 - e^{-l}) == -ln(1 - e^{-l}/2).
      bound = (lambda + std::log(2.0)) /
                  -std::log1p(-std::exp(-lambda) / 2) +
              1;
      break;
    default:
      return absl::InternalError("unhandled mechanism");
  }
  if (!(bound < 9.2e18)) return std::numeric_limits<int64_t>::max();
  return static_cast<int64_t>(std::floor(bound));
}

double AlphaSdSp(double lambda, int m) {
  return std::exp((2.0 - 2.0 * m) * lambda);
}

absl::StatusOr<AxiomDpRelation> AxiomDpRelations(double eps) {
  if (std::isnan(eps) || eps < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("epsilon must be non-negative, got ", eps));
  }
  return AxiomDpRelation{std::exp(eps), std::exp(-eps)};
}

absl::StatusOr<BoundTable> EmitCurves(absl::Span<const Mechanism> mechanisms,
                                      absl::Span<const double> lambda_grid,
                                      int m) {
  if (mechanisms.empty()) {
    return absl::InvalidArgumentError("no mechanisms requested");
  }
  if (lambda_grid.empty()) {
    return absl::InvalidArgumentError("empty lambda grid");
  }
  std::vector<Mechanism> mechs(mechanisms.begin(), mechanisms.end());
  std::sort(mechs.begin(), mechs.end());
  mechs.erase(std::unique(mechs.begin(), mechs.end()), mechs.end());
  std::vector<double> grid(lambda_grid.begin(), lambda_grid.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  BoundTable table;
  for (Mechanism mech : mechs) {
    for (double lambda : grid) {
      absl::StatusOr<DpBounds> dp = ComputeDpBounds(mech, lambda, m);
      if (!dp.ok()) return dp.status();
      absl::StatusOr<double> alpha = AlphaPCondorcet(mech, lambda, m);
      if (!alpha.ok()) return alpha.status();
      table.rows.push_back({mech, lambda, m, dp->eps_lower, dp->eps_upper,
                            *alpha, AlphaSdSp(lambda, m)});
    }
  }
  return table;
}

std::string BoundTableToCsv(const BoundTable& table) {
  std::string out = absl::StrCat(kBoundCsvHeader, "\n");
  for (const BoundRow& row : table.rows) {
    absl::StrAppend(&out, MechanismName(row.mechanism), ",", Sig12(row.lambda),
                    ",", row.m, ",", Sig12(row.eps_lower), ",",
                    Sig12(row.eps_upper), ",", Sig12(row.alpha_pcond), ",",
                    Sig12(row.alpha_sdsp), "\n");
  }
  return out;
}

}  // namespace dpcondorcet
