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

#include "dpcondorcet/mechanisms.h"

#include <cmath>
#include <cstdint>
#include <optional>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/string_view.h"

namespace dpcondorcet {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

// ln(1 + e^x) without overflow.
double Softplus(double x) {
  return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

// Laplace(0, 1/lambda) variate by inversion.
double SampleLaplace(double lambda, Rng& rng) {
  const double u = rng.UniformOpenDouble() - 0.5;
  const double magnitude = -std::log1p(-2.0 * std::fabs(u)) / lambda;
  return u < 0 ? -magnitude : magnitude;
}

}  // namespace

absl::string_view MechanismName(Mechanism mechanism) {
  switch (mechanism) {
    case Mechanism::kLaplace:
      return "lap";
    case Mechanism::kExponential:
      return "exp";
    case Mechanism::kRandomizedResponse:
      return "rr";
  }
  return "unknown";
}

absl::StatusOr<Mechanism> ParseMechanism(absl::string_view name) {
  if (name == "lap") return Mechanism::kLaplace;
  if (name == "exp") return Mechanism::kExponential;
  if (name == "rr") return Mechanism::kRandomizedResponse;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown mechanism '", name, "' (expected lap, exp, rr)"));
}

absl::StatusOr<NoiseSpec> NoiseSpec::Create(Mechanism mechanism,
                                            double lambda) {
  if (!std::isfinite(lambda) || lambda <= 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("lambda must be positive and finite, got ", lambda));
  }
  return NoiseSpec(mechanism, lambda);
}

double EdgeWinProbability(const NoiseSpec& spec, int64_t margin) {
  const double lambda = spec.lambda();
  const double w = static_cast<double>(margin);
  switch (spec.mechanism()) {
    case Mechanism::kLaplace:
      return margin >= 0 ? 1.0 - 0.5 * std::exp(-lambda * w)
                         : 0.5 * std::exp(lambda * w);
    case Mechanism::kExponential: {
      // The upper half is computed directly and the lower half as its
      // complement, so G(w) + G(-w) == 1 exactly.
      const double upper = 1.0 / (1.0 + std::exp(-lambda * std::fabs(w) / 2));
      return margin >= 0 ? upper : 1.0 - upper;
    }
    case Mechanism::kRandomizedResponse: {
      if (margin == 0) return 0.5;
      const double keep = 1.0 / (1.0 + std::exp(-lambda));
      return margin > 0 ? keep : 1.0 - keep;
    }
  }
  return 0.5;
}

double LogEdgeWinProbability(const NoiseSpec& spec, int64_t margin) {
  const double lambda = spec.lambda();
  const double w = static_cast<double>(margin);
  switch (spec.mechanism()) {
    case Mechanism::kLaplace:
      return margin >= 0 ? std::log1p(-0.5 * std::exp(-lambda * w))
                         : lambda * w - kLn2;
    case Mechanism::kExponential:
      return -Softplus(-lambda * w / 2);
    case Mechanism::kRandomizedResponse:
      if (margin == 0) return -kLn2;
      return margin > 0 ? -Softplus(-lambda) : -Softplus(lambda);
  }
  return -kLn2;
}

EdgeProb::EdgeProb(const NoiseSpec& spec, const MajorityMargins& margins)
    : p_(margins.size(), 0.0), log_p_(margins.size(), 0.0) {
  const int m = margins.size();
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      p_(a, b) = EdgeWinProbability(spec, margins(a, b));
      log_p_(a, b) = LogEdgeWinProbability(spec, margins(a, b));
    }
  }
}

absl::StatusOr<EdgeProb> EdgeProb::FromMatrix(const SquareMatrix<double>& p) {
  const int m = p.size();
  EdgeProb result;
  result.p_ = SquareMatrix<double>(m, 0.0);
  result.log_p_ = SquareMatrix<double>(m, 0.0);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (a == b) continue;
      const double x = p(a, b);
      if (!(x > 0.0 && x < 1.0)) {
        return absl::InvalidArgumentError(absl::StrCat(
            "edge probability (", a, ",", b, ") = ", x, " not in (0, 1)"));
      }
      if (std::fabs(x + p(b, a) - 1.0) > 1e-12) {
        return absl::InvalidArgumentError(absl::StrCat(
            "edge probabilities (", a, ",", b, ") are not complementary"));
      }
      result.p_(a, b) = x;
      result.log_p_(a, b) = std::log(x);
    }
  }
  return result;
}

EdgeProb ComputeEdgeProbs(const NoiseSpec& spec,
                          const MajorityMargins& margins) {
  return EdgeProb(spec, margins);
}

Umg SampleNoisyUmg(const NoiseSpec& spec, const MajorityMargins& margins,
                   Rng& rng) {
  const int m = margins.size();
  Umg umg{SquareMatrix<int>(m, 0)};
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      bool a_wins;
      if (spec.mechanism() == Mechanism::kLaplace) {
        double noisy;
        do {
          noisy = static_cast<double>(margins(a, b)) +
                  SampleLaplace(spec.lambda(), rng);
        } while (noisy == 0.0);
        a_wins = noisy > 0.0;
      } else {
        a_wins = rng.UniformDouble() < EdgeWinProbability(spec, margins(a, b));
      }
      umg.u(a, b) = a_wins ? 1 : -1;
      umg.u(b, a) = -umg.u(a, b);
    }
  }
  return umg;
}

absl::StatusOr<RejectionSample> RejectionSampleWinner(
    const NoiseSpec& spec, const MajorityMargins& margins, Rng& rng,
    int64_t max_rounds) {
  if (max_rounds < 1) {
    return absl::InvalidArgumentError("max_rounds must be at least 1");
  }
  for (int64_t round = 1; round <= max_rounds; ++round) {
    std::optional<Alternative> winner =
        CondorcetWinner(SampleNoisyUmg(spec, margins, rng));
    if (winner.has_value()) return RejectionSample{*winner, round};
  }
  return absl::ResourceExhaustedError(absl::StrCat(
      "no Condorcet winner in ", max_rounds, " noisy majority graphs"));
}

absl::StatusOr<RejectionSample> RejectionSampleWinner(
    const NoiseSpec& spec, const Profile& profile, Rng& rng,
    int64_t max_rounds) {
  return RejectionSampleWinner(spec, ProfileMargins(profile), rng, max_rounds);
}

}  // namespace dpcondorcet
