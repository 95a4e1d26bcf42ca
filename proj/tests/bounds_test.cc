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

#include <cmath>
#include <string>
#include <vector>

#include "absl/strings/str_split.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace dpcondorcet {
namespace {

using ::dpcondorcet::testing::AllMechanisms;
using ::dpcondorcet::testing::Spec;
using ::dpcondorcet::testing::Unwrap;
namespace oracle = ::dpcondorcet::testing::oracle;

TEST(DpBoundsTest, RandomizedResponse) {
  const DpBounds b = Unwrap(ComputeDpBounds(Mechanism::kRandomizedResponse, 1.0, 5));
  EXPECT_DOUBLE_EQ(b.eps_lower, 4.0);
  EXPECT_DOUBLE_EQ(b.eps_upper, 8.0);
}

TEST(DpBoundsTest, TwoAlternativesCollapse) {
  for (Mechanism m : AllMechanisms()) {
    for (double lambda : {0.3, 1.0, 2.5}) {
      const DpBounds b = Unwrap(ComputeDpBounds(m, lambda, 2));
      EXPECT_NEAR(b.eps_lower, lambda, 1e-12);
      EXPECT_NEAR(b.eps_upper, 2 * lambda, 1e-12);
    }
  }
}

TEST(DpBoundsTest, ExponentialFiveAlternatives) {
  const double g2 = 1 / (1 + std::exp(-1.0));
  const double gm2 = 1 / (1 + std::exp(1.0));
  const double want =
      std::log((std::pow(g2, 4) - std::pow(gm2, 4)) / (g2 - gm2) * 8 / 4) + 4;
  const DpBounds b = Unwrap(ComputeDpBounds(Mechanism::kExponential, 1.0, 5));
  EXPECT_NEAR(b.eps_lower, want, 1e-12);
  EXPECT_NEAR(b.eps_lower, 4.1936, 1e-4);
  EXPECT_DOUBLE_EQ(b.eps_upper, 8.0);
}

TEST(DpBoundsTest, LaplaceUsesSingleNoiseCdf) {
  const double g2 = oracle::EdgeWin(Mechanism::kLaplace, 1.0, 2);
  const double gm2 = oracle::EdgeWin(Mechanism::kLaplace, 1.0, -2);
  const double want =
      std::log((std::pow(g2, 4) - std::pow(gm2, 4)) / (g2 - gm2) * 8 / 4) + 4;
  EXPECT_NEAR(Unwrap(ComputeDpBounds(Mechanism::kLaplace, 1.0, 5)).eps_lower,
              want, 1e-12);
}

TEST(DpBoundsTest, OrderedOnGrid) {
  for (Mechanism mech : AllMechanisms()) {
    for (double lambda : {0.25, 0.5, 1.0, 2.0}) {
      for (int m : {2, 3, 4, 5, 10, 20}) {
        const DpBounds b = Unwrap(ComputeDpBounds(mech, lambda, m));
        EXPECT_LE(b.eps_lower, b.eps_upper);
        EXPECT_GT(b.eps_lower, 0);
      }
    }
  }
}

TEST(DpBoundsTest, SeriesAgreesWithClosedForm) {
  for (Mechanism mech : {Mechanism::kLaplace, Mechanism::kExponential}) {
    for (double lambda : {0.1, 0.5, 1.0, 2.0}) {
      for (int m = 2; m <= 20; ++m) {
        const NoiseSpec spec = Spec(mech, lambda);
        EXPECT_NEAR(LowerBoundRatio(spec, m), LowerBoundRatioSeries(spec, m),
                    1e-12 * LowerBoundRatio(spec, m));
      }
    }
  }
}

TEST(DpBoundsTest, Errors) {
  EXPECT_FALSE(ComputeDpBounds(Mechanism::kLaplace, 0.0, 3).ok());
  EXPECT_FALSE(ComputeDpBounds(Mechanism::kLaplace, 1.0, 1).ok());
}

TEST(AlphaPCondorcetTest, Values) {
  EXPECT_NEAR(Unwrap(AlphaPCondorcet(Mechanism::kRandomizedResponse, 1.0, 7)),
              std::exp(1.0), 1e-15);
  EXPECT_NEAR(Unwrap(AlphaPCondorcet(Mechanism::kExponential, 1.0, 5)),
              (1 + std::exp(0.5)) / std::pow(1 + std::exp(-0.5), 4), 1e-12);
  EXPECT_NEAR(Unwrap(AlphaPCondorcet(Mechanism::kExponential, 1.0, 5)), 0.3976,
              1e-4);
  EXPECT_NEAR(Unwrap(AlphaPCondorcet(Mechanism::kLaplace, 1.0, 4)),
              2 * std::exp(1.0) * std::pow(1 - std::exp(-1.0) / 2, 3), 1e-12);
  EXPECT_GT(Unwrap(AlphaPCondorcet(Mechanism::kLaplace, 40.0, 10)), 1e16);
  for (int m = 2; m < 30; ++m) {
    EXPECT_EQ(Unwrap(AlphaPCondorcet(Mechanism::kRandomizedResponse, 0.7, m)),
              Unwrap(AlphaPCondorcet(Mechanism::kRandomizedResponse, 0.7, 2)));
  }
}

TEST(PCondorcetMaxMTest, ConsistentWithAlphaCrossing) {
  for (Mechanism mech : {Mechanism::kLaplace, Mechanism::kExponential}) {
    for (double lambda : {0.1, 0.5, 1.0, 2.0, 3.0, 5.0}) {
      const int64_t max_m = Unwrap(PCondorcetMaxM(mech, lambda));
      ASSERT_GE(max_m, 2);
      ASSERT_LT(max_m, 100000);
      for (int m = 2; m <= max_m; ++m) {
        EXPECT_GE(Unwrap(AlphaPCondorcet(mech, lambda, m)), 1.0 - 1e-12)
            << MechanismName(mech) << " " << lambda << " " << m;
      }
      EXPECT_LT(Unwrap(AlphaPCondorcet(mech, lambda, max_m + 1)), 1.0)
          << MechanismName(mech) << " " << lambda;
    }
  }
}

TEST(PCondorcetMaxMTest, GrowsWithLambdaAndRejectsRr) {
  EXPECT_GT(Unwrap(PCondorcetMaxM(Mechanism::kExponential, 20.0)),
            Unwrap(PCondorcetMaxM(Mechanism::kExponential, 2.0)));
  EXPECT_GT(Unwrap(PCondorcetMaxM(Mechanism::kLaplace, 30.0)), 1000000);
  EXPECT_FALSE(PCondorcetMaxM(Mechanism::kRandomizedResponse, 1.0).ok());
}

TEST(AxiomDpRelationsTest, Values) {
  const AxiomDpRelation zero = Unwrap(AxiomDpRelations(0.0));
  EXPECT_EQ(zero.alpha_cap, 1.0);
  EXPECT_EQ(zero.sdsp_floor, 1.0);
  const AxiomDpRelation one = Unwrap(AxiomDpRelations(1.0));
  EXPECT_NEAR(one.alpha_cap, std::exp(1.0), 1e-15);
  EXPECT_NEAR(one.sdsp_floor, std::exp(-1.0), 1e-15);
  for (double eps = 0.0; eps <= 50.0; eps += 0.5) {
    const AxiomDpRelation r = Unwrap(AxiomDpRelations(eps));
    EXPECT_NEAR(r.alpha_cap * r.sdsp_floor, 1.0, 1e-12);
  }
  EXPECT_FALSE(AxiomDpRelations(-0.1).ok());
}

TEST(AlphaSdSpTest, Value) {
  EXPECT_NEAR(AlphaSdSp(1.0, 3), std::exp(-4.0), 1e-18);
  EXPECT_EQ(AlphaSdSp(0.5, 1), 1.0);
}

TEST(EmitCurvesTest, RowsAndOrder) {
  const std::vector<Mechanism> mechs = {Mechanism::kRandomizedResponse,
                                        Mechanism::kLaplace,
                                        Mechanism::kExponential,
                                        Mechanism::kLaplace};
  const std::vector<double> grid = {2.0, 0.5, 1.0, 0.5};
  const BoundTable t = Unwrap(EmitCurves(mechs, grid, 5));
  ASSERT_EQ(t.rows.size(), 9u);
  EXPECT_EQ(t.rows[0].mechanism, Mechanism::kLaplace);
  EXPECT_EQ(t.rows[3].mechanism, Mechanism::kExponential);
  EXPECT_EQ(t.rows[6].mechanism, Mechanism::kRandomizedResponse);
  for (size_t i = 0; i < t.rows.size(); ++i) {
    const BoundRow& r = t.rows[i];
    EXPECT_LT(r.eps_lower, r.eps_upper);
    if (i % 3 > 0) {
      EXPECT_GT(r.eps_upper, t.rows[i - 1].eps_upper);
    }
    if (r.mechanism == Mechanism::kRandomizedResponse) {
      EXPECT_DOUBLE_EQ(r.eps_upper / r.eps_lower, 2.0);
    }
    EXPECT_NEAR(r.alpha_sdsp, std::exp(-8 * r.lambda), 1e-15);
  }
}

TEST(EmitCurvesTest, Errors) {
  const std::vector<Mechanism> mechs = {Mechanism::kLaplace};
  EXPECT_FALSE(EmitCurves(mechs, {}, 5).ok());
  EXPECT_FALSE(EmitCurves({}, std::vector<double>{1.0}, 5).ok());
  EXPECT_FALSE(EmitCurves(mechs, std::vector<double>{-1.0}, 5).ok());
  EXPECT_FALSE(EmitCurves(mechs, std::vector<double>{1.0}, 1).ok());
}

TEST(EmitCurvesTest, Csv) {
  const std::vector<Mechanism> mechs = {Mechanism::kRandomizedResponse};
  const std::string csv =
      BoundTableToCsv(Unwrap(EmitCurves(mechs, std::vector<double>{1.0}, 5)));
  const std::vector<std::string> lines =
      absl::StrSplit(csv, '\n', absl::SkipEmpty());
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], kBoundCsvHeader);
  EXPECT_EQ(lines[1], "rr,1,5,4,8,2.71828182846,0.000335462627903");
}

}  // namespace
}  // namespace dpcondorcet
