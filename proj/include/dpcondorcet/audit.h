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

// Ground-truth measurement of privacy and axiom satisfaction.
//
// Every check runs over a ProfileSpace: either all of L(A)^n for a small
// (m, n), or an explicit list of profiles. Checks that compare two profiles
// (privacy, monotonicity, strategyproofness, participation) derive the second
// profile from the first, so an explicit list still explores every
// replacement or removal of its profiles. Reports carry the space so a pass
// is never read as a proof for unbounded m or n.

#ifndef DPCONDORCET_AUDIT_H_
#define DPCONDORCET_AUDIT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "dpcondorcet/ballots.h"
#include "dpcondorcet/mechanisms.h"

namespace dpcondorcet {

// Feasibility caps for exhaustive spaces.
inline constexpr uint64_t kMaxExhaustiveProfiles = 1'000'000;
inline constexpr uint64_t kMaxNeighborPairs = 20'000'000;
// Subsets of outcomes are enumerated for the privacy audit up to this m.
inline constexpr int kMaxSubsetAlternatives = 4;

// Absolute tolerance for "equal probability" in the participation axioms.
inline constexpr double kTieTolerance = 1e-9;
// Absolute slack for the pairwise probability comparisons of p-Pareto and
// a-monotonicity, and relative slack for alpha verdicts.
inline constexpr double kComparisonTolerance = 1e-12;

class ProfileSpace {
 public:
  // All (m!)^n profiles. Fails when that exceeds kMaxExhaustiveProfiles.
  static absl::StatusOr<ProfileSpace> Exhaustive(int m, int n);

  // An explicit, non-empty list over one common alternative set.
  static absl::StatusOr<ProfileSpace> Targeted(std::vector<Profile> profiles);

  bool exhaustive() const { return exhaustive_; }
  int num_alternatives() const { return m_; }
  // For targeted spaces, the voter counts of the listed profiles.
  int min_voters() const { return min_n_; }
  int max_voters() const { return max_n_; }
  uint64_t size() const;

  Profile at(uint64_t index) const;

 private:
  ProfileSpace() = default;

  bool exhaustive_ = false;
  int m_ = 0;
  int min_n_ = 0;
  int max_n_ = 0;
  std::optional<ProfileStream> stream_;
  std::vector<Profile> profiles_;
};

struct SpaceDescriptor {
  bool exhaustive;
  int m;
  int min_n;
  int max_n;
  uint64_t profiles;
};

SpaceDescriptor Describe(const ProfileSpace& space);

// ---------------------------------------------------------------------------
// Exact differential privacy.

struct EdpWitness {
  Profile profile;
  int voter;
  LinearOrder replacement;
  // The outcome set O attaining the maximum; a singleton in practice.
  std::vector<Alternative> outcome;
};

struct PrivacyAuditReport {
  Mechanism mechanism;
  double lambda;
  SpaceDescriptor space;
  double eps_exact;
  EdpWitness witness;
  double eps_lower_claimed;
  double eps_upper_claimed;
  uint64_t pairs_checked;
};

// max over P in the space, single-vote replacements P', and outcome sets O of
// ln(P[r(P) in O] / P[r(P') in O]). Outcome sets range over all non-empty
// subsets when m <= kMaxSubsetAlternatives, otherwise over singletons.
absl::StatusOr<PrivacyAuditReport> AuditEdp(const NoiseSpec& spec,
                                            const ProfileSpace& space);
absl::StatusOr<PrivacyAuditReport> AuditEdp(const NoiseSpec& spec, int m,
                                            int n);

// ln ratio of the witness pair on its outcome set.
double ReplayEdpWitness(const NoiseSpec& spec, const EdpWitness& witness);

// ---------------------------------------------------------------------------
// Voting axioms.

enum class Axiom {
  kPCondorcet,
  kAlphaPCondorcet,
  kPPareto,
  kAMonotonicity,
  kAlphaSdSp,
  kLexiParticipation,
  kStrongLexiParticipation,
};

absl::string_view AxiomId(Axiom axiom);
// Accepts the ids above plus the short forms "lexi" and "strong-lexi".
absl::StatusOr<Axiom> ParseAxiom(absl::string_view id);

// Which order indexes the manipulated side of the SD-strategyproofness sum.
enum class OrderConvention {
  // Truthful order on both sides.
  kTruthful,
  // Truthful order on the left, reported order on the right.
  kReportedOnRight,
};

absl::string_view OrderConventionName(OrderConvention convention);
absl::StatusOr<OrderConvention> ParseOrderConvention(absl::string_view name);

struct AxiomWitness {
  Profile profile;
  std::optional<int> voter;
  // Replacement vote (monotonicity, strategyproofness).
  std::optional<LinearOrder> replacement;
  // Alternatives named by the violated inequality, e.g. {CW, a}.
  std::vector<Alternative> alternatives;
  // The two sides of the inequality that failed (or the extremal instance).
  double lhs;
  double rhs;
  std::string description;
};

struct AxiomReport {
  Axiom axiom;
  Mechanism mechanism;
  double lambda;
  std::optional<double> alpha_required;
  std::optional<OrderConvention> convention;
  bool pass;
  // Present for the alpha-parameterised axioms. +inf when nothing was
  // checkable (vacuous pass).
  std::optional<double> measured_alpha;
  // Present iff the verdict is a failure.
  std::optional<AxiomWitness> witness;
  SpaceDescriptor space;
  uint64_t instances_checked;
};

// P[CW] >= alpha * P[a] for every profile with a Condorcet winner and every
// a != CW. measured_alpha = min P[CW] / max_{a != CW} P[a].
absl::StatusOr<AxiomReport> CheckPCondorcet(const NoiseSpec& spec,
                                            const ProfileSpace& space,
                                            double alpha = 1.0);

// P[a] >= P[b] whenever every voter ranks a above b.
absl::StatusOr<AxiomReport> CheckPPareto(const NoiseSpec& spec,
                                         const ProfileSpace& space);

// Pushing a up in one vote never lowers P[a].
absl::StatusOr<AxiomReport> CheckAMonotonicity(const NoiseSpec& spec,
                                               const ProfileSpace& space);

// Ratio of upper-set win probabilities, truthful profile over manipulated
// profile, for the upper set {b : b above a} (see OrderConvention).
// nullopt when the denominator set is empty.
std::optional<double> SdSpRatio(const NoiseSpec& spec, const Profile& profile,
                                int voter, const LinearOrder& replacement,
                                Alternative a, OrderConvention convention);

// measured_alpha = min SdSpRatio over every profile, voter, replacement
// different from the truthful vote, and alternative.
absl::StatusOr<AxiomReport> CheckSdSp(
    const NoiseSpec& spec, const ProfileSpace& space, double alpha,
    OrderConvention convention = OrderConvention::kTruthful);

// Removing a voter compared lexicographically along that voter's ranking.
// Requires every profile to have at least two voters.
absl::StatusOr<AxiomReport> CheckLexiParticipation(const NoiseSpec& spec,
                                                   const ProfileSpace& space,
                                                   bool strong);

// Re-evaluates a failed report's witness from scratch; true when the witness
// still violates the axiom.
bool WitnessViolates(const NoiseSpec& spec, const AxiomReport& report);

// ---------------------------------------------------------------------------
// Worst-case neighbouring profiles for the privacy lower bounds.

struct NeighborPair {
  Profile first;
  Profile second;
  Alternative outcome;
};

// m = 2k alternatives. `first` has k votes a1 > ... > am, k-1 votes
// a_{m-1} > ... > a1 > am and one vote am > ... > a1; `second` replaces the
// last vote by a1 > ... > am. Each extra pair adds one a1 > ... > am and one
// a_{m-1} > ... > a1 > am vote to both, widening every margin against am by
// 2 without touching the others. The outcome is am.
absl::StatusOr<NeighborPair> LapExpLowerBoundPair(int m, int extra_pairs);

// m = 2k+1 alternatives. `first` has k votes a1 > ... > am and k+1 reversed
// votes; `second` turns one reversed vote forward. The outcome is am.
absl::StatusOr<NeighborPair> RrLowerBoundPair(int m);

// ln(P[r(first) = outcome] / P[r(second) = outcome]).
double NeighborLogRatio(const NoiseSpec& spec, const NeighborPair& pair);

}  // namespace dpcondorcet

#endif  // DPCONDORCET_AUDIT_H_
