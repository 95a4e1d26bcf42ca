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

#include "dpcondorcet/audit.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/string_view.h"
#include "dpcondorcet/bounds.h"
#include "dpcondorcet/distribution.h"
#include "dpcondorcet/tally.h"

namespace dpcondorcet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Normalized log probabilities of the winner distribution.
std::vector<double> LogProbs(const NoiseSpec& spec,
                             const MajorityMargins& margins) {
  std::vector<double> scores = LogScores(EdgeProb(spec, margins));
  const double total = LogSumExp(scores);
  for (double& s : scores) s -= total;
  return scores;
}

std::vector<double> Exp(const std::vector<double>& logs) {
  std::vector<double> out;
  out.reserve(logs.size());
  for (double x : logs) out.push_back(std::exp(x));
  return out;
}

MajorityMargins Replaced(const MajorityMargins& margins,
                         const LinearOrder& before, const LinearOrder& after) {
  MajorityMargins out = margins;
  AccumulateVote(before, -1, out);
  AccumulateVote(after, +1, out);
  return out;
}

MajorityMargins Removed(const MajorityMargins& margins,
                        const LinearOrder& vote) {
  MajorityMargins out = margins;
  AccumulateVote(vote, -1, out);
  return out;
}

uint64_t Factorial(int m) {
  uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// Total single-vote replacements over the space, saturating.
uint64_t NeighborCount(const ProfileSpace& space) {
  const uint64_t per_voter = Factorial(space.num_alternatives()) - 1;
  const uint64_t limit = std::numeric_limits<uint64_t>::max();
  const uint64_t voters = static_cast<uint64_t>(space.max_voters());
  if (space.size() > limit / std::max<uint64_t>(1, voters * per_voter)) {
    return limit;
  }
  return space.size() * voters * per_voter;
}

absl::Status CheckNeighborBudget(const ProfileSpace& space) {
  if (space.num_alternatives() > 8) {
    return absl::InvalidArgumentError(
        "replacement enumeration supports at most 8 alternatives");
  }
  const uint64_t pairs = NeighborCount(space);
  if (pairs > kMaxNeighborPairs) {
    return absl::ResourceExhaustedError(
        absl::StrCat("space has ", pairs, " neighbouring pairs, above the ",
                     kMaxNeighborPairs, " budget"));
  }
  return absl::OkStatus();
}

// ln sum_{a in set} exp(log_probs[a]).
double LogMass(const std::vector<double>& log_probs,
               const std::vector<Alternative>& set) {
  std::vector<double> picked;
  picked.reserve(set.size());
  for (Alternative a : set) picked.push_back(log_probs[a]);
  return LogSumExp(picked);
}

std::vector<std::vector<Alternative>> OutcomeSets(int m) {
  std::vector<std::vector<Alternative>> sets;
  if (m <= kMaxSubsetAlternatives) {
    for (uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<Alternative> set;
      for (int a = 0; a < m; ++a) {
        if (mask & (1u << a)) set.push_back(a);
      }
      sets.push_back(std::move(set));
    }
  } else {
    for (int a = 0; a < m; ++a) sets.push_back({a});
  }
  return sets;
}

bool MeetsAlpha(double measured, double alpha) {
  return measured >= alpha * (1.0 - kComparisonTolerance);
}

AxiomReport NewReport(Axiom axiom, const NoiseSpec& spec,
                      const ProfileSpace& space) {
  AxiomReport report{};
  report.axiom = axiom;
  report.mechanism = spec.mechanism();
  report.lambda = spec.lambda();
  report.pass = true;
  report.space = Describe(space);
  report.instances_checked = 0;
  return report;
}

enum class LexiOutcome { kImproved, kAllTied, kHarmed };

struct LexiWalk {
  LexiOutcome outcome;
  Alternative decisive;  // first non-tied alternative, or the last one
  double with_vote;
  double without_vote;
};

LexiWalk WalkLexicographically(const LinearOrder& vote,
                               const std::vector<double>& with_vote,
                               const std::vector<double>& without_vote) {
  for (Alternative a : vote.ranking()) {
    const double p = with_vote[a];
    const double q = without_vote[a];
    if (std::fabs(p - q) <= kTieTolerance) continue;
    return {p > q ? LexiOutcome::kImproved : LexiOutcome::kHarmed, a, p, q};
  }
  const Alternative last = vote.at(vote.size() - 1);
  return {LexiOutcome::kAllTied, last, with_vote[last], without_vote[last]};
}

struct UpperMasses {
  double truthful;
  double manipulated;
};

// Upper-set masses for SdSpRatio. nullopt when the denominator set is empty.
std::optional<UpperMasses> UpperSetMasses(const std::vector<double>& truthful_probs,
                                    const std::vector<double>& manipulated_probs,
                                    const LinearOrder& truthful,
                                    const LinearOrder& reported, Alternative a,
                                    OrderConvention convention) {
  const LinearOrder& right =
      convention == OrderConvention::kTruthful ? truthful : reported;
  double numerator = 0.0;
  double denominator = 0.0;
  bool any_right = false;
  for (int b = 0; b < truthful.size(); ++b) {
    if (truthful.Prefers(b, a)) numerator += truthful_probs[b];
    if (right.Prefers(b, a)) {
      denominator += manipulated_probs[b];
      any_right = true;
    }
  }
  if (!any_right) return std::nullopt;
  return UpperMasses{numerator, denominator};
}

}  // namespace

// ---------------------------------------------------------------------------
// ProfileSpace

absl::StatusOr<ProfileSpace> ProfileSpace::Exhaustive(int m, int n) {
  if (m < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("need at least 2 alternatives, got ", m));
  }
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("need at least 1 voter, got ", n));
  }
  if (m > 8) {
    return absl::ResourceExhaustedError(
        absl::StrCat("exhaustive spaces support at most 8 alternatives, got ",
                     m));
  }
  ProfileStream stream(m, n);
  if (stream.size() > kMaxExhaustiveProfiles) {
    return absl::ResourceExhaustedError(absl::StrCat(
        "L(A)^n has ", stream.size(), " profiles for m=", m, ", n=", n,
        "; the exhaustive limit is ", kMaxExhaustiveProfiles));
  }
  ProfileSpace space;
  space.exhaustive_ = true;
  space.m_ = m;
  space.min_n_ = n;
  space.max_n_ = n;
  space.stream_.emplace(std::move(stream));
  return space;
}

absl::StatusOr<ProfileSpace> ProfileSpace::Targeted(
    std::vector<Profile> profiles) {
  if (profiles.empty()) {
    return absl::InvalidArgumentError("targeted space needs a profile");
  }
  const auto labels = profiles.front().labels();
  for (const Profile& p : profiles) {
    if (!std::equal(labels.begin(), labels.end(), p.labels().begin(),
                    p.labels().end())) {
      return absl::InvalidArgumentError(
          "targeted profiles must share one alternative set");
    }
  }
  ProfileSpace space;
  space.exhaustive_ = false;
  space.m_ = profiles.front().num_alternatives();
  space.min_n_ = std::numeric_limits<int>::max();
  space.max_n_ = 0;
  for (const Profile& p : profiles) {
    space.min_n_ = std::min(space.min_n_, p.num_voters());
    space.max_n_ = std::max(space.max_n_, p.num_voters());
  }
  space.profiles_ = std::move(profiles);
  return space;
}

uint64_t ProfileSpace::size() const {
  return exhaustive_ ? stream_->size() : profiles_.size();
}

Profile ProfileSpace::at(uint64_t index) const {
  return exhaustive_ ? stream_->At(index) : profiles_[index];
}

SpaceDescriptor Describe(const ProfileSpace& space) {
  return {space.exhaustive(), space.num_alternatives(), space.min_voters(),
          space.max_voters(), space.size()};
}

// ---------------------------------------------------------------------------
// Exact DP

absl::StatusOr<PrivacyAuditReport> AuditEdp(const NoiseSpec& spec,
                                            const ProfileSpace& space) {
  if (absl::Status s = CheckNeighborBudget(space); !s.ok()) return s;
  const int m = space.num_alternatives();
  const std::vector<LinearOrder> orders = AllOrders(m);
  const std::vector<std::vector<Alternative>> sets = OutcomeSets(m);

  double best = -kInf;
  std::optional<EdpWitness> witness;
  uint64_t pairs = 0;
  for (uint64_t i = 0; i < space.size(); ++i) {
    const Profile profile = space.at(i);
    const MajorityMargins margins = ProfileMargins(profile);
    const std::vector<double> lp = LogProbs(spec, margins);
    std::vector<double> mass(sets.size());
    for (size_t s = 0; s < sets.size(); ++s) mass[s] = LogMass(lp, sets[s]);

    for (int j = 0; j < profile.num_voters(); ++j) {
      for (const LinearOrder& order : orders) {
        if (order == profile.vote(j)) continue;
        ++pairs;
        const std::vector<double> lq =
            LogProbs(spec, Replaced(margins, profile.vote(j), order));
        for (size_t s = 0; s < sets.size(); ++s) {
          const double ratio = mass[s] - LogMass(lq, sets[s]);
          if (ratio > best) {
            best = ratio;
            witness = EdpWitness{profile, j, order, sets[s]};
          }
        }
      }
    }
  }
  if (!witness.has_value()) {
    return absl::InvalidArgumentError("space has no neighbouring pairs");
  }
  absl::StatusOr<DpBounds> claimed =
      ComputeDpBounds(spec.mechanism(), spec.lambda(), m);
  if (!claimed.ok()) return claimed.status();
  return PrivacyAuditReport{spec.mechanism(),
                            spec.lambda(),
                            Describe(space),
                            best,
                            *std::move(witness),
                            claimed->eps_lower,
                            claimed->eps_upper,
                            pairs};
}

absl::StatusOr<PrivacyAuditReport> AuditEdp(const NoiseSpec& spec, int m,
                                            int n) {
  if (m > kMaxSubsetAlternatives) {
    return absl::InvalidArgumentError(absl::StrCat(
        "exhaustive privacy audits support m <= ", kMaxSubsetAlternatives));
  }
  absl::StatusOr<ProfileSpace> space = ProfileSpace::Exhaustive(m, n);
  if (!space.ok()) return space.status();
  return AuditEdp(spec, *space);
}

double ReplayEdpWitness(const NoiseSpec& spec, const EdpWitness& witness) {
  const Profile neighbor =
      *ReplaceVote(witness.profile, witness.voter, witness.replacement);
  const std::vector<double> lp = LogProbs(spec, ProfileMargins(witness.profile));
  const std::vector<double> lq = LogProbs(spec, ProfileMargins(neighbor));
  return LogMass(lp, witness.outcome) - LogMass(lq, witness.outcome);
}

// ---------------------------------------------------------------------------
// Axioms

absl::string_view AxiomId(Axiom axiom) {
  switch (axiom) {
    case Axiom::kPCondorcet:
      return "p-condorcet";
    case Axiom::kAlphaPCondorcet:
      return "alpha-p-condorcet";
    case Axiom::kPPareto:
      return "p-pareto";
    case Axiom::kAMonotonicity:
      return "a-monotonicity";
    case Axiom::kAlphaSdSp:
      return "alpha-sd-sp";
    case Axiom::kLexiParticipation:
      return "lexi-participation";
    case Axiom::kStrongLexiParticipation:
      return "strong-lexi-participation";
  }
  return "unknown";
}

absl::StatusOr<Axiom> ParseAxiom(absl::string_view id) {
  for (Axiom axiom :
       {Axiom::kPCondorcet, Axiom::kAlphaPCondorcet, Axiom::kPPareto,
        Axiom::kAMonotonicity, Axiom::kAlphaSdSp, Axiom::kLexiParticipation,
        Axiom::kStrongLexiParticipation}) {
    if (id == AxiomId(axiom)) return axiom;
  }
  if (id == "lexi") return Axiom::kLexiParticipation;
  if (id == "strong-lexi") return Axiom::kStrongLexiParticipation;
  if (id == "sd-sp") return Axiom::kAlphaSdSp;
  return absl::InvalidArgumentError(absl::StrCat("unknown axiom '", id, "'"));
}

absl::string_view OrderConventionName(OrderConvention convention) {
  return convention == OrderConvention::kTruthful ? "truthful" : "def8";
}

absl::StatusOr<OrderConvention> ParseOrderConvention(absl::string_view name) {
  if (name == "truthful") return OrderConvention::kTruthful;
  if (name == "def8") return OrderConvention::kReportedOnRight;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown order convention '", name,
                   "' (expected truthful, def8)"));
}

absl::StatusOr<AxiomReport> CheckPCondorcet(const NoiseSpec& spec,
                                            const ProfileSpace& space,
                                            double alpha) {
  if (!(alpha > 0) || !std::isfinite(alpha)) {
    return absl::InvalidArgumentError("alpha must be positive and finite");
  }
  AxiomReport report = NewReport(
      alpha == 1.0 ? Axiom::kPCondorcet : Axiom::kAlphaPCondorcet, spec,
      space);
  report.alpha_required = alpha;

  double measured = kInf;
  std::optional<AxiomWitness> worst;
  for (uint64_t i = 0; i < space.size(); ++i) {
    const Profile profile = space.at(i);
    const MajorityMargins margins = ProfileMargins(profile);
    const std::optional<Alternative> cw = CondorcetWinner(ComputeUmg(margins));
    if (!cw.has_value()) continue;
    ++report.instances_checked;
    const std::vector<double> lp = LogProbs(spec, margins);
    Alternative rival = *cw == 0 ? 1 : 0;
    for (int a = 0; a < profile.num_alternatives(); ++a) {
      if (a != *cw && lp[a] > lp[rival]) rival = a;
    }
    const double ratio = std::exp(lp[*cw] - lp[rival]);
    if (ratio < measured) {
      measured = ratio;
      worst = AxiomWitness{profile,
                           std::nullopt,
                           std::nullopt,
                           {*cw, rival},
                           std::exp(lp[*cw]),
                           std::exp(lp[rival]),
                           "P[CW] vs the most likely other alternative"};
    }
  }
  report.measured_alpha = measured;
  report.pass = MeetsAlpha(measured, alpha);
  if (!report.pass) report.witness = std::move(worst);
  return report;
}

absl::StatusOr<AxiomReport> CheckPPareto(const NoiseSpec& spec,
                                         const ProfileSpace& space) {
  AxiomReport report = NewReport(Axiom::kPPareto, spec, space);
  for (uint64_t i = 0; i < space.size(); ++i) {
    const Profile profile = space.at(i);
    const PairwiseTally tally = ComputePairwiseTally(profile);
    std::vector<double> probs;
    for (int a = 0; a < profile.num_alternatives(); ++a) {
      for (int b = 0; b < profile.num_alternatives(); ++b) {
        if (a == b || tally(a, b) != profile.num_voters()) continue;
        if (probs.empty()) probs = Exp(LogProbs(spec, ComputeMargins(tally)));
        ++report.instances_checked;
        if (probs[a] < probs[b] - kComparisonTolerance && report.pass) {
          report.pass = false;
          report.witness = AxiomWitness{
              profile, std::nullopt, std::nullopt, {a, b}, probs[a], probs[b],
              "P[a] < P[b] although every voter ranks a above b"};
        }
      }
    }
  }
  return report;
}

absl::StatusOr<AxiomReport> CheckAMonotonicity(const NoiseSpec& spec,
                                               const ProfileSpace& space) {
  AxiomReport report = NewReport(Axiom::kAMonotonicity, spec, space);
  for (uint64_t i = 0; i < space.size(); ++i) {
    const Profile profile = space.at(i);
    const MajorityMargins margins = ProfileMargins(profile);
    const std::vector<double> probs = Exp(LogProbs(spec, margins));
    for (int j = 0; j < profile.num_voters(); ++j) {
      for (Alternative a = 0; a < profile.num_alternatives(); ++a) {
        for (const LinearOrder& pushed :
             EnumeratePushups(profile.vote(j), a)) {
          ++report.instances_checked;
          const double after = std::exp(
              LogProbs(spec, Replaced(margins, profile.vote(j), pushed))[a]);
          if (after < probs[a] - kComparisonTolerance && report.pass) {
            report.pass = false;
            report.witness = AxiomWitness{
                profile, j, pushed, {a}, after, probs[a],
                "pushing a up in one vote lowered P[a]"};
          }
        }
      }
    }
  }
  return report;
}

std::optional<double> SdSpRatio(const NoiseSpec& spec, const Profile& profile,
                                int voter, const LinearOrder& replacement,
                                Alternative a, OrderConvention convention) {
  const MajorityMargins margins = ProfileMargins(profile);
  const std::vector<double> truthful = Exp(LogProbs(spec, margins));
  const std::vector<double> manipulated = Exp(
      LogProbs(spec, Replaced(margins, profile.vote(voter), replacement)));
  const std::optional<UpperMasses> masses = UpperSetMasses(
      truthful, manipulated, profile.vote(voter), replacement, a, convention);
  if (!masses.has_value()) return std::nullopt;
  return masses->truthful / masses->manipulated;
}

absl::StatusOr<AxiomReport> CheckSdSp(const NoiseSpec& spec,
                                      const ProfileSpace& space, double alpha,
                                      OrderConvention convention) {
  if (!(alpha >= 0) || !std::isfinite(alpha)) {
    return absl::InvalidArgumentError("alpha must be non-negative and finite");
  }
  if (absl::Status s = CheckNeighborBudget(space); !s.ok()) return s;
  AxiomReport report = NewReport(Axiom::kAlphaSdSp, spec, space);
  report.alpha_required = alpha;
  report.convention = convention;

  const std::vector<LinearOrder> orders = AllOrders(space.num_alternatives());
  double measured = kInf;
  std::optional<AxiomWitness> worst;
  for (uint64_t i = 0; i < space.size(); ++i) {
    const Profile profile = space.at(i);
    const MajorityMargins margins = ProfileMargins(profile);
    const std::vector<double> truthful = Exp(LogProbs(spec, margins));
    for (int j = 0; j < profile.num_voters(); ++j) {
      const LinearOrder& vote = profile.vote(j);
      for (const LinearOrder& reported : orders) {
        if (reported == vote) continue;
        const std::vector<double> manipulated =
            Exp(LogProbs(spec, Replaced(margins, vote, reported)));
        for (Alternative a = 0; a < profile.num_alternatives(); ++a) {
          const std::optional<UpperMasses> masses = UpperSetMasses(
              truthful, manipulated, vote, reported, a, convention);
          if (!masses.has_value()) continue;
          ++report.instances_checked;
          const double ratio = masses->truthful / masses->manipulated;
          if (ratio < measured) {
            measured = ratio;
            worst = AxiomWitness{profile,
                                 j,
                                 reported,
                                 {a},
                                 masses->truthful,
                                 masses->manipulated,
                                 "upper-set mass, truthful vs manipulated"};
          }
        }
      }
    }
  }
  report.measured_alpha = measured;
  report.pass = MeetsAlpha(measured, alpha);
  if (!report.pass) report.witness = std::move(worst);
  return report;
}

absl::StatusOr<AxiomReport> CheckLexiParticipation(const NoiseSpec& spec,
                                                   const ProfileSpace& space,
                                                   bool strong) {
  if (space.min_voters() < 2) {
    return absl::InvalidArgumentError(
        "participation checks need at least 2 voters per profile");
  }
  AxiomReport report = NewReport(strong ? Axiom::kStrongLexiParticipation
                                        : Axiom::kLexiParticipation,
                                 spec, space);
  for (uint64_t i = 0; i < space.size(); ++i) {
    const Profile profile = space.at(i);
    const MajorityMargins margins = ProfileMargins(profile);
    const std::vector<double> with_vote = Exp(LogProbs(spec, margins));
    for (int j = 0; j < profile.num_voters(); ++j) {
      ++report.instances_checked;
      const std::vector<double> without_vote =
          Exp(LogProbs(spec, Removed(margins, profile.vote(j))));
      const LexiWalk walk =
          WalkLexicographically(profile.vote(j), with_vote, without_vote);
      const bool violated =
          walk.outcome == LexiOutcome::kHarmed ||
          (strong && walk.outcome == LexiOutcome::kAllTied);
      if (violated && report.pass) {
        report.pass = false;
        report.witness = AxiomWitness{
            profile,
            j,
            std::nullopt,
            {walk.decisive},
            walk.with_vote,
            walk.without_vote,
            walk.outcome == LexiOutcome::kHarmed
                ? "voting lowers the first non-tied alternative"
                : "voting leaves every alternative's probability unchanged"};
      }
    }
  }
  return report;
}

bool WitnessViolates(const NoiseSpec& spec, const AxiomReport& report) {
  if (!report.witness.has_value()) return false;
  const AxiomWitness& w = *report.witness;
  const MajorityMargins margins = ProfileMargins(w.profile);
  const std::vector<double> probs = Exp(LogProbs(spec, margins));
  switch (report.axiom) {
    case Axiom::kPCondorcet:
    case Axiom::kAlphaPCondorcet: {
      const std::optional<Alternative> cw =
          CondorcetWinner(ComputeUmg(margins));
      if (!cw.has_value() || w.alternatives.size() != 2 ||
          w.alternatives[0] != *cw) {
        return false;
      }
      return !MeetsAlpha(probs[*cw] / probs[w.alternatives[1]],
                         report.alpha_required.value_or(1.0));
    }
    case Axiom::kPPareto: {
      const Alternative a = w.alternatives[0];
      const Alternative b = w.alternatives[1];
      for (const LinearOrder& vote : w.profile.votes()) {
        if (!vote.Prefers(a, b)) return false;
      }
      return probs[a] < probs[b] - kComparisonTolerance;
    }
    case Axiom::kAMonotonicity: {
      const Alternative a = w.alternatives[0];
      const std::vector<LinearOrder> pushups =
          EnumeratePushups(w.profile.vote(*w.voter), a);
      if (std::find(pushups.begin(), pushups.end(), *w.replacement) ==
          pushups.end()) {
        return false;
      }
      const Profile after =
          *ReplaceVote(w.profile, *w.voter, *w.replacement);
      return ComputeWinnerDistribution(spec, after).probs[a] <
             probs[a] - kComparisonTolerance;
    }
    case Axiom::kAlphaSdSp: {
      const std::optional<double> ratio =
          SdSpRatio(spec, w.profile, *w.voter, *w.replacement,
                    w.alternatives[0],
                    report.convention.value_or(OrderConvention::kTruthful));
      return ratio.has_value() &&
             !MeetsAlpha(*ratio, report.alpha_required.value_or(1.0));
    }
    case Axiom::kLexiParticipation:
    case Axiom::kStrongLexiParticipation: {
      const Profile reduced = *RemoveVote(w.profile, *w.voter);
      const LexiWalk walk = WalkLexicographically(
          w.profile.vote(*w.voter), probs,
          ComputeWinnerDistribution(spec, reduced).probs);
      return walk.outcome == LexiOutcome::kHarmed ||
             (report.axiom == Axiom::kStrongLexiParticipation &&
              walk.outcome == LexiOutcome::kAllTied);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Lower-bound families

absl::StatusOr<NeighborPair> LapExpLowerBoundPair(int m, int extra_pairs) {
  if (m < 2 || m % 2 != 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("the LAP/EXP family needs an even m >= 2, got ", m));
  }
  if (extra_pairs < 0) {
    return absl::InvalidArgumentError("extra_pairs must be non-negative");
  }
  const int k = m / 2;
  const LinearOrder forward = LinearOrder::Identity(m);
  const LinearOrder reverse = forward.Reversed();
  std::vector<Alternative> tail_last;
  for (int a = m - 2; a >= 0; --a) tail_last.push_back(a);
  tail_last.push_back(m - 1);
  const LinearOrder reversed_head = *LinearOrder::Create(std::move(tail_last));

  std::vector<LinearOrder> votes;
  for (int i = 0; i < k; ++i) votes.push_back(forward);
  for (int i = 0; i < k - 1; ++i) votes.push_back(reversed_head);
  for (int i = 0; i < extra_pairs; ++i) {
    votes.push_back(forward);
    votes.push_back(reversed_head);
  }
  votes.push_back(reverse);
  absl::StatusOr<Profile> first = Profile::WithDefaultLabels(votes);
  if (!first.ok()) return first.status();
  absl::StatusOr<Profile> second =
      ReplaceVote(*first, first->num_voters() - 1, forward);
  if (!second.ok()) return second.status();
  return NeighborPair{*std::move(first), *std::move(second), m - 1};
}

absl::StatusOr<NeighborPair> RrLowerBoundPair(int m) {
  if (m < 3 || m % 2 != 1) {
    return absl::InvalidArgumentError(
        absl::StrCat("the RR family needs an odd m >= 3, got ", m));
  }
  const int k = (m - 1) / 2;
  const LinearOrder forward = LinearOrder::Identity(m);
  const LinearOrder reverse = forward.Reversed();
  std::vector<LinearOrder> votes;
  for (int i = 0; i < k; ++i) votes.push_back(forward);
  for (int i = 0; i < k + 1; ++i) votes.push_back(reverse);
  absl::StatusOr<Profile> first = Profile::WithDefaultLabels(votes);
  if (!first.ok()) return first.status();
  absl::StatusOr<Profile> second =
      ReplaceVote(*first, first->num_voters() - 1, forward);
  if (!second.ok()) return second.status();
  return NeighborPair{*std::move(first), *std::move(second), m - 1};
}

double NeighborLogRatio(const NoiseSpec& spec, const NeighborPair& pair) {
  return LogProbs(spec, ProfileMargins(pair.first))[pair.outcome] -
         LogProbs(spec, ProfileMargins(pair.second))[pair.outcome];
}

}  // namespace dpcondorcet
