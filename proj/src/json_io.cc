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

#include "dpcondorcet/json_io.h"

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace dpcondorcet {

namespace {

using nlohmann::json;

template <typename T>
json Matrix(const SquareMatrix<T>& matrix) {
  json rows = json::array();
  for (int r = 0; r < matrix.size(); ++r) {
    json row = json::array();
    for (int c = 0; c < matrix.size(); ++c) row.push_back(matrix(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json Numbers(const std::vector<double>& values) {
  json out = json::array();
  for (double v : values) out.push_back(Number(v));
  return out;
}

json Labels(const Profile& profile) {
  return json(std::vector<std::string>(profile.labels().begin(),
                                       profile.labels().end()));
}

json AlternativeLabels(const Profile& profile,
                       const std::vector<Alternative>& alternatives) {
  json out = json::array();
  for (Alternative a : alternatives) out.push_back(profile.labels()[a]);
  return out;
}

json Space(const SpaceDescriptor& space) {
  return {{"kind", space.exhaustive ? "exhaustive" : "targeted"},
          {"m", space.m},
          {"n_min", space.min_n},
          {"n_max", space.max_n},
          {"profiles", space.profiles}};
}

json Params(Mechanism mechanism, double lambda) {
  return {{"mechanism", MechanismName(mechanism)}, {"lambda", Number(lambda)}};
}

}  // namespace

json Number(double x) {
  if (!std::isfinite(x)) return nullptr;
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.12g", x);
  return std::stod(buffer);
}

json TallyToJson(const Profile& profile) {
  const PairwiseTally tally = ComputePairwiseTally(profile);
  const MajorityMargins margins = ComputeMargins(tally);
  const Umg umg = ComputeUmg(margins);
  const std::optional<Alternative> cw = CondorcetWinner(umg);
  return {{"labels", Labels(profile)},
          {"n", profile.num_voters()},
          {"S", Matrix(tally.counts)},
          {"w", Matrix(margins.w)},
          {"U", Matrix(umg.u)},
          {"condorcet_winner",
           cw.has_value() ? json(profile.labels()[*cw]) : json(nullptr)}};
}

json DistributionToJson(const NoiseSpec& spec, const Profile& profile) {
  const EdgeProb edges(spec, ProfileMargins(profile));
  const WinnerDistribution d = WinnerDistributionFromEdges(edges);
  return {{"mechanism", MechanismName(spec.mechanism())},
          {"lambda", Number(spec.lambda())},
          {"labels", Labels(profile)},
          {"probs", Numbers(d.probs)},
          {"log_scores", Numbers(d.log_scores)},
          {"cw_exists_prob", Number(CwExistenceProb(edges))},
          {"expected_rounds", Number(ExpectedRounds(edges))}};
}

json PrivacyReportToJson(const PrivacyAuditReport& report) {
  const EdpWitness& w = report.witness;
  json params = Params(report.mechanism, report.lambda);
  params["m"] = report.space.m;
  params["n"] = report.space.max_n;
  return {{"report", "edp"},
          {"params", params},
          {"verdict", "measured"},
          {"measured", {{"eps_exact", Number(report.eps_exact)}}},
          {"claimed_bounds",
           {{"eps_lower", Number(report.eps_lower_claimed)},
            {"eps_upper", Number(report.eps_upper_claimed)}}},
          {"witness",
           {{"profile", SerializeProfile(w.profile)},
            {"voter", w.voter},
            {"replacement", FormatOrder(w.profile, w.replacement)},
            {"outcome", AlternativeLabels(w.profile, w.outcome)},
            {"outcome_indices", w.outcome}}},
          {"space", Space(report.space)},
          {"pairs_checked", report.pairs_checked}};
}

json AxiomReportToJson(const AxiomReport& report) {
  json params = Params(report.mechanism, report.lambda);
  if (report.alpha_required.has_value()) {
    params["alpha"] = Number(*report.alpha_required);
  }
  if (report.convention.has_value()) {
    params["order_convention"] = OrderConventionName(*report.convention);
  }
  json measured = json::object();
  if (report.measured_alpha.has_value()) {
    measured["alpha"] = Number(*report.measured_alpha);
  }
  json witness = nullptr;
  if (report.witness.has_value()) {
    const AxiomWitness& w = *report.witness;
    witness = {{"profile", SerializeProfile(w.profile)},
               {"voter", w.voter.has_value() ? json(*w.voter) : json(nullptr)},
               {"replacement", w.replacement.has_value()
                                   ? json(FormatOrder(w.profile,
                                                      *w.replacement))
                                   : json(nullptr)},
               {"alternatives", AlternativeLabels(w.profile, w.alternatives)},
               {"alternative_indices", w.alternatives},
               {"lhs", Number(w.lhs)},
               {"rhs", Number(w.rhs)},
               {"description", w.description}};
  }
  return {{"report", "axiom"},
          {"axiom", AxiomId(report.axiom)},
          {"params", params},
          {"verdict", report.pass ? "pass" : "fail"},
          {"measured", measured},
          {"witness", witness},
          {"space", Space(report.space)},
          {"instances_checked", report.instances_checked}};
}

json BoundTableToJson(const BoundTable& table) {
  json rows = json::array();
  for (const BoundRow& row : table.rows) {
    rows.push_back({{"mechanism", MechanismName(row.mechanism)},
                    {"lambda", Number(row.lambda)},
                    {"m", row.m},
                    {"eps_lower", Number(row.eps_lower)},
                    {"eps_upper", Number(row.eps_upper)},
                    {"alpha_pcond", Number(row.alpha_pcond)},
                    {"alpha_sdsp", Number(row.alpha_sdsp)}});
  }
  return rows;
}

}  // namespace dpcondorcet
