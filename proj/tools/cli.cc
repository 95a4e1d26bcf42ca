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

#include "cli.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "dpcondorcet/audit.h"
#include "dpcondorcet/ballots.h"
#include "dpcondorcet/bounds.h"
#include "dpcondorcet/distribution.h"
#include "dpcondorcet/json_io.h"
#include "dpcondorcet/mechanisms.h"
#include "dpcondorcet/random.h"
#include "dpcondorcet/tally.h"
#include "json.hpp"

namespace dpcondorcet {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string subcommand;
  std::string ballots;
  std::string mech;
  double lambda = 0.0;
  uint64_t seed = 0;
  std::string format;
  int m = 0;
  int n = 0;
  double alpha = 0.0;
  std::string grid;
  int64_t draws = 1;
  std::string method = "closed";
  std::string order_convention = "truthful";
  std::string axiom;
  int64_t max_rounds = kDefaultMaxRounds;

  // Which optional flags were given.
  bool has_ballots = false;
  bool has_lambda = false;
  bool has_seed = false;
  bool has_m = false;
  bool has_n = false;
  bool has_alpha = false;
};

// Result of one subcommand: a JSON payload plus renderings for the other
// formats, and the exit code.
struct Output {
  json result;
  std::string text;
  std::string csv;
  int code = kExitOk;
};

std::string Fmt(double x) {
  if (!std::isfinite(x)) return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
  return absl::StrFormat("%.12g", x);
}

json ConfigEcho(const RunConfig& c) {
  auto optional_int = [](bool has, int v) { return has ? json(v) : json(); };
  json echo = {{"subcommand", c.subcommand},
               {"ballots", c.has_ballots ? json(c.ballots) : json()},
               {"mech", c.mech.empty() ? json() : json(c.mech)},
               {"lambda", c.has_lambda ? Number(c.lambda) : json()},
               {"seed", c.seed},
               {"format", c.format},
               {"m", optional_int(c.has_m, c.m)},
               {"n", optional_int(c.has_n, c.n)},
               {"alpha", c.has_alpha ? Number(c.alpha) : json()}};
  if (c.subcommand == "sample") {
    echo["draws"] = c.draws;
    echo["method"] = c.method;
    echo["max_rounds"] = c.max_rounds;
  }
  if (c.subcommand == "audit axiom") {
    echo["id"] = c.axiom;
    echo["order_convention"] = c.order_convention;
  }
  if (c.subcommand == "curves") echo["grid"] = c.grid;
  return echo;
}

std::string MetadataLines(const RunConfig& c) {
  return absl::StrCat("# dpcondorcet ", kToolVersion, "\n# config ",
                      ConfigEcho(c).dump(), "\n");
}

absl::StatusOr<Profile> LoadBallots(const RunConfig& c) {
  if (!c.has_ballots) {
    return absl::InvalidArgumentError("--ballots is required");
  }
  std::ifstream in(c.ballots, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(absl::StrCat("cannot read ", c.ballots));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  absl::StatusOr<Profile> profile = ParseProfile(buffer.str());
  if (!profile.ok()) {
    return absl::Status(profile.status().code(),
                        absl::StrCat(c.ballots, ": ",
                                     profile.status().message()));
  }
  return profile;
}

absl::StatusOr<NoiseSpec> LoadSpec(const RunConfig& c) {
  if (c.mech.empty()) return absl::InvalidArgumentError("--mech is required");
  if (!c.has_lambda) return absl::InvalidArgumentError("--lambda is required");
  absl::StatusOr<Mechanism> mech = ParseMechanism(c.mech);
  if (!mech.ok()) return mech.status();
  return NoiseSpec::Create(*mech, c.lambda);
}

absl::StatusOr<std::vector<double>> ParseGrid(const std::string& text) {
  std::vector<std::string> parts = absl::StrSplit(text, ':');
  std::vector<double> values;
  for (const std::string& part : parts) {
    double v = 0.0;
    size_t used = 0;
    try {
      v = std::stod(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != part.size() || !std::isfinite(v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad grid value '", part, "'"));
    }
    values.push_back(v);
  }
  if (values.size() == 1) values = {values[0], values[0], 1.0};
  if (values.size() != 3) {
    return absl::InvalidArgumentError("--grid must be start:stop:step");
  }
  const double start = values[0], stop = values[1], step = values[2];
  if (!(start > 0) || !(stop >= start) || !(step > 0)) {
    return absl::InvalidArgumentError(
        "--grid needs 0 < start <= stop and step > 0");
  }
  const double count = std::floor((stop - start) / step + 1e-9) + 1;
  if (count > 1e6) return absl::InvalidArgumentError("--grid is too fine");
  std::vector<double> grid;
  for (int i = 0; i < static_cast<int>(count); ++i) {
    grid.push_back(start + i * step);
  }
  return grid;
}

absl::StatusOr<Output> Tally(const RunConfig& c) {
  absl::StatusOr<Profile> profile = LoadBallots(c);
  if (!profile.ok()) return profile.status();
  Output out;
  out.result = TallyToJson(*profile);
  const int m = profile->num_alternatives();
  const auto& labels = profile->labels();

  std::string text;
  std::string csv = "matrix,row,col,value\n";
  for (const char* name : {"S", "w", "U"}) {
    absl::StrAppend(&text, name, ":\n");
    for (int r = 0; r < m; ++r) {
      absl::StrAppend(&text, "  ", labels[r]);
      for (int col = 0; col < m; ++col) {
        const auto& v = out.result[name][r][col];
        absl::StrAppend(&text, " ", v.dump());
        absl::StrAppend(&csv, name, ",", labels[r], ",", labels[col], ",",
                        v.dump(), "\n");
      }
      absl::StrAppend(&text, "\n");
    }
  }
  const json& cw = out.result["condorcet_winner"];
  absl::StrAppend(&text, "condorcet_winner: ",
                  cw.is_null() ? "none" : cw.get<std::string>(), "\n");
  out.text = text;
  out.csv = csv;
  return out;
}

absl::StatusOr<Output> WinnerDist(const RunConfig& c) {
  absl::StatusOr<NoiseSpec> spec = LoadSpec(c);
  if (!spec.ok()) return spec.status();
  absl::StatusOr<Profile> profile = LoadBallots(c);
  if (!profile.ok()) return profile.status();
  Output out;
  out.result = DistributionToJson(*spec, *profile);
  std::string text;
  std::string csv = "label,prob,log_score\n";
  for (int a = 0; a < profile->num_alternatives(); ++a) {
    const std::string p = out.result["probs"][a].dump();
    const std::string s = out.result["log_scores"][a].dump();
    absl::StrAppend(&text, profile->labels()[a], " ", p, " ", s, "\n");
    absl::StrAppend(&csv, profile->labels()[a], ",", p, ",", s, "\n");
  }
  absl::StrAppend(&text, "cw_exists_prob ",
                  out.result["cw_exists_prob"].dump(), "\nexpected_rounds ",
                  out.result["expected_rounds"].dump(), "\n");
  out.text = text;
  out.csv = csv;
  return out;
}

absl::StatusOr<Output> Sample(const RunConfig& c) {
  if (!c.has_seed) {
    return absl::InvalidArgumentError("sample requires an explicit --seed");
  }
  if (c.draws < 1) return absl::InvalidArgumentError("--draws must be >= 1");
  if (c.method != "closed" && c.method != "rejection") {
    return absl::InvalidArgumentError("--method must be closed or rejection");
  }
  absl::StatusOr<NoiseSpec> spec = LoadSpec(c);
  if (!spec.ok()) return spec.status();
  absl::StatusOr<Profile> profile = LoadBallots(c);
  if (!profile.ok()) return profile.status();

  const auto& labels = profile->labels();
  const MajorityMargins margins = ProfileMargins(*profile);
  const WinnerDistribution d = ComputeWinnerDistribution(*spec, margins);
  Rng rng(c.seed);

  json winners = json::array();
  std::vector<int64_t> counts(profile->num_alternatives(), 0);
  int64_t total_rounds = 0;
  int64_t exhausted = 0;
  std::string text;
  std::string csv = "draw,winner,rounds\n";
  for (int64_t k = 0; k < c.draws; ++k) {
    std::optional<Alternative> winner;
    int64_t rounds = 0;
    if (c.method == "closed") {
      winner = SampleWinner(d, rng);
    } else {
      absl::StatusOr<RejectionSample> s =
          RejectionSampleWinner(*spec, margins, rng, c.max_rounds);
      if (s.ok()) {
        winner = s->winner;
        rounds = s->rounds;
      } else if (absl::IsResourceExhausted(s.status())) {
        rounds = c.max_rounds;
        ++exhausted;
      } else {
        return s.status();
      }
      total_rounds += rounds;
    }
    const std::string label = winner.has_value() ? labels[*winner] : "";
    winners.push_back(winner.has_value() ? json(label) : json());
    if (winner.has_value()) ++counts[*winner];
    absl::StrAppend(&text, winner.has_value() ? label : "exhausted", "\n");
    absl::StrAppend(&csv, k, ",", label, ",", rounds, "\n");
  }
  json count_map = json::object();
  for (int a = 0; a < profile->num_alternatives(); ++a) {
    count_map[labels[a]] = counts[a];
  }
  Output out;
  out.result = {{"method", c.method},
                {"draws", c.draws},
                {"winners", winners},
                {"counts", count_map}};
  if (c.method == "rejection") {
    const double mean =
        static_cast<double>(total_rounds) / static_cast<double>(c.draws);
    out.result["mean_rounds"] = Number(mean);
    out.result["expected_rounds"] =
        Number(ExpectedRounds(EdgeProb(*spec, margins)));
    out.result["exhausted_draws"] = exhausted;
    absl::StrAppend(&text, "mean_rounds ", Fmt(mean), "\n");
  }
  out.text = text;
  out.csv = csv;
  return out;
}

absl::StatusOr<ProfileSpace> LoadSpace(const RunConfig& c) {
  if (c.has_ballots) {
    if (c.has_m || c.has_n) {
      return absl::InvalidArgumentError(
          "give either --ballots or --m/--n, not both");
    }
    absl::StatusOr<Profile> profile = LoadBallots(c);
    if (!profile.ok()) return profile.status();
    return ProfileSpace::Targeted({*std::move(profile)});
  }
  if (!c.has_m || !c.has_n) {
    return absl::InvalidArgumentError("--m and --n (or --ballots) required");
  }
  return ProfileSpace::Exhaustive(c.m, c.n);
}

std::string ReportText(const json& report) {
  std::string text;
  for (const auto& [key, value] : report.items()) {
    if (value.is_object()) {
      for (const auto& [sub, v] : value.items()) {
        absl::StrAppend(&text, key, ".", sub, ": ",
                        v.is_string() ? v.get<std::string>() : v.dump(), "\n");
      }
    } else {
      absl::StrAppend(&text, key, ": ",
                      value.is_string() ? value.get<std::string>()
                                        : value.dump(),
                      "\n");
    }
  }
  return text;
}

absl::StatusOr<Output> AuditEdpCommand(const RunConfig& c) {
  absl::StatusOr<NoiseSpec> spec = LoadSpec(c);
  if (!spec.ok()) return spec.status();
  absl::StatusOr<ProfileSpace> space = LoadSpace(c);
  if (!space.ok()) return space.status();
  absl::StatusOr<PrivacyAuditReport> report = AuditEdp(*spec, *space);
  if (!report.ok()) return report.status();
  Output out;
  out.result = PrivacyReportToJson(*report);
  out.text = ReportText(out.result);
  return out;
}

absl::StatusOr<Output> AuditAxiomCommand(const RunConfig& c) {
  if (c.axiom.empty()) return absl::InvalidArgumentError("--id is required");
  absl::StatusOr<Axiom> axiom = ParseAxiom(c.axiom);
  if (!axiom.ok()) return axiom.status();
  absl::StatusOr<OrderConvention> convention =
      ParseOrderConvention(c.order_convention);
  if (!convention.ok()) return convention.status();
  absl::StatusOr<NoiseSpec> spec = LoadSpec(c);
  if (!spec.ok()) return spec.status();
  absl::StatusOr<ProfileSpace> space = LoadSpace(c);
  if (!space.ok()) return space.status();
  const int m = space->num_alternatives();

  absl::StatusOr<AxiomReport> report;
  switch (*axiom) {
    case Axiom::kPCondorcet:
      report = CheckPCondorcet(*spec, *space, c.has_alpha ? c.alpha : 1.0);
      break;
    case Axiom::kAlphaPCondorcet: {
      double alpha = c.alpha;
      if (!c.has_alpha) {
        absl::StatusOr<double> claimed =
            AlphaPCondorcet(spec->mechanism(), spec->lambda(), m);
        if (!claimed.ok()) return claimed.status();
        alpha = *claimed;
      }
      report = CheckPCondorcet(*spec, *space, alpha);
      if (report.ok()) report->axiom = Axiom::kAlphaPCondorcet;
      break;
    }
    case Axiom::kPPareto:
      report = CheckPPareto(*spec, *space);
      break;
    case Axiom::kAMonotonicity:
      report = CheckAMonotonicity(*spec, *space);
      break;
    case Axiom::kAlphaSdSp:
      report = CheckSdSp(*spec, *space,
                         c.has_alpha ? c.alpha : AlphaSdSp(spec->lambda(), m),
                         *convention);
      break;
    case Axiom::kLexiParticipation:
    case Axiom::kStrongLexiParticipation:
      report = CheckLexiParticipation(
          *spec, *space, *axiom == Axiom::kStrongLexiParticipation);
      break;
  }
  if (!report.ok()) return report.status();
  Output out;
  out.result = AxiomReportToJson(*report);
  out.text = ReportText(out.result);
  out.code = report->pass ? kExitOk : kExitAxiomViolated;
  return out;
}

absl::StatusOr<Output> Curves(const RunConfig& c) {
  if (!c.has_m) return absl::InvalidArgumentError("--m is required");
  if (c.grid.empty()) return absl::InvalidArgumentError("--grid is required");
  absl::StatusOr<std::vector<double>> grid = ParseGrid(c.grid);
  if (!grid.ok()) return grid.status();
  std::vector<Mechanism> mechanisms = {Mechanism::kLaplace,
                                       Mechanism::kExponential,
                                       Mechanism::kRandomizedResponse};
  if (!c.mech.empty()) {
    absl::StatusOr<Mechanism> mech = ParseMechanism(c.mech);
    if (!mech.ok()) return mech.status();
    mechanisms = {*mech};
  }
  absl::StatusOr<BoundTable> table = EmitCurves(mechanisms, *grid, c.m);
  if (!table.ok()) return table.status();
  Output out;
  out.result = BoundTableToJson(*table);
  out.csv = BoundTableToCsv(*table);
  out.text = out.csv;
  return out;
}

int Emit(const RunConfig& c, const Output& output, std::ostream& out,
         std::ostream& err) {
  if (c.format == "json") {
    json doc = {{"tool", "dpcondorcet"},
                {"version", kToolVersion},
                {"config", ConfigEcho(c)},
                {"result", output.result}};
    out << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    if (output.csv.empty()) {
      err << "error: csv output is not available for " << c.subcommand
          << "\n";
      return kExitUsage;
    }
    out << MetadataLines(c) << output.csv;
  } else {
    out << MetadataLines(c) << output.text;
  }
  return output.code;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  RunConfig c;
  CLI::App app("Randomized Condorcet voting under differential privacy",
               "dpcondorcet");
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  auto add_format = [&c](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
  };
  auto add_ballots = [&c](CLI::App* sub) {
    sub->add_option("--ballots", c.ballots, "Ballot file")
        ->each([&c](const std::string&) { c.has_ballots = true; });
  };
  auto add_mech = [&c](CLI::App* sub) {
    sub->add_option("--mech", c.mech, "Mechanism")
        ->check(CLI::IsMember({"lap", "exp", "rr"}));
    sub->add_option("--lambda", c.lambda, "Noise parameter")
        ->each([&c](const std::string&) { c.has_lambda = true; });
  };
  auto add_seed = [&c](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "64-bit seed")
        ->each([&c](const std::string&) { c.has_seed = true; });
  };
  auto add_envelope = [&c](CLI::App* sub) {
    sub->add_option("--m", c.m, "Alternatives")
        ->each([&c](const std::string&) { c.has_m = true; });
    sub->add_option("--n", c.n, "Voters")
        ->each([&c](const std::string&) { c.has_n = true; });
  };

  CLI::App* tally = app.add_subcommand("tally", "Pairwise tally and UMG");
  add_ballots(tally);
  add_seed(tally);
  add_format(tally);

  CLI::App* dist =
      app.add_subcommand("winner-dist", "Closed-form winner distribution");
  add_ballots(dist);
  add_mech(dist);
  add_seed(dist);
  add_format(dist);

  CLI::App* sample = app.add_subcommand("sample", "Draw winners");
  add_ballots(sample);
  add_mech(sample);
  add_seed(sample);
  add_format(sample);
  sample->add_option("--draws", c.draws, "Number of draws");
  sample->add_option("--method", c.method, "closed or rejection")
      ->check(CLI::IsMember({"closed", "rejection"}));
  sample->add_option("--max-rounds", c.max_rounds,
                     "Rejection budget per draw");

  CLI::App* audit = app.add_subcommand("audit", "Privacy and axiom audits");
  audit->require_subcommand(1);
  CLI::App* edp = audit->add_subcommand("edp", "Exact privacy audit");
  add_ballots(edp);
  add_mech(edp);
  add_seed(edp);
  add_format(edp);
  add_envelope(edp);
  CLI::App* axiom = audit->add_subcommand("axiom", "Axiom checker");
  add_ballots(axiom);
  add_mech(axiom);
  add_seed(axiom);
  add_format(axiom);
  add_envelope(axiom);
  axiom->add_option("--id", c.axiom, "Axiom id");
  axiom->add_option("--alpha", c.alpha, "Required alpha")
      ->each([&c](const std::string&) { c.has_alpha = true; });
  axiom->add_option("--order-convention", c.order_convention,
                    "truthful or def8")
      ->check(CLI::IsMember({"truthful", "def8"}));

  CLI::App* curves = app.add_subcommand("curves", "Privacy bound curves");
  curves->add_option("--mech", c.mech, "Restrict to one mechanism")
      ->check(CLI::IsMember({"lap", "exp", "rr"}));
  curves->add_option("--grid", c.grid, "start:stop:step");
  curves->add_option("--m", c.m, "Alternatives")
      ->each([&c](const std::string&) { c.has_m = true; });
  add_seed(curves);
  add_format(curves);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  absl::StatusOr<Output> output;
  if (tally->parsed()) {
    c.subcommand = "tally";
    output = Tally(c);
  } else if (dist->parsed()) {
    c.subcommand = "winner-dist";
    output = WinnerDist(c);
  } else if (sample->parsed()) {
    c.subcommand = "sample";
    output = Sample(c);
  } else if (edp->parsed()) {
    c.subcommand = "audit edp";
    output = AuditEdpCommand(c);
  } else if (axiom->parsed()) {
    c.subcommand = "audit axiom";
    output = AuditAxiomCommand(c);
  } else {
    c.subcommand = "curves";
    if (c.format.empty()) c.format = "csv";
    output = Curves(c);
  }
  if (c.format.empty()) c.format = "json";
  if (!output.ok()) {
    err << "error: " << output.status().message() << "\n";
    return kExitUsage;
  }
  return Emit(c, *output, out, err);
}

}  // namespace dpcondorcet
