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

#include "dpcondorcet/ballots.h"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"

namespace dpcondorcet {

namespace {

// Upper bound on the expanded voter count of a parsed file.
constexpr int64_t kMaxVoters = 10'000'000;

bool IsValidLabel(absl::string_view label) {
  if (label.empty()) return false;
  return std::all_of(label.begin(), label.end(), [](char c) {
    return absl::ascii_isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

absl::Status LineError(int line, absl::string_view message) {
  return absl::InvalidArgumentError(absl::StrCat("line ", line, ": ", message));
}

// Splits "a > b > c" into trimmed labels.
absl::StatusOr<std::vector<std::string>> SplitRanking(absl::string_view text) {
  std::vector<std::string> labels;
  for (absl::string_view part : absl::StrSplit(text, '>')) {
    std::string label(absl::StripAsciiWhitespace(part));
    if (!IsValidLabel(label)) {
      return absl::InvalidArgumentError(
          absl::StrCat("invalid alternative label '", label, "'"));
    }
    labels.push_back(std::move(label));
  }
  std::set<std::string> seen;
  for (const std::string& label : labels) {
    if (!seen.insert(label).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("alternative '", label, "' ranked twice"));
    }
  }
  return labels;
}

uint64_t SaturatingPow(uint64_t base, int exponent) {
  uint64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<uint64_t>::max() / base) {
      return std::numeric_limits<uint64_t>::max();
    }
    result *= base;
  }
  return result;
}

}  // namespace

LinearOrder::LinearOrder(std::vector<Alternative> ranking)
    : ranking_(std::move(ranking)), position_(ranking_.size()) {
  for (int r = 0; r < static_cast<int>(ranking_.size()); ++r) {
    position_[ranking_[r]] = r;
  }
}

absl::StatusOr<LinearOrder> LinearOrder::Create(
    std::vector<Alternative> ranking) {
  const int m = static_cast<int>(ranking.size());
  std::vector<bool> seen(m, false);
  for (Alternative a : ranking) {
    if (a < 0 || a >= m) {
      return absl::InvalidArgumentError(
          absl::StrCat("alternative index ", a, " outside [0, ", m, ")"));
    }
    if (seen[a]) {
      return absl::InvalidArgumentError(
          absl::StrCat("alternative index ", a, " ranked twice"));
    }
    seen[a] = true;
  }
  return LinearOrder(std::move(ranking));
}

LinearOrder LinearOrder::Identity(int m) {
  std::vector<Alternative> ranking(m);
  std::iota(ranking.begin(), ranking.end(), 0);
  return LinearOrder(std::move(ranking));
}

LinearOrder LinearOrder::Reversed() const {
  return LinearOrder(std::vector<Alternative>(ranking_.rbegin(),
                                              ranking_.rend()));
}

absl::StatusOr<Profile> Profile::Create(std::vector<std::string> labels,
                                        std::vector<LinearOrder> votes) {
  const int m = static_cast<int>(labels.size());
  if (m < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("need at least 2 alternatives, got ", m));
  }
  std::set<std::string> distinct;
  for (const std::string& label : labels) {
    if (label.empty()) {
      return absl::InvalidArgumentError("empty alternative label");
    }
    if (!distinct.insert(label).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate alternative label '", label, "'"));
    }
  }
  if (votes.empty()) {
    return absl::InvalidArgumentError("a profile needs at least one vote");
  }
  for (size_t j = 0; j < votes.size(); ++j) {
    if (votes[j].size() != m) {
      return absl::InvalidArgumentError(absl::StrCat(
          "vote ", j, " ranks ", votes[j].size(), " alternatives, expected ",
          m));
    }
  }
  return Profile(std::move(labels), std::move(votes));
}

absl::StatusOr<Profile> Profile::WithDefaultLabels(
    std::vector<LinearOrder> votes) {
  if (votes.empty()) {
    return absl::InvalidArgumentError("a profile needs at least one vote");
  }
  const int m = votes.front().size();
  return Create(DefaultLabels(m), std::move(votes));
}

std::optional<Alternative> Profile::FindLabel(absl::string_view label) const {
  for (int a = 0; a < num_alternatives(); ++a) {
    if (labels_[a] == label) return a;
  }
  return std::nullopt;
}

std::vector<std::string> DefaultLabels(int m) {
  std::vector<std::string> labels;
  labels.reserve(m);
  for (int a = 0; a < m; ++a) labels.push_back(absl::StrCat("a", a + 1));
  return labels;
}

absl::StatusOr<Profile> ParseProfile(absl::string_view text) {
  struct Record {
    int line;
    int64_t count;
    std::vector<std::string> labels;
  };
  std::vector<Record> records;
  std::vector<std::string> labels;
  std::set<std::string> known;
  int64_t total = 0;

  int line_no = 0;
  for (absl::string_view raw : absl::StrSplit(text, '\n')) {
    ++line_no;
    absl::string_view line = absl::StripAsciiWhitespace(raw);
    if (line.empty() || line.front() == '#') continue;

    const size_t colon = line.find(':');
    if (colon == absl::string_view::npos) {
      return LineError(line_no, "expected '<count>: <ranking>'");
    }
    absl::string_view count_text =
        absl::StripAsciiWhitespace(line.substr(0, colon));
    int64_t count = 0;
    if (count_text.empty() ||
        !std::all_of(count_text.begin(), count_text.end(),
                     [](char c) { return c >= '0' && c <= '9'; }) ||
        !absl::SimpleAtoi(count_text, &count)) {
      return LineError(line_no, absl::StrCat("invalid multiplicity '",
                                             count_text, "'"));
    }
    if (count <= 0) {
      return LineError(line_no, "multiplicity must be positive");
    }
    total += count;
    if (total > kMaxVoters) {
      return LineError(line_no,
                       absl::StrCat("more than ", kMaxVoters, " voters"));
    }
    absl::StatusOr<std::vector<std::string>> ranking =
        SplitRanking(line.substr(colon + 1));
    if (!ranking.ok()) return LineError(line_no, ranking.status().message());
    for (const std::string& label : *ranking) {
      if (known.insert(label).second) labels.push_back(label);
    }
    records.push_back({line_no, count, *std::move(ranking)});
  }

  if (records.empty()) {
    return absl::InvalidArgumentError("ballot file contains no votes");
  }
  const int m = static_cast<int>(labels.size());
  if (m < 2) {
    return absl::InvalidArgumentError(
        absl::StrCat("need at least 2 alternatives, got ", m));
  }

  std::vector<LinearOrder> votes;
  votes.reserve(total);
  for (const Record& record : records) {
    if (static_cast<int>(record.labels.size()) != m) {
      std::set<std::string> present(record.labels.begin(),
                                    record.labels.end());
      std::vector<std::string> missing;
      for (const std::string& label : labels) {
        if (!present.contains(label)) missing.push_back(label);
      }
      return LineError(record.line, absl::StrCat("ranking is missing ",
                                                 absl::StrJoin(missing, ", ")));
    }
    std::vector<Alternative> ranking;
    ranking.reserve(m);
    for (const std::string& label : record.labels) {
      ranking.push_back(static_cast<Alternative>(
          std::find(labels.begin(), labels.end(), label) - labels.begin()));
    }
    absl::StatusOr<LinearOrder> order = LinearOrder::Create(std::move(ranking));
    if (!order.ok()) return LineError(record.line, order.status().message());
    for (int64_t c = 0; c < record.count; ++c) votes.push_back(*order);
  }
  return Profile::Create(std::move(labels), std::move(votes));
}

std::string FormatOrder(const Profile& profile, const LinearOrder& order) {
  std::vector<absl::string_view> names;
  names.reserve(order.size());
  for (Alternative a : order.ranking()) names.push_back(profile.labels()[a]);
  return absl::StrJoin(names, " > ");
}

std::string SerializeProfile(const Profile& profile) {
  std::string out;
  const auto votes = profile.votes();
  size_t j = 0;
  while (j < votes.size()) {
    size_t k = j;
    while (k < votes.size() && votes[k] == votes[j]) ++k;
    absl::StrAppend(&out, k - j, ": ", FormatOrder(profile, votes[j]), "\n");
    j = k;
  }
  return out;
}

absl::StatusOr<LinearOrder> ParseOrder(const Profile& profile,
                                       absl::string_view text) {
  absl::StatusOr<std::vector<std::string>> labels = SplitRanking(text);
  if (!labels.ok()) return labels.status();
  if (static_cast<int>(labels->size()) != profile.num_alternatives()) {
    return absl::InvalidArgumentError(
        absl::StrCat("ranking has ", labels->size(), " alternatives, expected ",
                     profile.num_alternatives()));
  }
  std::vector<Alternative> ranking;
  for (const std::string& label : *labels) {
    std::optional<Alternative> a = profile.FindLabel(label);
    if (!a.has_value()) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown alternative '", label, "'"));
    }
    ranking.push_back(*a);
  }
  return LinearOrder::Create(std::move(ranking));
}

absl::StatusOr<Profile> ReplaceVote(const Profile& profile, int voter,
                                    const LinearOrder& order) {
  if (voter < 0 || voter >= profile.num_voters()) {
    return absl::OutOfRangeError(absl::StrCat(
        "voter ", voter, " outside [0, ", profile.num_voters(), ")"));
  }
  if (order.size() != profile.num_alternatives()) {
    return absl::InvalidArgumentError(
        absl::StrCat("replacement ranks ", order.size(),
                     " alternatives, expected ", profile.num_alternatives()));
  }
  std::vector<LinearOrder> votes(profile.votes().begin(),
                                 profile.votes().end());
  votes[voter] = order;
  std::vector<std::string> labels(profile.labels().begin(),
                                  profile.labels().end());
  return Profile::Create(std::move(labels), std::move(votes));
}

absl::StatusOr<Profile> RemoveVote(const Profile& profile, int voter) {
  if (profile.num_voters() < 2) {
    return absl::FailedPreconditionError(
        "cannot remove the only vote of a profile");
  }
  if (voter < 0 || voter >= profile.num_voters()) {
    return absl::OutOfRangeError(absl::StrCat(
        "voter ", voter, " outside [0, ", profile.num_voters(), ")"));
  }
  std::vector<LinearOrder> votes;
  votes.reserve(profile.num_voters() - 1);
  for (int j = 0; j < profile.num_voters(); ++j) {
    if (j != voter) votes.push_back(profile.vote(j));
  }
  std::vector<std::string> labels(profile.labels().begin(),
                                  profile.labels().end());
  return Profile::Create(std::move(labels), std::move(votes));
}

std::vector<LinearOrder> EnumeratePushups(const LinearOrder& order,
                                          Alternative a) {
  std::vector<LinearOrder> result;
  const int from = order.position(a);
  for (int to = from - 1; to >= 0; --to) {
    std::vector<Alternative> ranking(order.ranking().begin(),
                                     order.ranking().end());
    std::rotate(ranking.begin() + to, ranking.begin() + from,
                ranking.begin() + from + 1);
    result.push_back(*LinearOrder::Create(std::move(ranking)));
  }
  return result;
}

std::vector<LinearOrder> AllOrders(int m) {
  std::vector<Alternative> ranking(m);
  std::iota(ranking.begin(), ranking.end(), 0);
  std::vector<LinearOrder> orders;
  do {
    orders.push_back(*LinearOrder::Create(ranking));
  } while (std::next_permutation(ranking.begin(), ranking.end()));
  return orders;
}

ProfileStream::ProfileStream(int m, int n)
    : m_(m),
      n_(n),
      orders_(AllOrders(m)),
      labels_(DefaultLabels(m)),
      size_(SaturatingPow(orders_.size(), n)) {}

Profile ProfileStream::At(uint64_t index) const {
  std::vector<LinearOrder> votes(n_, orders_.front());
  const uint64_t base = orders_.size();
  for (int j = n_ - 1; j >= 0; --j) {
    votes[j] = orders_[index % base];
    index /= base;
  }
  return *Profile::Create(labels_, std::move(votes));
}

std::optional<Profile> ProfileStream::Next() {
  if (next_ >= size_) return std::nullopt;
  return At(next_++);
}

}  // namespace dpcondorcet
