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

// Ranked-ballot data model. A Profile is a positional sequence of strict
// linear orders over m labelled alternatives; voter j is votes()[j].

#ifndef DPCONDORCET_BALLOTS_H_
#define DPCONDORCET_BALLOTS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "absl/types/span.h"

namespace dpcondorcet {

// Index of an alternative within one election, in [0, m).
using Alternative = int;

// A strict ranking of all m alternatives, most preferred first.
class LinearOrder {
 public:
  // Fails unless `ranking` is a permutation of 0..m-1.
  static absl::StatusOr<LinearOrder> Create(std::vector<Alternative> ranking);

  // The identity order 0 > 1 > ... > m-1.
  static LinearOrder Identity(int m);

  int size() const { return static_cast<int>(ranking_.size()); }
  absl::Span<const Alternative> ranking() const { return ranking_; }
  Alternative at(int rank) const { return ranking_[rank]; }

  // 0-based rank of `a` (0 = top).
  int position(Alternative a) const { return position_[a]; }
  bool Prefers(Alternative a, Alternative b) const {
    return position_[a] < position_[b];
  }

  LinearOrder Reversed() const;

  friend bool operator==(const LinearOrder& x, const LinearOrder& y) {
    return x.ranking_ == y.ranking_;
  }
  friend auto operator<=>(const LinearOrder& x, const LinearOrder& y) {
    return x.ranking_ <=> y.ranking_;
  }

 private:
  explicit LinearOrder(std::vector<Alternative> ranking);

  std::vector<Alternative> ranking_;
  std::vector<int> position_;
};

class Profile {
 public:
  // Labels must be distinct, non-empty, and at least two; every vote must be
  // over labels.size() alternatives; at least one vote.
  static absl::StatusOr<Profile> Create(std::vector<std::string> labels,
                                        std::vector<LinearOrder> votes);

  // Same as Create with labels a1..am.
  static absl::StatusOr<Profile> WithDefaultLabels(
      std::vector<LinearOrder> votes);

  int num_alternatives() const { return static_cast<int>(labels_.size()); }
  int num_voters() const { return static_cast<int>(votes_.size()); }
  absl::Span<const std::string> labels() const { return labels_; }
  absl::Span<const LinearOrder> votes() const { return votes_; }
  const LinearOrder& vote(int j) const { return votes_[j]; }

  std::optional<Alternative> FindLabel(absl::string_view label) const;

  friend bool operator==(const Profile& x, const Profile& y) {
    return x.labels_ == y.labels_ && x.votes_ == y.votes_;
  }

 private:
  Profile(std::vector<std::string> labels, std::vector<LinearOrder> votes)
      : labels_(std::move(labels)), votes_(std::move(votes)) {}

  std::vector<std::string> labels_;
  std::vector<LinearOrder> votes_;
};

// Labels a1, a2, ..., am.
std::vector<std::string> DefaultLabels(int m);

// Parses the multiplicity-prefixed ballot format:
//
//   # comment
//   51: a1 > a2 > a3
//   50: a2 > a3 > a1
//
// Labels are [A-Za-z0-9_]+, numbered in order of first appearance. Errors
// carry the 1-based line number.
absl::StatusOr<Profile> ParseProfile(absl::string_view text);

// Inverse of ParseProfile up to grouping: runs of identical consecutive votes
// become one line, so voter order is preserved.
std::string SerializeProfile(const Profile& profile);

// Parses a single "a > b > c" ranking against the labels of `profile`.
absl::StatusOr<LinearOrder> ParseOrder(const Profile& profile,
                                       absl::string_view text);
std::string FormatOrder(const Profile& profile, const LinearOrder& order);

// Neighbouring profile: vote j replaced by `order`, n unchanged.
absl::StatusOr<Profile> ReplaceVote(const Profile& profile, int voter,
                                    const LinearOrder& order);

// Vote j dropped; requires n >= 2.
absl::StatusOr<Profile> RemoveVote(const Profile& profile, int voter);

// All orders that move `a` to a strictly higher position while keeping the
// relative order of every other alternative. Ordered from one step up to the
// top. The result has order.position(a) elements.
std::vector<LinearOrder> EnumeratePushups(const LinearOrder& order,
                                          Alternative a);

// All m! orders in lexicographic order of their ranking sequence.
std::vector<LinearOrder> AllOrders(int m);

// Streams L(A)^n. Profile k corresponds to the base-m! digits of k, voter 0
// being the most significant digit, each digit indexing AllOrders(m). The
// stream therefore runs lexicographically over per-voter permutation ranks.
class ProfileStream {
 public:
  ProfileStream(int m, int n);

  // (m!)^n, saturating at UINT64_MAX.
  uint64_t size() const { return size_; }
  int num_alternatives() const { return m_; }
  int num_voters() const { return n_; }

  std::optional<Profile> Next();

  // Random access by position in the stream.
  Profile At(uint64_t index) const;

  absl::Span<const LinearOrder> orders() const { return orders_; }

 private:
  int m_;
  int n_;
  std::vector<LinearOrder> orders_;
  std::vector<std::string> labels_;
  uint64_t size_;
  uint64_t next_ = 0;
};

}  // namespace dpcondorcet

#endif  // DPCONDORCET_BALLOTS_H_
