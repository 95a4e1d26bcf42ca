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

// Deterministic pairwise aggregation of a profile.

#ifndef DPCONDORCET_TALLY_H_
#define DPCONDORCET_TALLY_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "dpcondorcet/ballots.h"

namespace dpcondorcet {

// Dense row-major m x m matrix.
template <typename T>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(int size, T fill = T{})
      : size_(size), data_(static_cast<size_t>(size) * size, fill) {}

  int size() const { return size_; }
  T& operator()(int row, int col) { return data_[row * size_ + col]; }
  const T& operator()(int row, int col) const {
    return data_[row * size_ + col];
  }
  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  int size_ = 0;
  std::vector<T> data_;
};

// S[a][b] = number of voters ranking a above b.
struct PairwiseTally {
  SquareMatrix<int64_t> counts;
  int64_t num_voters = 0;

  int size() const { return counts.size(); }
  int64_t operator()(int a, int b) const { return counts(a, b); }
};

// w[a][b] = S[a][b] - S[b][a].
struct MajorityMargins {
  SquareMatrix<int64_t> w;

  int size() const { return w.size(); }
  int64_t operator()(int a, int b) const { return w(a, b); }
  friend bool operator==(const MajorityMargins&,
                         const MajorityMargins&) = default;
};

// Unweighted majority graph; entries in {-1, 0, 1}.
struct Umg {
  SquareMatrix<int> u;

  int size() const { return u.size(); }
  int operator()(int a, int b) const { return u(a, b); }
  friend bool operator==(const Umg&, const Umg&) = default;
};

PairwiseTally ComputePairwiseTally(const Profile& profile);
MajorityMargins ComputeMargins(const PairwiseTally& tally);
Umg ComputeUmg(const MajorityMargins& margins);

// The alternative beating every other one, if any.
std::optional<Alternative> CondorcetWinner(const Umg& umg);

// Shorthand for margins(tally(profile)).
MajorityMargins ProfileMargins(const Profile& profile);

// Adds sign * (contribution of `order`) to `margins` in place. Used to derive
// neighbour margins without re-tallying.
void AccumulateVote(const LinearOrder& order, int64_t sign,
                    MajorityMargins& margins);

}  // namespace dpcondorcet

#endif  // DPCONDORCET_TALLY_H_
