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

#include "dpcondorcet/tally.h"

#include <optional>

namespace dpcondorcet {

PairwiseTally ComputePairwiseTally(const Profile& profile) {
  const int m = profile.num_alternatives();
  PairwiseTally tally{SquareMatrix<int64_t>(m, 0), profile.num_voters()};
  for (const LinearOrder& vote : profile.votes()) {
    for (int hi = 0; hi < m; ++hi) {
      for (int lo = hi + 1; lo < m; ++lo) {
        ++tally.counts(vote.at(hi), vote.at(lo));
      }
    }
  }
  return tally;
}

MajorityMargins ComputeMargins(const PairwiseTally& tally) {
  const int m = tally.size();
  MajorityMargins margins{SquareMatrix<int64_t>(m, 0)};
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      margins.w(a, b) = tally(a, b) - tally(b, a);
    }
  }
  return margins;
}

Umg ComputeUmg(const MajorityMargins& margins) {
  const int m = margins.size();
  Umg umg{SquareMatrix<int>(m, 0)};
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      const int64_t w = margins(a, b);
      umg.u(a, b) = (w > 0) - (w < 0);
    }
  }
  return umg;
}

std::optional<Alternative> CondorcetWinner(const Umg& umg) {
  const int m = umg.size();
  for (int a = 0; a < m; ++a) {
    bool beats_all = true;
    for (int b = 0; b < m && beats_all; ++b) {
      if (b != a && umg(a, b) != 1) beats_all = false;
    }
    if (beats_all) return a;
  }
  return std::nullopt;
}

MajorityMargins ProfileMargins(const Profile& profile) {
  return ComputeMargins(ComputePairwiseTally(profile));
}

void AccumulateVote(const LinearOrder& order, int64_t sign,
                    MajorityMargins& margins) {
  const int m = order.size();
  for (int hi = 0; hi < m; ++hi) {
    for (int lo = hi + 1; lo < m; ++lo) {
      margins.w(order.at(hi), order.at(lo)) += sign;
      margins.w(order.at(lo), order.at(hi)) -= sign;
    }
  }
}

}  // namespace dpcondorcet
