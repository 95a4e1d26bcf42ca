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

// JSON views of tallies, distributions, audit reports and bound tables.
// Numbers carry 12 significant digits; non-finite values become null.

#ifndef DPCONDORCET_JSON_IO_H_
#define DPCONDORCET_JSON_IO_H_

#include "dpcondorcet/audit.h"
#include "dpcondorcet/ballots.h"
#include "dpcondorcet/bounds.h"
#include "dpcondorcet/distribution.h"
#include "dpcondorcet/mechanisms.h"
#include "dpcondorcet/tally.h"
#include "json.hpp"

namespace dpcondorcet {

// x rounded to 12 significant digits, or null when x is not finite.
nlohmann::json Number(double x);

nlohmann::json TallyToJson(const Profile& profile);

nlohmann::json DistributionToJson(const NoiseSpec& spec,
                                  const Profile& profile);

nlohmann::json PrivacyReportToJson(const PrivacyAuditReport& report);
nlohmann::json AxiomReportToJson(const AxiomReport& report);

nlohmann::json BoundTableToJson(const BoundTable& table);

}  // namespace dpcondorcet

#endif  // DPCONDORCET_JSON_IO_H_
