/*
 Copyright 2026 The cumulants authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cumulants {

enum class IdentityId {
    Free2Boolean,
    Class2Free,
    Class2Boolean,
    Boolean2Free,
    Free2ClassTutte,
    Mono2BooleanMultivariate,
    Mono2FreeMultivariate,
    Free2MonoUnivariate,
    Boolean2MonoUnivariate,
    Class2MonoUnivariate,
    Boolean2ClassTutte,
    CycleRuns,
    Runs,
    MomentCumulantK,
    MomentCumulantR,
    MomentCumulantB,
    MomentCumulantH,
    MobiusInversions,
    SeriesB,
    SeriesR,
    SwapIdentities,
    TildeRelations,
    MonotoneFlowInteger,
    LenczewskiSum,
    BetaExpansion,
    BetaReducible,
    BetaNoNesting,
    BetaDepthTwo,
    FactorialSum,
    EulerianKappa,
    DeterminantFormulas,
    LogBesselCarlitz,
};

struct IdentityInfo {
    IdentityId id;
    std::string_view name;     // catalog name used on the command line
    std::string_view formula;  // plain-text statement
    int max_n;                 // largest n that is run
};

const std::vector<IdentityInfo>& identity_catalog();
const IdentityInfo& identity_info(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);

struct IdentityReport {
    std::string identity;
    int n = 0;
    bool holds = true;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
    std::string witness;  // first failing comparison, empty when everything holds
    std::vector<std::pair<std::string, std::string>> details;

    std::string json() const;
};

// Instantiates both sides for one n and compares them exactly.
// n < 1 is an InvalidArgument; n above the catalog limit is a ResourceLimit.
IdentityReport verify_identity(IdentityId id, int n);

// Unproven multivariate form of the alpha-weighted monotone formulas. Reports
// the outcome for one n and never treats a mismatch as an error.
constexpr int kExperimentLimit = 7;
IdentityReport experiment_multivariate_alpha(int n);

}  // namespace cumulants
