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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cumulants/error.hpp"
#include "cumulants/identities.hpp"

#include "json.hpp"

#include <set>

using namespace cumulants;

namespace {

std::string detail(const IdentityReport& r, const std::string& key) {
    for (const auto& [k, v] : r.details)
        if (k == key) return v;
    return {};
}

}  // namespace

TEST_CASE("catalog is consistent") {
    const auto& catalog = identity_catalog();
    CHECK(catalog.size() == 32);
    std::set<std::string_view> names;
    for (const auto& info : catalog) {
        CAPTURE(info.name);
        CHECK(names.insert(info.name).second);
        CHECK(parse_identity(info.name) == info.id);
        CHECK(identity_info(info.id).name == info.name);
        CHECK_FALSE(info.formula.empty());
        CHECK(info.max_n >= 6);
    }
    CHECK(parse_identity("thm4_cycleruns") == IdentityId::CycleRuns);
    CHECK_FALSE(parse_identity("bogus").has_value());
}

TEST_CASE("every identity holds up to its limit") {
    for (const auto& info : identity_catalog()) {
        for (int n = 1; n <= info.max_n; ++n) {
            auto report = verify_identity(info.id, n);
            CAPTURE(report.json());
            CHECK(report.holds);
            CHECK(report.witness.empty());
            CHECK(report.n == n);
            CHECK(report.identity == info.name);
        }
    }
}

TEST_CASE("worked instances") {
    auto r = verify_identity(IdentityId::Mono2BooleanMultivariate, 4);
    CHECK(r.holds);
    CHECK(r.lhs_terms == r.rhs_terms);
    CHECK(verify_identity(IdentityId::CycleRuns, 3).holds);
    CHECK(detail(verify_identity(IdentityId::FactorialSum, 5), "sum") == "24");
    const char* sums[] = {"1", "1", "2", "6", "24", "120"};
    for (int n = 1; n <= 6; ++n) CHECK(detail(verify_identity(IdentityId::FactorialSum, n), "sum") == sums[n - 1]);
    CHECK(detail(verify_identity(IdentityId::EulerianKappa, 4), "kappa") == "x^3 - 4*x^2 + x");
}

TEST_CASE("limits and argument errors") {
    for (const auto& info : identity_catalog()) {
        CHECK_THROWS_AS(verify_identity(info.id, 0), InvalidArgument);
        CHECK_THROWS_AS(verify_identity(info.id, info.max_n + 1), ResourceLimit);
    }
    CHECK_THROWS_AS(experiment_multivariate_alpha(kExperimentLimit + 1), ResourceLimit);
}

TEST_CASE("report serialization") {
    auto r = verify_identity(IdentityId::Free2Boolean, 3);
    auto j = nlohmann::json::parse(r.json());
    CHECK(j["identity"] == "free2boolean");
    CHECK(j["n"] == 3);
    CHECK(j["holds"] == true);
    CHECK(j["lhs_terms"].is_number_unsigned());
    CHECK(j["rhs_terms"].is_number_unsigned());
    CHECK_FALSE(j.contains("witness"));
    CHECK(j["details"].is_object());

    IdentityReport failing{"x", 2, false, 1, 2, "m{1} != m{2}", {}};
    auto f = nlohmann::json::parse(failing.json());
    CHECK(f["witness"] == "m{1} != m{2}");
    CHECK(f["holds"] == false);
}

TEST_CASE("experimental multivariate alpha check") {
    for (int n = 1; n <= 5; ++n) {
        auto r = experiment_multivariate_alpha(n);
        CHECK(detail(r, "status") == "experimental");
        CHECK(r.holds);
    }
}
