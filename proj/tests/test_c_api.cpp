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

#include "cumulants.h"

#include "cumulants/partitions.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

namespace {

using Json = nlohmann::json;

struct Config {
    cumu_config* raw = nullptr;
    Config() { REQUIRE(cumu_config_new(&raw) == CUMU_OK); }
    ~Config() { cumu_config_free(raw); }
    Config& format(const char* f) {
        REQUIRE(cumu_config_set_format(raw, f) == CUMU_OK);
        return *this;
    }
};

struct Result {
    cumu_status status;
    std::string text;
};

template <class Call>
Result call(Call c) {
    cumu_buffer* buf = nullptr;
    cumu_status s = c(&buf);
    Result r{s, buf ? std::string(cumu_buffer_data(buf), cumu_buffer_size(buf)) : std::string()};
    cumu_buffer_free(buf);
    return r;
}

void append(const char* data, size_t len, void* user) { static_cast<std::string*>(user)->append(data, len); }

Result enumerate(const Config& cfg, int n, const char* cls) {
    std::string out;
    cumu_status s = cumu_enumerate(cfg.raw, n, cls, append, &out);
    return {s, out};
}

int lines(const std::string& s) {
    int count = 0;
    for (char c : s) count += c == '\n';
    return count;
}

}  // namespace

TEST_CASE("status and configuration") {
    CHECK(std::string(cumu_status_name(CUMU_RESOURCE_LIMIT)) == "resource limit");
    CHECK(std::string(cumu_version()).size() > 0);
    Config cfg;
    CHECK(cumu_config_format(cfg.raw) == CUMU_FORMAT_JSON);
    CHECK(cumu_config_set_format(cfg.raw, "yaml") == CUMU_USAGE_ERROR);
    CHECK(std::string(cumu_last_error()).find("yaml") != std::string::npos);
    CHECK(cumu_config_set_format(cfg.raw, "csv") == CUMU_OK);
    CHECK(std::string(cumu_last_error()).empty());
    CHECK(cumu_config_format(cfg.raw) == CUMU_FORMAT_CSV);
    CHECK(cumu_config_set_jobs(cfg.raw, 0) == CUMU_USAGE_ERROR);
    CHECK(cumu_config_set_jobs(cfg.raw, 100000) == CUMU_RESOURCE_LIMIT);
    CHECK(cumu_config_set_limit(cfg.raw, -2) == CUMU_USAGE_ERROR);
    CHECK(cumu_config_set_format(nullptr, "json") == CUMU_USAGE_ERROR);
    CHECK(cumu_config_new(nullptr) == CUMU_USAGE_ERROR);
}

TEST_CASE("identity catalog") {
    int count = cumu_identity_count();
    CHECK(count == 32);
    for (int i = 0; i < count; ++i) {
        CHECK(cumu_identity_name(i) != nullptr);
        CHECK(cumu_identity_formula(i) != nullptr);
        CHECK(cumu_identity_max_n(i) >= 6);
    }
    CHECK(cumu_identity_name(count) == nullptr);
    CHECK(cumu_identity_max_n(-1) == -1);
}

TEST_CASE("enumeration") {
    Config text;
    text.format("text");
    CHECK(enumerate(text, 4, "noncrossing").text.size() > 0);
    CHECK(lines(enumerate(text, 4, "noncrossing").text) == 14);
    CHECK(lines(enumerate(text, 3, "monotone").text) == 12);
    CHECK(enumerate(text, 1, "all").text == "1\n");
    CHECK(lines(enumerate(text, 6, "interval").text) == 32);
    for (int n = 1; n <= 6; ++n) {
        std::string expected;
        for (const auto& op : cumulants::enumerate_monotone(n)) expected += op.str() + "\n";
        CHECK(enumerate(text, n, "monotone").text == expected);
    }
    Config json;
    auto arr = Json::parse(enumerate(json, 4, "all").text);
    CHECK(arr.size() == 15);
    CHECK(arr[0]["partition"] == Json::parse("[[1,2,3,4]]"));
    CHECK(arr[0]["irreducible"] == true);
    CHECK(Json::parse(enumerate(json, 3, "monotone").text).size() == 12);
    Config csv;
    csv.format("csv");
    CHECK(lines(enumerate(csv, 4, "irreducible").text) == 1 + 6);

    CHECK(enumerate(text, 4, "bogus").status == CUMU_USAGE_ERROR);
    CHECK(enumerate(text, 0, "all").status == CUMU_USAGE_ERROR);
    CHECK(enumerate(text, 11, "all").status == CUMU_RESOURCE_LIMIT);
    auto before = enumerate(text, 11, "all");
    CHECK(before.text.empty());  // nothing streamed before the limit check
    Config raised;
    raised.format("text");
    REQUIRE(cumu_config_set_limit(raised.raw, 13) == CUMU_OK);
    CHECK(enumerate(raised, 3, "all").status == CUMU_RESOURCE_LIMIT);
}

TEST_CASE("verification") {
    Config cfg;
    auto r = call([&](cumu_buffer** b) { return cumu_verify(cfg.raw, "free2boolean", 4, b); });
    REQUIRE(r.status == CUMU_OK);
    auto j = Json::parse(r.text);
    CHECK(j["identity"] == "free2boolean");
    CHECK(j["holds"] == true);
    REQUIRE(j["reports"].size() == 4);
    for (int n = 1; n <= 4; ++n) CHECK(j["reports"][n - 1]["n"] == n);

    auto alias = call([&](cumu_buffer** b) { return cumu_verify(cfg.raw, "thm4_cycleruns", 3, b); });
    CHECK(alias.status == CUMU_OK);
    CHECK(Json::parse(alias.text)["identity"] == "thm4_cyclecruns");

    auto bogus = call([&](cumu_buffer** b) { return cumu_verify(cfg.raw, "bogus", 3, b); });
    CHECK(bogus.status == CUMU_USAGE_ERROR);
    CHECK(std::string(cumu_last_error()).find("unknown identity") != std::string::npos);
    CHECK(bogus.text.empty());
    CHECK(call([&](cumu_buffer** b) { return cumu_verify(cfg.raw, "class2free", 8, b); }).status == CUMU_RESOURCE_LIMIT);
    CHECK(call([&](cumu_buffer** b) { return cumu_verify(cfg.raw, "class2free", 0, b); }).status == CUMU_USAGE_ERROR);
    CHECK(call([&](cumu_buffer** b) { return cumu_verify(cfg.raw, "all", 10, b); }).status == CUMU_RESOURCE_LIMIT);

    // Output does not depend on the number of workers.
    auto serial = call([&](cumu_buffer** b) { return cumu_verify(cfg.raw, "all", 3, b); });
    Config parallel;
    REQUIRE(cumu_config_set_jobs(parallel.raw, 4) == CUMU_OK);
    auto threaded = call([&](cumu_buffer** b) { return cumu_verify(parallel.raw, "all", 3, b); });
    CHECK(serial.status == CUMU_OK);
    CHECK(serial.text == threaded.text);
    auto all = Json::parse(serial.text);
    CHECK(all["checks"] == 3 * 32);
    int last = 0;
    for (const auto& rep : all["reports"]) {
        CHECK(rep["n"].get<int>() >= last);
        last = rep["n"].get<int>();
    }

    Config text;
    text.format("text");
    auto t = call([&](cumu_buffer** b) { return cumu_verify(text.raw, "cor9_factorial", 6, b); });
    CHECK(t.text.find("cor9_factorial n=6 holds") != std::string::npos);
    CHECK(t.text.find("sum=120") != std::string::npos);
    Config csv;
    csv.format("csv");
    auto c = call([&](cumu_buffer** b) { return cumu_verify(csv.raw, "series_B", 3, b); });
    CHECK(lines(c.text) == 4);
}

TEST_CASE("experiment") {
    Config cfg;
    auto r = call([&](cumu_buffer** b) { return cumu_experiment(cfg.raw, 4, b); });
    REQUIRE(r.status == CUMU_OK);
    auto j = Json::parse(r.text);
    CHECK(j["reports"].size() == 4);
    CHECK(j["reports"][0]["details"]["status"] == "experimental");
    CHECK(call([&](cumu_buffer** b) { return cumu_experiment(cfg.raw, 8, b); }).status == CUMU_RESOURCE_LIMIT);
}

TEST_CASE("tables") {
    Config csv;
    csv.format("csv");
    auto beta = call([&](cumu_buffer** b) { return cumu_table(csv.raw, "beta", 4, b); });
    REQUIRE(beta.status == CUMU_OK);
    CHECK(beta.text.rfind("partition,key,beta\n", 0) == 0);
    CHECK(beta.text.find("\"1,4|2,3\",") != std::string::npos);
    CHECK(beta.text.find(",-1/2\n") != std::string::npos);
    CHECK(lines(beta.text) == 16);

    Config json;
    auto alpha = Json::parse(call([&](cumu_buffer** b) { return cumu_table(json.raw, "alpha", 4, b); }).text);
    CHECK(alpha.size() == 14);
    CHECK(alpha[0]["partition"] == Json::parse("[[1,2,3,4]]"));
    CHECK(alpha[0]["alpha"] == "1");

    // Column sums of T(1,0) per block count are the Eulerian numbers <4, k-1>.
    auto tutte = Json::parse(call([&](cumu_buffer** b) { return cumu_table(json.raw, "tutte", 5, b); }).text);
    std::map<int, long> sums;
    for (const auto& row : tutte) sums[std::stoi(row["blocks"].get<std::string>())] += std::stol(row["tutte"].get<std::string>());
    CHECK(sums == std::map<int, long>{{1, 1}, {2, 11}, {3, 11}, {4, 1}});

    auto mobius = Json::parse(call([&](cumu_buffer** b) { return cumu_table(json.raw, "mobius", 4, b); }).text);
    CHECK(mobius.size() == 15);
    CHECK(mobius[14]["mu_P"] == "-6");
    CHECK(mobius[14]["mu_NC"] == "-5");
    CHECK(mobius[14]["mu_I"] == "-1");

    CHECK(call([&](cumu_buffer** b) { return cumu_table(json.raw, "gamma", 4, b); }).status == CUMU_USAGE_ERROR);
    CHECK(call([&](cumu_buffer** b) { return cumu_table(json.raw, "beta", 8, b); }).status == CUMU_RESOURCE_LIMIT);
}

TEST_CASE("table cache") {
    auto dir = std::filesystem::temp_directory_path() / "cumulants_capi_cache_test";
    std::filesystem::remove_all(dir);
    Config cfg;
    cfg.format("csv");
    REQUIRE(cumu_config_set_cache_dir(cfg.raw, dir.c_str()) == CUMU_OK);
    auto first = call([&](cumu_buffer** b) { return cumu_table(cfg.raw, "beta", 3, b); });
    auto file = dir / "table-beta-3.csv";
    REQUIRE(std::filesystem::exists(file));
    std::ifstream in(file);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == first.text);
    // A second call is served from the file.
    { std::ofstream(file) << "cached\n"; }
    CHECK(call([&](cumu_buffer** b) { return cumu_table(cfg.raw, "beta", 3, b); }).text == "cached\n");
    std::filesystem::remove_all(dir);
}

TEST_CASE("conversion") {
    auto conv = [](const char* from, const char* to, const char* values) {
        return call([&](cumu_buffer** b) { return cumu_convert(from, to, values, b); });
    };
    CHECK(conv("moments", "free", R"([ "1","1","1" ])").text == "[\"1\",\"0\",\"0\"]\n");
    CHECK(conv("boolean", "moments", R"(["1","1","1","1"])").text == "[\"1\",\"2\",\"4\",\"8\"]\n");
    CHECK(conv("classical", "classical", R"(["1/2","-3",4])").text == "[\"1/2\",\"-3\",\"4\"]\n");
    CHECK(conv("M", "H", R"(["0","1","0","3/2"])").text == "[\"0\",\"1\",\"0\",\"0\"]\n");

    auto bad = conv("moments", "free", R"(["1", "1",)");
    CHECK(bad.status == CUMU_USAGE_ERROR);
    CHECK(std::string(cumu_last_error()).find("position") != std::string::npos);
    CHECK(conv("moments", "free", R"(["1", "x/2"])").status == CUMU_USAGE_ERROR);
    CHECK(conv("moments", "free", R"(["1", 0.5])").status == CUMU_USAGE_ERROR);
    CHECK(conv("moments", "free", R"({"a":1})").status == CUMU_USAGE_ERROR);
    CHECK(conv("moments", "quantum", R"(["1"])").status == CUMU_USAGE_ERROR);
    CHECK(conv("moments", "free", "[]").status == CUMU_USAGE_ERROR);
    CHECK(conv("moments", "free", R"(["1","1","1","1","1","1","1","1","1","1","1","1","1"])").status ==
          CUMU_RESOURCE_LIMIT);
    CHECK(conv(nullptr, "free", "[]").status == CUMU_USAGE_ERROR);
}

TEST_CASE("cumulant polynomials, Moebius values and partition info") {
    Config text;
    text.format("text");
    auto b2 = call([&](cumu_buffer** b) { return cumu_cumulant(text.raw, "boolean", 2, b); });
    CHECK(b2.status == CUMU_OK);
    CHECK(b2.text.find("m{1,2}") != std::string::npos);
    CHECK(call([&](cumu_buffer** b) { return cumu_cumulant(text.raw, "classical", 9, b); }).status == CUMU_RESOURCE_LIMIT);
    CHECK(call([&](cumu_buffer** b) { return cumu_cumulant(text.raw, "x", 2, b); }).status == CUMU_USAGE_ERROR);
    Config csv;
    csv.format("csv");
    CHECK(lines(call([&](cumu_buffer** b) { return cumu_cumulant(csv.raw, "free", 3, b); }).text) == 1 + 5);

    auto mob = [](const char* l, const char* pi, const char* sigma) {
        return call([&](cumu_buffer** b) { return cumu_mobius(l, pi, sigma, b); });
    };
    CHECK(Json::parse(mob("NC", "1|2|3|4", nullptr).text)["mobius"] == "-5");
    CHECK(Json::parse(mob("P", "[[1],[2],[3],[4]]", nullptr).text)["mobius"] == "-6");
    CHECK(Json::parse(mob("I", "1|2|3", "1,2|3").text)["mobius"] == "-1");
    CHECK(mob("NC", "1,3|2,4", nullptr).status == CUMU_USAGE_ERROR);
    CHECK(mob("P", "1,2|3", "1|2|3").status == CUMU_USAGE_ERROR);
    CHECK(mob("P", "1,,2", nullptr).status == CUMU_USAGE_ERROR);

    Config json;
    auto info = call([&](cumu_buffer** b) { return cumu_partition_info(json.raw, "1,3|2,4", b); });
    REQUIRE(info.status == CUMU_OK);
    auto j = Json::parse(info.text);
    CHECK(j["blocks"] == 2);
    CHECK(j["connected"] == true);
    CHECK(j["noncrossing"] == false);
    CHECK(j["crossing_tutte_1_0"] == "1");
    CHECK(j["beta"] == "-1");
    CHECK_FALSE(j.contains("alpha"));
    auto nested = Json::parse(call([&](cumu_buffer** b) { return cumu_partition_info(json.raw, "1,4|2|3", b); }).text);
    CHECK(nested["beta"] == "1/3");
    CHECK(nested["interval_pyramids"] == "1");
    CHECK(nested["tau_factorial"] == "3");
}
