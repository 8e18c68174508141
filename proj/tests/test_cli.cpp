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

#include "json.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#ifndef CUMULANTS_CLI
#error "CUMULANTS_CLI must name the command-line binary"
#endif

namespace {

struct Run {
    int code;
    std::string out;
};

// Runs the binary through the shell; `env` is a prefix such as "VAR=x" or "cmd |".
// stderr is folded into stdout when asked.
Run run(const std::string& args, const std::string& env = "", bool with_stderr = false) {
    std::string cmd = env + (env.empty() ? "" : " ") + "'" CUMULANTS_CLI "' " + args + (with_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int lines(const std::string& s) {
    int count = 0;
    for (char c : s) count += c == '\n';
    return count;
}

}  // namespace

TEST_CASE("enumerate") {
    CHECK(lines(run("enumerate 4 noncrossing").out) == 14);
    CHECK(lines(run("enumerate 3 monotone").out) == 12);
    CHECK(run("enumerate 1 all").out == "1\n");
    CHECK(run("enumerate 3 nonsense").code == 2);
    CHECK(run("enumerate 11 all").code == 3);
    auto j = nlohmann::json::parse(run("--format json enumerate 3 all").out);
    CHECK(j.size() == 5);
}

TEST_CASE("verify") {
    CHECK(run("verify thm3_boolean2class_tutte 5").code == 0);
    auto cor = run("--format text verify cor9_factorial 6");
    CHECK(cor.code == 0);
    for (const char* s : {"sum=1 ", "sum=2 ", "sum=6 ", "sum=24 ", "sum=120 "}) CHECK(cor.out.find(s) != std::string::npos);
    auto bogus = run("verify bogus 3", "", true);
    CHECK(bogus.code == 2);
    CHECK(bogus.out.find("unknown identity") != std::string::npos);
    CHECK(run("verify class2free 9").code == 3);
    CHECK(run("verify class2free").code == 2);
    CHECK(run("verify --all").code == 2);
    CHECK(run("verify class2free x").code == 2);
    auto all = run("verify --all 2");
    CHECK(all.code == 0);
    auto j = nlohmann::json::parse(all.out);
    CHECK(j["holds"] == true);
    CHECK(j["reports"].size() == 64);
}

TEST_CASE("output is deterministic and independent of --jobs") {
    auto a = run("verify --all 4 --jobs 1");
    auto b = run("verify --all 4 --jobs 3");
    auto c = run("verify --all 4", "CUMULANTS_JOBS=2");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(run("table beta 5").out == run("table beta 5").out);
}

TEST_CASE("table") {
    auto beta = run("table beta 4");
    CHECK(beta.code == 0);
    CHECK(beta.out.find("\"1,4|2,3\",2:;0>1,-1/2\n") != std::string::npos);
    CHECK(run("table alpha 4").out.find("\"1,2,3,4\",\"[[[1,2,3,4]]]\",1,1\n") != std::string::npos);
    CHECK(run("table gamma 4").code == 2);
    CHECK(run("table beta 8").code == 3);

    auto dir = std::filesystem::temp_directory_path() / "cumulants_cli_cache_test";
    std::filesystem::remove_all(dir);
    auto fresh = run("--cache-dir '" + dir.string() + "' table tutte 5");
    CHECK(std::filesystem::exists(dir / "table-tutte-5.csv"));
    auto cached = run("table tutte 5", "CUMULANTS_CACHE_DIR='" + dir.string() + "'");
    CHECK(fresh.out == cached.out);
    std::filesystem::remove_all(dir);
}

TEST_CASE("convert") {
    CHECK(run("convert moments free '[ \"1\",\"1\",\"1\" ]'").out == "[\"1\",\"0\",\"0\"]\n");
    CHECK(run("convert boolean moments '[\"1\",\"1\",\"1\",\"1\"]'").out == "[\"1\",\"2\",\"4\",\"8\"]\n");
    CHECK(run("convert classical classical '[\"2/3\",\"-1\"]'").out == "[\"2/3\",\"-1\"]\n");
    CHECK(run("convert free moments -", "printf '%s' '[\"0\",\"1\",\"0\",\"0\"]' |").out == "[\"0\",\"1\",\"0\",\"2\"]\n");
    auto bad = run("convert moments free '[\"1\",'", "", true);
    CHECK(bad.code == 2);
    CHECK(bad.out.find("position") != std::string::npos);
}

TEST_CASE("configuration precedence") {
    // Flag beats environment; environment beats the per-command default.
    CHECK(run("enumerate 2 all", "CUMULANTS_FORMAT=csv").out.rfind("partition,blocks", 0) == 0);
    CHECK(run("--format text enumerate 2 all", "CUMULANTS_FORMAT=csv").out == "1,2\n1|2\n");
    CHECK(run("enumerate 2 all", "CUMULANTS_FORMAT=xml").code == 2);
    CHECK(run("enumerate 9 all", "CUMULANTS_LIMIT=8").code == 3);
    CHECK(run("--limit 9 enumerate 9 all", "CUMULANTS_LIMIT=8").code == 0);
    CHECK(run("--format yaml enumerate 2 all").code == 2);
    CHECK(run("--jobs -1 verify free2boolean 2").code == 2);
}

TEST_CASE("misc commands") {
    CHECK(run("--help").code == 0);
    CHECK(run("").code == 2);
    CHECK(lines(run("identities").out) == 32);
    CHECK(run("cumulant boolean 2").out == "m{1,2} - m{1}*m{2}\n");
    CHECK(run("mobius NC '1|2|3|4'").out.find("\"mobius\":\"-5\"") != std::string::npos);
    CHECK(run("info '1,3|2,4'").out.find("beta: -1\n") != std::string::npos);
    CHECK(run("info '1,3|4'").code == 2);
    auto exp = nlohmann::json::parse(run("experiment 3").out);
    CHECK(exp["reports"].size() == 3);
}
