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

// Command-line front end. Everything goes through the C interface in
// cumulants.h; this file only parses arguments and routes output.

#include "cumulants.h"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 4;

struct Options {
    std::string format;
    std::optional<int> limit;
    std::optional<int> jobs;
    std::string cache_dir;
    bool verbose = false;
};

std::optional<std::string> env(const char* name) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::string(v);
}

int to_exit(cumu_status s) {
    switch (s) {
        case CUMU_OK: return 0;
        case CUMU_IDENTITY_FAILED: return 1;
        case CUMU_USAGE_ERROR: return kExitUsage;
        case CUMU_RESOURCE_LIMIT: return 3;
        default: return kExitInternal;
    }
}

int report_error(cumu_status s) {
    std::cerr << "cumulants: " << cumu_status_name(s) << ": " << cumu_last_error() << "\n";
    return to_exit(s);
}

class ConfigHandle {
public:
    ConfigHandle() {
        if (cumu_config_new(&raw_) != CUMU_OK) throw std::runtime_error(cumu_last_error());
    }
    ~ConfigHandle() { cumu_config_free(raw_); }
    ConfigHandle(const ConfigHandle&) = delete;
    ConfigHandle& operator=(const ConfigHandle&) = delete;
    cumu_config* get() const { return raw_; }

private:
    cumu_config* raw_ = nullptr;
};

// Flag, then environment, then the command's default.
cumu_status configure(const Options& o, const char* default_format, ConfigHandle& cfg) {
    std::string format = o.format;
    if (format.empty()) format = env("CUMULANTS_FORMAT").value_or(default_format);
    if (auto s = cumu_config_set_format(cfg.get(), format.c_str()); s != CUMU_OK) return s;

    std::optional<int> limit = o.limit, jobs = o.jobs;
    try {
        if (!limit)
            if (auto v = env("CUMULANTS_LIMIT")) limit = std::stoi(*v);
        if (!jobs)
            if (auto v = env("CUMULANTS_JOBS")) jobs = std::stoi(*v);
    } catch (const std::exception&) {
        std::cerr << "cumulants: CUMULANTS_LIMIT and CUMULANTS_JOBS must be integers\n";
        return CUMU_USAGE_ERROR;
    }
    if (limit)
        if (auto s = cumu_config_set_limit(cfg.get(), *limit); s != CUMU_OK) return s;
    int j = jobs.value_or(1);
    if (j == 0) j = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (auto s = cumu_config_set_jobs(cfg.get(), j); s != CUMU_OK) return s;

    std::string cache = o.cache_dir.empty() ? env("CUMULANTS_CACHE_DIR").value_or("") : o.cache_dir;
    return cumu_config_set_cache_dir(cfg.get(), cache.c_str());
}

// Prints a buffer-producing call. Identity failures still print their report.
template <class Call>
int run_buffered(Call call) {
    cumu_buffer* out = nullptr;
    cumu_status s = call(&out);
    if (out != nullptr) {
        std::fwrite(cumu_buffer_data(out), 1, cumu_buffer_size(out), stdout);
        std::fflush(stdout);
        cumu_buffer_free(out);
    }
    if (s == CUMU_IDENTITY_FAILED) {
        std::cerr << "cumulants: " << cumu_last_error() << "\n";
        return to_exit(s);
    }
    return s == CUMU_OK ? 0 : report_error(s);
}

void write_stdout(const char* data, size_t len, void*) { std::fwrite(data, 1, len, stdout); }

std::string read_stdin() {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of identities between classical, free, Boolean and monotone cumulants."};
    app.require_subcommand(1);
    app.fallthrough();  // global options may follow the subcommand
    app.set_version_flag("--version", cumu_version());

    Options opt;
    app.add_option("--format", opt.format, "Output format: json, csv or text (env CUMULANTS_FORMAT)")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--limit", opt.limit, "Enumeration size limit override (env CUMULANTS_LIMIT)");
    app.add_option("--jobs", opt.jobs, "Worker threads for verification sweeps, 0 = all cores (env CUMULANTS_JOBS)");
    app.add_option("--cache-dir", opt.cache_dir, "Directory caching generated tables (env CUMULANTS_CACHE_DIR)");
    app.add_flag("-v,--verbose", opt.verbose, "Timing on stderr");

    int n = 0;
    std::string name, second, third;

    auto* enumerate = app.add_subcommand("enumerate", "List the partitions of [n] in a class");
    enumerate->add_option("n", n)->required();
    enumerate->add_option("class", name,
                          "all, noncrossing, interval, irreducible, connected, irreducible_noncrossing, "
                          "connected_noncrossing or monotone")
        ->required();

    bool all = false;
    std::vector<std::string> verify_args;
    auto* verify = app.add_subcommand("verify", "Check an identity (or the whole catalog with --all) for n = 1..N");
    verify->add_flag("--all", all, "Run every identity, each up to min(N, its limit)");
    verify->add_option("args", verify_args, "IDENTITY N, or N with --all")->required();

    auto* experiment = app.add_subcommand("experiment", "Run the unproven multivariate alpha check for n = 1..N");
    experiment->add_option("n", n)->required();

    auto* table = app.add_subcommand("table", "Coefficient table: beta, alpha, tutte or mobius");
    table->add_option("what", name)->required()->check(CLI::IsMember({"beta", "alpha", "tutte", "mobius"}));
    table->add_option("n", n)->required();

    auto* convert = app.add_subcommand("convert", "Convert a univariate sequence between bases");
    convert->add_option("from", name, "moments, classical, free, boolean, monotone")->required();
    convert->add_option("to", second)->required();
    convert->add_option("values", third, "JSON array of rationals, or - for stdin")->required();

    auto* cumulant = app.add_subcommand("cumulant", "Multivariate cumulant as a polynomial in moments");
    cumulant->add_option("kind", name, "classical, free, boolean or monotone")->required();
    cumulant->add_option("n", n)->required();

    auto* mobius = app.add_subcommand("mobius", "Moebius function on an interval of P, NC or I");
    mobius->add_option("lattice", name)->required();
    mobius->add_option("pi", second, "Lower partition, e.g. 1,3|2 or [[1,3],[2]]")->required();
    mobius->add_option("sigma", third, "Upper partition (default: one block)");

    auto* info = app.add_subcommand("info", "Graphs, Tutte values, pyramids, alpha and beta of a partition");
    info->add_option("partition", name)->required();

    auto* identities = app.add_subcommand("identities", "List the identity catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    auto started = std::chrono::steady_clock::now();
    int code = 0;
    try {
        ConfigHandle cfg;
        const char* default_format = "json";
        if (enumerate->parsed() || identities->parsed() || cumulant->parsed() || info->parsed()) default_format = "text";
        if (table->parsed()) default_format = "csv";
        if (auto s = configure(opt, default_format, cfg); s != CUMU_OK) return report_error(s);

        if (enumerate->parsed()) {
            cumu_status s = cumu_enumerate(cfg.get(), n, name.c_str(), write_stdout, nullptr);
            std::fflush(stdout);
            code = s == CUMU_OK ? 0 : report_error(s);
        } else if (verify->parsed()) {
            if (verify_args.size() != (all ? 1u : 2u)) {
                std::cerr << "cumulants: usage: verify IDENTITY N | verify --all N\n";
                return kExitUsage;
            }
            std::string identity = all ? "all" : verify_args[0];
            try {
                n = std::stoi(verify_args.back());
            } catch (const std::exception&) {
                std::cerr << "cumulants: N must be an integer, got '" << verify_args.back() << "'\n";
                return kExitUsage;
            }
            code = run_buffered([&](cumu_buffer** out) { return cumu_verify(cfg.get(), identity.c_str(), n, out); });
        } else if (experiment->parsed()) {
            code = run_buffered([&](cumu_buffer** out) { return cumu_experiment(cfg.get(), n, out); });
        } else if (table->parsed()) {
            code = run_buffered([&](cumu_buffer** out) { return cumu_table(cfg.get(), name.c_str(), n, out); });
        } else if (convert->parsed()) {
            if (third == "-") third = read_stdin();
            code = run_buffered([&](cumu_buffer** out) {
                return cumu_convert(name.c_str(), second.c_str(), third.c_str(), out);
            });
        } else if (cumulant->parsed()) {
            code = run_buffered([&](cumu_buffer** out) { return cumu_cumulant(cfg.get(), name.c_str(), n, out); });
        } else if (mobius->parsed()) {
            const char* sigma = third.empty() ? nullptr : third.c_str();
            code = run_buffered([&](cumu_buffer** out) { return cumu_mobius(name.c_str(), second.c_str(), sigma, out); });
        } else if (info->parsed()) {
            code = run_buffered([&](cumu_buffer** out) { return cumu_partition_info(cfg.get(), name.c_str(), out); });
        } else if (identities->parsed()) {
            for (int i = 0; i < cumu_identity_count(); ++i)
                std::cout << cumu_identity_name(i) << "\t" << cumu_identity_max_n(i) << "\t"
                          << cumu_identity_formula(i) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "cumulants: " << e.what() << "\n";
        return kExitInternal;
    }
    if (opt.verbose) {
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - started;
        std::cerr << "cumulants: finished in " << dt.count() << " s\n";
    }
    return code;
}
