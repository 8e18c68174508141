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

#include "cumulants.h"

#include "cumulants/beta.hpp"
#include "cumulants/cumulants.hpp"
#include "cumulants/error.hpp"
#include "cumulants/forest.hpp"
#include "cumulants/graph.hpp"
#include "cumulants/identities.hpp"
#include "cumulants/partitions.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

struct cumu_config {
    cumu_format format = CUMU_FORMAT_JSON;
    int limit = -1;
    int jobs = 1;
    std::string cache_dir;
};

struct cumu_buffer {
    std::string text;
};

namespace {

using namespace cumulants;
using Json = nlohmann::ordered_json;

constexpr int kMaxJobs = 256;
constexpr int kPartitionInfoLimit = 12;

thread_local std::string g_last_error;

cumu_status fail(cumu_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

// Runs body and translates exceptions into status codes.
template <class Body>
cumu_status guarded(Body&& body) noexcept {
    g_last_error.clear();
    try {
        return body();
    } catch (const ResourceLimit& e) {
        return fail(CUMU_RESOURCE_LIMIT, e.what());
    } catch (const Error& e) {
        return fail(CUMU_USAGE_ERROR, e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(CUMU_USAGE_ERROR, e.what());
    } catch (const std::bad_alloc&) {
        return fail(CUMU_RESOURCE_LIMIT, "out of memory");
    } catch (const std::exception& e) {
        return fail(CUMU_INTERNAL_ERROR, e.what());
    } catch (...) {
        return fail(CUMU_INTERNAL_ERROR, "unknown exception");
    }
}

cumu_status emit(cumu_buffer** out, std::string text) {
    *out = new cumu_buffer{std::move(text)};
    return CUMU_OK;
}

void require_out(cumu_buffer** out) {
    require(out != nullptr, "output pointer is null");
    *out = nullptr;
}

std::string_view arg(const char* text, const char* what) {
    require(text != nullptr, std::string(what) + " is null");
    return text;
}

SetPartition parse_partition(std::string_view text) {
    auto first = text.find_first_not_of(" \t\n");
    if (first != std::string_view::npos && text[first] == '[') return SetPartition::parse_json(text);
    return SetPartition::parse(text);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string row;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) row += ',';
        row += csv_field(fields[i]);
    }
    return row + "\n";
}

// A table with string cells. JSON cells named "partition" hold list-of-lists.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::string render(cumu_format format) const {
        if (format == CUMU_FORMAT_CSV) {
            std::string out = csv_row(columns);
            for (const auto& r : rows) out += csv_row(r);
            return out;
        }
        if (format == CUMU_FORMAT_TEXT) {
            std::vector<std::size_t> width(columns.size());
            for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
            for (const auto& r : rows)
                for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
            auto line = [&](const std::vector<std::string>& r) {
                std::string s;
                for (std::size_t c = 0; c < r.size(); ++c) {
                    s += r[c];
                    if (c + 1 < r.size()) s += std::string(width[c] - r[c].size() + 2, ' ');
                }
                return s + "\n";
            };
            std::string out = line(columns);
            for (const auto& r : rows) out += line(r);
            return out;
        }
        Json arr = Json::array();
        for (const auto& r : rows) {
            Json obj = Json::object();
            for (std::size_t c = 0; c < columns.size(); ++c) {
                if (columns[c] == "partition")
                    obj[columns[c]] = parse_partition(r[c]).blocks();
                else
                    obj[columns[c]] = r[c];
            }
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }
};

const char* extension(cumu_format format) {
    switch (format) {
        case CUMU_FORMAT_CSV: return "csv";
        case CUMU_FORMAT_TEXT: return "txt";
        default: return "json";
    }
}

std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Write-then-rename so concurrent readers never see a partial file. Failures
// to cache are not errors.
void write_file(const std::filesystem::path& path, const std::string& text) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) return;
    auto tmp = path;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) return;
        out << text;
        if (!out) return;
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
}

// ---- enumeration ----

void stream(cumu_sink sink, void* user, const std::string& s) { sink(s.data(), s.size(), user); }

std::string flags_json(const SetPartition& p) {
    auto f = classify(p);
    Json j = Json::object();
    j["partition"] = p.blocks();
    j["blocks"] = p.block_count();
    j["noncrossing"] = f.noncrossing;
    j["interval"] = f.interval;
    j["irreducible"] = f.irreducible;
    j["connected"] = f.connected;
    return j.dump();
}

std::string flags_csv(const SetPartition& p) {
    auto f = classify(p);
    auto b = [](bool v) { return std::string(v ? "1" : "0"); };
    return csv_row({p.str(), std::to_string(p.block_count()), b(f.noncrossing), b(f.interval), b(f.irreducible),
                    b(f.connected)});
}

// Admissible block orders of a noncrossing partition, lexicographically:
// each block must follow every block it nests in.
void for_each_monotone_order(const SetPartition& p, const std::function<void(const std::vector<int>&)>& visit) {
    int k = p.block_count();
    std::vector<std::vector<int>> outer(static_cast<std::size_t>(k));
    for (int b = 0; b < k; ++b)
        for (int o = 0; o < k; ++o)
            if (o != b && block_nests_in(p.mask(b), p.mask(o))) outer[static_cast<std::size_t>(b)].push_back(o);
    std::vector<int> order;
    std::vector<bool> placed(static_cast<std::size_t>(k), false);
    std::function<void()> rec = [&] {
        if (static_cast<int>(order.size()) == k) {
            visit(order);
            return;
        }
        for (int b = 0; b < k; ++b) {
            if (placed[static_cast<std::size_t>(b)]) continue;
            const auto& need = outer[static_cast<std::size_t>(b)];
            if (!std::all_of(need.begin(), need.end(), [&](int o) { return placed[static_cast<std::size_t>(o)]; }))
                continue;
            placed[static_cast<std::size_t>(b)] = true;
            order.push_back(b);
            rec();
            order.pop_back();
            placed[static_cast<std::size_t>(b)] = false;
        }
    };
    rec();
}

void enumerate_monotone_stream(const cumu_config& cfg, int n, cumu_sink sink, void* user) {
    int limit = cfg.limit < 0 ? kMonotoneDefaultLimit : cfg.limit;
    require_limit(limit, kMonotoneHardLimit, "monotone enumeration limit");
    require_limit(n, limit, "monotone enumeration");
    bool json = cfg.format == CUMU_FORMAT_JSON;
    bool first = true;
    if (json) stream(sink, user, "[\n");
    if (cfg.format == CUMU_FORMAT_CSV) stream(sink, user, "ordered_partition,blocks\n");
    for_each_partition(n, PartitionClass::Noncrossing, [&](const SetPartition& p) {
        for_each_monotone_order(p, [&](const std::vector<int>& order) {
            OrderedPartition op{p, order};
            if (json) {
                Json blocks = Json::array();
                for (int b : order) blocks.push_back(subset_elements(p.mask(b)));
                stream(sink, user, std::string(first ? "" : ",\n") + blocks.dump());
            } else if (cfg.format == CUMU_FORMAT_CSV) {
                stream(sink, user, csv_row({op.str(), std::to_string(p.block_count())}));
            } else {
                stream(sink, user, op.str() + "\n");
            }
            first = false;
        });
    }, kMonotoneHardLimit);
    if (json) stream(sink, user, first ? "]\n" : "\n]\n");
}

// ---- verification ----

using Task = std::pair<IdentityId, int>;

// Runs tasks on up to `jobs` threads; results keep task order. The first
// failing task (in task order) has its exception rethrown.
template <class T, class Run>
std::vector<IdentityReport> run_tasks(const std::vector<T>& tasks, int jobs, Run run) {
    std::vector<IdentityReport> results(tasks.size());
    std::vector<std::exception_ptr> errors(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                results[i] = run(tasks[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::size_t threads = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), tasks.size());
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

std::string render_reports(const cumu_config& cfg, const std::string& name, int n_max,
                           const std::vector<IdentityReport>& reports) {
    bool holds = std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.holds; });
    if (cfg.format == CUMU_FORMAT_CSV) {
        std::string out = csv_row({"identity", "n", "holds", "lhs_terms", "rhs_terms", "witness"});
        for (const auto& r : reports)
            out += csv_row({r.identity, std::to_string(r.n), r.holds ? "true" : "false", std::to_string(r.lhs_terms),
                            std::to_string(r.rhs_terms), r.witness});
        return out;
    }
    if (cfg.format == CUMU_FORMAT_TEXT) {
        std::string out;
        for (const auto& r : reports) {
            out += r.identity + " n=" + std::to_string(r.n) + (r.holds ? " holds" : " FAILS") + " (" +
                   std::to_string(r.lhs_terms) + " | " + std::to_string(r.rhs_terms) + " terms)";
            for (const auto& [k, v] : r.details)
                if (k != "comparisons") out += " " + k + "=" + v;
            out += "\n";
            if (!r.witness.empty()) out += "  witness: " + r.witness + "\n";
        }
        out += std::to_string(reports.size()) + (holds ? " checks hold\n" : " checks run, some FAIL\n");
        return out;
    }
    Json j = Json::object();
    j["identity"] = name;
    j["n_max"] = n_max;
    j["holds"] = holds;
    j["checks"] = reports.size();
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(Json::parse(r.json()));
    j["reports"] = std::move(arr);
    return j.dump(2) + "\n";
}

// ---- tables ----

Table beta_rows(int n) {
    Table t{{"partition", "key", "beta"}, {}};
    for (const auto& row : beta_table(n)) t.rows.push_back({row.partition.str(), row.key, row.beta.str()});
    return t;
}

Table alpha_rows(const cumu_config& cfg, int n) {
    Table t{{"partition", "forest", "tau_factorial", "alpha"}, {}};
    for (const auto& p : enumerate(n, PartitionClass::Noncrossing, cfg.limit))
        t.rows.push_back({p.str(), nesting_forest(p).json(p), tau_factorial(p).get_str(), alpha(p).str()});
    return t;
}

Table tutte_rows(const cumu_config& cfg, int n) {
    Table t{{"partition", "blocks", "tutte"}, {}};
    for (const auto& p : enumerate(n, PartitionClass::Irreducible, cfg.limit))
        t.rows.push_back({p.str(), std::to_string(p.block_count()),
                          tutte_eval(anti_interval_graph(p), 1, 0).str()});
    return t;
}

Table mobius_rows(const cumu_config& cfg, int n) {
    Table t{{"partition", "mu_P", "mu_NC", "mu_I"}, {}};
    auto top = SetPartition::coarsest(n);
    for (const auto& p : enumerate(n, PartitionClass::All, cfg.limit)) {
        auto f = classify(p);
        t.rows.push_back({p.str(), mobius(p, top, Lattice::P).get_str(),
                          f.noncrossing ? mobius(p, top, Lattice::NC).get_str() : "",
                          f.interval ? mobius(p, top, Lattice::I).get_str() : ""});
    }
    return t;
}

std::string bool_str(bool v) { return v ? "true" : "false"; }

}  // namespace

extern "C" {

const char* cumu_version(void) { return "1.0.0"; }

const char* cumu_status_name(cumu_status status) {
    switch (status) {
        case CUMU_OK: return "ok";
        case CUMU_IDENTITY_FAILED: return "identity failed";
        case CUMU_USAGE_ERROR: return "usage error";
        case CUMU_RESOURCE_LIMIT: return "resource limit";
        case CUMU_INTERNAL_ERROR: return "internal error";
    }
    return "unknown status";
}

const char* cumu_last_error(void) { return g_last_error.c_str(); }

cumu_status cumu_config_new(cumu_config** out) {
    return guarded([&] {
        require(out != nullptr, "output pointer is null");
        *out = new cumu_config();
        return CUMU_OK;
    });
}

void cumu_config_free(cumu_config* config) { delete config; }

cumu_status cumu_config_set_format(cumu_config* config, const char* name) {
    return guarded([&] {
        require(config != nullptr, "config is null");
        std::string_view f = arg(name, "format");
        if (f == "json") config->format = CUMU_FORMAT_JSON;
        else if (f == "csv") config->format = CUMU_FORMAT_CSV;
        else if (f == "text") config->format = CUMU_FORMAT_TEXT;
        else throw InvalidArgument("unknown format '" + std::string(f) + "' (json, csv, text)");
        return CUMU_OK;
    });
}

cumu_status cumu_config_set_limit(cumu_config* config, int limit) {
    return guarded([&] {
        require(config != nullptr, "config is null");
        require(limit >= -1, "limit must be -1 or nonnegative");
        config->limit = limit;
        return CUMU_OK;
    });
}

cumu_status cumu_config_set_jobs(cumu_config* config, int jobs) {
    return guarded([&] {
        require(config != nullptr, "config is null");
        require(jobs >= 1, "jobs must be at least 1");
        require_limit(jobs, kMaxJobs, "jobs");
        config->jobs = jobs;
        return CUMU_OK;
    });
}

cumu_status cumu_config_set_cache_dir(cumu_config* config, const char* path) {
    return guarded([&] {
        require(config != nullptr, "config is null");
        config->cache_dir = path ? path : "";
        return CUMU_OK;
    });
}

cumu_format cumu_config_format(const cumu_config* config) { return config ? config->format : CUMU_FORMAT_JSON; }

const char* cumu_buffer_data(const cumu_buffer* buffer) { return buffer ? buffer->text.c_str() : ""; }
size_t cumu_buffer_size(const cumu_buffer* buffer) { return buffer ? buffer->text.size() : 0; }
void cumu_buffer_free(cumu_buffer* buffer) { delete buffer; }

int cumu_identity_count(void) { return static_cast<int>(identity_catalog().size()); }

const char* cumu_identity_name(int index) {
    if (index < 0 || index >= cumu_identity_count()) return nullptr;
    return identity_catalog()[static_cast<std::size_t>(index)].name.data();
}

const char* cumu_identity_formula(int index) {
    if (index < 0 || index >= cumu_identity_count()) return nullptr;
    return identity_catalog()[static_cast<std::size_t>(index)].formula.data();
}

int cumu_identity_max_n(int index) {
    if (index < 0 || index >= cumu_identity_count()) return -1;
    return identity_catalog()[static_cast<std::size_t>(index)].max_n;
}

cumu_status cumu_enumerate(const cumu_config* config, int n, const char* cls, cumu_sink sink, void* user) {
    return guarded([&] {
        require(config != nullptr && sink != nullptr, "config and sink are required");
        std::string_view name = arg(cls, "class");
        require(n >= 1, "n must be at least 1");
        if (name == "monotone") {
            enumerate_monotone_stream(*config, n, sink, user);
            return CUMU_OK;
        }
        PartitionClass pc = parse_partition_class(name);
        // Reject limits before streaming anything.
        int limit = config->limit < 0 ? default_limit(pc) : config->limit;
        require_limit(limit, hard_limit(pc), partition_class_name(pc) + " enumeration limit");
        require_limit(n, limit, partition_class_name(pc) + " enumeration");
        bool first = true;
        if (config->format == CUMU_FORMAT_JSON) stream(sink, user, "[\n");
        if (config->format == CUMU_FORMAT_CSV)
            stream(sink, user, "partition,blocks,noncrossing,interval,irreducible,connected\n");
        for_each_partition(n, pc, [&](const SetPartition& p) {
            switch (config->format) {
                case CUMU_FORMAT_JSON: stream(sink, user, std::string(first ? "" : ",\n") + flags_json(p)); break;
                case CUMU_FORMAT_CSV: stream(sink, user, flags_csv(p)); break;
                case CUMU_FORMAT_TEXT: stream(sink, user, p.str() + "\n"); break;
            }
            first = false;
        }, limit);
        if (config->format == CUMU_FORMAT_JSON) stream(sink, user, first ? "]\n" : "\n]\n");
        return CUMU_OK;
    });
}

cumu_status cumu_verify(const cumu_config* config, const char* identity, int n_max, cumu_buffer** out) {
    return guarded([&] {
        require_out(out);
        require(config != nullptr, "config is null");
        std::string name(arg(identity, "identity"));
        require(n_max >= 1, "n must be at least 1");
        std::vector<Task> tasks;
        if (name == "all") {
            int top = 0;
            for (const auto& info : identity_catalog()) top = std::max(top, info.max_n);
            require_limit(n_max, top, "verify --all");
            for (int n = 1; n <= n_max; ++n)
                for (const auto& info : identity_catalog())
                    if (n <= info.max_n) tasks.emplace_back(info.id, n);
        } else {
            auto id = parse_identity(name);
            if (!id) throw InvalidArgument("unknown identity '" + name + "'");
            const auto& info = identity_info(*id);
            require_limit(n_max, info.max_n, std::string(info.name));
            name = info.name;
            for (int n = 1; n <= n_max; ++n) tasks.emplace_back(*id, n);
        }
        auto reports = run_tasks(tasks, config->jobs, [](const Task& t) { return verify_identity(t.first, t.second); });
        bool holds = std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return r.holds; });
        emit(out, render_reports(*config, name, n_max, reports));
        if (!holds) {
            for (const auto& r : reports)
                if (!r.holds) {
                    g_last_error = r.identity + " fails at n=" + std::to_string(r.n);
                    break;
                }
            return CUMU_IDENTITY_FAILED;
        }
        return CUMU_OK;
    });
}

cumu_status cumu_experiment(const cumu_config* config, int n_max, cumu_buffer** out) {
    return guarded([&] {
        require_out(out);
        require(config != nullptr, "config is null");
        require(n_max >= 1, "n must be at least 1");
        require_limit(n_max, kExperimentLimit, "multivariate alpha experiment");
        std::vector<int> sizes;
        for (int n = 1; n <= n_max; ++n) sizes.push_back(n);
        auto reports = run_tasks(sizes, config->jobs, [](int n) { return experiment_multivariate_alpha(n); });
        return emit(out, render_reports(*config, "multivariate_alpha", n_max, reports));
    });
}

cumu_status cumu_table(const cumu_config* config, const char* what, int n, cumu_buffer** out) {
    return guarded([&] {
        require_out(out);
        require(config != nullptr, "config is null");
        std::string kind(arg(what, "table"));
        require(kind == "beta" || kind == "alpha" || kind == "tutte" || kind == "mobius",
                "unknown table '" + kind + "' (beta, alpha, tutte, mobius)");
        require(n >= 1, "n must be at least 1");
        std::filesystem::path cached;
        if (!config->cache_dir.empty()) {
            cached = std::filesystem::path(config->cache_dir) /
                     ("table-" + kind + "-" + std::to_string(n) + "." + extension(config->format));
            if (auto text = read_file(cached)) return emit(out, *text);
        }
        Table t;
        if (kind == "beta") t = beta_rows(n);
        else if (kind == "alpha") t = alpha_rows(*config, n);
        else if (kind == "tutte") t = tutte_rows(*config, n);
        else t = mobius_rows(*config, n);
        std::string text = t.render(config->format);
        if (!cached.empty()) write_file(cached, text);
        return emit(out, std::move(text));
    });
}

cumu_status cumu_convert(const char* from, const char* to, const char* values_json, cumu_buffer** out) {
    return guarded([&] {
        require_out(out);
        auto a = parse_basis(arg(from, "source basis"));
        auto b = parse_basis(arg(to, "target basis"));
        if (!a) throw InvalidArgument("unknown basis '" + std::string(from) + "'");
        if (!b) throw InvalidArgument("unknown basis '" + std::string(to) + "'");
        std::string_view text = arg(values_json, "values");
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError("malformed JSON", e.byte == 0 ? 0 : e.byte - 1);
        }
        if (!j.is_array()) throw ParseError("expected a JSON array", 0);
        Sequence values;
        for (std::size_t i = 0; i < j.size(); ++i) {
            const auto& v = j[i];
            if (v.is_string()) {
                try {
                    values.push_back(Rational::parse(v.get<std::string>()));
                } catch (const Error& e) {
                    throw ParseError("bad rational at index " + std::to_string(i) + " (" + e.what() + ")", i);
                }
            } else if (v.is_number_integer()) {
                values.emplace_back(v.get<long>());
            } else {
                throw ParseError("element " + std::to_string(i) + " is not a rational string or integer", i);
            }
        }
        Json result = Json::array();
        for (const auto& r : convert_sequence(*a, *b, values)) result.push_back(r.str());
        return emit(out, result.dump() + "\n");
    });
}

cumu_status cumu_cumulant(const cumu_config* config, const char* kind, int n, cumu_buffer** out) {
    return guarded([&] {
        require_out(out);
        require(config != nullptr, "config is null");
        auto k = parse_kind(arg(kind, "kind"));
        if (!k) throw InvalidArgument("unknown cumulant kind '" + std::string(kind) + "'");
        const auto& poly = cumulant_poly(*k, n);
        if (config->format == CUMU_FORMAT_TEXT) return emit(out, poly.str() + "\n");
        if (config->format == CUMU_FORMAT_CSV) {
            std::string text = csv_row({"monomial", "coefficient"});
            for (const auto& [mono, c] : poly.terms()) {
                std::string m;
                for (SubsetMask s : mono) m += (m.empty() ? "" : "*") + symbol_str(s);
                text += csv_row({m.empty() ? "1" : m, c.str()});
            }
            return emit(out, text);
        }
        Json j = Json::object();
        j["kind"] = std::string(kind_name(*k));
        j["n"] = n;
        j["terms"] = poly.size();
        j["polynomial"] = poly.str();
        return emit(out, j.dump(2) + "\n");
    });
}

cumu_status cumu_mobius(const char* lattice, const char* pi, const char* sigma, cumu_buffer** out) {
    return guarded([&] {
        require_out(out);
        Lattice l = parse_lattice(arg(lattice, "lattice"));
        SetPartition a = parse_partition(arg(pi, "pi"));
        SetPartition b = sigma ? parse_partition(sigma) : SetPartition::coarsest(a.n());
        require(a.n() == b.n(), "partitions of different sets");
        Json j = Json::object();
        j["lattice"] = lattice_name(l);
        j["pi"] = a.blocks();
        j["sigma"] = b.blocks();
        j["mobius"] = mobius(a, b, l).get_str();
        return emit(out, j.dump() + "\n");
    });
}

cumu_status cumu_partition_info(const cumu_config* config, const char* partition, cumu_buffer** out) {
    return guarded([&] {
        require_out(out);
        require(config != nullptr, "config is null");
        SetPartition p = parse_partition(arg(partition, "partition"));
        require_limit(p.n(), kPartitionInfoLimit, "partition info");
        auto f = classify(p);
        std::vector<std::pair<std::string, std::string>> fields;
        auto add = [&](std::string k, std::string v) { fields.emplace_back(std::move(k), std::move(v)); };
        // Quantities with their own size limits are reported as absent when out of range.
        auto guard = [&](std::string k, const std::function<std::string()>& value) {
            try {
                add(std::move(k), value());
            } catch (const ResourceLimit&) {
            }
        };
        add("partition", p.str());
        add("n", std::to_string(p.n()));
        add("blocks", std::to_string(p.block_count()));
        add("noncrossing", bool_str(f.noncrossing));
        add("interval", bool_str(f.interval));
        add("irreducible", bool_str(f.irreducible));
        add("connected", bool_str(f.connected));
        auto g = crossing_graph(p);
        auto h = anti_interval_graph(p);
        add("crossing_graph", g.json());
        add("anti_interval_graph", h.json());
        add("anti_interval_digraph", anti_interval_digraph(p).key());
        auto tutte = [](const MixedGraph& graph) {
            if (graph.edge_count() > kTuttePolynomialMaxEdges) throw ResourceLimit("too many edges");
            return tutte_eval(graph, 1, 0).str();
        };
        guard("crossing_tutte_1_0", [&] { return tutte(g); });
        guard("anti_interval_tutte_1_0", [&] { return tutte(h); });
        guard("crossing_orientations", [&] { return acyclic_orientations_unique_source(g, 0).count.get_str(); });
        guard("anti_interval_orientations", [&] { return acyclic_orientations_unique_source(h, 0).count.get_str(); });
        if (f.connected) guard("crossing_pyramids", [&] { return count_pyramids(p, HeapMode::Crossing).get_str(); });
        if (f.irreducible) guard("interval_pyramids", [&] { return count_pyramids(p, HeapMode::Interval).get_str(); });
        if (f.noncrossing) {
            add("nesting_forest", nesting_forest(p).json(p));
            add("depth", std::to_string(depth(p)));
            add("tau_factorial", tau_factorial(p).get_str());
            add("alpha", alpha(p).str());
        }
        guard("beta", [&] { return beta_recursive(p).str(); });

        if (config->format == CUMU_FORMAT_CSV) {
            std::string text = csv_row({"field", "value"});
            for (const auto& [k, v] : fields) text += csv_row({k, v});
            return emit(out, text);
        }
        if (config->format == CUMU_FORMAT_TEXT) {
            std::string text;
            for (const auto& [k, v] : fields) text += k + ": " + v + "\n";
            return emit(out, text);
        }
        Json j = Json::object();
        for (const auto& [k, v] : fields) {
            if (k == "partition") j[k] = p.blocks();
            else if (k == "n" || k == "blocks") j[k] = std::stoi(v);
            else if (v == "true" || v == "false") j[k] = v == "true";
            else if (k == "crossing_graph" || k == "anti_interval_graph" || k == "nesting_forest") j[k] = Json::parse(v);
            else j[k] = v;
        }
        return emit(out, j.dump(2) + "\n");
    });
}

}  // extern "C"
