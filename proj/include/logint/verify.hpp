#pragma once

// Verification runner: integrate each entry's left-hand side, evaluate its
// right-hand side, compare, and collect the outcome as a report.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "logint/catalog.hpp"

namespace logint {

inline constexpr int report_schema_version = 1;

enum class Status { pass, fail, skipped_unsupported_regime, lhs_nonconvergent, flagged_discrepancy };

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped_unsupported_regime: return "skipped-unsupported-regime";
    case Status::lhs_nonconvergent: return "lhs-nonconvergent";
    case Status::flagged_discrepancy: return "flagged-discrepancy";
    }
    return "?";
}

inline Status status_from_string(const std::string& s)
{
    for (Status st : {Status::pass, Status::fail, Status::skipped_unsupported_regime, Status::lhs_nonconvergent,
                      Status::flagged_discrepancy})
        if (s == to_string(st))
            return st;
    throw Error("unknown status '" + s + "'");
}

struct Tolerance {
    double rel = 1e-6;
    double abs = 1e-9;
    bool operator==(const Tolerance&) const = default;
};

enum class ReportFormat { json, csv };

struct RunConfig {
    Tolerance tol;
    std::map<std::string, Tolerance> overrides;  // by entry id
    int draws = 5;                               // sweep draws per entry with a sampler
    std::uint64_t seed = 42;
    int jobs = 1;
    ReportFormat format = ReportFormat::json;
    std::vector<std::string> entries;  // empty means all

    // entry tolerances from the catalog, then per-run overrides
    Tolerance tolerance_for(const CatalogEntry& e) const
    {
        Tolerance t = tol;
        if (e.rel_tol)
            t.rel = *e.rel_tol;
        if (e.abs_tol)
            t.abs = *e.abs_tol;
        if (auto it = overrides.find(e.id); it != overrides.end())
            t = it->second;
        return t;
    }
};

struct VerificationRecord {
    std::string id;
    int draw = -1;  // -1 for the catalog defaults, else the sweep draw index
    ParamSet params;
    cx lhs{0.0, 0.0};
    cx rhs{0.0, 0.0};
    double abs_err = 0.0;
    double rel_err = 0.0;
    Status status = Status::fail;
    std::string reason;
    long evaluations = 0;
    double lhs_error_estimate = 0.0;
    double wall_time = 0.0;

    bool same_outcome(const VerificationRecord& o) const
    {
        auto eq = [](double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); };
        return id == o.id && draw == o.draw && params == o.params && lhs == o.lhs && rhs == o.rhs &&
               eq(abs_err, o.abs_err) && eq(rel_err, o.rel_err) && status == o.status && reason == o.reason &&
               evaluations == o.evaluations && eq(lhs_error_estimate, o.lhs_error_estimate);
    }
};

inline bool within(double abs_err, cx rhs, const Tolerance& t)
{
    return abs_err <= std::max(t.abs, t.rel * std::abs(rhs));
}

// --------------------------------------------------------------- one record

inline VerificationRecord verify_identity(const CatalogEntry& entry, const ParamSet& params, const RunConfig& config,
                                          int draw = -1)
{
    auto start = std::chrono::steady_clock::now();
    VerificationRecord r;
    r.id = entry.id;
    r.draw = draw;
    r.params = params;
    Tolerance tol = config.tolerance_for(entry);
    const Family& fam = entry.family_ref();

    auto finish = [&](Status s, std::string why) {
        r.status = s;
        r.reason = std::move(why);
        r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return r;
    };

    if (std::string bad = violated_condition(entry.validity(), params); !bad.empty())
        return finish(Status::skipped_unsupported_regime, "parameters violate " + bad);

    try {
        r.rhs = checked(fam.rhs(params) * entry.erratum_multiplier, "rhs");
    } catch (const UnsupportedRegime& e) {
        return finish(Status::skipped_unsupported_regime, std::string("rhs: ") + e.what());
    } catch (const NonConvergence& e) {
        return finish(Status::skipped_unsupported_regime, std::string("rhs: ") + e.what());
    } catch (const Error& e) {
        return finish(Status::fail, std::string("rhs: ") + e.what());
    }

    double allowed = std::max(tol.abs, tol.rel * std::abs(r.rhs));
    if (fam.has_integral()) {
        try {
            IntegrandSpec spec(fam, params);
            QuadratureSpec q = spec.quadrature(entry.side(), entry.residue_side(), std::min(1e-10, 1e-2 * tol.rel),
                                               std::min(1e-13, 1e-2 * tol.abs));
            QuadratureOutcome out = integrate(spec.integrand(), q);
            r.lhs = out.value;
            r.evaluations = out.evaluations;
            r.lhs_error_estimate = out.error_estimate;
            if (!out.converged && out.error_estimate > 0.1 * allowed) {
                r.abs_err = std::abs(r.lhs - r.rhs);
                r.rel_err = r.rhs == cx{} ? std::numeric_limits<double>::infinity() : r.abs_err / std::abs(r.rhs);
                return finish(Status::lhs_nonconvergent,
                              "quadrature error estimate " + std::to_string(out.error_estimate) +
                                  " exceeds a tenth of the tolerance");
            }
        } catch (const UnsupportedRegime& e) {
            return finish(Status::skipped_unsupported_regime, std::string("lhs: ") + e.what());
        } catch (const Error& e) {
            return finish(Status::lhs_nonconvergent, std::string("lhs: ") + e.what());
        }
    } else {
        try {
            r.lhs = checked(fam.lhs_closed(params), "lhs");
        } catch (const UnsupportedRegime& e) {
            return finish(Status::skipped_unsupported_regime, std::string("lhs: ") + e.what());
        } catch (const NonConvergence& e) {
            return finish(Status::skipped_unsupported_regime, std::string("lhs: ") + e.what());
        } catch (const Error& e) {
            return finish(Status::fail, std::string("lhs: ") + e.what());
        }
    }

    r.abs_err = std::abs(r.lhs - r.rhs);
    r.rel_err = r.rhs == cx{} ? (r.abs_err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity())
                              : r.abs_err / std::abs(r.rhs);
    if (within(r.abs_err, r.rhs, tol))
        return finish(Status::pass, "");
    if (entry.known_discrepancy)
        return finish(Status::flagged_discrepancy, *entry.known_discrepancy);
    return finish(Status::fail, "difference exceeds max(abs_tol, rel_tol |rhs|)");
}

inline VerificationRecord verify_identity(const CatalogEntry& entry, const RunConfig& config)
{
    return verify_identity(entry, entry.params, config);
}

// ------------------------------------------------------------------- sweeps

// FNV-1a, so every entry gets its own stream whatever order entries run in.
inline std::uint64_t entry_seed(std::uint64_t seed, const std::string& id)
{
    std::uint64_t h = 1469598103934665603ULL ^ seed;
    for (unsigned char ch : id) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    return h;
}

// Draws come from the family sampler; a draw outside the entry's extra
// conditions is redrawn.
inline std::vector<ParamSet> sweep_params(const CatalogEntry& entry, int draws, std::uint64_t seed)
{
    const Family& fam = entry.family_ref();
    if (!fam.sampler)
        throw CatalogError("entry '" + entry.id + "' has no parameter sampler");
    Rng rng(entry_seed(seed, entry.id));
    std::vector<ParamSet> out;
    for (int i = 0; i < draws; ++i) {
        ParamSet p = fam.sampler(rng);
        for (int tries = 0; tries < 100 && !violated_condition(entry.validity(), p).empty(); ++tries)
            p = fam.sampler(rng);
        out.push_back(std::move(p));
    }
    return out;
}

namespace detail {

struct Task {
    const CatalogEntry* entry;
    ParamSet params;
    int draw;
};

inline std::vector<VerificationRecord> run_tasks(const std::vector<Task>& tasks, const RunConfig& config)
{
    std::vector<VerificationRecord> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();)
            out[i] = verify_identity(*tasks[i].entry, tasks[i].params, config, tasks[i].draw);
    };
    int jobs = std::max(1, std::min<int>(config.jobs, static_cast<int>(tasks.size())));
    if (jobs == 1) {
        worker();
        return out;
    }
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    return out;
}

}  // namespace detail

inline std::vector<VerificationRecord> sweep(const CatalogEntry& entry, const RunConfig& config)
{
    std::vector<detail::Task> tasks;
    int i = 0;
    for (auto& p : sweep_params(entry, config.draws, config.seed))
        tasks.push_back({&entry, std::move(p), i++});
    return detail::run_tasks(tasks, config);
}

// ------------------------------------------------------------------- report

struct Summary {
    int pass = 0;
    int fail = 0;
    int skipped = 0;  // every status other than pass and fail
    std::map<std::string, int> by_status;
    double max_rel_err = 0.0;  // over passing records
    bool operator==(const Summary&) const = default;
};

inline Summary summarize(const std::vector<VerificationRecord>& records)
{
    Summary s;
    for (const auto& r : records) {
        s.by_status[to_string(r.status)]++;
        if (r.status == Status::pass) {
            ++s.pass;
            s.max_rel_err = std::max(s.max_rel_err, r.rel_err);
        } else if (r.status == Status::fail) {
            ++s.fail;
        } else {
            ++s.skipped;
        }
    }
    return s;
}

struct Report {
    int schema_version = report_schema_version;
    RunConfig config;
    std::vector<VerificationRecord> records;
    Summary summary;
};

// One record per selected entry at its defaults, followed by sweep records for
// entries whose family has a sampler.
inline Report run_all(const Catalog& catalog, const RunConfig& config)
{
    std::vector<const CatalogEntry*> selected;
    if (config.entries.empty()) {
        selected = list_entries(catalog);
    } else {
        for (const auto& id : config.entries)
            selected.push_back(&catalog.entry(id));
    }
    std::vector<detail::Task> tasks;
    for (const CatalogEntry* e : selected)
        tasks.push_back({e, e->params, -1});
    if (config.draws > 0)
        for (const CatalogEntry* e : selected)
            if (e->family_ref().sampler) {
                int i = 0;
                for (auto& p : sweep_params(*e, config.draws, config.seed))
                    tasks.push_back({e, std::move(p), i++});
            }
    Report rep;
    rep.config = config;
    rep.records = detail::run_tasks(tasks, config);
    rep.summary = summarize(rep.records);
    return rep;
}

inline int exit_code(const Report& r) { return r.summary.fail == 0 ? 0 : 1; }

namespace detail {

inline json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }
inline double number_from(const json& j) { return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>(); }

}  // namespace detail

inline json record_to_json(const VerificationRecord& r, bool with_timing = true)
{
    json j;
    j["id"] = r.id;
    j["draw"] = r.draw;
    j["params"] = params_to_json(r.params);
    j["lhs"] = complex_to_json(r.lhs);
    j["rhs"] = complex_to_json(r.rhs);
    j["abs_err"] = detail::number_or_null(r.abs_err);
    j["rel_err"] = detail::number_or_null(r.rel_err);
    j["status"] = to_string(r.status);
    j["reason"] = r.reason;
    j["evaluations"] = r.evaluations;
    j["lhs_error_estimate"] = detail::number_or_null(r.lhs_error_estimate);
    if (with_timing)
        j["wall_time"] = r.wall_time;
    return j;
}

inline VerificationRecord record_from_json(const json& j)
{
    VerificationRecord r;
    r.id = j.at("id").get<std::string>();
    r.draw = j.at("draw").get<int>();
    r.params = params_from_json(j.at("params"), "record.params");
    r.lhs = complex_from_json(j.at("lhs"), "record.lhs");
    r.rhs = complex_from_json(j.at("rhs"), "record.rhs");
    r.abs_err = detail::number_from(j.at("abs_err"));
    r.rel_err = detail::number_from(j.at("rel_err"));
    r.status = status_from_string(j.at("status").get<std::string>());
    r.reason = j.at("reason").get<std::string>();
    r.evaluations = j.at("evaluations").get<long>();
    r.lhs_error_estimate = detail::number_from(j.at("lhs_error_estimate"));
    r.wall_time = j.value("wall_time", 0.0);
    return r;
}

inline json config_to_json(const RunConfig& c)
{
    json j;
    j["rel_tol"] = c.tol.rel;
    j["abs_tol"] = c.tol.abs;
    j["draws"] = c.draws;
    j["seed"] = c.seed;
    j["jobs"] = c.jobs;
    j["format"] = c.format == ReportFormat::json ? "json" : "csv";
    j["entries"] = c.entries;
    json ov = json::object();
    for (const auto& [id, t] : c.overrides)
        ov[id] = json{{"rel_tol", t.rel}, {"abs_tol", t.abs}};
    j["overrides"] = ov;
    return j;
}

inline RunConfig config_from_json(const json& j)
{
    RunConfig c;
    c.tol.rel = j.at("rel_tol").get<double>();
    c.tol.abs = j.at("abs_tol").get<double>();
    c.draws = j.at("draws").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    c.jobs = j.at("jobs").get<int>();
    c.format = j.at("format").get<std::string>() == "csv" ? ReportFormat::csv : ReportFormat::json;
    c.entries = j.at("entries").get<std::vector<std::string>>();
    for (const auto& [id, t] : j.at("overrides").items())
        c.overrides[id] = Tolerance{t.at("rel_tol").get<double>(), t.at("abs_tol").get<double>()};
    return c;
}

// `with_timing = false` gives the form used for determinism comparisons.
inline json report_to_json(const Report& r, bool with_timing = true)
{
    json j;
    j["schema_version"] = r.schema_version;
    j["config"] = config_to_json(r.config);
    j["records"] = json::array();
    for (const auto& rec : r.records)
        j["records"].push_back(record_to_json(rec, with_timing));
    json by = json::object();
    for (const auto& [k, v] : r.summary.by_status)
        by[k] = v;
    j["summary"] = json{{"pass", r.summary.pass},
                        {"fail", r.summary.fail},
                        {"skipped", r.summary.skipped},
                        {"by_status", by},
                        {"max_rel_err", r.summary.max_rel_err}};
    return j;
}

inline Report report_from_json(const json& j)
{
    Report r;
    r.schema_version = j.at("schema_version").get<int>();
    if (r.schema_version != report_schema_version)
        throw Error("report: unsupported schema_version " + std::to_string(r.schema_version));
    r.config = config_from_json(j.at("config"));
    for (const auto& rec : j.at("records"))
        r.records.push_back(record_from_json(rec));
    r.summary = summarize(r.records);
    return r;
}

namespace detail {

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

inline std::string num(double x)
{
    if (!std::isfinite(x))
        return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace detail

inline std::string report_to_csv(const Report& r)
{
    using detail::csv_field;
    using detail::num;
    std::string out =
        "id,draw,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,status,reason,evaluations,wall_time\n";
    for (const auto& rec : r.records) {
        out += csv_field(rec.id) + "," + std::to_string(rec.draw) + "," + csv_field(params_to_json(rec.params).dump()) +
               "," + num(rec.lhs.real()) + "," + num(rec.lhs.imag()) + "," + num(rec.rhs.real()) + "," +
               num(rec.rhs.imag()) + "," + num(rec.abs_err) + "," + num(rec.rel_err) + "," + to_string(rec.status) +
               "," + csv_field(rec.reason) + "," + std::to_string(rec.evaluations) + "," + num(rec.wall_time) + "\n";
    }
    return out;
}

inline std::string render_report(const Report& r)
{
    return r.config.format == ReportFormat::csv ? report_to_csv(r) : report_to_json(r).dump(2) + "\n";
}

}  // namespace logint
