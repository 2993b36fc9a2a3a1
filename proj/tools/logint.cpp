// Command-line front end: evaluate Phi, integrate a catalog integrand, evaluate
// a right-hand side, browse the catalog and run verification.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "logint.hpp"

using namespace logint;

namespace {

cx parse_complex(const std::string& text, const std::string& what)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error&) {
        throw CLI::ValidationError(what, "expected a number, [re, im] or {\"re\": x, \"im\": y}");
    }
    return complex_from_json(j, what);
}

ParamSet parse_params(const std::string& text)
{
    if (text.empty())
        return {};
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw CLI::ValidationError("--params", e.what());
    }
    return params_from_json(j, "--params");
}

std::vector<std::string> split_csv(const std::string& s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty())
            out.push_back(item);
    return out;
}

void print_value(const char* label, cx z) { std::printf("%s %s\n", label, to_string(z).c_str()); }

// Resolves either a catalog entry id or a bare family tag.
struct Target {
    const CatalogEntry* entry = nullptr;
    const Family* fam = nullptr;
    ParamSet params;
};

Target resolve(const std::string& name, const ParamSet& overrides, const std::string& catalog_path)
{
    Target t;
    if (const Family* f = find_family(name)) {
        t.fam = f;
        t.params = overrides;
        if (std::string bad = violated_condition(f->conditions, t.params); !bad.empty())
            throw CatalogError("family '" + name + "' rejects the parameters: violates " + bad);
        return t;
    }
    static Catalog cat;
    cat = load_catalog(catalog_path);
    t.entry = cat.find(name);
    if (!t.entry)
        throw CatalogError("'" + name + "' is neither a family nor a catalog entry");
    t.fam = &t.entry->family_ref();
    t.params = bind(*t.entry, overrides);
    return t;
}

void show_entry(const CatalogEntry& e)
{
    std::cout << entry_to_json(e).dump(2) << "\n";
    std::cout << "integrand: " << e.family_ref().integrand_text << "\n";
    std::cout << "validity:\n";
    for (const auto& c : e.validity())
        std::cout << "  " << c << ": " << condition(c).text << "\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite Lerch-series evaluations of logarithmic integrals, checked by quadrature"};
    app.require_subcommand(1);
    std::string catalog_path = default_catalog_path();
    app.add_option("--catalog", catalog_path, "catalog file")->capture_default_str();

    // eval-phi
    auto* phi_cmd = app.add_subcommand("eval-phi", "evaluate the Lerch transcendent Phi(z, s, a)");
    std::string z_text, s_text, a_text;
    bool want_ds = false;
    phi_cmd->add_option("--z", z_text, "z as a number, [re, im] or {re, im}")->required();
    phi_cmd->add_option("--s", s_text, "s")->required();
    phi_cmd->add_option("--a", a_text, "a")->required();
    phi_cmd->add_flag("--ds", want_ds, "also print the derivative in s");

    // quad
    auto* quad_cmd = app.add_subcommand("quad", "integrate a family or catalog integrand over (0, inf)");
    std::string quad_name, quad_params, side_text, pole_side_text;
    double quad_rel = 1e-10, quad_abs = 1e-13;
    quad_cmd->add_option("name", quad_name, "family tag or catalog entry id")->required();
    quad_cmd->add_option("--params", quad_params, "parameter bindings as JSON");
    quad_cmd->add_option("--side", side_text, "path side: above, below or none (default: the entry's)");
    quad_cmd->add_option("--pole-side", pole_side_text, "side for half-residues at poles only");
    quad_cmd->add_option("--rel-tol", quad_rel)->capture_default_str();
    quad_cmd->add_option("--abs-tol", quad_abs)->capture_default_str();

    // eval-rhs
    auto* rhs_cmd = app.add_subcommand("eval-rhs", "evaluate the closed-form right-hand side");
    std::string rhs_name, rhs_params;
    bool rhs_lhs = false;
    rhs_cmd->add_option("--family", rhs_name, "family tag or catalog entry id")->required();
    rhs_cmd->add_option("--params", rhs_params, "parameter bindings as JSON");
    rhs_cmd->add_flag("--lhs", rhs_lhs, "integrate the left-hand side instead");

    // catalog
    auto* cat_cmd = app.add_subcommand("catalog", "inspect the identity catalog");
    cat_cmd->require_subcommand(1);
    auto* list_cmd = cat_cmd->add_subcommand("list", "list entries");
    std::string filter;
    list_cmd->add_option("--filter", filter, "substring of id, family or tag");
    auto* show_cmd = cat_cmd->add_subcommand("show", "show one entry");
    std::string show_id;
    show_cmd->add_option("id", show_id)->required();
    auto* check_cmd = cat_cmd->add_subcommand("check", "load, validate and round-trip the catalog");
    auto* families_cmd = cat_cmd->add_subcommand("families", "list identity families");

    // verify
    auto* ver_cmd = app.add_subcommand("verify", "compare both sides for catalog entries");
    std::string entries_text, report_path, format_text;
    RunConfig cfg;
    ver_cmd->add_option("--entries", entries_text, "comma-separated entry ids (default: all)");
    ver_cmd->add_option("--rel-tol", cfg.tol.rel)->capture_default_str()->check(CLI::PositiveNumber);
    ver_cmd->add_option("--abs-tol", cfg.tol.abs)->capture_default_str()->check(CLI::PositiveNumber);
    ver_cmd->add_option("--seed", cfg.seed)->capture_default_str();
    ver_cmd->add_option("--jobs", cfg.jobs)->capture_default_str()->check(CLI::PositiveNumber);
    ver_cmd->add_option("--draws", cfg.draws, "sweep draws per sampled entry")->capture_default_str();
    ver_cmd->add_option("--report", report_path, "write the report here (.json or .csv)");
    ver_cmd->add_option("--format", format_text, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (*phi_cmd) {
            LerchArgs args{parse_complex(z_text, "--z"), parse_complex(s_text, "--s"), parse_complex(a_text, "--a")};
            LerchValue v = lerch_eval(args, want_ds);
            print_value("value", v.value);
            if (want_ds)
                print_value("ds   ", v.ds);
            std::printf("regime %s\n", to_string(classify(args, want_ds)));
            return 0;
        }

        if (*quad_cmd) {
            Target t = resolve(quad_name, parse_params(quad_params), catalog_path);
            IntegrandSpec spec(*t.fam, t.params);
            Side side = t.entry ? t.entry->side() : Side::none;
            Side pole_side = t.entry ? t.entry->residue_side() : Side::none;
            if (!side_text.empty())
                side = side_from_string(side_text, "--side");
            if (!pole_side_text.empty())
                pole_side = side_from_string(pole_side_text, "--pole-side");
            QuadratureOutcome q = integrate(spec.integrand(), spec.quadrature(side, pole_side, quad_rel, quad_abs));
            print_value("value", q.value);
            std::printf("error_estimate %.3e\nevaluations %ld\nconverged %s\n", q.error_estimate, q.evaluations,
                        q.converged ? "true" : "false");
            return q.converged ? 0 : 2;
        }

        if (*rhs_cmd) {
            Target t = resolve(rhs_name, parse_params(rhs_params), catalog_path);
            if (rhs_lhs) {
                if (!t.fam->has_integral()) {
                    print_value("lhs", t.fam->lhs_closed(t.params));
                    return 0;
                }
                IntegrandSpec spec(*t.fam, t.params);
                Side side = t.entry ? t.entry->side() : Side::none;
                Side pole_side = t.entry ? t.entry->residue_side() : Side::none;
                QuadratureOutcome q = integrate(spec.integrand(), spec.quadrature(side, pole_side, 1e-10, 1e-13));
                print_value("lhs", q.value);
                std::printf("error_estimate %.3e\n", q.error_estimate);
                return q.converged ? 0 : 2;
            }
            cx r = t.fam->rhs(t.params);
            if (t.entry)
                r *= t.entry->erratum_multiplier;
            print_value("rhs", r);
            return 0;
        }

        if (*cat_cmd) {
            if (*families_cmd) {
                for (const auto& f : families())
                    std::printf("%-36s %s\n", f.tag.c_str(), f.integrand_text.c_str());
                return 0;
            }
            Catalog cat = load_catalog(catalog_path);
            if (*list_cmd) {
                for (const CatalogEntry* e : list_entries(cat, filter))
                    std::printf("%-32s %-34s %s\n", e->id.c_str(), e->family.c_str(), e->description.c_str());
                return 0;
            }
            if (*show_cmd) {
                show_entry(cat.entry(show_id));
                return 0;
            }
            if (*check_cmd) {
                bool same = parse_catalog(dump_catalog(cat)) == cat;
                std::printf("%zu entries, schema %d, stirling convention %s, round trip %s\n", cat.entries.size(),
                            cat.schema_version, cat.metadata.stirling_convention.c_str(), same ? "ok" : "MISMATCH");
                return same ? 0 : 1;
            }
        }

        if (*ver_cmd) {
            Catalog cat = load_catalog(catalog_path);
            cfg.entries = split_csv(entries_text);
            if (!format_text.empty())
                cfg.format = format_text == "csv" ? ReportFormat::csv : ReportFormat::json;
            else if (report_path.size() >= 4 && report_path.substr(report_path.size() - 4) == ".csv")
                cfg.format = ReportFormat::csv;
            Report rep = run_all(cat, cfg);
            std::string text = render_report(rep);
            if (report_path.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(report_path, std::ios::binary);
                out << text;
                if (!out) {
                    std::fprintf(stderr, "error: cannot write report '%s'\n", report_path.c_str());
                    return 3;
                }
            }
            std::fprintf(stderr, "pass %d, fail %d, skipped %d", rep.summary.pass, rep.summary.fail,
                         rep.summary.skipped);
            for (const auto& [k, v] : rep.summary.by_status)
                if (k != "pass" && k != "fail")
                    std::fprintf(stderr, ", %s %d", k.c_str(), v);
            std::fprintf(stderr, "\n");
            return exit_code(rep);
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
