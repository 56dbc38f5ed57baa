#include "gridsub/cli.hpp"

#include "gridsub/closed_form.hpp"
#include "gridsub/enumeration.hpp"
#include "gridsub/errors.hpp"
#include "gridsub/flips.hpp"
#include "gridsub/report.hpp"
#include "gridsub/sequences.hpp"
#include "gridsub/svg.hpp"
#include "gridsub/two_row.hpp"
#include "gridsub/verify.hpp"
#include "gridsub/version.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <memory>
#include <optional>
#include <sstream>

namespace gridsub {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GlobalFlags {
    std::string format = "json";
    int threads = 1;
    std::string edge_interaction = "strict";
    std::string candidates = "primitive-only";
    std::string cache_path;
    std::uint64_t budget_nodes = default_node_budget();
};

struct Context {
    GlobalFlags flags;
    Conventions conventions;
    std::unique_ptr<CountCache> cache;

    EnumerationOptions enumeration() const {
        EnumerationOptions o;
        o.conventions = conventions;
        o.node_budget = flags.budget_nodes;
        o.threads = flags.threads;
        return o;
    }
    BfsOptions bfs() const { return {flags.threads, flags.budget_nodes}; }
    bool csv() const { return flags.format == "csv"; }
};

std::vector<bool> modes_of(const std::string& mode) {
    if (mode == "bimonotone") return {true};
    if (mode == "all") return {false};
    return {true, false};
}

CountReport produce(Context& ctx, const PointConfiguration& cfg, bool bimonotone, Method method,
                    const std::function<BigCount()>& compute, const char* object = "subdivisions") {
    CountReport r;
    r.object = object;
    r.config = cfg.descriptor();
    r.bimonotone = bimonotone;
    r.method = method;
    r.conventions = ctx.conventions;
    r.version = kVersion;
    const auto key = r.cache_key();
    if (ctx.cache) {
        if (auto hit = ctx.cache->lookup(key)) {
            r.count = *hit;
            r.cached = true;
            return r;
        }
    }
    const auto t0 = std::chrono::steady_clock::now();
    r.count = compute();
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    if (ctx.cache) ctx.cache->store(key, r.count);
    return r;
}

// Assembles the single output document.
class Output {
public:
    explicit Output(std::string command) {
        doc_["tool"] = "gridsub";
        doc_["version"] = kVersion;
        doc_["command"] = std::move(command);
        doc_["status"] = "ok";
    }

    Json& doc() { return doc_; }
    void add_report(const CountReport& r) {
        reports_.push_back(r);
        doc_["results"].push_back(to_json(r));
    }
    void add_csv_row(std::string row) { csv_rows_.push_back(std::move(row)); }
    void set_csv_header(std::string header) { csv_header_ = std::move(header); }

    void write(std::ostream& out, bool csv) const {
        if (!csv) {
            out << doc_.dump(2) << '\n';
            return;
        }
        if (!reports_.empty()) {
            out << csv_header() << '\n';
            for (const auto& r : reports_) out << to_csv_row(r) << '\n';
        } else {
            out << csv_header_ << '\n';
            for (const auto& row : csv_rows_) out << row << '\n';
        }
    }

private:
    Json doc_;
    std::vector<CountReport> reports_;
    std::string csv_header_;
    std::vector<std::string> csv_rows_;
};

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

void ensure_integral_output(const PointConfiguration& cfg) {
    if (cfg.size() < 3) throw UsageError(cfg.descriptor() + " has fewer than 3 points; counts are only reported from 3 points");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts of bimonotone and total subdivisions and triangulations of lattice grids", "gridsub"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    GlobalFlags flags;
    app.add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--threads", flags.threads, "Worker threads; every value gives identical counts")
        ->check(CLI::Range(1, 256));
    app.add_option("--edge-interaction", flags.edge_interaction, "Which edge contacts conflict")
        ->check(CLI::IsMember({"strict", "paper-literal"}));
    app.add_option("--candidates", flags.candidates, "Candidate internal edges")
        ->check(CLI::IsMember({"all-pairs", "primitive-only"}));
    app.add_option("--cache", flags.cache_path, "JSON file of previously computed counts");
    app.add_option("--budget-nodes", flags.budget_nodes, "Search node budget (env GRIDSUB_BUDGET_NODES)");

    const auto mode_check = CLI::IsMember({"bimonotone", "all", "both"});

    int cols = 0, rows = 0, top = 0, bottom = 0, n = 0, n_max = 6, enum_max = 6, index = 0;
    std::string mode = "both", method, name, kind = "both", suite, out_path, what = "subdivision";
    bool canonical = false, upto = false;

    auto* count_grid = app.add_subcommand("count-grid", "Count subdivisions of a grid by enumeration");
    count_grid->add_option("--cols", cols)->required()->check(CLI::Range(1, 64));
    count_grid->add_option("--rows", rows)->required()->check(CLI::Range(1, 64));
    count_grid->add_option("--mode", mode)->check(mode_check);

    auto* count_two = app.add_subcommand("count-two-row", "Count subdivisions of a two-row configuration");
    count_two->add_option("--top", top)->required()->check(CLI::Range(1, 100000));
    count_two->add_option("--bottom", bottom)->required()->check(CLI::Range(1, 100000));
    count_two->add_option("--mode", mode)->check(mode_check);
    count_two->add_option("--method", method, "recursion (default), enumeration, closed-form or every")
        ->check(CLI::IsMember({"recursion", "enumeration", "closed-form", "every"}));

    auto* count_tri = app.add_subcommand("count-triangulations", "Count full-point triangulations of a grid");
    count_tri->add_option("--cols", cols)->required()->check(CLI::Range(2, 64));
    count_tri->add_option("--rows", rows)->required()->check(CLI::Range(2, 64));
    count_tri->add_option("--mode", mode)->check(mode_check);
    count_tri->add_option("--method", method, "flip-bfs (default), enumeration or every")
        ->check(CLI::IsMember({"flip-bfs", "enumeration", "every"}));

    auto* seq = app.add_subcommand("sequences", "Schröder and central Delannoy numbers");
    seq->add_option("--name", name)->required()->check(CLI::IsMember({"schroeder", "schroeder-paths", "delannoy"}));
    seq->add_option("--n", n)->required()->check(CLI::Range(0, 100000));
    seq->add_flag("--upto", upto, "Emit every term from 0 to n");

    auto* poly = app.add_subcommand("poly", "Coefficients of P_n / Q_n");
    poly->add_option("--n", n)->required()->check(CLI::Range(1, 64));
    poly->add_option("--kind", kind)->check(CLI::IsMember({"P", "Q", "both"}));
    poly->add_option("--m", top, "Also report the asymptotic ratio P_n(m)/Q_n(m) at this m");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--n-max", n_max)->check(CLI::Range(2, 1000));

    auto* cross = app.add_subcommand("cross-validate", "Count 2 x n grids by every method and compare");
    cross->add_option("--n-max", n_max)->check(CLI::Range(2, 1000));
    cross->add_option("--enumeration-max-n", enum_max)->check(CLI::Range(0, 12));

    auto* render = app.add_subcommand("render", "Write an SVG of a subdivision or triangulation");
    render->add_option("--cols", cols)->check(CLI::Range(1, 64));
    render->add_option("--rows", rows)->check(CLI::Range(1, 64));
    render->add_option("--top", top)->check(CLI::Range(1, 64));
    render->add_option("--bottom", bottom)->check(CLI::Range(1, 64));
    render->add_option("--what", what)->check(CLI::IsMember({"subdivision", "triangulation"}));
    render->add_option("--mode", mode)->check(CLI::IsMember({"bimonotone", "all"}));
    render->add_option("--index", index, "Position in the lexicographically ordered list")->check(CLI::Range(0, 1 << 30));
    render->add_flag("--canonical", canonical, "Render the canonical triangulation");
    render->add_option("--out", out_path)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        if (!reversed.empty()) reversed.pop_back();  // program name
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_code::ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_code::ok;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_code::usage;
    }

    Context ctx;
    ctx.flags = flags;
    ctx.conventions.interaction = *parse_interaction_rule(flags.edge_interaction);
    ctx.conventions.candidates = *parse_candidate_rule(flags.candidates);
    const auto* sub = app.get_subcommands().front();
    Output output(sub->get_name());
    output.doc()["results"] = Json::array();

    try {
        if (!flags.cache_path.empty()) ctx.cache = std::make_unique<CountCache>(flags.cache_path);

        if (sub == count_grid) {
            const auto cfg = PointConfiguration::grid(cols, rows);
            ensure_integral_output(cfg);
            for (bool bim : modes_of(mode)) {
                output.add_report(produce(ctx, cfg, bim, Method::enumeration,
                                          [&] { return count_subdivisions(cfg, bim, ctx.enumeration()); }));
            }
        } else if (sub == count_two) {
            const auto cfg = PointConfiguration::two_row(top, bottom);
            ensure_integral_output(cfg);
            const std::string m = method.empty() ? "recursion" : method;
            for (bool bim : modes_of(mode)) {
                if (m == "recursion" || m == "every") {
                    output.add_report(produce(ctx, cfg, bim, Method::recursion,
                                              [&] { return count_two_row(top, bottom, bim).value(); }));
                }
                if (m == "enumeration" || m == "every") {
                    output.add_report(produce(ctx, cfg, bim, Method::enumeration,
                                              [&] { return count_subdivisions(cfg, bim, ctx.enumeration()); }));
                }
                if (m == "closed-form" || m == "every") {
                    if (bim && top < bottom) {
                        if (m == "closed-form") throw UsageError("the bimonotone closed form holds only for top >= bottom");
                        continue;
                    }
                    output.add_report(produce(ctx, cfg, bim, Method::closed_form, [&] {
                        const auto v = closed_form_value(bim ? derive_p(bottom) : derive_q(bottom), top, bottom);
                        if (boost::multiprecision::denominator(v) != 1)
                            throw ValidationError("closed form is not an integer at " + cfg.descriptor());
                        return BigCount(boost::multiprecision::numerator(v));
                    }));
                }
            }
        } else if (sub == count_tri) {
            const auto cfg = PointConfiguration::grid(cols, rows);
            const std::string m = method.empty() ? "flip-bfs" : method;
            for (bool bim : modes_of(mode)) {
                std::optional<BigCount> bfs;
                if (m == "flip-bfs" || m == "every") {
                    const auto r = produce(ctx, cfg, bim, Method::flip_bfs, [&] { return bfs_count(cols, rows, bim, ctx.bfs()); }, "triangulations");
                    bfs = r.count;
                    output.add_report(r);
                }
                if (m == "enumeration" || m == "every") {
                    const auto r = produce(ctx, cfg, bim, Method::enumeration,
                                           [&] { return count_full_triangulations(cfg, bim, ctx.enumeration()); }, "triangulations");
                    output.add_report(r);
                    if (bfs && *bfs != r.count) {
                        throw ValidationError("flip-bfs and enumeration disagree on " + cfg.descriptor() + ": " +
                                              bfs->str() + " vs " + r.count.str());
                    }
                }
            }
        } else if (sub == seq) {
            output.set_csv_header("name,n,value");
            const int from = upto ? 0 : n;
            for (int k = from; k <= n; ++k) {
                const auto uk = static_cast<unsigned>(k);
                const BigCount v = name == "schroeder"         ? schroeder(uk)
                                   : name == "schroeder-paths" ? schroeder_path_oracle(uk)
                                                               : delannoy_central(uk);
                output.doc()["results"].push_back({{"name", name}, {"n", k}, {"value", v.str()}});
                output.add_csv_row(name + "," + std::to_string(k) + "," + v.str());
            }
        } else if (sub == poly) {
            output.set_csv_header("kind,n,degree,monic,coefficients");
            for (const char* k : {"P", "Q"}) {
                if (kind != "both" && kind != k) continue;
                const auto p = std::string(k) == "P" ? derive_p(n) : derive_q(n);
                Json coeffs = Json::array();
                std::string joined;
                for (const auto& c : p.coefficients()) {
                    coeffs.push_back(to_fraction_string(c));
                    joined += (joined.empty() ? "" : " ") + to_fraction_string(c);
                }
                output.doc()["results"].push_back({{"kind", k},
                                                   {"n", n},
                                                   {"degree", p.degree()},
                                                   {"monic", p.is_monic()},
                                                   {"coefficients_ascending", coeffs},
                                                   {"polynomial", p.to_string()},
                                                   {"scale", "2^(m-2)/" + std::to_string(n - 1) + "!"}});
                output.add_csv_row(std::string(k) + "," + std::to_string(n) + "," + std::to_string(p.degree()) + "," +
                                   (p.is_monic() ? "true" : "false") + "," + csv_quote(joined));
            }
            if (top > 0) {
                if (top < n) throw UsageError("--m must be at least --n");
                const auto a = asymptotic_check(n, top);
                output.doc()["asymptotic"] = {{"n", a.n},
                                              {"m", a.m},
                                              {"degrees", {a.degree_p, a.degree_q}},
                                              {"leading", {to_fraction_string(a.leading_p), to_fraction_string(a.leading_q)}},
                                              {"equal_degree_and_leading", a.equal_degree_and_leading},
                                              {"ratio", to_fraction_string(a.ratio)},
                                              {"ratio_decimal", a.ratio_decimal()}};
            }
        } else if (sub == verify) {
            SuiteOptions so;
            so.n_max = n_max;
            so.enumeration = ctx.enumeration();
            so.bfs = ctx.bfs();
            const auto result = run_suite(suite, so);
            output.doc()["results"].push_back(result.to_json());
            output.set_csv_header("suite,check,passed,detail");
            for (const auto& c : result.checks) {
                output.add_csv_row(suite + "," + csv_quote(c.label) + "," + (c.passed ? "true" : "false") + "," +
                                   csv_quote(c.detail));
            }
            if (!result.passed()) {
                output.doc()["status"] = "failed";
                output.write(out, ctx.csv());
                return exit_code::validation_failure;
            }
        } else if (sub == cross) {
            CrossValidateOptions co;
            co.enumeration_max_n = enum_max;
            co.enumeration = ctx.enumeration();
            Json rows_json = Json::array();
            for (const auto& row : cross_validate(n_max, co)) {
                for (const auto& r : row.bimonotone) output.add_report(r);
                for (const auto& r : row.all) output.add_report(r);
                rows_json.push_back({{"n", row.n},
                                     {"bimonotone", row.bimonotone.front().count.str()},
                                     {"all", row.all.front().count.str()},
                                     {"delannoy_prediction", row.delannoy_prediction.str()},
                                     {"delannoy", row.delannoy_consistent ? "CONJECTURE-CONSISTENT" : "CONJECTURE-MISMATCH"}});
            }
            output.doc()["summary"] = rows_json;
        } else if (sub == render) {
            const bool grid = cols > 0 || rows > 0;
            if (grid == (top > 0 || bottom > 0)) throw UsageError("render needs either --cols/--rows or --top/--bottom");
            if (grid && (cols == 0 || rows == 0)) throw UsageError("render needs both --cols and --rows");
            if (!grid && (top == 0 || bottom == 0)) throw UsageError("render needs both --top and --bottom");
            const auto cfg = grid ? PointConfiguration::grid(cols, rows) : PointConfiguration::two_row(top, bottom);
            const bool bim = mode != "all";
            std::string svg;
            Json edges = Json::array();
            if (canonical || what == "triangulation") {
                if (!grid) throw UsageError("triangulations are rendered for grids only");
                std::optional<Triangulation> t;
                if (canonical) {
                    t = canonical_triangulation(cols, rows);
                } else {
                    auto all = bfs_visit(cols, rows, bim, ctx.bfs());
                    if (static_cast<std::size_t>(index) >= all.size())
                        throw UsageError("--index " + std::to_string(index) + " out of range; there are " +
                                         std::to_string(all.size()) + " triangulations");
                    t = all[static_cast<std::size_t>(index)];
                }
                t->check_invariants();
                svg = render_svg(*t);
                for (const auto& e : t->edges()) edges.push_back(to_string(e));
            } else {
                const auto list = list_subdivisions(cfg, bim, static_cast<std::size_t>(index) + 1, ctx.enumeration());
                if (static_cast<std::size_t>(index) >= list.size())
                    throw UsageError("--index " + std::to_string(index) + " out of range; there are " +
                                     std::to_string(list.size()) + " subdivisions");
                const auto& s = list[static_cast<std::size_t>(index)];
                if (!is_valid_subdivision(cfg, s.edges, bim, ctx.conventions))
                    throw ValidationError("subdivision failed re-validation before rendering");
                svg = render_svg(s);
                for (const auto& e : s.edges) edges.push_back(to_string(e));
            }
            write_text_file(out_path, svg);
            output.doc()["results"].push_back({{"config", cfg.descriptor()}, {"file", out_path}, {"edges", edges}});
            output.set_csv_header("config,file");
            output.add_csv_row(csv_quote(cfg.descriptor()) + "," + csv_quote(out_path));
        }
        if (ctx.cache) ctx.cache->save();
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_code::usage;
    } catch (const BudgetExceeded& e) {
        output.doc()["status"] = "budget-exceeded";
        output.doc()["error"] = e.what();
        output.doc()["results"] = Json::array();
        if (!ctx.csv()) output.write(out, false);
        err << "budget exceeded: " << e.what() << '\n';
        return exit_code::budget_exceeded;
    } catch (const std::exception& e) {
        output.doc()["status"] = "failed";
        output.doc()["error"] = e.what();
        if (!ctx.csv()) output.write(out, false);
        err << "error: " << e.what() << '\n';
        return exit_code::validation_failure;
    }

    output.write(out, ctx.csv());
    return exit_code::ok;
}

}  // namespace gridsub
