#include "symcoh/cli.hpp"

#include "symcoh/checks.hpp"
#include "symcoh/errors.hpp"
#include "symcoh/hodge.hpp"
#include "symcoh/identities.hpp"
#include "symcoh/symbolcheck.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

namespace symcoh::cli {

using nlohmann::ordered_json;

namespace {

const std::vector<std::string> kSuites{"identities", "symbol", "hodge", "lefschetz", "ddlambda", "index"};

// Runs the tasks on at most `threads` workers; results are written by index, so
// the outcome does not depend on scheduling.
void run_parallel(std::vector<std::function<void()>>& tasks, unsigned threads)
{
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(tasks.size()));
    if (threads <= 1) {
        for (auto& t : tasks) t();
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(tasks.size());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < tasks.size(); i = next++) {
                try {
                    tasks[i]();
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read algebra file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

LieAlgebra load_algebra(const RunConfig& cfg)
{
    if (cfg.algebra_file) return parse_structure_json(read_file(*cfg.algebra_file));
    return parse_salamon(cfg.algebra);
}

InvariantComplex load_complex(const RunConfig& cfg)
{
    const LieAlgebra algebra = load_algebra(cfg);
    return InvariantComplex(make_operators(algebra, parse_two_form(cfg.omega, algebra.dim())));
}

ordered_json report_json(const CheckReport& r)
{
    ordered_json j;
    j["passed"] = r.passed();
    ordered_json results = ordered_json::array();
    for (const CheckResult& c : r.results) {
        ordered_json e;
        e["name"] = c.name;
        e["passed"] = c.passed;
        if (!c.detail.empty()) e["detail"] = c.detail;
        results.push_back(std::move(e));
    }
    j["results"] = std::move(results);
    ordered_json findings = ordered_json::object();
    for (const auto& [k, v] : r.findings) findings[k] = v;
    j["findings"] = std::move(findings);
    return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<std::string>& parts, const std::string& sep)
{
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
    return out;
}

std::vector<std::string> split(const std::string& text, std::vector<std::size_t>& offsets)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start));
        offsets.push_back(start);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string group_title(GroupName g)
{
    switch (g) {
    case GroupName::DeRham: return "H_d";
    case GroupName::DLambda: return "H_dL";
    case GroupName::PPlus: return "PH_del+";
    case GroupName::PMinus: return "PH_del-";
    case GroupName::DPlusDLambda: return "PH_d+dL";
    case GroupName::DDLambda: return "PH_ddL";
    }
    return "";
}

struct Selection {
    GroupName group;
    std::vector<int> degrees;
};

std::vector<Selection> select(const InvariantComplex& cx, const RunConfig& cfg)
{
    std::vector<GroupName> groups = cfg.groups;
    if (groups.empty()) groups.assign(kAllGroups.begin(), kAllGroups.end());
    std::vector<Selection> out;
    for (GroupName g : groups) {
        Selection s{g, {}};
        const int top = cx.max_degree(g);
        if (cfg.degrees.empty()) {
            for (int k = 0; k <= top; ++k) s.degrees.push_back(k);
        } else {
            for (int k : cfg.degrees) {
                if (k < 0 || k > top)
                    throw InputError("degree " + std::to_string(k) + " is outside 0.." + std::to_string(top) +
                                     " for group " + std::string(group_key(g)));
                s.degrees.push_back(k);
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::string markdown_groups(const InvariantComplex& cx, const std::vector<Selection>& sel,
                            const std::vector<std::vector<CohomologyGroup>>& groups)
{
    std::vector<int> columns;
    for (const auto& s : sel) columns.insert(columns.end(), s.degrees.begin(), s.degrees.end());
    std::sort(columns.begin(), columns.end());
    columns.erase(std::unique(columns.begin(), columns.end()), columns.end());

    std::ostringstream md;
    md << "# " << cx.operators().algebra().salamon() << ", omega = " << format_form(cx.structure().omega()) << "\n\n";
    const auto header = [&] {
        md << "| |";
        for (int k : columns) md << " k=" << k << " |";
        md << "\n|---|";
        for (std::size_t i = 0; i < columns.size(); ++i) md << "---|";
        md << "\n";
    };
    const auto cell = [&](std::size_t row, int k, bool dims) -> std::string {
        const auto& degs = sel[row].degrees;
        const auto it = std::find(degs.begin(), degs.end(), k);
        if (it == degs.end()) return "";
        const CohomologyGroup& g = groups[row][static_cast<std::size_t>(it - degs.begin())];
        if (dims) return std::to_string(g.dimension());
        std::vector<std::string> forms;
        for (const Form& f : g.representatives) {
            const std::string s = format_form(f);
            forms.push_back(f.terms().size() > 1 ? "(" + s + ")" : s);
        }
        return join(forms, ", ");
    };
    for (bool dims : {false, true}) {
        md << (dims ? "## Dimensions\n\n" : "## Bases\n\n");
        header();
        for (std::size_t row = 0; row < sel.size(); ++row) {
            md << "| " << group_title(sel[row].group) << " |";
            for (int k : columns) md << " " << cell(row, k, dims) << " |";
            md << "\n";
        }
        md << "\n";
    }
    return md.str();
}

CheckReport run_suite(const std::string& suite, const RunConfig& cfg, const InvariantComplex* cx)
{
    if (suite == "symbol") return run_symbol_suite(cfg.symbol_n, cfg.symbol_samples, cfg.seed);
    if (suite == "identities") return run_identity_suite(*cx);
    if (suite == "hodge") return run_hodge_suite(*cx);
    if (suite == "lefschetz") return check_strong_lefschetz(*cx);
    if (suite == "index") {
        CheckReport r = check_invariants(*cx);
        r.suite = "index";
        return r;
    }
    CheckReport r;
    r.suite = "ddlambda";
    r.merge(check_low_degree_equivalence(*cx));
    r.merge(check_ddlambda_lemma(*cx));
    r.merge(check_comparison_bounds(*cx));
    return r;
}

} // namespace

std::vector<GroupName> parse_groups(const std::string& text)
{
    std::vector<std::size_t> offsets;
    const auto parts = split(text, offsets);
    std::vector<GroupName> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto g = parse_group_key(parts[i]);
        if (!g) throw ParseError(text, offsets[i], "unknown group '" + parts[i] + "' (expected dR, dL, p+, p-, d+dL, ddL)");
        if (std::find(out.begin(), out.end(), *g) == out.end()) out.push_back(*g);
    }
    return out;
}

std::vector<int> parse_degrees(const std::string& text)
{
    std::vector<std::size_t> offsets;
    const auto parts = split(text, offsets);
    std::vector<int> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const std::string& p = parts[i];
        const auto number = [&](std::size_t from, std::size_t to) {
            if (from >= to) throw ParseError(text, offsets[i] + from, "expected a degree");
            int v = 0;
            for (std::size_t c = from; c < to; ++c) {
                if (p[c] < '0' || p[c] > '9') throw ParseError(text, offsets[i] + c, "expected a digit");
                v = v * 10 + (p[c] - '0');
                if (v > 64) throw ParseError(text, offsets[i] + from, "degree too large");
            }
            return v;
        };
        const std::size_t dash = p.find('-');
        const int lo = number(0, dash == std::string::npos ? p.size() : dash);
        const int hi = dash == std::string::npos ? lo : number(dash + 1, p.size());
        if (hi < lo) throw ParseError(text, offsets[i], "empty degree range");
        for (int k = lo; k <= hi; ++k)
            if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string compute(const RunConfig& cfg, bool* ok)
{
    const InvariantComplex cx = load_complex(cfg);
    const std::vector<Selection> sel = select(cx, cfg);

    std::vector<std::vector<CohomologyGroup>> groups(sel.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t i = 0; i < sel.size(); ++i) {
        groups[i].resize(sel[i].degrees.size());
        for (std::size_t j = 0; j < sel[i].degrees.size(); ++j)
            tasks.emplace_back([&, i, j] { groups[i][j] = cx.group(sel[i].group, sel[i].degrees[j]); });
    }
    CheckReport invariants;
    tasks.emplace_back([&] { invariants = check_invariants(cx); });
    run_parallel(tasks, cfg.threads);
    if (ok) *ok = invariants.passed();

    if (cfg.format == Format::Markdown) return markdown_groups(cx, sel, groups);

    ordered_json j;
    j["algebra"] = cx.operators().algebra().salamon();
    j["omega"] = format_form(cx.structure().omega());
    ordered_json by_group = ordered_json::object();
    ordered_json dims = ordered_json::object();
    for (std::size_t i = 0; i < sel.size(); ++i) {
        const std::string key(group_key(sel[i].group));
        ordered_json per_degree = ordered_json::object();
        ordered_json dim_list = ordered_json::array();
        for (const CohomologyGroup& g : groups[i]) {
            ordered_json basis = ordered_json::array();
            for (const Form& f : g.representatives) basis.push_back(format_form(f));
            per_degree[std::to_string(g.degree)] = {{"dim", g.dimension()}, {"basis", std::move(basis)}};
            dim_list.push_back(g.dimension());
        }
        by_group[key] = std::move(per_degree);
        dims[key] = std::move(dim_list);
    }
    j["groups"] = std::move(by_group);
    j["dims"] = std::move(dims);
    j["checks"] = {{"invariants", report_json(invariants)}};
    return dump(j);
}

std::string check(const RunConfig& cfg, bool* ok, std::string* first_failure)
{
    std::vector<std::string> suites = cfg.suites.empty() ? kSuites : cfg.suites;
    bool needs_complex = false;
    for (const auto& s : suites) {
        if (std::find(kSuites.begin(), kSuites.end(), s) == kSuites.end())
            throw InputError("unknown suite '" + s + "' (expected " + join(kSuites, ", ") + ")");
        needs_complex = needs_complex || s != "symbol";
    }
    if (cfg.symbol_n < 1) throw InputError("--n must be at least 1");

    std::optional<InvariantComplex> cx;
    if (needs_complex) cx.emplace(load_complex(cfg));

    std::vector<CheckReport> reports(suites.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t i = 0; i < suites.size(); ++i)
        tasks.emplace_back([&, i] { reports[i] = run_suite(suites[i], cfg, cx ? &*cx : nullptr); });
    run_parallel(tasks, cfg.threads);

    bool all = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (const CheckResult* f = reports[i].first_failure(); f && all) {
            all = false;
            if (first_failure) *first_failure = suites[i] + ": " + f->name + (f->detail.empty() ? "" : ": " + f->detail);
        }
    }
    if (ok) *ok = all;

    if (cfg.format == Format::Markdown) {
        std::ostringstream md;
        if (cx) md << "# " << cx->operators().algebra().salamon() << ", omega = " << format_form(cx->structure().omega()) << "\n\n";
        for (std::size_t i = 0; i < suites.size(); ++i) {
            md << "## " << suites[i] << (reports[i].passed() ? " (pass)" : " (FAIL)") << "\n\n";
            std::istringstream lines(format_report(reports[i]));
            for (std::string line; std::getline(lines, line);) md << "- " << line << "\n";
            md << "\n";
        }
        return md.str();
    }

    ordered_json j;
    if (cx) {
        j["algebra"] = cx->operators().algebra().salamon();
        j["omega"] = format_form(cx->structure().omega());
    }
    ordered_json checks = ordered_json::object();
    for (std::size_t i = 0; i < suites.size(); ++i) {
        ordered_json r = report_json(reports[i]);
        if (suites[i] == "symbol") {
            r["n"] = cfg.symbol_n;
            r["samples"] = cfg.symbol_samples;
            r["seed"] = cfg.seed;
        }
        checks[suites[i]] = std::move(r);
    }
    j["checks"] = std::move(checks);
    j["passed"] = all;
    return dump(j);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    std::string groups, degrees, suites, format = "json", out_path;
    std::optional<std::string> algebra_file;

    CLI::App app{"Symplectic primitive cohomology of invariant forms on nilmanifolds", "symcoh"};
    app.require_subcommand(1);
    CLI::App* compute_cmd = app.add_subcommand("compute", "Compute cohomology groups with representatives");
    CLI::App* check_cmd = app.add_subcommand("check", "Run verification suites");
    for (CLI::App* sub : {compute_cmd, check_cmd}) {
        sub->add_option("--algebra", cfg.algebra, "Salamon notation, e.g. (0,0,0,12,14,15+23+24)");
        sub->add_option("--algebra-file", algebra_file, "JSON structure constants");
        sub->add_option("--omega", cfg.omega, "Symplectic form, e.g. 16+25-34");
        sub->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
        sub->add_option("--out", out_path, "Write the report to a file");
    }
    compute_cmd->add_option("--groups", groups, "Comma-separated subset of dR,dL,p+,p-,d+dL,ddL");
    compute_cmd->add_option("--degrees", degrees, "Degrees, e.g. 0,2-3");
    check_cmd->add_option("--suite", suites, "Comma-separated subset of " + join(kSuites, ","));
    check_cmd->add_option("--n", cfg.symbol_n, "Largest half-dimension for the symbol suite");
    check_cmd->add_option("--samples", cfg.symbol_samples, "Random covectors per n for the symbol suite");
    check_cmd->add_option("--seed", cfg.seed, "Seed for symbol-suite covector sampling");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        cfg.algebra_file = algebra_file;
        cfg.format = format == "md" ? Format::Markdown : Format::Json;
        if (!groups.empty()) cfg.groups = parse_groups(groups);
        if (!degrees.empty()) cfg.degrees = parse_degrees(degrees);
        if (!suites.empty()) {
            std::vector<std::size_t> offsets;
            cfg.suites = split(suites, offsets);
        }
        if (const char* env = std::getenv("SYMCOH_THREADS"); env && *env) {
            char* end = nullptr;
            const long t = std::strtol(env, &end, 10);
            if (*end != '\0' || t < 1) throw InputError("SYMCOH_THREADS must be a positive integer");
            cfg.threads = static_cast<unsigned>(t);
        }

        bool ok = true;
        std::string failure;
        const std::string text = compute_cmd->parsed() ? compute(cfg, &ok) : check(cfg, &ok, &failure);
        if (!out_path.empty()) {
            std::ofstream file(out_path, std::ios::binary);
            if (!file) throw InputError("cannot write '" + out_path + "'");
            file << text;
        } else {
            out << text;
        }
        if (!ok) {
            err << "FAIL " << (failure.empty() ? "invariants" : failure) << "\n";
            return kExitCheckFailed;
        }
        return kExitOk;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}

} // namespace symcoh::cli
