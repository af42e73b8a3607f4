// Command-line front end: decide | local | invariants | oracle | selftest.
//
// Exit codes: 0 realizable (or oracle found, or checks passed),
// 1 locally fails, 2 not realizable up to the bound (or oracle not found),
// 3 inconclusive, 4 input error, 5 internal audit failure. A batch exits
// with the largest code of its documents.

#include "maxtorus/error.hpp"
#include "maxtorus/report.hpp"
#include "maxtorus/selfcheck.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace maxtorus;

namespace {

constexpr int kExitInput = 4;
constexpr int kExitAudit = 5;
constexpr unsigned kDefaultOracleHeight = 4;

struct Flags {
    std::string input = "-";
    std::uint64_t bound = 0; // 0: from the document
    unsigned height = 0;     // 0: from the document
    bool json = false;
    bool quiet = false;
    bool timing = false;
    std::uint64_t seed = 20240601;
};

int verdict_exit(Verdict v)
{
    switch (v) {
    case Verdict::Realizable:
        return 0;
    case Verdict::LocallyFails:
        return 1;
    case Verdict::NotRealizableUpToBound:
        return 2;
    case Verdict::Inconclusive:
        return 3;
    }
    return 3;
}

std::string read_input(const std::string& path)
{
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json tool_json() { return {{"name", kToolName}, {"version", kToolVersion}}; }

struct Outcome {
    Json document;
    int code;
    std::string summary;
};

using Handler = Outcome (*)(const Json&, const Flags&);

Outcome run_decide(const Json& input, const Flags& flags)
{
    ProblemDocument doc = parse_problem(input);
    if (flags.bound)
        doc.prime_bound = flags.bound;
    if (flags.height)
        doc.oracle_height = flags.height;
    const Problem p = build_problem(doc);
    const DecisionReport r = decide(p.algebra, p.form, p.annotations, p.prime_bound);
    Json out = report_document(doc, r);
    std::string summary = summary_line(r);
    if (p.oracle_height > 0) {
        const OracleResult o = oracle_search(p.algebra, p.form, p.oracle_height);
        if (o.found() && (r.verdict == Verdict::LocallyFails || r.verdict == Verdict::NotRealizableUpToBound))
            throw AuditError("oracle found a realizing alpha but the verdict is " + to_string(r.verdict));
        if (o.found() && r.verdict == Verdict::Inconclusive) {
            // An explicit alpha settles the question the local data could not.
            out["report"]["verdict"] = to_string(Verdict::Realizable);
            out["report"]["notes"].push_back("verdict settled by the oracle: q is the trace form of the reported alpha");
            summary = "realizable (settled by oracle; engine was inconclusive)";
            out["oracle"] = oracle_json(o);
            return {std::move(out), 0, summary};
        }
        out["oracle"] = oracle_json(o);
        summary += std::string("; oracle ") + (o.found() ? "found" : "not found") + " at height "
                 + std::to_string(o.height);
    }
    return {std::move(out), verdict_exit(r.verdict), summary};
}

Outcome run_local(const Json& input, const Flags&)
{
    const ProblemDocument doc = parse_problem(input);
    const Problem p = build_problem(doc);
    const LocalCheckResult r = check_local(p.algebra, p.form, p.annotations);
    Json out;
    out["tool"] = tool_json();
    out["input"] = render_problem(doc);
    out["local"] = local_json(r);
    const int code = r.fails() ? 1 : (r.blocked() ? 3 : 0);
    std::string summary = r.fails() ? "local conditions fail: " + to_string(*r.failing_condition)
                                    : (r.blocked() ? "local conditions blocked by split data" : "local conditions hold");
    return {std::move(out), code, summary};
}

Outcome run_invariants(const Json& input, const Flags&)
{
    const ProblemDocument doc = parse_problem(input);
    const Problem p = build_problem(doc);
    const QFInvariants inv = invariants(p.form);
    Json out;
    out["tool"] = tool_json();
    out["input"] = render_problem(doc);
    out["form"] = invariants_json(inv);
    out["algebra"] = algebra_json(p.algebra);
    return {std::move(out), 0, "disc(q) = " + inv.disc.rep().get_str() + ", disc(E) = "
                                   + algebra_disc_class(p.algebra).rep().get_str()};
}

Outcome run_oracle(const Json& input, const Flags& flags)
{
    ProblemDocument doc = parse_problem(input);
    if (flags.height)
        doc.oracle_height = flags.height;
    else if (doc.oracle_height == 0)
        doc.oracle_height = kDefaultOracleHeight;
    const Problem p = build_problem(doc);
    const OracleResult r = oracle_search(p.algebra, p.form, p.oracle_height);
    Json out;
    out["tool"] = tool_json();
    out["input"] = render_problem(doc);
    out["oracle"] = oracle_json(r);
    return {std::move(out), r.found() ? 0 : 2,
            std::string(r.found() ? "found" : "not found") + " after " + std::to_string(r.examined) + " candidates"};
}

Outcome run_guarded(Handler handler, const Json& input, const Flags& flags)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = handler(input, flags);
    } catch (const InputError& e) {
        out = {{{"tool", tool_json()}, {"error", e.what()}}, kExitInput, std::string("input error: ") + e.what()};
    } catch (const AuditError& e) {
        out = {{{"tool", tool_json()}, {"error", e.what()}}, kExitAudit, std::string("audit failure: ") + e.what()};
    }
    if (flags.timing) {
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        out.document["timing"] = {{"milliseconds", ms}};
    }
    return out;
}

int run_documents(Handler handler, const std::string& command, const Flags& flags)
{
    Json input;
    try {
        input = parse_json_text(read_input(flags.input));
    } catch (const InputError& e) {
        std::cerr << command << ": input error: " << e.what() << "\n";
        if (!flags.quiet)
            std::cout << Json{{"tool", tool_json()}, {"error", e.what()}}.dump(2) << "\n";
        return kExitInput;
    }

    int code = 0;
    Json output;
    if (input.is_array()) {
        output = Json::array();
        for (std::size_t k = 0; k < input.size(); ++k) {
            Outcome o = run_guarded(handler, input[k], flags);
            code = std::max(code, o.code);
            if (!flags.quiet && !flags.json)
                std::cerr << command << " [" << k << "]: " << o.summary << "\n";
            if (o.code >= kExitInput && (flags.quiet || flags.json))
                std::cerr << command << " [" << k << "]: " << o.summary << "\n";
            output.push_back(std::move(o.document));
        }
    } else {
        Outcome o = run_guarded(handler, input, flags);
        code = o.code;
        if (!flags.quiet && !flags.json)
            std::cerr << command << ": " << o.summary << "\n";
        else if (o.code >= kExitInput)
            std::cerr << command << ": " << o.summary << "\n";
        output = std::move(o.document);
    }
    if (!flags.quiet)
        std::cout << output.dump(2) << "\n";
    return code;
}

int run_selftest_command(const Flags& flags)
{
    const auto results = run_selftest(flags.seed);
    bool ok = true;
    Json out = Json::array();
    for (const auto& r : results) {
        ok = ok && r.ok();
        out.push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"messages", r.messages}});
        if (!flags.quiet && !flags.json) {
            std::cerr << (r.ok() ? "pass " : "FAIL ") << r.name << " (" << r.cases << " cases";
            if (r.failures)
                std::cerr << ", " << r.failures << " failures";
            std::cerr << ")\n";
            for (const auto& m : r.messages)
                std::cerr << "    " << m << "\n";
        }
    }
    if (flags.json && !flags.quiet)
        std::cout << Json{{"tool", tool_json()}, {"seed", flags.seed}, {"suites", out}}.dump(2) << "\n";
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Decide whether O(q) contains a maximal torus of a given type"};
    app.require_subcommand(1);
    Flags flags;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("input", flags.input, "Problem document (JSON object or array); '-' for stdin");
        sub->add_flag("--json", flags.json, "Machine output only");
        sub->add_flag("--quiet", flags.quiet, "No output; exit code only");
        sub->add_flag("--timing", flags.timing, "Add wall-clock timing to each document");
    };

    auto* decide_cmd = app.add_subcommand("decide", "Full decision with certificates");
    add_common(decide_cmd);
    decide_cmd->add_option("--bound", flags.bound, "Witness-place search bound")->check(CLI::Range(2ull, 100000000ull));
    decide_cmd->add_option("--height", flags.height, "Also run the oracle search to this height")->check(CLI::Range(1u, 1000u));

    auto* local_cmd = app.add_subcommand("local", "Local conditions only");
    add_common(local_cmd);

    auto* inv_cmd = app.add_subcommand("invariants", "Form and algebra invariants");
    add_common(inv_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "Bounded search for alpha with q = q_alpha");
    add_common(oracle_cmd);
    oracle_cmd->add_option("--height", flags.height, "Coefficient height")->check(CLI::Range(1u, 1000u));

    auto* self_cmd = app.add_subcommand("selftest", "Run the embedded property suites");
    self_cmd->add_flag("--json", flags.json, "Machine output only");
    self_cmd->add_flag("--quiet", flags.quiet, "No output; exit code only");
    self_cmd->add_option("--seed", flags.seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (decide_cmd->parsed())
            return run_documents(run_decide, "decide", flags);
        if (local_cmd->parsed())
            return run_documents(run_local, "local", flags);
        if (inv_cmd->parsed())
            return run_documents(run_invariants, "invariants", flags);
        if (oracle_cmd->parsed())
            return run_documents(run_oracle, "oracle", flags);
        return run_selftest_command(flags);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const AuditError& e) {
        std::cerr << "audit failure: " << e.what() << "\n";
        return kExitAudit;
    }
}
