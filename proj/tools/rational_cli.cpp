#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rational/cycles.hpp"
#include "rational/errors.hpp"
#include "rational/exprlang.hpp"
#include "rational/generate.hpp"
#include "rational/io.hpp"
#include "rational/normalize.hpp"
#include "rational/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace rational;

// exit codes: 0 pass, 1 property failure / inequality / divergence,
// 2 usage or parse error
constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

Transducer resolve_machine(const std::string& arg) {
    if (std::filesystem::exists(arg)) {
        std::ifstream in(arg);
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_machine(buf.str());
    }
    return parse_element(arg).forward();
}

std::string word_or_epsilon(const Word& w) { return w.empty() ? "ε" : w.str(); }

json scc_json(const Transducer& T, const SccInfo& scc) {
    json names = json::array();
    for (StateId s : scc.states) names.push_back(T.name(s));
    return json{{"states", names},
                {"period", scc.period},
                {"min_output_per_cycle", scc.min_output_per_cycle},
                {"has_empty_output_cycle", scc.has_empty_output_cycle}};
}

int cmd_eval(const std::string& expr, const std::string& word) {
    Element e = parse_element(expr);
    Word w = Word::from_string(word);
    std::cout << word_or_epsilon(eval_prefix(e.forward(), w)) << "\n";
    return kOk;
}

int cmd_canon(const std::string& target, const std::string& format) {
    CanonicalForm c = minimize(resolve_machine(target));
    if (format == "json") {
        json out{{"states", c.machine.num_states()},
                 {"restrictions", c.restriction_count},
                 {"machine", json::parse(serialize_machine(c.machine))}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "states: " << c.machine.num_states() << "\n";
        std::cout << "restrictions: " << c.restriction_count << "\n";
        std::cout << serialize_machine(c.machine);
    }
    return kOk;
}

int cmd_equal(const std::string& a, const std::string& b) {
    bool same = equal(parse_element(a), parse_element(b));
    std::cout << (same ? "equal" : "distinct") << "\n";
    return same ? kOk : kFailure;
}

int cmd_dot(const std::string& target) {
    std::cout << to_dot(resolve_machine(target));
    return kOk;
}

int cmd_analyze(const std::string& target, std::uint64_t p, const std::string& format) {
    Transducer T = resolve_machine(target);
    CycleReport report = analyze_cycles(T);
    LipschitzReport lip = lipschitz_report(T);
    bool oblivious = p != 0 && is_oblivious(T, p);
    if (format == "json") {
        json out{{"accessible_states", report.accessible_count},
                 {"enumeration_complete", report.complete},
                 {"sccs", json::array()},
                 {"lipschitz",
                  {{"min_ratio", lip.min_ratio},
                   {"max_ratio", lip.max_ratio},
                   {"has_empty_output_cycle", lip.has_empty_output_cycle}}}};
        for (const auto& scc : report.sccs) out["sccs"].push_back(scc_json(T, scc));
        if (p != 0) out["oblivious"] = {{"p", p}, {"value", oblivious}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "accessible states: " << report.accessible_count << "\n";
        for (const auto& scc : report.sccs) {
            std::cout << "component {";
            for (std::size_t i = 0; i < scc.states.size(); ++i)
                std::cout << (i ? "," : "") << T.name(scc.states[i]);
            std::cout << "}: period=" << scc.period
                      << " min_output_per_cycle=" << scc.min_output_per_cycle
                      << " empty_output_cycle=" << (scc.has_empty_output_cycle ? "yes" : "no")
                      << "\n";
        }
        std::cout << "cycle enumeration complete: " << (report.complete ? "yes" : "no")
                  << "\n";
        std::cout << "lipschitz: min_ratio=" << lip.min_ratio
                  << " max_ratio=" << lip.max_ratio << " empty_output_cycle="
                  << (lip.has_empty_output_cycle ? "yes" : "no") << "\n";
        if (p != 0)
            std::cout << "oblivious to " << p << ": " << (oblivious ? "yes" : "no")
                      << "\n";
    }
    return kOk;
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt,
               const std::string& format) {
    std::vector<SuiteResult> results;
    if (suite == "all")
        results = run_all_suites(opt);
    else
        results.push_back(run_suite(suite, opt));

    bool ok = true;
    if (format == "json") {
        json out = json::array();
        for (const auto& r : results) {
            json cases = json::array();
            for (const auto& c : r.cases) {
                json item{{"name", c.name}, {"passed", c.passed}};
                if (!c.passed) item["witness"] = c.witness;
                cases.push_back(std::move(item));
            }
            out.push_back(json{{"suite", r.suite},
                               {"passed", r.cases.size() - r.failed()},
                               {"failed", r.failed()},
                               {"seconds", r.seconds},
                               {"cases", std::move(cases)}});
            ok = ok && r.ok();
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::ostringstream line;
            line.setf(std::ios::fixed);
            line.precision(2);
            line << "suite " << r.suite << ": " << (r.cases.size() - r.failed()) << "/"
                 << r.cases.size() << " passed (" << r.seconds << "s)";
            std::cout << line.str() << "\n";
            for (const auto& c : r.cases) {
                if (c.passed) continue;
                std::cout << "  FAILED " << c.name << "\n";
                if (!c.witness.empty()) std::cout << c.witness << "\n";
            }
            ok = ok && r.ok();
        }
        std::cout << (ok ? "all properties hold" : "FAILURES above") << "\n";
    }
    return ok ? kOk : kFailure;
}

int cmd_gen(const std::string& what, const GeneratorSpec& spec,
            const std::string& format) {
    if (what == "element") {
        Element e = gen_element(spec);
        if (format == "json") {
            json out{{"expression", e.describe()},
                     {"machine", json::parse(serialize_machine(e.forward()))}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "expression: " << e.describe() << "\n";
            std::cout << serialize_machine(e.forward());
        }
    } else {
        std::cout << serialize_machine(gen_machine(spec));
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"asynchronous binary transducer algebra"};
    app.require_subcommand(1);

    std::string expr, word, target, expr_b, format = "text", suite = "all";
    std::string what = "element";
    std::uint64_t p = 0;
    SuiteOptions opt;
    GeneratorSpec spec;

    auto* eval_cmd = app.add_subcommand("eval", "apply an element to a word prefix");
    eval_cmd->add_option("expr", expr)->required();
    eval_cmd->add_option("word", word);

    auto* canon_cmd =
        app.add_subcommand("canon", "canonical machine and restriction count");
    canon_cmd->add_option("target", target, "expression or machine file")->required();
    canon_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* equal_cmd = app.add_subcommand("equal", "canonical equality of two elements");
    equal_cmd->add_option("a", expr)->required();
    equal_cmd->add_option("b", expr_b)->required();

    auto* analyze_cmd =
        app.add_subcommand("analyze", "cycle structure and obliviousness");
    analyze_cmd->add_option("target", target, "expression or machine file")->required();
    analyze_cmd->add_option("--p", p, "prime for the obliviousness check");
    analyze_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* dot_cmd = app.add_subcommand("dot", "state diagram in DOT format");
    dot_cmd->add_option("target", target, "expression or machine file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("suite", suite, "suite name or 'all'");
    verify_cmd->add_option("--seed", opt.seed);
    verify_cmd->add_option("--samples", opt.samples);
    verify_cmd->add_option("--p", p, "restrict prime-indexed suites to one prime");
    verify_cmd->add_option("--depth", opt.element_depth, "generated element depth");
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* gen_cmd = app.add_subcommand("gen", "generate an element or machine");
    gen_cmd->add_option("what", what)->check(CLI::IsMember({"element", "machine"}));
    gen_cmd->add_option("--seed", spec.seed);
    gen_cmd->add_option("--depth", spec.depth);
    gen_cmd->add_option("--states", spec.max_states);
    gen_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (eval_cmd->parsed()) return cmd_eval(expr, word);
        if (canon_cmd->parsed()) return cmd_canon(target, format);
        if (equal_cmd->parsed()) return cmd_equal(expr, expr_b);
        if (analyze_cmd->parsed()) return cmd_analyze(target, p, format);
        if (dot_cmd->parsed()) return cmd_dot(target);
        if (verify_cmd->parsed()) {
            if (p != 0) opt.prime = p;
            return cmd_verify(suite, opt, format);
        }
        if (gen_cmd->parsed()) return cmd_gen(what, spec, format);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const InvariantError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kUsage;
    } catch (const DivergenceError& e) {
        std::cerr << "analysis failed: " << e.what() << "\n";
        return kFailure;
    } catch (const InitialResidueError& e) {
        std::cerr << "analysis failed: " << e.what() << "\n";
        return kFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
