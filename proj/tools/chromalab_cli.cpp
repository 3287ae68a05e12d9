// Copyright 2026 chromalab contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "chromalab/enumerate.hpp"
#include "chromalab/families.hpp"
#include "chromalab/graph6.hpp"
#include "chromalab/sweep.hpp"
#include "chromalab/theorems.hpp"

namespace {

using namespace chromalab;

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;

struct Options {
    std::string input;
    std::string format = "g6";
    std::string family;
    std::vector<int> params;
    int sweep = 0;
    bool trees = false;
    int cap = kDefaultSolverCap;
    int workers = 1;
    std::string out;
    std::string theorem;
    bool json = false;
};

int default_cap() {
    if (const char* env = std::getenv("CHROMALAB_CAP")) {
        const int cap = std::atoi(env);
        if (cap >= 1) return cap;
    }
    return kDefaultSolverCap;
}

// Labeled input graph; the label names the source in error messages.
struct Input {
    std::string label;
    Graph graph;
};

std::vector<Input> read_graph_file(const std::string& path, const std::string& format) {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot open " + path);
    std::vector<Input> out;
    if (format == "edges") {
        std::stringstream whole;
        whole << file.rdbuf();
        if (whole.str().find_first_not_of(" \t\r\n") == std::string::npos) return out;
        out.push_back({path, parse_edge_list(whole.str())});
        return out;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(file, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            out.push_back({path + ":" + std::to_string(lineno), parse_graph6(line)});
        } catch (const std::runtime_error& e) {
            throw ParseError(path + ": line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

void require_single_source(const Options& opt) {
    const int sources =
        (!opt.input.empty() ? 1 : 0) + (!opt.family.empty() ? 1 : 0) + (opt.sweep > 0 ? 1 : 0);
    if (sources > 1)
        throw ParseError("exactly one input source per invocation: --input, --family or --sweep");
}

std::vector<Input> gather_inputs(const Options& opt) {
    std::vector<Input> inputs;
    if (!opt.input.empty()) return read_graph_file(opt.input, opt.format);
    if (!opt.family.empty()) {
        Graph g = generate(make_family_spec(opt.family, opt.params));
        std::string label = opt.family + "(";
        for (std::size_t i = 0; i < opt.params.size(); ++i)
            label += (i ? "," : "") + std::to_string(opt.params[i]);
        label += ")";
        inputs.push_back({std::move(label), std::move(g)});
        return inputs;
    }
    if (opt.sweep > 0) {
        auto graphs = opt.trees ? enumerate_trees_upto(opt.sweep)
                                : enumerate_connected_graphs_upto(opt.sweep);
        for (auto& g : graphs) {
            std::string key = write_graph6(g);
            inputs.push_back({std::move(key), std::move(g)});
        }
        return inputs;
    }
    throw ParseError("no input: give --input, --family or --sweep");
}

void check_caps(const std::vector<Input>& inputs, int cap) {
    for (const auto& in : inputs)
        if (in.graph.order() > cap)
            throw CapError("graph " + in.label + " has n=" + std::to_string(in.graph.order()) +
                           " above the solver cap " + std::to_string(cap));
}

std::ostream& open_out(const Options& opt, std::ofstream& file) {
    if (opt.out.empty()) return std::cout;
    file.open(opt.out);
    if (!file) throw ParseError("cannot open output file " + opt.out);
    return file;
}

int run_compute(const Options& opt) {
    require_single_source(opt);
    const auto inputs = gather_inputs(opt);
    check_caps(inputs, opt.cap);
    std::vector<Graph> graphs;
    graphs.reserve(inputs.size());
    for (const auto& in : inputs) graphs.push_back(in.graph);
    const auto reports = compute_reports(graphs, opt.cap, opt.workers);

    std::ofstream file;
    std::ostream& out = open_out(opt, file);
    if (opt.json) {
        for (const auto& r : reports) out << report_to_json(r).dump() << '\n';
    } else if (!reports.empty()) {
        out << report_table_header() << '\n';
        for (const auto& r : reports) out << report_table_row(r) << '\n';
    }
    return kExitOk;
}

void print_verdict_human(std::ostream& out, const TheoremVerdict& v) {
    out << v.theorem_id;
    for (std::size_t pad = v.theorem_id.size(); pad < 14; ++pad) out << ' ';
    out << v.graph_key;
    for (std::size_t pad = v.graph_key.size(); pad < 20; ++pad) out << ' ';
    out << to_string(v.status);
    if (v.status == VerdictStatus::violated || v.discrepancy) out << "  " << v.evidence.dump();
    out << '\n';
}

int run_verify(const Options& opt) {
    require_single_source(opt);
    std::vector<TheoremVerdict> verdicts;
    std::vector<SurveyRecord> census;

    const bool want_survey = opt.trees && opt.sweep > 0;
    const bool only = !opt.theorem.empty();

    if (only && opt.theorem == "Ex-P7") {
        if (!opt.input.empty()) gather_inputs(opt);  // still validates the file
        verdicts.push_back(reproduce_p7_example());
    } else if (opt.family == "spider") {
        if (opt.params.size() != 2) throw ParamError("spider expects --params n,m");
        verdicts.push_back(verify_spider(opt.params[0], opt.params[1], opt.cap));
    } else {
        if (!only || opt.theorem != "T-trees-3") {
            if (!opt.input.empty() || !opt.family.empty() || opt.sweep > 0) {
                const auto inputs = gather_inputs(opt);
                check_caps(inputs, opt.cap);
                std::vector<Graph> graphs;
                graphs.reserve(inputs.size());
                for (const auto& in : inputs) graphs.push_back(in.graph);
                verdicts = verify_corpus(graphs, opt.cap, opt.workers);
            } else if (!want_survey) {
                throw ParseError("no input: give --input, --family, --sweep or --theorem Ex-P7");
            }
        }
        if (want_survey) {
            auto survey = survey_chi3(std::min(opt.sweep, 9), opt.cap, opt.workers);
            verdicts.push_back(std::move(survey.tree_verdict));
            census = std::move(survey.graph_chi3_census);
        }
    }

    if (only) {
        std::erase_if(verdicts,
                      [&](const TheoremVerdict& v) { return v.theorem_id != opt.theorem; });
        if (verdicts.empty())
            throw ParseError("theorem " + opt.theorem + " is not produced by this invocation");
    }

    std::ofstream file;
    std::ostream& out = open_out(opt, file);
    int violated = 0, discrepancies = 0;
    for (const auto& v : verdicts) {
        if (v.status == VerdictStatus::violated) ++violated;
        if (v.discrepancy) ++discrepancies;
        if (opt.json)
            out << verdict_to_json(v).dump() << '\n';
        else
            print_verdict_human(out, v);
    }
    if (opt.json)
        for (const auto& rec : census) out << survey_record_to_json(rec).dump() << '\n';

    if (discrepancies > 0)
        std::cerr << "warning: " << discrepancies
                  << " verdict(s) carry flagged discrepancy records (statement vs computation);"
                     " see evidence\n";
    return violated == 0 ? kExitOk : kExitViolated;
}

int run_enumerate(const Options& opt) {
    if (opt.sweep < 1) throw ParseError("enumerate needs --sweep N");
    const auto graphs =
        opt.trees ? enumerate_trees_upto(opt.sweep) : enumerate_connected_graphs_upto(opt.sweep);
    std::ofstream file;
    std::ostream& out = open_out(opt, file);
    for (const auto& g : graphs) out << write_graph6(g) << '\n';
    return kExitOk;
}

int run_construct(const Options& opt) {
    if (opt.family.empty()) throw ParseError("construct needs --family NAME --params CSV");
    const Graph g = generate(make_family_spec(opt.family, opt.params));
    std::ofstream file;
    std::ostream& out = open_out(opt, file);
    out << write_graph6(g) << '\n';
    return kExitOk;
}

void add_common_options(CLI::App* cmd, Options& opt) {
    cmd->add_option("--input", opt.input, "input file (one graph6 per line, or an edge list)");
    cmd->add_option("--format", opt.format, "input format: g6|edges")
        ->check(CLI::IsMember({"g6", "edges"}));
    cmd->add_option("--family", opt.family, "family: path|cycle|star|complete_multipartite|spider");
    cmd->add_option("--params", opt.params, "family parameters, comma separated")->delimiter(',');
    cmd->add_option("--sweep", opt.sweep, "exhaustive corpus of all connected graphs with n <= N");
    cmd->add_flag("--trees", opt.trees, "sweep trees instead of general connected graphs");
    cmd->add_option("--cap", opt.cap, "solver cap on vertices (env CHROMALAB_CAP)");
    cmd->add_option("--workers", opt.workers, "worker count for corpus sweeps")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", opt.out, "write output to this path instead of stdout");
    cmd->add_option("--theorem", opt.theorem, "restrict verify to one theorem id");
    cmd->add_flag("--json", opt.json, "emit line-delimited structured records");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact locating/distinguishing chromatic number toolkit"};
    app.require_subcommand(1);

    Options opt;
    opt.cap = default_cap();
    auto* compute = app.add_subcommand("compute", "solve all invariants per input graph");
    auto* verify = app.add_subcommand("verify", "machine-check the theorem battery");
    auto* enumerate = app.add_subcommand("enumerate", "list non-isomorphic graphs as graph6");
    auto* construct = app.add_subcommand("construct", "emit one family graph as graph6");
    for (auto* cmd : {compute, verify, enumerate, construct}) add_common_options(cmd, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return run_compute(opt);
        if (verify->parsed()) return run_verify(opt);
        if (enumerate->parsed()) return run_enumerate(opt);
        if (construct->parsed()) return run_construct(opt);
    } catch (const CapError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const DisconnectedError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ParamError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitViolated;
    }
    return kExitOk;
}
