/*
 * Copyright 2026 The gbgame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include <gbgame.hpp>

namespace gbgame::cli {

namespace {

/** Usage or input problem; maps to exit code 2. */
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

GameFile load_game(const std::string& path)
{
    try {
        return parse_game(read_file(path));
    } catch (const ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + path + "'");
    f << text;
}

void write_trace(std::ostream& out, const SolveResult& r)
{
    for (std::size_t j = 0; j < r.trace.size(); ++j) {
        const auto& t = r.trace[j];
        out << "# iteration " << j + 1 << ": ";
        if (t.kind == RecordKind::terminal) {
            out << "terminal";
        } else {
            out << (t.kind == RecordKind::small_dominion   ? "small dominion"
                    : t.kind == RecordKind::large_dominion ? "large dominion"
                                                           : "dominion")
                << " witness " << t.witness << " S={";
            bool first = true;
            for_each_vertex(t.dominion, [&](VertexId v) { out << (std::exchange(first, false) ? "" : " ") << v; });
            out << "} D={";
            first = true;
            for_each_vertex(t.removed, [&](VertexId v) { out << (std::exchange(first, false) ? "" : " ") << v; });
            out << "}";
        }
        if (t.level) out << " level " << t.level;
        out << '\n';
    }
}

SolveResult solve_genbuchi_file(const GameFile& f, const std::string& algo, bool sort_targets)
{
    if (algo == "oracle") return solve_via_buchi_reduction(f.graph, f.genbuchi);
    GenBuchiObjective obj = f.genbuchi;
    std::vector<std::size_t> perm;
    if (sort_targets) {
        perm = targets_by_size(f.genbuchi);
        for (std::size_t i = 0; i < perm.size(); ++i) obj.targets[i] = f.genbuchi.targets[perm[i]];
    }
    auto r = algo == "basic" ? solve_basic(f.graph, obj) : solve_fast(f.graph, obj);
    if (sort_targets)
        for (auto& t : r.trace)
            if (t.witness != IterationRecord::npos) t.witness = perm[t.witness];
    return r;
}

SolveResult solve_gr1_file(const GameFile& f, const std::string& algo)
{
    return algo == "basic" ? solve_gr1_basic(f.graph, f.gr1) : solve_gr1_fast(f.graph, f.gr1);
}

int cmd_solve(const std::string& file, const std::string& algo, bool certify, bool sort_targets, bool trace,
              std::ostream& out)
{
    auto f = load_game(file);
    if (f.kind != GameKind::gbg) throw UsageError(file + " holds a GR(1) game; use solve-gr1");
    if (certify && algo == "oracle") throw UsageError("--certify needs --algo basic or fast");
    auto r = solve_genbuchi_file(f, algo, sort_targets);
    write_partition(out, r.w1, r.w2);
    if (trace) write_trace(out, r);
    if (certify) write_certificates(out, GameKind::gbg, extract_genbuchi_strategies(f.graph, f.genbuchi, r));
    return 0;
}

int cmd_solve_gr1(const std::string& file, const std::string& algo, bool certify, bool trace, std::ostream& out)
{
    auto f = load_game(file);
    if (f.kind != GameKind::gr1) throw UsageError(file + " holds a generalized Buchi game; use solve");
    auto r = solve_gr1_file(f, algo);
    write_partition(out, r.w1, r.w2);
    if (trace) write_trace(out, r);
    if (certify) write_certificates(out, GameKind::gr1, extract_gr1_strategies(f.graph, f.gr1, r));
    return 0;
}

void print_lasso(std::ostream& out, const Counterexample& c)
{
    out << "rejected: " << c.reason << '\n';
    out << "stem:";
    for (auto v : c.stem) out << ' ' << v;
    out << "\ncycle:";
    for (auto v : c.cycle) out << ' ' << v;
    out << '\n';
}

int cmd_verify(const std::string& game_file, const std::string& result_file, std::ostream& out)
{
    auto f = load_game(game_file);
    const auto n = f.graph.num_vertices();
    ResultFile res;
    try {
        res = parse_result(read_file(result_file), n);
    } catch (const ParseError& e) {
        throw UsageError(result_file + ": " + e.what());
    }
    if (!res.certificate_kind) throw UsageError(result_file + " carries no certificate; solve with --certify");
    if (*res.certificate_kind != f.kind) throw UsageError("certificate kind does not match the game");

    if (res.w1.intersects(res.w2) || (res.w1 | res.w2).count() != n) {
        out << "rejected: W1 and W2 do not partition the vertices\n";
        return 1;
    }
    CheckResult p1, p2;
    if (f.kind == GameKind::gbg) {
        p1 = check_p1_genbuchi(res.certificates.p1, f.graph, f.genbuchi, res.w1);
        p2 = check_p2_genbuchi(res.certificates.p2, f.graph, f.genbuchi, res.w2);
    } else {
        p1 = check_p1_gr1(res.certificates.p1, f.graph, f.gr1, res.w1);
        p2 = check_p2_gr1(res.certificates.p2, f.graph, f.gr1, res.w2);
    }
    if (!p1) {
        out << "player 1 strategy ";
        print_lasso(out, p1.counterexample);
        return 1;
    }
    if (!p2) {
        out << "player 2 certificate ";
        print_lasso(out, p2.counterexample);
        return 1;
    }
    out << "accepted\n";
    return 0;
}

std::string bits(const VertexSet& v)
{
    std::string s;
    for (std::size_t b = 0; b < v.size(); ++b) s += v.test(b) ? '1' : '0';
    return s;
}

struct GenParams {
    std::size_t n = 10, m = 0, k = 2, k1 = 1, k2 = 1, count = 8, d = 4;
    double p = 0.2, density = 0.25, owner_bias = 0.5, vector_density = 0.5;
    std::uint64_t seed = 1;
    std::string output;
};

int cmd_gen(const std::string& kind, const GenParams& p, std::ostream& out)
{
    GameFile f;
    std::ostringstream meta;
    if (kind == "triangle") {
        if (p.n == 0) throw UsageError("triangle instances need n >= 1");
        auto t = gen_random_triangle(p.n, p.p, p.seed);
        auto pruned = prune_sinks(triangle_to_game(t));
        if (pruned.game.graph.num_vertices() == 0)
            throw UsageError("every vertex of the reduced game is a sink after pruning; no triangle is possible");
        f.graph = pruned.game.graph;
        f.genbuchi = pruned.game.objective;
        meta << "# generator: triangle n=" << p.n << " p=" << p.p << " seed=" << p.seed;
        f.comments.push_back(meta.str());
        f.comments.push_back("# source vertex: " + std::to_string(pruned.game.source) + " (sinks pruned)");
    } else if (kind == "ov") {
        auto inst = gen_random_ov(p.count, p.d, p.vector_density, p.seed);
        auto r = ov_to_game(inst);
        f.graph = r.graph;
        f.genbuchi = r.objective;
        meta << "# generator: ov count=" << p.count << " d=" << p.d << " density=" << p.vector_density
             << " seed=" << p.seed;
        f.comments.push_back(meta.str());
        std::string s1 = "# S1:", s2 = "# S2:";
        for (const auto& v : inst.s1) s1 += " " + bits(v);
        for (const auto& v : inst.s2) s2 += " " + bits(v);
        f.comments.push_back(s1);
        f.comments.push_back(s2);
    } else if (kind == "random") {
        auto g = gen_random_game(p.n, p.m ? p.m : 2 * p.n, p.k, p.owner_bias, p.seed, p.density);
        f.graph = g.graph;
        f.genbuchi = g.objective;
        meta << "# generator: random n=" << p.n << " m=" << (p.m ? p.m : 2 * p.n) << " k=" << p.k
             << " owner_bias=" << p.owner_bias << " density=" << p.density << " seed=" << p.seed;
        f.comments.push_back(meta.str());
    } else {
        auto g = gen_random_gr1(p.n, p.m ? p.m : 2 * p.n, p.k1, p.k2, p.seed, p.owner_bias, p.density);
        f.kind = GameKind::gr1;
        f.graph = g.graph;
        f.gr1 = g.objective;
        meta << "# generator: random-gr1 n=" << p.n << " m=" << (p.m ? p.m : 2 * p.n) << " k1=" << p.k1
             << " k2=" << p.k2 << " owner_bias=" << p.owner_bias << " density=" << p.density << " seed=" << p.seed;
        f.comments.push_back(meta.str());
    }
    write_output(p.output, serialize_game(f), out);
    return 0;
}

struct BenchJob {
    std::string instance;
    std::string path;
    std::string algo;
};

struct BenchRow {
    std::string line;
    std::string error;
};

BenchRow run_job(const BenchJob& job)
{
    BenchRow row;
    try {
        auto f = load_game(job.path);
        const auto& g = f.graph;
        SolveResult r;
        auto start = std::chrono::steady_clock::now();
        if (f.kind == GameKind::gbg) {
            if (job.algo != "basic" && job.algo != "fast" && job.algo != "oracle")
                throw UsageError("unknown algorithm '" + job.algo + "'");
            r = solve_genbuchi_file(f, job.algo, false);
        } else {
            if (job.algo != "basic" && job.algo != "fast") throw UsageError("unknown GR(1) algorithm '" + job.algo + "'");
            r = solve_gr1_file(f, job.algo);
        }
        auto stop = std::chrono::steady_clock::now();
        std::ostringstream s;
        s << job.instance << ',' << g.num_vertices() << ',' << g.num_edges() << ',';
        if (f.kind == GameKind::gbg) s << f.genbuchi.k() << ",,,";
        else s << ',' << f.gr1.assumptions.size() << ',' << f.gr1.guarantees.size() << ',';
        s << job.algo << ',' << std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count() << ','
          << r.w1.count() << ',' << r.trace.size() << ',' << std::hex << std::setw(16) << std::setfill('0')
          << partition_checksum(r.w1, r.w2);
        row.line = s.str();
    } catch (const std::exception& e) {
        row.error = job.instance + " (" + job.algo + "): " + e.what();
    }
    return row;
}

int cmd_bench(const std::string& suite, const std::string& output, unsigned jobs, std::ostream& out,
              std::ostream& err)
{
    const auto text = read_file(suite);
    const auto base = std::filesystem::path(suite).parent_path();
    std::vector<BenchJob> work;
    std::istringstream in(text);
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string path, algo;
        if (!(ls >> path)) continue;
        std::vector<std::string> algos;
        while (ls >> algo) algos.push_back(algo);
        if (algos.empty()) throw UsageError(suite + ": line " + std::to_string(number) + ": no algorithm listed");
        auto full = std::filesystem::path(path).is_absolute() ? std::filesystem::path(path) : base / path;
        for (const auto& a : algos) work.push_back({path, full.string(), a});
    }

    std::vector<BenchRow> rows(work.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < work.size();) rows[i] = run_job(work[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::ostringstream csv;
    csv << "instance,n,m,k,k1,k2,algo,wall_ns,w1_size,iterations,checksum\n";
    bool failed = false;
    for (const auto& r : rows) {
        if (!r.error.empty()) {
            err << "bench: " << r.error << '\n';
            failed = true;
            continue;
        }
        csv << r.line << '\n';
    }
    write_output(output, csv.str(), out);
    return failed ? 2 : 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Generalized Buchi and GR(1) game solver", "gbgame"};
    app.require_subcommand(1);

    std::string file, algo = "fast", result_file, kind, suite, output;
    bool certify = false, sort_targets = false, trace = false;
    unsigned jobs = 1;
    GenParams gp;

    auto* solve = app.add_subcommand("solve", "Solve a generalized Buchi game");
    solve->add_option("--algo", algo, "basic, fast or oracle")->check(CLI::IsMember({"basic", "fast", "oracle"}));
    solve->add_flag("--certify", certify, "Append strategies and a player-2 certificate");
    solve->add_flag("--sort-targets", sort_targets, "Process smaller targets first");
    solve->add_flag("--trace", trace, "Print iteration records as comments");
    solve->add_option("file", file, "Game file")->required();

    auto* solve_gr1 = app.add_subcommand("solve-gr1", "Solve a GR(1) game");
    solve_gr1->add_option("--algo", algo, "basic or fast")->check(CLI::IsMember({"basic", "fast"}));
    solve_gr1->add_flag("--certify", certify, "Append strategies and a player-2 certificate");
    solve_gr1->add_flag("--trace", trace, "Print iteration records as comments");
    solve_gr1->add_option("file", file, "Game file")->required();

    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("kind", kind, "triangle, ov, random or random-gr1")
        ->required()
        ->check(CLI::IsMember({"triangle", "ov", "random", "random-gr1"}));
    gen->add_option("--n", gp.n, "Vertices");
    gen->add_option("--m", gp.m, "Edges before sink repair (default 2n)");
    gen->add_option("--k", gp.k, "Targets");
    gen->add_option("--k1", gp.k1, "Assumption sets");
    gen->add_option("--k2", gp.k2, "Guarantee sets");
    gen->add_option("--p", gp.p, "Edge probability (triangle)");
    gen->add_option("--count", gp.count, "Vectors per family (ov)");
    gen->add_option("--d", gp.d, "Dimension (ov)");
    gen->add_option("--vector-density", gp.vector_density, "Probability of a 1 bit (ov)");
    gen->add_option("--density", gp.density, "Probability that a vertex is in a given set");
    gen->add_option("--owner-bias", gp.owner_bias, "Probability that a vertex belongs to player 1");
    gen->add_option("--seed", gp.seed, "Seed");
    gen->add_option("-o,--output", gp.output, "Output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Check a certified result file");
    verify->add_option("game", file, "Game file")->required();
    verify->add_option("result", result_file, "Result file")->required();

    auto* bench = app.add_subcommand("bench", "Time solvers over a suite");
    bench->add_option("--suite", suite, "Manifest: lines '<game-file> <algo>...'")->required();
    bench->add_option("-o,--output", output, "CSV file (default stdout)");
    bench->add_option("--jobs", jobs, "Worker threads");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return cmd_solve(file, algo, certify, sort_targets, trace, out);
        if (solve_gr1->parsed()) return cmd_solve_gr1(file, algo, certify, trace, out);
        if (gen->parsed()) return cmd_gen(kind, gp, out);
        if (verify->parsed()) return cmd_verify(file, result_file, out);
        return cmd_bench(suite, output, jobs, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace gbgame::cli
