#include "commands.hpp"

#include <hamcensus/canonical.hpp>
#include <hamcensus/certify.hpp>
#include <hamcensus/graph_io.hpp>
#include <hamcensus/structure.hpp>
#include <hamcensus/verify.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace hamcensus::cli
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        struct Loaded
        {
            Graph graph;
            std::optional<Fixture> fixture;
            std::string source;
        };

        auto load_input(const Context & ctx, const InputArgs & in) -> Loaded
        {
            int given = ! in.file.empty() + ! in.fixture.empty() + ! in.graph6.empty();
            if (given != 1)
                throw UsageError("exactly one of --input, --fixture, --graph6 is required");
            if (! in.fixture.empty()) {
                auto f = load_fixture(ctx.fixtures, in.fixture);
                auto g = f.graph;
                return {g, std::move(f), "fixture:" + in.fixture};
            }
            if (! in.graph6.empty())
                return {from_graph6(in.graph6), std::nullopt, "graph6"};
            if (! std::filesystem::exists(in.file))
                throw UsageError("cannot open " + in.file);
            return {read_graph_file(in.file), std::nullopt, "file:" + in.file};
        }

        auto search(const Context & ctx) -> SearchOptions
        {
            SearchOptions o;
            o.workers = ctx.workers;
            return o;
        }

        auto edges_of(const std::vector<std::string> & texts) -> std::vector<Edge>
        {
            std::vector<Edge> out;
            for (auto & t : texts)
                out.push_back(parse_edge(t));
            return out;
        }

        auto joined(const std::vector<int> & vs, const char * sep = " ") -> std::string
        {
            std::string s;
            for (std::size_t i = 0; i < vs.size(); ++i)
                s += (i ? sep : "") + std::to_string(vs[i]);
            return s;
        }

        auto four_cycle_arg(const std::vector<int> & vs, const Loaded & in) -> FourCycle
        {
            if (vs.empty()) {
                if (! in.fixture)
                    throw UsageError("--cycle a,b,c,d is required for non-fixture input");
                return four_cycle_of(*in.fixture);
            }
            if (vs.size() != 4)
                throw UsageError("--cycle takes four vertices a,b,c,d");
            return {vs[0], vs[1], vs[2], vs[3]};
        }

        auto special_arg(const std::vector<int> & vs, const Loaded & in) -> SpecialEdges
        {
            if (vs.empty()) {
                if (! in.fixture)
                    throw UsageError("--special a,c,u,w is required for non-fixture input");
                return special_edges_of(*in.fixture);
            }
            if (vs.size() != 4)
                throw UsageError("--special takes four vertices a,c,u,w");
            return {vs[0], vs[1], vs[2], vs[3]};
        }

        /// Prints either the text body or the RunReport.
        class Report
        {
        public:
            Report(const Context & ctx, std::ostream & out) : ctx_(ctx), out_(out), start_(Clock::now()) {}

            void input(const Loaded & in)
            {
                auto g6 = to_graph6(in.graph);
                input_ = Json{{"source", in.source}, {"graph6", g6}, {"order", in.graph.order()},
                    {"size", in.graph.size()}, {"digest", digest(g6)}};
            }

            Json results = Json::object();
            std::ostringstream text;

            auto finish(int code) -> int
            {
                if (! ctx_.json) {
                    out_ << text.str();
                    return code;
                }
                double wall = std::chrono::duration<double>(Clock::now() - start_).count();
                Json j{{"command", ctx_.command_line}, {"input", input_}, {"results", results},
                    {"exit_code", code}, {"workers", resolve_workers(ctx_.workers)}, {"wall_time", wall}};
                out_ << j.dump(2) << '\n';
                return code;
            }

        private:
            const Context & ctx_;
            std::ostream & out_;
            Clock::time_point start_;
            Json input_ = nullptr;
        };

        auto verdict_exit(Verdict v) -> int { return v == Verdict::fail ? 1 : 0; }

        void describe(std::ostream & text, const Certificate & cert)
        {
            text << cert.name << ": " << to_string(cert.verdict);
            if (! cert.detail.empty())
                text << " (" << cert.detail << ")";
            text << '\n';
            for (auto & c : cert.conditions) {
                text << "  " << c.id << ": " << to_string(c.verdict);
                if (! c.detail.empty())
                    text << " - " << c.detail;
                text << '\n';
                if (c.witness)
                    for (auto & part : c.witness->parts)
                        text << "    " << c.witness->kind << ": " << joined(part) << '\n';
            }
        }

        auto route_of(const std::string & name) -> LongestCycleRoute
        {
            if (name == "subset")
                return LongestCycleRoute::subset_exclusion;
            if (name == "bnb")
                return LongestCycleRoute::branch_and_bound;
            return LongestCycleRoute::automatic;
        }

        void write_graph(const GenerateArgs & args, Report & rep, const std::vector<Graph> & graphs)
        {
            Json list = Json::array();
            for (auto & g : graphs)
                list.push_back(to_graph6(g));
            rep.results["count"] = graphs.size();
            if (! args.count_only)
                rep.results["graphs"] = list;
            if (args.count_only)
                rep.text << graphs.size() << '\n';
            else if (! args.out.empty()) {
                std::ofstream f(args.out);
                for (auto & g : graphs)
                    f << to_graph6(g) << '\n';
                if (! f)
                    throw UsageError("cannot write " + args.out);
                rep.results["out"] = args.out;
                rep.text << "wrote " << graphs.size() << " graph(s) to " << args.out << '\n';
            }
            else
                for (auto & g : graphs)
                    rep.text << to_graph6(g) << '\n';
        }
    }

    auto run_count(const Context & ctx, const CountArgs & args, std::ostream & out) -> int
    {
        Report rep(ctx, out);
        auto in = load_input(ctx, args.input);
        rep.input(in);
        auto & g = in.graph;
        auto opts = search(ctx);
        EdgeConstraint c{edges_of(args.forced), edges_of(args.forbidden)};
        validate(g, c);
        int modes = args.longest + ! args.path.empty() + args.length.has_value() + args.two_factors;
        if (modes > 1)
            throw UsageError("--longest, --path, --length and --two-factors are exclusive");
        bool constrained = ! c.forced.empty() || ! c.forbidden.empty();
        if (constrained && (args.longest || args.length || args.two_factors))
            throw UsageError("edge constraints apply to hamiltonian cycle and path counts only");

        if (args.longest) {
            auto r = longest_cycles(g, opts, route_of(args.route));
            rep.results["longest"] = to_json(r);
            rep.text << "circumference " << r.circumference << ", " << to_decimal(r.count) << " longest cycle(s)\n";
            rep.text << "witness: " << joined(r.witness) << '\n';
            return rep.finish(0);
        }
        if (args.length) {
            if (args.list) {
                auto cycles = enumerate_cycles_of_length(g, *args.length, opts);
                if (args.limit && cycles.size() > *args.limit)
                    cycles.resize(*args.limit);
                rep.results["cycles"] = cycles;
                for (auto & cy : cycles)
                    rep.text << "cycle: " << joined(cy) << '\n';
            }
            auto n = count_cycles_of_length(g, *args.length, opts);
            rep.results["length"] = *args.length;
            rep.results["count"] = to_decimal(n);
            rep.text << to_decimal(n) << '\n';
            return rep.finish(0);
        }
        if (args.two_factors) {
            auto n = count_two_factors(g);
            rep.results["two_factors"] = to_decimal(n);
            rep.text << to_decimal(n) << '\n';
            return rep.finish(0);
        }
        if (! args.path.empty()) {
            auto e = parse_edge(args.path);
            if (e.v >= g.order())
                throw UsageError("path endpoint out of range");
            auto n = count_hamiltonian_paths(g, e.u, e.v, c, opts);
            rep.results["path"] = Json{{"s", e.u}, {"t", e.v}, {"count", to_decimal(n)}, {"constraint", to_json(c)}};
            rep.text << to_decimal(n) << '\n';
            if (args.list) {
                auto p = find_hamiltonian_path(g, e.u, e.v, c);
                rep.results["path"]["witness"] = p ? Json(*p) : Json(nullptr);
                if (p)
                    rep.text << "path: " << joined(*p) << '\n';
            }
            return rep.finish(0);
        }

        CycleRequest req{args.per_edge, args.list, args.limit};
        auto r = hamiltonian_cycle_report(g, c, req, opts);
        rep.results = to_json(g, c, r);
        rep.text << to_decimal(r.count) << '\n';
        if (r.per_edge)
            for (auto & [e, n] : *r.per_edge)
                rep.text << "edge " << to_string(e) << ": " << to_decimal(n) << '\n';
        if (r.cycles) {
            for (auto & cy : *r.cycles)
                rep.text << "cycle: " << joined(cy) << '\n';
            if (r.truncated)
                rep.text << "(list truncated)\n";
        }
        return rep.finish(0);
    }

    auto run_generate(const Context & ctx, const GenerateArgs & args, std::ostream & out) -> int
    {
        Report rep(ctx, out);
        auto & p = args.params;
        rep.results["kind"] = args.kind;
        if (args.kind == "named") {
            if (p.empty())
                throw UsageError("generate named FAMILY [PARAMS...]");
            std::vector<int> nums;
            for (std::size_t i = 1; i < p.size(); ++i)
                nums.push_back(std::stoi(p[i]));
            write_graph(args, rep, {named_generator(p[0], nums)});
        }
        else if (args.kind == "regular") {
            if (p.size() != 2)
                throw UsageError("generate regular N K");
            write_graph(args, rep, generate_regular_graphs(std::stoi(p[0]), std::stoi(p[1])));
        }
        else if (args.kind == "fixtures") {
            std::filesystem::path dir = args.out.empty() ? ctx.fixtures : std::filesystem::path(args.out);
            Json names = Json::array();
            for (auto & f : build_fixtures(search(ctx))) {
                write_fixture(dir, f);
                names.push_back(f.name);
                rep.text << "wrote " << (dir / (f.name + ".g6")).string() << '\n';
            }
            rep.results["dir"] = dir.string();
            rep.results["fixtures"] = names;
        }
        else if (args.kind == "lemma1") {
            auto in = load_input(ctx, args.input);
            rep.input(in);
            write_graph(args, rep, {lemma1_expand(in.graph, four_cycle_arg(args.cycle, in), args.expansion)});
        }
        else if (args.kind == "lemma2") {
            auto in = load_input(ctx, args.input);
            rep.input(in);
            auto s = special_arg(args.special, in);
            int k = in.graph.degree(s.a);
            write_graph(args, rep, {lemma2_expand(in.graph, GadgetSpec{s, k, args.expansion})});
        }
        else
            throw UsageError("unknown generator '" + args.kind + "'");
        return rep.finish(0);
    }

    auto run_certify(const Context & ctx, const CertifyArgs & args, std::ostream & out) -> int
    {
        Report rep(ctx, out);
        auto in = load_input(ctx, args.input);
        rep.input(in);
        auto opts = search(ctx);
        Certificate cert;
        if (args.kind == "good-cycle")
            cert = good_cycle_certificate(in.graph, four_cycle_arg(args.cycle, in), opts);
        else if (args.kind == "lemma2")
            cert = lemma2_hypothesis(in.graph, special_arg(args.special, in), opts);
        else if (args.kind == "smith")
            cert = smith_parity(in.graph, opts);
        else if (args.kind == "theorem5")
            cert = theorem5_audit(in.graph, opts);
        else if (args.kind == "sixteen")
            cert = sixteen_cycle_certificate(in.graph, parse_count(args.expected), opts);
        else
            throw UsageError("unknown certificate '" + args.kind + "'");
        rep.results = to_json(cert);
        describe(rep.text, cert);
        return rep.finish(verdict_exit(cert.verdict));
    }

    auto run_profile(const Context & ctx, const ProfileArgs & args, std::ostream & out) -> int
    {
        Report rep(ctx, out);
        auto in = load_input(ctx, args.input);
        rep.input(in);
        auto s = special_arg(args.special, in);
        auto p = special_edge_profile(in.graph, s, search(ctx));
        rep.results["special_edges"] = Json{{"ac", to_string(s.ac())}, {"uw", to_string(s.uw())}};
        rep.results["profile"] = to_json(p);
        for (auto & [k, v] : rep.results["profile"].items())
            rep.text << k << " = " << v.get<std::string>() << '\n';
        return rep.finish(0);
    }

    auto run_verify(const Context & ctx, const VerifyArgs & args, std::ostream & out) -> int
    {
        Report rep(ctx, out);
        VerifyOptions vo;
        vo.level = args.level == "full" ? VerifyLevel::full : VerifyLevel::quick;
        vo.fixtures = ctx.fixtures;
        vo.search = search(ctx);
        if (! ctx.json)
            vo.on_result = [&out](const CriterionResult & r) {
                out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << " " << r.title << " ("
                    << std::fixed << std::setprecision(2) << r.seconds << " s): " << r.detail << std::endl;
            };
        auto results = verify_paper(vo);
        Json list = Json::array();
        int failed = 0;
        for (auto & r : results) {
            failed += ! r.passed;
            list.push_back(Json{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail},
                {"budget_seconds", r.budget_seconds}});
        }
        rep.results["level"] = args.level;
        rep.results["criteria"] = list;
        rep.results["failed"] = failed;
        rep.text << (failed ? std::to_string(failed) + " criterion(s) failed" : std::string("all criteria passed"))
                 << '\n';
        return rep.finish(failed ? 1 : 0);
    }
}
