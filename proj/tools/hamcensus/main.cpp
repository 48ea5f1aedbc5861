#include "commands.hpp"

#include <hamcensus/graph_io.hpp>

#include <CLI11.hpp>

#include <iostream>

using namespace hamcensus;
using namespace hamcensus::cli;

namespace
{
    void add_input(CLI::App * cmd, InputArgs & in)
    {
        cmd->add_option("--input", in.file, "graph6 or edge-list file");
        cmd->add_option("--fixture", in.fixture, "fixture name in the fixtures directory");
        cmd->add_option("--graph6", in.graph6, "graph6 string");
    }

    auto command_line(int argc, char ** argv) -> std::string
    {
        std::string s = "hamcensus";
        for (int i = 1; i < argc; ++i)
            s += std::string(" ") + argv[i];
        return s;
    }
}

int main(int argc, char ** argv)
{
    CLI::App app{"Exact hamiltonian cycle censuses and certificates"};
    app.require_subcommand(1);

    Context ctx;
    std::string fixtures_dir = default_fixture_dir().string();
    app.add_flag("--json", ctx.json, "print a JSON run report");
    app.add_option("--workers", ctx.workers, "worker threads (default: HAMCENSUS_WORKERS or all cores)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--fixtures-dir", fixtures_dir, "fixture directory (default: HAMCENSUS_FIXTURES)");

    CountArgs count;
    auto * c = app.add_subcommand("count", "count hamiltonian cycles, paths, longest cycles or 2-factors");
    add_input(c, count.input);
    c->add_option("--forced", count.forced, "edges every cycle must use, u-v[,u-v...]")->delimiter(',');
    c->add_option("--forbidden", count.forbidden, "edges no cycle may use")->delimiter(',');
    c->add_flag("--per-edge", count.per_edge, "also count the cycles through each edge");
    c->add_flag("--list", count.list, "list the cycles (or one path)");
    c->add_option("--limit", count.limit, "list at most this many cycles, smallest first");
    c->add_flag("--longest", count.longest, "circumference and the number of longest cycles");
    c->add_option("--route", count.route, "longest-cycle search")->check(CLI::IsMember({"auto", "subset", "bnb"}));
    c->add_option("--path", count.path, "count hamiltonian s-t paths, given as s-t");
    c->add_option("--length", count.length, "count cycles of this length")->check(CLI::PositiveNumber);
    c->add_flag("--two-factors", count.two_factors, "count 2-factors");

    GenerateArgs gen;
    auto * g = app.add_subcommand("generate", "build graphs: named, regular, fixtures, lemma1, lemma2");
    g->add_option("kind", gen.kind, "generator")
        ->required()
        ->check(CLI::IsMember({"named", "regular", "fixtures", "lemma1", "lemma2"}));
    g->add_option("params", gen.params, "family and parameters, or N K for regular");
    add_input(g, gen.input);
    g->add_option("--cycle", gen.cycle, "4-cycle a,b,c,d for lemma1")->delimiter(',');
    g->add_option("--special", gen.special, "special edges a,c,u,w for lemma2")->delimiter(',');
    g->add_option("--k", gen.expansion, "expansion depth")->check(CLI::PositiveNumber);
    g->add_option("--out", gen.out, "output file (directory for fixtures)");
    g->add_flag("--count", gen.count_only, "print only the number of graphs");

    CertifyArgs cert;
    auto * ce = app.add_subcommand("certify", "check a structural certificate");
    ce->add_option("kind", cert.kind, "certificate")
        ->required()
        ->check(CLI::IsMember({"good-cycle", "lemma2", "smith", "theorem5", "sixteen"}));
    add_input(ce, cert.input);
    ce->add_option("--cycle", cert.cycle, "4-cycle a,b,c,d (default: fixture sidecar)")->delimiter(',');
    ce->add_option("--special", cert.special, "special edges a,c,u,w (default: fixture sidecar)")->delimiter(',');
    ce->add_option("--expected", cert.expected, "hamiltonian cycle count for sixteen");

    ProfileArgs prof;
    auto * p = app.add_subcommand("profile", "special-edge h-profile");
    add_input(p, prof.input);
    p->add_option("--special", prof.special, "special edges a,c,u,w (default: fixture sidecar)")->delimiter(',');

    VerifyArgs ver;
    auto * v = app.add_subcommand("verify-paper", "run the verification suite against the fixtures");
    v->add_option("--level", ver.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));

    for (auto * sub : {c, g, ce, p, v})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    ctx.fixtures = fixtures_dir;
    ctx.command_line = command_line(argc, argv);
    try {
        if (c->parsed())
            return run_count(ctx, count, std::cout);
        if (g->parsed())
            return run_generate(ctx, gen, std::cout);
        if (ce->parsed())
            return run_certify(ctx, cert, std::cout);
        if (p->parsed())
            return run_profile(ctx, prof, std::cout);
        return run_verify(ctx, ver, std::cout);
    }
    catch (const std::exception & e) {
        std::cerr << "hamcensus: " << e.what() << '\n';
        return 2;
    }
    catch (...) {
        std::cerr << "hamcensus: unknown error\n";
        return 2;
    }
}
