#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "mutvis/generators.hpp"
#include "mutvis/graph_io.hpp"

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string &args) {
    std::string cmd = std::string(MUTVIS_CLI) + " " + args + " 2>&1";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

} // namespace

TEST_CASE("compute examples") {
    auto r = run("compute --graph theta:2,2,4 --invariant mut --stable");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"value\": 1") != std::string::npos);
    CHECK(run("compute --graph 'cp(complete:3,complete:5)' --format csv --stable").out.find(",mut,5,") !=
          std::string::npos);
    CHECK(run("compute --graph 'cp(cycle:4,complete:3)' --format csv --stable").out.find(",mut,3,") !=
          std::string::npos);
    CHECK(run("compute --graph 'cp(cycle:6,complete:4)' --format csv --stable").out.find(",mut,0,") !=
          std::string::npos);
    auto w = run("compute --graph 'cp(complete:2,complete:3)' --witness --format text --stable");
    CHECK(w.out.find("coords:") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run("compute --graph foo:3").code == 2);
    CHECK(run("compute --graph cycle:2").code == 2);
    CHECK(run("compute").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("compute --graph path:3 --invariant nu").code == 2);
    CHECK(run("verify thm:unknown").code == 2);
    auto capped = run("compute --graph gm:5 --cap-bp 4");
    CHECK(capped.code == 1);
    CHECK(capped.out.find("--cap-bp") != std::string::npos);
    auto mu_cap = run("compute --graph path:25 --invariant mu");
    CHECK(mu_cap.code == 1);
    CHECK(mu_cap.out.find("--cap-n") != std::string::npos);
    CHECK(run("compute --graph path:25 --invariant mu --cap-n 30").code == 0);
    CHECK(run("verify cor:theta --max-n 8").code == 0);
    CHECK(run("export --graph path:3 -o /nonexistent-dir/x.txt").code == 1);
}

TEST_CASE("reports are deterministic") {
    for (const char *args : {"compute --graph 'cp(star:3,gencomplete:2,2)' --witness --stable",
                             "compute --graph gm:4 --witness --stable --threads 4",
                             "verify thm:cp-bounds --count 5 --stable --format csv"}) {
        auto a = run(args);
        auto b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    auto one = run("compute --graph gm:4 --witness --stable --threads 1");
    auto four = run("compute --graph gm:4 --witness --stable --threads 4");
    CHECK(one.out == four.out);
}

TEST_CASE("export round-trips") {
    auto dir = std::filesystem::temp_directory_path() / "mutvis_cli_test";
    std::filesystem::create_directories(dir);
    auto file = (dir / "gm5.txt").string();
    CHECK(run("export --graph gm:5 -o " + file).code == 0);
    CHECK(mutvis::parse_graph_file(file) == mutvis::gen::g_m(5));
    auto info = run("info --graph @" + file);
    CHECK(info.code == 0);
    CHECK(info.out.find("order:      18") != std::string::npos);

    auto fig1 = (dir / "fig1.txt").string();
    CHECK(run("export --graph fig1 -o " + fig1).code == 0);
    auto g = mutvis::parse_graph_file(fig1);
    CHECK(g.order() == 12);
    CHECK(g.edge_count() == 15);
    auto sq = run("export --graph 'cp(complete:2,complete:2)'");
    CHECK(sq.out.find("# mutvis graph cp(complete:2,complete:2)") == 0);
    auto c = run("compute --graph @" + fig1 + " --invariant bp --witness --stable --format csv");
    CHECK(c.out.find(",bp,2,formula,5 6") != std::string::npos);
    std::filesystem::remove_all(dir);
}

TEST_CASE("info lists suites") {
    auto r = run("info --suites");
    CHECK(r.code == 0);
    CHECK(r.out.find("thm:cp-tree-by-graphs") != std::string::npos);
}
