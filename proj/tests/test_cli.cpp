#include <catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ribbon/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(RIBBON_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (const auto n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return std::string(RIBBON_FIXTURE_DIR) + "/" + name; }

fs::path scratch()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("ribbon_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string put(const std::string& name, const std::string& text)
{
    const auto p = scratch() / name;
    std::ofstream(p) << text;
    return p.string();
}

} // namespace

TEST_CASE("invariants of the interlaced bouquet", "[cli]")
{
    const auto r = run("invariants " + fixture("B2_INT.srs"));
    CHECK(r.code == 0);
    CHECK(r.out == "v=1 e=2 k=1 p=1 orientable=yes euler-genus=2 genus=1\n");
}

TEST_CASE("partial dual then invariants", "[cli]")
{
    const auto out = (scratch() / "pd.srs").string();
    CHECK(run("partial-dual " + fixture("LOOP_U.srs") + " --edges e -o " + out).code == 0);
    const auto r = run("invariants " + out);
    CHECK(r.code == 0);
    CHECK(r.out.rfind("v=2 e=1 k=1 p=1", 0) == 0);
}

TEST_CASE("dual and core write their formats", "[cli]")
{
    const auto d = run("dual " + fixture("THETA.srs"));
    CHECK(d.code == 0);
    CHECK(ribbon::parse_srs(d.out).num_vertices() == 3);
    const auto c = run("core " + fixture("THETA.srs"));
    CHECK(c.code == 0);
    CHECK(c.out == "vertex u\nvertex w\nedge a: u w\nedge b: u w\nedge c: u w\n");
}

TEST_CASE("check-theorem with the empty-subset identity certificate", "[cli]")
{
    const auto cert = put("id.bij", "subset:\nmap a a\nmap b b\nmap c c\n");
    const auto r = run("check-theorem " + fixture("theta.mg") + " " + fixture("theta.mg") + " " + cert);
    CHECK(r.code == 0);
    CHECK(r.out == "ok\n");
}

TEST_CASE("violations exit with 1", "[cli]")
{
    const auto c4 = put("c4.mg", "vertex a\nvertex b\nvertex c\nvertex d\nedge p: a b\nedge q: b c\nedge r: c d\nedge s: d a\n");
    const auto id = put("c4.bij", "map p p\nmap q q\nmap r r\nmap s s\n");
    CHECK(run("check-edmonds " + c4 + " " + c4 + " " + id).code == 1);
    CHECK(run("equiv " + fixture("LOOP_U.srs") + " " + fixture("LOOP_T.srs") + " --labeled").code == 1);
    CHECK(run("equiv " + fixture("THETA.srs") + " " + fixture("THETA.srs")).code == 0);
}

TEST_CASE("find-certificate writes a checkable bij", "[cli]")
{
    const auto out = (scratch() / "found.bij").string();
    CHECK(run("find-certificate " + fixture("bouquet2.mg") + " " + fixture("dipole2.mg") + " -o " + out).code == 0);
    const auto cert = ribbon::parse_bij(ribbon::read_file(out));
    REQUIRE(cert.subset.has_value());
    CHECK(cert.subset->size() == 1);
    CHECK(run("check-theorem " + fixture("bouquet2.mg") + " " + fixture("dipole2.mg") + " " + out).code == 0);

    const auto path = put("p3.mg", "vertex x\nvertex y\nvertex z\nedge p: x y\nedge q: y z\n");
    CHECK(run("find-certificate " + fixture("dipole2.mg") + " " + path).code == 1);
    CHECK(run("find-certificate " + fixture("theta.mg") + " " + fixture("theta.mg") + " --max-edges 2").code == 4);
}

TEST_CASE("enumerate streams parseable blocks", "[cli]")
{
    const auto r = run("enumerate " + fixture("theta.mg"));
    CHECK(r.code == 0);
    std::size_t blocks = 0;
    for (std::size_t at = r.out.find("# structure"); at != std::string::npos; at = r.out.find("# structure", at + 1))
        ++blocks;
    CHECK(blocks == 32);
    CHECK(run("enumerate " + fixture("theta.mg") + " --dedup").out.find("# structure 8\n") != std::string::npos);
}

TEST_CASE("error exit codes", "[cli]")
{
    CHECK(run("invariants " + put("bad.srs", "vertex v1 e.0\n")).code == 2);
    CHECK(run("invariants " + put("dup.srs", "vertex v1: e.0 e.0\nedge e twist=0\n")).code == 3);
    CHECK(run("invariants " + fixture("B2_INT.srs") + " --bogus").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("invariants " + put("noext", "vertex v1:\n")).code == 2);
    CHECK(run("--format srs invariants " + put("noext2", "vertex v1:\n")).code == 0);
    CHECK(run("invariants " + put("loop.txt", "cycle c: e- e-\n") + " --format arp").out.rfind("v=1 e=1 k=1 p=2", 0) == 0);
}

TEST_CASE("cross-validate and selftest", "[cli]")
{
    const auto r = run("cross-validate --max-v 2 --max-e 2");
    CHECK(r.code == 0);
    CHECK(r.out.find("AGREE no") == std::string::npos);
    CHECK(r.out.find("PAIR G0-G0 THEOREM yes ORACLE yes AGREE yes") != std::string::npos);
    CHECK(run("selftest").code == 0);
}
