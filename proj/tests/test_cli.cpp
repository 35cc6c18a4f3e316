#include "fixtures.hpp"

#include <hypertrans/cli.hpp>

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {
    struct Result
    {
        int code;
        std::string out, err;
    };

    auto run(std::vector<std::string> args) -> Result
    {
        std::ostringstream out, err;
        int code = ht::cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }

    auto data(const std::string & name) -> std::string { return std::string(HT_DATA_DIR) + "/" + name; }

    auto lines(const std::string & s) -> std::vector<std::string>
    {
        std::vector<std::string> out;
        std::istringstream in(s);
        std::string l;
        while (std::getline(in, l))
            out.push_back(l);
        return out;
    }

    auto temp_dir(const std::string & name) -> fs::path
    {
        auto d = fs::temp_directory_path() / ("htrans_test_" + name);
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }
}

TEST_CASE("mt prints the same lines for every algorithm")
{
    auto ref = run({"mt", data("chain.dat"), "--algo", "mmcs"});
    CHECK(ref.code == 0);
    CHECK(lines(ref.out).size() == 15);
    for (std::string a : {"berge", "mtminer", "local"})
        CHECK(run({"mt", data("chain.dat"), "--algo", a}).out == ref.out);
    CHECK(ref.out.back() == '\n');
}

TEST_CASE("mt streaming ends with a count")
{
    auto r = run({"mt", data("hub.dat"), "--stream"});
    CHECK(r.code == 0);
    CHECK(lines(r.out).back() == "# count: 6");
    auto l = run({"mt", data("chain.dat"), "--algo", "local", "--show-parts"});
    CHECK(l.out.find("# part 1 (pivot 2)\n1 2\n2 3 4\n# part 2 (pivot 7)\n") == 0);
}

TEST_CASE("tau, tmm, stats")
{
    CHECK(run({"tau", data("chain.dat")}).out == "2 2 true\n");
    CHECK(run({"tmm", data("hub.dat"), "--mode", "om2d"}).out == "3\n2 4 7\n# coverage: 10\n");
    CHECK(run({"tmm", data("hub.dat"), "--mode", "m2d"}).out == "3\n2 4 7\n# coverage: 10\n");
    auto s = run({"stats", data("hub.dat")});
    CHECK(s.out.find("rank: 3\nantirank: 1\n") != std::string::npos);
    CHECK(s.out.find("tau: 3\n") != std::string::npos);
}

TEST_CASE("irr and expand round-trip")
{
    auto r = run({"irr", data("chain.dat"), "--expand"});
    CHECK(r.code == 0);
    auto l = lines(r.out);
    CHECK(l.back() == "# theta: " + ht::format_double(2.0 / 3.0));
    CHECK(std::find(l.begin(), l.end(), "3: 3 4") != l.end());
    CHECK(std::find(l.begin(), l.end(), "3 5 7") != l.end());

    auto dir = temp_dir("expand");
    std::ofstream(dir / "gn.txt") << "1: 1\n2: 2\n3: 3 4\n5: 5 6\n7: 7\n8: 8 9\n";
    std::ofstream(dir / "mts.txt") << "2 7\n1 3 7\n1 3 8\n2 3 8\n2 5 8\n";
    auto e = run({"expand", (dir / "mts.txt").string(), (dir / "gn.txt").string()});
    CHECK(e.out == run({"mt", data("chain.dat")}).out);
}

TEST_CASE("fd-cover")
{
    auto full = run({"fd-cover", data("rel.csv")});
    std::vector<std::string> fds;
    for (const auto & l : lines(full.out))
        if (l[0] != '#')
            fds.push_back(l);
    CHECK(fds.size() == 9);
    CHECK(std::is_sorted(fds.begin(), fds.end()));

    auto concise = run({"fd-cover", data("rel.csv"), "--concise"});
    auto cl = lines(concise.out);
    std::vector<std::string> head(cl.begin() + 1, cl.begin() + 5);
    CHECK(head == std::vector<std::string>{"A -> D", "A,B -> E", "B,D -> A", "B,E -> D"});

    auto cond = run({"fd-cover", data("rel.csv"), "--conditional"});
    CHECK(cond.out.find("cond A: E -> D [1 2 4 6]\n") != std::string::npos);
}

TEST_CASE("gen")
{
    auto w = run({"gen", "--worst", "3", "3"});
    CHECK(lines(w.out) == std::vector<std::string>{"# worst-case m: 3 block: 3", "1 2 3", "4 5 6", "7 8 9"});

    auto a = run({"gen", "--random", "12", "6", "0.2", "0.4", "9"});
    CHECK(a.code == 0);
    CHECK(lines(a.out)[0] == "# rng: mt19937_64 seed: 9");
    CHECK(a.out == run({"gen", "--random", "12", "6", "0.2", "0.4", "9"}).out);

    setenv("HT_SEED", "9", 1);
    CHECK(run({"gen", "--random", "12", "6", "0.2", "0.4"}).out == a.out);
    unsetenv("HT_SEED");
    CHECK(lines(run({"gen", "--random", "12", "6", "0.2", "0.4"}).out)[0] == "# rng: mt19937_64 seed: 1");

    auto dir = temp_dir("gen");
    CHECK(run({"gen", "--worst", "2", "2", "-o", (dir / "w.dat").string()}).code == 0);
    CHECK(fs::exists(dir / "w.dat"));
}

TEST_CASE("bench")
{
    auto dir = temp_dir("bench");
    std::ofstream(dir / "a.dat") << "1 2\n2 3 4\n3 4 5 6 7\n7 8 9\n";
    std::ofstream(dir / "b.dat") << "1 2 3\n4 5 6\n";
    auto r = run({"bench", "--dir", dir.string(), "--algos", "mmcs,berge", "--irr"});
    CHECK(r.code == 0);
    auto l = lines(r.out);
    REQUIRE(l.size() == 5);
    CHECK(l[0] == "id,n,m,backend,mt_count,irr_count,theta,tau,ms");
    CHECK(l[1].rfind("a,9,4,mmcs,15,5,", 0) == 0);

    auto empty = temp_dir("bench_empty");
    CHECK(run({"bench", "--dir", empty.string()}).out == "id,n,m,backend,mt_count,irr_count,theta,tau,ms\n");
}

TEST_CASE("exit codes")
{
    CHECK(run({}).code == 1);
    CHECK(run({"nope"}).code == 1);
    CHECK(run({"mt", data("chain.dat"), "--bogus"}).code == 1);
    CHECK(run({"mt", data("chain.dat"), "--algo", "dl"}).code == 1);
    CHECK(run({"gen"}).code == 1);
    CHECK(run({"gen", "--random", "1", "2", "x", "0.5"}).code == 1);
    CHECK(run({"mt", "/nonexistent/file.dat"}).code == 2);

    auto dir = temp_dir("bad");
    std::ofstream(dir / "bad.dat") << "1 2\nthree\n";
    auto bad = run({"mt", (dir / "bad.dat").string()});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 2") != std::string::npos);
}

TEST_CASE("non-simple input is reduced with a notice")
{
    auto dir = temp_dir("reduce");
    std::ofstream(dir / "n.dat") << "1 2\n1 2 3\n";
    auto r = run({"mt", (dir / "n.dat").string()});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n2\n");
    CHECK(r.err.find("reduced from 2 to 1") != std::string::npos);
}
