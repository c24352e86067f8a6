#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "discs.hpp"
#include "simploc/generators.hpp"
#include "simploc/io.hpp"
#include "surgery_cases.hpp"

using namespace simploc;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
    Json json() const { return parse_json(out); }
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "simploc");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct Workdir {
    fs::path dir;
    Workdir()
    {
        dir = fs::temp_directory_path() / ("simploc_cli_" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Workdir() { fs::remove_all(dir); }
    std::string put(const std::string& name, const Json& j) const
    {
        const auto p = (dir / name).string();
        write_text_file(p, j.dump(2));
        return p;
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

// Drops the fields that vary between runs.
Json normalized(Json j)
{
    j.erase("timings_ms");
    j.erase("inputs");
    return j;
}

Json golden(const std::string& name)
{
    return read_json_file(std::string(SIMPLOC_GOLDEN_DIR) + "/" + name);
}

} // namespace

TEST_CASE("check reports an undominated dwheel")
{
    Workdir w;
    const auto f = w.put("dwheel55.json", complex_to_json(dwheel(5, 5, true)));
    const Run r = run({"check", f, "--m-located", "7"});
    CHECK(r.code == 1);
    const Json j = r.json();
    CHECK(j["verdict"] == false);
    const Json& m = j["checks"]["m_located"];
    CHECK(m["verdict"] == false);
    REQUIRE(m["witnesses"].size() >= 1);
    CHECK(m["witnesses"][0]["boundary"].size() == 6);
    CHECK(j["inputs"][0]["sha256"].get<std::string>().size() == 64);
    CHECK(normalized(j) == golden("check_dwheel55_m7.json"));

    const auto c = w.put("cone.json", complex_to_json(cone(dwheel(5, 5, true))));
    CHECK(run({"check", c, "--m-located", "7"}).code == 0);
}

TEST_CASE("check on a disc file uses its skeleton")
{
    Workdir w;
    const auto f = w.put("hex2.json", disc_to_json(hex_disc(2)));
    const Run r = run({"check", f, "--lws", "--m-located", "7"});
    CHECK(r.code == 0);
    CHECK(r.json()["checks"]["lws"]["verdict"] == true);

    const Run all = run({"check", f});
    CHECK(all.code == 0);
    for (const char* name : {"k_large", "locally_k_large", "m_located", "w5hat", "lws"})
        CHECK(all.json()["checks"].contains(name));
}

TEST_CASE("check finds short cycles")
{
    Workdir w;
    const auto f = w.put("c4.json", parse_json(R"({"vertices": [1,2,3,4], "edges": [[1,2],[2,3],[3,4],[4,1]]})"));
    const Run r = run({"check", f, "--k-large", "5"});
    CHECK(r.code == 1);
    CHECK(r.json()["checks"]["k_large"]["witness"].size() == 4);
}

TEST_CASE("bad input exits 2")
{
    Workdir w;
    const auto dup = w.put("dup.json", parse_json(R"({"vertices": [1,2], "edges": [[1,2],[2,1]]})"));
    const Run r = run({"check", dup});
    CHECK(r.code == 2);
    CHECK(r.json().contains("error"));
    CHECK_FALSE(r.err.empty());

    const auto broken = w.path("broken.json");
    write_text_file(broken, "{\"vertices\": [1,\n");
    CHECK(run({"check", broken}).code == 2);
    CHECK(run({"check", w.path("missing.json")}).code == 2);
    CHECK(run({"check", dup, "--format", "xml"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("reduce")
{
    Workdir w;
    SUBCASE("an embedded disc is already reduced")
    {
        const auto f = w.put("d.json", diagram_to_json(fixtures::identity_diagram(hex_disc(2))));
        const Run r = run({"reduce", f});
        CHECK(r.code == 0);
        CHECK(r.json()["trace"].empty());
        CHECK(r.json()["area_before"] == 24);
        CHECK(r.json()["area_after"] == 24);
    }
    SUBCASE("a folded 4-cycle")
    {
        const SimplicialDisc D = hex_disc(2);
        VertexId center = -1;
        for (VertexId v : D.interior_vertices())
            if (std::all_of(D.rotation(v).begin(), D.rotation(v).end(), [&](VertexId x) { return D.is_interior(x); }))
                center = v;
        const auto ring = D.rotation(center);
        const auto d = cases::quotient_diagram(D, ring[0], ring[2]);
        const auto f = w.put("q.json", diagram_to_json(d));
        const auto out = w.path("reduced.json");
        const Run r = run({"reduce", f, "--out", out});
        CHECK(r.code == 0);
        CHECK(r.json()["trace"][0]["kind"] == "FOUR_CYCLE");
        CHECK(r.json()["area_after"].get<int>() < 24);
        const DiscDiagram back = diagram_from_json(read_json_file(out));
        CHECK(area(back) == r.json()["area_after"].get<int>());
    }
    SUBCASE("an explicit target")
    {
        const auto d = fixtures::identity_diagram(fixtures::wheel_disc(5));
        const auto f = w.put("bare.json", diagram_to_json(d, false));
        CHECK(run({"reduce", f}).code == 2);
        const auto t = w.put("target.json", complex_to_json(*d.target));
        CHECK(run({"reduce", f, "--target", t}).code == 0);
    }
}

TEST_CASE("minimize")
{
    Workdir w;
    const auto f = w.put("w5.json", complex_to_json(wheel(5)));
    const Run r = run({"minimize", f, "--loop", "v1,v2,v3,v4,v5"});
    CHECK(r.code == 0);
    CHECK(r.json()["result"]["status"] == "FOUND");
    CHECK(r.json()["result"]["minimal_area"] == 5);
    CHECK(r.json()["result"]["diagrams"].size() == 1);

    CHECK(run({"minimize", f, "--loop", "v1,v2,v3,v4,v5", "--cap", "3"}).code == 1);
    CHECK(run({"minimize", f, "--loop", "v1,v3,v5"}).code == 2);
    CHECK(run({"minimize", f, "--loop", "v1,v2,zz"}).code == 2);
    CHECK(run({"minimize", f, "--loop", "v1,v2,v3,v4,v5", "--cap", "40"}).code == 2);
}

TEST_CASE("metrize")
{
    Workdir w;
    const auto hex = w.put("hex.json", disc_to_json(hex_disc(2)));
    const auto svg = w.path("hex.svg");
    const Run r = run({"metrize", hex, "--svg", svg});
    CHECK(r.code == 0);
    CHECK(r.json()["cat0"] == true);
    CHECK(fs::file_size(svg) > 100);

    const auto two = w.put("two.json", disc_to_json(fixtures::two_five_wheels()));
    const Run u = run({"metrize", two});
    CHECK(u.code == 1);
    CHECK(u.json()["error"]["kind"] == "METRIC_UNDEFINED");
    CHECK(u.json()["error"]["centers"].size() == 2);
}

TEST_CASE("bound")
{
    const Run r = run({"bound", "10"});
    CHECK(r.code == 0);
    CHECK(r.json()["triangles"] == 31);
    CHECK(normalized(r.json()) == golden("bound_10.json"));
    CHECK(run({"bound", "2"}).code == 2);
    CHECK(run({"bound", "ten"}).code == 2);
}

TEST_CASE("generate")
{
    Workdir w;
    const Run a = run({"generate", "random-disc", "--size", "20", "--seed", "9"});
    const Run b = run({"generate", "random-disc", "--size", "20", "--seed", "9"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(check_disc_7_located(disc_from_json(a.json())).verdict);
    CHECK(run({"generate", "random-disc"}).code == 2);

    const auto out = w.path("cone.json");
    const auto rep = w.path("rep.json");
    const Run c = run({"generate", "cone", "--base", "dwheel", "--out", out, "--report", rep});
    CHECK(c.code == 0);
    CHECK(c.out.empty());
    CHECK(complex_from_json(read_json_file(out)).size() == 9);
    CHECK(read_json_file(rep)["output"]["vertices"] == 9);
    CHECK(run({"generate", "torus"}).code == 2);
}
