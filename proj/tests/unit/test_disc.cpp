#include <doctest.h>

#include <algorithm>

#include "discs.hpp"
#include "simploc/disc.hpp"
#include "simploc/error.hpp"
#include "simploc/generators.hpp"

using namespace simploc;

TEST_CASE("valid discs")
{
    const SimplicialDisc T = SimplicialDisc::build({{0, 1, 2}}, {0, 1, 2});
    CHECK(T.triangle_count() == 1);
    CHECK(T.interior_vertices().empty());

    const SimplicialDisc W = fixtures::wheel_disc(5);
    CHECK(W.vertex_count() == 6);
    CHECK(W.edge_count() == 10);
    CHECK(W.is_interior(0));
    CHECK(W.degree(0) == 5);
    CHECK(W.is_flag());
    const auto star = W.wheel_at(0);
    CHECK(star.size() == 5);
    CHECK(star.is_full);
    CHECK_THROWS_AS(W.wheel_at(1), InputError);

    // Rotation lists neighbors cyclically.
    const auto& rot = W.rotation(0);
    for (std::size_t i = 0; i < rot.size(); ++i)
        CHECK(W.adjacent(rot[i], rot[(i + 1) % rot.size()]));
}

TEST_CASE("invalid discs are rejected with a diagnostic")
{
    // Bowtie: two triangles meeting in a vertex.
    CHECK_THROWS_AS(SimplicialDisc::build({{0, 1, 2}, {0, 3, 4}}, {0, 1, 2, 0, 3, 4}), InvalidDisc);
    // Boundary in the wrong order.
    const auto W = fixtures::wheel_disc(5);
    CHECK_THROWS_AS(SimplicialDisc::build(W.triangles(), {1, 2, 3, 5, 4}), InvalidDisc);
    // Edge in three triangles.
    CHECK_FALSE(SimplicialDisc::diagnose({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}, {0, 2, 1, 3}).empty());
    // Closed surface (octahedron) has no boundary.
    std::vector<Triangle> oct;
    for (VertexId top : {0, 5})
        for (int i = 0; i < 4; ++i)
            oct.push_back({top, 1 + i, 1 + (i + 1) % 4});
    CHECK_FALSE(SimplicialDisc::diagnose(oct, {1, 2, 3}).empty());
    // Unused vertex id.
    CHECK_FALSE(SimplicialDisc::diagnose({{0, 1, 3}}, {0, 1, 3}).empty());
    // Repeated vertex in a triangle.
    CHECK_FALSE(SimplicialDisc::diagnose({{0, 0, 1}}, {0, 1}).empty());
    // Duplicate triangle.
    CHECK_FALSE(SimplicialDisc::diagnose({{0, 1, 2}, {2, 1, 0}}, {0, 1, 2}).empty());
    // Flag validation: a hollow 3-cycle of the skeleton.
    const auto A = SimplicialDisc::build({{0, 1, 3}, {1, 2, 3}, {2, 0, 3}}, {0, 1, 2});
    CHECK_FALSE(A.is_flag());
    CHECK_THROWS_AS(SimplicialDisc::build(A.triangles(), {0, 1, 2}, {.flag = true}), InvalidDisc);
}

TEST_CASE("Euler relation: triangles = b + 2i - 2")
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const SimplicialDisc D = random_flag_disc(5 + static_cast<int>(seed % 40), seed);
        const int b = D.boundary().length();
        const int i = static_cast<int>(D.interior_vertices().size());
        CHECK(D.triangle_count() == b + 2 * i - 2);
        CHECK(D.is_flag());
    }
    const SimplicialDisc H = hex_disc(3);
    CHECK(H.triangle_count() == 18 + 2 * 19 - 2);
}

TEST_CASE("regions bounded by cycles")
{
    const SimplicialDisc H = hex_disc(2);
    // Center of the radius-2 ball: the only vertex whose neighbors are all interior.
    VertexId center = -1;
    for (VertexId v : H.interior_vertices())
        if (std::all_of(H.rotation(v).begin(), H.rotation(v).end(), [&](VertexId w) { return H.is_interior(w); }))
            center = v;
    REQUIRE(center >= 0);
    const Cycle rim{H.rotation(center)};
    const auto region = region_bounded_by(H, rim);
    CHECK(region.size() == 6);
    const Subdisc S = subdisc_bounded_by(H, rim);
    CHECK(S.disc.vertex_count() == 7);
    CHECK(S.disc.triangle_count() == 6);
    CHECK(region_bounded_by(H, H.boundary()).size() == 24);

    const Cycle not_a_cycle{{center, H.rotation(center)[0], H.rotation(center)[3]}};
    CHECK_THROWS_AS(region_bounded_by(H, not_a_cycle), InputError);
}

TEST_CASE("degree sums and disc 7-location")
{
    const auto D = fixtures::two_five_wheels();
    CHECK(D.is_flag());
    const auto bad = check_degree_sums(D);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == Edge{0, 1});
    const auto report = check_disc_7_located(D);
    CHECK_FALSE(report.verdict);
    REQUIRE(report.failures().size() >= 1);
    CHECK(report.failures()[0].planar);

    const auto ok = fixtures::seven_next_to_five();
    CHECK(check_degree_sums(ok).empty());
    CHECK(check_disc_7_located(ok).verdict);

    const auto hollow = SimplicialDisc::build({{0, 1, 3}, {1, 2, 3}, {2, 0, 3}}, {0, 1, 2});
    CHECK_THROWS_AS(check_disc_7_located(hollow), InvalidDisc);
}

TEST_CASE("disc 7-location is the degree-sum condition")
{
    // For flag discs the full wheels are the interior stars, so a short
    // dwheel is exactly an interior edge with degree sum <= 11.
    int located = 0, not_located = 0;
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        const SimplicialDisc D = random_flag_disc(10 + static_cast<int>(seed % 30), seed);
        const bool by_degrees = check_degree_sums(D).empty();
        CHECK(check_disc_7_located(D).verdict == by_degrees);
        (by_degrees ? located : not_located)++;
    }
    CHECK(located > 0);
    CHECK(not_located > 0);
}

TEST_CASE("diagram validation")
{
    const auto W = fixtures::wheel_disc(5);
    auto d = fixtures::identity_diagram(W);
    CHECK(diagnose_diagram(d) == "");
    CHECK(area(d) == 5);

    SUBCASE("reflected and rotated loops are accepted")
    {
        auto loop = d.target_loop.vertices;
        std::reverse(loop.begin(), loop.end());
        std::rotate(loop.begin(), loop.begin() + 2, loop.end());
        d.target_loop = Cycle{loop};
        CHECK(diagnose_diagram(d) == "");
    }
    SUBCASE("a collapsed edge is degenerate")
    {
        d.vertex_map[0] = 1;
        CHECK_FALSE(diagnose_diagram(d).empty());
        CHECK_THROWS_AS(validate_diagram(d), InputError);
    }
    SUBCASE("boundary must follow the loop order")
    {
        d.target_loop = Cycle{{1, 2, 3, 5, 4}};
        CHECK_FALSE(diagnose_diagram(d).empty());
    }
    SUBCASE("map must be total")
    {
        d.vertex_map.pop_back();
        CHECK_FALSE(diagnose_diagram(d).empty());
    }
}
