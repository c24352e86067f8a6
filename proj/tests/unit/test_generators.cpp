#include <doctest.h>

#include "simploc/error.hpp"
#include "simploc/generators.hpp"
#include "simploc/io.hpp"

using namespace simploc;

TEST_CASE("wheel fixtures")
{
    const FlagComplex W = wheel(5);
    CHECK(W.size() == 6);
    CHECK(W.edge_count() == 10);
    CHECK_THROWS_AS(wheel(3), InputError);
}

TEST_CASE("dwheel fixtures keep the figure labels")
{
    const FlagComplex P = dwheel(5, 5, true);
    CHECK(P.size() == 8);
    for (const char* label : {"v1", "v2", "v3", "v4", "v5", "w2", "w3", "w5"})
        CHECK(P.find(label).has_value());
    CHECK_FALSE(P.find("w1").has_value()); // w1 = v1
    CHECK_FALSE(P.find("w4").has_value()); // w4 = v3
    // W1 = (w5; v1..v5), W2 = (v2; w1..w5).
    for (const char* v : {"v1", "v2", "v3", "v4", "v5"})
        CHECK(P.adjacent(P.id_of("w5"), P.id_of(v)));
    for (const char* w : {"v1", "w2", "w3", "v3", "w5"})
        CHECK(P.adjacent(P.id_of("v2"), P.id_of(w)));

    const FlagComplex N = dwheel(5, 5, false);
    CHECK(N.size() == 9);
    CHECK(N.adjacent(N.id_of("v1"), N.id_of("w1")));
    CHECK_FALSE(N.adjacent(N.id_of("v2"), N.id_of("v5")));

    CHECK(dwheel(5, 6, true).size() == 9);
    CHECK_THROWS_AS(dwheel(3, 5, true), InputError);
}

TEST_CASE("extended 5-wheel and cones")
{
    const FlagComplex E = extended_five_wheel();
    CHECK(E.size() == 7);
    CHECK(E.adjacent(E.id_of("a"), E.id_of("v1")));
    CHECK(E.adjacent(E.id_of("a"), E.id_of("v2")));
    CHECK(E.degree(E.id_of("a")) == 2);

    const FlagComplex C = cone(E);
    CHECK(C.size() == 8);
    CHECK(C.degree(C.id_of("apex")) == 7);
    CHECK(cone(C).find("apex1").has_value());
}

TEST_CASE("hex disc counts")
{
    for (int r = 1; r <= 5; ++r) {
        const SimplicialDisc D = hex_disc(r);
        CHECK(D.vertex_count() == 3 * r * (r + 1) + 1);
        CHECK(D.triangle_count() == 6 * r * r);
        CHECK(D.boundary().length() == 6 * r);
        for (VertexId v : D.interior_vertices())
            CHECK(D.degree(v) == 6);
    }
    CHECK(hex_disc(1).vertex_count() == 7);
    CHECK(hex_disc(2).vertex_count() == 19);
    CHECK(hex_disc(2).triangle_count() == 24);
    CHECK_THROWS_AS(hex_disc(0), InputError);
}

TEST_CASE("random generators are deterministic and honor their contracts")
{
    for (std::uint64_t seed : {1ull, 7ull, 12345ull}) {
        const auto a = random_7_located_disc(30, seed);
        const auto b = random_7_located_disc(30, seed);
        CHECK(disc_to_json(a).dump() == disc_to_json(b).dump());
        CHECK(a.is_flag());
        CHECK(check_disc_7_located(a).verdict);
        CHECK(check_degree_sums(a).empty());

        const auto x = random_flag(12, 0.3, seed);
        const auto y = random_flag(12, 0.3, seed);
        CHECK(complex_to_json(x).dump() == complex_to_json(y).dump());
    }
    CHECK(disc_to_json(random_7_located_disc(30, 1)).dump() != disc_to_json(random_7_located_disc(30, 2)).dump());
    CHECK_THROWS_AS(random_7_located_disc(0, 1), InputError);
    CHECK_THROWS_AS(random_flag(5, 1.5, 1), InputError);
}

TEST_CASE("random discs grow to the requested size")
{
    const auto D = random_7_located_disc(40, 3);
    CHECK(D.triangle_count() == 41);
    CHECK_FALSE(D.interior_vertices().empty());
}

TEST_CASE("generate dispatches on the spec")
{
    GeneratorSpec spec;
    spec.kind = GeneratorKind::Dwheel;
    spec.planar = false;
    CHECK(std::get<FlagComplex>(generate(spec)).size() == 9);

    spec.kind = GeneratorKind::Cone;
    auto base = std::make_shared<GeneratorSpec>();
    base->kind = GeneratorKind::HexDisc;
    base->radius = 1;
    spec.base = base;
    CHECK(std::get<FlagComplex>(generate(spec)).size() == 8);

    spec = {};
    spec.kind = GeneratorKind::RandomDisc;
    CHECK_THROWS_AS(generate(spec), InputError); // no seed
    spec.seed = 5;
    CHECK(std::holds_alternative<SimplicialDisc>(generate(spec)));

    CHECK(generator_kind_from_string("hex-disc") == GeneratorKind::HexDisc);
    CHECK(generator_kind_from_string("EXTENDED_5WHEEL") == GeneratorKind::ExtendedFiveWheel);
    CHECK_THROWS_AS(generator_kind_from_string("torus"), InputError);
}
