#include "doctest.h"
#include "tc/diagram.hpp"

using namespace tc;

// Cut knots: one edge of the table diagram split into two boundary labels.
static const char* kTrefoilCut =
    "T 1\n"
    "X 1a 4 2 5\n"
    "X 3 6 4 1b\n"
    "X 5 2 6 3\n"
    "B 1a 1b\n";

static const char* kFigureEightCut =
    "T 1\n"
    "X 4 2 5 1a\n"
    "X 8 6 1b 5\n"
    "X 6 3 7 4\n"
    "X 2 7 3 8\n"
    "B 1b 1a\n";

TEST_CASE("trivial tangles parse and close") {
    auto d1 = parse_tangle("T 1\nB 1 1\n");
    CHECK(d1.n == 1);
    CHECK(d1.crossings.empty());
    auto L1 = close_with_trivial_tangle(d1);
    CHECK(L1.edges.empty());
    CHECK(L1.circles.size() == 1);

    auto d2 = parse_tangle("T 2\nB 1 2 2 1\n");
    auto L2 = close_with_trivial_tangle(d2);
    CHECK(L2.circles.size() == 2);  // two-component unlink

    // side-by-side boundary order closes into a single circle
    auto d2b = parse_tangle("T 2\nB 1 1 2 2\n");
    auto L2b = close_with_trivial_tangle(d2b);
    CHECK(L2b.circles.size() == 1);
}

TEST_CASE("parse validation") {
    CHECK_THROWS_AS(parse_tangle("T 1\nB 1 2\n"), ValidationError);
    CHECK_THROWS_AS(parse_tangle("B 1 1\n"), ValidationError);
    CHECK_THROWS_AS(parse_tangle("T 1\nX 1 2 3 4\nB 1 1\n"), ValidationError);
    CHECK_THROWS_AS(parse_tangle("T 0\nB\n"), ValidationError);
    // round trip on canonical form
    auto d = parse_tangle(kTrefoilCut);
    auto d2 = parse_tangle(serialize_tangle(d));
    CHECK(serialize_tangle(d2) == serialize_tangle(d));
}

TEST_CASE("trefoil closure faces and coloring") {
    auto d = parse_tangle(kTrefoilCut);
    auto L = close_with_trivial_tangle(d);
    CHECK(L.crossings.size() == 3);
    auto f = compute_faces(L);
    CHECK(f.face_count == 5);  // c + 2
    CHECK(f.component_count == 1);
    auto col = checkerboard(L, f);
    CHECK(col.connected);
    CHECK(col.black_count == 2);
    auto o = orient_diagram(L, {}, true);
    CHECK(seifert_circles(L, o) == 2);
}

TEST_CASE("figure eight closure faces and coloring") {
    auto d = parse_tangle(kFigureEightCut);
    auto L = close_with_trivial_tangle(d);
    auto f = compute_faces(L);
    CHECK(f.face_count == 6);
    auto col = checkerboard(L, f);
    CHECK(col.black_count == 3);
    auto o = orient_diagram(L, {}, true);
    CHECK(seifert_circles(L, o) == 3);
    auto st = diagram_stats(d);
    CHECK(st.c == 4);
    CHECK(st.b == 3);
    CHECK(st.s == 3);
}

TEST_CASE("zero-crossing closures") {
    auto d = parse_tangle("T 1\nB 1 1\n");
    auto st = diagram_stats(d);
    CHECK(st.c == 0);
    CHECK(st.b == 1);
    CHECK(st.s == 1);
}
