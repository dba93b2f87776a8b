#include "doctest.h"
#include "tc/abelian.hpp"
#include "tc/diagram.hpp"
#include "tc/oracles.hpp"

using namespace tc;

namespace {

TangleDiagram cut(const char* text) { return parse_tangle(text); }

const char* kTrefoil =
    "T 1\nX 1a 4 2 5\nX 3 6 4 1b\nX 5 2 6 3\nB 1a 1b\n";
const char* kFig8 =
    "T 1\nX 4 2 5 1a\nX 8 6 1b 5\nX 6 3 7 4\nX 2 7 3 8\nB 1b 1a\n";
const char* k51 =
    "T 1\nX 1a 6 2 7\nX 3 8 4 9\nX 5 10 6 1b\nX 7 2 8 3\nX 9 4 10 5\nB 1a 1b\n";
const char* k52 =
    "T 1\nX 1a 4 2 5\nX 3 8 4 9\nX 5 10 6 1b\nX 9 6 10 7\nX 7 2 8 3\nB 1a 1b\n";
const char* k61 =
    "T 1\nX 1a 4 2 5\nX 7 10 8 11\nX 3 9 4 8\nX 9 3 10 2\nX 5 12 6 1b\nX 11 6 12 7\nB 1a 1b\n";

}  // namespace

TEST_CASE("smith normal form basics") {
    // hand-checked: [[2,0]] on two generators -> rank 1 free + Z/2
    AbelianGroup g = cokernel({{2, 0}}, 2);
    CHECK(g.free_rank == 1);
    CHECK(g.torsion == std::vector<long long>{2});

    // identity relations kill everything
    AbelianGroup t = cokernel({{1, 0}, {0, 1}}, 2);
    CHECK(t.is_trivial());

    // abelianized x^2ax^2a^-1, a^2xa^2x^-1 -> [[4,0],[0,4]]
    AbelianGroup q = cokernel({{4, 0}, {0, 4}}, 2);
    CHECK(q.free_rank == 0);
    CHECK(q.torsion == std::vector<long long>{4, 4});

    AbelianGroup chain = cokernel({{2, 0}, {0, 6}}, 2);
    CHECK(chain.torsion == std::vector<long long>{2, 6});
    AbelianGroup mix = cokernel({{4, 0}, {0, 6}}, 2);
    CHECK(mix.torsion == std::vector<long long>{2, 12});
}

TEST_CASE("smith normal form random self-check") {
    unsigned long long seed = 12345;
    auto rnd = [&]() {
        seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        return (long long)((seed >> 33) % 13) - 6;
    };
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + (int)(rnd() + 6) % 5, c = 1 + (int)(rnd() + 6) % 5;
        Mat A(r, std::vector<long long>(c));
        for (auto& row : A)
            for (auto& x : row) x = rnd();
        auto s = smith_normal_form(A);  // throws if U*A*V != D
        for (size_t i = 1; i < s.diagonal.size(); ++i)
            CHECK(s.diagonal[i] % s.diagonal[i - 1] == 0);
    }
}

TEST_CASE("goeritz determinants of small knots") {
    CHECK(goeritz_det(cut(kTrefoil)) == 3);
    CHECK(goeritz_det(cut(kFig8)) == 5);
    CHECK(goeritz_det(cut(k51)) == 5);
    CHECK(goeritz_det(cut(k52)) == 7);
    CHECK(goeritz_det(cut(k61)) == 9);
    // 1-crossing unknot diagram (positive curl)
    CHECK(goeritz_det(cut("T 1\nX 1 2 2 1a\nB 1 1a\n")) == 1);
    // 0-crossing unknot
    CHECK(goeritz_det(cut("T 1\nB 1 1\n")) == 1);
}

TEST_CASE("alexander polynomials and resultant covers") {
    auto tre = alexander_poly(close_with_trivial_tangle(cut(kTrefoil)));
    CHECK(tre == Poly{1, -1, 1});
    auto f8 = alexander_poly(close_with_trivial_tangle(cut(kFig8)));
    CHECK(f8 == Poly{1, -3, 1});

    CHECK(cyclic_h1_order(cut(kTrefoil), 2) == 3);
    CHECK(cyclic_h1_order(cut(kTrefoil), 3) == 4);
    CHECK(cyclic_h1_order(cut(kFig8), 2) == 5);
    CHECK(cyclic_h1_order(cut(kFig8), 3) == 16);
    CHECK(cyclic_h1_order(cut(kFig8), 4) == 45);
    CHECK(cyclic_h1_order(cut(k52), 2) == 7);
    CHECK(cyclic_h1_order(cut("T 1\nB 1 1\n"), 3) == 1);
}

TEST_CASE("oracle agreement at p=2") {
    for (const char* k : {kTrefoil, kFig8, k51, k52, k61})
        CHECK(goeritz_det(cut(k)) == cyclic_h1_order(cut(k), 2));
}
