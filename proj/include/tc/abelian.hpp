#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tc {

struct ArithmeticOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Mat = std::vector<std::vector<long long>>;

// Smith normal form with transform accumulation: U * A * V = D, U and V
// unimodular, D diagonal with the divisibility chain. The product identity
// is re-verified by exact multiplication on every call.
struct SmithResult {
    Mat U, D, V;
    std::vector<long long> diagonal;  // nonzero entries d1 | d2 | ...
    int rank = 0;
};

SmithResult smith_normal_form(Mat A);

// Finitely generated abelian group in invariant-factor form.
struct AbelianGroup {
    int free_rank = 0;
    std::vector<long long> torsion;  // invariant factors, each >= 2, d1 | d2 | ...

    bool operator==(const AbelianGroup&) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    // order of the torsion subgroup (0 stands for an infinite group)
    long long order() const;
    std::string str() const;
};

// Cokernel of the relation matrix: Z^gens modulo the row space.
AbelianGroup cokernel(const Mat& relations, int gens);

}  // namespace tc
