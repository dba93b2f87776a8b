#include "tc/abelian.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace tc {

namespace {

long long chk_add(long long a, long long b) {
    long long r;
    if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer add overflow");
    return r;
}

long long chk_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer mul overflow");
    return r;
}

Mat identity(int n) {
    Mat I(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) I[i][i] = 1;
    return I;
}

Mat mat_mul(const Mat& A, const Mat& B) {
    int n = (int)A.size(), m = n ? (int)A[0].size() : 0;
    int k = (int)B.size() ? (int)B[0].size() : 0;
    Mat C(n, std::vector<long long>(k, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) {
            __int128 acc = 0;
            for (int t = 0; t < m; ++t) acc += (__int128)A[i][t] * B[t][j];
            if (acc > INT64_MAX || acc < INT64_MIN) throw ArithmeticOverflow("matrix product overflow");
            C[i][j] = (long long)acc;
        }
    return C;
}

}  // namespace

SmithResult smith_normal_form(Mat A) {
    const Mat A0 = A;
    int R = (int)A.size();
    int C = R ? (int)A[0].size() : 0;
    for (auto& row : A)
        if ((int)row.size() != C) throw std::invalid_argument("ragged matrix");

    SmithResult res;
    res.U = identity(R);
    res.V = identity(C);

    auto row_swap = [&](int i, int j) {
        std::swap(A[i], A[j]);
        std::swap(res.U[i], res.U[j]);
    };
    auto col_swap = [&](int i, int j) {
        for (auto& r : A) std::swap(r[i], r[j]);
        for (auto& r : res.V) std::swap(r[i], r[j]);
    };
    auto row_add = [&](int dst, int src, long long f) {  // row dst += f * row src
        for (int j = 0; j < C; ++j) A[dst][j] = chk_add(A[dst][j], chk_mul(f, A[src][j]));
        for (int j = 0; j < R; ++j) res.U[dst][j] = chk_add(res.U[dst][j], chk_mul(f, res.U[src][j]));
    };
    auto col_add = [&](int dst, int src, long long f) {
        for (int i = 0; i < R; ++i) A[i][dst] = chk_add(A[i][dst], chk_mul(f, A[i][src]));
        for (int i = 0; i < C; ++i) res.V[i][dst] = chk_add(res.V[i][dst], chk_mul(f, res.V[i][src]));
    };
    int k = 0;
    int limit = std::min(R, C);
    while (k < limit) {
        // pivot: least absolute value among nonzero entries of the submatrix
        int pi = -1, pj = -1;
        long long best = 0;
        for (int i = k; i < R; ++i)
            for (int j = k; j < C; ++j)
                if (A[i][j] != 0 && (pi == -1 || std::llabs(A[i][j]) < best)) {
                    pi = i;
                    pj = j;
                    best = std::llabs(A[i][j]);
                }
        if (pi == -1) break;
        row_swap(k, pi);
        col_swap(k, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = k + 1; i < R; ++i) {
                if (A[i][k] == 0) continue;
                long long q = A[i][k] / A[k][k];
                row_add(i, k, -q);
                if (A[i][k] != 0) {  // remainder smaller than pivot: swap up
                    row_swap(k, i);
                    clean = false;
                }
            }
            for (int j = k + 1; j < C; ++j) {
                if (A[k][j] == 0) continue;
                long long q = A[k][j] / A[k][k];
                col_add(j, k, -q);
                if (A[k][j] != 0) {
                    col_swap(k, j);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide the rest of the submatrix
                for (int i = k + 1; i < R && clean; ++i)
                    for (int j = k + 1; j < C && clean; ++j)
                        if (A[i][j] % A[k][k] != 0) {
                            row_add(k, i, 1);
                            clean = false;
                        }
            }
        }
        if (A[k][k] < 0) {
            for (int j = 0; j < C; ++j) A[k][j] = -A[k][j];
            for (int j = 0; j < R; ++j) res.U[k][j] = -res.U[k][j];
        }
        ++k;
    }
    res.D = A;
    for (int i = 0; i < limit; ++i)
        if (A[i][i] != 0) {
            res.diagonal.push_back(A[i][i]);
            res.rank++;
        }

    // self-check: U * A0 * V == D exactly
    Mat lhs = mat_mul(mat_mul(res.U, A0), res.V);
    if (lhs != res.D) throw std::logic_error("smith normal form transform check failed");
    return res;
}

long long AbelianGroup::order() const {
    if (free_rank > 0) return 0;
    long long o = 1;
    for (long long d : torsion) o = chk_mul(o, d);
    return o;
}

std::string AbelianGroup::str() const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < free_rank; ++i) {
        os << (first ? "" : " + ") << "Z";
        first = false;
    }
    for (long long d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

AbelianGroup cokernel(const Mat& relations, int gens) {
    AbelianGroup g;
    if (relations.empty()) {
        g.free_rank = gens;
        return g;
    }
    for (auto& r : relations)
        if ((int)r.size() != gens) throw std::invalid_argument("relation width mismatch");
    SmithResult s = smith_normal_form(relations);
    g.free_rank = gens - s.rank;
    for (long long d : s.diagonal)
        if (d != 1) g.torsion.push_back(d);
    return g;
}

}  // namespace tc
