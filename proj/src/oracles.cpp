#include "tc/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tc {

namespace {

long long int_det(std::vector<std::vector<long long>> M) {
    int n = (int)M.size();
    if (n == 0) return 1;
    // fraction-free Bareiss in 128-bit
    std::vector<std::vector<__int128>> A(n, std::vector<__int128>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A[i][j] = M[i][j];
    __int128 prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (A[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (A[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p == -1) return 0;
            std::swap(A[k], A[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                __int128 v = A[i][j] * A[k][k] - A[i][k] * A[k][j];
                A[i][j] = v / prev;
            }
        prev = A[k][k];
    }
    __int128 det = sign * A[n - 1][n - 1];
    if (det > INT64_MAX || det < INT64_MIN) throw ArithmeticOverflow("determinant overflow");
    return (long long)det;
}

// face at the corner between slots s and s+1: the left face of the directed
// edge arriving at slot (s+1) mod 4
struct CornerLookup {
    std::map<Port, std::pair<int, int>> head_at;
    const Faces* f;
    int at(int c, int s) const {
        auto it = head_at.find(Port{c, (s + 1) % 4});
        return f->side_face[it->second.first][it->second.second];
    }
};

CornerLookup corner_lookup(const LinkDiagram& d, const Faces& f) {
    CornerLookup cl;
    cl.f = &f;
    for (int e = 0; e < (int)d.edges.size(); ++e) {
        cl.head_at[d.edges[e].to] = {e, 0};
        cl.head_at[d.edges[e].from] = {e, 1};
    }
    return cl;
}

}  // namespace

int link_component_count(const LinkDiagram& d) {
    auto pid = [](const Port& p) { return p.crossing * 4 + p.slot; };
    int N = (int)d.crossings.size() * 4;
    std::vector<int> strand_mate(N), edge_mate(N, -1);
    for (int c = 0; c < (int)d.crossings.size(); ++c) {
        strand_mate[c * 4 + 0] = c * 4 + 2;
        strand_mate[c * 4 + 2] = c * 4 + 0;
        strand_mate[c * 4 + 1] = c * 4 + 3;
        strand_mate[c * 4 + 3] = c * 4 + 1;
    }
    for (auto& e : d.edges) {
        edge_mate[pid(e.from)] = pid(e.to);
        edge_mate[pid(e.to)] = pid(e.from);
    }
    std::vector<bool> seen(N, false);
    int comps = 0;
    for (int p = 0; p < N; ++p) {
        if (seen[p]) continue;
        ++comps;
        int cur = p;
        while (!seen[cur]) {
            seen[cur] = true;
            seen[strand_mate[cur]] = true;
            cur = edge_mate[strand_mate[cur]];
        }
    }
    return comps + (int)d.circles.size();
}

long long goeritz_det(const LinkDiagram& d) {
    Faces f = compute_faces(d);
    Coloring col = checkerboard(d, f);
    if (!col.connected) throw ValidationError("goeritz oracle requires a connected diagram");
    if (d.crossings.empty()) return 1;

    std::vector<int> black_index(f.face_count, -1);
    int b = 0;
    for (int i = 0; i < f.face_count; ++i)
        if (col.face_color[i] == 1) black_index[i] = b++;

    CornerLookup cl = corner_lookup(d, f);
    std::vector<std::vector<long long>> G(b, std::vector<long long>(b, 0));
    for (int c = 0; c < (int)d.crossings.size(); ++c) {
        int f0 = cl.at(c, 0), f1 = cl.at(c, 1);
        int eta;
        int u, v;
        if (col.face_color[f0] == 1) {
            eta = +1;
            u = f0;
            v = cl.at(c, 2);
        } else {
            eta = -1;
            u = f1;
            v = cl.at(c, 3);
        }
        int bu = black_index[u], bv = black_index[v];
        if (bu != bv) {
            G[bu][bv] -= eta;
            G[bv][bu] -= eta;
        }
    }
    for (int u = 0; u < b; ++u) {
        long long s = 0;
        for (int v = 0; v < b; ++v)
            if (v != u) s += G[u][v];
        G[u][u] = -s;
    }
    // reduced matrix: drop row/column 0
    std::vector<std::vector<long long>> R(b - 1, std::vector<long long>(b - 1));
    for (int i = 1; i < b; ++i)
        for (int j = 1; j < b; ++j) R[i - 1][j - 1] = G[i][j];
    return std::llabs(int_det(R));
}

long long goeritz_det(const TangleDiagram& d) {
    return goeritz_det(close_with_trivial_tangle(d));
}

Poly poly_trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return poly_trim(r);
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) {
            __int128 v = (__int128)r[i + j] + (__int128)a[i] * b[j];
            if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticOverflow("poly overflow");
            r[i + j] = (long long)v;
        }
    return poly_trim(r);
}

namespace {

// determinant over Z[t]: Laplace expansion memoized on column masks
Poly poly_det(const std::vector<std::vector<Poly>>& M) {
    int n = (int)M.size();
    if (n == 0) return {1};
    std::map<unsigned, Poly> memo;
    std::function<Poly(int, unsigned)> rec = [&](int row, unsigned mask) -> Poly {
        if (row == n) return {1};
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        Poly acc;
        int pos = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (1u << j))) continue;
            if (!M[row][j].empty()) {
                Poly sub = rec(row + 1, mask & ~(1u << j));
                Poly term = poly_mul(M[row][j], sub);
                if (pos % 2 == 1)
                    for (auto& x : term) x = -x;
                acc = poly_add(acc, term);
            }
            ++pos;
        }
        memo[mask] = acc;
        return acc;
    };
    return rec(0, (1u << n) - 1);
}

}  // namespace

Poly alexander_poly(const LinkDiagram& d) {
    if (link_component_count(d) != 1)
        throw ValidationError("alexander oracle requires a one-component closure");
    int C = (int)d.crossings.size();
    if (C == 0) return {1};

    // arcs: long edges merged through over-passages
    int E = (int)d.edges.size();
    std::vector<int> parent(E);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<Port, int> edge_at;
    for (int e = 0; e < E; ++e) {
        edge_at[d.edges[e].from] = e;
        edge_at[d.edges[e].to] = e;
    }
    for (int c = 0; c < C; ++c) parent[find(edge_at[{c, 1}])] = find(edge_at[{c, 3}]);
    std::map<int, int> arc_id;
    for (int e = 0; e < E; ++e) {
        int r = find(e);
        if (!arc_id.count(r)) {
            int k = (int)arc_id.size();
            arc_id[r] = k;
        }
    }
    int arcs = (int)arc_id.size();
    auto arc_of = [&](const Port& p) { return arc_id[find(edge_at[p])]; };

    Orientation o = orient_diagram(d, {}, true);
    std::vector<int> sign = crossing_signs(d, o);

    // Fox rows: positive (1-t) o + t in - out; negative (t-1) o + in - t out
    std::vector<std::vector<Poly>> M(C, std::vector<Poly>(arcs));
    auto add_to = [&](Poly& p, const Poly& q) { p = poly_add(p, q); };
    for (int c = 0; c < C; ++c) {
        int in = arc_of({c, 0}), out = arc_of({c, 2}), over = arc_of({c, 1});
        if (sign[c] > 0) {
            add_to(M[c][over], {1, -1});
            add_to(M[c][in], {0, 1});
            add_to(M[c][out], {-1});
        } else {
            add_to(M[c][over], {-1, 1});
            add_to(M[c][in], {1});
            add_to(M[c][out], {0, -1});
        }
    }
    if (arcs != C) throw ValidationError("arc count mismatch in wirtinger structure");

    // drop one column
    std::vector<std::vector<Poly>> A(C - 1, std::vector<Poly>(C - 1));
    for (int i = 0; i + 1 < C; ++i)
        for (int j = 0; j + 1 < C; ++j) A[i][j] = M[i][j + 1];
    Poly det = poly_det(A);
    // normalize units: strip t^k, leading coefficient positive
    size_t k = 0;
    while (k < det.size() && det[k] == 0) ++k;
    det.erase(det.begin(), det.begin() + k);
    det = poly_trim(det);
    if (!det.empty() && det.back() < 0)
        for (auto& x : det) x = -x;
    return det;
}

long long resultant(const Poly& a0, const Poly& b0) {
    Poly a = poly_trim(a0), b = poly_trim(b0);
    if (a.empty() || b.empty()) return 0;
    int da = (int)a.size() - 1, db = (int)b.size() - 1;
    if (da == 0 && db == 0) return 1;
    if (da == 0) {
        long long r = 1;
        for (int i = 0; i < db; ++i) {
            __int128 v = (__int128)r * a[0];
            if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticOverflow("resultant overflow");
            r = (long long)v;
        }
        return r;
    }
    if (db == 0) {
        long long r = 1;
        for (int i = 0; i < da; ++i) {
            __int128 v = (__int128)r * b[0];
            if (v > INT64_MAX || v < INT64_MIN) throw ArithmeticOverflow("resultant overflow");
            r = (long long)v;
        }
        return r;
    }
    int n = da + db;
    std::vector<std::vector<long long>> S(n, std::vector<long long>(n, 0));
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j) S[i][i + j] = a[da - j];
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j) S[db + i][i + j] = b[db - j];
    return int_det(S);
}

long long cyclic_h1_order(const TangleDiagram& d, int p) {
    if (p < 2) throw ValidationError("cover degree must be >= 2");
    LinkDiagram L = close_with_trivial_tangle(d);
    if (link_component_count(L) != 1)
        throw ValidationError("cyclic order oracle requires a knot closure");
    Poly delta = alexander_poly(L);
    Poly psi(p, 1);  // 1 + x + ... + x^{p-1}
    return std::llabs(resultant(psi, delta));
}

}  // namespace tc
