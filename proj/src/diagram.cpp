#include "tc/diagram.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace tc {

namespace {

struct Endpoint {
    enum Kind { PORT, BOUND, CYCLE } kind = PORT;
    int a = -1, b = -1;  // PORT: (crossing, slot); BOUND: (pos, -1); CYCLE: (cycle, pos)
    bool operator==(const Endpoint& o) const { return kind == o.kind && a == o.a && b == o.b; }
};

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

}  // namespace

TangleDiagram parse_tangle(const std::string& text) {
    TangleDiagram d;
    bool saw_t = false, saw_b = false;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto tk = tokens(line);
        if (tk.empty()) continue;
        const std::string& op = tk[0];
        auto fail = [&](const std::string& msg) -> void {
            throw ValidationError("line " + std::to_string(lineno) + ": " + msg);
        };
        if (op == "T") {
            if (saw_t) fail("duplicate T line");
            if (tk.size() != 2) fail("T expects one argument");
            try {
                d.n = std::stoi(tk[1]);
            } catch (...) {
                fail("bad strand count");
            }
            if (d.n < 1) fail("strand count must be >= 1");
            saw_t = true;
        } else if (op == "X") {
            if (tk.size() != 5) fail("X expects four edge labels");
            d.crossings.push_back({{tk[1], tk[2], tk[3], tk[4]}});
        } else if (op == "B") {
            if (saw_b) fail("duplicate B line");
            d.boundary.assign(tk.begin() + 1, tk.end());
            saw_b = true;
        } else if (op == "C") {
            if (tk.size() < 2) fail("C expects at least one edge label");
            d.closed_components.push_back({tk.begin() + 1, tk.end()});
        } else if (op == "O") {
            for (size_t i = 1; i < tk.size(); ++i) d.orient_seeds.push_back(tk[i]);
        } else {
            fail("unknown line type '" + op + "'");
        }
    }
    if (!saw_t) throw ValidationError("missing T line");
    if (!saw_b) throw ValidationError("missing B line");
    if ((int)d.boundary.size() != 2 * d.n)
        throw ValidationError("boundary line must list exactly 2n edge labels");

    std::map<std::string, int> occ;
    for (auto& c : d.crossings)
        for (auto& e : c.e) occ[e] += 1;
    for (auto& e : d.boundary) occ[e] += 1;
    for (auto& cyc : d.closed_components)
        for (auto& e : cyc) occ[e] += 2;  // a cycle entry accounts for both ends
    for (auto& [label, k] : occ)
        if (k != 2)
            throw ValidationError("edge label '" + label + "' occurs " + std::to_string(k) +
                                  " times, expected 2");
    for (auto& s : d.orient_seeds)
        if (!occ.count(s)) throw ValidationError("orientation seed '" + s + "' is not an edge");

    // planarity of the rotation data: faces = crossings + 2 per component
    LinkDiagram closed = close_with_trivial_tangle(d);
    Faces f = compute_faces(closed);
    std::vector<int> cr(f.component_count, 0), fc(f.component_count, 0);
    for (int c = 0; c < (int)closed.crossings.size(); ++c) cr[f.crossing_component[c]]++;
    for (int i = 0; i < f.face_count; ++i) fc[f.face_component[i]]++;
    for (int k = 0; k < f.component_count; ++k)
        if (fc[k] != cr[k] + 2)
            throw ValidationError("rotation data is not planar (" + std::to_string(fc[k]) +
                                  " faces on " + std::to_string(cr[k]) + " crossings)");
    return d;
}

std::string serialize_tangle(const TangleDiagram& d) {
    std::ostringstream os;
    os << "T " << d.n << "\n";
    for (auto& c : d.crossings)
        os << "X " << c.e[0] << " " << c.e[1] << " " << c.e[2] << " " << c.e[3] << "\n";
    for (auto& cyc : d.closed_components) {
        os << "C";
        for (auto& e : cyc) os << " " << e;
        os << "\n";
    }
    os << "B";
    for (auto& e : d.boundary) os << " " << e;
    os << "\n";
    if (!d.orient_seeds.empty()) {
        os << "O";
        for (auto& e : d.orient_seeds) os << " " << e;
        os << "\n";
    }
    return os.str();
}

LinkDiagram close_with_trivial_tangle(const TangleDiagram& d) {
    LinkDiagram L;
    L.n = d.n;
    L.crossings = d.crossings;
    L.closure_ref.resize(d.n);

    std::map<std::string, std::vector<Endpoint>> ends;
    for (int c = 0; c < (int)d.crossings.size(); ++c)
        for (int s = 0; s < 4; ++s)
            ends[d.crossings[c].e[s]].push_back({Endpoint::PORT, c, s});
    for (int p = 0; p < (int)d.boundary.size(); ++p)
        ends[d.boundary[p]].push_back({Endpoint::BOUND, p, -1});

    const int two_n = 2 * d.n;
    auto pair_pos = [&](int p) { return two_n - 1 - p; };
    auto strand_of = [&](int p) { return std::min(p, pair_pos(p)) + 1; };
    auto other_end = [&](const std::string& lab, const Endpoint& at) -> Endpoint {
        auto& v = ends.at(lab);
        return v[0] == at ? v[1] : v[0];
    };
    auto is_first = [&](const std::string& lab, const Endpoint& at) -> bool {
        return ends.at(lab)[0] == at;
    };

    std::vector<bool> port_done(d.crossings.size() * 4, false);
    std::vector<bool> bound_done(two_n, false);

    for (int c = 0; c < (int)d.crossings.size(); ++c) {
        for (int s = 0; s < 4; ++s) {
            if (port_done[c * 4 + s]) continue;
            LongEdge le;
            le.from = {c, s};
            std::string lab = d.crossings[c].e[s];
            Endpoint at{Endpoint::PORT, c, s};
            while (true) {
                le.labels.push_back(lab);
                le.label_forward.push_back(is_first(lab, at));
                Endpoint nxt = other_end(lab, at);
                if (nxt.kind == Endpoint::PORT) {
                    le.to = {nxt.a, nxt.b};
                    break;
                }
                if (nxt.kind == Endpoint::CYCLE)
                    throw ValidationError("edge '" + lab + "' mixes cycle and crossing ends");
                bound_done[nxt.a] = true;
                int p2 = pair_pos(nxt.a);
                bound_done[p2] = true;
                le.closure_uses.push_back({strand_of(nxt.a), nxt.a < p2});
                lab = d.boundary[p2];
                at = {Endpoint::BOUND, p2, -1};
            }
            port_done[c * 4 + s] = true;
            port_done[le.to.crossing * 4 + le.to.slot] = true;
            int ei = (int)L.edges.size();
            for (auto& [strand, lth] : le.closure_uses) {
                L.closure_ref[strand - 1].on_circle = false;
                L.closure_ref[strand - 1].index = ei;
            }
            L.edges.push_back(std::move(le));
        }
    }

    // crossing-free circles through boundary positions
    for (int p0 = 0; p0 < two_n; ++p0) {
        if (bound_done[p0]) continue;
        LinkDiagram::FreeCircle circ;
        int cur = p0;
        while (!bound_done[cur]) {
            bound_done[cur] = true;
            int p2 = pair_pos(cur);
            bound_done[p2] = true;
            circ.closure_strands.push_back(strand_of(cur));
            std::string lab = d.boundary[p2];
            circ.labels.push_back(lab);
            Endpoint nxt = other_end(lab, {Endpoint::BOUND, p2, -1});
            if (nxt.kind != Endpoint::BOUND)
                throw ValidationError("edge '" + lab + "' leaves a crossing-free circle");
            cur = nxt.a;
        }
        int ci = (int)L.circles.size();
        for (int strand : circ.closure_strands) {
            L.closure_ref[strand - 1].on_circle = true;
            L.closure_ref[strand - 1].index = ci;
        }
        L.circles.push_back(std::move(circ));
    }

    for (auto& cyc : d.closed_components) {
        LinkDiagram::FreeCircle circ;
        circ.labels = cyc;
        L.circles.push_back(std::move(circ));
    }
    return L;
}

Faces compute_faces(const LinkDiagram& d) {
    Faces F;
    int E = (int)d.edges.size();
    F.side_face.assign(E, {-1, -1});

    std::map<Port, std::pair<int, int>> tail_at;
    for (int e = 0; e < E; ++e) {
        tail_at[d.edges[e].from] = {e, 0};
        tail_at[d.edges[e].to] = {e, 1};
    }
    auto head = [&](int e, int dir) -> Port { return dir == 0 ? d.edges[e].to : d.edges[e].from; };

    // left-face orbits: arrive at slot s, leave from slot (s+3) mod 4
    for (int e0 = 0; e0 < E; ++e0) {
        for (int d0 = 0; d0 < 2; ++d0) {
            if (F.side_face[e0][d0] != -1) continue;
            int fid = F.face_count++;
            int ce = e0, cd = d0;
            while (F.side_face[ce][cd] == -1) {
                F.side_face[ce][cd] = fid;
                Port h = head(ce, cd);
                auto it = tail_at.find({h.crossing, (h.slot + 3) % 4});
                if (it == tail_at.end()) throw ValidationError("dangling port in closed diagram");
                ce = it->second.first;
                cd = it->second.second;
            }
        }
    }

    int V = (int)d.crossings.size();
    std::vector<int> parent(V);
    for (int i = 0; i < V; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& e : d.edges) parent[find(e.from.crossing)] = find(e.to.crossing);
    std::map<int, int> comp_id;
    F.crossing_component.resize(V);
    for (int i = 0; i < V; ++i) {
        int r = find(i);
        if (!comp_id.count(r)) comp_id[r] = F.component_count++;
        F.crossing_component[i] = comp_id[r];
    }
    F.face_component.assign(F.face_count, -1);
    for (int e = 0; e < E; ++e)
        for (int dir = 0; dir < 2; ++dir)
            F.face_component[F.side_face[e][dir]] =
                F.crossing_component[d.edges[e].from.crossing];
    return F;
}

namespace {

// Outer face of one component: the left side of the lowest-numbered closure
// arc on it, crossed from its low boundary position to the high one. A
// component with no closure arc falls back to its lowest face id.
int component_outer_face(const LinkDiagram& d, const Faces& f, int comp) {
    int best_strand = -1, best_edge = -1, best_dir = 0;
    for (int e = 0; e < (int)d.edges.size(); ++e) {
        if (f.crossing_component[d.edges[e].from.crossing] != comp) continue;
        for (auto& [strand, low_to_high] : d.edges[e].closure_uses) {
            if (best_strand == -1 || strand < best_strand) {
                best_strand = strand;
                best_edge = e;
                best_dir = low_to_high ? 0 : 1;
            }
        }
    }
    if (best_edge == -1) {
        for (int i = 0; i < f.face_count; ++i)
            if (f.face_component[i] == comp) return i;
        return -1;
    }
    return f.side_face[best_edge][best_dir];
}

}  // namespace

Coloring checkerboard(const LinkDiagram& d, const Faces& f) {
    Coloring col;
    col.face_color.assign(f.face_count, -1);
    col.connected = (f.component_count + (int)d.circles.size()) <= 1;

    std::vector<std::vector<int>> adj(f.face_count);
    for (int e = 0; e < (int)d.edges.size(); ++e) {
        int a = f.side_face[e][0], b = f.side_face[e][1];
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (int comp = 0; comp < f.component_count; ++comp) {
        int outer = component_outer_face(d, f, comp);
        if (outer < 0) continue;
        std::vector<int> stack{outer};
        col.face_color[outer] = 0;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : adj[x]) {
                if (col.face_color[y] == -1) {
                    col.face_color[y] = 1 - col.face_color[x];
                    stack.push_back(y);
                } else if (col.face_color[y] == col.face_color[x]) {
                    throw ValidationError("diagram is not checkerboard colorable");
                }
            }
        }
    }
    if (!d.closure_ref.empty() && !d.closure_ref[0].on_circle && d.closure_ref[0].index >= 0) {
        int comp = f.crossing_component[d.edges[d.closure_ref[0].index].from.crossing];
        col.outer_face = component_outer_face(d, f, comp);
    }
    for (int c : col.face_color)
        if (c == 1) col.black_count++;
    col.black_count += (int)d.circles.size();
    return col;
}

Orientation orient_diagram(const LinkDiagram& d, const std::vector<std::string>& seeds,
                           bool auto_complete) {
    int E = (int)d.edges.size();
    Orientation o;
    o.edge_dir.assign(E, 0);
    o.oriented.assign(E, false);

    std::map<Port, std::pair<int, int>> tail_at, head_at;
    for (int e = 0; e < E; ++e) {
        tail_at[d.edges[e].from] = {e, 0};
        tail_at[d.edges[e].to] = {e, 1};
        head_at[d.edges[e].to] = {e, 0};
        head_at[d.edges[e].from] = {e, 1};
    }

    std::vector<int> dir(E, -1);  // chosen traversal dir, -1 unknown
    auto assign = [&](int e, int v) {
        if (dir[e] == -1) {
            dir[e] = v;
            return true;
        }
        if (dir[e] != v) throw ValidationError("conflicting strand orientations");
        return false;
    };

    // under-strand convention: slot 0 incoming, slot 2 outgoing
    for (int c = 0; c < (int)d.crossings.size(); ++c) {
        auto in = head_at.at({c, 0});
        assign(in.first, in.second);
        auto out = tail_at.at({c, 2});
        assign(out.first, out.second);
    }
    for (auto& s : seeds) {
        for (int e = 0; e < E; ++e) {
            auto& le = d.edges[e];
            for (size_t i = 0; i < le.labels.size(); ++i)
                if (le.labels[i] == s) assign(e, le.label_forward[i] ? 0 : 1);
        }
    }

    // over-strand continuity: the strand enters at slot 1 iff it leaves at 3
    // (x_{e1} xor x_{e3} fixed); propagate to a fixpoint
    struct Link {
        int e1, e3, parity;
    };
    std::vector<Link> links;
    for (int c = 0; c < (int)d.crossings.size(); ++c) {
        auto in1 = head_at.at({c, 1});
        auto out3 = tail_at.at({c, 3});
        // enters at 1 (dir of e1 == in1.second) iff leaves at 3
        links.push_back({in1.first, out3.first, in1.second ^ out3.second});
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& l : links) {
            if (dir[l.e1] != -1 && dir[l.e3] == -1) {
                assign(l.e3, dir[l.e1] ^ l.parity);
                changed = true;
            } else if (dir[l.e3] != -1 && dir[l.e1] == -1) {
                assign(l.e1, dir[l.e3] ^ l.parity);
                changed = true;
            } else if (dir[l.e1] != -1 && dir[l.e3] != -1) {
                if ((dir[l.e1] ^ dir[l.e3]) != l.parity)
                    throw ValidationError("conflicting strand orientations");
            }
        }
    }
    if (auto_complete) {
        for (int e = 0; e < E; ++e) {
            if (dir[e] != -1) continue;
            assign(e, 0);
            bool more = true;
            while (more) {
                more = false;
                for (auto& l : links) {
                    if (dir[l.e1] != -1 && dir[l.e3] == -1) {
                        assign(l.e3, dir[l.e1] ^ l.parity);
                        more = true;
                    } else if (dir[l.e3] != -1 && dir[l.e1] == -1) {
                        assign(l.e1, dir[l.e3] ^ l.parity);
                        more = true;
                    }
                }
            }
        }
    }
    for (int e = 0; e < E; ++e) {
        if (dir[e] != -1) {
            o.edge_dir[e] = dir[e];
            o.oriented[e] = true;
        }
    }
    return o;
}

std::vector<int> crossing_signs(const LinkDiagram& d, const Orientation& o) {
    std::map<Port, std::pair<int, int>> head_at;
    for (int e = 0; e < (int)d.edges.size(); ++e) {
        head_at[d.edges[e].to] = {e, 0};
        head_at[d.edges[e].from] = {e, 1};
    }
    std::vector<int> sign(d.crossings.size(), 0);
    for (int c = 0; c < (int)d.crossings.size(); ++c) {
        auto in3 = head_at.at({c, 3});
        if (!o.oriented[in3.first]) throw ValidationError("unoriented component at crossing");
        // positive when the over-strand enters at slot 3
        sign[c] = (o.edge_dir[in3.first] == in3.second) ? +1 : -1;
    }
    return sign;
}

int seifert_circles(const LinkDiagram& d, const Orientation& o) {
    auto sign = crossing_signs(d, o);
    // each port pairs with its smoothing partner and with the far end of its
    // long edge; circles = cycles of the resulting 2-regular graph
    auto pid = [&](const Port& p) { return p.crossing * 4 + p.slot; };
    int N = (int)d.crossings.size() * 4;
    std::vector<int> smooth_mate(N, -1), edge_mate(N, -1);
    for (int c = 0; c < (int)d.crossings.size(); ++c) {
        if (sign[c] > 0) {
            smooth_mate[c * 4 + 0] = c * 4 + 1;
            smooth_mate[c * 4 + 1] = c * 4 + 0;
            smooth_mate[c * 4 + 2] = c * 4 + 3;
            smooth_mate[c * 4 + 3] = c * 4 + 2;
        } else {
            smooth_mate[c * 4 + 0] = c * 4 + 3;
            smooth_mate[c * 4 + 3] = c * 4 + 0;
            smooth_mate[c * 4 + 1] = c * 4 + 2;
            smooth_mate[c * 4 + 2] = c * 4 + 1;
        }
    }
    for (auto& e : d.edges) {
        edge_mate[pid(e.from)] = pid(e.to);
        edge_mate[pid(e.to)] = pid(e.from);
    }
    std::vector<bool> seen(N, false);
    int s = 0;
    for (int p = 0; p < N; ++p) {
        if (seen[p]) continue;
        ++s;
        int cur = p;
        while (!seen[cur]) {
            seen[cur] = true;
            seen[smooth_mate[cur]] = true;
            cur = edge_mate[smooth_mate[cur]];
        }
    }
    return s + (int)d.circles.size();
}

DiagramStats diagram_stats(const TangleDiagram& d, bool need_seifert) {
    DiagramStats st;
    LinkDiagram L = close_with_trivial_tangle(d);
    Faces f = compute_faces(L);
    Coloring col = checkerboard(L, f);
    st.c = (int)L.crossings.size();
    st.b = col.black_count;
    if (need_seifert) {
        Orientation o = orient_diagram(L, d.orient_seeds, true);
        st.s = seifert_circles(L, o);
    }
    return st;
}

}  // namespace tc
