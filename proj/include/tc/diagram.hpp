#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tc {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Crossing of a planar diagram. Edge labels are listed counterclockwise
// starting at the incoming under-strand, so e[0] -> e[2] is the under-strand
// passage and e[1], e[3] carry the over-strand.
struct Crossing {
    std::array<std::string, 4> e;
};

// Planar diagram of an n-tangle: 2n boundary endpoints on a circle (listed
// counterclockwise), plus optional crossing-free closed circles.
struct TangleDiagram {
    int n = 0;
    std::vector<Crossing> crossings;
    std::vector<std::string> boundary;  // 2n labels in circular order
    std::vector<std::vector<std::string>> closed_components;
    std::vector<std::string> orient_seeds;
};

TangleDiagram parse_tangle(const std::string& text);
std::string serialize_tangle(const TangleDiagram& d);

// One of the four slots of a crossing.
struct Port {
    int crossing = -1;
    int slot = -1;
    bool operator==(const Port&) const = default;
    bool operator<(const Port& o) const {
        return crossing != o.crossing ? crossing < o.crossing : slot < o.slot;
    }
};

// Closed diagram D(T0 u T): boundary endpoints joined by crossing-free
// closure arcs in the nested pattern, position i to position 2n+1-i.
//
// The 4-valent structure is stored as "long edges": maximal chains between
// two ports, possibly running through closure arcs.
struct LongEdge {
    Port from, to;
    std::vector<std::string> labels;   // edge labels met in from->to order
    std::vector<bool> label_forward;   // from->to passes label first->second occurrence
    // closure arcs met in from->to order: (strand, crossed low position -> high)
    std::vector<std::pair<int, bool>> closure_uses;
};

struct LinkDiagram {
    int n = 0;
    std::vector<Crossing> crossings;
    std::vector<LongEdge> edges;
    struct FreeCircle {
        std::vector<std::string> labels;
        std::vector<int> closure_strands;
    };
    std::vector<FreeCircle> circles;
    struct ClosureRef {
        bool on_circle = false;
        int index = -1;
    };
    std::vector<ClosureRef> closure_ref;  // per T0 strand
};

LinkDiagram close_with_trivial_tangle(const TangleDiagram& d);

// Faces of the closed diagram. A directed long edge is (edge, dir) with
// dir 0 = from->to; faces are left-hand orbits of the rotation walk.
struct Faces {
    std::vector<std::array<int, 2>> side_face;  // face on the left of each direction
    int face_count = 0;
    std::vector<int> face_component;
    std::vector<int> crossing_component;
    int component_count = 0;  // crossing-bearing components only
};

Faces compute_faces(const LinkDiagram& d);

struct Coloring {
    std::vector<int> face_color;  // 0 = white, 1 = black
    int black_count = 0;          // black faces plus one per free circle
    bool connected = true;
    int outer_face = -1;  // outer face of the component carrying strand 1
};

// Proper 2-coloring, unbounded face white. Free circles are black inside.
Coloring checkerboard(const LinkDiagram& d, const Faces& f);

// Orientation: traversal direction per long edge (0 = from->to).
struct Orientation {
    std::vector<int> edge_dir;
    std::vector<bool> oriented;
};

// Derive orientations from the under-strand convention and O seeds. With
// auto_complete, components the convention leaves free get a default.
Orientation orient_diagram(const LinkDiagram& d, const std::vector<std::string>& seeds,
                           bool auto_complete);

// Seifert circle count after coherent smoothing. Throws if some crossing's
// over-strand is unoriented.
int seifert_circles(const LinkDiagram& d, const Orientation& o);

std::vector<int> crossing_signs(const LinkDiagram& d, const Orientation& o);

struct DiagramStats {
    int c = 0;
    int b = 0;
    int s = 0;
};

DiagramStats diagram_stats(const TangleDiagram& d, bool need_seifert = true);

}  // namespace tc
