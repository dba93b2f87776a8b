#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tc/diagram.hpp"

namespace tc {

struct BandEnd {
    int disk = 0;   // 1-based
    int side = +1;  // +1 front, -1 back
    int slot = 0;   // 1-based, unique per disk across both sides
};

struct BandSpec {
    BandEnd a, z;
    int twists = 0;  // signed half-twists
    // Side-flip boxes along the corridor: -1 derives the planar rule
    // (one box when the end sides differ), 0/1 override it. Seifert
    // extractions set 0: stacked disks realize the side change flat.
    int flips = -1;

    int flip_boxes() const { return flips >= 0 ? flips : (a.side != z.side ? 1 : 0); }
};

// declared crossing between two band cores, ordered along each band
struct CoreCross {
    int over_band = 0;  // band indices, 0-based
    int under_band = 0;
    int over_pos = 0;  // order along the respective corridors
    int under_pos = 0;
    int sign = +1;
};

enum class Freeness { none, constructed, user_asserted };

struct DiskBandRepresentation {
    int n = 0;
    // per disk: (slot, side) in order along the attachment arc
    std::vector<std::vector<std::pair<int, int>>> rotation;
    std::vector<BandSpec> bands;
    std::vector<CoreCross> core_crossings;
    Freeness free_flag = Freeness::none;

    int m() const { return (int)bands.size(); }
};

void validate_dbr(const DiskBandRepresentation& r);

// Disk coorientations making every band collar-compatible, or nullopt when
// the surface is nonorientable. Decided by breadth-first switching on the
// band parity labels w_j = side_a * side_z * (-1)^twists.
std::optional<std::vector<int>> disk_coorientations(const DiskBandRepresentation& r);

bool is_bicollared(const DiskBandRepresentation& r);

struct EulerData {
    int chi = 0;
    int arcs = 0;     // boundary components meeting the ball boundary
    int circles = 0;  // closed boundary components
};

EulerData euler_genus(const DiskBandRepresentation& r);

// Prop.-6-style extractions from a closed-off tangle diagram.
DiskBandRepresentation checkerboard_diskband(const TangleDiagram& d, bool coalesce = true);
DiskBandRepresentation seifert_diskband(const TangleDiagram& d);

// Direct constructions.
DiskBandRepresentation pretzel_dbr(const std::vector<int>& half_twists);
DiskBandRepresentation one_band_rep(int side_a, int side_z, int twists);

}  // namespace tc
