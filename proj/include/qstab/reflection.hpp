#pragma once
#include <vector>

#include "qstab/rep.hpp"

namespace qstab {

/// Reverse every arrow incident to k; names and vertex order are kept.
Quiver reflect_quiver(const Quiver& q, int k);

/// BGP reflection at a sink k: new space at k is ker(sum of incoming maps).
Rep reflect_at_sink(const Rep& x, int k);
/// BGP reflection at a source k: new space at k is coker(sum of outgoing maps).
Rep reflect_at_source(const Rep& x, int k);
RepMap reflect_map_at_sink(const Rep& x, const Rep& y, const RepMap& f, int k);
RepMap reflect_map_at_source(const Rep& x, const Rep& y, const RepMap& f, int k);

/// Vertex and arrow bijection from one quiver onto another.
struct QuiverIso {
    std::vector<int> vertex;
    std::vector<int> arrow;
};
/// Finds an isomorphism preserving arrow endpoints; throws if none exists.
QuiverIso find_quiver_iso(const Quiver& from, const Quiver& to);
Rep transport(const Rep& x, const Quiver& to, const QuiverIso& iso);
RepMap transport_map(const RepMap& f, const QuiverIso& iso);

}  // namespace qstab
