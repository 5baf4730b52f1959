#include "modray/tree.hpp"

#include <cstdlib>

namespace modray {

int vertex_distance(const TreeVertex& v, const TreeVertex& w) {
    Homography m = v.rep().inverse() * w.rep();
    // Entries are polynomial (canonical form), so v_inf(e) = -deg e; zero
    // entries (valuation +inf) never realize the minimum.
    int max_deg = Poly::kDegZero;
    for (const Poly* e : {&m.a(), &m.b(), &m.c(), &m.d()})
        if (!e->is_zero()) max_deg = std::max(max_deg, e->degree());
    int det_val = -m.det().degree();
    int min_entry_val = -max_deg;
    return std::abs(det_val - 2 * min_entry_val);
}

GeodesicReport validate_geodesic(const Window<Homography>& frames) {
    GeodesicReport rep;
    std::vector<TreeVertex> x;
    x.reserve(frames.size());
    for (int n = frames.lo(); n <= frames.hi(); ++n)
        x.push_back(TreeVertex(frames.at(n)));
    for (size_t k = 0; k + 1 < x.size(); ++k)
        rep.step_lengths.push_back(vertex_distance(x[k], x[k + 1]));
    for (size_t k = 1; k + 1 < x.size(); ++k) {
        int through = vertex_distance(x[k - 1], x[k + 1]);
        if (through != rep.step_lengths[k - 1] + rep.step_lengths[k]) {
            rep.aligned = false;
            rep.violation_index = frames.lo() + static_cast<int>(k);
            break;
        }
    }
    return rep;
}

std::vector<int> sojourn_lengths(const Window<Homography>& frames) {
    std::vector<int> out;
    for (int n = frames.lo() + 1; n <= frames.hi(); ++n)
        out.push_back(vertex_distance(TreeVertex(frames.at(n - 1)), TreeVertex(frames.at(n))));
    return out;
}

}  // namespace modray
