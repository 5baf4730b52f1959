#pragma once

#include <vector>

#include "modray/coding.hpp"
#include "modray/moebius.hpp"

namespace modray {

/// A vertex of the Bruhat-Tits tree: the class g * PGL2(O) of a nonsingular
/// matrix over A.  Representatives are never canonicalized; equality is
/// distance zero.
class TreeVertex {
public:
    explicit TreeVertex(Homography rep) : rep_(std::move(rep)) {}
    static TreeVertex base(const Field& f) { return TreeVertex(Homography::identity(f)); }
    const Homography& rep() const { return rep_; }
    TreeVertex translated(const Homography& g) const { return TreeVertex(g * rep_); }

private:
    Homography rep_;
};

/// The standard tree metric via elementary divisors: for M = rep(v)^-1 rep(w)
/// with polynomial entries, d = |v_inf(det M) - 2 * min entry valuation|.
int vertex_distance(const TreeVertex& v, const TreeVertex& w);

struct GeodesicReport {
    bool aligned = true;
    int violation_index = 0;  // meaningful when !aligned
    std::vector<int> step_lengths;  // d(x_{n-1}, x_n) per interior step
};

/// Checks d(x_{n-1}, x_{n+1}) = d(x_{n-1}, x_n) + d(x_n, x_{n+1}) for every
/// interior index of the frame window, with x_n = gamma_n * base.
GeodesicReport validate_geodesic(const Window<Homography>& frames);

/// The horoball sojourn lengths d(x_{n-1}, x_n), indexed like the letters
/// (entry for each n with n-1 and n in the frame window).
std::vector<int> sojourn_lengths(const Window<Homography>& frames);

}  // namespace modray
