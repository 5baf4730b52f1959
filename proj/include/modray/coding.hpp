#pragma once

#include <map>
#include <vector>

#include "modray/artin.hpp"
#include "modray/moebius.hpp"

namespace modray {

/// A geodesic through the base vertex in endpoint coordinates: the backward
/// endpoint lies in J (integer part of degree >= 1), the forward endpoint in
/// X^-1*O.  Both are finite-precision truncations of irrational series; an
/// iterate reaching an exact rational value is a terminal event.
class GeodesicSection {
public:
    GeodesicSection(LaurentSeries backward, LaurentSeries forward);
    const LaurentSeries& backward() const { return backward_; }
    const LaurentSeries& forward() const { return forward_; }
    const Field& field() const { return forward_.field(); }

private:
    LaurentSeries backward_, forward_;
};

/// A bilateral window of values indexed by a contiguous range of integers.
template <typename T>
class Window {
public:
    Window(int lo, std::vector<T> values) : lo_(lo), v_(std::move(values)) {}
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(v_.size()) - 1; }
    bool contains(int n) const { return n >= lo() && n <= hi(); }
    const T& at(int n) const {
        if (!contains(n)) throw DomainError("index outside the coded window");
        return v_[static_cast<size_t>(n - lo_)];
    }
    const std::vector<T>& values() const { return v_; }
    size_t size() const { return v_.size(); }
    bool operator==(const Window& o) const { return lo_ == o.lo_ && v_ == o.v_; }
    bool operator!=(const Window& o) const { return !(*this == o); }

    /// The left shift by k: result.at(n) = this->at(n + k).
    Window shifted(int k) const { return Window(lo_ - k, v_); }

protected:
    int lo_;
    std::vector<T> v_;
};

using QuotientSeq = Window<PartialQuotient>;

/// A window of affine letters, each in Gamma'_inf (translation degree >= 1).
class BetaSeq : public Window<AffineMap> {
public:
    BetaSeq(int lo, std::vector<AffineMap> values);
};

/// Time reversal kappa: (kappa s)_n = s_{-n}^{-1}.  An involution.
BetaSeq time_reversal(const Window<AffineMap>& seq);

/// The first-return map on sections:
///   (backward, forward) -> (1/backward - a1, artin(forward)),  a1 = [1/forward].
/// The emitted quotient a1 is returned alongside the new section.
struct FirstReturnStep {
    GeodesicSection section;
    PartialQuotient quotient;
};
FirstReturnStep first_return(const GeodesicSection& s);

/// The bilateral quotient coding on the window [-n_back, n_fwd]: positive
/// indices hold the expansion of the forward endpoint, index -n (n >= 0)
/// holds term n+1 of the expansion of -1/backward.  PrecisionExhausted if
/// either expansion cannot fill its half of the window.
QuotientSeq code_quotients(const GeodesicSection& s, int n_back, int n_fwd);

/// The decorated coding on [-n_back, n_fwd] together with the frames used to
/// produce it.  frames.at(n) sends (infinity, 1, 0) to the n-th triple
/// (horoball center, decoration center, next horoball center); frames.at(0)
/// is the identity.  letters.at(n) = inversion * frames(n-1)^-1 * frames(n).
/// The reduced translation parts are cross-checked against code_quotients on
/// every call.
struct DecoratedCoding {
    BetaSeq letters;
    Window<Homography> frames;  // indices [-n_back-1, n_fwd]
    QuotientSeq quotients;
};
DecoratedCoding code_decorated(const GeodesicSection& s, int n_back, int n_fwd);

/// Frames from letters: gamma_0 = id, gamma_n = gamma_{n-1} * i * beta_n,
/// extended both ways across the window.  Result covers [lo-1, hi] for a
/// letter window [lo, hi] with lo <= 1 and hi >= 0.
Window<Homography> frames_from_letters(const BetaSeq& seq);

/// The section coding the reversed geodesic: (1/forward, 1/backward).
/// Its letters equal time_reversal(shift by 1) of the original letters.
GeodesicSection reversed_section(const GeodesicSection& s);

}  // namespace modray
