#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modray/rational.hpp"

namespace modray {

/// Truncated element of K^ = k((X^-1)).
///
/// Index i carries the coefficient of X^-i; the valuation v is the smallest
/// index with a nonzero coefficient, |f| = q^-v.  A series stores exact
/// coefficients for every index in [val, prec] ("certified window").  Indices
/// below val are zero by definition of the valuation; indices above prec are
/// unknown, unless the series is `exact` (a fully known Laurent polynomial,
/// zero beyond its support).
///
/// Three states:
///  - Normal:     val <= prec, coefficient at val nonzero.
///  - ExactZero:  the zero element, known exactly.
///  - ZeroToPrec: every certified coefficient (index <= prec) vanishes but
///                the tail is unknown; the valuation is uncertain.
///                Operations that consume the valuation (mul, invert, abs)
///                refuse this state with UncertainValuation.
class LaurentSeries {
public:
    enum class State { Normal, ExactZero, ZeroToPrec };

    static LaurentSeries exact_zero(const Field& f);
    static LaurentSeries zero_to_prec(const Field& f, int prec);
    /// Coefficients for indices val, val+1, ...; normalized on entry.
    static LaurentSeries from_coeffs(const Field& f, int val, std::vector<uint32_t> coeffs,
                                     int prec, bool exact = false);
    static LaurentSeries monomial(const Field& f, uint32_t c, int index, int prec,
                                  bool exact = false);
    /// Embeds a polynomial; exact, valuation -deg.
    static LaurentSeries from_poly(const Poly& p, int prec);
    /// Expansion of P/Q through index prec.  Rejects prec < v_inf(P/Q).
    /// Result is exact iff f is a polynomial.
    static LaurentSeries from_rational(const RationalFunction& f, int prec);

    const Field& field() const { return *f_; }
    State state() const { return state_; }
    bool is_exact_zero() const { return state_ == State::ExactZero; }
    bool is_zero_to_prec() const { return state_ == State::ZeroToPrec; }
    bool is_normal() const { return state_ == State::Normal; }
    /// All coefficients outside the stored window are known to be zero.
    bool exact() const { return exact_; }

    /// Valuation; requires a certain valuation (Normal).
    int val() const;
    int prec() const { return prec_; }
    /// Coefficient at index i; requires i <= prec or an exact series.
    uint32_t coeff(int i) const;

    /// |f| as the exponent e with |f| = q^e, i.e. e = -v.  nullopt on exact
    /// zero (|0| = 0); UncertainValuation on ZeroToPrec.
    std::optional<int> abs_exponent() const;

    LaurentSeries operator+(const LaurentSeries& o) const;
    LaurentSeries operator-(const LaurentSeries& o) const;
    LaurentSeries operator-() const;
    /// prec(f*g) = min(prec f + val g, prec g + val f).
    LaurentSeries operator*(const LaurentSeries& o) const;
    /// 1/f: valuation -v, precision N - 2v.  DivisionByZero on exact zero,
    /// UncertainValuation on ZeroToPrec.
    LaurentSeries invert() const;

    /// f = [f] + {f}: requires prec >= 0 (all polynomial-range coefficients
    /// certified), else PrecisionExhausted.
    Poly integer_part() const;
    LaurentSeries fractional_part() const;

    /// Restriction of the certified window (new_prec <= prec unless exact).
    LaurentSeries truncated(int new_prec) const;

    /// Structural equality of state, window and coefficients.
    bool operator==(const LaurentSeries& o) const;
    bool operator!=(const LaurentSeries& o) const { return !(*this == o); }

    /// True if both series are certified equal through index `through`.
    bool agrees_with(const LaurentSeries& o, int through) const;

private:
    explicit LaurentSeries(const Field& f) : f_(&f) {}
    void normalize();
    uint32_t stored(int i) const {  // window lookup without certification check
        int k = i - val_;
        return (k < 0 || k >= static_cast<int>(c_.size())) ? 0 : c_[static_cast<size_t>(k)];
    }

    const Field* f_;
    State state_ = State::ExactZero;
    bool exact_ = true;
    int val_ = 0;   // meaningful for Normal
    int prec_ = 0;  // certified-through index (Normal, ZeroToPrec)
    std::vector<uint32_t> c_;
};

/// d_inf(f, g) = |f - g| as a q-exponent; nullopt when the difference is
/// exactly zero.  UncertainValuation when equality holds only to precision.
std::optional<int> distance_exponent(const LaurentSeries& f, const LaurentSeries& g);

}  // namespace modray
