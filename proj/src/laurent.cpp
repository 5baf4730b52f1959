#include "modray/laurent.hpp"

#include <algorithm>
#include <limits>

namespace modray {

namespace {
constexpr int kInfPrec = 1 << 29;  // ExactZero certification bound
}

LaurentSeries LaurentSeries::exact_zero(const Field& f) {
    LaurentSeries s(f);
    s.state_ = State::ExactZero;
    s.exact_ = true;
    s.prec_ = kInfPrec;
    return s;
}

LaurentSeries LaurentSeries::zero_to_prec(const Field& f, int prec) {
    LaurentSeries s(f);
    s.state_ = State::ZeroToPrec;
    s.exact_ = false;
    s.prec_ = prec;
    return s;
}

LaurentSeries LaurentSeries::from_coeffs(const Field& f, int val, std::vector<uint32_t> coeffs,
                                         int prec, bool exact) {
    LaurentSeries s(f);
    s.state_ = State::Normal;
    s.exact_ = exact;
    s.val_ = val;
    s.c_ = std::move(coeffs);
    if (!exact) {
        int window = prec - val + 1;
        if (window < 1) throw DomainError("empty certified window");
        if (static_cast<int>(s.c_.size()) < window)
            throw DomainError("fewer coefficients than the claimed precision");
        s.c_.resize(static_cast<size_t>(window));
    }
    s.prec_ = prec;
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::monomial(const Field& f, uint32_t c, int index, int prec,
                                      bool exact) {
    if (c == 0) return exact ? exact_zero(f) : zero_to_prec(f, prec);
    LaurentSeries s(f);
    s.state_ = State::Normal;
    s.exact_ = exact;
    s.val_ = index;
    s.prec_ = prec;
    if (exact) {
        s.c_ = {c};
    } else {
        if (prec < index) throw DomainError("monomial above the claimed precision");
        s.c_.assign(static_cast<size_t>(prec - index + 1), 0);
        s.c_[0] = c;
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::from_poly(const Poly& p, int prec) {
    if (p.is_zero()) return exact_zero(p.field());
    int val = -p.degree();
    std::vector<uint32_t> coeffs(p.coeffs().rbegin(), p.coeffs().rend());
    LaurentSeries s(p.field());
    s.state_ = State::Normal;
    s.exact_ = true;
    s.val_ = val;
    s.prec_ = std::max(prec, 0);
    s.c_ = std::move(coeffs);
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::from_rational(const RationalFunction& f, int prec) {
    if (f.is_zero()) return exact_zero(f.field());
    if (f.is_poly()) return from_poly(f.num(), prec);
    const Field& k = f.field();
    int degn = f.num().degree(), degd = f.den().degree();
    int val = degd - degn;
    if (prec < val) throw DomainError("requested precision below the valuation");
    // Descending-power long division: with N_j, D_j the coefficients counted
    // down from the top degree, Q_j = (N_j - sum_{l>=1} D_l Q_{j-l}) / D_0.
    int len = prec - val + 1;
    std::vector<uint32_t> q(static_cast<size_t>(len), 0);
    uint32_t d0_inv = k.inv(f.den().leading());
    for (int j = 0; j < len; ++j) {
        uint32_t acc = f.num().coeff(degn - j);
        for (int l = 1; l <= std::min(j, degd); ++l)
            acc = k.sub(acc, k.mul(f.den().coeff(degd - l), q[static_cast<size_t>(j - l)]));
        q[static_cast<size_t>(j)] = k.mul(acc, d0_inv);
    }
    return from_coeffs(k, val, std::move(q), prec, false);
}

void LaurentSeries::normalize() {
    if (state_ != State::Normal) {
        c_.clear();
        if (state_ == State::ExactZero) {
            exact_ = true;
            prec_ = kInfPrec;
        } else {
            exact_ = false;
        }
        return;
    }
    size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        if (exact_) {
            state_ = State::ExactZero;
            prec_ = kInfPrec;
        } else {
            state_ = State::ZeroToPrec;
        }
        return;
    }
    val_ += static_cast<int>(lead);
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
    if (exact_) {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
        prec_ = std::max(prec_, val_ + static_cast<int>(c_.size()) - 1);
    }
}

int LaurentSeries::val() const {
    if (state_ == State::Normal) return val_;
    if (state_ == State::ExactZero) throw DivisionByZero("valuation of exact zero");
    throw UncertainValuation("valuation uncertain: zero to precision");
}

uint32_t LaurentSeries::coeff(int i) const {
    if (state_ == State::ExactZero) return 0;
    if (!exact_ && i > prec_) throw PrecisionExhausted("coefficient beyond certified precision");
    return state_ == State::Normal ? stored(i) : 0;
}

std::optional<int> LaurentSeries::abs_exponent() const {
    if (state_ == State::ExactZero) return std::nullopt;
    return -val();  // throws UncertainValuation on ZeroToPrec
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& o) const {
    if (*f_ != *o.f_) throw DomainError("field mismatch");
    if (state_ == State::ExactZero) return o;
    if (o.state_ == State::ExactZero) return *this;
    int prec = std::min(prec_, o.prec_);
    auto lo_of = [](const LaurentSeries& s) {
        return s.state_ == State::Normal ? s.val_ : s.prec_ + 1;
    };
    int lo = std::min(lo_of(*this), lo_of(o));
    bool exact = exact_ && o.exact_;
    int hi = prec;
    if (exact) {
        int support_end = std::max(val_ + static_cast<int>(c_.size()),
                                   o.val_ + static_cast<int>(o.c_.size())) -
                          1;
        hi = std::max(hi, support_end);
    }
    if (lo > hi) {
        LaurentSeries s(*f_);
        s.state_ = State::ZeroToPrec;
        s.exact_ = false;
        s.prec_ = prec;
        s.normalize();
        return s;
    }
    LaurentSeries s(*f_);
    s.state_ = State::Normal;
    s.exact_ = exact;
    s.val_ = lo;
    s.prec_ = std::max(prec, exact ? hi : prec);
    s.c_.resize(static_cast<size_t>(hi - lo + 1));
    for (int i = lo; i <= hi; ++i)
        s.c_[static_cast<size_t>(i - lo)] = f_->add(stored(i), o.stored(i));
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s = *this;
    for (auto& c : s.c_) c = f_->neg(c);
    return s;
}

LaurentSeries LaurentSeries::operator-(const LaurentSeries& o) const { return *this + (-o); }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    if (*f_ != *o.f_) throw DomainError("field mismatch");
    if (state_ == State::ExactZero || o.state_ == State::ExactZero) return exact_zero(*f_);
    // A zero-to-precision factor against a certain one: the product is zero
    // through prec_z + val_other (only the normal factor's valuation is
    // consumed).  Both uncertain is refused.
    if (state_ == State::ZeroToPrec && o.state_ == State::Normal)
        return zero_to_prec(*f_, prec_ + o.val_);
    if (state_ == State::Normal && o.state_ == State::ZeroToPrec)
        return zero_to_prec(*f_, o.prec_ + val_);
    if (state_ != State::Normal || o.state_ != State::Normal)
        throw UncertainValuation("multiplying a series with uncertain valuation");
    int val = val_ + o.val_;
    int prec = std::min(prec_ + o.val_, o.prec_ + val_);
    bool exact = exact_ && o.exact_;
    int hi = prec;
    if (exact) {
        int support_end = (val_ + static_cast<int>(c_.size()) - 1) +
                          (o.val_ + static_cast<int>(o.c_.size()) - 1);
        hi = std::max(hi, support_end);
    }
    LaurentSeries s(*f_);
    s.state_ = State::Normal;
    s.exact_ = exact;
    s.val_ = val;
    s.prec_ = std::max(prec, exact ? hi : prec);
    s.c_.assign(static_cast<size_t>(hi - val + 1), 0);
    int la = static_cast<int>(c_.size()), lb = static_cast<int>(o.c_.size());
    for (int i = 0; i < la; ++i) {
        uint32_t a = c_[static_cast<size_t>(i)];
        if (a == 0) continue;
        int jmax = std::min(lb - 1, hi - val - i);
        for (int j = 0; j <= jmax; ++j) {
            size_t k = static_cast<size_t>(i + j);
            s.c_[k] = f_->add(s.c_[k], f_->mul(a, o.c_[static_cast<size_t>(j)]));
        }
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::invert() const {
    if (state_ == State::ExactZero) throw DivisionByZero("inverse of exact zero");
    if (state_ == State::ZeroToPrec)
        throw UncertainValuation("inverting a series with uncertain valuation");
    int v = val_, n = prec_;
    int out_prec = n - 2 * v;
    if (out_prec < -v) throw PrecisionExhausted("no certified coefficients for the inverse");
    int len = out_prec + v + 1;  // = n - v + 1
    const Field& k = *f_;
    std::vector<uint32_t> q(static_cast<size_t>(len), 0);
    uint32_t d0_inv = k.inv(c_[0]);
    q[0] = d0_inv;
    for (int j = 1; j < len; ++j) {
        uint32_t acc = 0;
        int lmax = std::min(j, static_cast<int>(c_.size()) - 1);
        for (int l = 1; l <= lmax; ++l)
            acc = k.add(acc, k.mul(c_[static_cast<size_t>(l)], q[static_cast<size_t>(j - l)]));
        q[static_cast<size_t>(j)] = k.neg(k.mul(acc, d0_inv));
    }
    bool exact = exact_ && c_.size() == 1;  // only monomials invert to finite series
    if (exact) {
        return monomial(k, d0_inv, -v, out_prec, true);
    }
    return from_coeffs(k, -v, std::move(q), out_prec, false);
}

Poly LaurentSeries::integer_part() const {
    if (!exact_ && prec_ < 0)
        throw PrecisionExhausted("polynomial-range coefficients not certified");
    if (state_ != State::Normal || val_ > 0) return Poly::zero(*f_);
    std::vector<uint32_t> coeffs(static_cast<size_t>(-val_) + 1);
    for (int j = 0; j <= -val_; ++j) coeffs[static_cast<size_t>(j)] = stored(-j);
    return Poly(*f_, std::move(coeffs));
}

LaurentSeries LaurentSeries::fractional_part() const {
    if (!exact_ && prec_ < 0)
        throw PrecisionExhausted("polynomial-range coefficients not certified");
    if (state_ != State::Normal) return *this;
    if (val_ >= 1) return *this;
    int hi = exact_ ? std::max(prec_, val_ + static_cast<int>(c_.size()) - 1) : prec_;
    LaurentSeries s(*f_);
    if (hi < 1) {
        s.state_ = exact_ ? State::ExactZero : State::ZeroToPrec;
        s.exact_ = exact_;
        s.prec_ = prec_;
        s.normalize();
        return s;
    }
    s.state_ = State::Normal;
    s.exact_ = exact_;
    s.val_ = 1;
    s.prec_ = prec_;
    s.c_.resize(static_cast<size_t>(hi));
    for (int i = 1; i <= hi; ++i) s.c_[static_cast<size_t>(i - 1)] = stored(i);
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::truncated(int new_prec) const {
    // Forget everything above new_prec, including exactness.
    LaurentSeries s(*f_);
    s.exact_ = false;
    s.prec_ = new_prec;
    if (state_ == State::Normal && val_ <= new_prec) {
        if (!exact_ && new_prec > prec_)
            throw DomainError("cannot raise the precision of an inexact series");
        s.state_ = State::Normal;
        s.val_ = val_;
        s.c_.resize(static_cast<size_t>(new_prec - val_ + 1));
        for (int i = val_; i <= new_prec; ++i) s.c_[static_cast<size_t>(i - val_)] = stored(i);
    } else {
        if (state_ == State::Normal && !exact_ && new_prec > prec_)
            throw DomainError("cannot raise the precision of an inexact series");
        if (state_ == State::ZeroToPrec && new_prec > prec_)
            throw DomainError("cannot raise the precision of an inexact series");
        s.state_ = State::ZeroToPrec;
    }
    s.normalize();
    return s;
}

bool LaurentSeries::operator==(const LaurentSeries& o) const {
    if (*f_ != *o.f_ || state_ != o.state_ || exact_ != o.exact_) return false;
    if (state_ == State::ExactZero) return true;
    if (prec_ != o.prec_) return false;
    if (state_ == State::ZeroToPrec) return true;
    return val_ == o.val_ && c_ == o.c_;
}

bool LaurentSeries::agrees_with(const LaurentSeries& o, int through) const {
    auto certified = [&](const LaurentSeries& s) {
        return s.exact_ || s.prec_ >= through;
    };
    if (!certified(*this) || !certified(o)) return false;
    int lo = std::min(state_ == State::Normal ? val_ : through,
                      o.state_ == State::Normal ? o.val_ : through);
    for (int i = lo; i <= through; ++i) {
        uint32_t a = state_ == State::Normal ? stored(i) : 0;
        uint32_t b = o.state_ == State::Normal ? o.stored(i) : 0;
        if (a != b) return false;
    }
    return true;
}

std::optional<int> distance_exponent(const LaurentSeries& f, const LaurentSeries& g) {
    return (f - g).abs_exponent();
}

}  // namespace modray
