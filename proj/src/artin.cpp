#include "modray/artin.hpp"

namespace modray {

std::string to_string(CfTermination t) {
    switch (t) {
        case CfTermination::ExactRational: return "exact-rational";
        case CfTermination::PrecisionExhausted: return "precision-exhausted";
        case CfTermination::LengthReached: return "requested-length-reached";
    }
    return "?";
}

ArtinStep artin_step(const LaurentSeries& f) {
    if (f.is_exact_zero()) throw DivisionByZero("Artin map at exact zero");
    if (f.is_zero_to_prec())
        throw UncertainValuation("Artin map on a series with uncertain valuation");
    if (f.val() < 1) throw DomainError("Artin map needs val >= 1 (f in X^-1*O)");
    LaurentSeries g = f.invert();
    if (!g.exact() && g.prec() < 0)
        throw PrecisionExhausted("cannot certify the integer part of 1/f");
    Poly a = g.integer_part();  // degree = val(f) >= 1
    return {PartialQuotient(std::move(a)), g.fractional_part()};
}

LaurentSeries artin_map(const LaurentSeries& f) { return artin_step(f).next; }

CfExpansion cf_expand(const LaurentSeries& f, int max_terms) {
    if (f.is_normal() && f.val() < 1)
        throw DomainError("continued fraction expansion needs f in X^-1*O");
    CfExpansion out;
    LaurentSeries cur = f;
    for (;;) {
        if (cur.is_exact_zero()) {
            out.terminated = CfTermination::ExactRational;
            break;
        }
        if (cur.is_zero_to_prec()) {
            out.terminated = CfTermination::PrecisionExhausted;
            break;
        }
        if (static_cast<int>(out.terms.size()) >= max_terms) {
            out.terminated = CfTermination::LengthReached;
            break;
        }
        // Budget rule: emitting a quotient of degree v costs 2v certified
        // coefficients; stop while at least one remains afterwards.
        if (!cur.exact() && cur.prec() - 2 * cur.val() < 1) {
            out.terminated = CfTermination::PrecisionExhausted;
            break;
        }
        ArtinStep step = artin_step(cur);
        out.budget_spent += 2 * step.quotient.degree();
        out.terms.push_back(std::move(step.quotient));
        cur = std::move(step.next);
    }
    return out;
}

RationalFunction cf_eval(const std::vector<PartialQuotient>& terms) {
    if (terms.empty()) throw DomainError("empty continued fraction");
    const Field& f = terms.front().poly().field();
    // Fold from the tail: r <- 1/(a_i + r); |a_i + r| > 1 keeps r nonzero.
    RationalFunction r = RationalFunction::zero(f);
    for (size_t i = terms.size(); i-- > 0;)
        r = (RationalFunction::from_poly(terms[i].poly()) + r).inverse();
    return r;
}

int cf_budget(int prec, const std::vector<PartialQuotient>& terms) {
    int spent = 0;
    for (const auto& t : terms) spent += 2 * t.degree();
    return prec - spent;
}

}  // namespace modray
