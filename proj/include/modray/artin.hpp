#pragma once

#include <string>
#include <vector>

#include "modray/laurent.hpp"

namespace modray {

/// A partial quotient a in A - k (deg a >= 1).  Checked at construction.
class PartialQuotient {
public:
    explicit PartialQuotient(Poly a) : a_(std::move(a)) {
        if (a_.degree() < 1) throw DomainError("partial quotient must have degree >= 1");
    }
    const Poly& poly() const { return a_; }
    int degree() const { return a_.degree(); }
    bool operator==(const PartialQuotient& o) const { return a_ == o.a_; }
    bool operator!=(const PartialQuotient& o) const { return !(*this == o); }

private:
    Poly a_;
};

enum class CfTermination { ExactRational, PrecisionExhausted, LengthReached };

std::string to_string(CfTermination t);

struct CfExpansion {
    std::vector<PartialQuotient> terms;
    CfTermination terminated = CfTermination::LengthReached;
    /// Precision spent: 2 * sum of the quotient degrees.
    int budget_spent = 0;
};

/// The Artin map f -> {1/f} on X^-1*O - {0}.  Precision drops by exactly
/// 2*val(f).  DomainError outside X^-1*O, DivisionByZero on exact zero.
LaurentSeries artin_map(const LaurentSeries& f);

/// One Artin step returning the emitted quotient a = [1/f] alongside {1/f}.
struct ArtinStep {
    PartialQuotient quotient;
    LaurentSeries next;
};
ArtinStep artin_step(const LaurentSeries& f);

/// Iterate the Artin map, collecting quotients.  terms[n] = a_{n+1}.  Stops
/// on exact zero (certified rational), on precision exhaustion (the budget
/// rule below, or an uncertain-valuation iterate), or after max_terms.
CfExpansion cf_expand(const LaurentSeries& f, int max_terms = 64);

/// Exact value of [0; a_1, ..., a_m].
RationalFunction cf_eval(const std::vector<PartialQuotient>& terms);

/// Precision left after expanding `terms` starting from prec:
/// prec - 2 * sum(deg a_i).  Expansion must stop before this drops below 1.
int cf_budget(int prec, const std::vector<PartialQuotient>& terms);

}  // namespace modray
