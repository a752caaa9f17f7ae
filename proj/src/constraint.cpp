#include <paretocert/constraint.hpp>

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace paretocert {

PbConstraint::PbConstraint(std::vector<PbTerm> terms, int64_t degree) :
    terms_(std::move(terms)),
    degree_(degree)
{
    assert(degree_ >= 0);
    assert(std::is_sorted(terms_.begin(), terms_.end(),
        [](const PbTerm & a, const PbTerm & b) { return a.var < b.var; }));
}

int64_t PbConstraint::coeff_sum() const
{
    int64_t s = 0;
    for (const auto & t : terms_)
        s = checked_add(s, t.coeff);
    return s;
}

std::optional<PbTerm> PbConstraint::term_for(Var v) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
        [](const PbTerm & t, Var w) { return t.var < w; });
    if (it != terms_.end() && it->var == v)
        return *it;
    return std::nullopt;
}

PbConstraint normalize(const RawTerms & raw, int64_t bound)
{
    // net signed coefficient on the positive literal of each variable
    std::map<Var, int64_t> net;
    int64_t degree = bound;
    for (const auto & [coeff, lit] : raw) {
        if (coeff == 0)
            continue;
        int64_t on_pos = lit.negated() ? -coeff : coeff;
        if (lit.negated())
            degree = checked_sub(degree, coeff); // a*~x = a - a*x
        auto [it, inserted] = net.emplace(lit.var(), 0);
        it->second = checked_add(it->second, on_pos);
    }

    std::vector<PbTerm> terms;
    terms.reserve(net.size());
    for (const auto & [var, c] : net) {
        if (c > 0)
            terms.push_back({var, false, c});
        else if (c < 0) {
            // -c * x = -c - (-c) * ~x, retain the negated literal
            terms.push_back({var, true, -c});
            degree = checked_sub(degree, c);
        }
    }

    if (degree <= 0)
        return PbConstraint({}, 0); // trivially true
    return PbConstraint(std::move(terms), degree);
}

PbConstraint clause_constraint(const std::vector<Lit> & lits)
{
    RawTerms raw;
    raw.reserve(lits.size());
    for (Lit l : lits)
        raw.emplace_back(1, l);
    return normalize(raw, 1);
}

PbConstraint literal_axiom(Lit l)
{
    // l >= 0. Kept with its term (not canonicalized away) so that adding the
    // axiom into a linear combination cancels against the opposite literal.
    return PbConstraint({{l.var(), l.negated(), 1}}, 0);
}

PbConstraint negate(const PbConstraint & c)
{
    RawTerms raw;
    raw.reserve(c.terms().size());
    for (const auto & t : c.terms())
        raw.emplace_back(t.coeff, ~t.lit());
    int64_t bound = checked_add(checked_sub(c.coeff_sum(), c.degree()), 1);
    return normalize(raw, bound);
}

std::pair<PbConstraint, PbConstraint> reify(Lit p, const PbConstraint & c)
{
    for (const auto & t : c.terms())
        if (t.var == p.var())
            throw std::invalid_argument("reification variable occurs in constraint");

    int64_t big_m = checked_add(checked_sub(c.coeff_sum(), c.degree()), 1);
    RawTerms fwd; // p <== c:  M p + sum a_i ~l_i >= M
    fwd.emplace_back(big_m, p);
    for (const auto & t : c.terms())
        fwd.emplace_back(t.coeff, ~t.lit());

    RawTerms bwd; // p ==> c:  b ~p + sum a_i l_i >= b
    bwd.emplace_back(c.degree(), ~p);
    for (const auto & t : c.terms())
        bwd.emplace_back(t.coeff, t.lit());

    return {normalize(fwd, big_m), normalize(bwd, c.degree())};
}

PbConstraint lin_comb(const PbConstraint & c1, int64_t k1, const PbConstraint & c2, int64_t k2)
{
    if (k1 <= 0 || k2 <= 0)
        throw std::invalid_argument("linear combination multipliers must be positive");
    RawTerms raw;
    raw.reserve(c1.terms().size() + c2.terms().size());
    for (const auto & t : c1.terms())
        raw.emplace_back(checked_mul(k1, t.coeff), t.lit());
    for (const auto & t : c2.terms())
        raw.emplace_back(checked_mul(k2, t.coeff), t.lit());
    int64_t bound = checked_add(checked_mul(k1, c1.degree()), checked_mul(k2, c2.degree()));
    return normalize(raw, bound);
}

PbConstraint multiply(const PbConstraint & c, int64_t k)
{
    if (k <= 0)
        throw std::invalid_argument("multiplier must be positive");
    std::vector<PbTerm> terms = c.terms();
    for (auto & t : terms)
        t.coeff = checked_mul(t.coeff, k);
    return PbConstraint(std::move(terms), checked_mul(c.degree(), k));
}

PbConstraint divide(const PbConstraint & c, int64_t k)
{
    if (k <= 0)
        throw std::invalid_argument("divisor must be positive");
    std::vector<PbTerm> terms = c.terms();
    for (auto & t : terms)
        t.coeff = div_ceil(t.coeff, k);
    return PbConstraint(std::move(terms), div_ceil(c.degree(), k));
}

PbConstraint apply_substitution(const PbConstraint & c, const Substitution & s)
{
    RawTerms raw;
    int64_t bound = c.degree();
    for (const auto & t : c.terms()) {
        auto it = s.find(t.var);
        if (it == s.end()) {
            raw.emplace_back(t.coeff, t.lit());
            continue;
        }
        const SubstValue & sv = it->second;
        bool sat;
        switch (sv.kind) {
        case SubstValue::kZero:
            sat = t.negated;
            if (sat)
                bound = checked_sub(bound, t.coeff);
            continue;
        case SubstValue::kOne:
            sat = ! t.negated;
            if (sat)
                bound = checked_sub(bound, t.coeff);
            continue;
        case SubstValue::kLiteral:
            raw.emplace_back(t.coeff, t.negated ? ~sv.lit : sv.lit);
            continue;
        }
    }
    return normalize(raw, bound);
}

EvalResult evaluate(const PbConstraint & c, const Assignment & a)
{
    int64_t residual = c.degree();
    int64_t free_mass = 0;
    for (const auto & t : c.terms()) {
        switch (a.value_of(t.lit())) {
        case Assignment::kTrue: residual = checked_sub(residual, t.coeff); break;
        case Assignment::kFalse: break;
        case Assignment::kUnset: free_mass = checked_add(free_mass, t.coeff); break;
        }
    }
    if (residual <= 0)
        return EvalResult::kSatisfied;
    if (free_mass < residual)
        return EvalResult::kFalsified;
    return EvalResult::kUndetermined;
}

std::string render(const PbConstraint & c)
{
    std::ostringstream os;
    os << c;
    return os.str();
}

std::ostream & operator<<(std::ostream & os, const PbConstraint & c)
{
    for (const auto & t : c.terms())
        os << '+' << t.coeff << ' ' << t.lit() << ' ';
    os << ">= " << c.degree() << " ;";
    return os;
}

}
