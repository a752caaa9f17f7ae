#ifndef PARETOCERT_CONSTRAINT_HPP
#define PARETOCERT_CONSTRAINT_HPP

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <paretocert/assignment.hpp>
#include <paretocert/ints.hpp>
#include <paretocert/lit.hpp>

namespace paretocert {

// One retained term of a normal-form constraint: coeff * lit, coeff > 0.
struct PbTerm {
    Var var;
    bool negated;
    int64_t coeff;

    Lit lit() const { return Lit(var, negated); }
    bool operator==(const PbTerm &) const = default;
};

// A normalized pseudo-Boolean constraint sum a_i l_i >= degree: at most one
// term per variable, all coefficients strictly positive, degree >= 0.
// Trivially-true constraints are the empty term list with degree 0,
// trivially-false ones the empty term list with degree >= 1.
class PbConstraint {
public:
    PbConstraint() : degree_(0) {}
    PbConstraint(std::vector<PbTerm> terms, int64_t degree);

    const std::vector<PbTerm> & terms() const { return terms_; }
    int64_t degree() const { return degree_; }

    bool trivially_true() const { return terms_.empty() && degree_ == 0; }
    bool contradiction() const { return terms_.empty() && degree_ >= 1; }

    int64_t coeff_sum() const;
    std::optional<PbTerm> term_for(Var v) const;

    bool operator==(const PbConstraint &) const = default;

private:
    std::vector<PbTerm> terms_; // sorted by var
    int64_t degree_;
};

enum class EvalResult { kSatisfied, kFalsified, kUndetermined };

// Raw (possibly signed, duplicated) input for normalization.
using RawTerms = std::vector<std::pair<int64_t, Lit>>;

// Normal-form construction: negative coefficients flipped via a*l = a - a*~l,
// duplicate variables merged, degree clamped at 0.
PbConstraint normalize(const RawTerms & raw, int64_t bound);

// A clause l1 v ... v lk as the PB constraint sum l_i >= 1.
PbConstraint clause_constraint(const std::vector<Lit> & lits);

// The literal axiom l >= 0.
PbConstraint literal_axiom(Lit l);

// sum a_i ~l_i >= sum a_i - b + 1
PbConstraint negate(const PbConstraint & c);

// Reification of a fresh variable p against c: returns
//   (M p + sum a_i ~l_i >= M,  b ~p + sum a_i l_i >= b), M = sum a_i - b + 1.
// First constraint is p <== c, second is p ==> c.
std::pair<PbConstraint, PbConstraint> reify(Lit p, const PbConstraint & c);

// k1*c1 + k2*c2, normalized. k1, k2 > 0.
PbConstraint lin_comb(const PbConstraint & c1, int64_t k1, const PbConstraint & c2, int64_t k2);

PbConstraint multiply(const PbConstraint & c, int64_t k);

// sum ceil(a_i/k) l_i >= ceil(b/k)
PbConstraint divide(const PbConstraint & c, int64_t k);

// Substitute vars of the substitution domain and renormalize.
PbConstraint apply_substitution(const PbConstraint & c, const Substitution & s);

EvalResult evaluate(const PbConstraint & c, const Assignment & a);

// VeriPB-style text: "+a1 l1 +a2 l2 ... >= b ;" with literals x<k> / ~x<k>.
std::string render(const PbConstraint & c);
std::ostream & operator<<(std::ostream & os, const PbConstraint & c);

}

#endif
