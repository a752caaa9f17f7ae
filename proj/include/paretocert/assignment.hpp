#ifndef PARETOCERT_ASSIGNMENT_HPP
#define PARETOCERT_ASSIGNMENT_HPP

#include <map>
#include <vector>

#include <paretocert/lit.hpp>

namespace paretocert {

// A partial truth assignment, var -> {0,1}.
class Assignment {
public:
    enum Value : int8_t { kUnset = -1, kFalse = 0, kTrue = 1 };

    Assignment() = default;

    void set(Var v, bool value)
    {
        ensure(v);
        values_[v] = value ? kTrue : kFalse;
    }

    void set(Lit l, bool value = true) { set(l.var(), l.negated() ? ! value : value); }

    void unset(Var v)
    {
        if (v < static_cast<Var>(values_.size()))
            values_[v] = kUnset;
    }

    bool assigned(Var v) const
    {
        return v >= 1 && v < static_cast<Var>(values_.size()) && values_[v] != kUnset;
    }

    // value of a variable; only valid when assigned
    bool value(Var v) const { return values_[v] == kTrue; }

    Value value_of(Var v) const
    {
        if (! assigned(v))
            return kUnset;
        return values_[v];
    }

    // truth of a literal under the assignment; kUnset when the var is free
    Value value_of(Lit l) const
    {
        Value v = value_of(l.var());
        if (v == kUnset)
            return kUnset;
        bool b = (v == kTrue);
        return (l.negated() ? ! b : b) ? kTrue : kFalse;
    }

    bool satisfies(Lit l) const { return value_of(l) == kTrue; }
    bool falsifies(Lit l) const { return value_of(l) == kFalse; }

    template <typename VarRange>
    bool complete_for(const VarRange & vars) const
    {
        for (Var v : vars)
            if (! assigned(v))
                return false;
        return true;
    }

    // literals set to true, ascending by variable
    std::vector<Lit> true_literals() const
    {
        std::vector<Lit> out;
        for (Var v = 1; v < static_cast<Var>(values_.size()); ++v)
            if (values_[v] != kUnset)
                out.push_back(Lit(v, values_[v] == kFalse));
        return out;
    }

    std::vector<Var> assigned_vars() const
    {
        std::vector<Var> out;
        for (Var v = 1; v < static_cast<Var>(values_.size()); ++v)
            if (values_[v] != kUnset)
                out.push_back(v);
        return out;
    }

    bool operator==(const Assignment & other) const
    {
        Var hi = std::max(static_cast<Var>(values_.size()), static_cast<Var>(other.values_.size()));
        for (Var v = 1; v < hi; ++v)
            if (value_of(v) != other.value_of(v))
                return false;
        return true;
    }

private:
    void ensure(Var v)
    {
        if (v >= static_cast<Var>(values_.size()))
            values_.resize(v + 1, kUnset);
    }

    std::vector<int8_t> values_;
};

// A substitution maps variables to 0, 1, or another literal.
struct SubstValue {
    enum Kind : int8_t { kZero, kOne, kLiteral };
    Kind kind = kZero;
    Lit lit;

    static SubstValue zero() { return {kZero, Lit()}; }
    static SubstValue one() { return {kOne, Lit()}; }
    static SubstValue to(Lit l) { return {kLiteral, l}; }
    static SubstValue constant(bool b) { return b ? one() : zero(); }

    bool operator==(const SubstValue &) const = default;
};

using Substitution = std::map<Var, SubstValue>;

// Compose: apply a substitution on top of an assignment (domain union).
inline Assignment compose(const Assignment & a, const Substitution & s)
{
    Assignment out = a;
    for (const auto & [v, sv] : s) {
        switch (sv.kind) {
        case SubstValue::kZero: out.set(v, false); break;
        case SubstValue::kOne: out.set(v, true); break;
        case SubstValue::kLiteral:
            if (a.assigned(sv.lit.var()))
                out.set(v, a.satisfies(sv.lit));
            else
                out.unset(v);
            break;
        }
    }
    return out;
}

}

#endif
