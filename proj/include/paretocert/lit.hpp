#ifndef PARETOCERT_LIT_HPP
#define PARETOCERT_LIT_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace paretocert {

using Var = int32_t; // variables are dense positive integers, 1-based

// A literal: a variable or its negation. Negation is an involution.
class Lit {
public:
    Lit() : code_(0) {}
    Lit(Var var, bool negated) : code_(var * 2 + (negated ? 1 : 0)) {}

    static Lit positive(Var var) { return Lit(var, false); }
    static Lit negative(Var var) { return Lit(var, true); }

    Var var() const { return code_ / 2; }
    bool negated() const { return code_ & 1; }
    bool valid() const { return code_ >= 2; }

    Lit operator~() const
    {
        Lit l;
        l.code_ = code_ ^ 1;
        return l;
    }

    // dense index usable for watch lists etc.
    int32_t index() const { return code_; }

    auto operator<=>(const Lit &) const = default;

private:
    int32_t code_;
};

inline std::string to_string(Lit l)
{
    return (l.negated() ? "~x" : "x") + std::to_string(l.var());
}

inline std::ostream & operator<<(std::ostream & os, Lit l)
{
    return os << to_string(l);
}

// DIMACS-style conversion: +v / -v
inline Lit lit_from_dimacs(int64_t d)
{
    return d > 0 ? Lit::positive(static_cast<Var>(d)) : Lit::negative(static_cast<Var>(-d));
}

inline int64_t lit_to_dimacs(Lit l)
{
    return l.negated() ? -static_cast<int64_t>(l.var()) : static_cast<int64_t>(l.var());
}

}

#endif
