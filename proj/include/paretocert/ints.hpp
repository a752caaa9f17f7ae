#ifndef PARETOCERT_INTS_HPP
#define PARETOCERT_INTS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace paretocert {

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string & what) : std::runtime_error(what) {}
};

// Coefficient/degree arithmetic. Linear combinations during checking can
// exceed 32 bits, so everything numeric is 64-bit and checked.
inline int64_t checked_add(int64_t a, int64_t b)
{
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

inline int64_t checked_mul(int64_t a, int64_t b)
{
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

inline int64_t checked_sub(int64_t a, int64_t b)
{
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

// ceil(a / b) for a >= 0, b > 0
inline int64_t div_ceil(int64_t a, int64_t b)
{
    return a / b + (a % b != 0 ? 1 : 0);
}

}

#endif
