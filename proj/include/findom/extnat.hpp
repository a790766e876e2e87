#pragma once

#include "findom/field.hpp"

#include <cstdint>
#include <string>

namespace findom {

/// Extended natural number: an exact finite value, an exact infinity, or a
/// cutoff-limited lower bound "at least k" (produced only by bounded
/// procedures; never silently treated as finite or infinite).
struct ExtNat {
    enum class Kind { Finite, Infinite, AtLeast };

    Kind kind = Kind::Finite;
    std::uint32_t n = 0;

    static ExtNat finite(std::uint32_t k) { return {Kind::Finite, k}; }
    static ExtNat infinite() { return {Kind::Infinite, 0}; }
    static ExtNat at_least(std::uint32_t k) { return {Kind::AtLeast, k}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinite() const { return kind == Kind::Infinite; }
    bool is_exact() const { return kind != Kind::AtLeast; }

    std::uint32_t value() const {
        if (!is_finite())
            throw ContractViolation("ExtNat: value of non-finite");
        return n;
    }

    bool operator==(const ExtNat& o) const = default;

    /// True when the value is known to be >= k regardless of kind.
    bool known_at_least(std::uint32_t k) const {
        switch (kind) {
        case Kind::Finite: return n >= k;
        case Kind::Infinite: return true;
        case Kind::AtLeast: return n >= k;
        }
        return false;
    }

    std::string str() const {
        switch (kind) {
        case Kind::Finite: return std::to_string(n);
        case Kind::Infinite: return "inf";
        case Kind::AtLeast: return ">=" + std::to_string(n);
        }
        return "?";
    }
};

/// min of two extended naturals with bound semantics: a lower bound wins only
/// when the other side might still exceed it.
inline ExtNat ext_min(const ExtNat& a, const ExtNat& b) {
    if (a.is_infinite())
        return b;
    if (b.is_infinite())
        return a;
    if (a.is_finite() && b.is_finite())
        return ExtNat::finite(std::min(a.n, b.n));
    if (a.is_finite()) // b = at_least(k)
        return a.n <= b.n ? a : ExtNat::at_least(b.n);
    if (b.is_finite())
        return b.n <= a.n ? b : ExtNat::at_least(a.n);
    return ExtNat::at_least(std::min(a.n, b.n));
}

/// max with bound semantics: at_least(k) caps certainty from above.
inline ExtNat ext_max(const ExtNat& a, const ExtNat& b) {
    if (a.is_infinite() || b.is_infinite())
        return ExtNat::infinite();
    if (a.is_finite() && b.is_finite())
        return ExtNat::finite(std::max(a.n, b.n));
    return ExtNat::at_least(std::max(a.n, b.n));
}

} // namespace findom
