#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace findom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : Error {
    using Error::Error;
};

struct ContractViolation : Error {
    using Error::Error;
};

inline bool is_prime(std::uint32_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

/// Prime field GF(p). All arithmetic is exact modular arithmetic; values are
/// kept reduced to [0, p).
struct PrimeField {
    std::uint32_t p = 2;

    PrimeField() = default;
    explicit PrimeField(std::uint32_t characteristic) : p(characteristic) {
        if (!is_prime(p))
            throw InputError("characteristic " + std::to_string(p) + " is not prime");
    }

    std::uint32_t reduce(std::int64_t x) const {
        std::int64_t r = x % static_cast<std::int64_t>(p);
        return static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint64_t s = std::uint64_t(a) + b;
        return s >= p ? std::uint32_t(s - p) : std::uint32_t(s);
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return std::uint32_t((std::uint64_t(a) * b) % p);
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0)
            throw ContractViolation("inverse of zero in GF(p)");
        // extended Euclid
        std::int64_t t = 0, newt = 1, r = p, newr = a;
        while (newr != 0) {
            std::int64_t q = r / newr;
            std::int64_t tmp = t - q * newt;
            t = newt;
            newt = tmp;
            tmp = r - q * newr;
            r = newr;
            newr = tmp;
        }
        return reduce(t);
    }

    bool operator==(const PrimeField&) const = default;
};

} // namespace findom
