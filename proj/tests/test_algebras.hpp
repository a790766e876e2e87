#pragma once

// Shared concrete algebras for tests: multiplication tables for the dihedral
// and quaternion groups of order 8, and the 8-dimensional local algebra
// K<a,b>/(a^2, b^2 - aba).

#include "findom/algebra.hpp"

#include <array>
#include <string>
#include <vector>

namespace findom::testalg {

// D8 = <r, s | r^4 = s^2 = 1, s r = r^3 s>, element r^a s^b at index a + 4b
inline std::pair<std::vector<std::string>, std::vector<std::vector<std::size_t>>> d8_table() {
    std::vector<std::string> names;
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < 4; ++a)
            names.push_back("r" + std::to_string(a) + (b ? "s" : ""));
    auto idx = [](int a, int b) { return static_cast<std::size_t>(((a % 4) + 4) % 4 + 4 * b); };
    std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
    for (int a1 = 0; a1 < 4; ++a1)
        for (int b1 = 0; b1 < 2; ++b1)
            for (int a2 = 0; a2 < 4; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    // (r^a1 s^b1)(r^a2 s^b2): move s past r^a2
                    int a = b1 ? a1 - a2 : a1 + a2;
                    int b = (b1 + b2) % 2;
                    t[idx(a1, b1)][idx(a2, b2)] = idx(a, b);
                }
    return {names, t};
}

// Q8 = {±1, ±i, ±j, ±k}, index = 2*unit + sign with units 1,i,j,k
inline std::pair<std::vector<std::string>, std::vector<std::vector<std::size_t>>> q8_table() {
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    // unit multiplication: (u,v) -> (sign, unit)
    auto unit_mul = [](int u, int v) -> std::pair<int, int> {
        if (u == 0)
            return {1, v};
        if (v == 0)
            return {1, u};
        if (u == v)
            return {-1, 0}; // i*i = j*j = k*k = -1
        // i=1, j=2, k=3: cyclic products
        static const int eps[4][4] = {{0, 0, 0, 0}, {0, 0, 1, -1}, {0, -1, 0, 1}, {0, 1, -1, 0}};
        int w = 6 - u - v; // the remaining unit
        return {eps[u][v], w};
    };
    std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
    for (int u = 0; u < 4; ++u)
        for (int su = 0; su < 2; ++su)
            for (int v = 0; v < 4; ++v)
                for (int sv = 0; sv < 2; ++sv) {
                    auto [sg, w] = unit_mul(u, v);
                    int sign = ((su + sv) % 2 == 0 ? 1 : -1) * sg;
                    t[2 * u + su][2 * v + sv] = 2 * w + (sign == 1 ? 0 : 1);
                }
    return {names, t};
}

// K<a,b>/(a^2, b^2 - aba) over GF(2), basis 1,a,b,ab,ba,aba,bab,abab.
// Entry -1 means the product is zero.
inline std::vector<std::vector<int>> hopf_products() {
    std::vector<std::vector<int>> m(8, std::vector<int>(8, -1));
    for (int j = 0; j < 8; ++j) {
        m[0][j] = j;
        m[j][0] = j;
    }
    m[1][1] = -1; m[1][2] = 3;  m[1][3] = -1; m[1][4] = 5;
    m[1][5] = -1; m[1][6] = 7;  m[1][7] = -1;
    m[2][1] = 4;  m[2][2] = 5;  m[2][3] = 6;  m[2][4] = -1;
    m[2][5] = 7;  m[2][6] = -1; m[2][7] = -1;
    m[3][1] = 5;  m[3][2] = -1; m[3][3] = 7;  m[3][4] = -1;
    m[3][5] = -1; m[3][6] = -1; m[3][7] = -1;
    m[4][1] = -1; m[4][2] = 6;  m[4][3] = -1; m[4][4] = 7;
    m[4][5] = -1; m[4][6] = -1; m[4][7] = -1;
    m[5][2] = 7;
    m[6][1] = 7;
    return m;
}

inline std::vector<std::vector<Vec>> index_table_to_mult(const std::vector<std::vector<int>>& t) {
    const std::size_t d = t.size();
    std::vector<std::vector<Vec>> mult(d, std::vector<Vec>(d, Vec(d, 0)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (t[i][j] >= 0)
                mult[i][j][static_cast<std::size_t>(t[i][j])] = 1;
    return mult;
}

inline AlgPtr hopf_algebra() {
    return from_table(PrimeField(2), index_table_to_mult(hopf_products()), true, {}, {},
                      {"1", "a", "b", "ab", "ba", "aba", "bab", "abab"});
}

inline AlgPtr d8_algebra() {
    auto [names, t] = d8_table();
    return from_group_table(names, t, PrimeField(2));
}

inline AlgPtr q8_algebra() {
    auto [names, t] = q8_table();
    return from_group_table(names, t, PrimeField(2));
}

// K[x]/(x^n) as an explicit table (the same algebra as cyclic [n])
inline AlgPtr kx_algebra(std::size_t n, std::uint32_t p = 2) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < n)
                t[i][j] = static_cast<int>(i + j);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(i == 0 ? "1" : "x^" + std::to_string(i));
    return from_table(PrimeField(p), index_table_to_mult(t), true, {}, {}, names);
}

} // namespace findom::testalg
