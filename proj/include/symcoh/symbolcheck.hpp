#pragma once

#include "symcoh/form.hpp"
#include "symcoh/linalg.hpp"
#include "symcoh/report.hpp"

#include <cstdint>
#include <vector>

namespace symcoh {

// One space of the symbol complex P^0 -> ... -> P^n -> P^n -> ... -> P^0.
struct SymbolSpace {
    int degree;
    std::vector<Form> basis;   // primitive basis
    RationalMatrix embedding;  // blade coordinates of the basis, one column per element
};

// Principal symbols of del+, del+ del- and del- at a covector xi, for the
// standard form e12 + e34 + ... on a 2n-dimensional vector space.
struct SymbolComplex {
    int n = 0;
    Form xi;
    std::vector<SymbolSpace> spaces;  // 2n + 2 entries
    // maps[i]: spaces[i] -> spaces[i+1]; rows are blade coordinates of the
    // target degree, columns follow spaces[i].basis.
    std::vector<RationalMatrix> maps;
    std::vector<std::string> map_names;
};

// Symbol of each operator applied to a single form.
Form symbol_del_plus(int n, const Form& xi, const Form& mu);
Form symbol_del_minus(int n, const Form& xi, const Form& mu);
Form symbol_del_plus_del_minus(int n, const Form& xi, const Form& mu);

// Throws InputError if xi is zero or not a 1-form in dimension 2n.
SymbolComplex build_symbols(int n, const Form& xi);

// Exactness at every position, zero composition of consecutive maps and a
// vanishing Euler characteristic.
CheckReport check_exactness(const SymbolComplex& c);

inline constexpr std::uint32_t kDefaultSymbolSeed = 20101;

// Nonzero 1-forms with integer coefficients in [-3, 3], drawn from raw
// mt19937 output so the sequence is identical on every standard library.
std::vector<Form> sample_covectors(int n, std::size_t count, std::uint32_t seed = kDefaultSymbolSeed);

// e_1 and `samples` seeded covectors for every n in [1, max_n].
CheckReport run_symbol_suite(int max_n, std::size_t samples, std::uint32_t seed = kDefaultSymbolSeed);

} // namespace symcoh
