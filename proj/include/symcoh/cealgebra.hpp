#pragma once

#include "symcoh/form.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace symcoh {

// Chevalley-Eilenberg model of a unimodular Lie algebra of even dimension:
// the differential of each generator e_i is a 2-form, extended to the whole
// exterior algebra as an antiderivation. Construction validates d^2 = 0 on
// every blade and unimodularity (integration annihilates exact top forms).
// Nilpotency is not required.
class LieAlgebra {
public:
    // differentials[i] is d(e_{i+1}).
    LieAlgebra(int dim, std::vector<Form> differentials);

    int dim() const { return dim_; }
    int half_dim() const { return dim_ / 2; }

    const Form& differential_of_generator(int index) const { return generator_d_.at(index - 1); }

    Form d(const Form& a) const;
    const Form& d_of_blade(Blade b) const { return blade_d_.at(b.mask()); }

    // Coefficient of e_{1...dim}.
    Rational integrate(const Form& a) const;

    // Canonical Salamon-style text, e.g. "(0,0,0,12,14,15+23+24)".
    std::string salamon() const;

    bool is_abelian() const;

private:
    int dim_;
    std::vector<Form> generator_d_;
    std::vector<Form> blade_d_;
};

// "(0,0,0,12,14,15+23+24)": one entry per generator, each "0" or a signed sum of
// "[c*]ab" terms meaning c e_a ^ e_b. Parentheses are optional.
LieAlgebra parse_salamon(std::string_view text);

// {"dim": 6, "d": {"4": [[1,2,1]], ...}}: d(e_i) = sum of c e_a ^ e_b over [a, b, c].
// The coefficient may be an integer or a "p/q" string.
LieAlgebra parse_structure_json(std::string_view json_text);

} // namespace symcoh
