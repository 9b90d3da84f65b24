#pragma once

#include "symcoh/cohomology.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace symcoh::testing {

inline constexpr const char* kNilAlgebra = "(0,0,0,12,14,15+23+24)";
inline constexpr const char* kTorusAlgebra = "(0,0,0,0,0,0)";
inline constexpr const char* kOmega = "16+25-34";
inline constexpr const char* kOmegaPrime = "13+26-45";
inline constexpr const char* kTorusOmega = "12+34+56";

inline InvariantComplex make_complex(const char* algebra, const char* omega)
{
    const LieAlgebra g = parse_salamon(algebra);
    return InvariantComplex(make_operators(g, parse_two_form(omega, g.dim())));
}

inline const InvariantComplex& nil_omega()
{
    static const InvariantComplex cx = make_complex(kNilAlgebra, kOmega);
    return cx;
}
inline const InvariantComplex& nil_omega_prime()
{
    static const InvariantComplex cx = make_complex(kNilAlgebra, kOmegaPrime);
    return cx;
}
inline const InvariantComplex& torus()
{
    static const InvariantComplex cx = make_complex(kTorusAlgebra, kTorusOmega);
    return cx;
}

// Table-style shorthand: space-separated "coef:indices" terms where the indices
// may come in any order ("1:263" is e2^e6^e3) and 'w' stands for omega ^.
inline Form word(const std::string& text, const Form& omega)
{
    const int dim = omega.dim();
    Form f(dim);
    std::istringstream in(text);
    for (std::string term; in >> term;) {
        const auto colon = term.find(':');
        Form m = Form::constant(dim, Rational(1));
        for (char c : term.substr(colon + 1))
            m = c == 'w' ? wedge(m, omega) : wedge(m, Form::generator(dim, parse_index_char(c)));
        f += m * parse_rational(term.substr(0, colon));
    }
    return f;
}

inline std::vector<Form> words(const std::vector<std::string>& texts, const Form& omega)
{
    std::vector<Form> out;
    for (const auto& t : texts) out.push_back(word(t, omega));
    return out;
}

} // namespace symcoh::testing
