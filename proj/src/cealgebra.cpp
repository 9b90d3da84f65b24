#include "symcoh/cealgebra.hpp"

#include <json.hpp>

#include <cctype>

namespace symcoh {

LieAlgebra::LieAlgebra(int dim, std::vector<Form> differentials)
    : dim_(dim)
    , generator_d_(std::move(differentials))
{
    if (dim <= 0 || dim % 2 != 0) throw InputError("Lie algebra dimension must be even and positive, got " + std::to_string(dim));
    if (dim > kMaxDimension) throw InputError("Lie algebra dimension exceeds " + std::to_string(kMaxDimension));
    if (static_cast<int>(generator_d_.size()) != dim) throw InputError("need one differential per generator");
    for (int i = 0; i < dim; ++i) {
        const Form& de = generator_d_[static_cast<std::size_t>(i)];
        if (de.dim() != dim) throw InputError("differential has wrong ambient dimension");
        if (!de.is_homogeneous_of(2)) throw InputError("d(e" + std::string(1, index_char(i + 1)) + ") is not a 2-form");
    }

    // d(e_i ^ rest) = d(e_i) ^ rest - e_i ^ d(rest), where i is the lowest index.
    const std::size_t count = std::size_t{1} << dim;
    blade_d_.assign(count, Form(dim));
    for (std::uint32_t m = 1; m < count; ++m) {
        const int lowest = std::countr_zero(m) + 1;
        const Blade rest(m & (m - 1));
        const Form rest_form = Form::monomial(dim, rest);
        blade_d_[m] = wedge(generator_d_[static_cast<std::size_t>(lowest - 1)], rest_form) -
                      wedge(Form::generator(dim, lowest), blade_d_[rest.mask()]);
    }

    for (std::uint32_t m = 0; m < count; ++m) {
        if (!d(blade_d_[m]).is_zero())
            throw InputError("d^2 != 0 on " + format_blade(Blade(m)) + " (Jacobi identity fails)");
    }
    for (const Blade& b : blades_of_degree(dim, dim - 1)) {
        if (!is_zero(integrate(blade_d_[b.mask()])))
            throw InputError("Lie algebra is not unimodular: d(" + format_blade(b) + ") has a volume component");
    }
}

Form LieAlgebra::d(const Form& a) const
{
    if (a.dim() != dim_) throw InputError("d: ambient dimension mismatch");
    Form out(dim_);
    for (const auto& [b, c] : a.terms()) {
        for (const auto& [bb, cc] : blade_d_[b.mask()].terms()) out.add_term(bb, c * cc);
    }
    return out;
}

Rational LieAlgebra::integrate(const Form& a) const
{
    return a.coefficient(Blade((std::uint32_t{1} << dim_) - 1));
}

bool LieAlgebra::is_abelian() const
{
    for (const Form& de : generator_d_)
        if (!de.is_zero()) return false;
    return true;
}

std::string LieAlgebra::salamon() const
{
    std::string out = "(";
    for (int i = 0; i < dim_; ++i) {
        if (i > 0) out += ",";
        const Form& de = generator_d_[static_cast<std::size_t>(i)];
        if (de.is_zero()) {
            out += "0";
            continue;
        }
        bool first = true;
        for (const auto& [b, c] : de.terms()) {
            const bool negative = sgn(c) < 0;
            if (negative)
                out += "-";
            else if (!first)
                out += "+";
            const Rational mag = abs(c);
            if (mag != 1) out += to_string(mag) + "*";
            for (int idx : b.indices()) out += index_char(idx);
            first = false;
        }
    }
    return out + ")";
}

namespace {

class SalamonParser {
public:
    explicit SalamonParser(std::string_view text) : text_(text) {}

    LieAlgebra parse()
    {
        skip_space();
        bool open = false;
        if (!at_end() && peek() == '(') {
            open = true;
            ++pos_;
        }
        std::vector<std::vector<Term>> entries;
        while (true) {
            entries.push_back(parse_entry());
            skip_space();
            if (!at_end() && peek() == ',') {
                ++pos_;
                continue;
            }
            break;
        }
        if (open) {
            if (at_end() || peek() != ')') fail("expected ')'");
            ++pos_;
        }
        skip_space();
        if (!at_end()) fail("unexpected trailing characters");

        const int dim = static_cast<int>(entries.size());
        if (dim % 2 != 0) throw ParseError(std::string(text_), pos_, "odd dimension " + std::to_string(dim));
        if (dim > kMaxDimension) fail("dimension exceeds 15");
        std::vector<Form> de;
        for (const auto& terms : entries) {
            Form f(dim);
            for (const Term& t : terms) {
                if (t.a > dim || t.b > dim) throw ParseError(std::string(text_), t.position, "index out of range");
                f += wedge(Form::generator(dim, t.a), Form::generator(dim, t.b)) * t.coeff;
            }
            de.push_back(std::move(f));
        }
        return LieAlgebra(dim, std::move(de));
    }

private:
    struct Term {
        int a;
        int b;
        Rational coeff;
        std::size_t position;
    };

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(std::string(text_), pos_, what); }

    std::vector<Term> parse_entry()
    {
        skip_space();
        std::vector<Term> terms;
        if (!at_end() && peek() == '0') {
            ++pos_;
            skip_space();
            if (at_end() || peek() == ',' || peek() == ')') return terms;
            fail("expected ',' after 0");
        }
        bool first = true;
        while (true) {
            skip_space();
            int sign = 1;
            if (!at_end() && (peek() == '+' || peek() == '-')) {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                break;
            }
            terms.push_back(parse_term(sign));
            first = false;
        }
        return terms;
    }

    Term parse_term(int sign)
    {
        Rational coeff(sign);
        const std::size_t start = pos_;
        std::string digits;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) digits += text_[pos_++];
        if (!digits.empty() && !at_end() && peek() == '*') {
            ++pos_;
            coeff *= parse_rational(digits);
        } else {
            pos_ = start;
        }
        skip_space();
        const std::size_t at = pos_;
        if (pos_ + 2 > text_.size()) fail("expected a two-index term");
        const int a = parse_index_char(text_[pos_]);
        const int b = parse_index_char(text_[pos_ + 1]);
        if (a == 0 || b == 0) fail("malformed term");
        if (a == b) fail("repeated index in term");
        pos_ += 2;
        if (!at_end() && parse_index_char(peek()) != 0) fail("a term has exactly two indices");
        return Term{a, b, coeff, at};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

Rational json_rational(const nlohmann::json& v)
{
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw InputError("structure constant must be an integer or a \"p/q\" string");
}

} // namespace

LieAlgebra parse_salamon(std::string_view text) { return SalamonParser(text).parse(); }

LieAlgebra parse_structure_json(std::string_view json_text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string(json_text), e.byte == 0 ? 0 : e.byte - 1, "invalid JSON");
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer())
        throw InputError("structure JSON needs an integer \"dim\"");
    const int dim = doc["dim"].get<int>();
    if (dim <= 0 || dim % 2 != 0) throw InputError("odd or non-positive dimension " + std::to_string(dim));
    if (dim > kMaxDimension) throw InputError("dimension exceeds 15");
    std::vector<Form> de(static_cast<std::size_t>(dim), Form(dim));
    if (doc.contains("d")) {
        if (!doc["d"].is_object()) throw InputError("\"d\" must be an object");
        for (const auto& [key, terms] : doc["d"].items()) {
            int i = 0;
            try {
                std::size_t used = 0;
                i = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw InputError("generator key '" + key + "' is not an integer");
            }
            if (i < 1 || i > dim) throw InputError("generator index " + key + " out of range");
            if (!terms.is_array()) throw InputError("d(e" + key + ") must be a list of [a, b, c]");
            for (const auto& t : terms) {
                if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number_integer())
                    throw InputError("structure constant entries are [a, b, c]");
                const int a = t[0].get<int>();
                const int b = t[1].get<int>();
                if (a < 1 || a > dim || b < 1 || b > dim || a == b) throw InputError("bad indices in d(e" + key + ")");
                de[static_cast<std::size_t>(i - 1)] +=
                    wedge(Form::generator(dim, a), Form::generator(dim, b)) * json_rational(t[2]);
            }
        }
    }
    return LieAlgebra(dim, std::move(de));
}

} // namespace symcoh
