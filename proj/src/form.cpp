#include "symcoh/form.hpp"

#include <algorithm>
#include <cctype>

namespace symcoh {

Blade Blade::from_indices(const std::vector<int>& ascending)
{
    std::uint32_t mask = 0;
    int previous = 0;
    for (int i : ascending) {
        if (i <= previous || i > kMaxDimension) throw InputError("blade indices must be strictly ascending in 1..15");
        mask |= std::uint32_t{1} << (i - 1);
        previous = i;
    }
    return Blade(mask);
}

std::vector<int> Blade::indices() const
{
    std::vector<int> out;
    std::uint32_t rest = mask_;
    while (rest != 0) {
        out.push_back(std::countr_zero(rest) + 1);
        rest &= rest - 1;
    }
    return out;
}

std::vector<Blade> blades_of_degree(int dim, int degree)
{
    std::vector<Blade> out;
    if (degree < 0 || degree > dim) return out;
    const std::uint32_t limit = std::uint32_t{1} << dim;
    for (std::uint32_t m = 0; m < limit; ++m)
        if (std::popcount(m) == degree) out.emplace_back(m);
    std::sort(out.begin(), out.end());
    return out;
}

GaussianForm to_gaussian(const Form& f)
{
    GaussianForm out(f.dim());
    for (const auto& [b, c] : f.terms()) out.add_term(b, GaussianRational(c));
    return out;
}

Form real_part_checked(const GaussianForm& f)
{
    Form out(f.dim());
    for (const auto& [b, c] : f.terms()) {
        if (!c.is_real()) throw ComplexError("unexpected imaginary residue on " + format_blade(b));
        out.add_term(b, c.real());
    }
    return out;
}

int parse_index_char(char c)
{
    if (c >= '1' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return 0;
}

char index_char(int index)
{
    if (index >= 1 && index <= 9) return static_cast<char>('0' + index);
    if (index >= 10 && index <= 15) return static_cast<char>('a' + index - 10);
    throw InputError("index out of printable range");
}

std::string format_blade(Blade b)
{
    if (b.mask() == 0) return "1";
    std::string out = "e";
    for (int i : b.indices()) out += index_char(i);
    return out;
}

namespace {

class FormParser {
public:
    FormParser(std::string_view text, int dim, bool shorthand)
        : text_(text)
        , dim_(dim)
        , shorthand_(shorthand)
    {
    }

    Form parse()
    {
        Form out(dim_);
        skip_space();
        if (at_end()) fail("empty form");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_space();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            parse_term(out, sign);
            first = false;
            skip_space();
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(std::string(text_), pos_, what); }

    std::string read_digits()
    {
        std::string digits;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
        return digits;
    }

    Blade read_indices()
    {
        std::uint32_t mask = 0;
        int previous = 0;
        const std::size_t start = pos_;
        while (!at_end() && parse_index_char(peek()) != 0) {
            const int idx = parse_index_char(peek());
            if (idx > dim_) fail("index " + std::string(1, peek()) + " exceeds dimension " + std::to_string(dim_));
            if (idx <= previous) fail("indices must be strictly ascending");
            mask |= std::uint32_t{1} << (idx - 1);
            previous = idx;
            ++pos_;
        }
        if (pos_ == start) fail("expected basis indices");
        return Blade(mask);
    }

    Rational read_coefficient()
    {
        const std::size_t start = pos_;
        std::string num = read_digits();
        if (num.empty()) fail("expected a coefficient");
        if (!at_end() && peek() == '/') {
            ++pos_;
            std::string den = read_digits();
            if (den.empty()) fail("expected a denominator");
            if (den.find_first_not_of('0') == std::string::npos) {
                pos_ = start;
                fail("zero denominator");
            }
            num += "/" + den;
        }
        return parse_rational(num);
    }

    void parse_term(Form& out, int sign)
    {
        if (at_end()) fail("expected a term");
        Rational coeff(sign);
        if (shorthand_) {
            // "[c*]ij..." : a leading digit run followed by '*' is a coefficient.
            const std::size_t save = pos_;
            std::string digits = read_digits();
            if (!digits.empty() && !at_end() && (peek() == '*' || peek() == '/')) {
                pos_ = save;
                coeff *= read_coefficient();
                if (at_end() || peek() != '*') fail("expected '*'");
                ++pos_;
            } else {
                pos_ = save;
            }
            const std::size_t at = pos_;
            const Blade b = read_indices();
            if (b.degree() != 2) {
                pos_ = at;
                fail("a two-form term needs exactly two indices");
            }
            out.add_term(b, coeff);
            return;
        }
        if (peek() == 'e') {
            ++pos_;
            out.add_term(read_indices(), coeff);
            return;
        }
        coeff *= read_coefficient();
        if (!at_end() && peek() == '*') {
            ++pos_;
            if (at_end() || peek() != 'e') fail("expected 'e' after '*'");
            ++pos_;
            out.add_term(read_indices(), coeff);
            return;
        }
        out.add_term(Blade::unit(), coeff);
    }

    std::string_view text_;
    int dim_;
    bool shorthand_;
    std::size_t pos_ = 0;
};

} // namespace

Form parse_form(std::string_view text, int dim) { return FormParser(text, dim, false).parse(); }

Form parse_two_form(std::string_view text, int dim)
{
    const bool shorthand = text.find('e') == std::string_view::npos;
    return FormParser(text, dim, shorthand).parse();
}

std::string format_form(const Form& f)
{
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : f.terms()) {
        const bool negative = sgn(c) < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const Rational mag = abs(c);
        if (b.mask() == 0) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += format_blade(b);
        }
        first = false;
    }
    return out;
}

} // namespace symcoh
