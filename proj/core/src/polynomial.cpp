#include "ribbon/polynomial.hpp"

#include <cctype>
#include <numeric>

namespace ribbon {

namespace detail {

std::string render_exponent(int units, int scale) {
    const int g = std::gcd(units < 0 ? -units : units, scale);
    const int num = units / g;
    const int den = scale / g;
    if (den == 1) {
        if (num == 1) return "";
        if (num > 0) return "^" + std::to_string(num);
        return "^(" + std::to_string(num) + ")";
    }
    return "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

namespace {

class TermParser {
public:
    TermParser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

    std::vector<ParsedTerm> parse() {
        std::vector<ParsedTerm> terms;
        skip_space();
        if (at_end()) fail("empty polynomial");
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        while (true) {
            ParsedTerm t = term();
            if (negative) t.coefficient = -t.coefficient;
            terms.push_back(std::move(t));
            skip_space();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
            negative = peek() == '-';
            ++pos_;
        }
        return terms;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(1, pos_ + 1, what); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    long integer() {
        skip_space();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected an integer");
        if (pos_ - start > 9) fail("exponent too large");
        return std::stol(std::string(text_.substr(start, pos_ - start)));
    }

    ParsedTerm term() {
        ParsedTerm t{1, {}};
        while (true) {
            factor(t);
            skip_space();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            return t;
        }
    }

    void factor(ParsedTerm& t) {
        skip_space();
        if (at_end()) fail("expected a factor");
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::size_t start = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            t.coefficient *= Coefficient(std::string(text_.substr(start, pos_ - start)));
            return;
        }
        if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') fail("expected a coefficient or variable");
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it == names_.end()) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        long num = 1;
        long den = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_space();
            if (!at_end() && peek() == '(') {
                ++pos_;
                skip_space();
                const bool neg = !at_end() && peek() == '-';
                if (neg) ++pos_;
                num = integer();
                if (neg) num = -num;
                skip_space();
                if (!at_end() && peek() == '/') {
                    ++pos_;
                    den = integer();
                    if (den == 0) fail("zero denominator");
                }
                skip_space();
                if (at_end() || peek() != ')') fail("expected ')'");
                ++pos_;
            } else {
                const bool neg = !at_end() && peek() == '-';
                if (neg) ++pos_;
                num = integer();
                if (neg) num = -num;
            }
        }
        t.powers.push_back({static_cast<std::size_t>(it - names_.begin()), {num, den}});
    }

    std::string_view text_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text, const std::vector<std::string>& names) {
    return TermParser(text, names).parse();
}

}  // namespace detail

BiLaurent restrict_duality_surface(const MultiLaurent& p) {
    BiLaurent out({p.names()[0], p.names()[1]});
    for (const auto& [e, c] : p.terms()) {
        // z = x^(-1/2) y^(-1/2); in doubled units each power of z subtracts 1 from both.
        out.add_term({e[0] - e[2], e[1] - e[2]}, c);
    }
    return out;
}

BiLaurent drop_third_variable(const MultiLaurent& p) {
    BiLaurent out({p.names()[0], p.names()[1]});
    for (const auto& [e, c] : p.terms()) {
        if (e[2] != 0) {
            throw Error(ErrorCode::FractionalExponent, "polynomial still depends on '" + p.names()[2] + "'");
        }
        out.add_term({e[0], e[1]}, c);
    }
    return out;
}

QuarterLaurent divide_exact(const QuarterLaurent& numerator, const QuarterLaurent& denominator) {
    if (denominator.is_zero()) throw Error(ErrorCode::InexactDivision, "division by zero");
    QuarterLaurent quotient(numerator.names());
    QuarterLaurent rest = numerator;
    const auto& [lead_exp, lead_coef] = *denominator.terms().rbegin();
    const int floor = numerator.is_zero() ? 0 : numerator.terms().begin()->first[0] - denominator.terms().begin()->first[0];
    while (!rest.is_zero()) {
        const auto& [top_exp, top_coef] = *rest.terms().rbegin();
        if (top_exp[0] - lead_exp[0] < floor) throw Error(ErrorCode::InexactDivision, "remainder is nonzero");
        if (top_coef % lead_coef != 0) throw Error(ErrorCode::InexactDivision, "coefficient not divisible");
        const auto step = QuarterLaurent::monomial({top_exp[0] - lead_exp[0]}, top_coef / lead_coef, numerator.names());
        quotient += step;
        rest -= step * denominator;
    }
    return quotient;
}

}  // namespace ribbon
