#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ribbon/error.hpp"

namespace ribbon {

using Coefficient = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial with integer coefficients in `sizeof...(Scales)` variables.
/// Exponents are stored as integers in units of 1/Scale of the corresponding variable,
/// so x^(1/2) with Scale 2 is stored as 1. Zero coefficients are never stored.
template <int... Scales>
class Laurent {
public:
    static constexpr std::size_t arity = sizeof...(Scales);
    static constexpr std::array<int, arity> scales{Scales...};

    using Exponents = std::array<int, arity>;
    using Names = std::array<std::string, arity>;
    using Terms = std::map<Exponents, Coefficient>;

    static Names default_names() {
        if constexpr (arity == 3) return {"x", "y", "z"};
        else if constexpr (arity == 2) return {"x", "y"};
        else if constexpr (arity == 1) return {"t"};
        else return Names{};
    }

    Laurent() : names_(default_names()) {}
    explicit Laurent(Names names) : names_(std::move(names)) {}

    static Laurent constant(const Coefficient& c, Names names = default_names()) {
        return monomial(Exponents{}, c, std::move(names));
    }

    /// `units` are exponents already multiplied by the variable scales.
    static Laurent monomial(const Exponents& units, const Coefficient& c = 1, Names names = default_names()) {
        Laurent p(std::move(names));
        p.add_term(units, c);
        return p;
    }

    /// The variable itself, i.e. exponent 1 (= `scales[i]` units).
    static Laurent variable(std::size_t i, Names names = default_names()) {
        Exponents units{};
        units[i] = scales[i];
        return monomial(units, 1, std::move(names));
    }

    const Terms& terms() const noexcept { return terms_; }
    const Names& names() const noexcept { return names_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    Laurent with_names(Names names) const {
        Laurent copy = *this;
        copy.names_ = std::move(names);
        return copy;
    }

    Coefficient coefficient(const Exponents& units) const {
        auto it = terms_.find(units);
        return it == terms_.end() ? Coefficient{0} : it->second;
    }

    void add_term(const Exponents& units, const Coefficient& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(units, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// A single term with coefficient +1 or -1.
    bool is_unit_monomial() const {
        return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1);
    }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    Laurent& operator*=(const Laurent& o) {
        *this = *this * o;
        return *this;
    }

    Laurent& operator*=(const Coefficient& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [e, c] : terms_) c *= s;
        }
        return *this;
    }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator-(Laurent a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend Laurent operator*(Laurent a, const Coefficient& s) { return a *= s; }
    friend Laurent operator*(const Coefficient& s, Laurent a) { return a *= s; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent out(a.names_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (std::size_t i = 0; i < arity; ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    /// Coefficients only; variable names do not take part in equality.
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

    /// Nonnegative power; negative powers are allowed for unit monomials.
    Laurent pow(int k) const {
        if (k < 0) {
            if (!is_unit_monomial()) {
                throw Error(ErrorCode::NegativeExponentNonUnit, "negative power of a non-monomial");
            }
            const auto& [e, c] = *terms_.begin();
            Exponents inv;
            for (std::size_t i = 0; i < arity; ++i) inv[i] = -e[i];
            return monomial(inv, c, names_).pow(-k);
        }
        Laurent result = constant(1, names_);
        Laurent base = *this;
        while (k > 0) {
            if (k & 1) result *= base;
            k >>= 1;
            if (k > 0) base = base * base;
        }
        return result;
    }

private:
    Names names_;
    Terms terms_;
};

/// Polynomials in x^(1/2), y^(1/2), z (or A, B, d).
using MultiLaurent = Laurent<2, 2, 1>;
/// Polynomials in x^(1/2), y^(1/2): the image of the restriction x^(1/2) y^(1/2) z = 1.
using BiLaurent = Laurent<2, 2>;
/// Polynomials in t^(1/4).
using QuarterLaurent = Laurent<4>;

inline const MultiLaurent::Names kBracketNames{"A", "B", "d"};

/// Polynomial composition: replaces variable `var` of p by q.
/// Throws Error{FractionalExponent} if `var` occurs with a non-integer exponent and
/// Error{NegativeExponentNonUnit} if it occurs with a negative exponent while q is not
/// a unit monomial.
template <int... S>
Laurent<S...> substitute(const Laurent<S...>& p, std::size_t var, const Laurent<S...>& q) {
    using L = Laurent<S...>;
    const int scale = L::scales.at(var);
    std::map<int, L> powers;
    L out(p.names());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] % scale != 0) {
            throw Error(ErrorCode::FractionalExponent,
                        "variable '" + p.names()[var] + "' has a fractional exponent");
        }
        const int k = e[var] / scale;
        auto it = powers.find(k);
        if (it == powers.end()) it = powers.emplace(k, q.pow(k)).first;
        auto rest = e;
        rest[var] = 0;
        out += L::monomial(rest, c, p.names()) * it->second;
    }
    return out;
}

/// Exchanges two variables with equal scales.
template <int... S>
Laurent<S...> swap_variables(const Laurent<S...>& p, std::size_t i, std::size_t j) {
    using L = Laurent<S...>;
    if (L::scales.at(i) != L::scales.at(j)) {
        throw Error(ErrorCode::FractionalExponent, "cannot swap variables with different exponent scales");
    }
    L out(p.names());
    for (const auto& [e, c] : p.terms()) {
        auto f = e;
        std::swap(f[i], f[j]);
        out.add_term(f, c);
    }
    return out;
}

namespace detail {

std::string render_exponent(int units, int scale);

template <int... S>
std::string render_term(const Laurent<S...>& p, const typename Laurent<S...>::Exponents& e,
                        const Coefficient& c, bool first) {
    using L = Laurent<S...>;
    std::string vars;
    for (std::size_t i = 0; i < L::arity; ++i) {
        if (e[i] == 0) continue;
        if (!vars.empty()) vars += '*';
        vars += p.names()[i];
        vars += render_exponent(e[i], L::scales[i]);
    }
    const Coefficient mag = c < 0 ? Coefficient(-c) : c;
    std::string body;
    if (vars.empty()) body = mag.str();
    else if (mag == 1) body = vars;
    else body = mag.str() + "*" + vars;
    if (first) return (c < 0 ? "-" : "") + body;
    return (c < 0 ? " - " : " + ") + body;
}

}  // namespace detail

/// Canonical text form. Multivariate polynomials list terms by descending total degree,
/// then descending exponents in variable order; univariate ones by ascending exponent.
template <int... S>
std::string render(const Laurent<S...>& p) {
    using L = Laurent<S...>;
    if (p.is_zero()) return "0";
    constexpr int common = 4;
    static_assert(((common % S == 0) && ...), "exponent scales must divide 4");
    std::vector<std::pair<typename L::Exponents, Coefficient>> terms(p.terms().begin(), p.terms().end());
    auto degree = [](const typename L::Exponents& e) {
        long d = 0;
        for (std::size_t i = 0; i < L::arity; ++i) d += static_cast<long>(e[i]) * (common / L::scales[i]);
        return d;
    };
    if constexpr (L::arity == 1) {
        // std::map order is already ascending.
    } else {
        std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
            const long da = degree(a.first);
            const long db = degree(b.first);
            if (da != db) return da > db;
            return a.first > b.first;
        });
    }
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        out += detail::render_term(p, terms[i].first, terms[i].second, i == 0);
    }
    return out;
}

template <int... S>
std::ostream& operator<<(std::ostream& os, const Laurent<S...>& p) {
    return os << render(p);
}

namespace detail {

/// Parsed monomial factors: coefficient and exponents in units, per variable name.
struct ParsedTerm {
    Coefficient coefficient;
    std::vector<std::pair<std::size_t, std::pair<long, long>>> powers;  // var index, p/q
};

std::vector<ParsedTerm> parse_terms(std::string_view text, const std::vector<std::string>& names);

}  // namespace detail

/// Reads the canonical text form (any term order, any factor order).
/// Throws ParseError on malformed input or exponents finer than the variable's scale.
template <class L>
L parse_laurent(std::string_view text, typename L::Names names = L::default_names()) {
    const std::vector<std::string> name_list(names.begin(), names.end());
    L out(names);
    for (const auto& term : detail::parse_terms(text, name_list)) {
        typename L::Exponents e{};
        for (const auto& [var, frac] : term.powers) {
            const long num = frac.first * L::scales[var];
            if (num % frac.second != 0) {
                throw ParseError(1, 1, "exponent of '" + names[var] + "' is finer than 1/" +
                                           std::to_string(L::scales[var]));
            }
            e[var] += static_cast<int>(num / frac.second);
        }
        out.add_term(e, term.coefficient);
    }
    return out;
}

/// Eliminates z on the surface x^(1/2) y^(1/2) z = 1: x^a y^b z^c -> x^(a-c/2) y^(b-c/2).
BiLaurent restrict_duality_surface(const MultiLaurent& p);

/// Drops the third variable; throws Error{FractionalExponent} if it occurs at all.
BiLaurent drop_third_variable(const MultiLaurent& p);

/// Exact quotient of univariate Laurent polynomials. Throws Error{InexactDivision}.
QuarterLaurent divide_exact(const QuarterLaurent& numerator, const QuarterLaurent& denominator);

}  // namespace ribbon
