#pragma once

#include "blockalg/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace blockalg {

/// Ordered list of distinct, nonempty indeterminate names.
class SymbolTable {
public:
    explicit SymbolTable(std::vector<std::string> names);

    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return names_.size(); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const SymbolTable&, const SymbolTable&) = default;

private:
    std::vector<std::string> names_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

SymbolTablePtr make_symbols(std::vector<std::string> names);

/// Shared table for algebra parameters: a, b, mu, p, q, s, z.
const SymbolTablePtr& parameter_symbols();

/// Total degree descending, then exponent vectors lexicographically descending.
struct MonomialOrder {
    bool operator()(const std::vector<unsigned>& lhs, const std::vector<unsigned>& rhs) const;
};

/// Sparse multivariate polynomial over the rationals.
///
/// A polynomial without a symbol table is a constant; it combines with any
/// other polynomial. Two non-constant polynomials must share a symbol table
/// (compared by content), otherwise arithmetic throws std::invalid_argument
/// naming the first offending symbol.
class Poly {
public:
    using Exponents = std::vector<unsigned>;
    using Terms = std::map<Exponents, Rational, MonomialOrder>;

    Poly() = default;
    Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

    static Poly variable(const SymbolTablePtr& symbols, std::string_view name);

    const SymbolTablePtr& symbols() const { return symbols_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Throws std::invalid_argument when the polynomial is not constant.
    Rational constant_value() const;

    /// Largest exponent of `symbol` across the support; 0 for undeclared symbols.
    unsigned degree_bound(std::string_view symbol) const;

    /// Evaluation homomorphism for the bound symbols; unbound symbols remain.
    Poly substitute(const std::map<std::string, Rational>& bindings) const;

    std::string to_string() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    /// Division by a nonzero rational constant only.
    Poly& operator/=(const Rational& rhs);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator/(Poly lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Poly& lhs, const Poly& rhs);

private:
    void add_term(const Exponents& exponents, const Rational& coefficient);
    Poly with_symbols(const SymbolTablePtr& symbols) const;
    static SymbolTablePtr common_symbols(const Poly& lhs, const Poly& rhs);

    SymbolTablePtr symbols_;
    Terms terms_;
};

Poly pow(const Poly& base, unsigned exponent);

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace blockalg
