#include "blockalg/poly.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace blockalg {

SymbolTable::SymbolTable(std::vector<std::string> names) : names_(std::move(names)) {
    std::set<std::string> seen;
    for (const auto& name : names_) {
        if (name.empty()) throw std::invalid_argument("empty symbol name");
        if (!seen.insert(name).second) throw std::invalid_argument("duplicate symbol '" + name + "'");
    }
}

std::optional<std::size_t> SymbolTable::index_of(std::string_view name) const {
    for (std::size_t k = 0; k < names_.size(); ++k)
        if (names_[k] == name) return k;
    return std::nullopt;
}

SymbolTablePtr make_symbols(std::vector<std::string> names) {
    return std::make_shared<const SymbolTable>(std::move(names));
}

const SymbolTablePtr& parameter_symbols() {
    static const SymbolTablePtr table = make_symbols({"a", "b", "mu", "p", "q", "s", "z"});
    return table;
}

bool MonomialOrder::operator()(const std::vector<unsigned>& lhs, const std::vector<unsigned>& rhs) const {
    const unsigned dl = std::accumulate(lhs.begin(), lhs.end(), 0u);
    const unsigned dr = std::accumulate(rhs.begin(), rhs.end(), 0u);
    if (dl != dr) return dl > dr;
    return rhs < lhs;
}

Poly::Poly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

Poly Poly::variable(const SymbolTablePtr& symbols, std::string_view name) {
    if (!symbols) throw std::invalid_argument("variable without a symbol table");
    const auto index = symbols->index_of(name);
    if (!index) throw std::invalid_argument("symbol '" + std::string(name) + "' is not declared");
    Poly result;
    result.symbols_ = symbols;
    Exponents e(symbols->size(), 0);
    e[*index] = 1;
    result.terms_.emplace(std::move(e), Rational(1));
    return result;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (unsigned e : terms_.begin()->first)
        if (e != 0) return false;
    return true;
}

Rational Poly::constant_value() const {
    if (!is_constant()) throw std::invalid_argument("polynomial '" + to_string() + "' is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

unsigned Poly::degree_bound(std::string_view symbol) const {
    if (!symbols_) return 0;
    const auto index = symbols_->index_of(symbol);
    if (!index) return 0;
    unsigned best = 0;
    for (const auto& [e, c] : terms_) best = std::max(best, e[*index]);
    return best;
}

Poly Poly::substitute(const std::map<std::string, Rational>& bindings) const {
    if (!symbols_) return *this;
    std::vector<std::optional<Rational>> values(symbols_->size());
    for (const auto& [name, value] : bindings)
        if (auto index = symbols_->index_of(name)) values[*index] = value;

    Poly result;
    result.symbols_ = symbols_;
    for (const auto& [e, c] : terms_) {
        Exponents remaining = e;
        Rational coefficient = c;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (values[k] && e[k] > 0) {
                coefficient *= pow(*values[k], e[k]);
                remaining[k] = 0;
            }
        }
        result.add_term(remaining, coefficient);
    }
    return result;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;

        const Rational magnitude = negative ? -c : c;
        std::ostringstream monomial;
        bool any = false;
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (any) monomial << '*';
            monomial << symbols_->names()[k];
            if (e[k] > 1) monomial << '^' << e[k];
            any = true;
        }
        if (!any)
            out << magnitude;
        else if (magnitude == Rational(1))
            out << monomial.str();
        else
            out << magnitude << '*' << monomial.str();
    }
    return out.str();
}

void Poly::add_term(const Exponents& exponents, const Rational& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::with_symbols(const SymbolTablePtr& symbols) const {
    if (symbols_ == symbols) return *this;
    if (symbols_ && symbols && *symbols_ == *symbols) {
        Poly copy = *this;
        copy.symbols_ = symbols;
        return copy;
    }
    // only constants can move between tables
    Poly result;
    result.symbols_ = symbols;
    if (!terms_.empty()) result.terms_.emplace(Exponents(symbols ? symbols->size() : 0, 0), constant_value());
    return result;
}

SymbolTablePtr Poly::common_symbols(const Poly& lhs, const Poly& rhs) {
    if (lhs.symbols_ == rhs.symbols_) return lhs.symbols_;
    if (!lhs.symbols_) return rhs.symbols_;
    if (!rhs.symbols_) return lhs.symbols_;
    if (*lhs.symbols_ == *rhs.symbols_) return lhs.symbols_;
    if (lhs.is_constant()) return rhs.symbols_;
    if (rhs.is_constant()) return lhs.symbols_;

    for (const auto& name : rhs.symbols_->names())
        if (!lhs.symbols_->index_of(name))
            throw std::invalid_argument("symbol table mismatch: '" + name + "' is not declared in the left operand");
    for (const auto& name : lhs.symbols_->names())
        if (!rhs.symbols_->index_of(name))
            throw std::invalid_argument("symbol table mismatch: '" + name + "' is not declared in the right operand");
    for (std::size_t k = 0; k < lhs.symbols_->size(); ++k)
        if (lhs.symbols_->names()[k] != rhs.symbols_->names()[k])
            throw std::invalid_argument("symbol table mismatch: '" + lhs.symbols_->names()[k] +
                                        "' is declared at different positions");
    return lhs.symbols_;
}

Poly Poly::operator-() const {
    Poly result = *this;
    for (auto& [e, c] : result.terms_) c = -c;
    return result;
}

Poly& Poly::operator+=(const Poly& rhs) {
    const auto symbols = common_symbols(*this, rhs);
    *this = with_symbols(symbols);
    const Poly aligned = rhs.with_symbols(symbols);
    for (const auto& [e, c] : aligned.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    return *this += -rhs;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    const auto symbols = Poly::common_symbols(lhs, rhs);
    const Poly a = lhs.with_symbols(symbols);
    const Poly b = rhs.with_symbols(symbols);
    Poly result;
    result.symbols_ = symbols;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Poly::Exponents e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            result.add_term(e, ca * cb);
        }
    }
    return result;
}

Poly& Poly::operator*=(const Poly& rhs) {
    *this = *this * rhs;
    return *this;
}

Poly& Poly::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division of polynomial by zero");
    for (auto& [e, c] : terms_) c /= rhs;
    return *this;
}

bool operator==(const Poly& lhs, const Poly& rhs) {
    if (lhs.terms_.size() != rhs.terms_.size()) return false;
    if (lhs.is_constant() && rhs.is_constant()) return lhs.constant_value() == rhs.constant_value();
    if (!lhs.symbols_ || !rhs.symbols_ || !(*lhs.symbols_ == *rhs.symbols_)) return false;
    return lhs.terms_ == rhs.terms_;
}

Poly pow(const Poly& base, unsigned exponent) {
    Poly result(1);
    Poly square = base;
    while (exponent > 0) {
        if (exponent & 1u) result *= square;
        exponent >>= 1u;
        if (exponent > 0) square *= square;
    }
    return result;
}

}  // namespace blockalg
