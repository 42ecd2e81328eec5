#include "blockalg/element.hpp"

#include <sstream>

namespace blockalg {

std::string BasisIndex::to_string() const {
    if (is_central()) return "c";
    return "L[" + std::to_string(grade) + "," + std::to_string(level) + "]";
}

Element::Element(const BasisIndex& index, const Scalar& coefficient) {
    add(index, coefficient);
}

Scalar Element::coefficient(const BasisIndex& index) const {
    const auto it = support_.find(index);
    return it == support_.end() ? Scalar() : it->second;
}

void Element::add(const BasisIndex& index, const Scalar& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = support_.try_emplace(index, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) support_.erase(it);
    }
}

bool Element::is_concrete() const {
    for (const auto& [index, c] : support_)
        if (!c.is_constant()) return false;
    return true;
}

std::string Element::to_string() const {
    if (support_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [index, c] : support_) {
        if (c.is_constant()) {
            Rational value = c.constant_value();
            if (value.sign() < 0) {
                out << (first ? "-" : " - ");
                value = -value;
            } else if (!first) {
                out << " + ";
            }
            if (value != Rational(1)) out << value << '*';
        } else {
            if (!first) out << " + ";
            out << '(' << c << ")*";
        }
        out << index.to_string();
        first = false;
    }
    return out.str();
}

Element Element::operator-() const {
    Element result = *this;
    for (auto& [index, c] : result.support_) c = -c;
    return result;
}

Element& Element::operator+=(const Element& rhs) {
    for (const auto& [index, c] : rhs.support_) add(index, c);
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    for (const auto& [index, c] : rhs.support_) add(index, -c);
    return *this;
}

Element& Element::operator*=(const Scalar& rhs) {
    if (rhs.is_zero()) {
        support_.clear();
        return *this;
    }
    for (auto it = support_.begin(); it != support_.end();) {
        it->second *= rhs;
        if (it->second.is_zero())
            it = support_.erase(it);
        else
            ++it;
    }
    return *this;
}

}  // namespace blockalg
