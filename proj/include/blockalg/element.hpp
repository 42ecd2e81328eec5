#pragma once

#include "blockalg/poly.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace blockalg {

using Scalar = Poly;

/// Basis label: L[grade, level] or the central element c.
///
/// Ordering is grade ascending, then level ascending, with c after every
/// graded label. Levels are signed so the unrestricted affinized algebras can
/// use the same labels; B(p,q) itself rejects negative levels.
struct BasisIndex {
    enum class Kind { graded, central };

    Kind kind = Kind::graded;
    std::int64_t grade = 0;
    std::int64_t level = 0;

    static BasisIndex graded(std::int64_t grade, std::int64_t level = 0) { return {Kind::graded, grade, level}; }
    static BasisIndex central() { return {Kind::central, 0, 0}; }

    bool is_central() const { return kind == Kind::central; }

    friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
    friend std::strong_ordering operator<=>(const BasisIndex& lhs, const BasisIndex& rhs) {
        if (lhs.kind != rhs.kind) return lhs.kind == Kind::graded ? std::strong_ordering::less : std::strong_ordering::greater;
        if (lhs.kind == Kind::central) return std::strong_ordering::equal;
        if (auto c = lhs.grade <=> rhs.grade; c != 0) return c;
        return lhs.level <=> rhs.level;
    }

    std::string to_string() const;
};

/// Finite linear combination of basis labels with Scalar coefficients.
class Element {
public:
    using Support = std::map<BasisIndex, Scalar>;

    Element() = default;
    Element(const BasisIndex& index, const Scalar& coefficient = Scalar(1));

    static Element basis(std::int64_t grade, std::int64_t level = 0) { return Element(BasisIndex::graded(grade, level)); }
    static Element central(const Scalar& coefficient = Scalar(1)) { return Element(BasisIndex::central(), coefficient); }

    const Support& support() const& { return support_; }
    // by value on temporaries, so range-for over f().support() stays valid
    Support support() && { return std::move(support_); }
    bool is_zero() const { return support_.empty(); }
    Scalar coefficient(const BasisIndex& index) const;

    /// Adds `coefficient * index`, dropping the entry if it cancels.
    void add(const BasisIndex& index, const Scalar& coefficient);

    /// True when every coefficient is a rational constant.
    bool is_concrete() const;

    /// Serialized as e.g. "-4*L[0,0] + 1/2*c"; "0" for the zero element.
    std::string to_string() const;

    Element operator-() const;
    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const Scalar& rhs);

    friend Element operator+(Element lhs, const Element& rhs) { return lhs += rhs; }
    friend Element operator-(Element lhs, const Element& rhs) { return lhs -= rhs; }
    friend Element operator*(Element lhs, const Scalar& rhs) { return lhs *= rhs; }
    friend Element operator*(const Scalar& lhs, Element rhs) { return rhs *= lhs; }

    friend bool operator==(const Element& lhs, const Element& rhs) { return lhs.support_ == rhs.support_; }

private:
    Support support_;
};

inline std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

}  // namespace blockalg
