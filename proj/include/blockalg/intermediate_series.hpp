#pragma once

#include "blockalg/block_algebra.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace blockalg {

struct Aab {
    Rational a;
    Rational b;
};
struct Aa {
    Rational a;
};
struct Ba {
    Rational a;
};

using IntermediateKind = std::variant<Aab, Aa, Ba>;

std::string to_string(const IntermediateKind& kind);

/// Finite combination of the weight vectors v_mu.
class ModuleVector {
public:
    using Support = std::map<std::int64_t, Scalar>;

    ModuleVector() = default;
    static ModuleVector basis(std::int64_t mu, const Scalar& coefficient = Scalar(1));

    const Support& support() const& { return support_; }
    // by value on temporaries, so range-for over f().support() stays valid
    Support support() && { return std::move(support_); }
    bool is_zero() const { return support_.empty(); }
    Scalar coefficient(std::int64_t mu) const;
    void add(std::int64_t mu, const Scalar& coefficient);

    /// e.g. "3/2*v[3] - v[0]"; "0" when empty.
    std::string to_string() const;

    ModuleVector& operator+=(const ModuleVector& rhs);
    ModuleVector& operator-=(const ModuleVector& rhs);
    friend ModuleVector operator+(ModuleVector lhs, const ModuleVector& rhs) { return lhs += rhs; }
    friend ModuleVector operator-(ModuleVector lhs, const ModuleVector& rhs) { return lhs -= rhs; }
    friend bool operator==(const ModuleVector& lhs, const ModuleVector& rhs) { return lhs.support_ == rhs.support_; }

private:
    Support support_;
};

/// x . v, extended bilinearly. L_{a,i} acts as 0 for i > 0 and c acts by
/// `central_action` (0 for the genuine modules).
ModuleVector act(const IntermediateKind& kind, const BlockParams& params, const Element& x, const ModuleVector& v,
                 const Scalar& central_action = Scalar());

struct ModuleFailure {
    std::int64_t alpha = 0;
    std::int64_t i = 0;
    std::int64_t beta = 0;
    std::int64_t j = 0;
    std::int64_t mu = 0;
    ModuleVector residual;  // [x,y].v - x.(y.v) + y.(x.v)

    std::string to_string() const;
};

struct ModuleVerdict {
    Verdict::Status status = Verdict::Status::holds_on_window;
    /// Smallest failure by (|alpha|+|beta|, |mu|, i+j, then positive alpha first).
    std::optional<ModuleFailure> witness;
    std::vector<ModuleFailure> failures;
    std::uint64_t points_checked = 0;
    std::string scope;

    bool holds() const { return status != Verdict::Status::fails; }
};

/// Checks [x,y].v = x.(y.v) - y.(x.v) for x = L_{a,i}, y = L_{b,j} in the
/// window and v = v_mu with mu_min <= mu <= mu_max. Every failure is listed.
ModuleVerdict module_axiom_check(const IntermediateKind& kind, const BlockAlgebra& algebra, const Window& window,
                                 std::int64_t mu_min, std::int64_t mu_max, const Scalar& central_action = Scalar());

struct BoundednessReport {
    std::string kind;
    unsigned bound = 1;  // dim V_mu for every mu
};

BoundednessReport boundedness_report(const IntermediateKind& kind);

}  // namespace blockalg
