#pragma once

#include "blockalg/element.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace blockalg {

/// Per-variable degree of the structure coefficients in each argument's
/// grade and level.
struct DegreeBounds {
    unsigned grade = 1;
    unsigned level = 1;
};

/// Closed-form bracket on basis labels.
///
/// For a polynomial rule, [L[a,i], L[b,j]] is supported on labels
/// L[a+b+d, i+j+e] (and c) for finitely many constant offsets (d, e), and each
/// offset's coefficient is a polynomial in (a, i, b, j) within `bounds`. Grid
/// identity testing is only sound for polynomial rules.
struct BracketRule {
    std::string name;
    std::function<Element(const BasisIndex&, const BasisIndex&)> on_basis;
    DegreeBounds bounds;
    bool polynomial = true;
    std::int64_t min_level = std::numeric_limits<std::int64_t>::min();

    Element operator()(const BasisIndex& x, const BasisIndex& y) const;
};

/// Builds a rule and spot-checks the declared degree bounds with finite
/// differences on pseudo-random indices. Throws std::logic_error when a bound
/// is violated.
BracketRule make_rule(std::string name, std::function<Element(const BasisIndex&, const BasisIndex&)> on_basis,
                      DegreeBounds bounds, bool polynomial = true,
                      std::int64_t min_level = std::numeric_limits<std::int64_t>::min());

void verify_degree_bounds(const BracketRule& rule, std::uint64_t seed = 0x5eed);

/// Bilinear extension of the rule.
Element bracket_apply(const BracketRule& rule, const Element& x, const Element& y);

enum class Identity { antisymmetry, jacobi };

/// Distinct integer values per index symbol: alpha, i (first argument),
/// beta, j (second), gamma, k (third, Jacobi only).
using IndexGrid = std::map<std::string, std::vector<std::int64_t>>;

IndexGrid uniform_grid(Identity identity, const std::vector<std::int64_t>& grades,
                       const std::vector<std::int64_t>& levels);

struct Witness {
    std::vector<std::pair<std::string, std::int64_t>> indices;
    Element residual;

    std::string to_string() const;
};

struct Verdict {
    enum class Status { holds_universally, holds_on_window, fails };

    Status status = Status::holds_universally;
    std::optional<Witness> witness;
    std::uint64_t points_checked = 0;
    std::string scope;

    bool holds() const { return status != Status::fails; }
};

std::string to_string(Verdict::Status status);

std::size_t required_grid_size(const BracketRule& rule, Identity identity, const std::string& symbol);

/// Polynomial identity test of antisymmetry or Jacobi on a grid. A pass is a
/// proof for all integer indices because every residual coefficient is a
/// polynomial of per-variable degree below the grid size.
Verdict grid_identity_check(const BracketRule& rule, Identity identity, const IndexGrid& grid, unsigned threads = 1);

/// Finite truncation of the graded algebra: grades in [grade_min, grade_max],
/// levels in [0, level_max]; c lies in grade 0.
struct Window {
    std::int64_t grade_min = 0;
    std::int64_t grade_max = 0;
    std::int64_t level_max = 0;

    Window() = default;
    Window(std::int64_t gmin, std::int64_t gmax, std::int64_t lmax);

    bool contains(const BasisIndex& index) const;
};

Element truncate(const Element& x, const Window& window);

/// Grade of a homogeneous element (c counts as grade 0); nullopt otherwise.
std::optional<std::int64_t> homogeneous_grade(const Element& x);

/// Row-reduced echelon bases of a windowed subalgebra, keyed by grade.
struct GradedBasis {
    Window window;
    std::map<std::int64_t, std::vector<Element>> by_grade;

    std::size_t dimension() const;
    std::size_t dimension(std::int64_t grade) const;
};

GradedBasis subalgebra_closure(const BracketRule& rule, const std::vector<Element>& generators, const Window& window);

bool membership(const Element& element, const GradedBasis& closure);

/// ad_{z2}^{l2-1} ad_{z1}^{l1} (z2).
Element adjoint_chain(const BracketRule& rule, const Element& z1, const Element& z2, unsigned l1, unsigned l2);

}  // namespace blockalg
