#pragma once

#include "blockalg/lie_engine.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace blockalg {

/// Parameters of x_a x_b = (b + p) x_{a+b} + mu x_{a+b+theta}.
struct WittNovikovParams {
    Scalar p;
    Scalar mu;
    std::int64_t theta = 0;
};

/// Output term (constant + by_alpha*a + by_beta*b) * x_{a+b+offset}.
struct ProductTerm {
    std::int64_t offset = 0;
    Scalar constant;
    Scalar by_alpha;
    Scalar by_beta;
};

/// Bilinear product on a space with basis x_a, a in Z. Witt labels are
/// stored as L[a, 0].
struct ProductRule {
    std::string name;
    std::function<Element(std::int64_t, std::int64_t)> on_basis;
    unsigned degree_bound = 1;
    /// Set in table mode: products are only known on this index set, and
    /// verdicts are window-relative.
    std::optional<std::set<std::int64_t>> table_domain;

    bool universal() const { return !table_domain; }
    Element operator()(std::int64_t a, std::int64_t b) const { return on_basis(a, b); }
};

ProductRule linear_product_rule(std::string name, std::vector<ProductTerm> terms);

std::vector<ProductTerm> witt_terms(const WittNovikovParams& params);
ProductRule witt_novikov_rule(const WittNovikovParams& params);
Element witt_novikov_product(const WittNovikovParams& params, std::int64_t a, std::int64_t b);

/// Table mode: `table` maps (a, b) to x_a x_b. Missing entries among the
/// domain are an error when a check needs them.
ProductRule table_product_rule(std::string name, std::map<std::pair<std::int64_t, std::int64_t>, Element> table);

ProductRule zero_product_rule();

/// Perturbs one coefficient of one term by a random nonzero rational.
std::vector<ProductTerm> mutate_one_coefficient(std::vector<ProductTerm> terms, std::mt19937_64& rng);

/// Bilinear extension to Elements over Witt labels.
Element multiply(const ProductRule& rule, const Element& x, const Element& y);

struct NovikovVerdict {
    Verdict left_symmetry;
    Verdict right_commutativity;

    bool holds() const { return left_symmetry.holds() && right_commutativity.holds(); }
};

/// Grid keys: alpha, beta, gamma; each needs 2*degree_bound + 1 distinct
/// values. Table-mode rules are checked on all triples of the domain and the
/// grid is ignored.
NovikovVerdict novikov_axiom_check(const ProductRule& rule, const IndexGrid& grid, unsigned threads = 1);

IndexGrid novikov_grid(const std::vector<std::int64_t>& values);

struct AffinizationParams {
    Scalar q;
};

/// [a[m], b[n]] = (m+q)(ab)[m+n] - (n+q)(ba)[m+n], with a[m] stored as
/// L[grade of a, m] for every integer m.
BracketRule affinize(const ProductRule& rule, const AffinizationParams& params);

/// B(p,q,mu,theta) from its closed form.
BracketRule bpqmt_rule(const Scalar& p, const Scalar& q, const Scalar& mu, std::int64_t theta);

struct EquivalenceRecord {
    NovikovVerdict novikov;
    Verdict jacobi;
    bool equivalence_observed = false;
};

/// Reports the Novikov verdict and the Jacobi verdict of the affinization and
/// whether they agree.
EquivalenceRecord equivalence_probe(const ProductRule& rule, const AffinizationParams& params,
                                  const IndexGrid& novikov_grid, const IndexGrid& jacobi_grid, unsigned threads = 1);

/// Checks that B(1, s-1, -s, 1) relabeled by R[a,i] = L[a-1,i] satisfies
/// [R_{a,i}, R_{b,j}] = s(j-i) R_{a+b,i+j} + ((i+s-1)b - (j+s-1)a) R_{a+b-1,i+j}
/// for grades a, b in the window and levels 0..level_max.
Verdict block_sZ_reindex_check(const Rational& s, const Window& window);

}  // namespace blockalg
