#include "blockalg/novikov.hpp"

#include "blockalg/parallel.hpp"

#include <sstream>
#include <stdexcept>

namespace blockalg {

ProductRule linear_product_rule(std::string name, std::vector<ProductTerm> terms) {
    ProductRule rule;
    rule.name = std::move(name);
    rule.degree_bound = 1;
    rule.on_basis = [terms = std::move(terms)](std::int64_t a, std::int64_t b) {
        Element out;
        const Scalar sa{Rational(a)};
        const Scalar sb{Rational(b)};
        for (const auto& t : terms)
            out.add(BasisIndex::graded(a + b + t.offset, 0), t.constant + t.by_alpha * sa + t.by_beta * sb);
        return out;
    };
    return rule;
}

std::vector<ProductTerm> witt_terms(const WittNovikovParams& params) {
    return {
        ProductTerm{0, params.p, Scalar(), Scalar(1)},
        ProductTerm{params.theta, params.mu, Scalar(), Scalar()},
    };
}

ProductRule witt_novikov_rule(const WittNovikovParams& params) {
    return linear_product_rule("witt-novikov", witt_terms(params));
}

Element witt_novikov_product(const WittNovikovParams& params, std::int64_t a, std::int64_t b) {
    return witt_novikov_rule(params)(a, b);
}

ProductRule table_product_rule(std::string name, std::map<std::pair<std::int64_t, std::int64_t>, Element> table) {
    ProductRule rule;
    rule.name = std::move(name);
    rule.degree_bound = 0;
    std::set<std::int64_t> domain;
    for (const auto& [key, value] : table) {
        domain.insert(key.first);
        domain.insert(key.second);
    }
    rule.table_domain = domain;
    rule.on_basis = [table = std::move(table)](std::int64_t a, std::int64_t b) {
        const auto it = table.find({a, b});
        if (it == table.end())
            throw std::out_of_range("product table has no entry for x_" + std::to_string(a) + " * x_" + std::to_string(b));
        return it->second;
    };
    return rule;
}

ProductRule zero_product_rule() {
    return linear_product_rule("zero", {});
}

std::vector<ProductTerm> mutate_one_coefficient(std::vector<ProductTerm> terms, std::mt19937_64& rng) {
    if (terms.empty()) throw std::invalid_argument("cannot mutate an empty product rule");
    std::uniform_int_distribution<std::size_t> pick_term(0, terms.size() - 1);
    std::uniform_int_distribution<int> pick_slot(0, 2);
    std::uniform_int_distribution<long> pick_num(1, 5);
    std::uniform_int_distribution<long> pick_den(1, 4);
    std::uniform_int_distribution<int> pick_sign(0, 1);

    auto& term = terms[pick_term(rng)];
    const int slot = pick_slot(rng);
    const long num = pick_num(rng) * (pick_sign(rng) ? 1 : -1);
    const Rational delta(num, pick_den(rng));
    Scalar& target = slot == 0 ? term.constant : (slot == 1 ? term.by_alpha : term.by_beta);
    target += Scalar(delta);
    return terms;
}

Element multiply(const ProductRule& rule, const Element& x, const Element& y) {
    Element result;
    for (const auto& [a, ca] : x.support()) {
        for (const auto& [b, cb] : y.support()) {
            if (a.is_central() || b.is_central()) throw std::invalid_argument("central label in a Novikov product");
            result += rule(a.grade, b.grade) * (ca * cb);
        }
    }
    return result;
}

IndexGrid novikov_grid(const std::vector<std::int64_t>& values) {
    return {{"alpha", values}, {"beta", values}, {"gamma", values}};
}

namespace {

std::string describe(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                     const std::vector<std::int64_t>& c) {
    std::ostringstream out;
    auto list = [&out](const char* name, const std::vector<std::int64_t>& v) {
        out << name << "={";
        for (std::size_t k = 0; k < v.size(); ++k) out << (k ? "," : "") << v[k];
        out << '}';
    };
    list("alpha", a);
    out << ' ';
    list("beta", b);
    out << ' ';
    list("gamma", c);
    return out.str();
}

}  // namespace

NovikovVerdict novikov_axiom_check(const ProductRule& rule, const IndexGrid& grid, unsigned threads) {
    std::vector<std::int64_t> axes[3];
    const char* names[3] = {"alpha", "beta", "gamma"};
    if (rule.table_domain) {
        for (auto& axis : axes) axis.assign(rule.table_domain->begin(), rule.table_domain->end());
    } else {
        const std::size_t need = 2 * rule.degree_bound + 1;
        for (int a = 0; a < 3; ++a) {
            const auto it = grid.find(names[a]);
            const std::size_t have = it == grid.end() ? 0 : it->second.size();
            if (have < need)
                throw std::invalid_argument(std::string("grid for '") + names[a] + "' has " + std::to_string(have) +
                                            " values; at least " + std::to_string(need) + " required");
            if (std::set<std::int64_t>(it->second.begin(), it->second.end()).size() != have)
                throw std::invalid_argument(std::string("grid for '") + names[a] + "' has repeated values");
            axes[a] = it->second;
        }
    }
    const std::size_t total = axes[0].size() * axes[1].size() * axes[2].size();
    const auto pass = rule.universal() ? Verdict::Status::holds_universally : Verdict::Status::holds_on_window;
    const std::string scope = describe(axes[0], axes[1], axes[2]);

    auto run = [&](bool left_symmetry) {
        auto probe = [&](std::size_t linear) -> std::optional<Witness> {
            const std::int64_t g = axes[2][linear % axes[2].size()];
            linear /= axes[2].size();
            const std::int64_t b = axes[1][linear % axes[1].size()];
            linear /= axes[1].size();
            const std::int64_t a = axes[0][linear];
            const Element xa = Element::basis(a), xb = Element::basis(b), xc = Element::basis(g);
            Element residual;
            if (left_symmetry) {
                residual = multiply(rule, multiply(rule, xa, xb), xc) - multiply(rule, xa, multiply(rule, xb, xc)) -
                           multiply(rule, multiply(rule, xb, xa), xc) + multiply(rule, xb, multiply(rule, xa, xc));
            } else {
                residual = multiply(rule, multiply(rule, xa, xb), xc) - multiply(rule, multiply(rule, xa, xc), xb);
            }
            if (residual.is_zero()) return std::nullopt;
            return Witness{{{"alpha", a}, {"beta", b}, {"gamma", g}}, std::move(residual)};
        };
        Verdict v;
        v.scope = scope;
        if (auto failure = detail::first_failure<Witness>(total, threads, probe)) {
            v.status = Verdict::Status::fails;
            v.points_checked = failure->first + 1;
            v.witness = std::move(failure->second);
        } else {
            v.status = pass;
            v.points_checked = total;
        }
        return v;
    };
    return {run(true), run(false)};
}

BracketRule affinize(const ProductRule& rule, const AffinizationParams& params) {
    auto on_basis = [rule, q = params.q](const BasisIndex& x, const BasisIndex& y) {
        const Scalar left = Scalar(Rational(x.level)) + q;
        const Scalar right = Scalar(Rational(y.level)) + q;
        const std::int64_t level = x.level + y.level;
        Element out;
        const Element xy = rule(x.grade, y.grade), yx = rule(y.grade, x.grade);
        for (const auto& [label, c] : xy.support())
            out.add(BasisIndex::graded(label.grade, level), c * left);
        for (const auto& [label, c] : yx.support())
            out.add(BasisIndex::graded(label.grade, level), -(c * right));
        return out;
    };
    const std::string name = "affinization of " + rule.name;
    if (rule.universal()) return make_rule(name, on_basis, DegreeBounds{rule.degree_bound, 1});
    // table mode: grades are confined to the table, only levels vary freely
    return BracketRule{name, on_basis, DegreeBounds{0, 1}, true};
}

BracketRule bpqmt_rule(const Scalar& p, const Scalar& q, const Scalar& mu, std::int64_t theta) {
    auto on_basis = [=](const BasisIndex& x, const BasisIndex& y) {
        const Scalar a{Rational(x.grade)}, b{Rational(y.grade)};
        const Scalar i{Rational(x.level)}, j{Rational(y.level)};
        Element out;
        out.add(BasisIndex::graded(x.grade + y.grade, x.level + y.level), (i + q) * (b + p) - (j + q) * (a + p));
        out.add(BasisIndex::graded(x.grade + y.grade + theta, x.level + y.level), (i - j) * mu);
        return out;
    };
    return make_rule("B(p,q,mu,theta)", on_basis, DegreeBounds{1, 1});
}

EquivalenceRecord equivalence_probe(const ProductRule& rule, const AffinizationParams& params,
                                const IndexGrid& novikov_grid_values, const IndexGrid& jacobi_grid, unsigned threads) {
    EquivalenceRecord record;
    record.novikov = novikov_axiom_check(rule, novikov_grid_values, threads);
    const BracketRule lie = affinize(rule, params);
    if (rule.universal()) {
        record.jacobi = grid_identity_check(lie, Identity::jacobi, jacobi_grid, threads);
    } else {
        IndexGrid windowed = jacobi_grid;
        const std::vector<std::int64_t> grades(rule.table_domain->begin(), rule.table_domain->end());
        windowed["alpha"] = windowed["beta"] = windowed["gamma"] = grades;
        record.jacobi = grid_identity_check(lie, Identity::jacobi, windowed, threads);
        if (record.jacobi.holds()) record.jacobi.status = Verdict::Status::holds_on_window;
    }
    record.equivalence_observed = record.novikov.holds() == record.jacobi.holds();
    return record;
}

Verdict block_sZ_reindex_check(const Rational& s, const Window& window) {
    const Scalar ss(s);
    const BracketRule rule = bpqmt_rule(Scalar(1), ss - Scalar(1), -ss, 1);
    Verdict verdict;
    verdict.status = Verdict::Status::holds_on_window;
    std::ostringstream scope;
    scope << "s=" << s << " grades [" << window.grade_min << "," << window.grade_max << "] levels [0,"
          << window.level_max << "]";
    verdict.scope = scope.str();

    for (std::int64_t a = window.grade_min; a <= window.grade_max; ++a) {
        for (std::int64_t b = window.grade_min; b <= window.grade_max; ++b) {
            for (std::int64_t i = 0; i <= window.level_max; ++i) {
                for (std::int64_t j = 0; j <= window.level_max; ++j) {
                    ++verdict.points_checked;
                    Element lhs;
                    const Element shifted = rule(BasisIndex::graded(a - 1, i), BasisIndex::graded(b - 1, j));
                    for (const auto& [label, c] : shifted.support())
                        lhs.add(BasisIndex::graded(label.grade + 1, label.level), c);
                    const Scalar si{Rational(i)}, sj{Rational(j)}, sa{Rational(a)}, sb{Rational(b)};
                    Element rhs;
                    rhs.add(BasisIndex::graded(a + b, i + j), ss * (sj - si));
                    rhs.add(BasisIndex::graded(a + b - 1, i + j),
                            (si + ss - Scalar(1)) * sb - (sj + ss - Scalar(1)) * sa);
                    Element residual = lhs - rhs;
                    if (!residual.is_zero()) {
                        verdict.status = Verdict::Status::fails;
                        verdict.witness = Witness{{{"alpha", a}, {"i", i}, {"beta", b}, {"j", j}}, std::move(residual)};
                        return verdict;
                    }
                }
            }
        }
    }
    return verdict;
}

}  // namespace blockalg
