#include "blockalg/lie_engine.hpp"

#include "blockalg/parallel.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace blockalg {

Element BracketRule::operator()(const BasisIndex& x, const BasisIndex& y) const {
    if (x.is_central() || y.is_central()) return {};
    return on_basis(x, y);
}

BracketRule make_rule(std::string name, std::function<Element(const BasisIndex&, const BasisIndex&)> on_basis,
                      DegreeBounds bounds, bool polynomial, std::int64_t min_level) {
    BracketRule rule{std::move(name), std::move(on_basis), bounds, polynomial, min_level};
    if (polynomial) verify_degree_bounds(rule);
    return rule;
}

namespace {

struct OffsetKey {
    bool central = false;
    std::int64_t grade = 0;
    std::int64_t level = 0;
    auto operator<=>(const OffsetKey&) const = default;
};

Rational binomial(unsigned n, unsigned k) {
    Rational r(1);
    for (unsigned t = 0; t < k; ++t) r = r * Rational(static_cast<long>(n - t)) / Rational(static_cast<long>(t + 1));
    return r;
}

}  // namespace

void verify_degree_bounds(const BracketRule& rule, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::int64_t level_lo = rule.min_level == std::numeric_limits<std::int64_t>::min() ? -3 : rule.min_level;
    std::uniform_int_distribution<std::int64_t> grade_dist(-5, 5);
    std::uniform_int_distribution<std::int64_t> level_dist(level_lo, level_lo + 5);

    for (int slot = 0; slot < 4; ++slot) {
        const bool is_level = slot % 2 == 1;
        const unsigned d = is_level ? rule.bounds.level : rule.bounds.grade;
        for (int trial = 0; trial < 3; ++trial) {
            std::int64_t base[4] = {grade_dist(rng), level_dist(rng), grade_dist(rng), level_dist(rng)};
            std::map<OffsetKey, std::vector<Scalar>> samples;
            for (unsigned t = 0; t <= d + 1; ++t) {
                std::int64_t idx[4] = {base[0], base[1], base[2], base[3]};
                idx[slot] += static_cast<std::int64_t>(t);
                const Element out = rule(BasisIndex::graded(idx[0], idx[1]), BasisIndex::graded(idx[2], idx[3]));
                for (const auto& [label, c] : out.support()) {
                    OffsetKey key;
                    if (label.is_central())
                        key.central = true;
                    else
                        key = {false, label.grade - idx[0] - idx[2], label.level - idx[1] - idx[3]};
                    auto& column = samples[key];
                    column.resize(d + 2);
                    column[t] = c;
                }
            }
            for (const auto& [key, column] : samples) {
                Scalar difference;
                for (unsigned t = 0; t <= d + 1; ++t) {
                    Scalar term = column[t] * Scalar(binomial(d + 1, t));
                    if (t % 2 == 0)
                        difference += term;
                    else
                        difference -= term;
                }
                if (!difference.is_zero())
                    throw std::logic_error("rule '" + rule.name + "' exceeds its declared " +
                                           (is_level ? "level" : "grade") + " degree bound " + std::to_string(d));
            }
        }
    }
}

Element bracket_apply(const BracketRule& rule, const Element& x, const Element& y) {
    Element result;
    for (const auto& [a, ca] : x.support()) {
        for (const auto& [b, cb] : y.support()) {
            Element term = rule(a, b);
            if (term.is_zero()) continue;
            result += term * (ca * cb);
        }
    }
    return result;
}

IndexGrid uniform_grid(Identity identity, const std::vector<std::int64_t>& grades,
                       const std::vector<std::int64_t>& levels) {
    IndexGrid grid{{"alpha", grades}, {"i", levels}, {"beta", grades}, {"j", levels}};
    if (identity == Identity::jacobi) {
        grid["gamma"] = grades;
        grid["k"] = levels;
    }
    return grid;
}

std::string Witness::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, value] : indices) {
        out << (first ? "" : ", ") << name << '=' << value;
        first = false;
    }
    out << "; residual " << residual.to_string();
    return out.str();
}

std::string to_string(Verdict::Status status) {
    switch (status) {
        case Verdict::Status::holds_universally: return "holds_universally";
        case Verdict::Status::holds_on_window: return "holds_on_window";
        case Verdict::Status::fails: return "fails";
    }
    return "unknown";
}

namespace {

const std::vector<std::string>& grid_symbols(Identity identity) {
    static const std::vector<std::string> two = {"alpha", "i", "beta", "j"};
    static const std::vector<std::string> three = {"alpha", "i", "beta", "j", "gamma", "k"};
    return identity == Identity::jacobi ? three : two;
}

bool is_level_symbol(const std::string& symbol) {
    return symbol == "i" || symbol == "j" || symbol == "k";
}

std::string describe_grid(const IndexGrid& grid, const std::vector<std::string>& symbols) {
    std::ostringstream out;
    bool first = true;
    for (const auto& symbol : symbols) {
        out << (first ? "" : " ") << symbol << "={";
        const auto& values = grid.at(symbol);
        for (std::size_t k = 0; k < values.size(); ++k) out << (k ? "," : "") << values[k];
        out << '}';
        first = false;
    }
    return out.str();
}

}  // namespace

std::size_t required_grid_size(const BracketRule& rule, Identity identity, const std::string& symbol) {
    const unsigned d = is_level_symbol(symbol) ? rule.bounds.level : rule.bounds.grade;
    return identity == Identity::jacobi ? 2 * d + 1 : d + 1;
}

Verdict grid_identity_check(const BracketRule& rule, Identity identity, const IndexGrid& grid, unsigned threads) {
    if (!rule.polynomial)
        throw std::invalid_argument("rule '" + rule.name +
                                    "' has non-polynomial structure constants; grid identity testing is unsound");
    const auto& symbols = grid_symbols(identity);
    for (const auto& symbol : symbols) {
        const auto it = grid.find(symbol);
        const std::size_t need = required_grid_size(rule, identity, symbol);
        const std::size_t have = it == grid.end() ? 0 : it->second.size();
        if (have < need)
            throw std::invalid_argument("grid for '" + symbol + "' has " + std::to_string(have) +
                                        " values; at least " + std::to_string(need) + " required");
        if (std::set<std::int64_t>(it->second.begin(), it->second.end()).size() != have)
            throw std::invalid_argument("grid for '" + symbol + "' has repeated values");
        if (is_level_symbol(symbol))
            for (auto v : it->second)
                if (v < rule.min_level)
                    throw std::invalid_argument("grid level " + std::to_string(v) + " for '" + symbol +
                                                "' is below the rule's minimum level");
    }

    std::vector<const std::vector<std::int64_t>*> axes;
    std::size_t total = 1;
    for (const auto& symbol : symbols) {
        axes.push_back(&grid.at(symbol));
        total *= axes.back()->size();
    }

    auto probe = [&](std::size_t linear) -> std::optional<Witness> {
        std::vector<std::int64_t> v(axes.size());
        for (std::size_t a = axes.size(); a-- > 0;) {
            v[a] = (*axes[a])[linear % axes[a]->size()];
            linear /= axes[a]->size();
        }
        const Element x(BasisIndex::graded(v[0], v[1]));
        const Element y(BasisIndex::graded(v[2], v[3]));
        Element residual;
        if (identity == Identity::antisymmetry) {
            residual = bracket_apply(rule, x, y) + bracket_apply(rule, y, x);
        } else {
            const Element z(BasisIndex::graded(v[4], v[5]));
            residual = bracket_apply(rule, x, bracket_apply(rule, y, z)) +
                       bracket_apply(rule, y, bracket_apply(rule, z, x)) +
                       bracket_apply(rule, z, bracket_apply(rule, x, y));
        }
        if (residual.is_zero()) return std::nullopt;
        Witness w;
        for (std::size_t a = 0; a < symbols.size(); ++a) w.indices.emplace_back(symbols[a], v[a]);
        w.residual = std::move(residual);
        return w;
    };

    Verdict verdict;
    verdict.scope = describe_grid(grid, symbols);
    if (auto failure = detail::first_failure<Witness>(total, threads, probe)) {
        verdict.status = Verdict::Status::fails;
        verdict.points_checked = failure->first + 1;
        verdict.witness = std::move(failure->second);
    } else {
        verdict.status = Verdict::Status::holds_universally;
        verdict.points_checked = total;
    }
    return verdict;
}

Window::Window(std::int64_t gmin, std::int64_t gmax, std::int64_t lmax) : grade_min(gmin), grade_max(gmax), level_max(lmax) {
    if (gmin > gmax) throw std::invalid_argument("window grade_min exceeds grade_max");
    if (lmax < 0) throw std::invalid_argument("window level_max is negative");
}

bool Window::contains(const BasisIndex& index) const {
    if (index.is_central()) return grade_min <= 0 && 0 <= grade_max;
    return grade_min <= index.grade && index.grade <= grade_max && 0 <= index.level && index.level <= level_max;
}

Element truncate(const Element& x, const Window& window) {
    Element result;
    for (const auto& [index, c] : x.support())
        if (window.contains(index)) result.add(index, c);
    return result;
}

std::optional<std::int64_t> homogeneous_grade(const Element& x) {
    std::optional<std::int64_t> grade;
    for (const auto& [index, c] : x.support()) {
        const std::int64_t g = index.is_central() ? 0 : index.grade;
        if (grade && *grade != g) return std::nullopt;
        grade = g;
    }
    return grade;
}

std::size_t GradedBasis::dimension() const {
    std::size_t n = 0;
    for (const auto& [grade, rows] : by_grade) n += rows.size();
    return n;
}

std::size_t GradedBasis::dimension(std::int64_t grade) const {
    const auto it = by_grade.find(grade);
    return it == by_grade.end() ? 0 : it->second.size();
}

namespace {

void require_concrete(const Element& x, const char* what) {
    if (!x.is_concrete())
        throw std::invalid_argument(std::string(what) + " has symbolic coefficients; closure needs concrete parameters");
}

/// Reduces `v` against fully reduced rows whose leading labels are pivots.
Element reduce(Element v, const std::vector<Element>& rows) {
    for (const auto& row : rows) {
        const BasisIndex& pivot = row.support().begin()->first;
        const Scalar c = v.coefficient(pivot);
        if (!c.is_zero()) v -= row * c;
    }
    return v;
}

/// Inserts `v` into the reduced echelon rows if independent; returns true then.
bool insert_row(std::vector<Element>& rows, const Element& v) {
    Element r = reduce(v, rows);
    if (r.is_zero()) return false;
    const Rational lead = r.support().begin()->second.constant_value();
    r *= Scalar(Rational(1) / lead);
    const BasisIndex pivot = r.support().begin()->first;
    for (auto& row : rows) {
        const Scalar c = row.coefficient(pivot);
        if (!c.is_zero()) row -= r * c;
    }
    auto pos = std::find_if(rows.begin(), rows.end(),
                            [&](const Element& row) { return pivot < row.support().begin()->first; });
    rows.insert(pos, std::move(r));
    return true;
}

}  // namespace

GradedBasis subalgebra_closure(const BracketRule& rule, const std::vector<Element>& generators, const Window& window) {
    GradedBasis basis;
    basis.window = window;
    std::vector<Element> spanning;

    auto offer = [&](const Element& candidate) {
        const Element v = truncate(candidate, window);
        if (v.is_zero()) return;
        require_concrete(v, "bracket product");
        const auto grade = homogeneous_grade(v);
        if (!grade) throw std::invalid_argument("element " + v.to_string() + " is not homogeneous");
        if (insert_row(basis.by_grade[*grade], v)) spanning.push_back(v);
    };

    for (const auto& g : generators) {
        require_concrete(g, "generator");
        if (!g.is_zero() && !homogeneous_grade(g))
            throw std::invalid_argument("generator " + g.to_string() + " is not homogeneous");
        offer(g);
    }
    for (std::size_t n = 0; n < spanning.size(); ++n)
        for (std::size_t m = 0; m < n; ++m) offer(bracket_apply(rule, spanning[n], spanning[m]));

    for (auto it = basis.by_grade.begin(); it != basis.by_grade.end();)
        it = it->second.empty() ? basis.by_grade.erase(it) : std::next(it);
    return basis;
}

bool membership(const Element& element, const GradedBasis& closure) {
    require_concrete(element, "element");
    std::map<std::int64_t, Element> components;
    for (const auto& [index, c] : element.support()) {
        if (!closure.window.contains(index))
            throw std::invalid_argument("label " + index.to_string() + " lies outside the closure window");
        components[index.is_central() ? 0 : index.grade].add(index, c);
    }
    static const std::vector<Element> none;
    for (const auto& [grade, component] : components) {
        const auto it = closure.by_grade.find(grade);
        if (!reduce(component, it == closure.by_grade.end() ? none : it->second).is_zero()) return false;
    }
    return true;
}

Element adjoint_chain(const BracketRule& rule, const Element& z1, const Element& z2, unsigned l1, unsigned l2) {
    if (l2 < 1) throw std::invalid_argument("adjoint_chain requires l2 >= 1");
    Element v = z2;
    for (unsigned n = 0; n < l1; ++n) v = bracket_apply(rule, z1, v);
    for (unsigned n = 0; n + 1 < l2; ++n) v = bracket_apply(rule, z2, v);
    return v;
}

}  // namespace blockalg
