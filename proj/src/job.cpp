#include "blockalg/job.hpp"

#include "blockalg/block_algebra.hpp"
#include "blockalg/highest_weight.hpp"
#include "blockalg/intermediate_series.hpp"
#include "blockalg/novikov.hpp"

#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace blockalg {

using nlohmann::json;

namespace {

const std::map<std::string, JobKind> kinds = {
    {"axioms", JobKind::axioms},         {"affinize", JobKind::affinize},   {"blockcheck", JobKind::blockcheck},
    {"classify", JobKind::classify},     {"singular", JobKind::singular},   {"crosscheck", JobKind::crosscheck},
    {"closure", JobKind::closure},       {"modcheck", JobKind::modcheck},
};

[[noreturn]] void fail(const std::string& path, const std::string& what) {
    throw ConfigError("field '" + path + "': " + what);
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

const json& require(const json& node, const std::string& key, const std::string& path) {
    if (!node.is_object()) fail(path.empty() ? "<root>" : path, "expected an object");
    const auto it = node.find(key);
    if (it == node.end()) throw ConfigError("missing field '" + join(path, key) + "'");
    return *it;
}

const json* optional_field(const json& node, const std::string& key) {
    const auto it = node.find(key);
    return it == node.end() || it->is_null() ? nullptr : &*it;
}

void reject_unknown(const json& node, const std::set<std::string>& allowed, const std::string& path) {
    for (const auto& [key, value] : node.items())
        if (!allowed.count(key)) throw ConfigError("unknown field '" + join(path, key) + "'");
}

Rational to_rational(const json& node, const std::string& path) {
    if (node.is_number_integer()) return Rational(node.get<long>());
    if (node.is_string()) {
        try {
            return Rational::parse(node.get<std::string>());
        } catch (const std::exception&) {
            fail(path, "invalid rational '" + node.get<std::string>() + "'");
        }
    }
    fail(path, "expected a rational as an integer or an \"a/b\" string");
}

/// A rational, or the name of a declared parameter symbol.
Scalar to_scalar(const json& node, const std::string& path) {
    if (node.is_string()) {
        const auto name = node.get<std::string>();
        const auto& symbols = parameter_symbols();
        if (symbols->index_of(name)) return Poly::variable(symbols, name);
    }
    return Scalar(to_rational(node, path));
}

std::int64_t to_int(const json& node, const std::string& path) {
    if (!node.is_number_integer()) fail(path, "expected an integer");
    return node.get<std::int64_t>();
}

std::size_t to_count(const json& node, const std::string& path) {
    const auto v = to_int(node, path);
    if (v < 0) fail(path, "expected a nonnegative integer");
    return static_cast<std::size_t>(v);
}

std::vector<std::int64_t> to_int_list(const json& node, const std::string& path) {
    if (!node.is_array()) fail(path, "expected an array of integers");
    std::vector<std::int64_t> out;
    for (std::size_t k = 0; k < node.size(); ++k) out.push_back(to_int(node[k], path + "[" + std::to_string(k) + "]"));
    if (std::set<std::int64_t>(out.begin(), out.end()).size() != out.size()) fail(path, "values must be distinct");
    return out;
}

json scalar_json(const Scalar& s) { return s.to_string(); }
json rational_json(const Rational& r) { return r.to_string(); }

json rational_list(const RationalVector& v) {
    json out = json::array();
    for (const auto& r : v) out.push_back(rational_json(r));
    return out;
}

/// n distinct values centred on 0.
std::vector<std::int64_t> centred(std::size_t n) {
    std::vector<std::int64_t> out;
    for (std::size_t k = 0; k < n; ++k) out.push_back(static_cast<std::int64_t>(k) - static_cast<std::int64_t>(n / 2));
    return out;
}

// ---- typed views of a resolved config -------------------------------------

Scalar param(const json& config, const std::string& name) {
    return to_scalar(require(require(config, "params", ""), name, "params"), "params." + name);
}

BlockParams block_params(const json& config) {
    BlockParams params{param(config, "p"), param(config, "q")};
    if (params.q.is_zero()) throw ConfigError("q must be nonzero");
    return params;
}

Window to_window(const json& node, const std::string& path) {
    reject_unknown(node, {"grade_min", "grade_max", "level_max"}, path);
    const auto gmin = to_int(require(node, "grade_min", path), path + ".grade_min");
    const auto gmax = to_int(require(node, "grade_max", path), path + ".grade_max");
    const auto lmax = to_int(require(node, "level_max", path), path + ".level_max");
    try {
        return Window(gmin, gmax, lmax);
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

json window_json(std::int64_t gmin, std::int64_t gmax, std::int64_t lmax) {
    return {{"grade_min", gmin}, {"grade_max", gmax}, {"level_max", lmax}};
}

Element to_element(const json& node, const std::string& path) {
    if (!node.is_array()) fail(path, "expected an array of {grade, level, coef} terms");
    Element out;
    for (std::size_t k = 0; k < node.size(); ++k) {
        const std::string at = path + "[" + std::to_string(k) + "]";
        reject_unknown(node[k], {"grade", "level", "coef"}, at);
        const auto grade = to_int(require(node[k], "grade", at), at + ".grade");
        const json* level = optional_field(node[k], "level");
        const json* coef = optional_field(node[k], "coef");
        out.add(BasisIndex::graded(grade, level ? to_int(*level, at + ".level") : 0),
                coef ? to_scalar(*coef, at + ".coef") : Scalar(1));
    }
    return out;
}

QuasiPolynomial to_quasipolynomial(const json& node, const std::string& path) {
    if (!node.is_array()) fail(path, "expected an array of {poly, base} terms");
    std::vector<QuasiPolynomial::Term> terms;
    for (std::size_t k = 0; k < node.size(); ++k) {
        const std::string at = path + "[" + std::to_string(k) + "]";
        reject_unknown(node[k], {"poly", "base"}, at);
        const json& poly = require(node[k], "poly", at);
        if (!poly.is_array()) fail(at + ".poly", "expected an array of rationals");
        QuasiPolynomial::Term term;
        for (std::size_t m = 0; m < poly.size(); ++m)
            term.poly.push_back(to_rational(poly[m], at + ".poly[" + std::to_string(m) + "]"));
        term.base = to_rational(require(node[k], "base", at), at + ".base");
        terms.push_back(std::move(term));
    }
    return QuasiPolynomial(std::move(terms));
}

Weight to_weight(const json& config, const BlockParams& params) {
    const json& node = require(config, "weight", "");
    reject_unknown(node, {"labels", "qp", "central"}, "weight");
    const json* central = optional_field(node, "central");
    const Rational c = central ? to_rational(*central, "weight.central") : Rational(0);
    const json* labels = optional_field(node, "labels");
    const json* qp = optional_field(node, "qp");
    if (!!labels == !!qp) throw ConfigError("field 'weight': give exactly one of 'labels' or 'qp'");
    if (labels) {
        if (!labels->is_array() || labels->empty()) fail("weight.labels", "expected a nonempty array of rationals");
        RationalVector values;
        for (std::size_t k = 0; k < labels->size(); ++k)
            values.push_back(to_rational((*labels)[k], "weight.labels[" + std::to_string(k) + "]"));
        return Weight::from_labels(std::move(values), c);
    }
    try {
        return Weight::from_quasipolynomial(to_quasipolynomial(*qp, "weight.qp"), params, c);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        fail("weight.qp", e.what());
    }
}

std::vector<ProductTerm> to_terms(const json& node, const std::string& path) {
    if (!node.is_array()) fail(path, "expected an array of product terms");
    std::vector<ProductTerm> terms;
    for (std::size_t k = 0; k < node.size(); ++k) {
        const std::string at = path + "[" + std::to_string(k) + "]";
        reject_unknown(node[k], {"offset", "constant", "by_alpha", "by_beta"}, at);
        ProductTerm t;
        if (const json* v = optional_field(node[k], "offset")) t.offset = to_int(*v, at + ".offset");
        if (const json* v = optional_field(node[k], "constant")) t.constant = to_scalar(*v, at + ".constant");
        if (const json* v = optional_field(node[k], "by_alpha")) t.by_alpha = to_scalar(*v, at + ".by_alpha");
        if (const json* v = optional_field(node[k], "by_beta")) t.by_beta = to_scalar(*v, at + ".by_beta");
        terms.push_back(std::move(t));
    }
    return terms;
}

json terms_json(const std::vector<ProductTerm>& terms) {
    json out = json::array();
    for (const auto& t : terms)
        out.push_back({{"offset", t.offset},
                       {"constant", scalar_json(t.constant)},
                       {"by_alpha", scalar_json(t.by_alpha)},
                       {"by_beta", scalar_json(t.by_beta)}});
    return out;
}

/// Linear terms behind the rule, if it has them (witt or linear kinds).
std::optional<std::vector<ProductTerm>> rule_terms(const json& config) {
    const json& rule = require(config, "rule", "");
    const auto kind = require(rule, "kind", "rule").get<std::string>();
    if (kind == "witt") {
        const json& params = require(config, "params", "");
        WittNovikovParams w;
        w.p = to_scalar(require(params, "p", "params"), "params.p");
        if (const json* v = optional_field(params, "mu")) w.mu = to_scalar(*v, "params.mu");
        if (const json* v = optional_field(params, "theta")) w.theta = to_int(*v, "params.theta");
        return witt_terms(w);
    }
    if (kind == "linear") return to_terms(require(rule, "terms", "rule"), "rule.terms");
    if (kind == "zero") return std::vector<ProductTerm>{};
    return std::nullopt;
}

ProductRule to_rule(const json& config) {
    const json& rule = require(config, "rule", "");
    if (!rule.is_object()) fail("rule", "expected an object");
    const json& kind_node = require(rule, "kind", "rule");
    if (!kind_node.is_string()) fail("rule.kind", "expected a string");
    const auto kind = kind_node.get<std::string>();
    if (kind == "witt") {
        reject_unknown(rule, {"kind"}, "rule");
        return linear_product_rule("witt-novikov", *rule_terms(config));
    }
    if (kind == "linear") {
        reject_unknown(rule, {"kind", "terms"}, "rule");
        return linear_product_rule("linear", *rule_terms(config));
    }
    if (kind == "zero") {
        reject_unknown(rule, {"kind"}, "rule");
        return zero_product_rule();
    }
    if (kind == "table") {
        reject_unknown(rule, {"kind", "entries"}, "rule");
        const json& entries = require(rule, "entries", "rule");
        if (!entries.is_array() || entries.empty()) fail("rule.entries", "expected a nonempty array");
        std::map<std::pair<std::int64_t, std::int64_t>, Element> table;
        for (std::size_t k = 0; k < entries.size(); ++k) {
            const std::string at = "rule.entries[" + std::to_string(k) + "]";
            reject_unknown(entries[k], {"a", "b", "product"}, at);
            const auto a = to_int(require(entries[k], "a", at), at + ".a");
            const auto b = to_int(require(entries[k], "b", at), at + ".b");
            const Element product = to_element(require(entries[k], "product", at), at + ".product");
            for (const auto& [index, c] : product.support())
                if (index.level != 0) fail(at + ".product", "Novikov products live at level 0");
            if (!table.emplace(std::make_pair(a, b), product).second) fail(at, "duplicate entry");
        }
        std::set<std::int64_t> domain;
        for (const auto& [key, value] : table) domain.insert({key.first, key.second});
        for (auto a : domain)
            for (auto b : domain)
                if (!table.count({a, b}))
                    throw ConfigError("field 'rule.entries': missing product x_" + std::to_string(a) + " * x_" +
                                      std::to_string(b));
        return table_product_rule("table", std::move(table));
    }
    fail("rule.kind", "unknown rule kind '" + kind + "' (witt, linear, table, zero)");
}

// ---- resolution (validation + defaults) -----------------------------------

/// Rewrites rational leaves in place with their canonical "a/b" strings.
void normalize_rational(json& node, const std::string& path) { node = rational_json(to_rational(node, path)); }
void normalize_scalar(json& node, const std::string& path) { node = scalar_json(to_scalar(node, path)); }

void normalize_element(json& node, const std::string& path) {
    to_element(node, path);
    for (std::size_t k = 0; k < node.size(); ++k) {
        const std::string at = path + "[" + std::to_string(k) + "]";
        if (!node[k].contains("level")) node[k]["level"] = 0;
        if (!node[k].contains("coef")) node[k]["coef"] = 1;
        normalize_scalar(node[k]["coef"], at + ".coef");
    }
}

void resolve_params(json& config, const std::set<std::string>& allowed) {
    if (!config.contains("params")) config["params"] = json::object();
    json& params = config["params"];
    if (!params.is_object()) fail("params", "expected an object");
    reject_unknown(params, allowed, "params");
    for (auto& [key, value] : params.items()) {
        if (key == "theta")
            to_int(value, "params.theta");
        else
            value = scalar_json(to_scalar(value, "params." + key));
    }
}

void resolve_window(json& config, std::int64_t gmin, std::int64_t gmax, std::int64_t lmax) {
    if (!config.contains("window")) config["window"] = window_json(gmin, gmax, lmax);
    to_window(config["window"], "window");
}

void resolve_rule_and_grid(json& config) {
    resolve_params(config, {"p", "q", "mu", "theta"});
    const ProductRule rule = to_rule(config);
    json& rule_node = config["rule"];
    if (rule_node.contains("terms"))
        for (std::size_t k = 0; k < rule_node["terms"].size(); ++k) {
            json& t = rule_node["terms"][k];
            const std::string at = "rule.terms[" + std::to_string(k) + "]";
            if (!t.contains("offset")) t["offset"] = 0;
            for (const char* f : {"constant", "by_alpha", "by_beta"}) {
                if (!t.contains(f)) t[f] = 0;
                normalize_scalar(t[f], at + "." + f);
            }
        }
    if (rule_node.contains("entries"))
        for (std::size_t k = 0; k < rule_node["entries"].size(); ++k)
            normalize_element(rule_node["entries"][k]["product"], "rule.entries[" + std::to_string(k) + "].product");
    if (rule.universal()) {
        if (!config.contains("grid")) config["grid"] = centred(2 * rule.degree_bound + 1);
        to_int_list(config["grid"], "grid");
    } else if (config.contains("grid")) {
        fail("grid", "table rules are checked on their own index set");
    }
}

void resolve_weight_job(json& config, bool horizon) {
    resolve_params(config, {"p", "q"});
    const BlockParams params = block_params(config);
    require(config, "weight", "");
    to_weight(config, params);
    json& weight = config["weight"];
    if (weight.contains("central") && !weight["central"].is_null()) normalize_rational(weight["central"], "weight.central");
    if (weight.contains("labels") && !weight["labels"].is_null())
        for (std::size_t k = 0; k < weight["labels"].size(); ++k)
            normalize_rational(weight["labels"][k], "weight.labels[" + std::to_string(k) + "]");
    if (weight.contains("qp") && !weight["qp"].is_null())
        for (auto& term : weight["qp"]) {
            for (auto& c : term["poly"]) normalize_rational(c, "weight.qp");
            normalize_rational(term["base"], "weight.qp");
        }
    if (horizon) {
        if (!config.contains("K")) config["K"] = 12;
        if (to_count(config["K"], "K") < 1) fail("K", "horizon must be at least 1");
    } else {
        if (!config.contains("D")) config["D"] = 1;
        if (!config.contains("J")) config["J"] = 6;
        to_count(config["D"], "D");
        to_count(config["J"], "J");
    }
}

void resolve(JobKind kind, json& config) {
    switch (kind) {
        case JobKind::axioms:
            reject_unknown(config, {"job", "seed", "output", "params", "rule", "grid"}, "");
            resolve_rule_and_grid(config);
            break;
        case JobKind::affinize: {
            reject_unknown(config,
                           {"job", "seed", "output", "params", "rule", "grid", "jacobi_grid", "mutations"}, "");
            resolve_rule_and_grid(config);
            param(config, "q");
            const ProductRule rule = to_rule(config);
            if (!config.contains("jacobi_grid"))
                config["jacobi_grid"] = {{"grades", centred(2 * (rule.universal() ? rule.degree_bound : 0) + 1)},
                                         {"levels", centred(3)}};
            json& grid = config["jacobi_grid"];
            reject_unknown(grid, {"grades", "levels"}, "jacobi_grid");
            to_int_list(require(grid, "grades", "jacobi_grid"), "jacobi_grid.grades");
            to_int_list(require(grid, "levels", "jacobi_grid"), "jacobi_grid.levels");
            if (!config.contains("mutations")) config["mutations"] = 0;
            if (to_count(config["mutations"], "mutations") > 0) {
                if (!config.contains("seed"))
                    throw ConfigError("missing field 'seed' (required when 'mutations' is positive)");
                if (!rule_terms(config) || rule_terms(config)->empty())
                    fail("mutations", "mutations need a witt or linear rule with at least one term");
            }
            break;
        }
        case JobKind::blockcheck: {
            reject_unknown(config, {"job", "seed", "output", "params", "window", "cocycle_values", "grid"}, "");
            resolve_params(config, {"p", "q", "s"});
            block_params(config);
            resolve_window(config, -4, 4, 2);
            if (!config.contains("cocycle_values")) config["cocycle_values"] = centred(7);
            to_int_list(config["cocycle_values"], "cocycle_values");
            if (!config.contains("grid")) config["grid"] = {{"grades", centred(3)}, {"levels", {0, 1, 2}}};
            reject_unknown(config["grid"], {"grades", "levels"}, "grid");
            to_int_list(require(config["grid"], "grades", "grid"), "grid.grades");
            to_int_list(require(config["grid"], "levels", "grid"), "grid.levels");
            if (config["params"].contains("s") && !to_scalar(config["params"]["s"], "params.s").is_constant())
                fail("params.s", "s must be a rational");
            break;
        }
        case JobKind::classify:
            reject_unknown(config, {"job", "seed", "output", "params", "weight", "K"}, "");
            resolve_weight_job(config, true);
            break;
        case JobKind::singular:
        case JobKind::crosscheck:
            reject_unknown(config, {"job", "seed", "output", "params", "weight", "D", "J"}, "");
            resolve_weight_job(config, false);
            break;
        case JobKind::closure: {
            reject_unknown(config, {"job", "seed", "output", "params", "generators", "window", "members"}, "");
            resolve_params(config, {"p", "q"});
            block_params(config);
            resolve_window(config, -3, 3, 3);
            const json& gens = require(config, "generators", "");
            if (!gens.is_array() || gens.empty()) fail("generators", "expected a nonempty array of elements");
            for (std::size_t k = 0; k < gens.size(); ++k)
                normalize_element(config["generators"][k], "generators[" + std::to_string(k) + "]");
            if (!config.contains("members")) config["members"] = json::array();
            if (!config["members"].is_array()) fail("members", "expected an array of elements");
            for (std::size_t k = 0; k < config["members"].size(); ++k)
                normalize_element(config["members"][k], "members[" + std::to_string(k) + "]");
            break;
        }
        case JobKind::modcheck: {
            reject_unknown(config, {"job", "seed", "output", "params", "module", "window", "mu_range", "central_action"},
                           "");
            resolve_params(config, {"p", "q"});
            block_params(config);
            resolve_window(config, -3, 3, 2);
            require(config, "module", "");
            json& module = config["module"];
            reject_unknown(module, {"family", "a", "b"}, "module");
            const json& family = require(module, "family", "module");
            if (!family.is_string() || (family != "Aab" && family != "Aa" && family != "Ba"))
                fail("module.family", "expected one of Aab, Aa, Ba");
            module["a"] = rational_json(to_rational(require(module, "a", "module"), "module.a"));
            if (family == "Aab")
                module["b"] = rational_json(to_rational(require(module, "b", "module"), "module.b"));
            else if (module.contains("b"))
                fail("module.b", "only the Aab family has a second parameter");
            if (!config.contains("mu_range")) config["mu_range"] = {-6, 6};
            const auto range = to_int_list(config["mu_range"], "mu_range");
            if (range.size() != 2 || range[0] > range[1]) fail("mu_range", "expected [min, max] with min <= max");
            if (!config.contains("central_action")) config["central_action"] = "0";
            config["central_action"] = rational_json(to_rational(config["central_action"], "central_action"));
            break;
        }
    }
}

// ---- report helpers --------------------------------------------------------

json witness_json(const std::optional<Witness>& w) {
    if (!w) return nullptr;
    json indices = json::object();
    for (const auto& [name, value] : w->indices) indices[name] = value;
    return {{"indices", indices}, {"residual", w->residual.to_string()}};
}

json verdict_json(const Verdict& v) {
    return {{"status", to_string(v.status)},
            {"scope", v.scope},
            {"points_checked", v.points_checked},
            {"witness", witness_json(v.witness)}};
}

json certificate_json(const std::optional<RecurrenceCertificate>& c) {
    if (!c) return nullptr;
    return {{"annihilator", rational_list(c->annihilator)},
            {"polynomial", unipoly_to_string(c->annihilator)},
            {"degree", c->degree()},
            {"verified_horizon", c->verified_horizon}};
}

json novikov_json(const NovikovVerdict& v) {
    return {{"left_symmetry", verdict_json(v.left_symmetry)}, {"right_commutativity", verdict_json(v.right_commutativity)}};
}

json record_json(const EquivalenceRecord& r) {
    return {{"novikov", novikov_json(r.novikov)},
            {"jacobi", verdict_json(r.jacobi)},
            {"equivalence_observed", r.equivalence_observed}};
}

// ---- jobs ------------------------------------------------------------------

Report run_axioms(const json& config, const RunOptions& options) {
    const ProductRule rule = to_rule(config);
    const IndexGrid grid = rule.universal() ? novikov_grid(to_int_list(config["grid"], "grid")) : IndexGrid{};
    const NovikovVerdict v = novikov_axiom_check(rule, grid, options.threads);
    return {{{"novikov", novikov_json(v)}}, v.holds()};
}

Report run_affinize(const json& config, const RunOptions& options, std::optional<std::uint64_t> seed) {
    const ProductRule rule = to_rule(config);
    const AffinizationParams params{param(config, "q")};
    const IndexGrid ngrid = rule.universal() ? novikov_grid(to_int_list(config["grid"], "grid")) : IndexGrid{};
    const IndexGrid jgrid = uniform_grid(Identity::jacobi, to_int_list(config["jacobi_grid"]["grades"], ""),
                                         to_int_list(config["jacobi_grid"]["levels"], ""));

    const EquivalenceRecord base = equivalence_probe(rule, params, ngrid, jgrid, options.threads);
    bool all_agree = base.equivalence_observed;
    json body = {{"base", record_json(base)}};

    const std::size_t count = to_count(config["mutations"], "mutations");
    if (count > 0) {
        std::mt19937_64 rng(*seed);
        const auto terms = *rule_terms(config);
        json list = json::array();
        std::size_t agree = 0;
        for (std::size_t k = 0; k < count; ++k) {
            const auto mutated = mutate_one_coefficient(terms, rng);
            const ProductRule m = linear_product_rule("mutation " + std::to_string(k), mutated);
            const EquivalenceRecord r = equivalence_probe(m, params, ngrid, jgrid, options.threads);
            agree += r.equivalence_observed;
            json entry = record_json(r);
            entry["terms"] = terms_json(mutated);
            list.push_back(std::move(entry));
        }
        all_agree = all_agree && agree == count;
        body["mutations"] = {{"records", list}, {"agreeing", agree}, {"total", count}};
    } else {
        body["mutations"] = nullptr;
    }
    body["all_agree"] = all_agree;
    return {body, all_agree};
}

Report run_blockcheck(const json& config, const RunOptions& options) {
    const BlockParams params = block_params(config);
    const BlockAlgebra algebra(params);
    const Window window = to_window(config["window"], "window");
    const auto grades = to_int_list(config["grid"]["grades"], "grid.grades");
    const auto levels = to_int_list(config["grid"]["levels"], "grid.levels");
    const auto values = to_int_list(config["cocycle_values"], "cocycle_values");

    const Verdict anti = grid_identity_check(algebra.delta_free_rule(), Identity::antisymmetry,
                                             uniform_grid(Identity::antisymmetry, grades, levels), options.threads);
    const Verdict jacobi = grid_identity_check(algebra.delta_free_rule(), Identity::jacobi,
                                               uniform_grid(Identity::jacobi, grades, levels), options.threads);
    const Verdict cocycle = cocycle_jacobi_check(algebra, values, values);
    const Verdict virasoro = virasoro_embedding_check(algebra, window);
    const Verdict laurent = laurent_realization_check(algebra, window);

    json body = {{"antisymmetry", verdict_json(anti)},   {"jacobi", verdict_json(jacobi)},
                 {"cocycle", verdict_json(cocycle)},     {"virasoro", verdict_json(virasoro)},
                 {"realization", verdict_json(laurent)}, {"reindex", nullptr}};
    bool positive = anti.holds() && jacobi.holds() && cocycle.holds() && virasoro.holds() && laurent.holds();
    if (config["params"].contains("s")) {
        const Verdict reindex = block_sZ_reindex_check(param(config, "s").constant_value(), window);
        body["reindex"] = verdict_json(reindex);
        positive = positive && reindex.holds();
    }
    return {body, positive};
}

Report run_classify(const json& config) {
    const BlockParams params = block_params(config);
    const Weight weight = to_weight(config, params);
    const ClassificationReport r = classify_quasifinite(weight, params, to_count(config["K"], "K"));
    json body = {{"verdict", to_string(r.verdict)},
                 {"certificate", certificate_json(r.certificate)},
                 {"horizon", r.horizon},
                 {"delta", rational_list(r.delta.coefficients)},
                 {"confirmed_by_generator", r.confirmed_by_generator ? json(*r.confirmed_by_generator) : json(nullptr)}};
    return {body, r.verdict == ClassificationReport::Verdict::quasifinite};
}

json kernel_json(const std::vector<SingularCandidate>& kernel) {
    json out = json::array();
    for (const auto& k : kernel)
        out.push_back({{"coefficients", rational_list(k.coefficients)},
                       {"element", k.element().to_string()},
                       {"verified_horizon", k.verified_horizon}});
    return out;
}

Report run_singular(const json& config) {
    const BlockParams params = block_params(config);
    const Weight weight = to_weight(config, params);
    const auto D = to_count(config["D"], "D"), J = to_count(config["J"], "J");
    const auto kernel = singular_vector_solve(weight, params, D, J);
    return {{{"kernel", kernel_json(kernel)}, {"dimension", kernel.size()}, {"D", D}, {"J", J}}, !kernel.empty()};
}

Report run_crosscheck(const json& config) {
    const BlockParams params = block_params(config);
    const Weight weight = to_weight(config, params);
    const CrossCheckReport r =
        criteria_cross_check(weight, params, to_count(config["D"], "D"), to_count(config["J"], "J"));
    json body = {{"delta_route", r.delta_route},
                 {"kernel_route", r.kernel_route},
                 {"certificate", certificate_json(r.certificate)},
                 {"kernel", kernel_json(r.kernel)},
                 {"annihilator_vs_kernel", to_string(r.annihilator_vs_kernel)},
                 {"D", r.D},
                 {"J", r.J}};
    const bool positive =
        r.delta_route && r.kernel_route && r.annihilator_vs_kernel == CrossCheckReport::Comparison::match;
    return {body, positive};
}

Report run_closure(const json& config) {
    const BlockAlgebra algebra(block_params(config));
    const Window window = to_window(config["window"], "window");
    std::vector<Element> generators;
    for (std::size_t k = 0; k < config["generators"].size(); ++k)
        generators.push_back(to_element(config["generators"][k], "generators[" + std::to_string(k) + "]"));
    const GradedBasis basis = subalgebra_closure(algebra.rule(), generators, window);

    json grades = json::array();
    for (const auto& [grade, rows] : basis.by_grade) {
        json elements = json::array();
        for (const auto& e : rows) elements.push_back(e.to_string());
        grades.push_back({{"grade", grade}, {"dimension", rows.size()}, {"basis", elements}});
    }
    json members = json::array();
    bool all_members = true;
    for (std::size_t k = 0; k < config["members"].size(); ++k) {
        const Element e = to_element(config["members"][k], "members[" + std::to_string(k) + "]");
        const bool in = membership(e, basis);
        all_members = all_members && in;
        members.push_back({{"element", e.to_string()}, {"member", in}});
    }
    return {{{"dimension", basis.dimension()}, {"grades", grades}, {"members", members}}, all_members};
}

IntermediateKind to_module(const json& node) {
    const auto family = node["family"].get<std::string>();
    const Rational a = to_rational(node["a"], "module.a");
    if (family == "Aab") return Aab{a, to_rational(node["b"], "module.b")};
    if (family == "Aa") return Aa{a};
    return Ba{a};
}

Report run_modcheck(const json& config) {
    const BlockAlgebra algebra(block_params(config));
    const IntermediateKind kind = to_module(config["module"]);
    const Window window = to_window(config["window"], "window");
    const auto range = to_int_list(config["mu_range"], "mu_range");
    const Scalar central(to_rational(config["central_action"], "central_action"));
    const ModuleVerdict v = module_axiom_check(kind, algebra, window, range[0], range[1], central);

    json witness = nullptr;
    if (v.witness)
        witness = {{"indices",
                    {{"alpha", v.witness->alpha},
                     {"i", v.witness->i},
                     {"beta", v.witness->beta},
                     {"j", v.witness->j},
                     {"mu", v.witness->mu}}},
                   {"residual", v.witness->residual.to_string()}};
    const BoundednessReport bound = boundedness_report(kind);
    json body = {{"status", to_string(v.status)},
                 {"scope", v.scope},
                 {"points_checked", v.points_checked},
                 {"failures", v.failures.size()},
                 {"witness", witness},
                 {"module", bound.kind},
                 {"dimension_bound", bound.bound}};
    return {body, v.holds()};
}

void flatten(const json& node, const std::string& path, std::ostringstream& out) {
    if (node.is_object()) {
        if (node.empty()) out << path << ": {}\n";
        for (const auto& [key, value] : node.items()) flatten(value, path.empty() ? key : path + "." + key, out);
    } else if (node.is_array()) {
        if (node.empty()) out << path << ": []\n";
        for (std::size_t k = 0; k < node.size(); ++k) flatten(node[k], path + "[" + std::to_string(k) + "]", out);
    } else if (node.is_string()) {
        out << path << ": " << node.get<std::string>() << '\n';
    } else {
        out << path << ": " << node.dump() << '\n';
    }
}

}  // namespace

std::string to_string(JobKind kind) {
    for (const auto& [name, k] : kinds)
        if (k == kind) return name;
    return "unknown";
}

JobConfig parse_config(const json& document) {
    if (!document.is_object()) throw ConfigError("config must be a JSON object");
    const json& job = require(document, "job", "");
    if (!job.is_string() || !kinds.count(job.get<std::string>()))
        fail("job", "expected one of axioms, affinize, blockcheck, classify, singular, crosscheck, closure, modcheck");

    JobConfig config;
    config.kind = kinds.at(job.get<std::string>());
    config.resolved = document;
    if (const json* seed = optional_field(document, "seed"))
        if (!seed->is_number_unsigned()) fail("seed", "expected a nonnegative integer");
    if (const json* out = optional_field(document, "output")) {
        if (!out->is_string()) fail("output", "expected a path string");
        config.output = out->get<std::string>();
    }
    resolve(config.kind, config.resolved);
    return config;
}

JobConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config '" + path.string() + "'");
    json document;
    try {
        document = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config '" + path.string() + "': " + e.what());
    }
    return parse_config(document);
}

Report run_job(const JobConfig& config, const RunOptions& options) {
    const json& c = config.resolved;
    std::optional<std::uint64_t> seed = options.seed;
    if (!seed && c.contains("seed")) seed = c["seed"].get<std::uint64_t>();

    Report report;
    switch (config.kind) {
        case JobKind::axioms: report = run_axioms(c, options); break;
        case JobKind::affinize: report = run_affinize(c, options, seed); break;
        case JobKind::blockcheck: report = run_blockcheck(c, options); break;
        case JobKind::classify: report = run_classify(c); break;
        case JobKind::singular: report = run_singular(c); break;
        case JobKind::crosscheck: report = run_crosscheck(c); break;
        case JobKind::closure: report = run_closure(c); break;
        case JobKind::modcheck: report = run_modcheck(c); break;
    }
    json echo = c;
    if (seed) echo["seed"] = *seed;
    report.body = {{"job", echo}, {"result", report.body}, {"positive", report.positive}};
    return report;
}

std::string emit_report(const Report& report, ReportFormat format) {
    if (format == ReportFormat::machine) return report.body.dump(2) + "\n";
    std::ostringstream out;
    flatten(report.body, "", out);
    return out.str();
}

}  // namespace blockalg
