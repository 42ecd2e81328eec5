#include "blockalg/intermediate_series.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <tuple>

namespace blockalg {

namespace {

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};
template <class... F>
overloaded(F...) -> overloaded<F...>;

Scalar r(std::int64_t n) { return Scalar{Rational(n)}; }

/// L_{alpha,0} v_mu
ModuleVector act_level_zero(const IntermediateKind& kind, const Scalar& q, std::int64_t alpha, std::int64_t mu) {
    const Scalar sa = r(alpha), sm = r(mu);
    return std::visit(overloaded{
                          [&](const Aab& k) {
                              return ModuleVector::basis(alpha + mu, q * (Scalar(k.a) + sm + Scalar(k.b) * sa));
                          },
                          [&](const Aa& k) {
                              if (mu == 0) return ModuleVector::basis(alpha, q * sa * (Scalar(k.a) + sa));
                              return ModuleVector::basis(alpha + mu, q * (sm + sa));
                          },
                          [&](const Ba& k) {
                              if (mu == -alpha) return ModuleVector::basis(0, -(q * sa * (Scalar(k.a) + sa)));
                              return ModuleVector::basis(alpha + mu, q * sm);
                          },
                      },
                      kind);
}

}  // namespace

std::string to_string(const IntermediateKind& kind) {
    return std::visit(overloaded{
                          [](const Aab& k) { return "A_{" + k.a.to_string() + "," + k.b.to_string() + "}"; },
                          [](const Aa& k) { return "A_{" + k.a.to_string() + "}"; },
                          [](const Ba& k) { return "B_{" + k.a.to_string() + "}"; },
                      },
                      kind);
}

ModuleVector ModuleVector::basis(std::int64_t mu, const Scalar& coefficient) {
    ModuleVector v;
    v.add(mu, coefficient);
    return v;
}

Scalar ModuleVector::coefficient(std::int64_t mu) const {
    const auto it = support_.find(mu);
    return it == support_.end() ? Scalar() : it->second;
}

void ModuleVector::add(std::int64_t mu, const Scalar& coefficient) {
    if (coefficient.is_zero()) return;
    auto [it, inserted] = support_.try_emplace(mu, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero()) support_.erase(it);
    }
}

std::string ModuleVector::to_string() const {
    if (support_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mu, c] : support_) {
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
        out << "v[" << mu << ']';
        first = false;
    }
    return out.str();
}

ModuleVector& ModuleVector::operator+=(const ModuleVector& rhs) {
    for (const auto& [mu, c] : rhs.support_) add(mu, c);
    return *this;
}

ModuleVector& ModuleVector::operator-=(const ModuleVector& rhs) {
    for (const auto& [mu, c] : rhs.support_) add(mu, -c);
    return *this;
}

ModuleVector act(const IntermediateKind& kind, const BlockParams& params, const Element& x, const ModuleVector& v,
                 const Scalar& central_action) {
    ModuleVector out;
    for (const auto& [index, cx] : x.support()) {
        for (const auto& [mu, cv] : v.support()) {
            if (index.is_central()) {
                out.add(mu, cx * cv * central_action);
                continue;
            }
            if (index.level != 0) continue;
            const ModuleVector image = act_level_zero(kind, params.q, index.grade, mu);
            for (const auto& [nu, c] : image.support())
                out.add(nu, c * cx * cv);
        }
    }
    return out;
}

std::string ModuleFailure::to_string() const {
    std::ostringstream out;
    out << "alpha=" << alpha << ", i=" << i << ", beta=" << beta << ", j=" << j << ", mu=" << mu << "; residual "
        << residual.to_string();
    return out.str();
}

ModuleVerdict module_axiom_check(const IntermediateKind& kind, const BlockAlgebra& algebra, const Window& window,
                                 std::int64_t mu_min, std::int64_t mu_max, const Scalar& central_action) {
    if (mu_min > mu_max) throw std::invalid_argument("empty weight range");
    const BlockParams& params = algebra.params();
    ModuleVerdict verdict;
    std::ostringstream scope;
    scope << to_string(kind) << " grades [" << window.grade_min << "," << window.grade_max << "] levels [0,"
          << window.level_max << "] mu [" << mu_min << "," << mu_max << "]";
    verdict.scope = scope.str();

    for (std::int64_t a = window.grade_min; a <= window.grade_max; ++a)
        for (std::int64_t i = 0; i <= window.level_max; ++i)
            for (std::int64_t b = window.grade_min; b <= window.grade_max; ++b)
                for (std::int64_t j = 0; j <= window.level_max; ++j) {
                    const Element x = Element::basis(a, i), y = Element::basis(b, j);
                    const Element xy = algebra.bracket(x, y);
                    for (std::int64_t mu = mu_min; mu <= mu_max; ++mu) {
                        ++verdict.points_checked;
                        const ModuleVector v = ModuleVector::basis(mu);
                        ModuleVector residual = act(kind, params, xy, v, central_action) -
                                                act(kind, params, x, act(kind, params, y, v, central_action), central_action) +
                                                act(kind, params, y, act(kind, params, x, v, central_action), central_action);
                        if (!residual.is_zero())
                            verdict.failures.push_back(ModuleFailure{a, i, b, j, mu, std::move(residual)});
                    }
                }

    if (!verdict.failures.empty()) {
        verdict.status = Verdict::Status::fails;
        auto key = [](const ModuleFailure& f) {
            return std::make_tuple(std::llabs(f.alpha) + std::llabs(f.beta), std::llabs(f.mu), f.i + f.j, -f.alpha,
                                   -f.mu, f.i);
        };
        verdict.witness = *std::min_element(verdict.failures.begin(), verdict.failures.end(),
                                            [&](const auto& l, const auto& r) { return key(l) < key(r); });
    }
    return verdict;
}

BoundednessReport boundedness_report(const IntermediateKind& kind) {
    return BoundednessReport{to_string(kind), 1};
}

}  // namespace blockalg
