#include "blockalg/highest_weight.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace blockalg {

namespace {

std::pair<Rational, Rational> concrete(const BlockParams& params) {
    if (!params.p.is_constant() || !params.q.is_constant())
        throw std::invalid_argument("highest-weight computations need concrete p and q");
    params.validate();
    return {params.p.constant_value(), params.q.constant_value()};
}

void trim(UniPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

/// 2q + (1 - p^2) k
Rational delta_factor(const Rational& p, const Rational& q, std::size_t k) {
    return Rational(2) * q + (Rational(1) - p * p) * Rational(static_cast<long>(k));
}

}  // namespace

std::string unipoly_to_string(const UniPoly& f, const std::string& var) {
    const auto symbols = make_symbols({var});
    const Poly t = Poly::variable(symbols, var);
    Poly out;
    for (std::size_t k = 0; k < f.size(); ++k) out += Poly(f[k]) * pow(t, static_cast<unsigned>(k));
    return out.to_string();
}

UniPoly unipoly_multiply(const UniPoly& f, const UniPoly& g) {
    if (f.empty() || g.empty()) return {};
    UniPoly h(f.size() + g.size() - 1, Rational(0));
    for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b) h[a + b] += f[a] * g[b];
    trim(h);
    return h;
}

QuasiPolynomial::QuasiPolynomial(std::vector<Term> terms) {
    std::map<Rational, UniPoly> merged;
    for (auto& term : terms) {
        auto& poly = merged[term.base];
        if (poly.size() < term.poly.size()) poly.resize(term.poly.size(), Rational(0));
        for (std::size_t k = 0; k < term.poly.size(); ++k) poly[k] += term.poly[k];
    }
    for (auto& [base, poly] : merged) {
        trim(poly);
        if (!poly.empty()) terms_.push_back(Term{std::move(poly), base});
    }
}

Rational QuasiPolynomial::normalized_coefficient(std::size_t k) const {
    // k! [z^k] z^m e^{bz} = k!/(k-m)! b^{k-m}
    Rational total(0);
    for (const auto& term : terms_) {
        Rational falling(1);
        for (std::size_t m = 0; m < term.poly.size() && m <= k; ++m) {
            if (m > 0) falling *= Rational(static_cast<long>(k - m + 1));
            if (!term.poly[m].is_zero()) total += term.poly[m] * falling * pow(term.base, static_cast<unsigned>(k - m));
        }
    }
    return total;
}

std::string QuasiPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    for (std::size_t n = 0; n < terms_.size(); ++n) {
        if (n) out << " + ";
        out << '(' << unipoly_to_string(terms_[n].poly, "z") << ")*exp(" << terms_[n].base << "*z)";
    }
    return out.str();
}

UniPoly qp_annihilator(const QuasiPolynomial& qp) {
    if (qp.is_zero()) throw std::invalid_argument("the zero quasipolynomial has no minimal annihilator");
    UniPoly h{Rational(1)};
    for (const auto& term : qp.terms()) {
        const UniPoly factor{-term.base, Rational(1)};
        for (std::size_t k = 0; k < term.poly.size(); ++k) h = unipoly_multiply(h, factor);
    }
    return h;
}

Weight Weight::from_labels(RationalVector labels, Rational central_label) {
    if (labels.empty()) throw std::invalid_argument("a weight needs at least the label Lambda_0");
    Weight w;
    w.labels_ = std::move(labels);
    w.central_ = std::move(central_label);
    return w;
}

Weight Weight::from_quasipolynomial(QuasiPolynomial qp, const BlockParams& params, Rational central_label) {
    Weight w;
    w.generator_ = std::move(qp);
    w.generator_params_ = concrete(params);
    w.central_ = std::move(central_label);
    return w;
}

RationalVector Weight::labels(std::size_t K) const {
    if (generator_) {
        BlockParams params{Scalar(generator_params_->first), Scalar(generator_params_->second)};
        return labels_from_quasipolynomial(*generator_, params, K).labels;
    }
    if (K >= labels_.size())
        throw std::out_of_range("labels requested to horizon " + std::to_string(K) + " but only Lambda_0..Lambda_" +
                                std::to_string(labels_.size() - 1) + " are given");
    return RationalVector(labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(K + 1));
}

std::optional<std::size_t> Weight::horizon() const {
    if (generator_) return std::nullopt;
    return labels_.size() - 1;
}

Weight Weight::with_central_label(Rational central) const {
    Weight w = *this;
    w.central_ = std::move(central);
    return w;
}

DeltaSeries delta_from_labels(const Weight& weight, const BlockParams& params, std::size_t K) {
    const auto [p, q] = concrete(params);
    const RationalVector labels = weight.labels(K);
    DeltaSeries series;
    series.coefficients.reserve(K + 1);
    for (std::size_t k = 0; k <= K; ++k) series.coefficients.push_back(delta_factor(p, q, k) * labels[k]);
    return series;
}

LabelSynthesis labels_from_quasipolynomial(const QuasiPolynomial& qp, const BlockParams& params, std::size_t K) {
    const auto [p, q] = concrete(params);
    LabelSynthesis out;
    out.labels.reserve(K + 1);
    for (std::size_t k = 0; k <= K; ++k) {
        const Rational ck = qp.normalized_coefficient(k);
        const Rational factor = delta_factor(p, q, k);
        if (factor.is_zero()) {
            if (!ck.is_zero())
                throw std::invalid_argument("quasipolynomial is not realizable: c_" + std::to_string(k) + " = " +
                                            ck.to_string() + " at a singular label index");
            out.singular_indices.push_back(k);
            out.labels.push_back(Rational(0));
        } else {
            out.labels.push_back(ck / factor);
        }
    }
    return out;
}

std::optional<RecurrenceCertificate> detect_linear_recurrence(const DeltaSeries& series,
                                                              std::optional<std::size_t> max_degree) {
    const auto& s = series.coefficients;
    const std::size_t N = s.size();
    if (N < 2) throw std::invalid_argument("recurrence detection needs at least 2 coefficients");

    // Berlekamp-Massey: connection polynomial C with C[0] = 1
    UniPoly C{Rational(1)}, B{Rational(1)};
    std::size_t L = 0, m = 1;
    Rational b(1);
    for (std::size_t n = 0; n < N; ++n) {
        Rational d = s[n];
        for (std::size_t i = 1; i <= L && i < C.size(); ++i) d += C[i] * s[n - i];
        if (d.is_zero()) {
            ++m;
            continue;
        }
        const Rational scale = d / b;
        UniPoly next = C;
        if (next.size() < B.size() + m) next.resize(B.size() + m, Rational(0));
        for (std::size_t i = 0; i < B.size(); ++i) next[i + m] -= scale * B[i];
        if (2 * L <= n) {
            B = C;
            L = n + 1 - L;
            b = d;
            m = 1;
        } else {
            ++m;
        }
        C = std::move(next);
    }

    std::size_t degree = std::max<std::size_t>(L, 1);
    if (2 * degree >= N) return std::nullopt;  // need at least one overdetermining equation
    if (max_degree && degree > *max_degree) return std::nullopt;

    RecurrenceCertificate cert;
    cert.verified_horizon = N - 1;
    cert.annihilator.assign(degree + 1, Rational(0));
    if (L == 0) {
        cert.annihilator[1] = Rational(1);  // zero series: h = t
    } else {
        C.resize(L + 1, Rational(0));
        for (std::size_t j = 0; j <= L; ++j) cert.annihilator[j] = C[L - j];
    }
    for (std::size_t k = 0; k + degree < N; ++k) {
        Rational sum(0);
        for (std::size_t j = 0; j <= degree; ++j) sum += cert.annihilator[j] * s[k + j];
        if (!sum.is_zero()) throw std::logic_error("recurrence certificate failed verification");
    }
    return cert;
}

Element SingularCandidate::element() const {
    Element a;
    for (std::size_t i = 0; i < coefficients.size(); ++i)
        a.add(BasisIndex::graded(-1, static_cast<std::int64_t>(i)), Scalar(coefficients[i]));
    return a;
}

RationalMatrix singular_matrix(const Weight& weight, const BlockParams& params, std::size_t D, std::size_t J) {
    const auto [p, q] = concrete(params);
    if (auto h = weight.horizon(); h && *h < D + J)
        throw std::out_of_range("singular vector solve needs labels to horizon K = " + std::to_string(D + J) +
                                ", have " + std::to_string(*h));
    const RationalVector labels = weight.labels(D + J);
    RationalMatrix M(J + 1, RationalVector(D + 1));
    for (std::size_t j = 0; j <= J; ++j) {
        for (std::size_t i = 0; i <= D; ++i) {
            const Rational ri(static_cast<long>(i)), rj(static_cast<long>(j));
            M[j][i] = (Rational(2) * q + ri + rj + p * (ri - rj)) * labels[i + j];
        }
    }
    return M;
}

std::vector<SingularCandidate> singular_vector_solve(const Weight& weight, const BlockParams& params, std::size_t D,
                                                     std::size_t J) {
    std::vector<SingularCandidate> out;
    for (auto& v : kernel_basis(singular_matrix(weight, params, D, J), D + 1))
        out.push_back(SingularCandidate{std::move(v), J});
    return out;
}

std::string to_string(ClassificationReport::Verdict verdict) {
    return verdict == ClassificationReport::Verdict::quasifinite ? "quasifinite" : "not_quasifinite_up_to_horizon";
}

ClassificationReport classify_quasifinite(const Weight& weight, const BlockParams& params, std::size_t K) {
    const auto pq = concrete(params);
    if (weight.generator_params() && *weight.generator_params() != pq)
        throw std::invalid_argument("weight was synthesized for different (p, q)");

    ClassificationReport report;
    report.horizon = K;
    report.delta = delta_from_labels(weight, params, K);
    report.certificate = detect_linear_recurrence(report.delta);
    report.verdict = report.certificate ? ClassificationReport::Verdict::quasifinite
                                        : ClassificationReport::Verdict::not_quasifinite_up_to_horizon;
    if (weight.generator()) {
        const UniPoly expected =
            weight.generator()->is_zero() ? UniPoly{Rational(0), Rational(1)} : qp_annihilator(*weight.generator());
        report.confirmed_by_generator = report.certificate && report.certificate->annihilator == expected;
    }
    return report;
}

std::string to_string(CrossCheckReport::Comparison comparison) {
    switch (comparison) {
        case CrossCheckReport::Comparison::not_applicable: return "not_applicable";
        case CrossCheckReport::Comparison::match: return "match";
        case CrossCheckReport::Comparison::mismatch: return "mismatch";
    }
    return "unknown";
}

CrossCheckReport criteria_cross_check(const Weight& weight, const BlockParams& params, std::size_t D, std::size_t J) {
    CrossCheckReport report;
    report.D = D;
    report.J = J;
    report.certificate = detect_linear_recurrence(delta_from_labels(weight, params, D + J), D);
    report.delta_route = report.certificate.has_value();
    report.kernel = singular_vector_solve(weight, params, D, J);
    report.kernel_route = !report.kernel.empty();
    if (report.delta_route && report.kernel_route) {
        RationalVector padded = report.certificate->annihilator;
        padded.resize(D + 1, Rational(0));
        std::vector<RationalVector> basis;
        for (const auto& k : report.kernel) basis.push_back(k.coefficients);
        report.annihilator_vs_kernel =
            in_span(padded, basis) ? CrossCheckReport::Comparison::match : CrossCheckReport::Comparison::mismatch;
    }
    return report;
}

}  // namespace blockalg
