#pragma once

#include "blockalg/block_algebra.hpp"
#include "blockalg/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace blockalg {

/// Polynomial in one variable as coefficients from degree 0 upward.
using UniPoly = RationalVector;

std::string unipoly_to_string(const UniPoly& f, const std::string& var = "t");
UniPoly unipoly_multiply(const UniPoly& f, const UniPoly& g);

/// Finite sum of f(z) e^{b z} with polynomial f over Q and rational b.
class QuasiPolynomial {
public:
    struct Term {
        UniPoly poly;  // coefficients of z^0, z^1, ...
        Rational base;
    };

    QuasiPolynomial() = default;
    /// Merges equal bases, trims trailing zeros and drops vanishing terms;
    /// terms end up sorted by base.
    explicit QuasiPolynomial(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// k! [z^k], i.e. the k-th derivative at z = 0.
    Rational normalized_coefficient(std::size_t k) const;

    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

/// Minimal constant-coefficient annihilator: prod (t - b)^(deg f + 1).
/// Throws std::invalid_argument for the zero quasipolynomial.
UniPoly qp_annihilator(const QuasiPolynomial& qp);

/// Highest weight given by labels Lambda_k = Lambda(L_{0,k}) and Lambda(c).
class Weight {
public:
    static Weight from_labels(RationalVector labels, Rational central_label = Rational(0));
    /// Generator mode: labels are synthesized from Delta = qp on demand.
    static Weight from_quasipolynomial(QuasiPolynomial qp, const BlockParams& params,
                                       Rational central_label = Rational(0));

    /// Lambda_0..Lambda_K. Throws std::out_of_range on a horizon shortfall.
    RationalVector labels(std::size_t K) const;
    /// Largest available label index, or nullopt in generator mode.
    std::optional<std::size_t> horizon() const;

    const Rational& central_label() const { return central_; }
    Weight with_central_label(Rational central) const;

    const std::optional<QuasiPolynomial>& generator() const { return generator_; }
    /// (p, q) the generator was synthesized for.
    const std::optional<std::pair<Rational, Rational>>& generator_params() const { return generator_params_; }

private:
    RationalVector labels_;
    Rational central_;
    std::optional<QuasiPolynomial> generator_;
    std::optional<std::pair<Rational, Rational>> generator_params_;
};

/// c_k = k! [z^k] Delta_Lambda, for k = 0..K.
struct DeltaSeries {
    RationalVector coefficients;
};

/// c_k = (2q + (1 - p^2) k) Lambda_k.
DeltaSeries delta_from_labels(const Weight& weight, const BlockParams& params, std::size_t K);

struct LabelSynthesis {
    RationalVector labels;                      // Lambda_0..Lambda_K
    std::vector<std::size_t> singular_indices;  // 2q + (1-p^2)k = 0; label set to 0
};

/// Inverts delta_from_labels. Throws std::invalid_argument naming k when the
/// quasipolynomial has c_k != 0 at a singular index.
LabelSynthesis labels_from_quasipolynomial(const QuasiPolynomial& qp, const BlockParams& params, std::size_t K);

struct RecurrenceCertificate {
    UniPoly annihilator;  // monic, degree >= 1
    std::size_t verified_horizon = 0;

    std::size_t degree() const { return annihilator.size() - 1; }
};

/// Minimal monic h with sum_j h_j c_{k+j} = 0 on the whole series, found by
/// Berlekamp-Massey over Q. Returns nullopt unless len >= 2*degree + 1 (and
/// degree <= `max_degree`, if given). Throws for fewer than 2 terms.
std::optional<RecurrenceCertificate> detect_linear_recurrence(const DeltaSeries& series,
                                                              std::optional<std::size_t> max_degree = std::nullopt);

struct SingularCandidate {
    RationalVector coefficients;  // a = sum_i coefficients[i] L_{-1,i}
    std::size_t verified_horizon = 0;

    Element element() const;
};

/// M[j][i] = (2q + i + j + p(i - j)) Lambda_{i+j}, j = 0..J, i = 0..D.
RationalMatrix singular_matrix(const Weight& weight, const BlockParams& params, std::size_t D, std::size_t J);

/// Kernel basis of singular_matrix, normalized to a leading 1.
std::vector<SingularCandidate> singular_vector_solve(const Weight& weight, const BlockParams& params, std::size_t D,
                                                     std::size_t J);

struct ClassificationReport {
    enum class Verdict { quasifinite, not_quasifinite_up_to_horizon };

    Verdict verdict = Verdict::not_quasifinite_up_to_horizon;
    std::optional<RecurrenceCertificate> certificate;
    std::size_t horizon = 0;
    DeltaSeries delta;
    /// Generator mode only: certificate equals qp_annihilator of the generator.
    std::optional<bool> confirmed_by_generator;
};

std::string to_string(ClassificationReport::Verdict verdict);

ClassificationReport classify_quasifinite(const Weight& weight, const BlockParams& params, std::size_t K);

struct CrossCheckReport {
    enum class Comparison { not_applicable, match, mismatch };

    bool delta_route = false;
    bool kernel_route = false;
    std::optional<RecurrenceCertificate> certificate;
    std::vector<SingularCandidate> kernel;
    Comparison annihilator_vs_kernel = Comparison::not_applicable;
    std::size_t D = 0;
    std::size_t J = 0;
};

std::string to_string(CrossCheckReport::Comparison comparison);

/// Delta route: a recurrence of degree <= D on c_0..c_{D+J}. Kernel route:
/// nonzero kernel of singular_matrix(D, J). When both succeed, `match` means
/// the annihilator's coefficient vector lies in the kernel.
CrossCheckReport criteria_cross_check(const Weight& weight, const BlockParams& params, std::size_t D, std::size_t J);

}  // namespace blockalg
