#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hurwitz/factorization.hpp"

namespace hurwitz {

// one linear form sum_I mu_i - sum_J nu_j
struct ChamberForm {
    std::vector<int> I, J;  // 1-based
};

// forms over nonempty I, J other than (full, full); the rest are sign-constant on the slice
std::vector<ChamberForm> chamber_forms(int m, int n);

struct ChamberId {
    std::vector<signed char> signs;  // +1 / -1, same order as chamber_forms(m, n)

    std::string to_string() const;  // "+-+-"
    auto operator<=>(const ChamberId&) const = default;
};

class OnWall : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// throws OnWall if some form vanishes
ChamberId chamber_of(const Partition& mu, const Partition& nu);

// Polynomial in mu_1..mu_m, nu_1..nu_n. Exponent vectors have length m+n.
struct ExactPolynomial {
    int m = 0, n = 0;
    std::map<std::vector<int>, Rational> coefficients;  // zero terms never stored

    int degree() const;  // -1 for the zero polynomial
    Rational evaluate(const Partition& mu, const Partition& nu) const;
    std::string to_string() const;  // "2*nu1 - mu1^2 + 1/2"
};

struct SamplePoint {
    Partition mu, nu;
    Rational value;
};

class FitError : public std::runtime_error {
public:
    enum class Reason { rank_deficient, inconsistent };
    FitError(Reason r, const std::string& what) : std::runtime_error(what), reason(r) {}
    Reason reason;
};

// Monomials of degree <= cap in every variable except mu_m, which is
// determined by |mu| = |nu| on the slice.
std::vector<std::vector<int>> fit_basis(int m, int n, int degree_cap);

// Least-degree-agnostic exact fit of all points in the basis of degree_cap.
// Throws FitError when the points do not determine the coefficients or admit no solution.
ExactPolynomial fit_polynomial(const std::vector<SamplePoint>& points, int degree_cap);

enum class FitStatus { fitted, underdetermined, violation };
std::string to_string(FitStatus s);

struct ChamberFit {
    ChamberId id;
    FitStatus status = FitStatus::underdetermined;
    int samples = 0;
    int training = 0;
    int held_out = 0;
    int basis_degree = -1;  // degree of the basis that reproduced the data
    std::optional<ExactPolynomial> polynomial;
    std::optional<SamplePoint> counterexample;  // first held-out mismatch at the cap
    // a representative point, for readability
    Partition witness_mu, witness_nu;
};

struct ChamberReport {
    int genus = 0, m = 0, n = 0;
    Kind kind = Kind::plain;
    int bound = 0;
    int degree_cap = 0;
    int wall_points = 0;
    int evaluations = 0;  // distinct engine calls after symmetry reduction
    std::vector<ChamberFit> chambers;
    double seconds = 0;

    bool violated() const;
    int count(FitStatus s) const;
    const ChamberFit* find(const Partition& mu, const Partition& nu) const;
};

// 4g - 3 + m + n
int polynomiality_degree_cap(int genus, int m, int n);

// all points of [1, bound]^{m+n} with |mu| = |nu|
std::vector<std::pair<Partition, Partition>> chamber_samples(int m, int n, int bound);

// Degree budget is raised to m * bound internally; the branch point budget is kept.
ChamberReport check_chamber_polynomiality(int genus, int m, int n, Kind kind, int sample_bound,
                                          const EngineConfig& config = {},
                                          ResultCache* cache = nullptr);

}  // namespace hurwitz
