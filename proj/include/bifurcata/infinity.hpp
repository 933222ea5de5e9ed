#ifndef BIFURCATA_INFINITY_HPP
#define BIFURCATA_INFINITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "bifurcata/fiber_euler.hpp"
#include "bifurcata/groebner.hpp"
#include "bifurcata/poly.hpp"
#include "bifurcata/value_class.hpp"

namespace bifurcata {

// Invariants of a polynomial map f: A^2 -> A^1 at and beyond its critical
// values. lambda_a is defined here through the Euler-characteristic balance
//     chi(f^-1(a)) = chi(f^-1(a_gen)) + (-1)^d (mu_a + lambda_a),   d = 2,
// and the Euler characteristic of the nearby cycles at infinity satisfies
//     chi_inf(a) = chi_gen - chi_a + (-1)^d mu_a = (-1)^(d-1) lambda_a.
// The ambient dimension is fixed at 2 but kept symbolic in the formulas.

inline constexpr int kAmbientDim = 2;
inline constexpr long long kSignD = (kAmbientDim % 2 == 0) ? 1 : -1;        // (-1)^d
inline constexpr long long kSignDm1 = -kSignD;                              // (-1)^(d-1)

// Per-value record. mu/lambda/chi_infinity are absent when the Jacobian
// ideal is not zero-dimensional (partial, chi-only analysis).
struct FiberInvariants {
    ValueClass value;
    long long chi_a = 0;
    std::optional<long long> mu_a;
    std::optional<long long> lambda_a;
    std::optional<long long> chi_infinity;
    bool is_critical = false;
};

struct AnalysisReport {
    Poly<Rat> f;
    long long chi_gen = 0;
    bool isolated = true;  // Jacobian ideal zero-dimensional
    long long mu_total = 0;
    std::vector<FiberInvariants> fibers;  // one per final (refined) candidate class
    std::vector<ValueClass> euler_jump_set;
    std::vector<ValueClass> lambda_set;
    std::vector<ValueClass> discriminant;
    bool consistency_12 = false;  // chi_gen = 1 + (-1)^(d-1) (mu + lambda)
    std::vector<std::string> warnings;
};

// Full orchestration: generic fiber, candidate classes (refined through any
// dynamic-evaluation splits), per-class invariants, bifurcation sets and the
// global consistency check. On a non-zero-dimensional Jacobian ideal the
// report degrades to chi data only and carries a warning.
AnalysisReport analyze(const Poly<Rat>& f);

// mu_a for the roots of cls: read from the critical spectrum. Zero when cls
// is coprime to every spectral class; a class that straddles one is a caller
// error (refine first).
long long milnor_at(const Poly<Rat>& f, const ValueClass& cls);
long long milnor_at(const Poly<Rat>& f, const Rat& a0);

// lambda_a solved from the Euler-characteristic balance. The class must not
// mix values with different invariants (analyze() refines automatically).
long long lambda_at(const Poly<Rat>& f, const ValueClass& cls);
long long lambda_at(const Poly<Rat>& f, const Rat& a0);

// chi_c of the nearby cycles at infinity for the value; equals
// (-1)^(d-1) * lambda_at (cross-asserted internally).
long long euler_at_infinity(const Poly<Rat>& f, const ValueClass& cls);
long long euler_at_infinity(const Poly<Rat>& f, const Rat& a0);

// Values whose fiber chi differs from the generic one. For plane curves this
// is the topological bifurcation set.
std::vector<ValueClass> euler_jump_set(const Poly<Rat>& f);

// {lambda_a != 0} union disc(f).
std::vector<ValueClass> lambda_bifurcation_set(const Poly<Rat>& f);

struct ConsistencyReport {
    bool holds = false;
    long long chi_gen = 0;
    long long mu_sum = 0;      // degree-weighted
    long long lambda_sum = 0;  // degree-weighted
    long long rhs = 0;         // 1 + (-1)^(d-1) (mu_sum + lambda_sum)
};

ConsistencyReport global_consistency(const Poly<Rat>& f);

}  // namespace bifurcata

#endif
