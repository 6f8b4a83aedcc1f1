#pragma once

#include "qrs/projector.hpp"

namespace qrs {

/// A vector in a truncated highest-weight realization, expressed over the
/// per-slice f-word bases: components keyed by (beta, basis index), the
/// vector living in the weight-(lambda - beta) slice.
struct ModuleVector {
    std::map<std::pair<Weight, int>, Scalar> comps;

    bool is_zero() const { return comps.empty(); }
    void add(const Weight& beta, int idx, const Scalar& c);
    ModuleVector operator+(const ModuleVector& o) const;
    ModuleVector operator-(const ModuleVector& o) const;
    ModuleVector scaled(const Scalar& c) const;
    friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

    /// Largest height carrying a nonzero component.
    int depth() const;

    std::string str() const;
};

/// Truncated realization of the cyclic highest-weight module: the quotient of
/// B by the left ideal generated by every e''_i and the toral eigenvalue
/// relations at lambda, realized on f-word bases up to the given depth.
class VermaModule {
public:
    VermaModule(const Algebra& alg, Weight lambda, int depth);

    const Algebra& algebra() const { return alg_; }
    const Weight& lambda() const { return lambda_; }
    int depth() const { return depth_; }

    const std::vector<Word>& slice_basis(const Weight& beta) const;
    long long slice_dim(const Weight& beta) const;

    ModuleVector highest_vector() const;
    ModuleVector basis_vector(const Weight& beta, int idx) const;

    /// g . v, exact; DepthExceeded when an f letter pushes past the cutoff.
    ModuleVector act(const Element& g, const ModuleVector& v) const;

    /// Joint kernel of all e''_i inside one slice.
    std::vector<ModuleVector> kernel_slice(const Weight& beta) const;

    /// Projector action: finитely many grades act; requires depth(v) <= cutoff.
    ModuleVector apply_graded(const GradedElement& g, const ModuleVector& v) const;

private:
    const Algebra& alg_;
    Weight lambda_;
    int depth_;
};

/// Highest-weight module checks: kernel dimension, the kernel/image splitting
/// per slice, the span of the lowering half, projector image and idempotence,
/// action associativity, and the cyclicity probes.
Report check_verma(const VermaModule& M, const GradedElement& gamma, int check_depth,
                   unsigned seed);

/// Complement construction on a direct sum of two highest-weight modules.
Report check_direct_sum(const VermaModule& Ml, const VermaModule& Mr,
                        const GradedElement& gamma, int check_depth);

/// Deterministic sample of highest weights used by the verification suites.
std::vector<Weight> sample_lambdas(int rank);

}  // namespace qrs
