#pragma once

#include <array>
#include <map>
#include <vector>

#include "qrs/algebra.hpp"

namespace qrs {

/// A finite sum of scalar-weighted tensor monomials with 2 or 3 legs.  Each
/// leg carries its own parent algebra; leg monomials are kept in normal form.
class Tensor {
public:
    using Key = std::vector<Monomial>;

    Tensor() = default;
    Tensor(int arity, std::vector<Parent> parents, int rank)
        : arity_(arity), parents_(std::move(parents)), rank_(rank) {}

    static Tensor unit(const Algebra& alg, std::vector<Parent> parents);

    int arity() const { return arity_; }
    int rank() const { return rank_; }
    const std::vector<Parent>& parents() const { return parents_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Scalar>& terms() const { return terms_; }

    void add(const Key& k, const Scalar& c);
    Tensor operator+(const Tensor& o) const;
    Tensor operator-(const Tensor& o) const;
    Tensor operator-() const;
    Tensor scaled(const Scalar& c) const;

    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.terms_ == b.terms_;
    }

    /// Outer product of elements (arity = number of factors).
    static Tensor outer(const std::vector<Element>& legs);

    /// Legwise product; parents joined per leg.
    Tensor mul(const Algebra& alg, const Tensor& o) const;

    /// Apply a linear map to one leg.
    template <typename Fn>
    Tensor map_leg(const Algebra& alg, int leg, Parent newParent, Fn&& fn) const;

    /// Weight of leg 0 of each term -> subtensor; legs are weight-homogeneous
    /// whenever the inputs were.
    std::map<Weight, Tensor> split_by_leg_weight(int leg) const;

    /// Multiply legs together in order (the multiplication map).
    Element collapse(const Algebra& alg, Parent p) const;

    std::string str() const;

private:
    int arity_ = 2;
    std::vector<Parent> parents_ = {Parent::U, Parent::U};
    int rank_ = 0;
    std::map<Key, Scalar> terms_;
};

template <typename Fn>
Tensor Tensor::map_leg(const Algebra& alg, int leg, Parent newParent, Fn&& fn) const {
    std::vector<Parent> ps = parents_;
    ps[leg] = newParent;
    Tensor out(arity_, ps, rank_);
    for (const auto& [key, c] : terms_) {
        Element im = fn(key[leg]);
        for (const auto& [m2, c2] : im.terms()) {
            Key k2 = key;
            k2[leg] = m2;
            out.add(k2, c * c2);
        }
    }
    return out;
}

/// Height-truncated formal sum indexed by weights (a completion cutoff).
struct GradedTensor {
    int cutoff = 0;
    std::map<Weight, Tensor> grades;
};

struct GradedElement {
    int cutoff = 0;
    std::map<Weight, Element> grades;
};

}  // namespace qrs
