#pragma once

#include <string>
#include <vector>

#include "qrs/scalar.hpp"

namespace qrs {

/// A weight written in simple-root coordinates (an element of the root
/// lattice; non-negative coordinates mean an element of Q+).
using Weight = std::vector<int>;

long long weight_height(const Weight& w);
bool weight_nonneg(const Weight& w);
Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_zero(int rank);
Weight weight_alpha(int rank, int i);
std::string weight_str(const Weight& w);

/// Finite Cartan datum: series, rank, Cartan matrix and the coprime
/// symmetrizing d-vector.  Shipped tables:
///   A_n : a(i,i+1) = a(i+1,i) = -1, d = (1,...,1)
///   B_2 : a12 = -2, a21 = -1, d = (1,2)
///   G_2 : a12 = -3, a21 = -1, d = (1,3)
struct CartanData {
    char series = 'A';
    int rank = 1;
    std::vector<std::vector<int>> a;
    std::vector<int> d;

    /// "A1", "A2", "A3", ..., "B2", "G2"; WrongType otherwise.
    static CartanData make(const std::string& type);

    std::string name() const { return series + std::to_string(rank); }

    /// Euler form on generators: d_i a_ij for i<j, d_i for i=j, 0 for i>j.
    long long euler(int i, int j) const;
    /// Bilinear extension of the generator table.
    long long euler(const Weight& mu, const Weight& nu) const;
    long long euler(const std::vector<long long>& mu,
                    const std::vector<long long>& nu) const;

    /// r^{<mu,nu>} s^{-<nu,mu>}, the structure-constant monomial.
    Scalar kappa(const Weight& mu, const Weight& nu) const;
    Scalar kappa_gen(int i, int j) const;  // generator case

    Scalar r_i(int i) const;  // r^{d_i}
    Scalar s_i(int i) const;  // s^{d_i}
    Scalar q_i(int i) const;  // (r s^{-1})^{d_i}
    Scalar ri_minus_si(int i) const;
};

/// (n)_v = 1 + v + ... + v^{n-1}
Scalar q_number(int n, const Scalar& v);
/// (n)_v! = (1)_v (2)_v ... (n)_v
Scalar q_factorial(int n, const Scalar& v);
/// (n)_v! / ((k)_v! (n-k)_v!), a polynomial in v.  BadIndex unless n >= k >= 0.
Scalar q_binomial(int n, int k, const Scalar& v);

/// c_ij^k = (r_i s_i^{-1})^{k(k-1)/2} r^{k<j,i>} s^{-k<i,j>}, the coefficient
/// appearing in the higher-order generator relations.  BadIndex unless i != j
/// and 0 <= k <= 1 - a_ij.
Scalar serre_coefficient(const CartanData& cd, int i, int j, int k);

}  // namespace qrs
