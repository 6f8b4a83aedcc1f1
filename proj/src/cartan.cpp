#include "qrs/cartan.hpp"

#include <cctype>
#include <sstream>

namespace qrs {

long long weight_height(const Weight& w) {
    long long h = 0;
    for (int c : w) h += c;
    return h;
}

bool weight_nonneg(const Weight& w) {
    for (int c : w)
        if (c < 0) return false;
    return true;
}

Weight weight_add(const Weight& a, const Weight& b) {
    Weight out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

Weight weight_sub(const Weight& a, const Weight& b) {
    Weight out = a;
    for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

Weight weight_zero(int rank) { return Weight(rank, 0); }

Weight weight_alpha(int rank, int i) {
    Weight w(rank, 0);
    w[i] = 1;
    return w;
}

std::string weight_str(const Weight& w) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

CartanData CartanData::make(const std::string& type) {
    if (type.size() < 2 || !std::isalpha(static_cast<unsigned char>(type[0])))
        throw WrongType(type);
    const char series = static_cast<char>(std::toupper(type[0]));
    int rank = 0;
    for (size_t i = 1; i < type.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(type[i]))) throw WrongType(type);
        rank = rank * 10 + (type[i] - '0');
    }
    if (rank < 1) throw WrongType(type);

    CartanData cd;
    cd.series = series;
    cd.rank = rank;
    cd.a.assign(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) cd.a[i][i] = 2;

    if (series == 'A') {
        cd.d.assign(rank, 1);
        for (int i = 0; i + 1 < rank; ++i) {
            cd.a[i][i + 1] = -1;
            cd.a[i + 1][i] = -1;
        }
        return cd;
    }
    if (series == 'B' && rank == 2) {
        cd.a[0][1] = -2;
        cd.a[1][0] = -1;
        cd.d = {1, 2};
        return cd;
    }
    if (series == 'G' && rank == 2) {
        cd.a[0][1] = -3;
        cd.a[1][0] = -1;
        cd.d = {1, 3};
        return cd;
    }
    throw WrongType(type + " (shipped tables: A_n, B2, G2)");
}

long long CartanData::euler(int i, int j) const {
    if (i < j) return static_cast<long long>(d[i]) * a[i][j];
    if (i == j) return d[i];
    return 0;
}

long long CartanData::euler(const Weight& mu, const Weight& nu) const {
    long long acc = 0;
    for (int i = 0; i < rank; ++i) {
        if (mu[i] == 0) continue;
        for (int j = 0; j < rank; ++j) {
            if (nu[j] == 0) continue;
            acc += static_cast<long long>(mu[i]) * nu[j] * euler(i, j);
        }
    }
    return acc;
}

long long CartanData::euler(const std::vector<long long>& mu,
                            const std::vector<long long>& nu) const {
    long long acc = 0;
    for (int i = 0; i < rank; ++i) {
        if (mu[i] == 0) continue;
        for (int j = 0; j < rank; ++j) {
            if (nu[j] == 0) continue;
            acc += mu[i] * nu[j] * euler(i, j);
        }
    }
    return acc;
}

Scalar CartanData::kappa(const Weight& mu, const Weight& nu) const {
    return Scalar::rs_monomial(euler(mu, nu), -euler(nu, mu));
}

Scalar CartanData::kappa_gen(int i, int j) const {
    return Scalar::rs_monomial(euler(i, j), -euler(j, i));
}

Scalar CartanData::r_i(int i) const { return Scalar::rs_monomial(d[i], 0); }
Scalar CartanData::s_i(int i) const { return Scalar::rs_monomial(0, d[i]); }
Scalar CartanData::q_i(int i) const { return Scalar::rs_monomial(d[i], -d[i]); }
Scalar CartanData::ri_minus_si(int i) const { return r_i(i) - s_i(i); }

Scalar q_number(int n, const Scalar& v) {
    if (n < 0) throw BadIndex("q-number of negative integer");
    Scalar acc(0);
    Scalar p(1);
    for (int k = 0; k < n; ++k) {
        acc += p;
        p *= v;
    }
    return acc;
}

Scalar q_factorial(int n, const Scalar& v) {
    if (n < 0) throw BadIndex("q-factorial of negative integer");
    Scalar acc(1);
    for (int k = 2; k <= n; ++k) acc *= q_number(k, v);
    return acc;
}

Scalar q_binomial(int n, int k, const Scalar& v) {
    if (k < 0 || k > n) throw BadIndex("q-binomial out of range");
    return q_factorial(n, v) / (q_factorial(k, v) * q_factorial(n - k, v));
}

Scalar serre_coefficient(const CartanData& cd, int i, int j, int k) {
    if (i == j || i < 0 || j < 0 || i >= cd.rank || j >= cd.rank)
        throw BadIndex("serre coefficient needs distinct indices");
    const int bound = 1 - cd.a[i][j];
    if (k < 0 || k > bound) throw BadIndex("serre coefficient k out of range");
    const long long tri = static_cast<long long>(k) * (k - 1) / 2;
    const long long er = cd.d[i] * tri + k * cd.euler(j, i);
    const long long es = -cd.d[i] * tri - k * cd.euler(i, j);
    return Scalar::rs_monomial(er, es);
}

}  // namespace qrs
