#include "qrs/projector.hpp"

namespace qrs {

namespace {

// weight of the raising-side word of a monomial
Weight post_weight(const Monomial& m, int rank) {
    Weight w(rank, 0);
    for (const auto& l : m.post) w[l.i] += 1;
    return w;
}

// true if every component with raising-side height <= bound vanishes
bool vanishes_below(const Element& x, int bound, std::string* witness) {
    for (const auto& [m, c] : x.terms()) {
        Weight w = post_weight(m, x.rank());
        if (weight_height(w) <= bound) {
            if (witness) {
                Element bad(x.parent(), x.rank());
                bad.add(m, c);
                *witness = bad.str();
            }
            return false;
        }
    }
    return true;
}

}  // namespace

GradedElement Projector::gamma(int L) const {
    GradedElement out;
    out.cutoff = L;
    const GradedTensor C = can_.c_element(L);
    for (const auto& [beta, t] : C.grades) {
        Element g(Parent::B, alg_.rank());
        for (const auto& [key, c] : t.terms()) {
            Element x(Parent::Bbar, alg_.rank());
            x.add(key[0], Scalar(1));
            Element d(Parent::B, alg_.rank());
            d.add(key[1], Scalar(1));
            g = g + alg_.multiply(d, phi(alg_, x)).scaled(c);
        }
        out.grades.emplace(beta, std::move(g));
    }
    return out;
}

GradedElement Projector::gamma_closed_rank1(int L) const {
    const auto& cd = alg_.cartan();
    if (cd.rank != 1 || cd.series != 'A') throw WrongType("closed form needs type A1");
    const Scalar q = cd.q_i(0);
    GradedElement out;
    out.cutoff = L;
    for (int n = 0; n <= L; ++n) {
        Scalar c = q.pow(static_cast<long long>(n) * (n - 1) / 2) / q_factorial(n, q);
        if (n % 2) c = -c;
        Element e(Parent::B, 1);
        Monomial m = Monomial::unit(1);
        for (int t = 0; t < n; ++t) {
            m.pre.push_back({LK::F, 0});
            m.post.push_back({LK::EPP, 0});
        }
        e.add(m, c);
        out.grades.emplace(Weight{n}, std::move(e));
    }
    return out;
}

Report Projector::check_projector(int L) const {
    Report rep;
    rep.suite = "projector";
    const int rank = alg_.rank();
    const GradedElement G = gamma(L);

    Element Gtot(Parent::B, rank);
    for (const auto& [w, e] : G.grades) Gtot = Gtot + e;

    // unit grade
    {
        auto it = G.grades.find(weight_zero(rank));
        const bool pass = it != G.grades.end() && it->second == alg_.unit(Parent::B);
        rep.add("projector.unit_grade", "beta=0", pass,
                pass ? "" : (it != G.grades.end() ? it->second.str() : "missing"));
    }

    // e''_i annihilates from the left, f_i from the right
    for (int i = 0; i < rank; ++i) {
        {
            Element D = alg_.multiply(alg_.gen(LK::EPP, i, Parent::B), Gtot);
            std::string wit;
            const bool pass = vanishes_below(D, L - 1, &wit);
            rep.add("projector.annihilate_left",
                    "i=" + std::to_string(i + 1) + " grades<=" + std::to_string(L - 1),
                    pass, wit);
        }
        {
            Element D = alg_.multiply(Gtot, alg_.gen(LK::F, i, Parent::B));
            std::string wit;
            const bool pass = vanishes_below(D, L - 1, &wit);
            rep.add("projector.annihilate_right",
                    "i=" + std::to_string(i + 1) + " grades<=" + std::to_string(L - 1),
                    pass, wit);
        }
    }

    // idempotence
    {
        Element D = alg_.multiply(Gtot, Gtot) - Gtot;
        std::string wit;
        const bool pass = vanishes_below(D, L, &wit);
        rep.add("projector.idempotent", "grades<=" + std::to_string(L), pass, wit);
    }

    // partition of unity from the inverse of the canonical sum
    {
        const GradedTensor Ci = can_.c_inverse(L);
        Element acc(Parent::B, rank);
        for (const auto& [beta, t] : Ci.grades) {
            for (const auto& [key, c] : t.terms()) {
                Element bprime(Parent::Bbar, rank);
                bprime.add(key[0], Scalar(1));
                Element a(Parent::B, rank);
                a.add(key[1], Scalar(1));
                acc = acc + alg_.multiply(alg_.multiply(a, Gtot), phi(alg_, bprime))
                                .scaled(c);
            }
        }
        Element D = acc - alg_.unit(Parent::B);
        std::string wit;
        const bool pass = vanishes_below(D, L - 1, &wit);
        rep.add("projector.partition_of_unity", "grades<=" + std::to_string(L - 1), pass,
                wit);
    }

    // toral-free membership: only f and e'' letters survive normalization
    for (const auto& [beta, e] : G.grades) {
        bool pass = true;
        std::string wit;
        for (const auto& [m, c] : e.terms()) {
            if (!m.toral_trivial()) {
                pass = false;
                Element bad(Parent::B, rank);
                bad.add(m, c);
                wit = bad.str();
                break;
            }
        }
        rep.add("projector.letter_membership", "beta=" + weight_str(beta), pass, wit);
    }

    // closed form in rank one
    if (rank == 1 && alg_.cartan().series == 'A') {
        const GradedElement closed = gamma_closed_rank1(L);
        for (const auto& [w, e] : closed.grades) {
            auto it = G.grades.find(w);
            const Element got = it == G.grades.end() ? alg_.zero(Parent::B) : it->second;
            Element D = got - e;
            rep.add("projector.closed_form", "n=" + std::to_string(w[0]), D.is_zero(),
                    D.str());
        }
    }
    return rep;
}

}  // namespace qrs
