#include "qrs/modules.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qrs/rng.hpp"

namespace qrs {

void ModuleVector::add(const Weight& beta, int idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(beta, idx);
    auto it = comps.find(key);
    if (it == comps.end()) {
        comps.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) comps.erase(it);
    }
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
    ModuleVector out = *this;
    for (const auto& [k, c] : o.comps) out.add(k.first, k.second, c);
    return out;
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const {
    ModuleVector out = *this;
    for (const auto& [k, c] : o.comps) out.add(k.first, k.second, -c);
    return out;
}

ModuleVector ModuleVector::scaled(const Scalar& c) const {
    ModuleVector out;
    if (c.is_zero()) return out;
    for (const auto& [k, x] : comps) out.comps.emplace(k, x * c);
    return out;
}

int ModuleVector::depth() const {
    int d = 0;
    for (const auto& [k, c] : comps)
        d = std::max(d, static_cast<int>(weight_height(k.first)));
    return d;
}

std::string ModuleVector::str() const {
    if (comps.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : comps) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*[beta=" << weight_str(k.first) << ",#" << k.second
           << "]";
    }
    return os.str();
}

VermaModule::VermaModule(const Algebra& alg, Weight lambda, int depth)
    : alg_(alg), lambda_(std::move(lambda)), depth_(depth) {}

const std::vector<Word>& VermaModule::slice_basis(const Weight& beta) const {
    return alg_.weight_words(SerreFamily::Fam29, beta).basis;
}

long long VermaModule::slice_dim(const Weight& beta) const {
    return static_cast<long long>(slice_basis(beta).size());
}

ModuleVector VermaModule::highest_vector() const {
    ModuleVector v;
    v.add(weight_zero(alg_.rank()), 0, Scalar(1));
    return v;
}

ModuleVector VermaModule::basis_vector(const Weight& beta, int idx) const {
    ModuleVector v;
    v.add(beta, idx, Scalar(1));
    return v;
}

ModuleVector VermaModule::act(const Element& g, const ModuleVector& v) const {
    ModuleVector out;
    std::vector<long long> lam(lambda_.begin(), lambda_.end());
    for (const auto& [k, cv] : v.comps) {
        const auto& [beta, idx] = k;
        const Word& u = slice_basis(beta)[idx];
        for (const auto& [m, cg] : g.terms()) {
            std::vector<Atom> atoms;
            for (const auto& l : m.pre) atoms.push_back({l.k, l.i, 1});
            for (size_t i = 0; i < m.w.size(); ++i)
                if (m.w[i] != 0) atoms.push_back({LK::W, static_cast<int>(i), m.w[i]});
            for (size_t i = 0; i < m.wp.size(); ++i)
                if (m.wp[i] != 0) atoms.push_back({LK::WP, static_cast<int>(i), m.wp[i]});
            for (const auto& l : m.post) atoms.push_back({l.k, l.i, 1});
            for (uint8_t i : u) atoms.push_back({LK::F, i, 1});
            Element z = alg_.normal_form(cg * cv, atoms, Parent::B);
            for (const auto& [mz, cz] : z.terms()) {
                if (!mz.post.empty()) continue;  // raising letters kill the top vector
                const auto& cd = alg_.cartan();
                const Scalar eigen = Scalar::rs_monomial(
                    cd.euler(lam, mz.w) - cd.euler(mz.wp, lam),
                    -cd.euler(mz.w, lam) + cd.euler(lam, mz.wp));
                Weight bprime(alg_.rank(), 0);
                Word word;
                for (const auto& l : mz.pre) {
                    bprime[l.i] += 1;
                    word.push_back(l.i);
                }
                if (weight_height(bprime) > depth_)
                    throw DepthExceeded("action pushes past depth " +
                                        std::to_string(depth_));
                const auto& basis = slice_basis(bprime);
                auto it = std::lower_bound(basis.begin(), basis.end(), word);
                if (it == basis.end() || *it != word)
                    throw Error("normal form produced a non-basis word");
                out.add(bprime, static_cast<int>(it - basis.begin()), cz * eigen);
            }
        }
    }
    return out;
}

std::vector<ModuleVector> VermaModule::kernel_slice(const Weight& beta) const {
    const int n = static_cast<int>(slice_dim(beta));
    if (n == 0) return {};
    SMat rows;
    for (int i = 0; i < alg_.rank(); ++i) {
        Weight target = weight_sub(beta, weight_alpha(alg_.rank(), i));
        if (!weight_nonneg(target)) continue;
        const int m = static_cast<int>(slice_dim(target));
        SMat block(m, SVec(n, Scalar(0)));
        Element epp = alg_.gen(LK::EPP, i, Parent::B);
        for (int b = 0; b < n; ++b) {
            ModuleVector img = act(epp, basis_vector(beta, b));
            for (const auto& [k, c] : img.comps) {
                if (k.first != target) throw Error("weight bookkeeping failure");
                block[k.second][b] = c;
            }
        }
        for (auto& r : block) rows.push_back(std::move(r));
    }
    std::vector<ModuleVector> out;
    for (const auto& vec : nullspace(rows, n)) {
        ModuleVector v;
        for (int b = 0; b < n; ++b) v.add(beta, b, vec[b]);
        out.push_back(std::move(v));
    }
    return out;
}

ModuleVector VermaModule::apply_graded(const GradedElement& g,
                                       const ModuleVector& v) const {
    if (v.depth() > g.cutoff)
        throw DepthExceeded("vector depth exceeds the graded cutoff");
    ModuleVector out;
    for (const auto& [w, e] : g.grades) {
        if (weight_height(w) > v.depth()) continue;  // these grades annihilate v
        out = out + act(e, v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// checks
// ---------------------------------------------------------------------------

namespace {

// coordinates of a set of vectors inside one slice
SMat slice_coords(const std::vector<ModuleVector>& vs, const Weight& beta, int dim) {
    SMat rows;
    for (const auto& v : vs) {
        SVec row(dim, Scalar(0));
        for (const auto& [k, c] : v.comps) {
            if (k.first == beta) row[k.second] = c;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Element random_b_element(const Algebra& alg, Rng& rng, int max_letters) {
    std::vector<Atom> atoms;
    const int len = static_cast<int>(rng.below(max_letters + 1));
    for (int t = 0; t < len; ++t) {
        const int which = static_cast<int>(rng.below(3));
        const int i = static_cast<int>(rng.below(alg.rank()));
        if (which == 0)
            atoms.push_back({LK::F, i, 1});
        else if (which == 1)
            atoms.push_back({LK::EPP, i, 1});
        else
            atoms.push_back({LK::W, i, rng.range(-1, 1)});
    }
    return alg.normal_form(Scalar(1), atoms, Parent::B);
}

}  // namespace

std::vector<Weight> sample_lambdas(int rank) {
    std::vector<Weight> out;
    const auto pad = [&](std::vector<int> head) {
        Weight w(rank, 0);
        for (size_t i = 0; i < head.size() && i < static_cast<size_t>(rank); ++i)
            w[i] = head[i];
        return w;
    };
    if (rank == 1) {
        out = {pad({0}), pad({1}), pad({-1}), pad({2}), pad({-3})};
    } else {
        out = {pad({0, 0}), pad({1, 0}), pad({0, 1}), pad({1, 1}), pad({-2, 1})};
    }
    return out;
}

Report check_verma(const VermaModule& M, const GradedElement& gamma, int check_depth,
                   unsigned seed) {
    Report rep;
    const Algebra& alg = M.algebra();
    const int rank = alg.rank();
    rep.suite = "verma";
    const std::string lam = "lambda=" + weight_str(M.lambda());
    const auto betas = alg.positive_weights_upto(check_depth);

    // kernel of all raising operators is the highest line
    {
        long long total = 0;
        bool top_ok = false;
        for (const auto& beta : betas) {
            auto ker = M.kernel_slice(beta);
            total += static_cast<long long>(ker.size());
            if (weight_height(beta) == 0 && ker.size() == 1 &&
                ker[0].scaled(ker[0].comps.begin()->second.inv()) == M.highest_vector())
                top_ok = true;
        }
        rep.add("verma.kernel_dim", lam + " depth<=" + std::to_string(check_depth),
                total == 1 && top_ok, "dim K = " + std::to_string(total));
    }

    // slice-by-slice splitting into kernel and lowering image
    for (const auto& beta : betas) {
        const int dim = static_cast<int>(M.slice_dim(beta));
        std::vector<ModuleVector> kvecs = M.kernel_slice(beta);
        std::vector<ModuleVector> ivecs;
        for (int i = 0; i < rank; ++i) {
            Weight src = weight_sub(beta, weight_alpha(rank, i));
            if (!weight_nonneg(src)) continue;
            Element fi = alg.gen(LK::F, i, Parent::B);
            for (int b = 0; b < M.slice_dim(src); ++b)
                ivecs.push_back(M.act(fi, M.basis_vector(src, b)));
        }
        SMat kc = slice_coords(kvecs, beta, dim);
        SMat ic = slice_coords(ivecs, beta, dim);
        SMat all = kc;
        for (auto& r : ic) all.push_back(r);
        const int rk = rank_of(kc);
        const int ri = rank_of(ic);
        const int ra = rank_of(all);
        const bool pass = (ra == dim) && (rk + ri == ra);
        rep.add("verma.kernel_image_split",
                lam + " beta=" + weight_str(beta) + " dim=" + std::to_string(dim), pass,
                "rank K=" + std::to_string(rk) + " rank Im=" + std::to_string(ri) +
                    " rank sum=" + std::to_string(ra));
    }

    // the lowering half applied to the kernel spans every slice
    for (const auto& beta : betas) {
        const int dim = static_cast<int>(M.slice_dim(beta));
        std::vector<ModuleVector> span;
        for (const auto& w : alg.weight_basis(LK::F, beta))
            span.push_back(M.act(alg.word_element(LK::F, w, Parent::B),
                                 M.highest_vector()));
        SMat sc = slice_coords(span, beta, dim);
        rep.add("verma.lowering_span", lam + " beta=" + weight_str(beta),
                rank_of(sc) == dim, "rank deficit");
    }

    // projector image and idempotence on every slice basis vector
    for (const auto& beta : betas) {
        for (int b = 0; b < M.slice_dim(beta); ++b) {
            ModuleVector v = M.basis_vector(beta, b);
            ModuleVector gv = M.apply_graded(gamma, v);
            const bool expect_top = weight_height(beta) == 0;
            bool pass;
            if (expect_top)
                pass = gv == M.highest_vector();
            else
                pass = gv.is_zero();
            rep.add("verma.projector_image",
                    lam + " beta=" + weight_str(beta) + " #" + std::to_string(b), pass,
                    gv.str());
            ModuleVector ggv = M.apply_graded(gamma, gv);
            rep.add("verma.projector_idempotent",
                    lam + " beta=" + weight_str(beta) + " #" + std::to_string(b),
                    ggv == gv, (ggv - gv).str());
        }
    }

    // action respects products
    {
        Rng rng(seed);
        bool pass = true;
        std::string wit;
        for (int t = 0; t < 25 && pass; ++t) {
            Element g1 = random_b_element(alg, rng, 2);
            Element g2 = random_b_element(alg, rng, 2);
            for (const auto& beta : alg.positive_weights_upto(
                     std::max(0, check_depth - 2))) {
                for (int b = 0; b < M.slice_dim(beta); ++b) {
                    ModuleVector v = M.basis_vector(beta, b);
                    ModuleVector lhs = M.act(alg.multiply(g1, g2), v);
                    ModuleVector rhs = M.act(g1, M.act(g2, v));
                    if (!(lhs == rhs)) {
                        pass = false;
                        wit = "g1=" + g1.str() + " g2=" + g2.str() + " diff=" +
                              (lhs - rhs).str();
                        break;
                    }
                }
                if (!pass) break;
            }
        }
        rep.add("verma.action_associative", lam + " 25 random pairs", pass, wit);
    }

    // cyclicity upward: every slice basis vector reaches the top vector
    for (const auto& beta : betas) {
        const int dim = static_cast<int>(M.slice_dim(beta));
        if (dim == 0 || weight_height(beta) == 0) continue;
        const auto eppWords = alg.weight_basis(LK::EPP, beta);
        SMat A(eppWords.size(), SVec(dim, Scalar(0)));
        for (size_t t = 0; t < eppWords.size(); ++t) {
            Element P = alg.word_element(LK::EPP, eppWords[t], Parent::B);
            for (int b = 0; b < dim; ++b) {
                ModuleVector img = M.act(P, M.basis_vector(beta, b));
                for (const auto& [k, c] : img.comps) {
                    if (weight_height(k.first) == 0) A[t][b] = c;
                }
            }
        }
        const Scalar det = det_bareiss(A);
        rep.add("verma.cyclicity_matrix", lam + " beta=" + weight_str(beta),
                !det.is_zero(), "singular raising matrix");
        if (det.is_zero()) continue;
        SMat Ainv = invert(A);
        for (int b = 0; b < dim; ++b) {
            Element P(Parent::B, rank);
            for (size_t t = 0; t < eppWords.size(); ++t)
                P = P + alg.word_element(LK::EPP, eppWords[t], Parent::B)
                            .scaled(Ainv[b][t]);
            ModuleVector img = M.act(P, M.basis_vector(beta, b));
            rep.add("verma.cyclic_up",
                    lam + " beta=" + weight_str(beta) + " #" + std::to_string(b),
                    img == M.highest_vector(), img.str());
        }
    }

    return rep;
}

Report check_direct_sum(const VermaModule& Ml, const VermaModule& Mr,
                        const GradedElement& gamma, int check_depth) {
    Report rep;
    rep.suite = "direct_sum";
    const Algebra& alg = Ml.algebra();
    const int rank = alg.rank();
    const std::string inst = "lambda=" + weight_str(Ml.lambda()) +
                             " mu=" + weight_str(Mr.lambda());

    // weights visible in the truncation window of either summand
    std::set<Weight> nus;
    for (const auto& beta : alg.positive_weights_upto(check_depth)) {
        nus.insert(weight_sub(Ml.lambda(), beta));
        nus.insert(weight_sub(Mr.lambda(), beta));
    }

    // complement of K(L) inside K(M) weight-by-weight: the right top vector
    for (const auto& nu : nus) {
        const Weight bl = weight_sub(Ml.lambda(), nu);
        const Weight br = weight_sub(Mr.lambda(), nu);
        const bool in_l = weight_nonneg(bl) && weight_height(bl) <= check_depth;
        const bool in_r = weight_nonneg(br) && weight_height(br) <= check_depth;
        const int dl = in_l ? static_cast<int>(Ml.slice_dim(bl)) : 0;
        const int dr = in_r ? static_cast<int>(Mr.slice_dim(br)) : 0;
        if (dl + dr == 0) continue;

        // left-summand slice vectors as coordinates (length dl + dr)
        SMat lrows;
        for (int b = 0; b < dl; ++b) {
            SVec row(dl + dr, Scalar(0));
            row[b] = Scalar(1);
            lrows.push_back(std::move(row));
        }
        // B . N slice vectors: the module generated by the right top vector
        SMat nrows;
        if (in_r) {
            for (const auto& w : alg.weight_basis(LK::F, br)) {
                ModuleVector v = Mr.act(alg.word_element(LK::F, w, Parent::B),
                                        Mr.highest_vector());
                SVec row(dl + dr, Scalar(0));
                for (const auto& [k, c] : v.comps)
                    if (k.first == br) row[dl + k.second] = c;
                nrows.push_back(std::move(row));
            }
        }
        SMat all = lrows;
        for (auto& r : nrows) all.push_back(r);
        const int rl = rank_of(lrows), rn = rank_of(nrows), ra = rank_of(all);
        const bool pass = (ra == dl + dr) && (rl + rn == ra);
        rep.add("direct_sum.complement_split", inst + " weight=" + weight_str(nu), pass,
                "rank L=" + std::to_string(rl) + " rank BN=" + std::to_string(rn) +
                    " total=" + std::to_string(ra) + " dim=" + std::to_string(dl + dr));
    }

    // the projector picks out exactly the two top lines
    {
        ModuleVector gl = Ml.apply_graded(gamma, Ml.highest_vector());
        ModuleVector gr = Mr.apply_graded(gamma, Mr.highest_vector());
        rep.add("direct_sum.projector_tops", inst,
                gl == Ml.highest_vector() && gr == Mr.highest_vector(),
                gl.str() + " ; " + gr.str());
    }
    (void)rank;
    return rep;
}

}  // namespace qrs
