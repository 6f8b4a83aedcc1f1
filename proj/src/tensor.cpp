#include "qrs/tensor.hpp"

#include <sstream>

namespace qrs {

Tensor Tensor::unit(const Algebra& alg, std::vector<Parent> parents) {
    Tensor t(static_cast<int>(parents.size()), parents, alg.rank());
    Key k(parents.size(), Monomial::unit(alg.rank()));
    t.add(k, Scalar(1));
    return t;
}

void Tensor::add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Tensor Tensor::operator+(const Tensor& o) const {
    Tensor out = *this;
    if (out.terms_.empty()) {
        out.arity_ = o.arity_;
        out.parents_ = o.parents_;
        out.rank_ = o.rank_;
    }
    for (const auto& [k, c] : o.terms_) out.add(k, c);
    return out;
}

Tensor Tensor::operator-(const Tensor& o) const { return *this + (-o); }

Tensor Tensor::operator-() const {
    Tensor out(arity_, parents_, rank_);
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

Tensor Tensor::scaled(const Scalar& c) const {
    Tensor out(arity_, parents_, rank_);
    if (c.is_zero()) return out;
    for (const auto& [k, x] : terms_) out.terms_.emplace(k, x * c);
    return out;
}

Tensor Tensor::outer(const std::vector<Element>& legs) {
    std::vector<Parent> ps;
    for (const auto& e : legs) ps.push_back(e.parent());
    const int rank = legs.empty() ? 0 : legs[0].rank();
    Tensor out(static_cast<int>(legs.size()), ps, rank);

    std::vector<std::pair<Key, Scalar>> acc = {{Key{}, Scalar(1)}};
    for (const auto& e : legs) {
        std::vector<std::pair<Key, Scalar>> next;
        for (const auto& [k, c] : acc) {
            for (const auto& [m, c2] : e.terms()) {
                Key k2 = k;
                k2.push_back(m);
                next.push_back({std::move(k2), c * c2});
            }
        }
        acc = std::move(next);
    }
    for (auto& [k, c] : acc) out.add(k, c);
    return out;
}

Tensor Tensor::mul(const Algebra& alg, const Tensor& o) const {
    if (arity_ != o.arity_) throw Error("tensor arity mismatch");
    std::vector<Parent> ps;
    for (int l = 0; l < arity_; ++l) ps.push_back(parent_join(parents_[l], o.parents_[l]));
    Tensor out(arity_, ps, rank_);
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            // per-leg products, then distribute
            std::vector<std::pair<Key, Scalar>> acc = {{Key{}, ca * cb}};
            for (int l = 0; l < arity_; ++l) {
                Element ea(parents_[l], rank_);
                ea.add(ka[l], Scalar(1));
                Element eb(o.parents_[l], rank_);
                eb.add(kb[l], Scalar(1));
                Element prod = alg.multiply(ea, eb);
                std::vector<std::pair<Key, Scalar>> next;
                for (const auto& [k, c] : acc) {
                    for (const auto& [m, c2] : prod.terms()) {
                        Key k2 = k;
                        k2.push_back(m);
                        next.push_back({std::move(k2), c * c2});
                    }
                }
                acc = std::move(next);
            }
            for (auto& [k, c] : acc) out.add(k, c);
        }
    }
    return out;
}

std::map<Weight, Tensor> Tensor::split_by_leg_weight(int leg) const {
    std::map<Weight, Tensor> out;
    for (const auto& [k, c] : terms_) {
        Weight w = Element::monomial_weight(k[leg], rank_);
        auto it = out.find(w);
        if (it == out.end()) it = out.emplace(w, Tensor(arity_, parents_, rank_)).first;
        it->second.add(k, c);
    }
    return out;
}

Element Tensor::collapse(const Algebra& alg, Parent p) const {
    Element out(p, rank_);
    for (const auto& [k, c] : terms_) {
        Element acc = alg.unit(p);
        for (int l = 0; l < arity_; ++l) {
            Element leg(parents_[l], rank_);
            leg.add(k[l], Scalar(1));
            acc = alg.multiply(acc, leg);
        }
        out = out + acc.scaled(c);
    }
    return out;
}

std::string Tensor::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << "(" << c.str() << ")*";
        for (int l = 0; l < arity_; ++l) {
            if (l) os << " (x) ";
            Element leg(parents_[l], rank_);
            leg.add(k[l], Scalar(1));
            os << "[" << leg.str() << "]";
        }
    }
    return os.str();
}

}  // namespace qrs
