#include "qrs/element.hpp"

#include <sstream>

namespace qrs {

std::string parent_name(Parent p) {
    switch (p) {
        case Parent::U: return "U";
        case Parent::B: return "B";
        case Parent::Bbar: return "Bbar";
        case Parent::Env: return "Env";
    }
    return "?";
}

bool Monomial::toral_trivial() const {
    for (long long e : w)
        if (e != 0) return false;
    for (long long e : wp)
        if (e != 0) return false;
    return true;
}

int letter_weight_sign(LK k) {
    switch (k) {
        case LK::F:
        case LK::FP: return -1;
        case LK::E:
        case LK::EPP: return 1;
        default: return 0;
    }
}

void Element::add(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element Element::operator+(const Element& o) const {
    Element out = *this;
    for (const auto& [m, c] : o.terms_) out.add(m, c);
    return out;
}

Element Element::operator-(const Element& o) const {
    Element out = *this;
    for (const auto& [m, c] : o.terms_) out.add(m, -c);
    return out;
}

Element Element::operator-() const {
    Element out(parent_, rank_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Element Element::scaled(const Scalar& c) const {
    Element out(parent_, rank_);
    if (c.is_zero()) return out;
    for (const auto& [m, k] : terms_) out.terms_.emplace(m, k * c);
    return out;
}

Weight Element::monomial_weight(const Monomial& m, int rank) {
    Weight w(rank, 0);
    for (const auto& l : m.pre) w[l.i] += letter_weight_sign(l.k);
    for (const auto& l : m.post) w[l.i] += letter_weight_sign(l.k);
    return w;
}

std::optional<Weight> Element::weight() const {
    std::optional<Weight> out;
    for (const auto& [m, c] : terms_) {
        Weight w = monomial_weight(m, rank_);
        if (!out)
            out = w;
        else if (*out != w)
            return std::nullopt;
    }
    if (!out) out = Weight(rank_, 0);  // zero element: weight 0 by convention
    return out;
}

std::map<Weight, Element> Element::weight_components() const {
    std::map<Weight, Element> out;
    for (const auto& [m, c] : terms_) {
        Weight w = monomial_weight(m, rank_);
        auto it = out.find(w);
        if (it == out.end()) it = out.emplace(w, Element(parent_, rank_)).first;
        it->second.add(m, c);
    }
    return out;
}

Element Element::with_parent(Parent p) const {
    Element out = *this;
    out.parent_ = p;
    return out;
}

namespace {

const char* letter_token(LK k) {
    switch (k) {
        case LK::F: return "f";
        case LK::FP: return "P";
        case LK::E: return "e";
        case LK::EPP: return "E";
        case LK::W: return "w";
        case LK::WP: return "v";
    }
    return "?";
}

void print_word(std::ostringstream& os, const std::vector<PLetter>& word, bool& sep) {
    for (const auto& l : word) {
        if (sep) os << "*";
        os << letter_token(l.k) << "[" << static_cast<int>(l.i) + 1 << "]";
        sep = true;
    }
}

void print_toral(std::ostringstream& os, const char* tok,
                 const std::vector<long long>& exps, bool& sep) {
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (sep) os << "*";
        os << tok << "[" << i + 1 << "]";
        if (exps[i] != 1) os << "^" << exps[i];
        sep = true;
    }
}

}  // namespace

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::ostringstream body;
        bool sep = false;
        print_word(body, m.pre, sep);
        print_toral(body, "w", m.w, sep);
        print_toral(body, "v", m.wp, sep);
        print_word(body, m.post, sep);
        const std::string word = body.str();
        if (word.empty()) {
            os << (c.is_one() ? "1" : "(" + c.str() + ")");
        } else if (c.is_one()) {
            os << word;
        } else {
            os << "(" << c.str() << ")*" << word;
        }
    }
    return os.str();
}

bool letter_legal(Parent p, LK k) {
    if (k == LK::W || k == LK::WP) return true;
    switch (p) {
        case Parent::U: return k == LK::F || k == LK::E;
        case Parent::B: return k == LK::F || k == LK::EPP;
        case Parent::Bbar: return k == LK::E || k == LK::FP;
        case Parent::Env: return k == LK::F || k == LK::E || k == LK::EPP;
    }
    return false;
}

Parent parent_join(Parent a, Parent b) {
    if (a == b) return a;
    auto mix = [](Parent x, Parent y) {
        return (x == Parent::U && y == Parent::B) || (x == Parent::Env && y == Parent::U) ||
               (x == Parent::Env && y == Parent::B);
    };
    if (mix(a, b) || mix(b, a)) return Parent::Env;
    throw IncompatibleParents();
}

}  // namespace qrs
