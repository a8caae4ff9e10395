#include "superq/tensor.hpp"

#include <functional>
#include <sstream>

namespace superq {

TensorElement TensorElement::unit(const AlgebraSpec& spec, int arity) {
    TensorElement t(spec, arity);
    t.terms_[TensorKey{}] = Scalar::one(*spec.ctx);
    return t;
}

TensorElement TensorElement::of(const AlgebraElement& a, const AlgebraElement& b) {
    if (&a.spec() != &b.spec()) throw ArityMismatch();
    TensorElement t(a.spec(), 2);
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            t.add_term(TensorKey{ea, eb, Expos{}}, ca * cb);
    return t;
}

TensorElement TensorElement::of(const AlgebraElement& a, const AlgebraElement& b, const AlgebraElement& c) {
    TensorElement t(a.spec(), 3);
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            for (const auto& [ec, cc] : c.terms())
                t.add_term(TensorKey{ea, eb, ec}, ca * cb * cc);
    return t;
}

void TensorElement::add_term(const TensorKey& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    if (spec_ != o.spec_ || arity_ != o.arity_) throw ArityMismatch();
    TensorElement r(*this);
    for (const auto& [k, c] : o.terms_) r.add_term(k, c);
    return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    if (spec_ != o.spec_ || arity_ != o.arity_) throw ArityMismatch();
    TensorElement r(*this);
    for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
    return r;
}

TensorElement TensorElement::scaled(const Scalar& c) const {
    TensorElement r(*spec_, arity_);
    if (c.is_zero()) return r;
    for (const auto& [k, t] : terms_) {
        Scalar v = t * c;
        if (!v.is_zero()) r.terms_.emplace(k, std::move(v));
    }
    return r;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    if (spec_ != o.spec_ || arity_ != o.arity_) throw ArityMismatch();
    TensorElement r(*spec_, arity_);
    // per-leg products of single monomials, then the cross product of the
    // resulting term lists
    std::array<std::map<Expos, Scalar>, 3> legs;
    for (const auto& [ka, ca] : terms_) {
        std::array<int, 3> par_a{};
        for (int l = 0; l < arity_; ++l) par_a[l] = spec_->monomial_parity(ka[l]);
        for (const auto& [kb, cb] : o.terms_) {
            int sign = 0; // Σ_{i>j} |a_i||b_j|
            for (int i = 1; i < arity_; ++i)
                for (int j = 0; j < i; ++j) sign += par_a[i] * spec_->monomial_parity(kb[j]);
            Scalar c = ca * cb;
            if (sign & 1) c = -c;
            bool dead = false;
            for (int l = 0; l < arity_ && !dead; ++l) {
                legs[l].clear();
                Word w;
                for (int p = 0; p < spec_->ngens; ++p)
                    if (ka[l][p] != 0) w.emplace_back(p, ka[l][p]);
                for (int p = 0; p < spec_->ngens; ++p)
                    if (kb[l][p] != 0) w.emplace_back(p, kb[l][p]);
                straighten_into(*spec_, std::move(w), Scalar::one(*spec_->ctx), legs[l]);
                dead = legs[l].empty();
            }
            if (dead) continue;
            // distribute
            TensorKey key{};
            std::function<void(int, const Scalar&)> rec = [&](int l, const Scalar& acc) {
                if (acc.is_zero()) return;
                if (l == arity_) {
                    r.add_term(key, acc);
                    return;
                }
                for (const auto& [e, s] : legs[l]) {
                    key[l] = e;
                    rec(l + 1, acc * s);
                }
                key[l] = Expos{};
            };
            rec(0, c);
        }
    }
    return r;
}

bool TensorElement::operator==(const TensorElement& o) const {
    if (spec_ != o.spec_ || arity_ != o.arity_) return false;
    return terms_ == o.terms_;
}

TensorElement TensorElement::flip() const {
    TensorElement r(*spec_, arity_);
    for (const auto& [k, c] : terms_) {
        int sign = spec_->monomial_parity(k[0]) * spec_->monomial_parity(k[1]);
        r.add_term(TensorKey{k[1], k[0], k[2]}, (sign & 1) ? -c : c);
    }
    return r;
}

TensorElement TensorElement::embed3(int leg_a, int leg_b) const {
    TensorElement r(*spec_, 3);
    for (const auto& [k, c] : terms_) {
        TensorKey key{};
        key[leg_a] = k[0];
        key[leg_b] = k[1];
        r.add_term(key, c);
    }
    return r;
}

TensorElement TensorElement::map_leg(int leg, const std::function<AlgebraElement(const Expos&)>& fn) const {
    TensorElement r(*spec_, arity_);
    for (const auto& [k, c] : terms_) {
        AlgebraElement img = fn(k[leg]);
        TensorKey key = k;
        for (const auto& [e, s] : img.terms()) {
            key[leg] = e;
            r.add_term(key, c * s);
        }
    }
    return r;
}

TensorElement TensorElement::contract_leg(int leg, const std::function<Scalar(const Expos&)>& fn) const {
    TensorElement r(*spec_, arity_ - 1);
    for (const auto& [k, c] : terms_) {
        Scalar s = fn(k[leg]);
        if (s.is_zero()) continue;
        TensorKey key{};
        int out = 0;
        for (int l = 0; l < arity_; ++l)
            if (l != leg) key[out++] = k[l];
        r.add_term(key, c * s);
    }
    return r;
}

AlgebraElement TensorElement::multiply_out() const {
    AlgebraElement r(*spec_);
    for (const auto& [k, c] : terms_) {
        Word w;
        for (int l = 0; l < arity_; ++l)
            for (int p = 0; p < spec_->ngens; ++p)
                if (k[l][p] != 0) w.emplace_back(p, k[l][p]);
        std::map<Expos, Scalar> acc;
        straighten_into(*spec_, std::move(w), c, acc);
        for (const auto& [e, s] : acc) r.add_term(e, s);
    }
    return r;
}

std::string TensorElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*[";
        for (int l = 0; l < arity_; ++l) {
            if (l) os << " (x) ";
            bool any = false;
            for (int p = 0; p < spec_->ngens; ++p) {
                if (k[l][p] == 0) continue;
                if (any) os << ".";
                os << gen_name(spec_->gen[p]);
                if (k[l][p] != 1) os << "^" << k[l][p];
                any = true;
            }
            if (!any) os << "1";
        }
        os << "]";
    }
    return os.str();
}

} // namespace superq
