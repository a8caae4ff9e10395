#include "superq/algebra.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace superq {

const char* gen_name(int gen) {
    static const char* names[] = {"f1", "f3", "f2", "k1", "k2", "e1", "e3", "e2",
                                  "ae1", "ae3", "ae2", "ak1", "ak2"};
    return names[gen];
}

const AlgebraSpec& AlgebraSpec::get(AlgKind kind, int d, bool ambient) {
    static std::mutex mu;
    static std::map<std::tuple<AlgKind, int, bool>, std::unique_ptr<AlgebraSpec>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(kind, d, ambient);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    auto spec = std::unique_ptr<AlgebraSpec>(new AlgebraSpec());
    spec->kind = kind;
    spec->d = d;
    spec->ambient = ambient;
    spec->ctx = &FieldContext::get(d);
    spec->gen.fill(-1);
    spec->parity.fill(0);
    spec->cap.fill(0);
    spec->cyclic.fill(0);

    auto set = [&](int pos, int g, int par, int cap, int cyc) {
        spec->gen[pos] = g;
        spec->parity[pos] = par;
        spec->cap[pos] = cap;
        spec->cyclic[pos] = cyc;
    };
    switch (kind) {
        case AlgKind::UBar:
            spec->ngens = 8;
            spec->name = "ubar";
            set(0, GF1, 0, ambient ? 0 : d, 0);
            set(1, GF3, 1, 2, 0);
            set(2, GF2, 1, 2, 0);
            set(3, GK1, 0, ambient ? 0 : d, 1);
            set(4, GK2, 0, ambient ? 0 : d, 1);
            set(5, GE1, 0, ambient ? 0 : d, 0);
            set(6, GE3, 1, 2, 0);
            set(7, GE2, 1, 2, 0);
            break;
        case AlgKind::BPlus:
            spec->ngens = 5;
            spec->name = "bplus";
            set(0, GK1, 0, d, 1);
            set(1, GK2, 0, d, 1);
            set(2, GE1, 0, d, 0);
            set(3, GE3, 1, 2, 0);
            set(4, GE2, 1, 2, 0);
            break;
        case AlgKind::BMinus:
            spec->ngens = 5;
            spec->name = "bminus";
            set(0, GF1, 0, d, 0);
            set(1, GF3, 1, 2, 0);
            set(2, GF2, 1, 2, 0);
            set(3, GK1, 0, d, 1);
            set(4, GK2, 0, d, 1);
            break;
        case AlgKind::DualX:
            spec->ngens = 5;
            spec->name = "x";
            set(0, GAE1, 0, d, 0);
            set(1, GAE3, 1, 2, 0);
            set(2, GAE2, 1, 2, 0);
            set(3, GAK1, 0, d, 1);
            set(4, GAK2, 0, d, 1);
            break;
    }
    it = cache.emplace(key, std::move(spec)).first;
    return *it->second;
}

int AlgebraSpec::position_of(int gen_id) const {
    for (int p = 0; p < ngens; ++p)
        if (gen[p] == gen_id) return p;
    return -1;
}

int AlgebraSpec::monomial_parity(const Expos& e) const {
    int par = 0;
    for (int p = 0; p < ngens; ++p) par += parity[p] * e[p];
    return par & 1;
}

bool AlgebraSpec::valid_monomial(const Expos& e) const {
    for (int p = 0; p < ngens; ++p) {
        if (cap[p] > 0 && (e[p] < 0 || e[p] >= cap[p])) return false;
        if (cap[p] == 0 && !cyclic[p] && e[p] < 0) return false;
    }
    for (int p = ngens; p < kMaxGens; ++p)
        if (e[p] != 0) return false;
    return true;
}

AlgebraElement AlgebraElement::unit(const AlgebraSpec& spec) {
    AlgebraElement r(spec);
    r.terms_[Expos{}] = Scalar::one(*spec.ctx);
    return r;
}

AlgebraElement AlgebraElement::monomial(const AlgebraSpec& spec, const Expos& e, const Scalar& c) {
    AlgebraElement r(spec);
    if (!c.is_zero()) r.terms_[e] = c;
    return r;
}

AlgebraElement AlgebraElement::monomial(const AlgebraSpec& spec, const Expos& e) {
    return monomial(spec, e, Scalar::one(*spec.ctx));
}

AlgebraElement AlgebraElement::generator(const AlgebraSpec& spec, int gen_id, int exp) {
    int pos = spec.position_of(gen_id);
    if (pos < 0) throw UnknownPair(std::string("generator ") + gen_name(gen_id) + " not in " + spec.name);
    Expos e{};
    e[pos] = exp;
    AlgebraElement r(spec);
    straighten_into(spec, Word{{pos, exp}}, Scalar::one(*spec.ctx), r.terms_);
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = it->second.is_zero() ? r.terms_.erase(it) : std::next(it);
    return r;
}

void AlgebraElement::add_term(const Expos& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    if (spec_ != o.spec_) throw SpecMismatch();
    AlgebraElement r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    if (spec_ != o.spec_) throw SpecMismatch();
    AlgebraElement r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r(*spec_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

AlgebraElement AlgebraElement::scaled(const Scalar& c) const {
    AlgebraElement r(*spec_);
    if (c.is_zero()) return r;
    for (const auto& [e, t] : terms_) {
        Scalar v = t * c;
        if (!v.is_zero()) r.terms_.emplace(e, std::move(v));
    }
    return r;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
    if (spec_ != o.spec_) throw SpecMismatch();
    AlgebraElement r(*spec_);
    Word word;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            word.clear();
            for (int p = 0; p < spec_->ngens; ++p)
                if (ea[p] != 0) word.emplace_back(p, ea[p]);
            for (int p = 0; p < spec_->ngens; ++p)
                if (eb[p] != 0) word.emplace_back(p, eb[p]);
            straighten_into(*spec_, word, ca * cb, r.terms_);
        }
    }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = it->second.is_zero() ? r.terms_.erase(it) : std::next(it);
    return r;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
    if (spec_ != o.spec_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b)
        if (a->first != b->first || a->second != b->second) return false;
    return true;
}

std::optional<int> AlgebraElement::parity() const {
    std::optional<int> par;
    for (const auto& [e, c] : terms_) {
        int p = spec_->monomial_parity(e);
        if (!par) par = p;
        else if (*par != p) return std::nullopt;
    }
    return par ? par : std::optional<int>(0);
}

std::string AlgebraElement::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (int p = 0; p < spec_->ngens; ++p) {
            if (e[p] == 0) continue;
            os << "*" << gen_name(spec_->gen[p]);
            if (e[p] != 1) os << "^" << e[p];
        }
    }
    return os.str();
}

AlgebraElement bracket_k1(const AlgebraSpec& spec, long n) {
    const FieldContext& ctx = *spec.ctx;
    Scalar inv = q_minus_qinv(ctx).inverse();
    int k1 = spec.position_of(GK1);
    AlgebraElement r(spec);
    Expos plus{};
    plus[k1] = 1;
    r.add_term(plus, q_power(ctx, n) * inv);
    Expos minus{};
    minus[k1] = spec.ambient ? -1 : spec.d - 1;
    r.add_term(minus, -(q_power(ctx, -n) * inv));
    return r;
}

std::vector<Expos> enumerate_basis(const AlgebraSpec& spec) {
    if (spec.ambient) throw CapExceeded("ambient algebra has no finite basis");
    std::vector<Expos> out;
    out.reserve(basis_dim(spec));
    Expos e{};
    int n = spec.ngens;
    while (true) {
        out.push_back(e);
        int p = n - 1;
        while (p >= 0) {
            if (++e[p] < spec.cap[p]) break;
            e[p] = 0;
            --p;
        }
        if (p < 0) break;
    }
    // lexicographic order on the exponent tuple
    std::sort(out.begin(), out.end());
    return out;
}

long basis_dim(const AlgebraSpec& spec) {
    if (spec.ambient) throw CapExceeded("ambient algebra has no finite basis");
    long dim = 1;
    for (int p = 0; p < spec.ngens; ++p) dim *= spec.cap[p];
    return dim;
}

} // namespace superq
