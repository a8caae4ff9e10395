#include "superq/algebra.hpp"

namespace superq {

namespace {

struct Expansion {
    Scalar coef;
    std::vector<std::pair<int, int>> word; // (Gen id, exponent)
};

// Falling product [w][w-1]...[w-u+1].
Scalar q_falling(const FieldContext& ctx, long w, long u) {
    Scalar s = Scalar::one(ctx);
    for (long v = w - u + 1; v <= w; ++v) s = s * q_int(ctx, v);
    return s;
}

// prod_{c=lo}^{hi} [k1; c] expanded into k1-powers: coefficient list over
// exponents hi-lo+1, hi-lo-1, ..., -(hi-lo+1).
std::vector<std::pair<int, Scalar>> k1_bracket_product(const FieldContext& ctx, long lo, long hi) {
    Scalar inv = q_minus_qinv(ctx).inverse();
    std::map<int, Scalar> acc;
    acc[0] = Scalar::one(ctx);
    for (long c = lo; c <= hi; ++c) {
        std::map<int, Scalar> next;
        for (const auto& [m, s] : acc) {
            Scalar up = s * q_power(ctx, c) * inv;
            Scalar down = s * q_power(ctx, -c) * inv;
            auto it = next.find(m + 1);
            if (it == next.end()) next.emplace(m + 1, up);
            else it->second += up;
            it = next.find(m - 1);
            if (it == next.end()) next.emplace(m - 1, -down);
            else it->second -= down;
        }
        acc = std::move(next);
    }
    std::vector<std::pair<int, Scalar>> out;
    for (auto& [m, s] : acc)
        if (!s.is_zero()) out.emplace_back(m, s);
    return out;
}

// Closed forms from the commutation table: the out-of-order product
// A^m B^n (A after B in PBW order) rewritten as an F-combination of
// ordered words. Exponents of the order-2 nilpotents are always 1 here.
std::vector<Expansion> expand_pair(const AlgebraSpec& spec, int ga, long m, int gb, long n) {
    const FieldContext& ctx = *spec.ctx;
    auto qp = [&](long e) { return q_power(ctx, e); };
    auto one = [&]() { return Scalar::one(ctx); };
    std::vector<Expansion> out;
    auto scalar_swap = [&](const Scalar& c) {
        out.push_back({c, {{gb, (int)n}, {ga, (int)m}}});
    };

    switch (ga) {
        case GF3:
            if (gb == GF1) { scalar_swap(qp(-m * n)); return out; } // f3^s f1^w = q^-sw f1^w f3^s
            break;
        case GF2:
            if (gb == GF1) { // f2 f1^w = q^w f1^w f2 + [w] f1^(w-1) f3
                scalar_swap(qp(n * m));
                out.push_back({q_int(ctx, n), {{GF1, (int)n - 1}, {GF3, 1}}});
                return out;
            }
            if (gb == GF3) { scalar_swap(qp(m * n) * Scalar::of_int(ctx, (m * n) % 2 ? -1 : 1)); return out; } // (-q)^sl
            break;
        case GK1:
            if (gb == GF1) { scalar_swap(qp(-2 * m * n)); return out; }
            if (gb == GF3) { scalar_swap(qp(-m * n)); return out; }
            if (gb == GF2) { scalar_swap(qp(m * n)); return out; }
            break;
        case GK2:
            if (gb == GF1) { scalar_swap(qp(m * n)); return out; }
            if (gb == GF3) { scalar_swap(qp(m * n)); return out; }
            if (gb == GF2) { scalar_swap(one()); return out; }
            if (gb == GK1) { scalar_swap(one()); return out; }
            break;
        case GE1:
            if (gb == GF1) { // the double-factorial sum with [k1; .] products
                long r = m, w = n;
                scalar_swap(one());
                for (long u = 1; u <= std::min(r, w); ++u) {
                    Scalar c = gauss_binomial(ctx, r, u) * q_falling(ctx, w, u);
                    for (const auto& [kk, s] : k1_bracket_product(ctx, u - r - w + 1, 2 * u - r - w)) {
                        Expansion ex;
                        ex.coef = c * s;
                        if (w - u > 0) ex.word.emplace_back(GF1, (int)(w - u));
                        if (kk != 0) ex.word.emplace_back(GK1, kk);
                        if (r - u > 0) ex.word.emplace_back(GE1, (int)(r - u));
                        out.push_back(std::move(ex));
                    }
                }
                return out;
            }
            if (gb == GF3) { // e1^r f3 = f3 e1^r - q^(2-r) [r] f2 k1 e1^(r-1)
                scalar_swap(one());
                Expansion ex;
                ex.coef = -(qp(2 - m) * q_int(ctx, m));
                ex.word = {{GF2, 1}, {GK1, 1}};
                if (m - 1 > 0) ex.word.emplace_back(GE1, (int)(m - 1));
                out.push_back(std::move(ex));
                return out;
            }
            if (gb == GF2) { scalar_swap(one()); return out; }
            if (gb == GK1) { scalar_swap(qp(-2 * m * n)); return out; }
            if (gb == GK2) { scalar_swap(qp(m * n)); return out; }
            break;
        case GE3:
            if (gb == GF1) { // e3 f1^w = f1^w e3 - q^(w-2) [w] f1^(w-1) k1^-1 e2
                scalar_swap(one());
                Expansion ex;
                ex.coef = -(qp(n - 2) * q_int(ctx, n));
                if (n - 1 > 0) ex.word.emplace_back(GF1, (int)(n - 1));
                ex.word.emplace_back(GK1, -1);
                ex.word.emplace_back(GE2, 1);
                out.push_back(std::move(ex));
                return out;
            }
            if (gb == GF3) { // e3 f3 = -f3 e3 + (k1 k2 - k1^-1 k2^-1)/(q - q^-1)
                scalar_swap(-one());
                Scalar inv = q_minus_qinv(ctx).inverse();
                out.push_back({inv, {{GK1, 1}, {GK2, 1}}});
                out.push_back({-inv, {{GK1, -1}, {GK2, -1}}});
                return out;
            }
            if (gb == GF2) { // e3 f2 = -f2 e3 + k2 e1
                scalar_swap(-one());
                out.push_back({one(), {{GK2, 1}, {GE1, 1}}});
                return out;
            }
            if (gb == GK1) { scalar_swap(qp(-n * m)); return out; }
            if (gb == GK2) { scalar_swap(qp(n * m)); return out; }
            if (gb == GE1) { scalar_swap(qp(-m * n)); return out; }
            break;
        case GE2:
            if (gb == GF1) { scalar_swap(one()); return out; }
            if (gb == GF3) { // e2 f3 = -f3 e2 + f1 k2^-1
                scalar_swap(-one());
                out.push_back({one(), {{GF1, 1}, {GK2, -1}}});
                return out;
            }
            if (gb == GF2) { // e2 f2 = -f2 e2 + [k2; 0]
                scalar_swap(-one());
                Scalar inv = q_minus_qinv(ctx).inverse();
                out.push_back({inv, {{GK2, 1}}});
                out.push_back({-inv, {{GK2, -1}}});
                return out;
            }
            if (gb == GK1) { scalar_swap(qp(n * m)); return out; }
            if (gb == GK2) { scalar_swap(one()); return out; }
            if (gb == GE1) { // e2 e1^r = q^r e1^r e2 - q [r] e1^(r-1) e3
                scalar_swap(qp(n * m));
                Expansion ex;
                ex.coef = -(qp(1) * q_int(ctx, n));
                if (n - 1 > 0) ex.word.emplace_back(GE1, (int)(n - 1));
                ex.word.emplace_back(GE3, 1);
                out.push_back(std::move(ex));
                return out;
            }
            if (gb == GE3) { scalar_swap(qp(m * n) * Scalar::of_int(ctx, (m * n) % 2 ? -1 : 1)); return out; }
            break;
        // Relations of the dual Hopf superalgebra X.
        case GAE3:
            if (gb == GAE1) { scalar_swap(qp(-m * n)); return out; } // ae3 ae1^w = q^-w ae1^w ae3
            break;
        case GAE2:
            if (gb == GAE1) { // ae2 ae1^w = q^w ae1^w ae2 + [w] ae1^(w-1) ae3
                scalar_swap(qp(n * m));
                Expansion ex;
                ex.coef = q_int(ctx, n);
                if (n - 1 > 0) ex.word.emplace_back(GAE1, (int)(n - 1));
                ex.word.emplace_back(GAE3, 1);
                out.push_back(std::move(ex));
                return out;
            }
            if (gb == GAE3) { scalar_swap(qp(m * n) * Scalar::of_int(ctx, (m * n) % 2 ? -1 : 1)); return out; } // -q
            break;
        case GAK1:
            if (gb == GAE1) { scalar_swap(qp(-2 * m * n)); return out; }
            if (gb == GAE3) { scalar_swap(qp(-m * n)); return out; }
            if (gb == GAE2) { scalar_swap(qp(m * n)); return out; }
            break;
        case GAK2:
            if (gb == GAE1) { scalar_swap(qp(m * n)); return out; }
            if (gb == GAE3) { scalar_swap(qp(m * n)); return out; }
            if (gb == GAE2) { scalar_swap(one()); return out; }
            if (gb == GAK1) { scalar_swap(one()); return out; }
            break;
        default:
            break;
    }
    throw UnknownPair(std::string("no straightening rule for ") + gen_name(ga) + " * " + gen_name(gb));
}

// Merge adjacent runs and apply power reductions until stable; returns
// false when the word is annihilated by a nilpotent power or f1^d/e1^d.
// (A cyclic reduction k^d -> 1 can make two runs of the same generator
// adjacent, whose merged exponent needs reducing again.)
bool normalize_word(const AlgebraSpec& spec, Word& w) {
    bool changed = true;
    while (changed) {
        changed = false;
        Word out;
        out.reserve(w.size());
        for (auto [pos, exp] : w) {
            if (exp == 0) { changed = true; continue; }
            if (!out.empty() && out.back().first == pos) {
                out.back().second += exp;
                changed = true;
                if (out.back().second == 0) out.pop_back();
                continue;
            }
            out.emplace_back(pos, exp);
        }
        for (auto& [pos, exp] : out) {
            if (spec.cyclic[pos] && spec.cap[pos] > 0) {
                int r = ((exp % spec.cap[pos]) + spec.cap[pos]) % spec.cap[pos];
                if (r != exp) { exp = r; changed = true; }
            } else if (spec.cap[pos] > 0 && exp >= spec.cap[pos]) {
                return false; // nilpotent power vanishes
            } else if (exp < 0) {
                throw std::logic_error("negative exponent on non-cyclic generator");
            }
        }
        w = std::move(out);
    }
    return true;
}

} // namespace

namespace {

// Scalar-only swap rules: A^m B^n = (+-1)^{mn} q^{c m n} B^n A^m.
// Returns false for the branching pairs, which go through expand_pair.
struct PureSwap {
    bool pure;
    int qcoef;
    bool alternating; // extra (-1)^{mn}
};

PureSwap pure_swap(int ga, int gb) {
    switch (ga) {
        case GF3:
            if (gb == GF1) return {true, -1, false};
            break;
        case GF2:
            if (gb == GF3) return {true, 1, true};
            break;
        case GK1:
            if (gb == GF1) return {true, -2, false};
            if (gb == GF3) return {true, -1, false};
            if (gb == GF2) return {true, 1, false};
            break;
        case GK2:
            if (gb == GF1) return {true, 1, false};
            if (gb == GF3) return {true, 1, false};
            if (gb == GF2) return {true, 0, false};
            if (gb == GK1) return {true, 0, false};
            break;
        case GE1:
            if (gb == GF2) return {true, 0, false};
            if (gb == GK1) return {true, -2, false};
            if (gb == GK2) return {true, 1, false};
            break;
        case GE3:
            if (gb == GK1) return {true, -1, false};
            if (gb == GK2) return {true, 1, false};
            if (gb == GE1) return {true, -1, false};
            break;
        case GE2:
            if (gb == GF1) return {true, 0, false};
            if (gb == GK1) return {true, 1, false};
            if (gb == GK2) return {true, 0, false};
            if (gb == GE3) return {true, 1, true};
            break;
        case GAE3:
            if (gb == GAE1) return {true, -1, false};
            break;
        case GAE2:
            if (gb == GAE3) return {true, 1, true};
            break;
        case GAK1:
            if (gb == GAE1) return {true, -2, false};
            if (gb == GAE3) return {true, -1, false};
            if (gb == GAE2) return {true, 1, false};
            break;
        case GAK2:
            if (gb == GAE1) return {true, 1, false};
            if (gb == GAE3) return {true, 1, false};
            if (gb == GAE2) return {true, 0, false};
            if (gb == GAK1) return {true, 0, false};
            break;
        default:
            break;
    }
    return {false, 0, false};
}

} // namespace

void straighten_into(const AlgebraSpec& spec, Word word, const Scalar& coef,
                     std::map<Expos, Scalar>& out) {
    if (coef.is_zero()) return;
    std::vector<std::pair<Scalar, Word>> work;
    work.emplace_back(coef, std::move(word));
    while (!work.empty()) {
        auto [c, w] = std::move(work.back());
        work.pop_back();
        if (!normalize_word(spec, w)) continue;

        // Bubble every scalar-only swap in place, accumulating the q-power
        // and sign; branching pairs stay put as barriers.
        long qe = 0;
        int sgn = 1;
        bool swapped = true;
        while (swapped) {
            swapped = false;
            for (size_t i = 0; i + 1 < w.size(); ++i) {
                if (w[i].first <= w[i + 1].first) continue;
                PureSwap ps = pure_swap(spec.gen[w[i].first], spec.gen[w[i + 1].first]);
                if (!ps.pure) continue;
                long m = w[i].second, n = w[i + 1].second;
                qe += (long)ps.qcoef * m * n;
                if (ps.alternating && ((m * n) & 1)) sgn = -sgn;
                std::swap(w[i], w[i + 1]);
                swapped = true;
            }
        }
        Scalar cc = (sgn < 0) ? -c.times_q_power(qe) : c.times_q_power(qe);

        // leftmost pair still out of order is necessarily a branching one
        size_t i = 0;
        while (i + 1 < w.size() && w[i].first <= w[i + 1].first) ++i;
        if (i + 1 >= w.size()) {
            if (!normalize_word(spec, w)) continue;
            bool sorted = true;
            for (size_t j = 0; j + 1 < w.size(); ++j)
                if (w[j].first > w[j + 1].first) { sorted = false; break; }
            if (sorted) {
                Expos e{};
                for (auto [pos, exp] : w) e[pos] = exp;
                auto it = out.find(e);
                if (it == out.end()) out.emplace(e, std::move(cc));
                else it->second += cc;
            } else {
                // a cap reduction re-exposed an out-of-order pair; requeue
                work.emplace_back(std::move(cc), std::move(w));
            }
            continue;
        }
        auto expansions = expand_pair(spec, spec.gen[w[i].first], w[i].second,
                                      spec.gen[w[i + 1].first], w[i + 1].second);
        for (auto& ex : expansions) {
            if (ex.coef.is_zero()) continue;
            Word next;
            next.reserve(w.size() + ex.word.size());
            next.insert(next.end(), w.begin(), w.begin() + i);
            for (auto [g, exp] : ex.word) {
                int pos = spec.position_of(g);
                if (pos < 0)
                    throw UnknownPair(std::string("rule emits ") + gen_name(g) + " outside " + spec.name);
                next.emplace_back(pos, exp);
            }
            next.insert(next.end(), w.begin() + i + 2, w.end());
            work.emplace_back(cc * ex.coef, std::move(next));
        }
    }
}

AlgebraElement straighten_pair(const AlgebraSpec& spec, int pos_a, int exp_a, int pos_b, int exp_b) {
    AlgebraElement r(spec);
    std::map<Expos, Scalar> acc;
    straighten_into(spec, Word{{pos_a, exp_a}, {pos_b, exp_b}}, Scalar::one(*spec.ctx), acc);
    for (auto& [e, c] : acc)
        if (!c.is_zero()) r.add_term(e, c);
    return r;
}

} // namespace superq
