#include "superq/json_io.hpp"

#include <sstream>

namespace superq {

json scalar_to_json(const Scalar& s) {
    json coeffs = json::array();
    for (const Rat& c : s.coeffs()) coeffs.push_back(rat_to_string(c));
    return json{{"d", s.ctx().d()}, {"coeffs", coeffs}};
}

Scalar scalar_from_json(const json& j) {
    const FieldContext& ctx = FieldContext::get(j.at("d").get<int>());
    std::vector<Rat> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rat_from_string(c.get<std::string>()));
    if ((int)coeffs.size() != ctx.degree())
        throw std::invalid_argument("scalar coefficient count must be phi(d)");
    return Scalar(ctx, std::move(coeffs));
}

namespace {

const AlgebraSpec& spec_by_name(const std::string& name, int d) {
    if (name == "ubar") return AlgebraSpec::get(AlgKind::UBar, d);
    if (name == "bplus") return AlgebraSpec::get(AlgKind::BPlus, d);
    if (name == "bminus") return AlgebraSpec::get(AlgKind::BMinus, d);
    if (name == "x") return AlgebraSpec::get(AlgKind::DualX, d);
    throw std::invalid_argument("unknown algebra: " + name);
}

json mono_to_json(const AlgebraSpec& s, const Expos& e) {
    json m = json::array();
    for (int p = 0; p < s.ngens; ++p) m.push_back(e[p]);
    return m;
}

Expos mono_from_json(const AlgebraSpec& s, const json& j) {
    if ((int)j.size() != s.ngens) throw std::invalid_argument("exponent tuple length mismatch");
    Expos e{};
    for (int p = 0; p < s.ngens; ++p) e[p] = j[p].get<int>();
    if (!s.valid_monomial(e)) throw std::invalid_argument("exponents out of range for " + s.name);
    return e;
}

} // namespace

json element_to_json(const AlgebraElement& x) {
    const AlgebraSpec& s = x.spec();
    json terms = json::array();
    for (const auto& [e, c] : x.terms())
        terms.push_back(json{{"m", mono_to_json(s, e)}, {"c", scalar_to_json(c)}});
    return json{{"algebra", s.name}, {"d", s.d}, {"terms", terms}};
}

AlgebraElement element_from_json(const json& j) {
    const AlgebraSpec& s = spec_by_name(j.at("algebra").get<std::string>(), j.at("d").get<int>());
    AlgebraElement x(s);
    for (const auto& t : j.at("terms"))
        x.add_term(mono_from_json(s, t.at("m")), scalar_from_json(t.at("c")));
    return x;
}

json tensor_to_json(const TensorElement& t) {
    const AlgebraSpec& s = t.spec();
    json terms = json::array();
    for (const auto& [k, c] : t.terms()) {
        json legs = json::array();
        for (int l = 0; l < t.arity(); ++l) legs.push_back(mono_to_json(s, k[l]));
        terms.push_back(json{{"m", legs}, {"c", scalar_to_json(c)}});
    }
    return json{{"arity", t.arity()}, {"algebra", s.name}, {"d", s.d}, {"terms", terms}};
}

TensorElement tensor_from_json(const json& j) {
    const AlgebraSpec& s = spec_by_name(j.at("algebra").get<std::string>(), j.at("d").get<int>());
    int arity = j.at("arity").get<int>();
    if (arity < 1 || arity > 3) throw std::invalid_argument("tensor arity must be 1..3");
    TensorElement t(s, arity);
    for (const auto& term : j.at("terms")) {
        TensorKey k{};
        const auto& legs = term.at("m");
        if ((int)legs.size() != arity) throw std::invalid_argument("tensor leg count mismatch");
        for (int l = 0; l < arity; ++l) k[l] = mono_from_json(s, legs[l]);
        t.add_term(k, scalar_from_json(term.at("c")));
    }
    return t;
}

json matrix_to_json(const SparseMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("matrix export expects a square matrix");
    json entries = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j2, v] : m.row(i))
            entries.push_back(json{{"row", i}, {"col", j2}, {"c", scalar_to_json(v)}});
    return json{{"dim", m.rows()}, {"d", m.ctx().d()}, {"entries", entries}};
}

SparseMat matrix_from_json(const json& j) {
    const FieldContext& ctx = FieldContext::get(j.at("d").get<int>());
    int dim = j.at("dim").get<int>();
    SparseMat m(ctx, dim, dim);
    for (const auto& e : j.at("entries"))
        m.set(e.at("row").get<int>(), e.at("col").get<int>(), scalar_from_json(e.at("c")));
    return m;
}

std::string matrix_to_csv(const SparseMat& m) {
    std::ostringstream os;
    os << "row,col,value\n";
    for (int i = 0; i < m.rows(); ++i)
        for (const auto& [j, v] : m.row(i)) os << i << "," << j << ",\"" << v.to_string() << "\"\n";
    return os.str();
}

json rmatrix_to_json(const RMatrix& r, const std::string& form) {
    return json{{"d", r.spec().d},
                {"form", form},
                {"terms", r.term_count()},
                {"tensor", tensor_to_json(r.value())}};
}

json basis_to_json(const CentralizerBasis& b, int d, long mu) {
    json words = json::array();
    for (const auto& w : b.words) words.push_back(w);
    return json{{"n", b.n}, {"d", d}, {"mu", mu}, {"words", words}, {"dim", b.words.size()}};
}

json report_to_json(const Report& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    params["version"] = kArtifactVersion;
    json checks = json::array();
    for (const auto& c : r.results) {
        json jc{{"check", c.check}, {"input", c.input}, {"pass", c.pass}};
        if (!c.pass) {
            jc["lhs"] = c.lhs;
            jc["rhs"] = c.rhs;
        }
        checks.push_back(jc);
    }
    json out{{"suite", r.suite}, {"params", params}, {"pass", r.all_pass()}, {"checks", checks}};
    if (const CheckResult* f = r.first_failure())
        out["first_failure"] = json{{"check", f->check}, {"input", f->input}, {"lhs", f->lhs}, {"rhs", f->rhs}};
    return out;
}

} // namespace superq
