#include "superq/matrix.hpp"

#include <sstream>

namespace superq {

SparseMat SparseMat::identity(const FieldContext& ctx, int n) {
    SparseMat m(ctx, n, n);
    for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, Scalar::one(ctx));
    return m;
}

void SparseMat::set(int i, int j, const Scalar& v) {
    auto& row = data_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& a, int col) { return a.first < col; });
    if (it != row.end() && it->first == j) {
        if (v.is_zero()) row.erase(it);
        else it->second = v;
    } else if (!v.is_zero()) {
        row.insert(it, {j, v});
    }
}

void SparseMat::add_to(int i, int j, const Scalar& v) {
    if (v.is_zero()) return;
    auto& row = data_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& a, int col) { return a.first < col; });
    if (it != row.end() && it->first == j) {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    } else {
        row.insert(it, {j, v});
    }
}

Scalar SparseMat::get(int i, int j) const {
    const auto& row = data_[i];
    auto it = std::lower_bound(row.begin(), row.end(), j,
                               [](const auto& a, int col) { return a.first < col; });
    if (it != row.end() && it->first == j) return it->second;
    return Scalar::zero(*ctx_);
}

SparseMat SparseMat::operator*(const SparseMat& o) const {
    SparseMat r(*ctx_, rows_, o.cols_);
    std::vector<Scalar> acc(o.cols_, Scalar::zero(*ctx_));
    std::vector<int> touched;
    for (int i = 0; i < rows_; ++i) {
        touched.clear();
        for (const auto& [k, a] : data_[i]) {
            for (const auto& [j, b] : o.data_[k]) {
                if (acc[j].is_zero()) touched.push_back(j);
                acc[j] += a * b;
            }
        }
        std::sort(touched.begin(), touched.end());
        auto& row = r.data_[i];
        for (int j : touched) {
            if (!acc[j].is_zero()) row.emplace_back(j, acc[j]);
            acc[j] = Scalar::zero(*ctx_);
        }
    }
    return r;
}

SparseMat SparseMat::operator+(const SparseMat& o) const {
    SparseMat r(*this);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : o.data_[i]) r.add_to(i, j, v);
    return r;
}

SparseMat SparseMat::operator-(const SparseMat& o) const {
    SparseMat r(*this);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : o.data_[i]) r.add_to(i, j, -v);
    return r;
}

SparseMat SparseMat::scaled(const Scalar& c) const {
    SparseMat r(*ctx_, rows_, cols_);
    if (c.is_zero()) return r;
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) {
            Scalar s = v * c;
            if (!s.is_zero()) r.data_[i].emplace_back(j, std::move(s));
        }
    return r;
}

bool SparseMat::operator==(const SparseMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

bool SparseMat::is_zero() const {
    for (const auto& row : data_)
        if (!row.empty()) return false;
    return true;
}

bool SparseMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i) {
        if (data_[i].size() != 1) return false;
        if (data_[i][0].first != i || !data_[i][0].second.is_one()) return false;
    }
    return true;
}

SparseMat SparseMat::kron(const SparseMat& o) const {
    SparseMat r(*ctx_, rows_ * o.rows_, cols_ * o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, a] : data_[i])
            for (int I = 0; I < o.rows_; ++I)
                for (const auto& [J, b] : o.data_[I])
                    r.data_[i * o.rows_ + I].emplace_back(j * o.cols_ + J, a * b);
    for (auto& row : r.data_)
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return r;
}

SparseMat SparseMat::pow(int n) const {
    SparseMat acc = identity(*ctx_, rows_);
    SparseMat base = *this;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

SparseVec SparseMat::flatten() const {
    SparseVec v;
    v.reserve(nnz());
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, s] : data_[i]) v.emplace_back((int64_t)i * cols_ + j, s);
    return v;
}

long SparseMat::nnz() const {
    long n = 0;
    for (const auto& row : data_) n += (long)row.size();
    return n;
}

std::string SparseMat::to_string() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << "{";
    bool first = true;
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) {
            if (!first) os << ", ";
            first = false;
            os << "(" << i << "," << j << ")=" << v.to_string();
        }
    os << "}";
    return os.str();
}

SparseVec sparse_axpy(const SparseVec& v, const Scalar& c, const SparseVec& w) {
    SparseVec out;
    out.reserve(v.size() + w.size());
    size_t a = 0, b = 0;
    while (a < v.size() || b < w.size()) {
        if (b >= w.size() || (a < v.size() && v[a].first < w[b].first)) {
            out.push_back(v[a++]);
        } else if (a >= v.size() || w[b].first < v[a].first) {
            Scalar s = c * w[b].second;
            if (!s.is_zero()) out.emplace_back(w[b].first, std::move(s));
            ++b;
        } else {
            Scalar s = v[a].second + c * w[b].second;
            if (!s.is_zero()) out.emplace_back(v[a].first, std::move(s));
            ++a;
            ++b;
        }
    }
    return out;
}

SparseVec Echelon::reduce(SparseVec v) const {
    while (!v.empty()) {
        auto it = pivots_.find(v.front().first);
        if (it == pivots_.end()) return v;
        v = sparse_axpy(v, -v.front().second, it->second);
    }
    return v;
}

bool Echelon::insert(SparseVec v) {
    while (!v.empty()) {
        auto it = pivots_.find(v.front().first);
        if (it == pivots_.end()) break;
        v = sparse_axpy(v, -v.front().second, it->second);
    }
    if (v.empty()) return false;
    Scalar lead_inv = v.front().second.inverse();
    for (auto& [k, s] : v) s = s * lead_inv;
    int64_t key = v.front().first;
    pivots_.emplace(key, std::move(v));
    return true;
}

} // namespace superq
