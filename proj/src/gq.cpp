#include "wtp/gq.hpp"

#include <cctype>

#include "wtp/core.hpp"

namespace wtp {

namespace {

std::string rat_str(const BigRat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

} // namespace

std::string GQ::str() const {
    if (im == 0) return rat_str(re);
    std::string imag = (im == 1 ? "" : im == -1 ? "-" : rat_str(im)) + "i";
    if (re == 0) return imag;
    return rat_str(re) + (im > 0 ? "+" : "") + imag;
}

std::optional<BigRat> rat_sqrt(const BigRat& x) {
    if (x < 0) return std::nullopt;
    if (x == 0) return BigRat(0);
    BigInt n = numerator(x), d = denominator(x);
    BigInt sn = sqrt(n), sd = sqrt(d);
    if (sn * sn != n || sd * sd != d) return std::nullopt;
    return BigRat(sn, sd);
}

std::optional<GQ> gq_sqrt(const GQ& z) {
    if (z.im == 0) {
        if (z.re >= 0) {
            if (auto s = rat_sqrt(z.re)) return GQ(*s);
            return std::nullopt;
        }
        if (auto s = rat_sqrt(-z.re)) return GQ(BigRat(0), *s);
        return std::nullopt;
    }
    // (x+yi)^2 = a+bi: x^2+y^2 = |z|, x^2-y^2 = a, 2xy = b
    auto mod = rat_sqrt(z.norm());
    if (!mod) return std::nullopt;
    auto x = rat_sqrt((z.re + *mod) / 2);
    if (!x || *x == 0) return std::nullopt;
    return GQ(*x, z.im / (2 * *x));
}

GQ parse_gq(const std::string& token) {
    // grammar: [sign] part [sign part], each part = rational ['i'] | 'i'
    std::string tok;
    for (char c : token)
        if (!std::isspace(static_cast<unsigned char>(c))) tok += c;
    std::size_t pos = 0;
    BigRat re(0), im(0);
    auto parse_part = [&]() {
        int sign = 1;
        if (pos < tok.size() && (tok[pos] == '+' || tok[pos] == '-')) {
            if (tok[pos] == '-') sign = -1;
            ++pos;
        }
        if (pos >= tok.size()) throw Error("ParseError", "bad scalar: " + token);
        if (tok[pos] == 'i') {
            ++pos;
            im += sign;
            return;
        }
        std::size_t start = pos;
        while (pos < tok.size() &&
               (std::isdigit(static_cast<unsigned char>(tok[pos])) || tok[pos] == '/'))
            ++pos;
        if (pos == start) throw Error("ParseError", "bad scalar: " + token);
        BigRat v;
        try {
            v = BigRat(tok.substr(start, pos - start));
        } catch (...) {
            throw Error("ParseError", "bad scalar: " + token);
        }
        if (pos < tok.size() && tok[pos] == 'i') {
            ++pos;
            im += sign * v;
        } else {
            re += sign * v;
        }
    };
    parse_part();
    if (pos < tok.size()) parse_part();
    if (pos < tok.size()) throw Error("ParseError", "bad scalar: " + token);
    return GQ(re, im);
}

GQ inner(const Vec& a, const Vec& b) {
    GQ s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i].conj() * b[i];
    return s;
}

Vec conj(const Vec& v) {
    Vec r;
    for (const auto& x : v) r.push_back(x.conj());
    return r;
}

std::size_t rref(Mat& m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][c].is_zero()) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        GQ lead = m[rank][c];
        for (auto& x : m[rank]) x = x / lead;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            GQ f = m[r][c];
            for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    m.resize(rank);
    return rank;
}

Mat kernel(const Mat& m, std::size_t cols) {
    Mat a = m;
    rref(a);
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols, false);
    for (const auto& row : a) {
        for (std::size_t c = 0; c < cols; ++c)
            if (!row[c].is_zero()) {
                pivot_col.push_back(c);
                is_pivot[c] = true;
                break;
            }
    }
    Mat out;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(cols, GQ(0));
        v[fc] = GQ(1);
        for (std::size_t r = 0; r < a.size(); ++r) v[pivot_col[r]] = -a[r][fc];
        out.push_back(std::move(v));
    }
    return out;
}

Subspace Subspace::span(std::size_t ambient, Mat rows) {
    Subspace s(ambient);
    rref(rows);
    s.rows_ = std::move(rows);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Mat id(ambient, Vec(ambient, GQ(0)));
    for (std::size_t i = 0; i < ambient; ++i) id[i][i] = GQ(1);
    return span(ambient, std::move(id));
}

bool Subspace::member(const Vec& v) const {
    Mat m = rows_;
    m.push_back(v);
    return rref(m) == rows_.size();
}

bool Subspace::contains(const Subspace& o) const {
    for (const auto& r : o.rows_)
        if (!member(r)) return false;
    return true;
}

Subspace Subspace::sum(const Subspace& o) const {
    Mat m = rows_;
    m.insert(m.end(), o.rows_.begin(), o.rows_.end());
    return span(ambient_, std::move(m));
}

Subspace Subspace::orthogonal() const {
    // w ⊥ v for all basis v: Σ_k conj(v_k) w_k = 0 — kernel of the
    // conjugated basis matrix
    Mat constraints;
    for (const auto& r : rows_) constraints.push_back(conj(r));
    if (constraints.empty()) return full(ambient_);
    return span(ambient_, kernel(constraints, ambient_));
}

Subspace Subspace::intersect(const Subspace& o) const {
    // positive-definite Hermitian form: double complement is exact
    return orthogonal().sum(o.orthogonal()).orthogonal();
}

} // namespace wtp
