#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wtp {

using BigRat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Exact complex scalar with rational real and imaginary parts.
struct GQ {
    BigRat re, im;

    GQ() = default;
    GQ(BigRat r) : re(std::move(r)) {}
    GQ(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}
    GQ(int r) : re(r) {}
    static GQ i() { return GQ(BigRat(0), BigRat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    GQ conj() const { return {re, -im}; }
    BigRat norm() const { return re * re + im * im; } // |z|^2

    friend GQ operator+(const GQ& a, const GQ& b) { return {a.re + b.re, a.im + b.im}; }
    friend GQ operator-(const GQ& a, const GQ& b) { return {a.re - b.re, a.im - b.im}; }
    friend GQ operator-(const GQ& a) { return {-a.re, -a.im}; }
    friend GQ operator*(const GQ& a, const GQ& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GQ operator/(const GQ& a, const GQ& b) {
        BigRat n = b.norm();
        GQ p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    GQ& operator+=(const GQ& o) { return *this = *this + o; }
    GQ& operator-=(const GQ& o) { return *this = *this - o; }
    GQ& operator*=(const GQ& o) { return *this = *this * o; }

    bool operator==(const GQ&) const = default;

    std::string str() const;
};

// Exact rational square root, when one exists.
std::optional<BigRat> rat_sqrt(const BigRat& x);
// Exact square root in the Gaussian rationals, when one exists.
std::optional<GQ> gq_sqrt(const GQ& z);

// Rational-complex scalar parser for tokens like "3", "-1/2", "i", "2-3i",
// "1/2+3/4i".  Throws Error("ParseError") on malformed input.
GQ parse_gq(const std::string& token);

using Vec = std::vector<GQ>;
using Mat = std::vector<Vec>;

// ⟨a,b⟩ with the first argument conjugated.
GQ inner(const Vec& a, const Vec& b);
Vec conj(const Vec& v);

// In-place reduced row echelon form; returns the rank.  Zero rows are
// dropped, making the result canonical for the row space.
std::size_t rref(Mat& m);
// Basis of the right kernel {x : m·x = 0}.
Mat kernel(const Mat& m, std::size_t cols);

// Subspace of ℚ(i)^ambient in canonical reduced-echelon basis form.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}
    static Subspace span(std::size_t ambient, Mat rows);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const Mat& basis() const { return rows_; }

    bool member(const Vec& v) const;
    bool contains(const Subspace& o) const;
    Subspace sum(const Subspace& o) const;
    Subspace intersect(const Subspace& o) const;
    // Orthogonal complement for the Hermitian inner product.
    Subspace orthogonal() const;

    bool operator==(const Subspace&) const = default;

private:
    std::size_t ambient_;
    Mat rows_;
};

} // namespace wtp
