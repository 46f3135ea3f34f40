#pragma once

// Exact projective 3-space: homogeneous points (columns), planes (rows),
// 4x4 transformations and quadratic forms. Everything is generic over the
// scalar type, which is either Rational or Poly.

#include <array>
#include <ostream>
#include <type_traits>

#include "cayley/errors.hpp"
#include "cayley/poly.hpp"
#include "cayley/rational.hpp"

namespace cayley {

template <class S>
using Vec4 = std::array<S, 4>;

template <class S>
bool is_zero_vec(const Vec4<S>& v) {
    for (const auto& x : v) {
        if (!is_zero(x)) return false;
    }
    return true;
}

// True iff a and b are nonzero and span the same line (all 2x2 minors vanish).
template <class S>
bool proportional(const Vec4<S>& a, const Vec4<S>& b) {
    if (is_zero_vec(a) || is_zero_vec(b)) return false;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (!is_zero(S(a[i] * b[j] - a[j] * b[i]))) return false;
        }
    }
    return true;
}

// Scales a rational vector to the primitive integer vector whose first
// nonzero entry is positive. Idempotent and invariant under nonzero scaling.
inline Vec4<Rational> canonical_coords(const Vec4<Rational>& v) {
    mpz_class lcm_den = 1;
    mpz_class gcd_num = 0;
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        mpz_class d = x.denominator();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    }
    Vec4<Rational> out;
    for (int i = 0; i < 4; ++i) out[i] = v[i] * Rational(mpq_class(lcm_den));
    for (const auto& x : out) {
        mpz_class n = x.numerator();
        mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), n.get_mpz_t());
    }
    if (gcd_num == 0) return v;
    int lead_sign = 0;
    for (const auto& x : out) {
        if (!x.is_zero()) {
            lead_sign = x.sign();
            break;
        }
    }
    mpq_class scale(mpz_class(lead_sign), gcd_num);
    for (auto& x : out) x *= Rational(scale);
    return out;
}

enum class PointRole { point, plane };

// Homogeneous 4-tuple. Points and planes are distinct instantiations so a
// column can never be passed where a row is expected.
template <class S, PointRole Role>
struct Homogeneous {
    Vec4<S> coords{};

    Homogeneous() = default;
    explicit Homogeneous(Vec4<S> c) : coords(std::move(c)) {}
    Homogeneous(S a, S b, S c, S d) : coords{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    const S& operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
    S& operator[](int i) { return coords[static_cast<std::size_t>(i)]; }

    bool is_zero() const { return is_zero_vec(coords); }

    Homogeneous canonical() const {
        if constexpr (std::is_same_v<S, Rational>) {
            return Homogeneous(canonical_coords(coords));
        } else {
            return *this;
        }
    }

    // Projective equality (equal up to a nonzero scalar).
    friend bool operator==(const Homogeneous& a, const Homogeneous& b) {
        return proportional(a.coords, b.coords);
    }
};

template <class S>
using HPoint = Homogeneous<S, PointRole::point>;
template <class S>
using HPlane = Homogeneous<S, PointRole::plane>;

template <class S, PointRole R>
std::ostream& operator<<(std::ostream& os, const Homogeneous<S, R>& h) {
    os << "(";
    for (int i = 0; i < 4; ++i) os << (i ? ", " : "") << h[i];
    return os << ")";
}

enum class MatRole { collineation, duality };

template <class S>
class Mat4 {
public:
    using Rows = std::array<Vec4<S>, 4>;

    Mat4() = default;
    explicit Mat4(Rows rows, MatRole role = MatRole::collineation) : rows_(std::move(rows)), role_(role) {}

    static Mat4 identity() { return diagonal(S(1), S(1), S(1), S(1)); }
    static Mat4 diagonal(S a, S b, S c, S d) {
        Rows r{};
        for (auto& row : r) row.fill(S(0));
        r[0][0] = std::move(a);
        r[1][1] = std::move(b);
        r[2][2] = std::move(c);
        r[3][3] = std::move(d);
        return Mat4(std::move(r));
    }

    const S& operator()(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    S& operator()(int i, int j) { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const Rows& rows() const { return rows_; }

    MatRole role() const { return role_; }
    Mat4 with_role(MatRole r) const {
        Mat4 m = *this;
        m.role_ = r;
        return m;
    }

    Mat4 transpose() const {
        Mat4 t;
        t.role_ = role_;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) t(i, j) = (*this)(j, i);
        return t;
    }

    Mat4 scaled(const S& factor) const {
        Mat4 m = *this;
        for (auto& row : m.rows_)
            for (auto& x : row) x = x * factor;
        return m;
    }

    bool is_lower_triangular() const {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!cayley::is_zero((*this)(i, j))) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& row : rows_)
            if (!is_zero_vec(row)) return false;
        return true;
    }

    // Role of a product follows the composition rule: two dualities or two
    // collineations give a collineation.
    friend Mat4 operator*(const Mat4& a, const Mat4& b) {
        Mat4 c;
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                S sum(0);
                for (int k = 0; k < 4; ++k) sum = sum + a(i, k) * b(k, j);
                c(i, j) = std::move(sum);
            }
        }
        c.role_ = (a.role_ == b.role_) ? MatRole::collineation : MatRole::duality;
        return c;
    }

    friend Vec4<S> operator*(const Mat4& a, const Vec4<S>& x) {
        Vec4<S> y;
        for (int i = 0; i < 4; ++i) {
            S sum(0);
            for (int k = 0; k < 4; ++k) sum = sum + a(i, k) * x[static_cast<std::size_t>(k)];
            y[static_cast<std::size_t>(i)] = std::move(sum);
        }
        return y;
    }

    // Structural entrywise equality (role ignored).
    friend bool operator==(const Mat4& a, const Mat4& b) { return a.rows_ == b.rows_; }

private:
    Rows rows_{};
    MatRole role_ = MatRole::collineation;
};

// True iff a = lambda * b for some nonzero scalar (entries compared as 16-vectors).
template <class S>
bool proportional(const Mat4<S>& a, const Mat4<S>& b) {
    if (a.is_zero() || b.is_zero()) return false;
    // Pick a pivot where b is nonzero; a must then equal (a_p / b_p) * b,
    // checked fraction-free as a_ij * b_p == b_ij * a_p.
    int pi = -1, pj = -1;
    for (int i = 0; i < 4 && pi < 0; ++i)
        for (int j = 0; j < 4; ++j)
            if (!is_zero(b(i, j))) {
                pi = i;
                pj = j;
                break;
            }
    const S& ap = a(pi, pj);
    const S& bp = b(pi, pj);
    if (is_zero(ap)) return false;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!is_zero(S(a(i, j) * bp - b(i, j) * ap))) return false;
    return true;
}

namespace detail {

template <class S>
S det3(const Mat4<S>& m, int skip_row, int skip_col) {
    int r[3], c[3];
    for (int i = 0, k = 0; i < 4; ++i)
        if (i != skip_row) r[k++] = i;
    for (int j = 0, k = 0; j < 4; ++j)
        if (j != skip_col) c[k++] = j;
    auto at = [&](int i, int j) -> const S& { return m(r[i], c[j]); };
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

}  // namespace detail

template <class S>
S determinant(const Mat4<S>& m) {
    S d(0);
    for (int j = 0; j < 4; ++j) {
        S minor = detail::det3(m, 0, j);
        if (j % 2 == 0) {
            d = d + m(0, j) * minor;
        } else {
            d = d - m(0, j) * minor;
        }
    }
    return d;
}

template <class S>
Mat4<S> adjugate(const Mat4<S>& m) {
    Mat4<S> adj;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            S minor = detail::det3(m, j, i);
            adj(i, j) = ((i + j) % 2 == 0) ? minor : S(-minor);
        }
    }
    return adj.with_role(m.role());
}

// Exact inverse. Over Rational this is adj/det; over Poly the adjugate is
// returned, i.e. the inverse cleared to the common scale det(M).
template <class S>
Mat4<S> mat_inverse(const Mat4<S>& m) {
    S det = determinant(m);
    if (is_zero(det)) throw SingularMatrix();
    Mat4<S> adj = adjugate(m);
    if constexpr (std::is_same_v<S, Rational>) {
        return adj.scaled(det.inverse());
    } else {
        return adj;
    }
}

template <class S>
HPoint<S> apply(const Mat4<S>& m, const HPoint<S>& x) {
    if (m.role() != MatRole::collineation) throw Error("apply: matrix is a duality");
    if (is_zero(determinant(m))) throw SingularMatrix();
    return HPoint<S>(m * x.coords).canonical();
}

// Duality action x -> (M x)^T.
template <class S>
HPlane<S> apply_dual(const Mat4<S>& m, const HPoint<S>& x) {
    if (m.role() != MatRole::duality) throw Error("apply_dual: matrix is a collineation");
    if (is_zero(determinant(m))) throw SingularMatrix();
    return HPlane<S>(m * x.coords).canonical();
}

// Image of a plane under the collineation M: y -> y adj(M), up to scale.
template <class S>
HPlane<S> apply_to_plane(const Mat4<S>& m, const HPlane<S>& y) {
    if (m.role() != MatRole::collineation) throw Error("apply_to_plane: matrix is a duality");
    Mat4<S> adj = adjugate(m);
    if (adj.is_zero()) throw SingularMatrix();
    return HPlane<S>(adj.transpose() * y.coords).canonical();
}

template <class S>
S pairing(const HPoint<S>& x, const HPlane<S>& y) {
    S sum(0);
    for (int i = 0; i < 4; ++i) sum = sum + y[i] * x[i];
    return sum;
}

template <class S>
bool incident(const HPoint<S>& x, const HPlane<S>& y) {
    return is_zero(pairing(x, y));
}

// x -> x^T S x with S symmetric.
template <class S>
class QuadForm {
public:
    explicit QuadForm(Mat4<S> sym) : m_(std::move(sym)) {
        if (!(m_ == m_.transpose())) throw Error("QuadForm: matrix is not symmetric");
    }

    const Mat4<S>& matrix() const { return m_; }

    template <class T>
    T operator()(const Vec4<T>& x) const {
        T sum(0);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (!is_zero(m_(i, j))) sum = sum + T(m_(i, j)) * x[i] * x[j];
        return sum;
    }

private:
    Mat4<S> m_;
};

template <class S>
S quad_eval(const QuadForm<S>& q, const HPoint<S>& x) {
    return q(x.coords);
}

// 6 x0 x3 - 2 x1 x2 (hyperbolic paraboloid)
inline QuadForm<Rational> quad_Q1() {
    Mat4<Rational> m = Mat4<Rational>::diagonal(0, 0, 0, 0);
    m(0, 3) = m(3, 0) = Rational(3);
    m(1, 2) = m(2, 1) = Rational(-1);
    return QuadForm<Rational>(m);
}

// 4 x2^2 - 6 x1 x3 (quadratic cone)
inline QuadForm<Rational> quad_Q2() {
    Mat4<Rational> m = Mat4<Rational>::diagonal(0, 0, 4, 0);
    m(1, 3) = m(3, 1) = Rational(-3);
    return QuadForm<Rational>(m);
}

}  // namespace cayley
