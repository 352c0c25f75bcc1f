#include "acp/linalg.hpp"

namespace acp {

BigReal inf_norm(const Vec& v) {
    if (v.empty()) return BigReal(Precision(2));
    BigReal m = abs(v[0]);
    for (size_t i = 1; i < v.size(); ++i) m = max(m, abs(v[i]));
    return m;
}

namespace {

Precision mat_precision(const Mat& a) {
    int d = 2;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) d = std::max(d, a.at(i, j).digits());
    return Precision(d);
}

struct Lu {
    Mat lu;                  // L below diagonal (unit), U on and above
    std::vector<size_t> perm;
    Precision prec;

    Lu(Mat m, std::vector<size_t> p, Precision pr) : lu(std::move(m)), perm(std::move(p)), prec(pr) {}
};

Lu lu_factor(Mat a) {
    const size_t n = a.rows();
    Precision p = mat_precision(a);
    BigReal tiny = pow10(-(2 * p.digits), p);
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;

    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        BigReal best = abs(a.at(perm[k], k));
        for (size_t i = k + 1; i < n; ++i) {
            BigReal cand = abs(a.at(perm[i], k));
            if (cand > best) { best = cand; piv = i; }
        }
        if (best <= tiny) throw Error("SingularJacobian", "pivot vanished during elimination");
        std::swap(perm[k], perm[piv]);
        const size_t rk = perm[k];
        for (size_t i = k + 1; i < n; ++i) {
            const size_t ri = perm[i];
            BigReal f = a.at(ri, k) / a.at(rk, k);
            a.at(ri, k) = f;
            if (f.is_zero()) continue;
            for (size_t j = k + 1; j < n; ++j) a.at(ri, j) = a.at(ri, j) - f * a.at(rk, j);
        }
    }
    return Lu(std::move(a), std::move(perm), p);
}

Vec lu_solve(const Lu& f, const Vec& b) {
    const size_t n = f.lu.rows();
    Vec y(n, BigReal(f.prec));
    for (size_t i = 0; i < n; ++i) {
        BigReal s = b[f.perm[i]];
        for (size_t j = 0; j < i; ++j) s = s - f.lu.at(f.perm[i], j) * y[j];
        y[i] = s;
    }
    Vec x(n, BigReal(f.prec));
    for (size_t ii = n; ii-- > 0;) {
        BigReal s = y[ii];
        for (size_t j = ii + 1; j < n; ++j) s = s - f.lu.at(f.perm[ii], j) * x[j];
        x[ii] = s / f.lu.at(f.perm[ii], ii);
    }
    return x;
}

BigReal row_sum_norm(const Mat& m, Precision p) {
    BigReal best(p);
    for (size_t i = 0; i < m.rows(); ++i) {
        BigReal s(p);
        for (size_t j = 0; j < m.cols(); ++j) s += abs(m.at(i, j));
        best = max(best, s);
    }
    return best;
}

BigReal col_sum_norm(const Mat& m, Precision p) {
    BigReal best(p);
    for (size_t j = 0; j < m.cols(); ++j) {
        BigReal s(p);
        for (size_t i = 0; i < m.rows(); ++i) s += abs(m.at(i, j));
        best = max(best, s);
    }
    return best;
}

}  // namespace

Vec gauss_solve(Mat a, Vec b) {
    const size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw Error("DimensionMismatch", "gauss_solve needs a square system");
    Lu f = lu_factor(std::move(a));
    return lu_solve(f, b);
}

Mat invert(const Mat& a) {
    const size_t n = a.rows();
    if (a.cols() != n) throw Error("DimensionMismatch", "invert needs a square matrix");
    Precision p = mat_precision(a);
    Lu f = lu_factor(a);
    Mat inv(n, n, p);
    for (size_t c = 0; c < n; ++c) {
        Vec e(n, BigReal(p));
        e[c] = BigReal(1, p);
        Vec x = lu_solve(f, e);
        for (size_t r = 0; r < n; ++r) inv.at(r, c) = x[r];
    }
    return inv;
}

BigReal min_singular_value_lower_bound(const Mat& a) {
    const size_t n = a.rows();
    if (a.cols() != n) throw Error("DimensionMismatch", "sigma_min bound needs a square matrix");
    Precision p = mat_precision(a);
    BigReal zero(p);
    if (n == 0) return zero;

    Mat b(n, n, p);
    try {
        b = invert(a);
    } catch (const Error&) {
        return zero;
    }

    // residuals I - BA (row-sum norm) and I - AB (column-sum norm)
    Mat rba(n, n, p), rab(n, n, p);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            BigReal sba(p), sab(p);
            for (size_t k = 0; k < n; ++k) {
                sba += b.at(i, k) * a.at(k, j);
                sab += a.at(i, k) * b.at(k, j);
            }
            BigReal id(i == j ? 1 : 0, p);
            rba.at(i, j) = id - sba;
            rab.at(i, j) = id - sab;
        }
    }
    BigReal e_inf = row_sum_norm(rba, p);
    BigReal e_one = col_sum_norm(rab, p);
    BigReal one(1, p);
    if (e_inf >= one || e_one >= one) return zero;

    // |A^-1|_inf <= |B|_inf / (1 - |I-BA|_inf), similarly for the 1-norm,
    // and sigma_min = 1/|A^-1|_2 >= 1/sqrt(|A^-1|_1 |A^-1|_inf)
    BigReal inv_inf = row_sum_norm(b, p) / (one - e_inf);
    BigReal inv_one = col_sum_norm(b, p) / (one - e_one);
    if (inv_inf.is_zero() || inv_one.is_zero()) return zero;

    BigReal bound = one / sqrt(inv_inf * inv_one);
    // haircut for accumulated roundoff in the norm computations
    return bound * (one - pow10(-(p.digits / 2), p));
}

}  // namespace acp
