#include "acp/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>

namespace acp {

namespace {

Int idot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Int exact_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a) throw Error("DomainError", "internal: inexact division in lattice reduction");
    return q;
}

Int rounded_div(const Int& a, const Int& b) {
    // nearest integer of a/b, ties toward +infinity; b > 0
    Int two_a = 2 * a;
    Int q = (two_a + b) / (2 * b);
    if (two_a + b < 0 && (two_a + b) % (2 * b) != 0) q -= 1;
    return q;
}

}  // namespace

void lll_reduce(std::vector<std::vector<Int>>& basis) {
    const size_t m = basis.size();
    if (m <= 1) return;
    // integral Gram-Schmidt data: d[0] = 1, d[k+1] = Gram determinant of the
    // first k+1 rows; lam[k][j] scaled coefficients
    std::vector<Int> d(m + 1);
    d[0] = 1;
    std::vector<std::vector<Int>> lam(m, std::vector<Int>(m));

    auto compute_row = [&](size_t k) {
        for (size_t j = 0; j <= k; ++j) {
            Int u = idot(basis[k], basis[j]);
            for (size_t i = 0; i < j; ++i) u = exact_div(d[i + 1] * u - lam[k][i] * lam[j][i], d[i]);
            if (j < k)
                lam[k][j] = u;
            else
                d[k + 1] = u;
        }
        if (d[k + 1] <= 0) throw Error("DomainError", "lattice rows are linearly dependent");
    };
    for (size_t k = 0; k < m; ++k) compute_row(k);

    auto red = [&](size_t k, size_t l) {
        if (2 * abs(lam[k][l]) <= d[l + 1]) return;
        Int q = rounded_div(lam[k][l], d[l + 1]);
        for (size_t i = 0; i < basis[k].size(); ++i) basis[k][i] -= q * basis[l][i];
        lam[k][l] -= q * d[l + 1];
        for (size_t i = 0; i < l; ++i) lam[k][i] -= q * lam[l][i];
    };

    auto swap_step = [&](size_t k) {
        std::swap(basis[k], basis[k - 1]);
        for (size_t j = 0; j + 1 < k; ++j) std::swap(lam[k][j], lam[k - 1][j]);
        Int lbar = lam[k][k - 1];
        Int b_new = exact_div(d[k - 1] * d[k + 1] + lbar * lbar, d[k]);
        for (size_t i = k + 1; i < m; ++i) {
            Int t = lam[i][k];
            lam[i][k] = exact_div(d[k + 1] * lam[i][k - 1] - lbar * t, d[k]);
            lam[i][k - 1] = exact_div(b_new * t + lbar * lam[i][k], d[k + 1]);
        }
        d[k] = b_new;
    };

    size_t k = 1;
    long guard = 0;
    const long guard_max = 2000000;
    while (k < m) {
        if (++guard > guard_max) throw Error("NoConvergence", "lattice reduction exceeded its step budget");
        red(k, k - 1);
        // Lovasz with delta = 99/100:
        //   swap when 100 d[k+1] d[k-1] < 99 d[k]^2 - 100 lam^2
        if (100 * d[k + 1] * d[k - 1] < 99 * d[k] * d[k] - 100 * lam[k][k - 1] * lam[k][k - 1]) {
            swap_step(k);
            k = std::max<size_t>(1, k - 1);
        } else {
            for (size_t l = k - 1; l-- > 0;) red(k, l);
            ++k;
        }
    }
}

namespace {

BigReal int_to_real(const Int& c, Precision p) {
    if (c >= std::numeric_limits<long>::min() && c <= std::numeric_limits<long>::max())
        return BigReal(static_cast<long>(c), p);
    return BigReal::from_string(c.str(), p);
}

BigReal eval_unipoly(const std::vector<Int>& poly, const BigReal& x) {
    Precision p = x.precision();
    BigReal acc(p);
    for (size_t i = poly.size(); i-- > 0;) acc = acc * x + int_to_real(poly[i], p);
    return acc;
}

std::vector<Int> derivative_unipoly(const std::vector<Int>& poly) {
    std::vector<Int> d;
    for (size_t i = 1; i < poly.size(); ++i) d.push_back(poly[i] * Int(static_cast<long>(i)));
    return d;
}

Int content_of(const std::vector<Int>& poly) {
    Int g = 0;
    for (auto& c : poly) g = boost::multiprecision::gcd(g, abs(c));
    return g;
}

int degree_of(const std::vector<Int>& poly) {
    for (size_t i = poly.size(); i-- > 0;)
        if (poly[i] != 0) return static_cast<int>(i);
    return -1;
}

double log10_int(const Int& v) {
    Int a = abs(v);
    if (a <= 1) return 0.0;
    std::string s = a.str();
    double lead = 0.0;
    for (size_t i = 0; i < std::min<size_t>(s.size(), 15); ++i)
        lead = lead * 10 + (s[i] - '0');
    return static_cast<double>(s.size()) - std::min<size_t>(s.size(), 15) +
           std::log10(lead > 0 ? lead : 1.0);
}

Int round_to_int(const BigReal& x) {
    mpfr_t r;
    mpfr_init2(r, mpfr_get_prec(x.raw()));
    mpfr_rint(r, x.raw(), MPFR_RNDN);
    mpz_t z;
    mpz_init(z);
    mpfr_get_z(z, r, MPFR_RNDN);
    char* s = mpz_get_str(nullptr, 10, z);
    Int out(s);
    free(s);
    mpz_clear(z);
    mpfr_clear(r);
    return out;
}

}  // namespace

FindMinPolyResult find_min_poly(const BigReal& value, int degree_bound, const Int& height_bound) {
    const int p = value.digits();
    if (p < 40) throw Error("InsufficientPrecision", "need at least 40 digits to separate relations");
    if (degree_bound < 1) throw Error("DomainError", "degree bound must be at least 1");
    Precision prec(p);

    const int d = degree_bound;
    // row lattice of (1, value, ..., value^d) scaled by 10^(p-10)
    BigReal scale = pow10(p - 10, prec);
    std::vector<std::vector<Int>> rows;
    BigReal power(1, prec);
    for (int i = 0; i <= d; ++i) {
        std::vector<Int> row(static_cast<size_t>(d) + 2, Int(0));
        row[static_cast<size_t>(i)] = 1;
        row[static_cast<size_t>(d) + 1] = round_to_int(power * scale);
        rows.push_back(std::move(row));
        power = power * value;
    }
    lll_reduce(rows);

    BigReal half_p = pow10(-(p / 2), prec);
    FindMinPolyResult best_rejected;
    bool have_rejected = false;
    FindMinPolyResult best;

    for (auto& row : rows) {
        std::vector<Int> poly(row.begin(), row.begin() + d + 1);
        int deg = degree_of(poly);
        if (deg < 1) continue;
        Int content = content_of(poly);
        if (content == 0) continue;
        for (auto& c : poly) c /= content;
        if (poly[static_cast<size_t>(deg)] < 0)
            for (auto& c : poly) c = -c;
        poly.resize(static_cast<size_t>(deg) + 1);
        Int height = 0;
        for (auto& c : poly) height = std::max(height, Int(abs(c)));

        AlgebraicCertificate cert;
        cert.value = value;
        cert.poly = poly;
        cert.degree_bound = degree_bound;
        cert.height_bound = height_bound;
        cert.root_residual = abs(eval_unipoly(poly, value));
        cert.verified = false;

        bool admissible = height <= height_bound;
        double logh = log10_int(height);
        // residual threshold and noise separation at the candidate's own size
        bool small_enough =
            cert.root_residual < pow10(static_cast<long>(-p + deg * logh + 8), prec);
        bool separated = p >= 2.0 * deg * std::max(logh, 1.0) + 40.0;
        bool has_root = false;
        if (admissible && small_enough && separated) {
            // Newton from the value toward a root of the candidate
            std::vector<Int> dpoly = derivative_unipoly(poly);
            BigReal x = value;
            bool ok = true;
            for (int it = 0; it < 100; ++it) {
                BigReal fx = eval_unipoly(poly, x);
                BigReal dfx = eval_unipoly(dpoly, x);
                if (abs(dfx) <= pow10(-(p - 4), prec)) { ok = false; break; }
                BigReal step = fx / dfx;
                x = x - step;
                if (abs(step) < pow10(-(p + 4), prec)) break;
            }
            has_root = ok && abs(eval_unipoly(poly, x)) < pow10(-(p - 10), prec) &&
                       abs(x - value) < half_p;
        }
        cert.verified = admissible && small_enough && separated && has_root;

        if (cert.verified) {
            bool better = !best.found;
            if (!better && best.found) {
                int bd = degree_of(best.certificate.poly);
                Int bh = 0;
                for (auto& c : best.certificate.poly) bh = std::max(bh, Int(abs(c)));
                better = deg < bd || (deg == bd && (height < bh ||
                                                    (height == bh && poly < best.certificate.poly)));
            }
            if (better) {
                best.found = true;
                best.certificate = cert;
            }
        } else if (!have_rejected || cert.root_residual < best_rejected.certificate.root_residual) {
            have_rejected = true;
            best_rejected.certificate = cert;
        }
    }

    if (best.found) {
        best.certificate.quantity.clear();
        return best;
    }
    if (have_rejected) return best_rejected;  // found == false
    FindMinPolyResult none;
    none.certificate.value = value;
    none.certificate.degree_bound = degree_bound;
    none.certificate.height_bound = height_bound;
    none.certificate.root_residual = BigReal(1, prec);
    return none;
}

CertifyTarget parse_target(const std::string& name) {
    if (name == "radii") return CertifyTarget::Radii;
    if (name == "centers") return CertifyTarget::Centers;
    if (name == "tangencies") return CertifyTarget::Tangencies;
    if (name == "tau") return CertifyTarget::Tau;
    if (name == "exp_radii") return CertifyTarget::ExpRadii;
    throw Error("DomainError", "unknown certify target: " + name);
}

namespace {

std::string vname(const char* base, int i, const char* comp = nullptr) {
    std::string s = std::string(base) + "[" + std::to_string(i) + "]";
    if (comp) s += std::string(".") + comp;
    return s;
}

}  // namespace

std::vector<std::pair<std::string, BigReal>> certify_quantities(const EuclideanPacking& p,
                                                                CertifyTarget target) {
    std::vector<std::pair<std::string, BigReal>> out;
    const int n = p.triangulation.vertex_count;
    switch (target) {
        case CertifyTarget::Radii:
            for (int i = 0; i < n; ++i) out.push_back({vname("r", i), p.radii[i]});
            break;
        case CertifyTarget::Centers:
            for (int i = 0; i < n; ++i) {
                out.push_back({vname("c", i, "x"), p.centers[i].re});
                out.push_back({vname("c", i, "y"), p.centers[i].im});
            }
            break;
        case CertifyTarget::Tangencies:
            for (auto& e : p.triangulation.edge_list()) {
                BigComplex tp = (p.radii[e.second] * p.centers[e.first] +
                                 p.radii[e.first] * p.centers[e.second]) /
                                (p.radii[e.first] + p.radii[e.second]);
                std::string base =
                    "t[" + std::to_string(e.first) + "-" + std::to_string(e.second) + "]";
                out.push_back({base + ".x", tp.re});
                out.push_back({base + ".y", tp.im});
            }
            break;
        default:
            throw Error("DomainError", "target not defined for a sphere packing");
    }
    return out;
}

std::vector<std::pair<std::string, BigReal>> certify_quantities(const TorusPacking& p,
                                                                CertifyTarget target) {
    std::vector<std::pair<std::string, BigReal>> out;
    const int n = p.triangulation.vertex_count;
    Precision prec(p.precision_digits);
    switch (target) {
        case CertifyTarget::Radii:
            for (int i = 0; i < n; ++i) out.push_back({vname("r", i), p.radii[i]});
            break;
        case CertifyTarget::Centers:
            for (int i = 0; i < n; ++i) {
                out.push_back({vname("c", i, "x"), p.centers[i].re});
                out.push_back({vname("c", i, "y"), p.centers[i].im});
            }
            break;
        case CertifyTarget::Tau:
            out.push_back({"tau.re", p.tau.re});
            out.push_back({"tau.im", p.tau.im});
            break;
        case CertifyTarget::Tangencies:
            for (auto& [i, j, s, t] : p.edge_offsets) {
                BigComplex cj = p.centers[j] + BigComplex(BigReal(s, prec), BigReal(prec)) +
                                BigComplex(BigReal(t, prec), BigReal(prec)) * p.tau;
                BigComplex tp = (p.radii[j] * p.centers[i] + p.radii[i] * cj) /
                                (p.radii[i] + p.radii[j]);
                std::string base = "t[" + std::to_string(i) + "-" + std::to_string(j) + "]";
                out.push_back({base + ".x", tp.re});
                out.push_back({base + ".y", tp.im});
            }
            break;
        default:
            throw Error("DomainError", "target not defined for a torus packing");
    }
    return out;
}

std::vector<std::pair<std::string, BigReal>> certify_quantities(const HyperbolicPacking& p,
                                                                CertifyTarget target) {
    std::vector<std::pair<std::string, BigReal>> out;
    const int n = p.triangulation.vertex_count;
    switch (target) {
        case CertifyTarget::ExpRadii:
            for (int i = 0; i < n; ++i) out.push_back({vname("R", i), p.exp_radii[i]});
            break;
        case CertifyTarget::Centers:
            for (int i = 0; i < n; ++i) {
                out.push_back({vname("c", i, "x"), p.centers[i].re});
                out.push_back({vname("c", i, "y"), p.centers[i].im});
            }
            break;
        default:
            throw Error("DomainError", "target not defined for a hyperbolic packing");
    }
    return out;
}

std::vector<AlgebraicCertificate> certify_values(
    const std::vector<std::pair<std::string, BigReal>>& quantities, int degree_bound,
    const Int& height_bound) {
    std::vector<AlgebraicCertificate> out;
    std::map<std::string, FindMinPolyResult> cache;  // key: exact decimal of the value
    for (auto& [name, value] : quantities) {
        std::string key = value.to_string();
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, find_min_poly(value, degree_bound, height_bound)).first;
        AlgebraicCertificate cert = it->second.certificate;
        cert.verified = it->second.found;
        cert.quantity = name;
        out.push_back(std::move(cert));
    }
    return out;
}

}  // namespace acp
