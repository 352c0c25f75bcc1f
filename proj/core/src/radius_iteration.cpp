#include "acp/radius_iteration.hpp"

#include <algorithm>

namespace acp {

namespace {

BigReal clamped_arccos(const BigReal& x) {
    Precision p = x.precision();
    BigReal one(1, p);
    BigReal slack = pow10(-(p.digits / 2), p);
    if (x > one) {
        if (x - one > slack) throw Error("DomainError", "angle argument outside [-1, 1]");
        return BigReal(p);  // zero
    }
    if (x < -one) {
        if (-one - x > slack) throw Error("DomainError", "angle argument outside [-1, 1]");
        return pi(p);
    }
    return arccos(x);
}

void check_radii(const BigReal& a, const BigReal& b, const BigReal& c) {
    if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0)
        throw Error("DomainError", "radii must be positive");
}

}  // namespace

BigReal euclid_angle(const BigReal& r_v, const BigReal& r_u, const BigReal& r_w) {
    check_radii(r_v, r_u, r_w);
    BigReal x = r_v + r_u, y = r_v + r_w, z = r_u + r_w;
    return clamped_arccos((x * x + y * y - z * z) / (BigReal(2, r_v.precision()) * x * y));
}

BigReal hyp_angle(const BigReal& r_v, const BigReal& r_u, const BigReal& r_w) {
    check_radii(r_v, r_u, r_w);
    BigReal x = r_v + r_u, y = r_v + r_w, z = r_u + r_w;
    return clamped_arccos((cosh(x) * cosh(y) - cosh(z)) / (sinh(x) * sinh(y)));
}

BigReal angle_sum(const Triangulation& t, int vertex, const std::vector<BigReal>& radii,
                  Geometry geom, Precision p) {
    BigReal sum(p);
    for (auto& f : t.faces) {
        for (int k = 0; k < 3; ++k) {
            if (f[k] != vertex) continue;
            const BigReal& ru = radii[f[(k + 1) % 3]];
            const BigReal& rw = radii[f[(k + 2) % 3]];
            sum += geom == Geometry::Euclidean ? euclid_angle(radii[vertex], ru, rw)
                                               : hyp_angle(radii[vertex], ru, rw);
            break;
        }
    }
    return sum;
}

namespace {

// Radius whose angle sum is exactly 2*pi against k uniform petals equivalent
// to the current angle sum theta.  Euclidean: sin(alpha/2) = u/(v+u);
// hyperbolic: sin(alpha/2) = sinh(u)/sinh(v+u).
BigReal uniform_update(const BigReal& v, const BigReal& theta, int k, Geometry geom, Precision p) {
    BigReal one(1, p), two(2, p);
    BigReal beta = sin(theta / (two * BigReal(k, p)));
    BigReal delta = sin(pi(p) / BigReal(k, p));
    if (geom == Geometry::Euclidean) {
        BigReal u = beta * v / (one - beta);
        return u * (one - delta) / delta;
    }
    BigReal denom = one - beta * cosh(v);
    if (denom.sign() <= 0) return v * two;  // angle sum too large even for huge petals
    BigReal th = beta * sinh(v) / denom;
    if (th >= one) return v * two;
    BigReal u = artanh(th);
    return arsinh(sinh(u) / delta) - u;
}

}  // namespace

RadiusResult radius_iteration(const Triangulation& t, const std::map<int, BigReal>& boundary,
                              Geometry geom, const BigReal& tol, long max_iters) {
    int digits = tol.digits();
    for (auto& [v, r] : boundary) digits = std::max(digits, r.digits());
    Precision p(digits);
    const int n = t.vertex_count;
    BigReal two_pi = BigReal(2, p) * pi(p);

    std::vector<char> fixed(n, 0);
    std::vector<BigReal> radii(n, BigReal(p));
    for (int v = 0; v < n; ++v) radii[v] = BigReal(1, p) / BigReal(2, p);
    for (auto& [v, r] : boundary) {
        if (v < 0 || v >= n) throw Error("DomainError", "boundary vertex out of range");
        if (r.sign() <= 0) throw Error("DomainError", "boundary radius must be positive");
        fixed[v] = 1;
        radii[v] = r;
    }

    // per-vertex star: the (u, w) radius pairs of its incident faces
    std::vector<std::vector<std::pair<int, int>>> star(n);
    for (auto& f : t.faces)
        for (int k = 0; k < 3; ++k) star[f[k]].push_back({f[(k + 1) % 3], f[(k + 2) % 3]});

    std::vector<int> interior;
    for (int v = 0; v < n; ++v)
        if (!fixed[v]) interior.push_back(v);

    RadiusResult out;
    out.residual = BigReal(p);
    if (interior.empty()) {
        out.radii = radii;
        return out;
    }

    auto vertex_angle = [&](int v) {
        BigReal sum(p);
        for (auto& [u, w] : star[v])
            sum += geom == Geometry::Euclidean ? euclid_angle(radii[v], radii[u], radii[w])
                                               : hyp_angle(radii[v], radii[u], radii[w]);
        return sum;
    };
    auto residual_scan = [&]() {
        BigReal worst(p);
        for (int v : interior) worst = max(worst, abs(vertex_angle(v) - two_pi));
        return worst;
    };

    const bool gauge = boundary.empty() && geom == Geometry::Euclidean;  // scale freedom
    std::vector<BigReal> prev_log(n, BigReal(p));
    BigReal prev_change(p);
    BigReal res = residual_scan();
    long iter = 0;

    while (res > tol) {
        if (iter >= max_iters) throw Error("NoConvergence", "radius iteration exceeded its sweep budget");
        for (int v : interior)
            radii[v] = uniform_update(radii[v], vertex_angle(v), static_cast<int>(star[v].size()), geom, p);
        if (gauge) {
            BigReal scale = radii[interior[0]];
            for (int v : interior) radii[v] = radii[v] / scale;
        }
        ++iter;

        BigReal change(p);
        std::vector<BigReal> cur_log(n, BigReal(p));
        for (int v : interior) {
            cur_log[v] = ln(radii[v]);
            change = max(change, abs(cur_log[v] - prev_log[v]));
        }
        // super step: extrapolate the geometric tail of the contraction
        if (iter > 1 && prev_change.sign() > 0 && change.sign() > 0) {
            BigReal lambda = change / prev_change;
            if (lambda > BigReal(1, p) / BigReal(5, p) && lambda < BigReal(19, p) / BigReal(20, p)) {
                BigReal f = lambda / (BigReal(1, p) - lambda);
                std::vector<BigReal> saved = radii;
                for (int v : interior) radii[v] = radii[v] * exp((cur_log[v] - prev_log[v]) * f);
                BigReal res_acc = residual_scan();
                if (res_acc < res) {
                    res = res_acc;
                    for (int v : interior) cur_log[v] = ln(radii[v]);
                    change = BigReal(p);  // restart the contraction estimate
                } else {
                    radii = std::move(saved);
                    res = residual_scan();
                }
            } else {
                res = residual_scan();
            }
        } else {
            res = residual_scan();
        }
        prev_change = change;
        prev_log = std::move(cur_log);
    }

    out.radii = std::move(radii);
    out.iterations = iter;
    out.residual = res;
    return out;
}

}  // namespace acp
