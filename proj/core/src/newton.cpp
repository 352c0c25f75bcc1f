#include "acp/newton.hpp"

namespace acp {

NewtonResult newton_refine(const PolySystem& system, const Vec& start, int target_digits,
                           int max_steps) {
    if (start.size() != system.var_count())
        throw Error("DimensionMismatch", "start point dimension does not match system variables");
    if (system.square_slice.size() != system.var_count())
        throw Error("DimensionMismatch", "system has no designated square slice");

    int digits = 2;
    for (auto& x : start) digits = std::max(digits, x.digits());
    Precision p(digits);

    Vec x = start;
    BigReal res = inf_norm(system.slice_values(x, p));
    if (res > pow10(-6, p))
        throw Error("NoConvergence", "newton_refine start residual exceeds 1e-6");

    BigReal target = pow10(-target_digits, p);
    NewtonResult out;
    out.residual_history.push_back(res);

    while (res > target) {
        if (out.steps >= max_steps)
            throw Error("NoConvergence", "newton_refine exceeded its step budget");
        Mat j = system.slice_jacobian(x, p);
        Vec f = system.slice_values(x, p);
        Vec step = gauss_solve(std::move(j), f);  // throws SingularJacobian
        Vec xn = x;
        for (size_t i = 0; i < xn.size(); ++i) xn[i] = xn[i] - step[i];
        BigReal rn = inf_norm(system.slice_values(xn, p));
        if (rn > res)
            throw Error("NoConvergence", rn >= pow10(-(digits - 6), p)
                                              ? "newton_refine step increased the residual"
                                              : "newton_refine hit the roundoff floor above the target");
        x = std::move(xn);
        res = rn;
        out.steps += 1;
        out.residual_history.push_back(res);
    }

    out.values = std::move(x);
    out.residual = system.max_equality_residual(out.values, p);
    return out;
}

}  // namespace acp
