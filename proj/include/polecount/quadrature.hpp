#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace polecount {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;   // estimated absolute error
    bool converged = false;
    int evaluations = 0;
};

// Adaptive Gauss-Kronrod (G7,K15) with worst-interval-first refinement.
// Stops when the accumulated error estimate meets abs_tol + rel_tol*|I|.
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b,
                              double rel_tol = 1e-10, double abs_tol = 0.0,
                              int max_intervals = 4000)
{
    // K15 abscissae (positive half) and weights; G7 nodes are every other one.
    static const double xk[8] = {
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144838258730,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.0};
    static const double wk[8] = {
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714};
    static const double wg[4] = {
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327};

    struct Panel {
        double a, b, val, err;
        bool operator<(const Panel& o) const { return err < o.err; }
    };

    auto gk15 = [&](double lo, double hi) -> Panel {
        const double c = 0.5 * (lo + hi);
        const double h = 0.5 * (hi - lo);
        double resk = wk[7] * f(c);
        double resg = wg[3] * f(c);
        for (int i = 0; i < 7; ++i) {
            const double x = h * xk[i];
            const double fsum = f(c - x) + f(c + x);
            resk += wk[i] * fsum;
            if (i % 2 == 1) resg += wg[i / 2] * fsum;
        }
        const double val = resk * h;
        const double err = std::abs((resk - resg) * h);
        return Panel{lo, hi, val, err};
    };

    std::priority_queue<Panel> heap;
    Panel p0 = gk15(a, b);
    double total = p0.val, toterr = p0.err;
    heap.push(p0);
    int evals = 15, n = 1;

    auto target = [&] { return abs_tol + rel_tol * std::abs(total); };

    while (toterr > target() && n < max_intervals) {
        Panel worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval no longer splittable in double precision
            heap.push(Panel{worst.a, worst.b, worst.val, 0.0});
            continue;
        }
        Panel l = gk15(worst.a, mid);
        Panel r = gk15(mid, worst.b);
        total += l.val + r.val - worst.val;
        toterr += l.err + r.err - worst.err;
        heap.push(l);
        heap.push(r);
        evals += 30;
        ++n;
    }

    QuadResult res;
    res.value = total;
    res.error = toterr;
    res.converged = toterr <= target();
    res.evaluations = evals;
    return res;
}

// Convenience wrapper that throws when the requested tolerance is not met.
template <class F>
double integrate_or_throw(F&& f, double a, double b,
                          double rel_tol = 1e-10, double abs_tol = 0.0,
                          int max_intervals = 4000)
{
    QuadResult r = integrate_adaptive(std::forward<F>(f), a, b, rel_tol, abs_tol, max_intervals);
    if (!r.converged)
        throw std::runtime_error("quadrature did not converge: achieved abs error " +
                                 std::to_string(r.error));
    return r.value;
}

} // namespace polecount
