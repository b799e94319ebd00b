#include "kappa/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace kappa {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
// Even-indexed abscissae carry the embedded Gauss rule.
const double xgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

const double wgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

const double wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct RulePass {
    double val;     // Kronrod estimate
    double err;     // scaled error estimate
    bool finite;
};

RulePass gk15(const Integrand& f, double a, double b, long& evals) {
    const double centr = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);

    double fv1[7], fv2[7];
    const double fc = f(centr);
    double resg = wg[3] * fc;
    double resk = wgk[7] * fc;
    double resabs = std::fabs(resk);
    for (int j = 0; j < 7; ++j) {
        const double absc = hlgth * xgk[j];
        fv1[j] = f(centr - absc);
        fv2[j] = f(centr + absc);
        const double fsum = fv1[j] + fv2[j];
        if (j % 2 == 1)
            resg += wg[j / 2] * fsum;
        resk += wgk[j] * fsum;
        resabs += wgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
    }
    evals += 15;

    const double reskh = resk * 0.5;
    double resasc = wgk[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += wgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

    RulePass out;
    out.val = resk * hlgth;
    out.finite = std::isfinite(out.val);
    resabs *= std::fabs(hlgth);
    resasc *= std::fabs(hlgth);
    double err = std::fabs((resk - resg) * hlgth);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps))
        err = std::max(err, 50.0 * eps * resabs);
    out.err = out.finite ? err : std::numeric_limits<double>::infinity();
    return out;
}

struct Segment {
    double a, b, val, err;
    bool operator<(const Segment& o) const { return err < o.err; }
};

bool too_narrow(double a, double b) {
    const double eps = std::numeric_limits<double>::epsilon();
    const double scale = std::max({std::fabs(a), std::fabs(b), 1.0});
    return std::fabs(b - a) <= 32.0 * eps * scale;
}

QuadratureResult adaptive(const Integrand& f, double a, double b,
                          const QuadratureSpec& spec, long& evals) {
    QuadratureResult res;
    if (a == b) {
        res.converged = true;
        return res;
    }

    // Initial segmentation: one segment per stretch between listed
    // breakpoints. Splitting cannot be relied on to find them later.
    std::vector<double> edges{a};
    if (!spec.breakpoints.empty()) {
        std::vector<double> cuts = spec.breakpoints;
        std::sort(cuts.begin(), cuts.end());
        for (double c : cuts)
            if (c > edges.back() && c < b)
                edges.push_back(c);
    }
    edges.push_back(b);

    std::priority_queue<Segment> queue;
    double total = 0.0;
    double toterr = 0.0;
    double stuck_err = 0.0;   // segments too narrow to split further
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const RulePass first = gk15(f, edges[i], edges[i + 1], evals);
        total += first.val;
        toterr += first.err;
        queue.push({edges[i], edges[i + 1], first.val, first.err});
    }

    int splits = 0;
    auto bound = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::fabs(total)); };
    while (toterr + stuck_err > bound() && splits < spec.max_subdivisions && !queue.empty()) {
        if (toterr <= 0.01 * stuck_err)
            break;   // frozen panels dominate; more splitting cannot help
        const Segment worst = queue.top();
        queue.pop();
        if (too_narrow(worst.a, worst.b)) {
            // Unresolvable at double resolution: freeze its error estimate.
            stuck_err += std::isfinite(worst.err) ? worst.err : 0.0;
            toterr -= std::isfinite(worst.err) ? worst.err : 0.0;
            if (!std::isfinite(worst.err)) {
                total -= worst.val;  // drop the unusable panel value
                stuck_err = std::numeric_limits<double>::infinity();
            }
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        const RulePass left = gk15(f, worst.a, mid, evals);
        const RulePass right = gk15(f, mid, worst.b, evals);
        total += left.val + right.val - worst.val;
        toterr += left.err + right.err - worst.err;
        queue.push({worst.a, mid, left.val, left.err});
        queue.push({mid, worst.b, right.val, right.err});
        ++splits;
    }

    res.value = total;
    res.error = toterr + stuck_err;
    res.converged = std::isfinite(total) && res.error <= bound();
    res.evaluations = evals;
    return res;
}

// sinh argument cap keeping sinh/cosh inside double range.
constexpr double kThetaArgCap = 690.0;

} // namespace

QuadratureResult integrate(const Integrand& f, double a, double b,
                           const QuadratureSpec& spec) {
    long evals = 0;
    if (b < a) {
        QuadratureResult r = adaptive(f, b, a, spec, evals);
        r.value = -r.value;
        return r;
    }
    return adaptive(f, a, b, spec, evals);
}

namespace {

// Progressive block summation shared by both tail strategies: blocks are
// integrated in order until two consecutive ones stop contributing.
QuadratureResult sum_blocks(const Integrand& g, double start,
                            const std::function<double(double)>& next_edge,
                            double hard_cap, const QuadratureSpec& spec, long& evals) {
    QuadratureResult out;
    QuadratureSpec block_spec = spec;
    block_spec.abs_tol = spec.abs_tol / 8.0;
    block_spec.max_subdivisions = std::max(spec.max_subdivisions / 8, 50);

    double lo = start;
    double total = 0.0, toterr = 0.0;
    int quiet = 0;
    bool capped = false;
    for (int blk = 0; blk < 4 * spec.max_subdivisions; ++blk) {
        double hi = next_edge(lo);
        if (hi >= hard_cap) {
            hi = hard_cap;
            capped = true;
        }
        const QuadratureResult piece = adaptive(g, lo, hi, block_spec, evals);
        total += piece.value;
        toterr += piece.error;
        const double bound = std::max(spec.abs_tol, spec.rel_tol * std::fabs(total));
        quiet = (std::fabs(piece.value) + piece.error <= 0.25 * bound) ? quiet + 1 : 0;
        if (quiet >= 2) {
            out.value = total;
            out.error = toterr;
            out.converged = std::isfinite(total) && toterr <= bound;
            out.evaluations = evals;
            return out;
        }
        if (capped || evals > 60L * spec.max_subdivisions)
            break;
        lo = hi;
    }
    out.value = total;
    out.error = std::max(toterr, std::fabs(total) * 1e-6);
    out.converged = false;   // ran out of room before the tail went quiet
    out.evaluations = evals;
    return out;
}

QuadratureResult tail_exp_map(const Integrand& f, double a,
                              const QuadratureSpec& spec, long& evals) {
    // Direct panel up to c, then unit blocks in u with t = c*exp(u).
    const double c = std::max({a + 1.0, 2.0 * std::fabs(a), 1.0});
    QuadratureResult head = adaptive(f, a, c, spec, evals);
    const Integrand g = [&f, c](double u) {
        const double t = c * std::exp(u);
        return f(t) * t;
    };
    QuadratureSpec mapped = spec;
    mapped.breakpoints.clear();
    for (double t : spec.breakpoints)
        if (t > c)
            mapped.breakpoints.push_back(std::log(t / c));
    const double u_cap = 690.0 - std::log(c);
    QuadratureResult tail = sum_blocks(
        g, 0.0, [](double lo) { return lo + 1.0; }, u_cap, mapped, evals);
    tail.value += head.value;
    tail.error += head.error;
    tail.converged = tail.converged && head.converged;
    tail.evaluations = evals;
    return tail;
}

QuadratureResult tail_kernel_map(const Integrand& f, double a, double kp,
                                 const QuadratureSpec& spec, long& evals) {
    const double theta_a = std::asinh(kp * a) / kp;
    const Integrand g = [&f, kp](double theta) {
        const double arg = kp * theta;
        return f(std::sinh(arg) / kp) * std::cosh(arg);
    };
    // Doubling block widths: geometric coverage matches the exponential
    // decay that power-law tails acquire under the stretch.
    auto next_edge = [theta_a](double lo) {
        const double w = std::max(1.0, lo - theta_a);
        return lo + w;
    };
    QuadratureSpec mapped = spec;
    for (double& t : mapped.breakpoints)
        t = std::asinh(kp * t) / kp;
    return sum_blocks(g, theta_a, next_edge, kThetaArgCap / kp, mapped, evals);
}

} // namespace

QuadratureResult integrate_tail(const Integrand& f, double a, const KappaParam& k,
                                const QuadratureSpec& spec) {
    long evals = 0;
    if (spec.tail == TailStrategy::exp_map || k.value() < 1e-6)
        return tail_exp_map(f, a, spec, evals);
    return tail_kernel_map(f, a, k.value(), spec, evals);
}

QuadratureResult integrate_oscillatory(const Integrand& f, double a,
                                       const std::function<double(int)>& breakpoint,
                                       const QuadratureSpec& spec) {
    long evals = 0;
    QuadratureSpec block_spec = spec;
    block_spec.abs_tol = spec.abs_tol / 8.0;
    block_spec.max_subdivisions = std::max(spec.max_subdivisions / 8, 50);

    double raw = 0.0, toterr = 0.0;
    std::vector<double> diag;   // iterated-averaging diagonal of partial sums
    double accel_prev = 0.0, accel_delta_prev = std::numeric_limits<double>::infinity();
    double raw_prev_block = std::numeric_limits<double>::infinity();
    double lo = a;
    int alternations = 0, blocks = 0;
    double prev_sign = 0.0;

    const int max_blocks = std::min(spec.max_subdivisions, 400);
    QuadratureResult out;
    for (int i = 0; blocks < max_blocks; ++i, ++blocks) {
        const double hi = breakpoint(i);
        if (!(hi > lo))
            continue;
        const QuadratureResult piece = adaptive(f, lo, hi, block_spec, evals);
        lo = hi;
        raw += piece.value;
        toterr += piece.error;

        const double sgn = piece.value > 0 ? 1.0 : (piece.value < 0 ? -1.0 : 0.0);
        if (sgn != 0.0 && sgn == -prev_sign)
            ++alternations;
        prev_sign = sgn;

        double cur = raw;
        for (double& d : diag) {
            const double next = 0.5 * (d + cur);
            d = cur;
            cur = next;
        }
        diag.push_back(cur);
        const double accel = diag.back();
        const double accel_delta = std::fabs(accel - accel_prev);
        const bool alternating = 2 * alternations > blocks;

        const double est = alternating ? accel : raw;
        const double est_err = alternating ? (accel_delta + accel_delta_prev)
                                           : std::fabs(piece.value) + std::fabs(raw_prev_block);
        const double bound = std::max(spec.abs_tol, spec.rel_tol * std::fabs(est));
        if (blocks >= 4 && est_err <= bound && toterr <= 4 * bound) {
            out.value = est;
            out.error = est_err + toterr;
            out.converged = std::isfinite(est);
            out.evaluations = evals;
            return out;
        }
        accel_prev = accel;
        accel_delta_prev = accel_delta;
        raw_prev_block = std::fabs(piece.value);
        if (evals > 60L * spec.max_subdivisions)
            break;
    }
    const bool alternating = 2 * alternations > blocks;
    out.value = alternating && !diag.empty() ? diag.back() : raw;
    out.error = std::max(toterr, accel_delta_prev);
    out.converged = false;
    out.evaluations = evals;
    return out;
}

} // namespace kappa
