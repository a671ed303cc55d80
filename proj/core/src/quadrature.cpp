#include "nchydro/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "nchydro/errors.hpp"

namespace nchydro {

namespace {

// 15-point Kronrod rule with embedded 7-point Gauss rule (QUADPACK nodes).
constexpr std::array<double, 8> kXgk = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr std::array<double, 4> kWg = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
    double a = 0.0, b = 0.0;
    double value = 0.0;
    double error = 0.0;
    double resabs = 0.0;  // integral of |f|, for the rounding floor
};

Panel gk15(const std::function<double(double)>& f, double a, double b,
           long& evaluations) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::array<double, 7> f_lo{}, f_hi{};
    const double fc = f(center);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        f_lo[j] = f(center - dx);
        f_hi[j] = f(center + dx);
        const double fsum = f_lo[j] + f_hi[j];
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(f_lo[j]) + std::abs(f_hi[j]));
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    evaluations += 15;

    const double mean = 0.5 * resk;
    double resasc = kWgk[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(f_lo[j] - mean) + std::abs(f_hi[j] - mean));

    const double value = resk * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    double err = std::abs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    err = std::max(err, 50.0 * eps * resabs);

    return Panel{a, b, value, err, resabs};
}

QuadratureResult adapt(const std::function<double(double)>& f, double a,
                       double b, double tol, int max_intervals) {
    long evaluations = 0;
    auto worse = [](const Panel& p, const Panel& q) { return p.error < q.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(worse)> heap(worse);

    Panel first = gk15(f, a, b, evaluations);
    double total_err = first.error;
    double total_resabs = first.resabs;
    heap.push(first);

    // An absolute target below the rounding floor of the |f| mass is not
    // reachable in double precision; accept at that floor instead.
    const double eps = std::numeric_limits<double>::epsilon();
    auto target = [&] { return std::max(tol, 100.0 * eps * total_resabs); };

    while (total_err > target() &&
           static_cast<int>(heap.size()) < max_intervals) {
        Panel worst = heap.top();
        heap.pop();
        total_err -= worst.error;
        total_resabs -= worst.resabs;
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval at machine resolution, keep as is
            total_err += worst.error;
            total_resabs += worst.resabs;
            heap.push(worst);
            break;
        }
        Panel left = gk15(f, worst.a, mid, evaluations);
        Panel right = gk15(f, mid, worst.b, evaluations);
        total_err += left.error + right.error;
        total_resabs += left.resabs + right.resabs;
        heap.push(left);
        heap.push(right);
    }
    if (total_err > target() && static_cast<int>(heap.size()) >= max_intervals)
        throw ConvergenceError("integrate: max-subdivision-exceeded");

    // Deterministic accumulation in position order.
    std::vector<Panel> panels;
    panels.reserve(heap.size());
    while (!heap.empty()) {
        panels.push_back(heap.top());
        heap.pop();
    }
    std::sort(panels.begin(), panels.end(),
              [](const Panel& p, const Panel& q) { return p.a < q.a; });
    double value = 0.0, comp = 0.0, err = 0.0;
    for (const Panel& p : panels) {
        const double y = p.value - comp;
        const double t = value + y;
        comp = (t - value) - y;
        value = t;
        err += p.error;
    }
    return QuadratureResult{value, err, evaluations};
}

}  // namespace

QuadratureResult integrate_finite(const std::function<double(double)>& f,
                                  double a, double b, double tol,
                                  int max_intervals) {
    if (!(tol > 0.0)) throw std::invalid_argument("integrate_finite: tol must be > 0");
    if (!(a < b)) throw std::invalid_argument("integrate_finite: need a < b");
    return adapt(f, a, b, tol, max_intervals);
}

QuadratureResult integrate_semi_infinite(
    const std::function<double(double)>& f, double tol,
    const std::optional<SmallArgSeries>& small_t, int max_intervals) {
    if (!(tol > 0.0))
        throw std::invalid_argument("integrate_semi_infinite: tol must be > 0");

    auto eval = [&](double t) {
        if (small_t && t < small_t->threshold) return small_t->eval(t);
        return f(t);
    };

    for (double probe : {15.0, 25.0, 40.0}) {
        if (std::abs(eval(probe)) > 1e-10)
            throw ConvergenceError("integrate_semi_infinite: tail-not-decaying");
    }

    // t = u/(1-u); integrands with Gaussian tails vanish long before the
    // mapped endpoint, so cut off once t is astronomically large.
    auto mapped = [&](double u) {
        const double om = 1.0 - u;
        if (om < 1e-8) return 0.0;
        const double t = u / om;
        return eval(t) / (om * om);
    };
    QuadratureResult r = adapt(mapped, 0.0, 1.0, tol, max_intervals);
    return r;
}

}  // namespace nchydro
