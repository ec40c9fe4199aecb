#include "bnet/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace bnet::stats {

namespace {

std::vector<double> average_ranks(std::span<double const> xs)
{
    std::vector<std::size_t> order(xs.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
    std::vector<double> ranks(xs.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i;
        while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]])
            ++j;
        double const r = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t k = i; k <= j; ++k)
            ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

}  // namespace

double mean(std::span<double const> xs)
{
    if (xs.empty())
        return 0.0;
    double sum = 0.0;
    for (double const x : xs)
        sum += x;
    return sum / static_cast<double>(xs.size());
}

double sample_variance(std::span<double const> xs)
{
    if (xs.size() < 2)
        return 0.0;
    double const m = mean(xs);
    double ss = 0.0;
    for (double const x : xs)
        ss += (x - m) * (x - m);
    return ss / static_cast<double>(xs.size() - 1);
}

double standard_error(std::span<double const> xs)
{
    if (xs.size() < 2)
        return 0.0;
    return std::sqrt(sample_variance(xs) / static_cast<double>(xs.size()));
}

double ci95_half_width(std::span<double const> xs) { return z95 * standard_error(xs); }

double spearman(std::span<double const> x, std::span<double const> y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("spearman: length mismatch");
    if (x.size() < 2)
        throw std::invalid_argument("spearman: need at least two points");
    auto const rx = average_ranks(x);
    auto const ry = average_ranks(y);
    double const mx = mean(rx);
    double const my = mean(ry);
    double sxy = 0.0, sxx = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < rx.size(); ++i) {
        sxy += (rx[i] - mx) * (ry[i] - my);
        sxx += (rx[i] - mx) * (rx[i] - mx);
        syy += (ry[i] - my) * (ry[i] - my);
    }
    if (sxx == 0.0 || syy == 0.0)
        throw std::invalid_argument("spearman: constant input");
    return sxy / std::sqrt(sxx * syy);
}

double relative_gain_se(double a, double se_a, double b, double se_b)
{
    if (!(b > 0.0))
        throw std::invalid_argument("relative_gain_se: baseline must be > 0");
    double const da = se_a / b;
    double const db = a * se_b / (b * b);
    return std::sqrt(da * da + db * db);
}

}  // namespace bnet::stats
