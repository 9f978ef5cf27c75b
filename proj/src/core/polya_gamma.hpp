#pragma once

#include "rng.hpp"

namespace zisv {

// Exact draw from PG(1, c) by Devroye-style alternating-series rejection on
// the [0, t] / (t, inf) decomposition of the Jacobi J*(1, c/2) density.
// Stable for any finite c (tested up to |c| ~ 50); depends on c only
// through c^2, so the distribution is symmetric in c.
double draw_pg1(double c, Rng& rng);

// E[PG(1, c)] = tanh(c/2) / (2c), with limit 1/4 at c = 0.
double pg1_mean(double c);

}  // namespace zisv
