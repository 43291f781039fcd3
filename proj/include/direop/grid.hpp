#pragma once

#include <stdexcept>

namespace direop {

/// Uniform interior discretization of a finite interval. The nodes are
/// x0 + i*h for i in [0, count); the interval endpoints sit one spacing
/// outside on either side, so h*(count+1) spans the whole interval and
/// Dirichlet values live on the ghost endpoints.
struct Grid {
    double x0 = 0.0;
    double h = 0.0;
    int count = 0;

    double node(int i) const { return x0 + i * h; }
    double lo() const { return x0 - h; }
    double hi() const { return x0 + count * h; }
};

inline Grid make_grid(double lo, double hi, int count) {
    if (!(hi > lo)) throw std::invalid_argument("grid interval must have positive length");
    if (count < 16) throw std::invalid_argument("grid needs at least 16 nodes");
    const double h = (hi - lo) / (count + 1);
    return Grid{lo + h, h, count};
}

} // namespace direop
