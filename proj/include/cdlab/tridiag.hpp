#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace cdlab {

/// (m x m) tridiagonal matrix stored as three diagonals.
/// lower[i] is A[i+1,i], main[i] is A[i,i], upper[i] is A[i,i+1].
struct TridiagonalSystem {
    std::vector<double> lower; // length m-1
    std::vector<double> main;  // length m
    std::vector<double> upper; // length m-1

    std::size_t size() const { return main.size(); }
};

TridiagonalSystem make_tridiag(std::size_t m, double lo, double mid, double up);

std::vector<double> apply(const TridiagonalSystem& system, std::span<const double> v);

/// Thomas elimination without pivoting. Throws singular_system on a pivot
/// with magnitude below 1e-300.
std::vector<double> solve(const TridiagonalSystem& system, std::span<const double> rhs);

} // namespace cdlab
