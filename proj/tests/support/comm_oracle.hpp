#pragma once

// Test-side oracle for commutative quadratic Poisson brackets, independent of
// the noncommutative machinery: multivariate commutative polynomials with a
// bracket extended from the generator table by the Leibniz rule.

#include <map>
#include <vector>

#include "ncpoisson/elliptic.hpp"

namespace ncp::testsupport {

// exponent vector -> coefficient
using CPoly = std::map<std::vector<int>, Complex>;

CPoly cmono(int n, std::initializer_list<int> gens);
CPoly cadd(const CPoly& a, const CPoly& b);
CPoly cscale(Complex c, const CPoly& a);
CPoly cmul(const CPoly& a, const CPoly& b);
CPoly cdiff(const CPoly& f, int i);
double cmax_abs(const CPoly& f);

/// {f, g} from the generator table via Leibniz: sum_ij df/dx_i dg/dx_j {x_i,x_j}.
CPoly cbracket(const CommBracket& table, const CPoly& f, const CPoly& g);

/// Max Jacobiator coefficient over all generator triples and all monomial
/// triples of total degree <= max_deg.
double comm_jacobi_residual(const CommBracket& table, int max_deg);

}  // namespace ncp::testsupport
