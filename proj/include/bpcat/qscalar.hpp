#pragma once

#include "bpcat/cyclotomic.hpp"

namespace bpcat {

/// q = e^{pi i / p} and the quantum brackets built from it.
/// Conductors are picked per exponent (2 * p * den of the exponent) and the
/// CycScalar ops promote to the lcm as values combine.

/// q^x as a phase exponent: e^{pi i x / p}
inline RootExp qexp(const Rat& x, int p) { return RootExp(x / p); }

/// q^x as an exact cyclotomic
CycScalar qpow(const Rat& x, int p);

/// {x} = q^x - q^{-x}
CycScalar qbrace(const Rat& x, int p);

/// [x] = {x}/{1}
CycScalar qint(const Rat& x, int p);

/// {n}! = {n}{n-1}...{1}
CycScalar qbrace_fact(int n, int p);

/// e^{pi i r} at the minimal even conductor
inline CycScalar phase(const Rat& r) { return CycScalar::from_rootexp(RootExp(r)); }

/// Smallest even conductor containing q^x for all exponents with denominator
/// dividing d (namely 2 p d).
int working_conductor(int p, long d);

}  // namespace bpcat
