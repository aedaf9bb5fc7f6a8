#include "bpcat/qscalar.hpp"

namespace bpcat {

CycScalar qpow(const Rat& x, int p) { return CycScalar::from_rootexp(qexp(x, p)); }

CycScalar qbrace(const Rat& x, int p) { return qpow(x, p) - qpow(-x, p); }

CycScalar qint(const Rat& x, int p) { return qbrace(x, p) / qbrace(Rat(1), p); }

CycScalar qbrace_fact(int n, int p) {
    CycScalar acc = CycScalar::one(2 * p);
    for (int k = 1; k <= n; ++k) acc = acc * qbrace(Rat(k), p);
    return acc;
}

int working_conductor(int p, long d) { return (int)(2L * p * d); }

}  // namespace bpcat
