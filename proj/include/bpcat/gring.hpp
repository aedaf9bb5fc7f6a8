#pragma once

#include <map>

#include "bpcat/report.hpp"
#include "bpcat/rational.hpp"

namespace bpcat {

struct parity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// (s, s') coordinates on the semisimplified Grothendieck ring,
/// (s, s') = (i + 1, -c - p*ell) for the class of F_{c/(2 lambda)} (x) S_i (x) C^H_{ell p}.
struct SS {
    long s, sp;
    bool operator==(const SS& o) const { return s == o.s && sp == o.sp; }
    bool operator<(const SS& o) const { return s != o.s ? s < o.s : sp < o.sp; }
    std::string str() const { return "(" + std::to_string(s) + "," + std::to_string(sp) + ")"; }
};

/// Lambda_p = {0 < s <= p-1, 0 <= s' <= p-1, s+s'+1 even}
std::vector<SS> lambda_p(int p);
/// Lambda_p together with its shift {(s, s'-p)} (even p)
std::vector<SS> lambda_even(int p);

/// Generating-set element of the ring, charge coordinates (gamma = c/(2 lambda)).
struct GBasisElem {
    long c;
    int i;
    int ell;
    std::string str() const {
        return "[" + std::to_string(c) + "," + std::to_string(i) + "," + std::to_string(ell) + "]";
    }
};

/// The minimal generating set of G^ss(C^0) (both parities of p).
std::vector<GBasisElem> gring_basis(int p);
/// The ell = 0 basis of the even-p B_p^0bar ring.
std::vector<GBasisElem> gring_basis_even0(int p);

struct GReduced {
    int sign;  // 0 when the class is negligible (V- or P-type)
    SS ss;
};

/// Reduce a class [c, i, ell] to the signed (s,s')-basis:
/// odd p uses the duality-closed basis B_{(s,s')} = (-1)^{s+1} [(-s', s-1, 0)]
/// over Lambda_p; i = p-1 classes are typicals and reduce to zero.
GReduced greduce(long c, int i, long ell, int p);
/// Even-p variant over Lambda_p u Lambda~_p with identification only under
/// even simple-current shifts (charges mod 2p).
GReduced greduce_even0(long c, int i, long ell, int p);

using GElem = std::map<SS, long>;

GElem gelem(const SS& a);
/// Product of two basis classes via the Clebsch-Gordan rule followed by
/// reduction; even0 selects the B_p^0bar ring.
GElem product_basis(const SS& a, const SS& b, int p, bool even0);
GElem gmultiply(const GElem& a, const GElem& b, int p, bool even0);

/// Structure constants N_{a,b}^c over the (s,s') index set.
std::map<std::pair<SS, SS>, GElem> structure_constants(int p, bool even0);

/// The paper-basis <-> Lambda_p bijection: every generating-set element
/// reduces to +1 times a distinct (s,s').
Report basis_bijection_check(int p, bool even0);

}  // namespace bpcat
