#pragma once

// Constructors for the solid-torus family T(p,q;n) and related test diagrams.

#include "sfh/diagram.hpp"

#include <string>

namespace sfh {

struct TorusParams {
    long p = 1;
    long q = 0;
    long n = 2;

    long k() const { return (n - 2) / 2; }
};

// Throws BadParams unless p >= 1, gcd(p,q) = 1, n even and >= 2.
void check_params(const TorusParams& t);

// T(p,q;2): a twice-punctured torus.  Points y0..y{p-1} in order along alpha;
// beta visits y_{s*q mod p}.  Punctures z and w sit on the two sides of A.{p-1}.
Diagram build_base(long p, long q);

// T(1,0;4): four-holed sphere with one alpha and one beta meeting in u, v.
// Identifiers get `suffix` appended.
Diagram build_elementary_piece(const std::string& suffix = "");

// Glues boundary circle `c` of d1 to circle `d` of d2, merging their host
// regions.  Identifiers of d2 that clash with d1 are renamed.
Diagram glue(const Diagram& d1, const std::string& c, const Diagram& d2, const std::string& d);

// base(p,q) followed by k = (n-2)/2 elementary pieces, chained z ~ d1 and d2 ~ d1.
Diagram build_tpqn(long p, long q, long n);

// Adds a handle inside region `region` carrying a new alpha and beta meeting once.
Diagram stabilize(const Diagram& d, std::size_t region);

// Annulus with no curves: the product sutured manifold.
Diagram build_product();

// Genus-one surface with three boundary circles: the elementary piece with one
// puncture filled by a handle.  Two generators in one class.
Diagram build_genus_one_piece();

} // namespace sfh
