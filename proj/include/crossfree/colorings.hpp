#pragma once

#include "crossfree/components.hpp"
#include "crossfree/triple_system.hpp"

namespace crossfree {

/// Bose construction: STS(n) for n = 3 (mod 6), over Z_{2k+1} x {0,1,2}
/// with the idempotent quasigroup x*y = (x+y)/2. Point (x,i) is numbered
/// i*(2k+1)+x.
TripleSystem bose_sts(int n);

/// Skolem-type construction: STS(n) for n = 1 (mod 6), over a
/// half-idempotent commutative quasigroup of order 2k plus one extra point
/// (numbered last).
TripleSystem skolem_sts(int n);

/// Dispatch on the residue of n mod 6; throws for inadmissible n.
TripleSystem sts_of_order(int n);

/// Finite field arithmetic tables for the orders the toolkit needs.
/// Prime orders use modular arithmetic; prime powers use polynomial
/// arithmetic over a built-in table of irreducible polynomials
/// (orders 4, 8, 9, 25, 27, 49).
class FieldTable {
public:
    static FieldTable make(int q);
    static bool supported(int q);

    int q() const { return q_; }
    int add(int a, int b) const { return add_[a * q_ + b]; }
    int mul(int a, int b) const { return mul_[a * q_ + b]; }

private:
    FieldTable(int q, std::vector<int> add, std::vector<int> mul)
        : q_(q), add_(std::move(add)), mul_(std::move(mul)) {}
    int q_;
    std::vector<int> add_, mul_;
};

/// The affine plane AG(2,q): q^2 points (x,y) numbered x*q+y, q^2+q lines
/// of q points grouped into q+1 parallel classes (slope classes first,
/// the vertical class last).
struct AffinePlane {
    int q = 0;
    std::vector<std::vector<Point>> lines;
    /// parallel_classes[c] lists line indices; each class partitions the points.
    std::vector<std::vector<int>> parallel_classes;
};

AffinePlane affine_plane(int q);

/// A system together with a block coloring whose component profile is the
/// object of interest.
struct ColoredSTS {
    TripleSystem ts;
    BlockColoring coloring;
};

/// STS(q^2) built by substituting a copy of STS(q) into every line of
/// AG(2,q), blocks colored by the parallel class of their line. Every
/// monochromatic component has exactly q points, so the coloring meets the
/// ceil(n/(r-1)) component bound with equality at r = q+1.
ColoredSTS plane_substitution_coloring(int q);

/// Classical direct product STS(n1*n2): point (a,x) is numbered a*n2+x;
/// blocks are the lifted blocks of each factor plus six transversal blocks
/// per block pair.
TripleSystem direct_product(const TripleSystem& ts1, const TripleSystem& ts2);

/// Iterates product-with-T (T = the single block on three points) t times
/// on top of plane_substitution_coloring(q), recoloring so each color class
/// keeps exactly q nontrivial components (of size 3^t * q).
ColoredSTS iterated_product_coloring(int q, int t);

}  // namespace crossfree
