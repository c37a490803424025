#pragma once

#include <map>
#include <string>

#include "bcgrass/harmonic.hpp"
#include "bcgrass/partition.hpp"
#include "bcgrass/rational.hpp"
#include "bcgrass/symfunc.hpp"

namespace bcgrass {

/// Element of the Arakelov Chow ring of the grassmannian G(r, r+s) with
/// rational coefficients: a geometric part sum q_la sigma^_la over partitions
/// in the r x s box (sigma^_la = s_la of the hat Chern classes of the
/// quotient), plus an archimedean part sum r_mu a(s_mu(y)) over the same box.
/// A homogeneous element of codimension d carries geometric terms of weight d
/// and archimedean terms of weight d - 1.
class ArakelovElem {
public:
    ArakelovElem(int r, int s);

    static ArakelovElem one(int r, int s);
    /// sigma^_la; la must lie in the box.
    static ArakelovElem sigma(const Partition& la, int r, int s);
    /// a(w) for a symmetric function w in the quotient Chern roots;
    /// w is box-reduced on construction.
    static ArakelovElem arch_class(const SymF& w, int r, int s);

    int r() const { return r_; }
    int s() const { return s_; }
    const std::map<Partition, Rat>& geom() const { return geom_; }
    const std::map<Partition, Rat>& arch() const { return arch_; }
    bool is_zero() const { return geom_.empty() && arch_.empty(); }

    void add_geom(const Partition& la, const Rat& c);
    void add_arch(const Partition& la, const Rat& c);

    ArakelovElem& operator+=(const ArakelovElem& o);
    ArakelovElem scaled(const Rat& c) const;

    bool operator==(const ArakelovElem& o) const {
        return r_ == o.r_ && s_ == o.s_ && geom_ == o.geom_ && arch_ == o.arch_;
    }
    bool operator!=(const ArakelovElem& o) const { return !(*this == o); }

    /// Sum of absolute values of all coefficients; 0 iff the element is 0.
    Rat coefficient_mass() const;

    std::string str() const;

private:
    int r_, s_;
    std::map<Partition, Rat> geom_, arch_;
};

ArakelovElem operator+(ArakelovElem a, const ArakelovElem& b);
ArakelovElem operator-(const ArakelovElem& a, const ArakelovElem& b);

/// A polynomial in the hat Chern classes of the quotient bundle: an e-basis
/// symmetric function with e_j read as c^_j(Q), together with the box ranks.
/// e_j terms with j > s vanish identically and are dropped on construction.
struct HatPoly {
    HatPoly(const SymF& e_poly, int r, int s);

    SymF f;  // e basis
    int r, s;
};

/// g_k = sum_{i=1}^{k-1} H_i p_i(y) h_{k-1-i}(y), box-reduced: the unique box
/// class with h^_k = a(g_k) in the ring, defined for k > r (below the ideal
/// the h^_k are honest geometric classes). Throws for k <= r.
SymF relation_g(int k, int r, int s);

/// Straightening: for nu out of the box (nu_1 > r, length <= s) the class
/// s_nu of the hat Chern classes is purely archimedean, s_nu = a(eta_nu).
/// Computed by the first-row Jacobi-Trudi expansion, every first-row entry
/// having index > r. Memoized. Throws if nu lies in the box or length > s.
SymF eta_correction(const Partition& nu, int r, int s);

/// Independent route for the same class: expand the Jacobi-Trudi determinant
/// along its first column and recurse. Used to probe that the straightening
/// is well defined; not used by any production path.
SymF eta_correction_dual(const Partition& nu, int r, int s);

/// Normal form of a hat-class polynomial: Schur-expand, keep in-box terms as
/// geometric coordinates, convert out-of-box terms to archimedean corrections.
ArakelovElem normal_form(const HatPoly& P);

/// The star product: geometric x geometric multiplies and re-normalizes,
/// geometric x archimedean acts through box-truncated Schur products,
/// archimedean x archimedean is zero. Throws on rank mismatch.
ArakelovElem star(const ArakelovElem& x, const ArakelovElem& y);

enum class ProjPart { zeta, arch };

/// zeta forgets the archimedean part (the classical Schubert class);
/// arch extracts the archimedean coordinates.
SymF project(const ArakelovElem& x, ProjPart which);

/// Hat Chern classes of the sub-bundle, solved degree by degree from
/// c^_t(S) c^_t(Q) = 1 - p_a(t):
///   c^_k(S) = (-1)^k normal_form(h^_k) + (-1)^{k-1} a(g-sum through k-1).
/// Defined for 1 <= k <= r (the vanishing above r is a consequence, tested
/// separately, not an input).
ArakelovElem hat_chern_S(int k, int r, int s);

/// Verifies, inside the ring, that p^_k(S) + p^_k(Q) = k H_{k-1} a(p_{k-1}(y))
/// (the flat power-sum relation; the trivial bundle has vanishing positive
/// hat classes) and that c^_t(S) * c^_t(Q) * (1 + p_a(t)) = 1 through degree
/// k. The report carries the total coefficient mass of all discrepancies as
/// lhs against rhs = 0, so holds <=> lhs == rhs remains exact.
IdentityReport verify_power_relation(int k, int r, int s);

}  // namespace bcgrass
