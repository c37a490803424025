#pragma once

#include <map>
#include <set>
#include <vector>

#include "bcgrass/partition.hpp"
#include "bcgrass/rational.hpp"

namespace bcgrass {

/// Symmetric-function bases: elementary, complete homogeneous, power sum, Schur.
enum class Basis : char { e = 'e', h = 'h', p = 'p', s = 's' };

char basis_letter(Basis b);
std::optional<Basis> basis_from_letter(char c);

/// A formal sum of basis elements indexed by partitions with exact rational
/// coefficients. Zero coefficients are never stored; the zero element has an
/// empty term map. Values are immutable in spirit: every operation returns a
/// fresh SymF, so concurrent use needs no coordination.
class SymF {
public:
    using Terms = std::map<Partition, Rat>;

    explicit SymF(Basis b) : basis_(b) {}

    static SymF zero(Basis b) { return SymF(b); }
    static SymF one(Basis b);
    static SymF generator(Basis b, const Partition& la, const Rat& c = Rat(1));

    Basis basis() const { return basis_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Partition& la) const;

    void add_term(const Partition& la, const Rat& c);

    SymF& operator+=(const SymF& o);
    SymF& operator-=(const SymF& o);
    SymF scaled(const Rat& c) const;

    /// The set of weights of indexing partitions.
    std::set<int> degrees() const;
    bool is_homogeneous() const { return degrees().size() <= 1; }
    /// Degree of a nonzero homogeneous element; throws otherwise.
    int homogeneous_degree() const;

    bool operator==(const SymF& o) const { return basis_ == o.basis_ && terms_ == o.terms_; }
    bool operator!=(const SymF& o) const { return !(*this == o); }

    /// Sum of absolute values of all coefficients; 0 iff the element is 0.
    Rat coefficient_mass() const;

private:
    Basis basis_;
    Terms terms_;
};

SymF operator+(SymF a, const SymF& b);
SymF operator-(SymF a, const SymF& b);

/// Littlewood-Richardson coefficient c^nu_{la,mu}, counted by lattice-word
/// skew tableaux.
long long lr_coefficient(const Partition& nu, const Partition& la, const Partition& mu);

/// s_la * s_mu expanded in the Schur basis. Memoized; coefficients are the
/// nonnegative integers c^nu_{la,mu}.
SymF schur_product(const Partition& la, const Partition& mu);

/// Product of two symmetric functions. Multiplicative bases (e, h, p) multiply
/// by merging partitions; anything involving the Schur basis, or mixed bases,
/// routes through Schur products.
SymF symf_mul(const SymF& f, const SymF& g);

/// Irreducible symmetric-group character chi_la evaluated on cycle type mu,
/// by Murnaghan-Nakayama border-strip recursion. Throws if weights differ.
long long mn_character(const Partition& la, const Partition& mu);

/// Centralizer order z_mu = prod_i i^{m_i} m_i!.
mpz_class z_order(const Partition& mu);

/// Basis conversion. Routes: p<->e and p<->h by Newton's recurrence, s->p by
/// the Frobenius expansion, p->s by its character inverse, s->h and s->e by
/// Jacobi-Trudi determinants, h->s and e->s by iterated Pieri products, and
/// e<->h through the power-sum basis. All round trips are exact identities.
SymF convert_basis(const SymF& f, Basis target);

/// Jacobi-Trudi: s_la as a polynomial in the h_k (resp. e_k for the dual form).
SymF jacobi_trudi_h(const Partition& la);
SymF jacobi_trudi_e(const Partition& la);

/// Determinant of (h_{indices[i][j]}) expanded in the h basis. Entries with
/// negative index are 0 and index 0 is h_0 = 1.
SymF det_h(const std::vector<std::vector<int>>& indices);

/// Normal form on the r x s box: expand f in the Schur basis as a symmetric
/// function in the s Chern roots of the quotient bundle, drop s_nu with
/// length(nu) > s (identically zero in s variables) and with nu_1 > r (in the
/// ideal cutting out the classical Chow ring of G(r, r+s)).
SymF box_reduce(const SymF& f, int r, int s);

/// All partitions in the r x s box (parts <= r, length <= s), weight ascending.
std::vector<Partition> box_partitions(int r, int s);

}  // namespace bcgrass
