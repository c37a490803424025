#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcgrass/harmonic.hpp"
#include "bcgrass/partition.hpp"
#include "bcgrass/rational.hpp"
#include "bcgrass/symfunc.hpp"

namespace bcgrass {

/// Basis key of a Bott-Chern form term: coeff * w^omega * p_j(Q), where w is
/// the first Chern form of the twisting line bundle and p_j(Q) the j-th power
/// sum form of the quotient. p_0(Q) denotes rk Q = s, kept as a basis element
/// so that term maps compare canonically within a fixed grading.
struct BCKey {
    int omega = 0;
    int p = 0;
    friend bool operator==(const BCKey&, const BCKey&) = default;
    friend bool operator<(const BCKey& a, const BCKey& b) {
        return a.omega != b.omega ? a.omega < b.omega : a.p < b.p;
    }
};

/// A Bott-Chern form for a short exact sequence of hermitian bundles with
/// induced metrics, rk E = n, rk S = r. Produced only by the operations below;
/// a form coming from a degree-k class has omega + p == k - 1 on every term,
/// and flat-case outputs have omega == 0 throughout.
class BCForm {
public:
    BCForm(int n, int r);

    int n() const { return n_; }
    int r() const { return r_; }
    int s() const { return n_ - r_; }

    const std::map<BCKey, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(int omega, int p) const;

    void add_term(int omega, int p, const Rat& c);

    BCForm& operator+=(const BCForm& o);
    BCForm scaled(const Rat& c) const;
    /// Multiplication by w^t: shifts the omega power of every term.
    BCForm omega_shifted(int t) const;
    /// Evaluation at w = 0: drops every term with positive omega power.
    BCForm at_omega_zero() const;

    bool operator==(const BCForm& o) const {
        return n_ == o.n_ && r_ == o.r_ && terms_ == o.terms_;
    }
    bool operator!=(const BCForm& o) const { return !(*this == o); }

    /// Common value of omega + p over all terms; nullopt for 0 or mixed forms.
    std::optional<int> grading() const;

    /// Sum of absolute values of all coefficients; 0 iff the form is 0.
    Rat coefficient_mass() const;

    /// "(9/2) * p2(Q)" style rendering; "0" for the zero form.
    std::string str() const;

private:
    int n_, r_;
    std::map<BCKey, Rat> terms_;
};

BCForm operator+(BCForm a, const BCForm& b);
BCForm operator-(const BCForm& a, const BCForm& b);

/// An invariant polynomial identified with a symmetric function, together with
/// the ranks (n = rk E, r = rk S) of the sequence it will be applied to.
/// Construction normalizes to n-variable semantics: e_k terms with any part
/// > n and Schur terms of length > n are identically zero and are dropped.
class ClassSpec {
public:
    ClassSpec(SymF f, int n, int r);

    const SymF& poly() const { return f_; }
    int n() const { return n_; }
    int r() const { return r_; }
    int s() const { return n_ - r_; }

    /// Degree when homogeneous; throws std::invalid_argument otherwise.
    int degree() const { return f_.homogeneous_degree(); }

private:
    SymF f_;
    int n_, r_;
};

// --- closed forms, flat case (curvature of E vanishes) ---

/// Bott-Chern form of the power sum p_la: k H_{k-1} p_{k-1}(Q) for a single
/// row la = (k), zero for every partition of length >= 2.
BCForm bc_flat_power(const Partition& la, int n, int r);

/// Bott-Chern form of the Chern class c_k: (-1)^{k-1} H_{k-1} p_{k-1}(Q);
/// zero for k > n.
BCForm bc_flat_chern(int k, int n, int r);

/// Bott-Chern form of the Schur class s_la: zero unless la is a hook
/// (i,1,...,1) of weight k, in which case (-1)^{k-i} H_{k-1} p_{k-1}(Q).
BCForm bc_flat_schur(const Partition& la, int n, int r);

/// Any homogeneous class: only the single-row coefficient of its power-sum
/// expansion survives.
BCForm bc_flat_general(const ClassSpec& phi);

// --- closed forms, projectively flat case (curvature of E is w * Id) ---

BCForm bc_projflat_power(int k, int n, int r);
BCForm bc_projflat_chern(int k, int n, int r);
BCForm bc_projflat_multi(const Partition& la, int n, int r);
BCForm bc_projflat_general(const ClassSpec& phi);

/// Twist by a hermitian line bundle with first Chern form w:
/// sum_{i=1}^{k} C(n-i, k-i) tilde_c[i] w^{k-i}, tilde_c passed 1-based as
/// tilde_c[0] = c~_1, ..., tilde_c[k-1] = c~_k.
BCForm bc_twist(const std::vector<BCForm>& tilde_c, int n);

enum class Mode { flat, projflat };

/// The inverse-series identity behind the flat Chern formula: with c_i(S)
/// the degree-i coefficient of the inverse of sum_j c_j(Q) t^j (so that
/// c_i(S) = (-1)^i h_i), checks (-1)^k p_k(Q) = sum_{i=0}^k i c_i(S) c_{k-i}(Q)
/// exactly as symmetric functions. Reports coefficient mass of the
/// difference against 0.
IdentityReport verify_chern_inverse_power(int k);

/// Independent oracle: evaluates the deformation integral for phi directly on
/// a commuting-eigenvalue model of the sequence, using exact integration of
/// u^m (1-u)^l over [0,1], and only then rewrites sub-bundle power sums via
/// p_m(S) = n w^m - p_m(Q). Shares no code path with the closed forms above.
/// Throws std::invalid_argument if phi is not homogeneous.
BCForm deformation_oracle(const ClassSpec& phi, Mode mode);

}  // namespace bcgrass
