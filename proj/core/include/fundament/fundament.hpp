#pragma once

#include <optional>
#include <vector>

#include "fundament/cohomology.hpp"

namespace fundament {

// Intersection of the maximal H-normal subgroups strictly inside Ker π;
// trivial when Ker π is.
Subgroup fundament_kernel(const Cover& pi);
bool is_fundamental(const Cover& pi);

struct Fundament {
  Cover fundament;  // π̄: H/M(π) ↠ G
  Cover rho;        // ρ: H ↠ H/M(π), with π̄ ∘ ρ = π
};
Fundament fundament(const Cover& pi);

struct FundamentSeries {
  Cover cover;
  std::vector<Subgroup> kernels;  // M_0 = Ker π ⊋ M_1 ⊋ … ⊋ M_t = 1
  std::vector<Cover> quotients;   // ρ_k: H ↠ G_k = H/M_k (ρ_0 = π)
  std::vector<Cover> stages;      // π_k: G_k ↠ G_{k-1}, k = 1..t
};
FundamentSeries fundament_series(const Cover& pi);

// The normal subgroups N ≤ Ker π with H/N ↠ G indecomposable, sorted into
// classes.  Shared by the invariants and the decomposition.
struct NaCharacteristic {
  Cover representative;           // H/N ↠ G for the first member
  std::vector<Subgroup> members;
};
struct AbCharacteristic {
  EndoFieldPtr module;            // A with F = End_G(A)
  CohomSpacePtr space;            // H²(G, A)
  std::vector<Subgroup> members;
  Subgroup n_a;                   // N_A
  Cover quotient;                 // H ↠ H_A
  Cover cover;                    // π_A: H_A ↠ G
  DualPairS s;                    // (B_A*, S_A)
};
struct Characteristic {
  Cover cover;
  std::vector<NaCharacteristic> na;
  std::vector<AbCharacteristic> ab;
};
// Throws NotFundamental.
Characteristic characteristic(const Cover& pi);

struct NaInvariant {
  Cover representative;
  std::size_t mult = 0;
};
struct AbInvariant {
  EndoFieldPtr module;
  CohomSpacePtr space;
  Matrix supp;  // reduced echelon rows spanning supp_A in H²(G, A)
  std::size_t mult = 0;
};
struct CoverInvariants {
  GroupPtr base;
  std::vector<NaInvariant> na;
  std::vector<AbInvariant> ab;
};
CoverInvariants invariants(const Cover& pi);
CoverInvariants invariants(const Characteristic& c);

// τ' ⪯ τ.  Throws BaseMismatch, NotFundamental.
bool dominates(const Cover& dominated, const Cover& dominating);
bool dominates(const CoverInvariants& dominated, const CoverInvariants& dominating);
bool isomorphic_fundamental(const Cover& a, const Cover& b);
bool isomorphic_fundamental(const CoverInvariants& a, const CoverInvariants& b);

// Decides whether some θ: H ↠ H' makes (τ, θ, τ', π) semi-cartesian, for
// π: G ↠ G', τ over G, τ' over G', both fundamental.
bool exists_semicartesian_lift(const Cover& pi, const Cover& tau, const Cover& tau_prime);
// Search oracle for the same question: θ with τ' ∘ θ = π ∘ τ and
// θ(Ker τ) = Ker τ'.
std::optional<GroupHom> find_semicartesian_lift(const Cover& pi, const Cover& tau, const Cover& tau_prime);

// Whether π̄ is the fundament of π̄ ∘ ρ by ρ, by comparing Ker ρ with the
// fundament kernel.  Throws NotFundamental, Mismatch.
bool is_fundament_of(const Cover& rho, const Cover& pi_bar);
// Same question through the absence of a semi-cartesian square
// (ρ, γ, η_0, π̄) with η_0 indecomposable.
bool is_fundament_of_by_squares(const Cover& rho, const Cover& pi_bar);

// chain[k-1] = π_k: G_k ↠ G_{k-1}.  Decided by the absence of small
// semi-cartesian squares.  Throws NotFundamentalStage, Mismatch.
bool is_fundament_series(const std::vector<Cover>& chain);
// Same question by comparing the kernels of H = G_t ↠ G_k with the
// fundament series of the composite (stages past its end must be
// isomorphisms).
bool is_fundament_series_by_kernels(const std::vector<Cover>& chain);

}  // namespace fundament
