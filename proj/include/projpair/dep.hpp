#pragma once

#include "projpair/construct.hpp"
#include "projpair/formation.hpp"

namespace projpair {

/// The eight-group commuting diagram attached to a finite pair (Gm <= L):
/// a higher embedding problem (nu: L -> B, beta: H -> B) and the lower one
/// it induces on G <= H, A <= B via restriction.
struct DoubleEmbeddingProblem {
    FinitePair pair;  // L with distinguished Gm
    GroupPtr H;
    GroupPtr B;
    Subgroup G;   // of H
    Subgroup A;   // of B
    GroupHom beta;  // H -> B, surjective
    GroupHom nu;    // L -> B, surjective

    GroupPtr L() const { return pair.ambient; }
    const Subgroup& Gm() const { return pair.distinguished; }
    /// alpha = beta restricted to G (onto A).
    SubHom alpha() const { return restrict_hom(beta, G); }
    /// mu = nu restricted to Gm (onto A).
    SubHom mu() const { return restrict_hom(nu, Gm()); }
};

/// theta: L -> H with beta∘theta = nu and theta(Gm) <= G; eta is always the
/// restriction of theta.
struct WeakSolution {
    GroupHom theta;
    SubHom eta;
};

WeakSolution make_weak_solution(const DoubleEmbeddingProblem& dep, GroupHom theta);
/// Re-checks every WeakSolution invariant element by element.
void verify_weak_solution(const DoubleEmbeddingProblem& dep, const WeakSolution& sol);

std::vector<std::string> validate_dep(const DoubleEmbeddingProblem& dep);
/// Throwing variant of validate_dep.
void require_valid(const DoubleEmbeddingProblem& dep);

/// Shrink a diagram with possibly non-surjective mu, nu to a validated DEP:
/// A -> mu(Gm), B -> nu(L), G -> alpha-preimage, H -> beta-preimage.
DoubleEmbeddingProblem normalize_dep(const DoubleEmbeddingProblem& raw);

struct SplitWitness {
    SubHom alpha_section;    // A -> G (values in H)
    GroupHom beta_section;   // B -> H
};
/// True iff alpha and beta both admit sections (independently chosen).
std::pair<bool, std::optional<SplitWitness>> is_split(const DoubleEmbeddingProblem& dep);

std::vector<WeakSolution> solve_weak(const DoubleEmbeddingProblem& dep, bool want_all);
std::optional<WeakSolution> solve_weak_first(const DoubleEmbeddingProblem& dep);

/// Weak solutions of the lower embedding problem alone: eta: Gm -> G with
/// alpha∘eta = mu.
std::vector<SubHom> lower_solutions(const DoubleEmbeddingProblem& dep);

/// Prescribed-restriction lifting: a weak solution with theta|_Gm = eta.
std::optional<WeakSolution> solve_weak_prescribed(const DoubleEmbeddingProblem& dep,
                                                  const SubHom& eta);

/// Same contract as solve_weak_prescribed, via the fiber-product route:
/// build H x_B L, search a section of the right projection landing in the
/// graph of eta. Independent algorithm, used as a cross-oracle.
std::optional<WeakSolution> lift_via_fiber(const DoubleEmbeddingProblem& dep,
                                           const SubHom& eta,
                                           int cap = kDefaultOrderCap);

struct DominationWitness {
    DoubleEmbeddingProblem dominating;
    GroupHom pi_higher;   // H-hat -> H
    GroupHom pi_quot;     // B-hat -> B
    SubHom pi_lower;      // G-hat -> G (restriction of pi_higher)
    SubHom pi_lower_quot; // A-hat -> A (restriction of pi_quot)
    SplitWitness sections;
};

/// Split domination: from independent solutions theta (higher) and eta
/// (lower), build the dominating split DEP with B-hat = L/N for
/// N = ker(theta) ∩ core_L(ker(eta)).
DominationWitness dominate_split(const DoubleEmbeddingProblem& dep,
                                 const GroupHom& theta, const SubHom& eta,
                                 int cap = kDefaultOrderCap);

/// Push a solution of the dominating problem down through the witness.
WeakSolution induced_solution(const DoubleEmbeddingProblem& dominated,
                              const DominationWitness& witness,
                              const WeakSolution& sol);

/// Weak solution of the dominating problem induced by its canonical
/// sections: theta-hat = beta_section ∘ nu-hat.
WeakSolution canonical_dominating_solution(const DominationWitness& witness);

struct KernelReduction {
    Subgroup U;             // largest admissible normal subgroup of H
    GroupPtr H_bar;         // H/U
    GroupHom pi;            // H -> H/U
    Subgroup G_bar;         // pi(G)
    GroupPtr B_bar;         // B/beta(U)
    GroupHom pi_B;          // B -> B_bar
    Subgroup A_bar;         // image of A in B_bar
    GroupHom beta_bar;      // H_bar -> B_bar
    bool certificate;       // (KG) ∩ (UG) == G, checked exhaustively
};

/// Choose the largest normal U <= H with U ∩ KG <= G and K ∩ U = 1
/// (K = ker beta); U = 1 is always admissible.
KernelReduction finite_kernel_reduction(const DoubleEmbeddingProblem& dep);

/// Corollary-style splitting over a subgroup N <= Gm: on success M <= L
/// satisfies N = Gm ∩ M and Gm·M = L; M is normal when N is normal in Gm.
/// Finite pairs need not behave projectively, so `none` is a valid result.
std::optional<Subgroup> split_over_subgroup(const FinitePair& pair, const Subgroup& n_sub);

/// split_over_subgroup with N = 1: a normal complement M with M ∩ Gm = 1
/// and M·Gm = L.
std::optional<Subgroup> semidirect_complement(const FinitePair& pair);

struct WreathObstruction {
    DoubleEmbeddingProblem dep;  // higher: (nu, A≀G -> G); lower: (Gm -> 1, A^1 -> 1)
    SubHom prescribed_eta;       // Gm -> A^1 through coord_embed
    WreathProduct wreath;
};

/// Build the wreath-product DEP whose prescribed lift must fail whenever
/// Gm is normal, proper and nontrivial with nontrivial targets. `eta` maps
/// Gm onto a nontrivial A; `nu` maps L onto a nontrivial G with Gm in its
/// kernel (forced by commutativity of the diagram).
WreathObstruction wreath_obstruction_dep(const FinitePair& pair, const SubHom& eta,
                                         const GroupHom& nu,
                                         int cap = kDefaultOrderCap);

/// True iff no normal M of Q complements the Sylow p-subgroup, for Q with a
/// surjection onto a non-abelian simple S of order divisible by p.
bool sylow_obstruction_check(GroupPtr Q, int p, const GroupHom& psi);

}  // namespace projpair
