#pragma once

#include <vector>

#include "collar/group_ring.hpp"

namespace collar {

/// Surjectivity of a ZQ-map via its flattening: full row rank with all
/// invariant factors 1 (sound and complete for regular representations of
/// finite Q).
inline bool zq_surjective(const GRMatrix& m) {
  SNFResult s = smith_normal_form(flatten(m));
  if (s.rank() != flatten(m).rows()) return false;
  for (const auto& f : s.invariant_factors())
    if (f != 0 && f != 1) return false;
  return true;
}

/// The explicit kernel-splitting data for Θ: A ⊕ B → C with Θ|_A onto:
///   α: B → A with Θ(α(b), 0) = Θ(0, b),
///   φ(x, b) = (x − α(b), b)   : ker(Θ|_A) ⊕ B → ker(Θ),
///   ψ(z)    = (π₁(z) + α(π₂(z)), π₂(z)) : ker(Θ) → ker(Θ|_A) ⊕ B.
struct KernelSplit {
  GRMatrix theta_a, theta_b;  // the two column blocks of Θ
  GRMatrix alpha;             // rA × rB over ZQ
  // φ and ψ as square matrices on A ⊕ B coordinates
  GRMatrix phi, psi;

  std::vector<GroupRingElem> apply_phi(const std::vector<GroupRingElem>& xb) const {
    return phi.apply(xb);
  }
  std::vector<GroupRingElem> apply_psi(const std::vector<GroupRingElem>& z) const {
    return psi.apply(z);
  }
};

/// Verification record for one kernel_split instance.
struct KernelSplitVerification {
  bool phi_psi_identity = false;   // φ∘ψ = id and ψ∘φ = id as matrices
  bool phi_lands_in_kernel = false;   // Θ·φ(x,b) = 0 on a kernel basis
  bool psi_lands_in_kernel_a = false;  // Θ|_A applied to the A-part of ψ(z) = 0
  std::size_t kernel_rank = 0;     // integer rank of ker(flatten(Θ))
  bool ok() const { return phi_psi_identity && phi_lands_in_kernel && psi_lands_in_kernel_a; }
};

struct KernelSplitResult {
  KernelSplit split;
  KernelSplitVerification verification;
};

/// Construct α, φ, ψ for Θ = [Θ|_A | Θ|_B] (split at column `split_index`)
/// and verify the proof's displayed identities exactly.
inline KernelSplitResult kernel_split(const GRMatrix& theta, std::size_t split_index) {
  auto [ta, tb] = theta.split_columns(split_index);
  if (!zq_surjective(ta))
    throw PreconditionError("Theta|_A is not surjective as a ZQ-map");
  const GroupPtr g = theta.group();
  const std::size_t q = g->order();
  const std::size_t ra = ta.cols(), rb = tb.cols();

  KernelSplitResult out;
  out.split.theta_a = ta;
  out.split.theta_b = tb;

  // α column by column: solve flatten(Θ|_A)·x = flatten(Θ|_B e_s) exactly.
  IntMatrix fa = flatten(ta);
  GRMatrix alpha(g, ra, rb);
  for (std::size_t s = 0; s < rb; ++s) {
    std::vector<GroupRingElem> target_col;
    for (std::size_t r = 0; r < tb.rows(); ++r) target_col.push_back(tb(r, s));
    auto x = solve_integer(fa, flatten_vector(target_col));
    if (!x)
      throw Error("no exact preimage although Theta|_A is surjective");  // cannot occur
    std::vector<GroupRingElem> col = unflatten_vector(g, *x);
    for (std::size_t r = 0; r < ra; ++r) alpha(r, s) = col[r];
  }
  out.split.alpha = alpha;

  // φ = [[I, -α],[0, I]], ψ = [[I, +α],[0, I]] on A ⊕ B coordinates
  GRMatrix phi = GRMatrix::identity(g, ra + rb);
  GRMatrix psi = GRMatrix::identity(g, ra + rb);
  for (std::size_t r = 0; r < ra; ++r)
    for (std::size_t c = 0; c < rb; ++c) {
      phi(r, ra + c) = -alpha(r, c);
      psi(r, ra + c) = alpha(r, c);
    }
  out.split.phi = phi;
  out.split.psi = psi;

  // --- verification -----------------------------------------------------
  KernelSplitVerification& v = out.verification;
  GRMatrix comp1 = phi * psi, comp2 = psi * phi;
  v.phi_psi_identity =
      comp1 == GRMatrix::identity(g, ra + rb) && comp2 == GRMatrix::identity(g, ra + rb);

  // kernel basis of the flattened Θ; each basis vector z satisfies Θz = 0
  IntMatrix ftheta = flatten(theta);
  auto kernel_basis = integer_kernel_basis(ftheta);
  v.kernel_rank = kernel_basis.size();

  // ψ maps ker(Θ) into ker(Θ|_A) ⊕ B: check the A-part after ψ
  v.psi_lands_in_kernel_a = true;
  for (const auto& zflat : kernel_basis) {
    std::vector<GroupRingElem> z = unflatten_vector(g, zflat);
    std::vector<GroupRingElem> image = psi.apply(z);
    std::vector<GroupRingElem> apart(image.begin(), image.begin() + static_cast<long>(ra));
    for (const auto& c : ta.apply(apart))
      if (!c.is_zero()) {
        v.psi_lands_in_kernel_a = false;
        break;
      }
    if (!v.psi_lands_in_kernel_a) break;
  }

  // φ maps ker(Θ|_A) ⊕ B into ker(Θ): check on a generating set — kernel
  // basis vectors of flatten(Θ|_A) padded with 0, plus ZQ-basis vectors of B
  v.phi_lands_in_kernel = true;
  std::vector<std::vector<GroupRingElem>> domain_vectors;
  for (const auto& xflat : integer_kernel_basis(fa)) {
    std::vector<GroupRingElem> x = unflatten_vector(g, xflat);
    for (std::size_t s = 0; s < rb; ++s) x.push_back(GroupRingElem::zero(g));
    domain_vectors.push_back(std::move(x));
  }
  for (std::size_t s = 0; s < rb; ++s)
    for (std::size_t ge = 0; ge < q; ++ge) {
      std::vector<GroupRingElem> x(ra + rb, GroupRingElem::zero(g));
      x[ra + s] = GroupRingElem::basis(g, static_cast<int>(ge));
      domain_vectors.push_back(std::move(x));
    }
  for (const auto& x : domain_vectors) {
    std::vector<GroupRingElem> image = phi.apply(x);
    for (const auto& c : theta.apply(image))
      if (!c.is_zero()) {
        v.phi_lands_in_kernel = false;
        break;
      }
    if (!v.phi_lands_in_kernel) break;
  }
  return out;
}

/// The equivariant free-kernel lift: for a boundary map d with entries in
/// Z ⊆ ZQ, the ZQ-kernel of the upstairs map is freely generated by the
/// lifts of an integer kernel basis of d.
struct EquivariantLift {
  std::vector<std::vector<GroupRingElem>> basis;  // the lifted ZQ kernel basis
  std::size_t downstairs_rank = 0;                // a = rank of ker(d)
  std::size_t flattened_kernel_rank = 0;          // must equal |Q| · a
  bool rank_equality = false;
  bool independence = false;  // no nontrivial ZQ-combination vanishes
  bool generation = false;    // lifts generate the whole flattened kernel
  bool ok() const { return rank_equality && independence && generation; }
};

inline EquivariantLift equivariant_kernel_lift(const IntMatrix& d, const GroupPtr& gq) {
  EquivariantLift out;
  const std::size_t q = gq->order();
  auto down_basis = integer_kernel_basis(d);
  out.downstairs_rank = down_basis.size();
  for (const auto& v : down_basis) {
    std::vector<GroupRingElem> lift;
    for (const auto& c : v) lift.push_back(GroupRingElem::basis(gq, 0, c));
    out.basis.push_back(std::move(lift));
  }

  GRMatrix upstairs = GRMatrix::from_integer(gq, d);
  IntMatrix flat = flatten(upstairs);
  auto up_basis = integer_kernel_basis(flat);
  out.flattened_kernel_rank = up_basis.size();
  out.rank_equality = out.flattened_kernel_rank == q * out.downstairs_rank;

  // columns g·v_i for g in Q, i = 1..a
  const std::size_t cols = q * out.basis.size();
  IntMatrix span(flat.cols(), cols);
  std::size_t col = 0;
  for (const auto& lift : out.basis)
    for (std::size_t ge = 0; ge < q; ++ge) {
      std::vector<GroupRingElem> translated;
      for (const auto& e : lift)
        translated.push_back(GroupRingElem::basis(gq, static_cast<int>(ge)) * e);
      std::vector<BigInt> fv = flatten_vector(translated);
      for (std::size_t r = 0; r < fv.size(); ++r) span(r, col) = fv[r];
      ++col;
    }
  out.independence = integer_rank(span) == cols;

  // every flattened kernel basis vector must be an exact integer combination
  // of the translated lifts
  out.generation = true;
  for (const auto& kb : up_basis) {
    if (!solve_integer(span, kb)) {
      out.generation = false;
      break;
    }
  }
  return out;
}

}  // namespace collar
