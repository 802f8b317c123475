#pragma once

#include <optional>
#include <string>
#include <vector>

#include "collar/group_ring.hpp"

namespace collar {

/// Homology summary of one degree of the flattened integer complex.
struct HomologyDegree {
  std::size_t kernel_rank = 0;
  std::size_t image_rank = 0;
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

struct ChainReport {
  bool boundaries_compose_to_zero = false;  // ∂_k ∂_{k+1} = 0 over ZQ
  std::vector<HomologyDegree> homology;     // degrees 0..n
  bool acyclic = false;
};

namespace detail {

/// Invariant factors of ker(flat_d_k)/im(flat_d_k1), with d_k possibly absent
/// (degree 0: kernel is everything) and d_k1 possibly absent (top degree).
inline HomologyDegree homology_degree(const std::optional<IntMatrix>& d_k,
                                      const std::optional<IntMatrix>& d_k1,
                                      std::size_t dim_ck) {
  HomologyDegree out;
  // kernel basis as matrix columns
  std::vector<std::vector<BigInt>> kb;
  if (d_k) {
    kb = integer_kernel_basis(*d_k);
  } else {
    for (std::size_t i = 0; i < dim_ck; ++i) {
      std::vector<BigInt> e(dim_ck, BigInt(0));
      e[i] = 1;
      kb.push_back(std::move(e));
    }
  }
  out.kernel_rank = kb.size();
  if (!d_k1 || d_k1->cols() == 0) {
    out.free_rank = out.kernel_rank;
    return out;
  }
  IntMatrix kmat(dim_ck, kb.size());
  for (std::size_t c = 0; c < kb.size(); ++c)
    for (std::size_t r = 0; r < dim_ck; ++r) kmat(r, c) = kb[c][r];
  // coordinates of each image column in the (saturated) kernel lattice
  IntMatrix x(kb.size(), d_k1->cols());
  for (std::size_t c = 0; c < d_k1->cols(); ++c) {
    auto sol = solve_integer(kmat, d_k1->column(c));
    if (!sol)
      throw PreconditionError("image does not lie in the kernel; not a chain complex");
    for (std::size_t r = 0; r < kb.size(); ++r) x(r, c) = (*sol)[r];
  }
  SNFResult s = smith_normal_form(x);
  out.image_rank = s.rank();
  out.free_rank = out.kernel_rank - out.image_rank;
  for (const auto& f : s.invariant_factors())
    if (f != 0 && f != 1) out.torsion.push_back(f);
  return out;
}

}  // namespace detail

/// Verify ∂_k·∂_{k+1} = 0 over ZQ and compute flattened integer homology
/// per degree. `boundaries[k]` is ∂_{k+1}: C_{k+1} → C_k.
inline ChainReport chain_check(const std::vector<GRMatrix>& boundaries) {
  ChainReport rep;
  rep.boundaries_compose_to_zero = true;
  for (std::size_t i = 0; i + 1 < boundaries.size(); ++i) {
    if (boundaries[i].cols() != boundaries[i + 1].rows())
      throw ValidationError("consecutive boundary dimensions are incompatible");
    if (!(boundaries[i] * boundaries[i + 1]).is_zero()) rep.boundaries_compose_to_zero = false;
  }
  if (!rep.boundaries_compose_to_zero) return rep;  // not a chain complex
  std::vector<std::optional<IntMatrix>> flat;
  for (const auto& b : boundaries) flat.push_back(flatten(b));
  const std::size_t n = boundaries.size();
  // degree 0: C_0 = rows of ∂_1; degree k: C_k = cols of ∂_k
  for (std::size_t k = 0; k <= n; ++k) {
    std::optional<IntMatrix> dk = k == 0 ? std::nullopt : flat[k - 1];
    std::optional<IntMatrix> dk1 = k == n ? std::nullopt : flat[k];
    std::size_t dim = k == 0 ? (n ? flat[0]->rows() : 0) : flat[k - 1]->cols();
    rep.homology.push_back(detail::homology_degree(dk, dk1, dim));
  }
  rep.acyclic = rep.boundaries_compose_to_zero;
  for (const auto& h : rep.homology)
    if (!h.trivial()) rep.acyclic = false;
  return rep;
}

/// Report of the compact-support cochain conditions on the flattened
/// transposed complex of 0 → C₃ → C₂ → C₁ → 0.
struct DualReport {
  bool section_found = false;
  bool direct_sum = false;       // ∂₃(C₃) ⊕ ι(C₁) = C₂ (unimodular assembly)
  bool delta2_injective = false;
  bool delta3_surjective = false;
  bool image_equals_kernel = false;  // im(δ₂) = ker(δ₃)
  bool ok() const {
    return section_found && direct_sum && delta2_injective && delta3_surjective &&
           image_equals_kernel;
  }
};

/// δ₂ injectivity, δ₃ surjectivity and exactness at C₂* for an acyclic
/// three-term complex (d2: C₂ → C₁, d3: C₃ → C₂). A section ι of the
/// flattened d2 may be supplied; otherwise it is computed via SNF.
inline DualReport cocompact_dual_check(const GRMatrix& d2, const GRMatrix& d3,
                                       std::optional<IntMatrix> iota = std::nullopt) {
  ChainReport pre = chain_check({d2, d3});
  if (!pre.acyclic)
    throw PreconditionError("dual check requires an acyclic three-term complex");

  DualReport rep;
  IntMatrix f2 = flatten(d2);  // C2 -> C1
  IntMatrix f3 = flatten(d3);  // C3 -> C2

  // section: f2 · iota = identity on C1
  if (!iota) {
    IntMatrix sec(f2.cols(), f2.rows());
    bool ok = true;
    for (std::size_t c = 0; c < f2.rows(); ++c) {
      std::vector<BigInt> e(f2.rows(), BigInt(0));
      e[c] = 1;
      auto sol = solve_integer(f2, e);
      if (!sol) {
        ok = false;
        break;
      }
      for (std::size_t r = 0; r < f2.cols(); ++r) sec(r, c) = (*sol)[r];
    }
    if (!ok) {
      rep.section_found = false;
      return rep;  // diagnostic: no computable split
    }
    iota = std::move(sec);
  }
  rep.section_found = (f2 * (*iota)) == IntMatrix::identity(f2.rows());
  if (!rep.section_found) return rep;

  // ∂₃(C₃) ⊕ ι(C₁) = C₂ ⇔ the assembled square matrix is unimodular
  if (f3.cols() + iota->cols() == f2.cols()) {
    IntMatrix assembled(f2.cols(), f3.cols() + iota->cols());
    for (std::size_t r = 0; r < f2.cols(); ++r) {
      for (std::size_t c = 0; c < f3.cols(); ++c) assembled(r, c) = f3(r, c);
      for (std::size_t c = 0; c < iota->cols(); ++c) assembled(r, f3.cols() + c) = (*iota)(r, c);
    }
    BigInt dt = assembled.det();
    rep.direct_sum = (dt == 1 || dt == -1);
  }

  IntMatrix delta2 = f2.transpose();  // C1* -> C2*
  IntMatrix delta3 = f3.transpose();  // C2* -> C3*

  SNFResult s2 = smith_normal_form(delta2);
  rep.delta2_injective = s2.rank() == delta2.cols();

  SNFResult s3 = smith_normal_form(delta3);
  bool inv_ones = true;
  for (const auto& f : s3.invariant_factors())
    if (f != 0 && f != 1) inv_ones = false;
  rep.delta3_surjective = s3.rank() == delta3.rows() && inv_ones;

  // exactness at C2*: ranks add up and every kernel basis vector of δ₃ has an
  // exact preimage under δ₂
  bool ranks = s2.rank() + s3.rank() == delta2.rows();
  bool membership = true;
  for (const auto& kb : integer_kernel_basis(delta3)) {
    if (!solve_integer(delta2, kb)) {
      membership = false;
      break;
    }
  }
  rep.image_equals_kernel = ranks && membership;
  return rep;
}

}  // namespace collar
