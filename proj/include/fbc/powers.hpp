#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fbc/automorphism.hpp"
#include "fbc/torus.hpp"

namespace fbc {

enum class PieceKind { flat, up_bump, down_bump, up_step, down_step };

const char* to_string(PieceKind k);

/// A segment [begin, end) of the word together with the heights of the
/// t-exponent lattice path at its two ends.
struct LatticePiece {
  PieceKind kind = PieceKind::flat;
  std::size_t begin = 0;
  std::size_t end = 0;
  long start_height = 0;
  long end_height = 0;

  std::size_t size() const { return end - begin; }
  bool is_flat() const { return kind == PieceKind::flat; }
  bool is_step() const {
    return kind == PieceKind::up_step || kind == PieceKind::down_step;
  }
};

/// w = v0 u1 v1 u2 v2 ... where each u_i starts at a t-letter at a height
/// divisible by p and runs to the first later height divisible by p, and
/// each v_i is a maximal t-free run (the v's are the flat pieces).
struct LatticeDecomposition {
  GroupWord word;
  std::size_t p = 1;
  std::vector<LatticePiece> pieces;
};

/// Throws PreconditionError if p == 0 or the final height is not a multiple
/// of p.
LatticeDecomposition lattice_decompose(const GroupWord& w, std::size_t p);

/// w, its rewrite tilde (bumps and steps pushed to heights divisible by p),
/// and the word `result` over F's generators and tau = t^p. In `result`
/// the stable letters stand for tau.
struct PowerRewrite {
  GroupWord original;
  GroupWord tilde;
  GroupWord result;
  std::size_t p = 1;
  std::size_t lipschitz = 0;  // max over phi and phi^-1 images
  std::uint64_t corridor_bound = 0;
  std::uint64_t length_bound = 0;  // L^(p-1) |original|

  bool equal_in_group = false;  // original == tilde == result (tau = t^p)
  bool length_ok = false;       // |result| <= |tilde| <= L^(p-1)|original|
};

PowerRewrite rewrite_power(const GroupWord& w, const Automorphism& phi,
                           std::size_t p);

/// L^(p-1) * max |u_i| over bumps and steps; 0 if there are none.
std::uint64_t corridor_bound(const LatticeDecomposition& d,
                             const Automorphism& phi);

/// Replaces each stable letter (tau) by p copies of t.
GroupWord expand_tau(const GroupWord& w, std::size_t p);

/// Lipschitz constant used by the power bounds: max(|phi(a)|, |phi^-1(a)|).
std::size_t two_sided_lipschitz(const Automorphism& phi);

}  // namespace fbc
