#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "nutforge/graph.hpp"

namespace nutforge {

using BigInt = boost::multiprecision::cpp_int;

// Primitive integer vector spanning (part of) the adjacency-matrix kernel:
// gcd of entries is 1 and the first nonzero entry is positive.
struct KernelVector {
  std::vector<BigInt> entries;

  bool operator==(const KernelVector&) const = default;
  bool zero_free() const;
  bool equal_up_to_sign(const KernelVector& other) const;
};

// Divides by the gcd and flips the global sign so the first nonzero entry is
// positive. The zero vector is returned unchanged.
KernelVector normalize_kernel_vector(std::vector<BigInt> entries);

struct NutCertificate {
  Graph graph;
  int nullity = 0;
  std::optional<KernelVector> kernel;
  bool is_nut = false;
  bool is_chemical_nut = false;
};

// Rank deficiency of the 0/1 adjacency matrix, exact arithmetic throughout
// (fraction-free elimination; machine words while provably overflow-safe,
// arbitrary precision otherwise).
int nullity(const Graph& g);

// Basis of the kernel over the rationals, cleared to primitive integer form.
std::vector<KernelVector> kernel_basis(const Graph& g);

// Full certificate. is_nut requires nullity 1, a zero-free kernel vector and
// order >= 2 (K1 is excluded by convention).
NutCertificate verify_nut(const Graph& g);

// True iff x has a zero neighbour-sum at every vertex and is not the zero
// vector. Throws DimensionMismatch when sizes differ.
bool check_kernel_vector(const Graph& g, const KernelVector& x);

// Boolean nut test on the enumeration hot path: machine-word elimination and
// rational back-substitution where provably exact, verify_nut otherwise.
// Agrees with verify_nut(g).is_nut.
bool is_nut_graph(const Graph& g);

std::string certificate_to_json(const NutCertificate& cert);

}  // namespace nutforge
