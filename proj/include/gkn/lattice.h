// Copyright 2026 The gkn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Picard lattices of the supported surfaces.
//
// A surface is modeled by the Gram matrix of its intersection form together
// with the classes of the hyperplane section H and the canonical divisor K.
// Cohomological hypotheses that cannot be read off the lattice (k-normality,
// vanishing of h^1(O_S(kH))) are carried as declared flags.
//
// Complete intersections are modeled with Picard group Z*H. This is the
// Noether-Lefschetz generic situation and covers every class of the form nH.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gkn/common.h"

namespace gkn {

class DivisorClass {
 public:
  DivisorClass() = default;
  explicit DivisorClass(std::vector<Integer> coords)
      : coords_(std::move(coords)) {}
  DivisorClass(std::initializer_list<long> coords);

  const std::vector<Integer>& coords() const { return coords_; }
  std::size_t rank() const { return coords_.size(); }

  DivisorClass operator+(const DivisorClass& other) const;
  DivisorClass operator-(const DivisorClass& other) const;
  DivisorClass operator-() const;
  friend DivisorClass operator*(const Integer& scalar, const DivisorClass& d);

  bool operator==(const DivisorClass& other) const = default;

  std::string ToString() const;  // "(a, b, ...)"

 private:
  std::vector<Integer> coords_;
};

using GramMatrix = std::vector<std::vector<Integer>>;

enum class SurfaceKind {
  kProjectivePlane,
  kSmoothQuadric,
  kCompleteIntersection,
  kGeneralLattice,
};

std::string SurfaceKindName(SurfaceKind kind);

// Hypotheses asserted by the user for a GeneralLattice. Built-in models
// satisfy all of them for every k.
struct DeclaredFlags {
  bool h1_kH_vanishes = true;
  bool k_normal = true;

  bool operator==(const DeclaredFlags&) const = default;
};

class SurfaceModel {
 public:
  static SurfaceModel ProjectivePlane();
  static SurfaceModel SmoothQuadric();
  // Surface cut out by hypersurfaces of the given degrees in P^r; requires
  // r >= 3 and exactly r - 2 degrees, each >= 1.
  static SurfaceModel CompleteIntersection(const Integer& ambient_dim,
                                           std::vector<Integer> degrees);
  // Validates symmetry, dimensions and H^2 > 0.
  static SurfaceModel GeneralLattice(GramMatrix gram, DivisorClass hyperplane,
                                     DivisorClass canonical,
                                     DeclaredFlags flags,
                                     std::optional<Integer> ambient_dim = {});

  SurfaceKind kind() const { return kind_; }
  bool is_builtin() const { return kind_ != SurfaceKind::kGeneralLattice; }
  std::size_t rank() const { return gram_.size(); }
  const GramMatrix& gram() const { return gram_; }
  const DivisorClass& hyperplane() const { return hyperplane_; }
  const DivisorClass& canonical() const { return canonical_; }
  const Integer& degree() const { return degree_; }

  // Dimension r of the ambient P^r, when known.
  const std::optional<Integer>& ambient_dim() const { return ambient_dim_; }
  // Hypersurface degrees of a complete intersection; empty otherwise.
  const std::vector<Integer>& multidegrees() const { return multidegrees_; }
  const DeclaredFlags& flags() const { return flags_; }

  bool h1_kH_vanishes(const Integer& k) const;
  bool k_normal(const Integer& k) const;

  // n * H.
  DivisorClass Multiple(const Integer& n) const;

  std::string Describe() const;

  bool operator==(const SurfaceModel&) const = default;

 private:
  SurfaceModel() = default;

  SurfaceKind kind_ = SurfaceKind::kGeneralLattice;
  GramMatrix gram_;
  DivisorClass hyperplane_;
  DivisorClass canonical_;
  Integer degree_;
  std::optional<Integer> ambient_dim_;
  std::vector<Integer> multidegrees_;
  DeclaredFlags flags_;
};

// A^T * gram * B. Throws InputError on a dimension mismatch.
Integer Intersect(const SurfaceModel& surface, const DivisorClass& a,
                  const DivisorClass& b);

inline Integer SelfIntersection(const SurfaceModel& surface,
                                const DivisorClass& d) {
  return Intersect(surface, d, d);
}

// Adjunction genus D.(D+K)/2 + 1.
Integer ArithmeticGenus(const SurfaceModel& surface, const DivisorClass& d);

// p_a(D) - delta, for 0 <= delta <= p_a(D).
Integer GeometricGenus(const SurfaceModel& surface, const DivisorClass& d,
                       const Integer& delta);

// nu(D, kH) = k^2 ((D.H)^2 - D^2 H^2). k must be positive.
Integer HodgeNumber(const SurfaceModel& surface, const DivisorClass& d,
                    const Integer& k);

// Positivity is decided only on built-in models; a GeneralLattice throws
// InputError.
bool IsNef(const SurfaceModel& surface, const DivisorClass& d);
bool IsBigAndNef(const SurfaceModel& surface, const DivisorClass& d);

// Rejects k <= 0 with InputError.
void RequirePositiveK(const Integer& k);

}  // namespace gkn
