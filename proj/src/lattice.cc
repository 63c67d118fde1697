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

#include "gkn/lattice.h"

#include <algorithm>
#include <sstream>

namespace gkn {
namespace {

void RequireSameRank(const DivisorClass& a, const DivisorClass& b) {
  if (a.rank() != b.rank()) {
    throw InputError("divisor dimension mismatch: " + std::to_string(a.rank()) +
                     " vs " + std::to_string(b.rank()));
  }
}

void RequireLatticeRank(const SurfaceModel& surface, const DivisorClass& d) {
  if (d.rank() != surface.rank()) {
    throw InputError("divisor dimension mismatch: divisor has " +
                     std::to_string(d.rank()) + " coordinates, lattice rank " +
                     std::to_string(surface.rank()));
  }
}

}  // namespace

DivisorClass::DivisorClass(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

DivisorClass DivisorClass::operator+(const DivisorClass& other) const {
  RequireSameRank(*this, other);
  std::vector<Integer> out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = coords_[i] + other.coords_[i];
  }
  return DivisorClass(std::move(out));
}

DivisorClass DivisorClass::operator-(const DivisorClass& other) const {
  return *this + (-other);
}

DivisorClass DivisorClass::operator-() const {
  std::vector<Integer> out(coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -coords_[i];
  return DivisorClass(std::move(out));
}

DivisorClass operator*(const Integer& scalar, const DivisorClass& d) {
  std::vector<Integer> out(d.coords_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = scalar * d.coords_[i];
  return DivisorClass(std::move(out));
}

std::string DivisorClass::ToString() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i > 0) os << ", ";
    os << coords_[i].get_str();
  }
  os << ')';
  return os.str();
}

std::string SurfaceKindName(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::kProjectivePlane:
      return "projective_plane";
    case SurfaceKind::kSmoothQuadric:
      return "quadric";
    case SurfaceKind::kCompleteIntersection:
      return "complete_intersection";
    case SurfaceKind::kGeneralLattice:
      return "lattice";
  }
  return "unknown";
}

SurfaceModel SurfaceModel::ProjectivePlane() {
  SurfaceModel s;
  s.kind_ = SurfaceKind::kProjectivePlane;
  s.gram_ = {{Integer(1)}};
  s.hyperplane_ = DivisorClass{1};
  s.canonical_ = DivisorClass{-3};
  s.degree_ = 1;
  s.ambient_dim_ = Integer(2);
  return s;
}

SurfaceModel SurfaceModel::SmoothQuadric() {
  SurfaceModel s;
  s.kind_ = SurfaceKind::kSmoothQuadric;
  // Basis: the two rulings, so classes are bidegrees (a, b).
  s.gram_ = {{Integer(0), Integer(1)}, {Integer(1), Integer(0)}};
  s.hyperplane_ = DivisorClass{1, 1};
  s.canonical_ = DivisorClass{-2, -2};
  s.degree_ = 2;
  s.ambient_dim_ = Integer(3);
  return s;
}

SurfaceModel SurfaceModel::CompleteIntersection(const Integer& ambient_dim,
                                                std::vector<Integer> degrees) {
  if (ambient_dim < 3) {
    throw InputError("complete intersection surface needs ambient_dim >= 3, got " +
                     ambient_dim.get_str());
  }
  if (Integer(static_cast<unsigned long>(degrees.size())) != ambient_dim - 2) {
    throw InputError("complete intersection surface in P^" +
                     ambient_dim.get_str() + " needs " +
                     Integer(ambient_dim - 2).get_str() + " degrees, got " +
                     std::to_string(degrees.size()));
  }
  Integer product = 1;
  Integer sum = 0;
  for (const Integer& d : degrees) {
    if (d < 1) {
      throw InputError("hypersurface degrees must be >= 1, got " + d.get_str());
    }
    product *= d;
    sum += d;
  }
  SurfaceModel s;
  s.kind_ = SurfaceKind::kCompleteIntersection;
  s.gram_ = {{product}};
  s.hyperplane_ = DivisorClass{1};
  s.canonical_ = DivisorClass(std::vector<Integer>{sum - ambient_dim - 1});
  s.degree_ = product;
  s.ambient_dim_ = ambient_dim;
  s.multidegrees_ = std::move(degrees);
  return s;
}

SurfaceModel SurfaceModel::GeneralLattice(GramMatrix gram,
                                          DivisorClass hyperplane,
                                          DivisorClass canonical,
                                          DeclaredFlags flags,
                                          std::optional<Integer> ambient_dim) {
  const std::size_t n = gram.size();
  if (n == 0) throw InputError("gram matrix must be nonempty");
  for (const auto& row : gram) {
    if (row.size() != n) throw InputError("gram matrix must be square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (gram[i][j] != gram[j][i]) {
        throw InputError("gram matrix is not symmetric at (" +
                         std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
  if (ambient_dim && *ambient_dim < 2) {
    throw InputError("ambient_dim must be >= 2");
  }
  SurfaceModel s;
  s.kind_ = SurfaceKind::kGeneralLattice;
  s.gram_ = std::move(gram);
  s.hyperplane_ = std::move(hyperplane);
  s.canonical_ = std::move(canonical);
  s.flags_ = flags;
  s.ambient_dim_ = std::move(ambient_dim);
  RequireLatticeRank(s, s.hyperplane_);
  RequireLatticeRank(s, s.canonical_);
  s.degree_ = SelfIntersection(s, s.hyperplane_);
  if (s.degree_ <= 0) {
    throw InputError("H^2 must be positive, got " + s.degree_.get_str());
  }
  return s;
}

bool SurfaceModel::h1_kH_vanishes(const Integer&) const {
  return is_builtin() || flags_.h1_kH_vanishes;
}

bool SurfaceModel::k_normal(const Integer&) const {
  return is_builtin() || flags_.k_normal;
}

DivisorClass SurfaceModel::Multiple(const Integer& n) const {
  return n * hyperplane_;
}

std::string SurfaceModel::Describe() const {
  switch (kind_) {
    case SurfaceKind::kProjectivePlane:
      return "P^2";
    case SurfaceKind::kSmoothQuadric:
      return "smooth quadric in P^3";
    case SurfaceKind::kCompleteIntersection: {
      std::string out = "complete intersection of degrees (";
      for (std::size_t i = 0; i < multidegrees_.size(); ++i) {
        if (i > 0) out += ",";
        out += multidegrees_[i].get_str();
      }
      return out + ") in P^" + ambient_dim_->get_str();
    }
    case SurfaceKind::kGeneralLattice:
      return "user lattice of rank " + std::to_string(rank());
  }
  return "unknown";
}

Integer Intersect(const SurfaceModel& surface, const DivisorClass& a,
                  const DivisorClass& b) {
  RequireLatticeRank(surface, a);
  RequireLatticeRank(surface, b);
  const GramMatrix& g = surface.gram();
  Integer total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (a.coords()[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < g.size(); ++j) {
      row += g[i][j] * b.coords()[j];
    }
    total += a.coords()[i] * row;
  }
  return total;
}

Integer ArithmeticGenus(const SurfaceModel& surface, const DivisorClass& d) {
  Integer twice = Intersect(surface, d, d + surface.canonical());
  if (mpz_odd_p(twice.get_mpz_t())) {
    throw InputError("non-integral genus: inconsistent lattice data (D.(D+K) = " +
                     twice.get_str() + ")");
  }
  return twice / 2 + 1;
}

Integer GeometricGenus(const SurfaceModel& surface, const DivisorClass& d,
                       const Integer& delta) {
  if (delta < 0) {
    throw InputError("delta must be nonnegative, got " + delta.get_str());
  }
  Integer pa = ArithmeticGenus(surface, d);
  if (delta > pa) {
    throw InputError("geometric genus would be negative: delta " +
                     delta.get_str() + " exceeds p_a " + pa.get_str());
  }
  return pa - delta;
}

void RequirePositiveK(const Integer& k) {
  if (k < 1) {
    throw InputError("k must be a positive integer, got " + k.get_str());
  }
}

Integer HodgeNumber(const SurfaceModel& surface, const DivisorClass& d,
                    const Integer& k) {
  RequirePositiveK(k);
  const DivisorClass& h = surface.hyperplane();
  Integer dh = Intersect(surface, d, h);
  Integer dd = Intersect(surface, d, d);
  return k * k * (dh * dh - dd * surface.degree());
}

bool IsNef(const SurfaceModel& surface, const DivisorClass& d) {
  RequireLatticeRank(surface, d);
  if (!surface.is_builtin()) {
    throw InputError("positivity undecidable for user lattices");
  }
  return std::all_of(d.coords().begin(), d.coords().end(),
                     [](const Integer& c) { return c >= 0; });
}

bool IsBigAndNef(const SurfaceModel& surface, const DivisorClass& d) {
  RequireLatticeRank(surface, d);
  if (!surface.is_builtin()) {
    throw InputError("positivity undecidable for user lattices");
  }
  // Rank one: a positive multiple of the ample generator. Quadric: both
  // bidegrees positive, since (a, 0) has square zero.
  return std::all_of(d.coords().begin(), d.coords().end(),
                     [](const Integer& c) { return c > 0; });
}

}  // namespace gkn
