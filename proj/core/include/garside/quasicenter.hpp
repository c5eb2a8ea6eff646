#pragma once

#include <vector>

#include "garside/germ.hpp"

namespace garside {

/// The least quasi-central element above the simple s: the join of every
/// b1\(b2\(...\s)) for atoms bi.
SimpleId delta_of_simple(const Germ& g, SimpleId s);

/// delta_of_simple for every simple, indexed by id.
std::vector<SimpleId> delta_table(const Germ& g);

/// Atoms grouped by their Delta_a.  Classes are ordered by their smallest
/// atom id, atoms inside a class by id.
struct AtomClassPartition {
  std::vector<std::vector<SimpleId>> classes;
  std::vector<SimpleId> class_delta;

  std::size_t size() const noexcept { return classes.size(); }
  /// Index of the class containing atom a.
  std::size_t class_of(SimpleId a) const;
};

/// Throws InvariantViolation if two classes have Delta values with a
/// non-trivial meet.
AtomClassPartition atom_classes(const Germ& g);

/// At most one atom class.  The trivial germ, with no atoms, counts as pure.
bool is_delta_pure(const Germ& g);

/// s is quasi-central: for every atom a there is an atom a' with a s = s a'.
bool is_quasi_central(const Germ& g, SimpleId s);

/// The distinct class Delta values, sorted by id.  Checked to commute
/// pairwise and to be quasi-central; throws InvariantViolation otherwise.
std::vector<SimpleId> quasi_center_basis(const Germ& g);

}  // namespace garside
