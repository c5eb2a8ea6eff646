#pragma once

// A finite Garside structure given by its simple elements: the divisors of
// Delta together with the partial product between them.  Everything else
// (divisibility, lattice operations, complements, atoms) is derived once at
// construction and stored as dense tables.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "garside/error.hpp"

namespace garside {

/// Index of a simple element inside its germ.  Index 0 is always the unit.
enum class SimpleId : std::uint32_t {};

constexpr std::uint32_t index(SimpleId s) noexcept { return static_cast<std::uint32_t>(s); }
constexpr SimpleId simple(std::uint32_t i) noexcept { return static_cast<SimpleId>(i); }

inline constexpr SimpleId kUnit = simple(0);

/// Largest number of simples a germ may have (tables use 16-bit entries).
inline constexpr std::size_t kMaxSimples = 0xFFFF;

/// Raw input of a germ: names, Delta and the partial product.  This is what
/// the file format and the built-in constructors produce.
struct GermData {
  std::vector<std::string> names;
  SimpleId delta = kUnit;
  /// Row-major size() x size(); -1 where the product is undefined.
  std::vector<std::int32_t> product;

  /// Creates tables for the given names with only the unit products set.
  /// names[0] must be "1".
  static GermData with_names(std::vector<std::string> names, SimpleId delta);

  std::size_t size() const noexcept { return names.size(); }
  std::optional<SimpleId> find(std::string_view name) const;
  std::optional<SimpleId> at(SimpleId s, SimpleId t) const;
  void set(SimpleId s, SimpleId t, SimpleId st);
  /// Same simples with product(s, t) := product(t, s).
  GermData transposed() const;
};

enum class AxiomStatus { passed, failed, skipped };

struct AxiomResult {
  std::string axiom;
  AxiomStatus status = AxiomStatus::passed;
  std::string witness;
};

struct ValidationReport {
  std::vector<AxiomResult> results;

  bool ok() const;
  const AxiomResult* first_failure() const;
  const AxiomResult* find(std::string_view axiom) const;
  std::string to_string() const;
};

/// Axiom names used in validation reports.
namespace axiom {
inline constexpr std::string_view identity = "identity";
inline constexpr std::string_view associativity = "partial-associativity";
inline constexpr std::string_view cancellativity = "cancellativity";
inline constexpr std::string_view left_complement = "left-complement-bijection";
inline constexpr std::string_view right_complement = "right-complement-bijection";
inline constexpr std::string_view balanced = "balanced-delta";
inline constexpr std::string_view atoms = "atom-generation";
inline constexpr std::string_view lattice = "lattice";
}  // namespace axiom

/// Checks the local axioms of a germ.  The associativity check is cubic in
/// the number of simples and may be switched off for large trusted inputs.
ValidationReport validate(const GermData& data, bool check_associativity = true);

class GermValidationError : public Error {
 public:
  explicit GermValidationError(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

enum class Verify {
  full,       ///< every axiom, including the cubic associativity sweep
  quadratic,  ///< everything except associativity
  minimal,    ///< only what table construction needs; lattice laws are assumed
};

class Germ;

namespace detail {

struct GermAccess;

struct GermTables {
  std::vector<std::string> names;
  std::unordered_map<std::string, std::uint32_t> by_name;
  std::uint32_t n = 0;
  std::uint32_t delta = 0;
  std::size_t words = 0;  // 64-bit words per divisor row

  static constexpr std::uint16_t kNone = 0xFFFF;

  // n x n tables, row-major, first argument selects the row.  Joins are not
  // stored: s v t = rcomplement(rmeet(complement(s), complement(t))).
  std::vector<std::uint16_t> product, meet, rmeet, lcomp, rcomp;
  std::vector<std::uint16_t> complement, rcomplement;
  std::vector<std::uint32_t> length;
  std::vector<SimpleId> atoms;
  std::vector<bool> is_atom;
  // Row t holds {s : s is a prefix of t} resp. {s : s is a suffix of t}.
  std::vector<std::uint64_t> ldiv, rdiv;

  std::size_t at(std::uint32_t s, std::uint32_t t) const noexcept { return std::size_t{s} * n + t; }
  bool bit(const std::vector<std::uint64_t>& rows, std::uint32_t row, std::uint32_t col) const noexcept {
    return (rows[row * words + col / 64] >> (col % 64)) & 1U;
  }
};

}  // namespace detail

/// Immutable, cheaply copyable handle to a validated germ.  A germ and its
/// opposite share the same tables; the opposite merely swaps the roles of
/// left and right.
class Germ {
 public:
  explicit Germ(GermData data, Verify level = Verify::full);

  std::size_t size() const noexcept { return t_->n; }
  SimpleId unit() const noexcept { return kUnit; }
  SimpleId delta() const noexcept { return simple(t_->delta); }
  const std::string& name(SimpleId s) const { return t_->names[index(s)]; }
  const std::vector<std::string>& names() const noexcept { return t_->names; }
  std::optional<SimpleId> find(std::string_view name) const;
  /// Like find() but throws DomainError for unknown names.
  SimpleId require(std::string_view name) const;
  bool contains(SimpleId s) const noexcept { return index(s) < t_->n; }

  std::optional<SimpleId> product(SimpleId s, SimpleId t) const noexcept {
    std::uint16_t p = flipped_ ? t_->product[t_->at(index(t), index(s))] : t_->product[t_->at(index(s), index(t))];
    if (p == detail::GermTables::kNone) return std::nullopt;
    return simple(p);
  }

  /// s is a prefix of t.
  bool left_divides(SimpleId s, SimpleId t) const noexcept {
    return t_->bit(flipped_ ? t_->rdiv : t_->ldiv, index(t), index(s));
  }
  /// s is a suffix of t.
  bool right_divides(SimpleId s, SimpleId t) const noexcept {
    return t_->bit(flipped_ ? t_->ldiv : t_->rdiv, index(t), index(s));
  }

  SimpleId meet(SimpleId s, SimpleId t) const noexcept { return lookup(flipped_ ? t_->rmeet : t_->meet, s, t); }
  SimpleId rmeet(SimpleId s, SimpleId t) const noexcept { return lookup(flipped_ ? t_->meet : t_->rmeet, s, t); }
  SimpleId join(SimpleId s, SimpleId t) const noexcept {
    return rcomplement(rmeet(complement(s), complement(t)));
  }
  SimpleId rjoin(SimpleId s, SimpleId t) const noexcept { return complement(meet(rcomplement(s), rcomplement(t))); }

  /// s\t: the simple with s * (s\t) = s v t.
  SimpleId lcomp(SimpleId s, SimpleId t) const noexcept { return lookup(flipped_ ? t_->rcomp : t_->lcomp, s, t); }
  /// t/s: the simple with (t/s) * s = the suffix-order join of s and t.
  SimpleId rcomp(SimpleId s, SimpleId t) const noexcept { return lookup(flipped_ ? t_->lcomp : t_->rcomp, s, t); }

  /// The simple c with s * c = Delta.
  SimpleId complement(SimpleId s) const noexcept {
    return simple((flipped_ ? t_->rcomplement : t_->complement)[index(s)]);
  }
  /// The simple c with c * s = Delta.
  SimpleId rcomplement(SimpleId s) const noexcept {
    return simple((flipped_ ? t_->complement : t_->rcomplement)[index(s)]);
  }
  /// Conjugation by Delta on simples: s * Delta = Delta * tau(s).
  SimpleId tau(SimpleId s) const noexcept { return complement(complement(s)); }

  const std::vector<SimpleId>& atoms() const noexcept { return t_->atoms; }
  bool is_atom(SimpleId s) const noexcept { return t_->is_atom[index(s)]; }
  /// Length of the longest factorisation of s into atoms.
  std::uint32_t atom_length(SimpleId s) const noexcept { return t_->length[index(s)]; }

  /// The opposite germ.  Involutive and O(1).
  Germ opposite() const;
  bool is_opposite() const noexcept { return flipped_; }
  /// The raw data in this germ's orientation.
  GermData data() const;

 private:
  friend struct detail::GermAccess;
  Germ(std::shared_ptr<const detail::GermTables> t, bool flipped) : t_(std::move(t)), flipped_(flipped) {}

  SimpleId lookup(const std::vector<std::uint16_t>& table, SimpleId s, SimpleId t) const noexcept {
    return simple(table[t_->at(index(s), index(t))]);
  }

  std::shared_ptr<const detail::GermTables> t_;
  bool flipped_ = false;
};

inline Germ opposite(const Germ& g) { return g.opposite(); }

ValidationReport validate(const Germ& g);

/// Parses a germ in the `germ v1` text format and validates it fully.
Germ parse_germ(std::string_view text);
/// Parses without building the germ (used to report validation failures).
GermData parse_germ_data(std::string_view text);
/// Writes the `germ v1` text format (unit products omitted).
std::string write_germ(const Germ& g);

}  // namespace garside
