#pragma once

// Named property suites.  Each one enumerates its quantifiers exhaustively
// over simples (and over short elements or sampled words where stated) and
// records every violated identity.

#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "garside/zappa_szep.hpp"

namespace garside::verify {

struct CheckReport {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  /// The first few failures, human readable.
  std::vector<std::string> counterexamples;

  bool ok() const noexcept { return failures == 0; }
  void merge(const CheckReport& other);
  std::string summary() const;
};

/// Collects results; at most `keep` counterexamples are stored.
class Checker {
 public:
  explicit Checker(std::string name, std::size_t keep = 10) : keep_(keep) { report_.name = std::move(name); }

  /// Records one case.  `describe` is only called on failure.
  template <std::invocable F>
  bool expect(bool ok, F&& describe) {
    ++report_.cases;
    if (!ok) fail(describe());
    return ok;
  }
  bool expect(bool ok, std::string_view what) {
    return expect(ok, [&] { return std::string(what); });
  }
  void fail(std::string what);
  void add(const CheckReport& r) { report_.merge(r); }
  const CheckReport& report() const noexcept { return report_; }

 private:
  CheckReport report_;
  std::size_t keep_;
};

struct SuiteOptions {
  std::uint64_t max_length = 4;   ///< atom-length bound for element enumerations
  std::size_t samples = 1000;     ///< random cases per word-level identity
  std::size_t max_letters = 4;    ///< letters per sampled word
  std::uint64_t seed = 1;
};

/// Independent recomputation of the germ's derived tables from the raw
/// product: divisors, meets, joins, complements, atoms.
CheckReport check_germ_axioms(const Germ& g);

/// Lattice laws for elements of atom length <= max_length: gcd/lcm against
/// enumerated prefix sets, complements, divisibility, suffix-side duals.
CheckReport check_element_lattice(const Germ& g, const SuiteOptions& opt = {});

/// The action identities over all simple tuples, their word-level forms on
/// sampled words, GH/HG uniqueness and factor closure on short elements.
CheckReport check_action_identities(const ZSStructure& zs, const SuiteOptions& opt = {});

/// The factor-level normal-form criteria for all simple 4-tuples against
/// the K-level definition.
CheckReport check_nf_criteria(const ZSStructure& zs);

/// split_nf / merge_nf against element-level oracles on every input of
/// atom length <= max_length, normality under actions, and pushing H letters through pairs.
CheckReport check_algorithms(const ZSStructure& zs, const SuiteOptions& opt = {});

/// phi and psi are injective with matching counts per atom length.
CheckReport check_bijections(const ZSStructure& zs, const SuiteOptions& opt = {});

/// Automata against the pairwise definition for lengths <= max_length, and
/// (with a structure) translation and projection.
CheckReport check_automata(const Germ& g, const ZSStructure* zs, const SuiteOptions& opt = {});

/// Element arithmetic against an explicit model of the germ named by the
/// spec (braid:n, abelian:k or wreath).  DomainError for other germs.
CheckReport check_oracle(const std::string& spec, const SuiteOptions& opt = {});

/// Suite names accepted by run_suite, in a fixed order.
const std::vector<std::string>& suite_names();
/// Whether the suite needs a decomposition.
bool suite_needs_structure(const std::string& name);
/// Runs a suite by name.  `spec` is the germ spec (used by "oracle"); `zs`
/// is required when suite_needs_structure(name).  Structure suites are run
/// on zs and on its mirror.
CheckReport run_suite(const std::string& name, const std::string& spec, const Germ& g, const ZSStructure* zs,
                      const SuiteOptions& opt = {});

}  // namespace garside::verify
