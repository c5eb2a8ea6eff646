#pragma once

// Explicit models of some built-in monoids, written without any germ
// tables, used as ground truth for element arithmetic.
//   braid:n    positive braids; products normalised on permutations with
//              descent sets, lcms by subword reversing
//   abelian:k  vectors of naturals
//   wreath     triples (x, y, e) with (v, e)(w, f) = (v + swap^e(w), e + f)

#include <memory>
#include <string>
#include <vector>

namespace garside::verify {

/// Canonical encoding of an element; equal codes mean equal elements.
using Code = std::vector<int>;

class Model {
 public:
  virtual ~Model() = default;

  virtual int num_atoms() const = 0;
  /// Name of atom i in the corresponding built-in germ.
  virtual std::string atom_name(int i) const = 0;
  /// Atoms spelling a simple of the built-in germ, from its name.
  virtual std::vector<int> parse_simple(const std::string& name) const = 0;

  virtual Code eval(const std::vector<int>& atoms) const = 0;
  virtual int length(const Code& x) const = 0;
  virtual Code mul(const Code& x, const Code& y) const = 0;
  virtual bool divides(const Code& x, const Code& y) const = 0;   ///< x is a prefix of y
  virtual bool rdivides(const Code& x, const Code& y) const = 0;  ///< x is a suffix of y
  virtual Code lcm(const Code& x, const Code& y) const = 0;
  virtual Code rlcm(const Code& x, const Code& y) const = 0;
  virtual Code complement(const Code& x, const Code& y) const = 0;   ///< x\y
  virtual Code rcomplement(const Code& x, const Code& y) const = 0;  ///< y/x, (y/x) x = rlcm
  /// Whether the normal form given letter by letter (each as atoms) is the
  /// model's normal form of x.  The default only compares values.
  virtual bool is_normal_form_of(const Code& x, const std::vector<std::vector<int>>& letters) const;
  virtual std::string show(const Code& x) const;
};

/// braid:n (2 <= n <= 7), abelian:k, wreath.  DomainError otherwise.
std::unique_ptr<Model> make_model(const std::string& spec);

}  // namespace garside::verify
