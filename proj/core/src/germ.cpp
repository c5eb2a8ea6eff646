#include "garside/germ.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace garside {

namespace detail {
struct GermAccess {
  static Germ make(std::shared_ptr<const GermTables> t) { return Germ(std::move(t), false); }
};
}  // namespace detail

namespace {

using detail::GermTables;
constexpr std::uint16_t kNone = GermTables::kNone;

bool valid_name(const std::string& name) {
  if (name.empty()) return false;
  for (unsigned char c : name) {
    if (c <= ' ' || c == '.' || c == '|' || c == '#') return false;
  }
  return true;
}

struct Reporter {
  ValidationReport report;

  // Returns false if the axiom failed.
  bool add(std::string_view axiom, const std::string& witness) {
    report.results.push_back({std::string(axiom), witness.empty() ? AxiomStatus::passed : AxiomStatus::failed, witness});
    return witness.empty();
  }
  void skip(std::string_view axiom) { report.results.push_back({std::string(axiom), AxiomStatus::skipped, {}}); }
};

class Analyzer {
 public:
  Analyzer(const GermData& d, Verify level) : d_(d), level_(level), n_(static_cast<std::uint32_t>(d.size())) {}

  ValidationReport run(std::shared_ptr<GermTables>* out);

 private:
  const std::string& nm(std::uint32_t s) const { return d_.names[s]; }
  std::int32_t p(std::uint32_t s, std::uint32_t t) const { return d_.product[std::size_t{s} * n_ + t]; }
  std::string prod_str(std::uint32_t s, std::uint32_t t, std::uint32_t u) const {
    return nm(s) + "*" + nm(t) + "=" + nm(u);
  }

  std::string check_identity();
  std::string check_cancellativity() const;
  std::string check_associativity() const;
  std::string check_complement(bool right, std::vector<std::uint16_t>& out) const;
  std::string check_balanced() const;
  std::string check_atoms();
  std::string build_meets(bool right, std::vector<std::uint16_t>& out) const;
  std::string check_lattice() const;
  void build_quotients(bool right, std::vector<std::uint16_t>& out) const;

  const GermData& d_;
  Verify level_;
  std::uint32_t n_;
  std::shared_ptr<GermTables> t_;
};

std::string Analyzer::check_identity() {
  if (n_ == 0) return "no simples";
  if (n_ >= kMaxSimples) return "too many simples (" + std::to_string(n_) + ")";
  if (d_.product.size() != std::size_t{n_} * n_) return "product table has wrong size";
  if (d_.names[0] != "1") return "simple 0 is '" + d_.names[0] + "', expected '1'";
  if (index(d_.delta) >= n_) return "delta out of range";
  std::unordered_map<std::string, std::uint32_t> seen;
  for (std::uint32_t s = 0; s < n_; ++s) {
    if (!valid_name(nm(s))) return "invalid name '" + nm(s) + "'";
    if (!seen.emplace(nm(s), s).second) return "duplicate name '" + nm(s) + "'";
  }
  for (std::uint32_t s = 0; s < n_; ++s) {
    for (std::uint32_t t = 0; t < n_; ++t) {
      std::int32_t u = p(s, t);
      if (u < -1 || u >= static_cast<std::int32_t>(n_)) return "product " + nm(s) + "*" + nm(t) + " out of range";
      if (u == 0 && (s != 0 || t != 0)) return prod_str(s, t, 0) + " (unit is not a product of non-units)";
    }
    if (p(0, s) != static_cast<std::int32_t>(s) || p(s, 0) != static_cast<std::int32_t>(s))
      return "1 is not a two-sided identity for " + nm(s);
  }
  if (n_ > 1 && d_.delta == kUnit) return "delta is the unit but there are other simples";
  return {};
}

std::string Analyzer::check_cancellativity() const {
  std::vector<std::int64_t> seen(n_, -1);
  for (std::uint32_t s = 0; s < n_; ++s) {
    std::fill(seen.begin(), seen.end(), -1);
    for (std::uint32_t t = 0; t < n_; ++t) {
      std::int32_t u = p(s, t);
      if (u < 0) continue;
      if (seen[u] >= 0)
        return "left: " + prod_str(s, static_cast<std::uint32_t>(seen[u]), u) + " and " + prod_str(s, t, u);
      seen[u] = t;
    }
  }
  for (std::uint32_t t = 0; t < n_; ++t) {
    std::fill(seen.begin(), seen.end(), -1);
    for (std::uint32_t s = 0; s < n_; ++s) {
      std::int32_t u = p(s, t);
      if (u < 0) continue;
      if (seen[u] >= 0)
        return "right: " + prod_str(static_cast<std::uint32_t>(seen[u]), t, u) + " and " + prod_str(s, t, u);
      seen[u] = s;
    }
  }
  return {};
}

std::string Analyzer::check_associativity() const {
  for (std::uint32_t s = 0; s < n_; ++s) {
    for (std::uint32_t t = 0; t < n_; ++t) {
      std::int32_t st = p(s, t);
      if (st < 0) continue;
      for (std::uint32_t u = 0; u < n_; ++u) {
        std::int32_t tu = p(t, u);
        std::int32_t left = p(st, u);
        std::int32_t right = tu < 0 ? -1 : p(s, tu);
        if (left != right) {
          std::string w = "(" + nm(s) + "*" + nm(t) + ")*" + nm(u) + " = " + (left < 0 ? "undefined" : nm(left));
          w += ", " + nm(s) + "*(" + nm(t) + "*" + nm(u) + ") = " + (right < 0 ? "undefined" : nm(right));
          return w;
        }
      }
    }
  }
  // (st)u undefined together with s(tu) defined is missed above when st is
  // undefined; cover it from the other side.
  for (std::uint32_t t = 0; t < n_; ++t) {
    for (std::uint32_t u = 0; u < n_; ++u) {
      std::int32_t tu = p(t, u);
      if (tu < 0) continue;
      for (std::uint32_t s = 0; s < n_; ++s) {
        if (p(s, tu) >= 0 && p(s, t) < 0) {
          return nm(s) + "*(" + nm(t) + "*" + nm(u) + ") defined but " + nm(s) + "*" + nm(t) + " undefined";
        }
      }
    }
  }
  return {};
}

std::string Analyzer::check_complement(bool right, std::vector<std::uint16_t>& out) const {
  const std::uint32_t delta = index(d_.delta);
  out.assign(n_, kNone);
  for (std::uint32_t s = 0; s < n_; ++s) {
    for (std::uint32_t t = 0; t < n_; ++t) {
      if ((right ? p(t, s) : p(s, t)) != static_cast<std::int32_t>(delta)) continue;
      if (out[s] != kNone) {
        return right ? nm(t) + "*" + nm(s) + " and " + nm(out[s]) + "*" + nm(s) + " both equal delta"
                     : nm(s) + "*" + nm(t) + " and " + nm(s) + "*" + nm(out[s]) + " both equal delta";
      }
      out[s] = static_cast<std::uint16_t>(t);
    }
    if (out[s] == kNone) {
      return right ? "no t with t*" + nm(s) + " = delta" : "no t with " + nm(s) + "*t = delta";
    }
  }
  std::vector<bool> hit(n_, false);
  for (std::uint32_t s = 0; s < n_; ++s) {
    if (hit[out[s]]) return "not injective: " + nm(out[s]) + " is the complement of two simples";
    hit[out[s]] = true;
  }
  return {};
}

std::string Analyzer::check_balanced() const {
  for (std::uint32_t s = 0; s < n_; ++s) {
    if (!t_->bit(t_->ldiv, index(d_.delta), s)) return nm(s) + " is not a prefix of delta";
    if (!t_->bit(t_->rdiv, index(d_.delta), s)) return nm(s) + " is not a suffix of delta";
  }
  return {};
}

std::string Analyzer::check_atoms() {
  GermTables& t = *t_;
  t.is_atom.assign(n_, false);
  for (std::uint32_t s = 1; s < n_; ++s) t.is_atom[s] = true;
  for (std::uint32_t s = 1; s < n_; ++s) {
    for (std::uint32_t u = 1; u < n_; ++u) {
      std::int32_t v = p(s, u);
      if (v > 0) t.is_atom[v] = false;
    }
  }
  t.atoms.clear();
  for (std::uint32_t s = 1; s < n_; ++s) {
    if (t.is_atom[s]) t.atoms.push_back(simple(s));
  }
  // Longest atom factorisation via a topological sweep of the graph
  // v -> a*v.  A cycle or an unreachable simple means atoms do not generate.
  std::vector<std::uint32_t> indeg(n_, 0);
  for (SimpleId a : t.atoms) {
    for (std::uint32_t v = 0; v < n_; ++v) {
      std::int32_t u = p(index(a), v);
      if (u >= 0) ++indeg[u];
    }
  }
  t.length.assign(n_, 0);
  std::deque<std::uint32_t> queue;
  std::vector<bool> done(n_, false);
  if (indeg[0] != 0) return "unit is a product of atoms";
  queue.push_back(0);
  std::uint32_t processed = 0;
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    done[v] = true;
    ++processed;
    for (SimpleId a : t.atoms) {
      std::int32_t u = p(index(a), v);
      if (u < 0) continue;
      t.length[u] = std::max(t.length[u], t.length[v] + 1);
      if (--indeg[u] == 0) queue.push_back(static_cast<std::uint32_t>(u));
    }
  }
  if (processed != n_) {
    for (std::uint32_t s = 0; s < n_; ++s) {
      if (!done[s]) return nm(s) + " is not a finite product of atoms";
    }
  }
  return {};
}

// Meets by peeling a common atom: s = a s', t = a t' gives s ^ t = a (s' ^ t').
std::string Analyzer::build_meets(bool right, std::vector<std::uint16_t>& out) const {
  const GermTables& t = *t_;
  const auto& div = right ? t.rdiv : t.ldiv;
  const std::size_t na = t.atoms.size();
  // q[k * n + s] = s' with atom_k * s' = s (or s' * atom_k = s).
  std::vector<std::uint16_t> q(na * n_, kNone);
  for (std::size_t k = 0; k < na; ++k) {
    std::uint32_t a = index(t.atoms[k]);
    for (std::uint32_t v = 0; v < n_; ++v) {
      std::int32_t u = right ? p(v, a) : p(a, v);
      if (u >= 0) q[k * n_ + u] = static_cast<std::uint16_t>(v);
    }
  }
  std::vector<std::uint32_t> order(n_);
  for (std::uint32_t s = 0; s < n_; ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return t.length[x] < t.length[y]; });

  out.assign(std::size_t{n_} * n_, kNone);
  for (std::uint32_t s : order) {
    for (std::uint32_t u = 0; u < n_; ++u) {
      std::uint16_t& m = out[t.at(s, u)];
      if (t.bit(div, u, s)) {
        m = static_cast<std::uint16_t>(s);
        continue;
      }
      if (t.bit(div, s, u)) {
        m = static_cast<std::uint16_t>(u);
        continue;
      }
      m = 0;
      for (std::size_t k = 0; k < na; ++k) {
        std::uint32_t a = index(t.atoms[k]);
        if (!t.bit(div, s, a) || !t.bit(div, u, a)) continue;
        std::uint16_t rest = out[t.at(q[k * n_ + s], q[k * n_ + u])];
        std::int32_t r = right ? p(rest, a) : p(a, rest);
        if (rest == kNone || r < 0) {
          return std::string(right ? "suffix" : "prefix") + " meet of " + nm(s) + " and " + nm(u) + " is not simple";
        }
        m = static_cast<std::uint16_t>(r);
        break;
      }
    }
  }
  return {};
}

std::string Analyzer::check_lattice() const {
  const GermTables& t = *t_;
  const std::size_t w = t.words;
  // up[s] = {u : s divides u}, the transpose of the divisor rows.
  auto transpose = [&](const std::vector<std::uint64_t>& rows) {
    std::vector<std::uint64_t> up(rows.size(), 0);
    for (std::uint32_t u = 0; u < n_; ++u) {
      for (std::uint32_t s = 0; s < n_; ++s) {
        if (t.bit(rows, u, s)) up[s * w + u / 64] |= std::uint64_t{1} << (u % 64);
      }
    }
    return up;
  };
  auto same = [&](const std::vector<std::uint64_t>& rows, std::uint32_t a, std::uint32_t b, std::uint32_t m) {
    for (std::size_t k = 0; k < w; ++k) {
      if ((rows[a * w + k] & rows[b * w + k]) != rows[m * w + k]) return false;
    }
    return true;
  };
  const Germ probe = detail::GermAccess::make(t_);
  for (bool right : {false, true}) {
    const auto& down = right ? t.rdiv : t.ldiv;
    const auto up = transpose(down);
    const Germ g = right ? probe.opposite() : probe;
    const char* order = right ? "suffix" : "prefix";
    for (std::uint32_t s = 0; s < n_; ++s) {
      for (std::uint32_t u = s + 1; u < n_; ++u) {
        std::uint32_t m = index(g.meet(simple(s), simple(u)));
        if (!same(down, s, u, m)) {
          return std::string(order) + " meet of " + nm(s) + " and " + nm(u) + ": common divisors have no maximum";
        }
        std::uint32_t j = index(g.join(simple(s), simple(u)));
        if (!same(up, s, u, j)) {
          return std::string(order) + " join of " + nm(s) + " and " + nm(u) + ": common multiples have no minimum";
        }
      }
    }
  }
  return {};
}

// lcomp[s][u] = v with s v = s v u (right: rcomp[s][u] = v with v s = join).
void Analyzer::build_quotients(bool right, std::vector<std::uint16_t>& out) const {
  Germ g = detail::GermAccess::make(t_);
  if (right) g = g.opposite();
  out.assign(std::size_t{n_} * n_, kNone);
  std::vector<std::uint16_t> quot(n_);
  for (std::uint32_t s = 0; s < n_; ++s) {
    std::fill(quot.begin(), quot.end(), kNone);
    for (std::uint32_t v = 0; v < n_; ++v) {
      std::int32_t u = right ? p(v, s) : p(s, v);
      if (u >= 0) quot[u] = static_cast<std::uint16_t>(v);
    }
    for (std::uint32_t u = 0; u < n_; ++u) {
      out[t_->at(s, u)] = quot[index(g.join(simple(s), simple(u)))];
    }
  }
}

ValidationReport Analyzer::run(std::shared_ptr<GermTables>* out) {
  Reporter r;
  auto skip_rest = [&](std::initializer_list<std::string_view> axioms) {
    for (auto a : axioms) r.skip(a);
    return r.report;
  };

  if (!r.add(axiom::identity, check_identity())) {
    return skip_rest({axiom::associativity, axiom::cancellativity, axiom::left_complement, axiom::right_complement,
                      axiom::balanced, axiom::atoms, axiom::lattice});
  }
  bool cancel_ok = r.add(axiom::cancellativity, check_cancellativity());
  if (level_ == Verify::full) {
    r.add(axiom::associativity, check_associativity());
  } else {
    r.skip(axiom::associativity);
  }

  t_ = std::make_shared<GermTables>();
  GermTables& t = *t_;
  t.n = n_;
  t.delta = index(d_.delta);
  t.names = d_.names;
  for (std::uint32_t s = 0; s < n_; ++s) t.by_name.emplace(t.names[s], s);
  t.words = (n_ + 63) / 64;
  t.product.resize(std::size_t{n_} * n_);
  t.ldiv.assign(n_ * t.words, 0);
  t.rdiv.assign(n_ * t.words, 0);
  for (std::uint32_t s = 0; s < n_; ++s) {
    for (std::uint32_t v = 0; v < n_; ++v) {
      std::int32_t u = p(s, v);
      t.product[t.at(s, v)] = u < 0 ? kNone : static_cast<std::uint16_t>(u);
      if (u < 0) continue;
      t.ldiv[u * t.words + s / 64] |= std::uint64_t{1} << (s % 64);
      t.rdiv[u * t.words + v / 64] |= std::uint64_t{1} << (v % 64);
    }
  }

  bool lc = r.add(axiom::left_complement, check_complement(false, t.complement));
  bool rc = r.add(axiom::right_complement, check_complement(true, t.rcomplement));
  r.add(axiom::balanced, check_balanced());
  bool atoms_ok = r.add(axiom::atoms, check_atoms());

  if (!(cancel_ok && lc && rc && atoms_ok)) {
    r.skip(axiom::lattice);
    return r.report;
  }
  std::string lattice = build_meets(false, t.meet);
  if (lattice.empty()) lattice = build_meets(true, t.rmeet);
  if (lattice.empty() && level_ != Verify::minimal) lattice = check_lattice();
  if (!r.add(axiom::lattice, lattice)) return r.report;

  if (r.report.ok()) {
    build_quotients(false, t.lcomp);
    build_quotients(true, t.rcomp);
    if (out) *out = t_;
  }
  return r.report;
}

}  // namespace

GermData GermData::with_names(std::vector<std::string> names, SimpleId delta) {
  GermData d;
  d.names = std::move(names);
  d.delta = delta;
  const std::size_t n = d.names.size();
  d.product.assign(n * n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    d.product[s] = static_cast<std::int32_t>(s);
    d.product[s * n] = static_cast<std::int32_t>(s);
  }
  return d;
}

std::optional<SimpleId> GermData::find(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return simple(static_cast<std::uint32_t>(i));
  }
  return std::nullopt;
}

std::optional<SimpleId> GermData::at(SimpleId s, SimpleId t) const {
  std::int32_t u = product[std::size_t{index(s)} * size() + index(t)];
  if (u < 0) return std::nullopt;
  return simple(static_cast<std::uint32_t>(u));
}

void GermData::set(SimpleId s, SimpleId t, SimpleId st) {
  product[std::size_t{index(s)} * size() + index(t)] = static_cast<std::int32_t>(index(st));
}

GermData GermData::transposed() const {
  GermData d = *this;
  const std::size_t n = size();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) d.product[s * n + t] = product[t * n + s];
  }
  return d;
}

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const AxiomResult* ValidationReport::first_failure() const {
  for (const auto& r : results) {
    if (r.status == AxiomStatus::failed) return &r;
  }
  return nullptr;
}

const AxiomResult* ValidationReport::find(std::string_view axiom) const {
  for (const auto& r : results) {
    if (r.axiom == axiom) return &r;
  }
  return nullptr;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& r : results) {
    os << r.axiom << ": ";
    switch (r.status) {
      case AxiomStatus::passed: os << "pass"; break;
      case AxiomStatus::failed: os << "FAIL (" << r.witness << ")"; break;
      case AxiomStatus::skipped: os << "skipped"; break;
    }
    os << '\n';
  }
  return os.str();
}

namespace {
std::string failure_message(const ValidationReport& report) {
  std::string msg = "germ validation failed";
  for (const auto& r : report.results) {
    if (r.status == AxiomStatus::failed) msg += "; " + r.axiom + ": " + r.witness;
  }
  return msg;
}
}  // namespace

GermValidationError::GermValidationError(ValidationReport report)
    : Error(failure_message(report)), report_(std::move(report)) {}

ValidationReport validate(const GermData& data, bool check_associativity) {
  return Analyzer(data, check_associativity ? Verify::full : Verify::quadratic).run(nullptr);
}

Germ::Germ(GermData data, Verify level) {
  std::shared_ptr<detail::GermTables> tables;
  ValidationReport report = Analyzer(data, level).run(&tables);
  if (!report.ok() || !tables) throw GermValidationError(std::move(report));
  t_ = std::move(tables);
}

std::optional<SimpleId> Germ::find(std::string_view name) const {
  auto it = t_->by_name.find(std::string(name));
  if (it == t_->by_name.end()) return std::nullopt;
  return simple(it->second);
}

SimpleId Germ::require(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw DomainError("unknown simple '" + std::string(name) + "'");
}

Germ Germ::opposite() const { return Germ(t_, !flipped_); }

GermData Germ::data() const {
  GermData d = GermData::with_names(t_->names, delta());
  for (std::uint32_t s = 0; s < t_->n; ++s) {
    for (std::uint32_t u = 0; u < t_->n; ++u) {
      if (auto st = product(simple(s), simple(u))) d.set(simple(s), simple(u), *st);
    }
  }
  return d;
}

ValidationReport validate(const Germ& g) { return validate(g.data(), true); }

}  // namespace garside
