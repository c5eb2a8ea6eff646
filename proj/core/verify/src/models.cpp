#include "garside/verify/models.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>

#include "garside/error.hpp"

namespace garside::verify {

bool Model::is_normal_form_of(const Code& x, const std::vector<std::vector<int>>& letters) const {
  std::vector<int> all;
  for (const auto& l : letters) all.insert(all.end(), l.begin(), l.end());
  return eval(all) == x;
}

std::string Model::show(const Code& x) const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
  os << ")";
  return os.str();
}

namespace {

std::vector<int> indexed_atoms(const std::string& name, char prefix) {
  std::vector<int> out;
  if (name == "1") return out;
  std::size_t i = 0;
  while (i < name.size()) {
    if (name[i] != prefix) throw DomainError("cannot read simple '" + name + "'");
    std::size_t j = i + 1;
    while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
    if (j == i + 1) throw DomainError("cannot read simple '" + name + "'");
    out.push_back(std::stoi(name.substr(i + 1, j - i - 1)) - 1);
    i = j;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Positive braids.  A simple braid is a permutation in one-line notation;
// right multiplication by s_i swaps positions i, i+1, left multiplication
// swaps the values i, i+1.

using Perm = std::vector<int>;

class BraidModel : public Model {
 public:
  explicit BraidModel(int n) : n_(n) {}

  int num_atoms() const override { return n_ - 1; }
  std::string atom_name(int i) const override { return "s" + std::to_string(i + 1); }
  std::vector<int> parse_simple(const std::string& name) const override { return indexed_atoms(name, 's'); }

  // Code: the perms of the left normal form (Delta factors first), flattened.
  Code eval(const std::vector<int>& atoms) const override {
    std::vector<Perm> factors;
    for (int a : atoms) factors.push_back(atom(a));
    return encode(normalise(std::move(factors)));
  }
  int length(const Code& x) const override {
    int total = 0;
    for (const Perm& p : decode(x)) total += inversions(p);
    return total;
  }
  Code mul(const Code& x, const Code& y) const override { return eval(cat(word(x), word(y))); }
  bool divides(const Code& x, const Code& y) const override { return reverse(word(y), word(x)).first.empty(); }
  bool rdivides(const Code& x, const Code& y) const override {
    return reverse(backwards(word(y)), backwards(word(x))).first.empty();
  }
  Code lcm(const Code& x, const Code& y) const override { return eval(cat(word(x), reverse(word(x), word(y)).first)); }
  Code rlcm(const Code& x, const Code& y) const override { return mul(rcomplement(x, y), x); }
  Code complement(const Code& x, const Code& y) const override { return eval(reverse(word(x), word(y)).first); }
  Code rcomplement(const Code& x, const Code& y) const override {
    return eval(backwards(reverse(backwards(word(x)), backwards(word(y))).first));
  }
  bool is_normal_form_of(const Code& x, const std::vector<std::vector<int>>& letters) const override {
    std::vector<Perm> perms;
    for (const auto& l : letters) {
      Perm p = identity();
      for (int a : l) p = right_mul(p, a);
      perms.push_back(p);
    }
    return encode(perms) == x;
  }

 private:
  Perm identity() const {
    Perm p(n_);
    std::iota(p.begin(), p.end(), 0);
    return p;
  }
  Perm atom(int i) const { return right_mul(identity(), i); }
  static Perm right_mul(Perm p, int i) {
    std::swap(p[i], p[i + 1]);
    return p;
  }
  static Perm left_mul(Perm p, int i) {
    for (int& v : p) {
      if (v == i) v = i + 1;
      else if (v == i + 1) v = i;
    }
    return p;
  }
  static int inversions(const Perm& p) {
    int c = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) c += p[i] > p[j];
    return c;
  }
  // i is a right descent: the braid can end with s_i.
  static bool finishes_with(const Perm& p, int i) { return p[i] > p[i + 1]; }
  // i is a left descent: the braid can start with s_i.
  static bool starts_with(const Perm& p, int i) {
    auto pos = [&](int v) { return std::find(p.begin(), p.end(), v) - p.begin(); };
    return pos(i) > pos(i + 1);
  }
  bool is_identity(const Perm& p) const { return p == identity(); }
  bool is_delta(const Perm& p) const { return inversions(p) == n_ * (n_ - 1) / 2; }

  // Slides atoms leftwards until every adjacent pair (A, B) has
  // Start(B) inside Finish(A), then drops identity factors.
  std::vector<Perm> normalise(std::vector<Perm> f) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t k = 0; k + 1 < f.size(); ++k) {
        for (int i = 0; i + 1 < n_; ++i) {
          if (starts_with(f[k + 1], i) && !finishes_with(f[k], i)) {
            f[k] = right_mul(f[k], i);
            f[k + 1] = left_mul(f[k + 1], i);
            changed = true;
            i = -1;
          }
        }
      }
    }
    std::vector<Perm> out;
    for (Perm& p : f) {
      if (!is_identity(p)) out.push_back(std::move(p));
    }
    return out;
  }
  Code encode(const std::vector<Perm>& f) const {
    Code c;
    for (const Perm& p : f) c.insert(c.end(), p.begin(), p.end());
    return c;
  }
  std::vector<Perm> decode(const Code& c) const {
    std::vector<Perm> f;
    for (std::size_t i = 0; i < c.size(); i += n_) f.emplace_back(c.begin() + i, c.begin() + i + n_);
    return f;
  }
  // A reduced word of each factor, by bubble sort.
  std::vector<int> word(const Code& c) const {
    std::vector<int> w;
    for (Perm p : decode(c)) {
      std::vector<int> rev;
      for (bool again = true; again;) {
        again = false;
        for (int i = 0; i + 1 < n_; ++i) {
          if (finishes_with(p, i)) {
            p = right_mul(p, i);
            rev.push_back(i);
            again = true;
          }
        }
      }
      w.insert(w.end(), rev.rbegin(), rev.rend());
    }
    return w;
  }
  static std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }
  static std::vector<int> backwards(std::vector<int> a) {
    std::reverse(a.begin(), a.end());
    return a;
  }
  // Complement of the Artin presentation: a (a\b) = b (b\a).
  static std::vector<int> f(int a, int b) {
    if (a == b) return {};
    if (std::abs(a - b) == 1) return {b, a};
    return {b};
  }
  // Right reversing: returns (u\v, v\u).
  static std::pair<std::vector<int>, std::vector<int>> reverse(const std::vector<int>& u, const std::vector<int>& v) {
    if (u.empty()) return {v, {}};
    if (v.empty()) return {{}, u};
    if (u.size() == 1 && v.size() == 1) return {f(u[0], v[0]), f(v[0], u[0])};
    if (u.size() > 1) {
      auto [a1, b1] = reverse({u[0]}, v);
      auto [a2, b2] = reverse(std::vector<int>(u.begin() + 1, u.end()), a1);
      return {a2, cat(b1, b2)};
    }
    auto [a1, b1] = reverse(u, {v[0]});
    auto [a2, b2] = reverse(b1, std::vector<int>(v.begin() + 1, v.end()));
    return {cat(a1, a2), b2};
  }

  int n_;
};

// ---------------------------------------------------------------------------

class VectorModel : public Model {
 public:
  explicit VectorModel(int k) : k_(k) {}
  int num_atoms() const override { return k_; }
  std::string atom_name(int i) const override { return "e" + std::to_string(i + 1); }
  std::vector<int> parse_simple(const std::string& name) const override { return indexed_atoms(name, 'e'); }
  Code eval(const std::vector<int>& atoms) const override {
    Code v(k_, 0);
    for (int a : atoms) ++v[a];
    return v;
  }
  int length(const Code& x) const override { return std::accumulate(x.begin(), x.end(), 0); }
  Code mul(const Code& x, const Code& y) const override { return zip(x, y, [](int a, int b) { return a + b; }); }
  bool divides(const Code& x, const Code& y) const override {
    for (int i = 0; i < k_; ++i) {
      if (x[i] > y[i]) return false;
    }
    return true;
  }
  bool rdivides(const Code& x, const Code& y) const override { return divides(x, y); }
  Code lcm(const Code& x, const Code& y) const override { return zip(x, y, [](int a, int b) { return std::max(a, b); }); }
  Code rlcm(const Code& x, const Code& y) const override { return lcm(x, y); }
  Code complement(const Code& x, const Code& y) const override {
    return zip(x, y, [](int a, int b) { return std::max(a, b) - a; });
  }
  Code rcomplement(const Code& x, const Code& y) const override { return complement(x, y); }
  // Normal form: factor i is the set of coordinates that are at least i.
  bool is_normal_form_of(const Code& x, const std::vector<std::vector<int>>& letters) const override {
    int top = x.empty() ? 0 : *std::max_element(x.begin(), x.end());
    if (static_cast<int>(letters.size()) != top) return false;
    for (int i = 0; i < top; ++i) {
      std::vector<int> want;
      for (int j = 0; j < k_; ++j) {
        if (x[j] > i) want.push_back(j);
      }
      std::vector<int> got = letters[i];
      std::sort(got.begin(), got.end());
      if (got != want) return false;
    }
    return true;
  }

 private:
  template <class F>
  Code zip(const Code& x, const Code& y, F f) const {
    Code z(k_);
    for (int i = 0; i < k_; ++i) z[i] = f(x[i], y[i]);
    return z;
  }
  int k_;
};

// ---------------------------------------------------------------------------
// Code (x, y, e): a^x b^y c^e up to the relations; c swaps a and b.

class WreathModel : public Model {
 public:
  int num_atoms() const override { return 3; }
  std::string atom_name(int i) const override { return std::string(1, static_cast<char>('a' + i)); }
  std::vector<int> parse_simple(const std::string& name) const override {
    std::vector<int> out;
    if (name == "1") return out;
    for (char ch : name) {
      if (ch < 'a' || ch > 'c') throw DomainError("cannot read simple '" + name + "'");
      out.push_back(ch - 'a');
    }
    return out;
  }
  Code eval(const std::vector<int>& atoms) const override {
    Code x{0, 0, 0};
    for (int a : atoms) {
      Code g{a == 0, a == 1, a == 2};
      x = mul(x, g);
    }
    return x;
  }
  int length(const Code& x) const override { return x[0] + x[1] + x[2]; }
  Code mul(const Code& x, const Code& y) const override {
    Code w = swap(y, x[2]);
    return {x[0] + w[0], x[1] + w[1], x[2] + y[2]};
  }
  bool divides(const Code& x, const Code& y) const override { return x[0] <= y[0] && x[1] <= y[1] && x[2] <= y[2]; }
  bool rdivides(const Code& x, const Code& y) const override {
    int d = y[2] - x[2];
    if (d < 0) return false;
    Code s = swap(x, d);
    return s[0] <= y[0] && s[1] <= y[1];
  }
  Code lcm(const Code& x, const Code& y) const override {
    return {std::max(x[0], y[0]), std::max(x[1], y[1]), std::max(x[2], y[2])};
  }
  Code complement(const Code& x, const Code& y) const override {
    Code m = lcm(x, y);
    Code v = swap({m[0] - x[0], m[1] - x[1], 0}, x[2]);
    return {v[0], v[1], m[2] - x[2]};
  }
  Code rlcm(const Code& x, const Code& y) const override {
    int f = std::max(x[2], y[2]);
    Code sx = swap(x, f - x[2]), sy = swap(y, f - y[2]);
    return {std::max(sx[0], sy[0]), std::max(sx[1], sy[1]), f};
  }
  Code rcomplement(const Code& x, const Code& y) const override {
    Code m = rlcm(x, y);
    int d = m[2] - x[2];
    Code s = swap(x, d);
    return {m[0] - s[0], m[1] - s[1], d};
  }

 private:
  static Code swap(const Code& v, int e) { return e % 2 ? Code{v[1], v[0], v[2]} : v; }
};

}  // namespace

std::unique_ptr<Model> make_model(const std::string& spec) {
  std::smatch m;
  if (std::regex_match(spec, m, std::regex(R"(braid:(\d+))"))) {
    int n = std::stoi(m[1]);
    if (n >= 2 && n <= 7) return std::make_unique<BraidModel>(n);
  } else if (std::regex_match(spec, m, std::regex(R"(abelian:(\d+))"))) {
    int k = std::stoi(m[1]);
    if (k >= 1 && k <= 10) return std::make_unique<VectorModel>(k);
  } else if (spec == "wreath") {
    return std::make_unique<WreathModel>();
  }
  throw DomainError("no explicit model for germ '" + spec + "' (use braid:n, abelian:k or wreath)");
}

}  // namespace garside::verify
