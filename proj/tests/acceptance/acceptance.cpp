// Runs the acceptance criteria and prints one line per criterion.  Exit code
// is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "garside/builtins.hpp"
#include "garside/cli.hpp"
#include "garside/quasicenter.hpp"
#include "garside/verify/suites.hpp"
#include "garside/word_io.hpp"
#include "garside/zappa_szep.hpp"

namespace {

using namespace garside;

// Collects failure notes for one criterion.
struct Notes {
  std::vector<std::string> lines;
  std::uint64_t cases = 0;
  void require(bool ok, const std::string& what) {
    ++cases;
    if (!ok) lines.push_back(what);
  }
  void report(const verify::CheckReport& r, const std::string& where) {
    cases += r.cases;
    if (r.cases == 0) lines.push_back(where + ": " + r.name + " ran no cases");
    if (!r.ok()) {
      lines.push_back(where + ": " + r.summary());
    }
  }
};

std::string cli_out(std::vector<std::string> args, int* code = nullptr) {
  std::ostringstream out, err;
  int c = cli::run(args, out, err);
  if (code) *code = c;
  return out.str();
}

struct Decomposable {
  const char* spec;
  std::vector<const char*> left;
};

// The decomposable built-ins used by the suite criteria.
const std::vector<Decomposable> kSuiteGerms = {
    {"wreath", {"a", "b"}},
    {"abelian:3", {"e1"}},
    {"prod:braid:3,abelian:1", {"s1", "s2"}},
};

const std::vector<Decomposable> kProductGerms = {
    {"prod:braid:3,braid:3", {"s1", "s2"}},
    {"prod:braid:4,abelian:1", {"s1", "s2", "s3"}},
};

ZSStructure build(const Germ& k, const std::vector<const char*>& left) {
  std::vector<SimpleId> atoms;
  for (const char* n : left) atoms.push_back(k.require(n));
  return ZSStructure::build(k, atoms);
}

// Every bipartition of the atom classes into two non-empty unions.
std::vector<std::vector<SimpleId>> bipartitions(const Germ& k) {
  AtomClassPartition p = atom_classes(k);
  std::vector<std::vector<SimpleId>> out;
  const std::size_t m = p.size();
  for (std::size_t mask = 1; m < 20 && mask + 1 < (std::size_t{1} << m); ++mask) {
    std::vector<SimpleId> left;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) left.insert(left.end(), p.classes[i].begin(), p.classes[i].end());
    }
    out.push_back(left);
  }
  return out;
}

void suite_on(Notes& n, const std::string& suite, const Decomposable& d, const verify::SuiteOptions& opt) {
  Germ k = germ_from_spec(d.spec);
  ZSStructure zs = build(k, d.left);
  n.report(verify::run_suite(suite, d.spec, k, &zs, opt), d.spec);
}

void criterion1(Notes& n) {
  n.require(cli_out({"classes", "--germ", "wreath"}) == "{a,b} -> ab\n{c} -> c\n", "classes output");
  std::string deltas = cli_out({"deltas", "--germ", "wreath"});
  n.require(deltas.find("a -> ab\n") != std::string::npos, "Delta_a in K is not ab");
  std::string dec = cli_out({"decompose", "--germ", "wreath", "--left", "a,b"});
  for (const char* line : {"Delta_G: ab\n", "Delta_H: c\n", "Delta_G*Delta_H = Delta: true\n", "Delta_a in G: a\n",
                           "verified: true\n"}) {
    n.require(dec.find(line) != std::string::npos, std::string("decompose lacks ") + line);
  }
}

void criterion2(Notes& n) {
  for (const char* spec : {"braid:3", "braid:4"}) {
    n.require(cli_out({"pure", "--germ", spec}) == "delta-pure: true\nclasses: 1\n", std::string(spec) + " not pure");
  }
  for (int k = 1; k <= 10; ++k) {
    std::string want = std::string("delta-pure: ") + (k == 1 ? "true" : "false") + "\nclasses: " + std::to_string(k) + "\n";
    std::string spec = "abelian:" + std::to_string(k);
    n.require(cli_out({"pure", "--germ", spec}) == want, spec + " class count");
  }
}

void criterion3(Notes& n) {
  verify::SuiteOptions opt;
  opt.max_length = 4;
  opt.samples = 1000;
  for (const auto& d : kSuiteGerms) suite_on(n, "action-identities", d, opt);
}

void criterion4(Notes& n) {
  std::vector<std::string> specs = {"wreath", "abelian:2", "abelian:3", "abelian:4", "abelian:5",
                                    "prod:braid:3,abelian:1", "prod:braid:3,braid:3", "prod:braid:4,abelian:1",
                                    "prod:wreath,abelian:1", "prod:abelian:1,braid:3"};
  for (const std::string& spec : specs) {
    Germ k = germ_from_spec(spec);
    for (const auto& left : bipartitions(k)) {
      ZSStructure zs = ZSStructure::build(k, left);
      n.report(verify::check_nf_criteria(zs), spec + " left " + format_set(k, left));
    }
  }
}

void criterion5(Notes& n) {
  verify::SuiteOptions opt;
  opt.max_length = 5;
  for (const auto& d : kSuiteGerms) suite_on(n, "algorithms", d, opt);
  for (const auto& d : kProductGerms) suite_on(n, "algorithms", d, opt);
}

void criterion6(Notes& n) {
  verify::SuiteOptions opt;
  opt.max_length = 5;
  for (const auto& d : kSuiteGerms) suite_on(n, "bijections", d, opt);
  for (const auto& d : kProductGerms) suite_on(n, "bijections", d, opt);
}

void criterion7(Notes& n) {
  verify::SuiteOptions opt;
  opt.max_length = 6;
  for (const auto& d : kSuiteGerms) suite_on(n, "automata", d, opt);
  for (const auto& d : kProductGerms) suite_on(n, "automata", d, opt);
}

void criterion8(Notes& n) {
  verify::SuiteOptions opt;
  opt.max_length = 4;
  for (const char* spec : {"braid:3", "braid:4", "abelian:1", "abelian:2", "abelian:3", "abelian:4", "wreath"}) {
    n.report(verify::check_oracle(spec, opt), spec);
  }
}

void criterion9(Notes& n) {
  Germ k = wreath_germ();
  Element x = Element::from_word(k, parse_word(k, "a.a.b.c"));
  n.require(x == Element::from_word(k, parse_word(k, "c.a.b.b")), "a.a.b.c != c.a.b.b");
  BalanceCheck r = check_balanced(k, x);
  n.require(!r.balanced && r.witness.has_value(), "a.a.b.c reported balanced");
  if (r.witness) {
    // The witness must really be on one side only.
    bool pre = divides(k, *r.witness, x), suf = right_divides(k, *r.witness, x);
    n.require(pre != suf, "witness " + format_element(k, *r.witness) + " divides on both sides");
  }
  // a.a.b itself is balanced inside G.
  ZSStructure zs = build(k, {"a", "b"});
  const Germ& g = zs.factor_germ(Side::G);
  Word w = zs.to_factor(Side::G, parse_word(k, "a.a.b"));
  n.require(check_balanced(g, Element::from_word(g, w)).balanced, "a.a.b not balanced in G");
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;
  std::function<void(Notes&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "wreath example fidelity", 1, criterion1},
      {2, "indecomposability", 1, criterion2},
      {3, "action identities", 30, criterion3},
      {4, "normal-form criteria", 30, criterion4},
      {5, "split/merge algorithms", 60, criterion5},
      {6, "bijections", 60, criterion6},
      {7, "automata", 30, criterion7},
      {8, "oracle ground truth", 60, criterion8},
      {9, "negative fixture", 1, criterion9},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    Notes notes;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(notes);
    } catch (const std::exception& e) {
      notes.lines.push_back(std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s >= c.limit_s) notes.lines.push_back("took " + std::to_string(s) + " s");
    bool ok = notes.lines.empty();
    failed += ok ? 0 : 1;
    std::printf("criterion %d %-24s %s  %.3f s (limit %.0f s), %llu cases\n", c.id, c.title, ok ? "PASS" : "FAIL", s,
                c.limit_s, static_cast<unsigned long long>(notes.cases));
    for (const std::string& line : notes.lines) std::printf("    %s\n", line.c_str());
  }
  return failed;
}
