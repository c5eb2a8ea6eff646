#include "garside/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "garside/automata.hpp"
#include "garside/builtins.hpp"
#include "garside/normal_forms.hpp"
#include "garside/quasicenter.hpp"
#include "garside/verify/models.hpp"
#include "garside/verify/suites.hpp"
#include "garside/word_io.hpp"
#include "garside/zappa_szep.hpp"

namespace garside::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Args {
  std::string germ;
  std::vector<std::string> left;
  bool left_given = false;
  std::vector<std::string> words;
  bool right = false;
  std::string op;
  std::string g, h;
  std::string lang = "K";
  std::string variant = "proper";
  std::string format = "dot";
  std::size_t n = 0;
  std::string suite;
  std::uint64_t max_len = 4;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
};

std::string braces(const Germ& k, const std::vector<SimpleId>& s) { return "{" + format_set(k, s) + "}"; }

Element element(const Germ& k, const std::string& w) { return Element::from_word(k, parse_word(k, w)); }

std::vector<SimpleId> left_atoms(const Germ& k, const Args& a) {
  std::vector<SimpleId> out;
  for (const std::string& name : a.left) out.push_back(k.require(name));
  return out;
}

ZSStructure structure(const Germ& k, const Args& a) {
  if (!a.left_given) throw UsageError("--left is required for this subcommand");
  return ZSStructure::build(k, left_atoms(k, a));
}

// A word given for one factor, brought into its normal form.
Word factor_word(const ZSStructure& zs, Side side, const std::string& text) {
  const Germ& k = zs.germ();
  Element x = element(k, text);
  if (!zs.member(side, x)) {
    throw DomainError("'" + text + "' is not in " + (side == Side::G ? "G" : "H"));
  }
  return x.word(k);
}

int cmd_validate(const Args& a, std::ostream& out) {
  ValidationReport report;
  if (a.germ.starts_with("file:")) {
    std::ifstream in(a.germ.substr(5));
    if (!in) throw DomainError("cannot read " + a.germ.substr(5));
    std::ostringstream ss;
    ss << in.rdbuf();
    report = validate(parse_germ_data(ss.str()));
  } else {
    report = validate(germ_from_spec(a.germ));
  }
  out << report.to_string();
  out << "valid: " << (report.ok() ? "true" : "false") << '\n';
  return report.ok() ? kOk : kDomainError;
}

int cmd_binary(const std::string& name, const Germ& k, const Args& a, std::ostream& out) {
  Element x = element(k, a.words[0]), y = element(k, a.words[1]);
  if (name == "divides") {
    bool d = a.right ? right_divides(k, x, y) : divides(k, x, y);
    out << (d ? "true" : "false") << '\n';
    return kOk;
  }
  Element r = name == "gcd" ? (a.right ? rgcd(k, x, y) : gcd(k, x, y)) : (a.right ? rlcm(k, x, y) : lcm(k, x, y));
  out << format_element(k, r) << '\n';
  return kOk;
}

int cmd_decompose(const Germ& k, const Args& a, std::ostream& out) {
  ZSStructure zs = structure(k, a);
  const SimpleId dg = zs.delta_g(), dh = zs.delta_h();
  out << "G atoms: " << braces(k, zs.left_atoms()) << '\n';
  out << "H atoms: " << braces(k, zs.right_atoms()) << '\n';
  out << "Delta_G: " << k.name(dg) << '\n';
  out << "Delta_H: " << k.name(dh) << '\n';
  out << "Delta: " << k.name(k.delta()) << '\n';
  out << "Delta_G*Delta_H = Delta: " << (k.product(dg, dh) == k.delta() ? "true" : "false") << '\n';
  out << "Delta_H*Delta_G = Delta: " << (k.product(dh, dg) == k.delta() ? "true" : "false") << '\n';
  for (Side side : {Side::G, Side::H}) {
    const Germ& f = zs.factor_germ(side);
    const char* tag = side == Side::G ? "G" : "H";
    for (SimpleId atom : side == Side::G ? zs.left_atoms() : zs.right_atoms()) {
      SimpleId local = zs.from_factor(side, delta_of_simple(f, zs.to_factor(side, atom)));
      out << "Delta_" << k.name(atom) << " in " << tag << ": " << k.name(local) << '\n';
    }
  }
  out << "verified: true\n";
  return kOk;
}

int cmd_act(const Germ& k, const Args& a, std::ostream& out) {
  ZSStructure zs = structure(k, a);
  Word g = factor_word(zs, Side::G, a.g), h = factor_word(zs, Side::H, a.h);
  Word r;
  if (a.op == "rr") r = zs.act_rr(h, g);
  else if (a.op == "rl") r = zs.act_rl(h, g);
  else if (a.op == "lr") r = zs.act_lr(g, h);
  else if (a.op == "ll") r = zs.act_ll(g, h);
  else if (a.op == "rr-inv") r = zs.act_rr_inv(h, g);
  else if (a.op == "rl-inv") r = zs.act_rl_inv(h, g);
  else if (a.op == "lr-inv") r = zs.act_lr_inv(g, h);
  else r = zs.act_ll_inv(g, h);
  out << format_element(k, Element::from_word(k, r)) << '\n';
  return kOk;
}

NFAutomaton automaton(const Germ& k, const Args& a) {
  AutomatonVariant v = a.variant == "full" ? AutomatonVariant::full : AutomatonVariant::proper;
  if (a.lang == "K") return build_nf_automaton(k, v);
  ZSStructure zs = structure(k, a);
  return build_nf_automaton(zs.factor_germ(a.lang == "G" ? Side::G : Side::H), v);
}

int cmd_check(const Germ& k, const Args& a, std::ostream& out) {
  verify::SuiteOptions opt;
  opt.max_length = a.max_len;
  opt.samples = a.samples;
  opt.seed = a.seed;
  std::optional<ZSStructure> zs;
  if (a.left_given) zs = ZSStructure::build(k, left_atoms(k, a));

  std::vector<std::string> names;
  if (a.suite == "all") {
    names = verify::suite_names();
  } else {
    if (verify::suite_needs_structure(a.suite) && !zs) throw UsageError("suite " + a.suite + " needs --left");
    names.push_back(a.suite);
  }
  bool ok = true;
  for (const std::string& name : names) {
    if (verify::suite_needs_structure(name) && !zs) {
      out << name << ": skipped (no --left)\n";
      continue;
    }
    if (name == "oracle" && a.suite == "all") {
      try {
        verify::make_model(a.germ);
      } catch (const DomainError&) {
        out << name << ": skipped (no explicit model)\n";
        continue;
      }
    }
    verify::CheckReport r = verify::run_suite(name, a.germ, k, zs ? &*zs : nullptr, opt);
    out << r.summary() << '\n';
    ok = ok && r.ok();
  }
  return ok ? kOk : kDomainError;
}

int dispatch(const std::string& cmd, const Args& a, std::ostream& out) {
  if (cmd == "validate") return cmd_validate(a, out);
  const Germ k = germ_from_spec(a.germ);
  if (cmd == "nf") {
    out << format_element(k, element(k, a.words[0])) << '\n';
  } else if (cmd == "gcd" || cmd == "lcm" || cmd == "divides") {
    return cmd_binary(cmd, k, a, out);
  } else if (cmd == "deltas") {
    for (SimpleId atom : k.atoms()) out << k.name(atom) << " -> " << k.name(delta_of_simple(k, atom)) << '\n';
  } else if (cmd == "classes") {
    AtomClassPartition p = atom_classes(k);
    for (std::size_t i = 0; i < p.size(); ++i) out << braces(k, p.classes[i]) << " -> " << k.name(p.class_delta[i]) << '\n';
  } else if (cmd == "pure") {
    AtomClassPartition p = atom_classes(k);
    out << "delta-pure: " << (p.size() <= 1 ? "true" : "false") << '\n';
    out << "classes: " << p.size() << '\n';
  } else if (cmd == "decompose") {
    return cmd_decompose(k, a, out);
  } else if (cmd == "gh" || cmd == "hg") {
    ZSStructure zs = structure(k, a);
    Element x = element(k, a.words[0]);
    auto [first, second] = cmd == "gh" ? zs.gh_decompose(x) : zs.hg_decompose(x);
    out << cmd[0] << ": " << format_element(k, first) << '\n';
    out << cmd[1] << ": " << format_element(k, second) << '\n';
  } else if (cmd == "act") {
    return cmd_act(k, a, out);
  } else if (cmd == "split-nf") {
    ZSStructure zs = structure(k, a);
    NFPair p = split_nf(zs, element(k, a.words[0]).nf());
    out << "g: " << format_word(k, p.g) << '\n';
    out << "h: " << format_word(k, p.h) << '\n';
  } else if (cmd == "merge-nf") {
    ZSStructure zs = structure(k, a);
    NFPair p{factor_word(zs, Side::G, a.words[0]), factor_word(zs, Side::H, a.words[1])};
    out << format_normal(k, merge_nf(zs, p)) << '\n';
  } else if (cmd == "automaton") {
    out << export_automaton(automaton(k, a), a.format == "tsv" ? ExportFormat::tsv : ExportFormat::dot);
  } else if (cmd == "count") {
    out << count_accepted(automaton(k, a), a.n) << '\n';
  } else if (cmd == "check") {
    return cmd_check(k, a, out);
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite Garside structures and their Zappa-Szep decompositions", "garside"};
  app.require_subcommand(1);
  // act takes --h, so help is long-form only.
  app.set_help_flag("--help", "print this help");
  Args a;

  auto germ = [&](CLI::App* s) {
    s->add_option("--germ", a.germ, "braid:N, abelian:K, wreath, prod:A,B or file:PATH")->required();
  };
  auto left = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--left", a.left, "atoms generating G")->delimiter(',');
    if (required) o->required();
  };
  auto words = [&](CLI::App* s, std::size_t n, const char* what) {
    s->add_option("words", a.words, what)->required()->expected(static_cast<int>(n));
  };
  auto automaton_opts = [&](CLI::App* s) {
    germ(s);
    left(s, false);
    s->add_option("--lang", a.lang, "K, G or H")->check(CLI::IsMember({"K", "G", "H"}));
    s->add_option("--variant", a.variant, "proper or full")->check(CLI::IsMember({"proper", "full"}));
  };

  germ(app.add_subcommand("validate", "check the germ axioms"));
  auto* nf = app.add_subcommand("nf", "left normal form of a word");
  germ(nf);
  words(nf, 1, "word, letters separated by '.'");
  for (const char* name : {"gcd", "lcm", "divides"}) {
    auto* s = app.add_subcommand(name, std::string(name) + " of two elements (prefix order unless --right)");
    germ(s);
    words(s, 2, "two words");
    s->add_flag("--right", a.right, "use the suffix order");
  }
  germ(app.add_subcommand("deltas", "local Delta of every atom"));
  germ(app.add_subcommand("classes", "atom classes and their Deltas"));
  germ(app.add_subcommand("pure", "whether Delta is pure"));
  auto* dec = app.add_subcommand("decompose", "build the decomposition with G generated by --left");
  germ(dec);
  left(dec, true);
  for (const char* name : {"gh", "hg"}) {
    auto* s = app.add_subcommand(name, std::string("factor an element as ") + name);
    germ(s);
    left(s, true);
    words(s, 1, "word");
  }
  auto* act = app.add_subcommand("act", "apply an action between the factors");
  germ(act);
  left(act, true);
  act->add_option("--op", a.op, "rr (h|>g), rl (h<|g), lr (g>>h), ll (g<<h), or with -inv")
      ->required()
      ->check(CLI::IsMember({"rr", "rl", "lr", "ll", "rr-inv", "rl-inv", "lr-inv", "ll-inv"}));
  act->add_option("--g", a.g, "word in G")->required();
  act->add_option("--h", a.h, "word in H")->required();
  auto* split = app.add_subcommand("split-nf", "normal form of K to a pair of factor normal forms");
  germ(split);
  left(split, true);
  words(split, 1, "word");
  auto* merge = app.add_subcommand("merge-nf", "pair of factor normal forms to the normal form in K");
  germ(merge);
  left(merge, true);
  words(merge, 2, "G word and H word");
  auto* aut = app.add_subcommand("automaton", "normal-form automaton");
  automaton_opts(aut);
  aut->add_option("--format", a.format, "dot or tsv")->check(CLI::IsMember({"dot", "tsv"}));
  auto* count = app.add_subcommand("count", "number of normal words of n letters");
  automaton_opts(count);
  count->add_option("--n", a.n, "word length")->required();
  auto* check = app.add_subcommand("check", "run a property suite");
  germ(check);
  left(check, false);
  std::vector<std::string> suites = verify::suite_names();
  suites.push_back("all");
  check->add_option("--suite", a.suite, "suite name or all")->required()->check(CLI::IsMember(suites));
  check->add_option("--max-len", a.max_len, "atom-length bound")->check(CLI::Range(0, 8));
  check->add_option("--samples", a.samples, "random cases per word identity");
  check->add_option("--seed", a.seed, "random seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\nrun with --help for usage\n";
    return kUsageError;
  }

  CLI::App* sub = app.get_subcommands().front();
  for (const CLI::Option* o : sub->get_options()) {
    if (o->get_name() == "--left") a.left_given = o->count() > 0;
  }
  try {
    return dispatch(sub->get_name(), a, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
}

}  // namespace garside::cli
