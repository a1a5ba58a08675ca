#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "treehopf/arborification.hpp"
#include "treehopf/bck.hpp"
#include "treehopf/bseries.hpp"
#include "treehopf/hairer_kelly.hpp"
#include "treehopf/prelie.hpp"
#include "treehopf/qshuffle.hpp"
#include "treehopf/substitution.hpp"
#include "treehopf/textio.hpp"
#include "treehopf/verify.hpp"

namespace treehopf::cli {

namespace {

using nlohmann::json;

struct Globals {
  std::string format = "text";
  std::string semigroup_spec = "free";
  std::vector<std::string> alphabet = {"a", "b"};
};

Semigroup make_semigroup(const std::string& spec) {
  if (spec == "free") return Semigroup::free();
  if (spec == "additive") return Semigroup::additive();
  if (spec.starts_with("table:")) {
    const std::string path = spec.substr(6);
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--semigroup", "cannot open table file " + path);
    std::map<std::pair<std::string, std::string>, std::string> entries;
    std::string line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream ls(line);
      std::string a, b, eq, c;
      if (!(ls >> a)) continue;
      if (!(ls >> b >> eq >> c) || eq != "=") {
        throw CLI::ValidationError("--semigroup", "table lines must read 'a b = c'");
      }
      entries[{std::min(a, b), std::max(a, b)}] = c;
    }
    return Semigroup::table(std::move(entries));
  }
  throw CLI::ValidationError("--semigroup", "expected free, additive or table:<file>");
}

template <class B>
json lincomb_json(const LinComb<B>& x) {
  json terms = json::array();
  for (const auto& [b, c] : x.terms()) {
    terms.push_back({{"coeff", rat_str(c)}, {"basis", to_text(b)}});
  }
  return json{{"terms", terms}};
}

template <class B>
void emit(const Globals& g, std::ostream& out, const LinComb<B>& x) {
  if (g.format == "structured") {
    out << lincomb_json(x).dump() << "\n";
  } else {
    out << to_text(x) << "\n";
  }
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t split = text.find(',', start);
    std::string part =
        split == std::string::npos ? text.substr(start) : text.substr(start, split - start);
    if (!part.empty()) out.push_back(rat_parse(part));
    if (split == std::string::npos) break;
    start = split + 1;
  }
  return out;
}

TreeFunctional functional_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("--char", "cannot open character file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto values = parse_char_file(buf.str());
  return [values](const Tree& t) {
    auto it = values.find(t);
    if (it != values.end()) return it->second;
    return t.vertex_count() == 1 ? Rat(1) : Rat(0);
  };
}

void emit_verify(const Globals& g, std::ostream& out, std::ostream& err, const VerifyReport& rep) {
  if (g.format == "structured") {
    json failures = json::array();
    for (const auto& f : rep.failures) {
      failures.push_back({{"check", f.check}, {"counterexample", f.counterexample}});
    }
    out << json{{"suite", rep.suite},
                {"parameters", rep.parameters},
                {"checks_run", rep.checks_run},
                {"failures", failures},
                {"ok", rep.ok()}}
               .dump()
        << "\n";
  } else {
    out << "suite " << rep.suite << " [" << rep.parameters << "]\n";
    out << "checks run: " << rep.checks_run << "\n";
    for (const auto& f : rep.failures) {
      out << "FAIL " << f.check << ": counterexample " << f.counterexample << "\n";
    }
    out << (rep.ok() ? "PASS" : "FAIL") << "\n";
  }
  // wall time goes to stderr so stdout stays byte-identical across runs
  err << "suite " << rep.suite << " finished in " << rep.wall_seconds << " s\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computer algebra for tree Hopf algebras, quasi-shuffles and B-series"};
  app.name("treehopf");
  Globals g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  app.add_option("--semigroup", g.semigroup_spec,
                 "alphabet semigroup: free, additive or table:<file>")
      ->capture_default_str();
  app.add_option("--alphabet", g.alphabet, "base letters for enumeration sweeps")
      ->delimiter(',')
      ->capture_default_str();
  app.require_subcommand(1);

  std::string arg1, arg2, arg3;
  int n_arg = 0;

  auto* graft_cmd = app.add_subcommand("graft", "pre-Lie grafting of two trees");
  graft_cmd->add_option("t1", arg1, "tree")->required();
  graft_cmd->add_option("t2", arg2, "tree")->required();

  auto* gl_cmd = app.add_subcommand("gl", "Grossman-Larson product of two forests");
  gl_cmd->add_option("f", arg1, "forest")->required();
  gl_cmd->add_option("g", arg2, "forest")->required();

  auto* lpow_cmd = app.add_subcommand("lpow", "iterated left grafting L^n_a(b)");
  lpow_cmd->add_option("a", arg1, "tree linear combination")->required();
  lpow_cmd->add_option("b", arg2, "tree linear combination")->required();
  lpow_cmd->add_option("n", n_arg, "power")->required();

  auto* cop_cmd = app.add_subcommand("coproduct", "BCK or substitution coproduct");
  bool cop_bck = false, cop_sub = false;
  cop_cmd->add_flag("--bck", cop_bck, "BCK coproduct of a forest");
  cop_cmd->add_flag("--sub", cop_sub, "substitution coproduct of a tree");
  cop_cmd->add_option("input", arg1, "forest (--bck) or tree (--sub)")->required();

  auto* qsh_cmd = app.add_subcommand("qshuffle", "quasi-shuffle product of two words");
  qsh_cmd->add_option("u", arg1, "word")->required();
  qsh_cmd->add_option("v", arg2, "word")->required();

  auto* sh_cmd = app.add_subcommand("shuffle", "shuffle product of two words");
  sh_cmd->add_option("u", arg1, "word")->required();
  sh_cmd->add_option("v", arg2, "word")->required();

  auto* hexp_cmd = app.add_subcommand("hoffman-exp", "Hoffman exponential of a word");
  hexp_cmd->add_option("w", arg1, "word")->required();

  auto* hlog_cmd = app.add_subcommand("hoffman-log", "Hoffman logarithm of a word");
  hlog_cmd->add_option("w", arg1, "word")->required();

  auto* psif_cmd = app.add_subcommand("psi-f", "power-series automorphism psi_f of a word");
  std::string coeffs_text;
  psif_cmd->add_option("--coeffs", coeffs_text, "f_1,f_2,... as rationals")->required();
  psif_cmd->add_option("w", arg1, "word")->required();

  auto* psiv_cmd = app.add_subcommand("psi-v", "substitution endomorphism Psi_v of a forest");
  std::string char_path;
  psiv_cmd->add_option("--char", char_path, "character file: lines 'tree = p/q'")->required();
  psiv_cmd->add_option("f", arg1, "forest")->required();

  auto* arb_cmd = app.add_subcommand("arborify", "arborification of a forest");
  bool contract = false;
  arb_cmd->add_flag("--contract", contract, "contracting arborification");
  arb_cmd->add_option("f", arg1, "forest")->required();

  auto* ah_cmd = app.add_subcommand("arbo-hoffman", "arborified Hoffman exponential of a forest");
  ah_cmd->add_option("f", arg1, "forest")->required();

  auto* marcus_cmd = app.add_subcommand("marcus", "Marcus canonical-extension series");
  int nmax = 3;
  marcus_cmd->add_option("--nmax", nmax, "highest quadratic-variation order")->required();

  auto* hkpsi_cmd = app.add_subcommand("hk-psi", "Hairer-Kelly map of an undecorated tree");
  hkpsi_cmd->add_option("t", arg1, "tree")->required();

  auto* hktilde_cmd = app.add_subcommand("hk-psi-tilde", "symmetrised Hairer-Kelly map");
  bool hk_inverse = false;
  hktilde_cmd->add_flag("--inverse", hk_inverse, "apply the inverse map");
  hktilde_cmd->add_option("f", arg1, "forest")->required();

  auto* bs_cmd = app.add_subcommand("bseries", "truncated B-series of a polynomial field");
  std::string field_spec, y0_text;
  int order = 4, dim = 1;
  bs_cmd->add_option("--field", field_spec, "polynomial components separated by ';'")->required();
  bs_cmd->add_option("--dim", dim, "space dimension")->capture_default_str();
  bs_cmd->add_option("--char", char_path, "tree coefficients file")->required();
  bs_cmd->add_option("--order", order, "truncation order")->capture_default_str();
  bs_cmd->add_option("--y0", y0_text, "initial point v1,v2,...")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
  std::string suite;
  VerifyOptions vopt;
  verify_cmd->add_option("suite", suite, "one of: prelie bck qshuffle substitution diagram adjoint marcus hk bseries all")
      ->required();
  verify_cmd->add_option("--max-vertices", vopt.decorated_vertices, "decorated tree bound")
      ->capture_default_str();
  verify_cmd->add_option("--max-undecorated", vopt.undecorated_vertices, "undecorated tree bound")
      ->capture_default_str();
  verify_cmd->add_option("--max-length", vopt.word_length, "word length bound")
      ->capture_default_str();
  verify_cmd->add_option("--order", vopt.bseries_order, "B-series order bound")
      ->capture_default_str();
  verify_cmd->add_option("--seed", vopt.seed, "seed for randomized checks")->capture_default_str();

  // global flags may trail a subcommand, e.g. "verify diagram --alphabet a,b"
  for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) {
    sub->fallthrough();
  }

  std::vector<const char*> argv;
  argv.push_back("treehopf");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    const Semigroup sg = make_semigroup(g.semigroup_spec);

    if (graft_cmd->parsed()) {
      emit(g, out, graft(parse_lincomb_tree(arg1), parse_lincomb_tree(arg2)));
    } else if (gl_cmd->parsed()) {
      emit(g, out, gl_product(parse_lincomb_forest(arg1), parse_lincomb_forest(arg2)));
    } else if (lpow_cmd->parsed()) {
      emit(g, out, left_power(parse_lincomb_tree(arg1), parse_lincomb_tree(arg2), n_arg));
    } else if (cop_cmd->parsed()) {
      if (cop_bck == cop_sub) {
        err << "coproduct: exactly one of --bck/--sub is required\n";
        return 2;
      }
      if (cop_bck) {
        emit(g, out, bck_coproduct(parse_forest(arg1)));
      } else {
        emit(g, out, sub_coproduct(parse_tree(arg1), sg));
      }
    } else if (qsh_cmd->parsed()) {
      emit(g, out, quasi_shuffle(parse_word(arg1), parse_word(arg2), sg));
    } else if (sh_cmd->parsed()) {
      emit(g, out, shuffle(parse_word(arg1), parse_word(arg2)));
    } else if (hexp_cmd->parsed()) {
      emit(g, out, hoffman_exp(parse_word(arg1), sg));
    } else if (hlog_cmd->parsed()) {
      emit(g, out, hoffman_log(parse_word(arg1), sg));
    } else if (psif_cmd->parsed()) {
      Word w = parse_word(arg1);
      auto coeffs = parse_rat_list(coeffs_text);
      if (static_cast<int>(coeffs.size()) < w.length()) {
        err << "psi-f: need at least " << w.length() << " coefficients\n";
        return 2;
      }
      emit(g, out, psi_series(PowerSeries::from_coeffs(coeffs), w, sg));
    } else if (psiv_cmd->parsed()) {
      auto values = functional_from_file(char_path);
      PlusCharacter v = PlusCharacter::from_rule(values, false);
      emit(g, out, psi_v(v, parse_forest(arg1), sg));
    } else if (arb_cmd->parsed()) {
      if (contract) {
        emit(g, out, contract_arborify(parse_forest(arg1), sg));
      } else {
        emit(g, out, arborify(parse_forest(arg1)));
      }
    } else if (ah_cmd->parsed()) {
      emit(g, out, arbo_hoffman_exp(parse_forest(arg1), sg));
    } else if (marcus_cmd->parsed()) {
      auto field = marcus_modified_field(nmax);
      if (g.format == "structured") {
        json j = json::object();
        for (const auto& [letter, lc] : field) j[letter] = lincomb_json(lc);
        out << j.dump() << "\n";
      } else {
        for (const auto& [letter, lc] : field) out << letter << " = " << to_text(lc) << "\n";
      }
    } else if (hkpsi_cmd->parsed()) {
      emit(g, out, hk_psi(parse_tree(arg1)));
    } else if (hktilde_cmd->parsed()) {
      const Forest f = parse_forest(arg1);
      emit(g, out, hk_inverse ? hk_psi_tilde_inv(f) : hk_psi_tilde(f));
    } else if (bs_cmd->parsed()) {
      FieldAssignment fields{{"o", parse_field(field_spec, dim)}};
      auto y0 = parse_rat_list(y0_text);
      auto series = bseries_truncated(functional_from_file(char_path), fields, order, y0);
      if (g.format == "structured") {
        json j = json::array();
        for (const auto& slot : series) {
          json v = json::array();
          for (const Rat& r : slot) v.push_back(rat_str(r));
          j.push_back(v);
        }
        out << json{{"coefficients", j}}.dump() << "\n";
      } else {
        for (std::size_t k = 0; k < series.size(); ++k) {
          out << "h^" << k << ":";
          for (const Rat& r : series[k]) out << " " << rat_str(r);
          out << "\n";
        }
      }
    } else if (verify_cmd->parsed()) {
      vopt.alphabet = g.alphabet;
      const auto& names = verify_suites();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        err << "unknown suite: " << suite << "\n";
        return 2;
      }
      VerifyReport rep = run_verify(suite, vopt);
      emit_verify(g, out, err, rep);
      return rep.ok() ? 0 : 1;
    }
    return 0;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace treehopf::cli
