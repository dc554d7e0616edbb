#include "nmlab/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nmlab/ael.hpp"
#include "nmlab/dl.hpp"
#include "nmlab/gen.hpp"
#include "nmlab/lp.hpp"
#include "nmlab/parse.hpp"
#include "nmlab/translate.hpp"
#include "nmlab/verify.hpp"

namespace nmlab {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UserError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx",
                static_cast<unsigned long long>(h));
  return out;
}

// The vocabulary is the input's atoms in order of first occurrence unless
// --atoms overrides it, in which case it must cover them.
Vocabulary make_vocab(const std::vector<std::string>& file_atoms,
                      const std::string& atoms_flag) {
  if (atoms_flag.empty()) return Vocabulary(file_atoms);
  std::vector<std::string> names;
  std::string token;
  std::istringstream in(atoms_flag);
  while (std::getline(in, token, ',')) names.push_back(token);
  Vocabulary v(names);
  for (const std::string& a : file_atoms)
    if (!v.contains(a))
      throw UserError("--atoms must cover the input's atoms (missing: " + a +
                      ")");
  return v;
}

json json_of(const Vocabulary& v, Interpretation i) {
  json out = json::array();
  for (int a = 0; a < v.size(); ++a)
    if (i.truth(a)) out.push_back(v.atom(a));
  return out;
}

json json_of(const Vocabulary& v, const WorldSet& q) {
  json out = json::array();
  for (Interpretation i : q.members()) out.push_back(json_of(v, i));
  return out;
}

json json_of(const Vocabulary& v, const BeliefPair& b) {
  return json{{"p", json_of(v, b.p)}, {"s", json_of(v, b.s)}};
}

json json_of(const Vocabulary& v, lp::AtomSet a) {
  json out = json::array();
  for (int i = 0; i < v.size(); ++i)
    if (a.contains(i)) out.push_back(v.atom(i));
  return out;
}

json result_object(const std::string& command, const std::string& digest,
                   const std::string& semantics, const Vocabulary& v) {
  return json{{"command", command},
              {"input_digest", digest},
              {"semantics", semantics},
              {"atoms", v.atoms()}};
}

struct Sink {
  bool as_json = false;
  std::ostream& out;
  std::ostream& err;

  void emit(const json& j) const { out << j.dump(2) << "\n"; }

  int sets(json base, const std::string& semantics, const Vocabulary& v,
           const std::vector<WorldSet>& qs) const {
    if (as_json) {
      json rs = json::array();
      for (const WorldSet& q : qs) rs.push_back(json_of(v, q));
      base["results"] = rs;
      emit(base);
    } else {
      for (const WorldSet& q : qs) out << to_string(v, q) << "\n";
      err << semantics << ": " << qs.size() << "\n";
    }
    return 0;
  }

  int pairs(json base, const std::string& semantics, const Vocabulary& v,
            const std::vector<BeliefPair>& bs) const {
    if (as_json) {
      json rs = json::array();
      for (const BeliefPair& b : bs) rs.push_back(json_of(v, b));
      base["results"] = rs;
      emit(base);
    } else {
      for (const BeliefPair& b : bs) out << to_string(v, b) << "\n";
      err << semantics << ": " << bs.size() << "\n";
    }
    return 0;
  }

  int fixpoint(json base, const Vocabulary& v, const PairFixpoint& f) const {
    if (as_json) {
      base["results"] = json::array({json_of(v, f.pair)});
      base["iterations"] = f.iterations;
      emit(base);
    } else {
      out << to_string(v, f.pair) << "\n";
      err << "iterations: " << f.iterations << "\n";
    }
    return 0;
  }
};

int cmd_ael(const std::string& mode, const std::string& path,
            const std::string& atoms, const Sink& sink) {
  std::string text = read_file(path);
  ModalTheory t = parse_modal_theory(text);
  Vocabulary v = make_vocab(atoms_of(t), atoms);
  json base = result_object("ael " + mode, fnv1a_hex(text), mode, v);
  if (mode == "expansions")
    return sink.sets(base, mode, v, ael::expansions(v, t));
  if (mode == "partial-expansions")
    return sink.pairs(base, mode, v, ael::partial_expansions(v, t));
  if (mode == "extensions")
    return sink.sets(base, mode, v, ael::extensions(v, t));
  if (mode == "partial-extensions")
    return sink.pairs(base, mode, v, ael::partial_extensions(v, t));
  if (mode == "kk") return sink.fixpoint(base, v, ael::kripke_kleene(v, t));
  return sink.fixpoint(base, v, ael::well_founded(v, t));
}

int cmd_dl(const std::string& mode, const std::string& path,
           const std::string& atoms, const Sink& sink) {
  std::string text = read_file(path);
  DefaultTheory d = parse_default_theory(text);
  Vocabulary v = make_vocab(atoms_of(d), atoms);
  json base = result_object("dl " + mode, fnv1a_hex(text), mode, v);
  if (mode == "weak") return sink.sets(base, mode, v, dl::weak_extensions(v, d));
  if (mode == "partial-weak")
    return sink.pairs(base, mode, v, dl::partial_weak_extensions(v, d));
  if (mode == "extensions")
    return sink.sets(base, mode, v, dl::extensions(v, d));
  if (mode == "partial-extensions")
    return sink.pairs(base, mode, v, dl::partial_extensions(v, d));
  if (mode == "oracle")
    return sink.sets(base, mode, v, dl::extensions_oracle(v, d));
  if (mode == "kk") return sink.fixpoint(base, v, dl::kripke_kleene(v, d));
  return sink.fixpoint(base, v, dl::well_founded(v, d));
}

int lp_sets(json base, const std::string& semantics, const Vocabulary& v,
            const std::vector<lp::AtomSet>& ms, const Sink& sink) {
  if (sink.as_json) {
    json rs = json::array();
    for (lp::AtomSet m : ms) rs.push_back(json_of(v, m));
    base["results"] = rs;
    sink.emit(base);
  } else {
    for (lp::AtomSet m : ms) sink.out << lp::to_string(v, m) << "\n";
    sink.err << semantics << ": " << ms.size() << "\n";
  }
  return 0;
}

int lp_fixpoint(json base, const Vocabulary& v, const lp::LpFixpoint& f,
                const Sink& sink) {
  if (sink.as_json) {
    base["results"] = json::array({json{{"lower", json_of(v, f.pair.lower)},
                                        {"upper", json_of(v, f.pair.upper)}}});
    base["iterations"] = f.iterations;
    sink.emit(base);
  } else {
    sink.out << lp::to_string(v, f.pair) << "\n";
    sink.err << "iterations: " << f.iterations << "\n";
  }
  return 0;
}

int cmd_lp(const std::string& mode, const std::string& path,
           const std::string& atoms, const Sink& sink) {
  std::string text = read_file(path);
  Program p = parse_program(text);
  Vocabulary v = make_vocab(atoms_of(p), atoms);
  json base = result_object("lp " + mode, fnv1a_hex(text), mode, v);
  if (mode == "supported")
    return lp_sets(base, mode, v, lp::supported_models(v, p), sink);
  if (mode == "stable")
    return lp_sets(base, mode, v, lp::stable_models(v, p), sink);
  if (mode == "kk") return lp_fixpoint(base, v, lp::kripke_kleene(v, p), sink);
  if (mode == "wf") return lp_fixpoint(base, v, lp::well_founded(v, p), sink);
  lp::EmbeddingReport r = lp::check_embedding(v, p);
  if (sink.as_json) {
    json checks = json::array();
    for (const lp::EmbeddingCheck& c : r.checks)
      checks.push_back(
          json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    base["note"] = r.note;
    base["checks"] = checks;
    sink.emit(base);
  } else {
    sink.err << r.note << "\n";
    for (const lp::EmbeddingCheck& c : r.checks) {
      sink.out << c.name << ": " << (c.pass ? "pass" : "FAIL");
      if (!c.pass) sink.out << " (" << c.detail << ")";
      sink.out << "\n";
    }
  }
  return r.all_pass() ? 0 : 1;
}

int cmd_translate(const std::string& mode, const std::string& path,
                  const Sink& sink) {
  std::string text = read_file(path);
  std::string output;
  if (mode == "konolige")
    output = to_string(konolige(parse_default_theory(text)));
  else
    output = to_string(lp_to_dl(parse_program(text)));
  if (sink.as_json) {
    sink.emit(json{{"command", "translate " + mode},
                   {"input_digest", fnv1a_hex(text)},
                   {"semantics", mode},
                   {"output", output}});
  } else {
    sink.out << output;
  }
  return 0;
}

int cmd_verify(bool all, const std::string& id, const GenConfig& cfg,
               const Sink& sink) {
  if (all == !id.empty())
    throw UserError("verify needs exactly one of --all or --theorem");
  std::vector<TheoremReport> reports;
  if (all) {
    reports = verify_all(cfg);
  } else {
    reports.push_back(verify_theorem(id, cfg));
  }
  int failed = 0;
  for (const TheoremReport& r : reports)
    if (!r.passed()) ++failed;
  if (sink.as_json) {
    json rs = json::array();
    for (const TheoremReport& r : reports) {
      json fs = json::array();
      for (const TheoremFailure& f : r.failures)
        fs.push_back(json{{"seed", f.seed},
                          {"instance", f.instance},
                          {"detail", f.detail}});
      rs.push_back(json{{"id", r.id},
                        {"title", r.title},
                        {"instances", r.instances},
                        {"failures", fs},
                        {"seconds", r.seconds},
                        {"passed", r.passed()}});
    }
    sink.emit(json{{"command", "verify"},
                   {"seed", cfg.seed},
                   {"atom_count", cfg.atom_count},
                   {"samples", cfg.sample_count},
                   {"reports", rs}});
  } else {
    for (const TheoremReport& r : reports) sink.out << to_string(r) << "\n";
    sink.err << (reports.size() - failed) << "/" << reports.size()
             << " checks passed\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"nmlab: fixpoint semantics for modal theories, default "
               "theories, and logic programs"};
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false;
  std::string atoms;
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--atoms", atoms,
                 "comma-separated vocabulary overriding the input's atoms");

  std::string ael_mode, ael_file;
  CLI::App* ael_cmd = app.add_subcommand("ael", "modal theory semantics");
  ael_cmd->add_option("mode", ael_mode, "what to compute")
      ->required()
      ->check(CLI::IsMember({"expansions", "partial-expansions", "kk",
                             "extensions", "partial-extensions", "wf"}));
  ael_cmd->add_option("file", ael_file, "modal theory file")->required();

  std::string dl_mode, dl_file;
  CLI::App* dl_cmd = app.add_subcommand("dl", "default theory semantics");
  dl_cmd->add_option("mode", dl_mode, "what to compute")
      ->required()
      ->check(CLI::IsMember({"weak", "partial-weak", "kk", "extensions",
                             "partial-extensions", "wf", "oracle"}));
  dl_cmd->add_option("file", dl_file, "default theory file")->required();

  std::string lp_mode, lp_file;
  CLI::App* lp_cmd = app.add_subcommand("lp", "logic program semantics");
  lp_cmd->add_option("mode", lp_mode, "what to compute")
      ->required()
      ->check(CLI::IsMember({"supported", "stable", "kk", "wf",
                             "embed-check"}));
  lp_cmd->add_option("file", lp_file, "program file")->required();

  std::string tr_mode, tr_file;
  CLI::App* tr_cmd = app.add_subcommand("translate", "language translations");
  tr_cmd->add_option("mode", tr_mode, "which translation")
      ->required()
      ->check(CLI::IsMember({"konolige", "lp2dl"}));
  tr_cmd->add_option("file", tr_file, "input file")->required();

  bool all = false;
  std::string theorem;
  GenConfig cfg;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the theorem suite");
  verify_cmd->add_flag("--all", all, "check every statement");
  verify_cmd->add_option("--theorem", theorem, "check one statement (T1..T15)");
  verify_cmd->add_option("--seed", cfg.seed, "base seed");
  verify_cmd->add_option("--n", cfg.atom_count, "vocabulary size");
  verify_cmd->add_option("--samples", cfg.sample_count,
                         "instances per statement");

  try {
    std::vector<const char*> argv = {"nmlab"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());

    Sink sink{as_json, out, err};
    if (ael_cmd->parsed()) return cmd_ael(ael_mode, ael_file, atoms, sink);
    if (dl_cmd->parsed()) return cmd_dl(dl_mode, dl_file, atoms, sink);
    if (lp_cmd->parsed()) return cmd_lp(lp_mode, lp_file, atoms, sink);
    if (tr_cmd->parsed()) return cmd_translate(tr_mode, tr_file, sink);
    return cmd_verify(all, theorem, cfg, sink);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  } catch (const UserError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace nmlab
