#include "noriq_cli/commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

namespace noriq::cli {
namespace {

const char* flag(bool b) { return b ? "true" : "false"; }

// Report keys never contain spaces.
std::string key(std::string label) {
  for (char& c : label)
    if (c == ' ') c = '_';
  return label;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i];
  return out;
}

std::vector<std::string> object_ids(const QuiverRep& rep) {
  std::vector<std::string> ids;
  for (const auto& o : rep.objects()) ids.push_back(o.id);
  return ids;
}

void cohomology_lines(const SPair& p, std::ostream& out) {
  int top = std::max(top_degree(p), 0);
  out << "top_degree = " << top << "\n";
  for (int n = 0; n <= top; ++n) out << "dim." << n << " = " << cohomology_dim(p, n) << "\n";
}

void quiver_lines(const QuiverRep& rep, const std::string& prefix, std::ostream& out) {
  for (const auto& o : rep.objects())
    out << prefix << "object." << o.id << " = " << (o.geometric() ? "pair" : "abstract") << " degree " << o.degree
        << " twist " << o.twist << " dim " << rep.dim(o.id) << "\n";
  for (std::size_t f = 0; f < rep.morphisms().size(); ++f) {
    const QMorphism& m = rep.morphisms()[f];
    out << prefix << "morphism." << m.id << " = " << kind_letter(m.kind) << " " << m.source << " -> " << m.target
        << "\n";
  }
}

}  // namespace

int cmd_cohomology(const fs::path& pair, std::optional<int> degree, std::ostream& out) {
  SPair p = load_pair(pair);
  out << "pair = " << pair.filename().string() << "\n";
  out << "vertices = " << p.total().num_vertices() << "\n";
  out << "simplices = " << p.total().size() << "\n";
  out << "relative_simplices = " << p.relative_size() << "\n";
  if (!degree) {
    cohomology_lines(p, out);
    return kExitPass;
  }
  if (*degree < 0) throw InputError("--degree must be nonnegative");
  CohomologyBasis b = relative_cohomology(p, *degree);
  out << "degree = " << *degree << "\n";
  out << "dim = " << b.dim << "\n";
  std::vector<std::string> support;
  for (std::size_t s : b.cochain_support) support.push_back("[" + join(p.total().labels(p.total().simplices()[s])) + "]");
  out << "support = " << join(support) << "\n";
  out << "basis = " << matrix_value(b.basis) << "\n";
  return kExitPass;
}

int cmd_build(const std::string& op, const std::vector<fs::path>& inputs, const std::optional<fs::path>& output,
              std::ostream& out) {
  auto arity = [&](std::size_t n) {
    if (inputs.size() != n) throw InputError("--op " + op + " takes " + std::to_string(n) + " input(s)");
  };
  SPair result;
  if (op == "wedge") {
    if (inputs.empty()) throw InputError("--op wedge needs at least one input");
    std::vector<SPair> ps;
    for (const auto& in : inputs) ps.push_back(load_pair(in));
    result = wedge(ps).pair;
  } else if (op == "smash") {
    arity(2);
    result = smash(load_pair(inputs[0]), load_pair(inputs[1]));
  } else if (op == "cone") {
    arity(1);
    result = cone(load_pair(inputs[0]));
  } else if (op == "suspend") {
    arity(1);
    result = suspension(load_pair(inputs[0]));
  } else if (op == "cylinder") {
    arity(1);
    result = mapping_cylinder(load_map(inputs[0])).inclusion.target();
  } else if (op == "pushout") {
    arity(2);
    try {
      result = glue_pushout(load_map(inputs[0]), load_map(inputs[1])).pair;
    } catch (const TopologyError& e) {
      throw InputError(std::string("pushout: ") + e.what());
    }
  } else {
    throw InputError("unknown --op '" + op + "'");
  }
  std::string doc = pair_to_json(result).dump(2) + "\n";
  out << "op = " << op << "\n";
  out << "vertices = " << result.total().num_vertices() << "\n";
  out << "simplices = " << result.total().size() << "\n";
  cohomology_lines(result, out);
  if (output) {
    std::ofstream f(*output, std::ios::binary);
    if (!f) throw InputError(output->string() + ": cannot write");
    f << doc;
    out << "output = " << output->filename().string() << "\n";
  } else {
    out << doc;
  }
  return kExitPass;
}

int cmd_commutant(const fs::path& quiver, std::ostream& out) {
  QuiverRep rep = load_quiver(quiver);
  Commutant c = commutant(rep);
  out << "quiver = " << quiver.filename().string() << "\n";
  quiver_lines(rep, "", out);
  out << "commutant.dim = " << c.dim() << "\n";
  for (std::size_t a = 0; a < c.dim(); ++a)
    for (std::size_t b = 0; b < c.object_ids().size(); ++b)
      out << "basis." << a << "." << c.object_ids()[b] << " = " << matrix_value(c.basis()[a][b]) << "\n";
  out << "identity = " << vector_value(c.identity_coordinates()) << "\n";
  for (std::size_t a = 0; a < c.dim(); ++a)
    for (std::size_t b = 0; b < c.dim(); ++b)
      out << "product." << a << "." << b << " = " << vector_value(c.product_coordinates(a, b)) << "\n";
  return kExitPass;
}

int cmd_normalize(const fs::path& quiver, bool verify, std::ostream& out) {
  QuiverRep rep = load_quiver(quiver);
  std::vector<RewriteResult> chain = normalize(rep);
  out << "quiver = " << quiver.filename().string() << "\n";
  quiver_lines(rep, "input.", out);
  out << "steps = " << chain.size() << "\n";
  bool ok = true;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const RewriteResult& r = chain[i];
    std::string pre = "step." + std::to_string(i) + ".";
    out << pre << "rewrite = " << r.step << "\n";
    for (std::size_t k = 0; k < r.clones.size(); ++k) {
      const ObjectClone& cl = r.clones[k];
      std::string c = pre + "clone." + std::to_string(k) + ".";
      out << c << "replaces = " << (cl.bad.empty() ? "-" : cl.bad) << "\n";
      out << c << "objects = " << join(cl.objects) << "\n";
      out << c << "morphisms = " << join(cl.morphisms) << "\n";
    }
    out << pre << "enlarged.objects = " << join(object_ids(r.enlarged)) << "\n";
    out << pre << "reduced.objects = " << join(object_ids(r.reduced)) << "\n";
    for (std::size_t k = 0; k < r.squares.size(); ++k) {
      out << pre << "square." << k << ".label = " << r.squares[k].label << "\n";
      out << pre << "square." << k << ".commutes = " << flag(r.squares[k].commutes) << "\n";
    }
    out << pre << "lambdas_invertible = " << flag(r.lambdas_invertible) << "\n";
    out << pre << "equivalent = " << flag(r.equivalent) << "\n";
    out << pre << "commutant_dim = " << r.commutant_dim_original << " -> " << r.commutant_dim_reduced << "\n";
    out << pre << "verified = " << flag(r.verified()) << "\n";
    ok = ok && r.verified();
  }
  const QuiverRep& last = chain.empty() ? rep : chain.back().reduced;
  quiver_lines(last, "final.", out);
  out << "verified = " << flag(ok) << "\n";
  return verify && !ok ? kExitVerification : kExitPass;
}

int cmd_present(const fs::path& quiver, const std::string& module, const std::string& mode, std::ostream& out) {
  if (mode != "quotient" && mode != "sub") throw InputError("--mode must be quotient or sub");
  QuiverRep rep = load_quiver(quiver);
  ModuleOverCommutant m = parse_module(module, rep, fs::path());
  out << "quiver = " << quiver.filename().string() << "\n";
  out << "mode = " << mode << "\n";
  out << "module = " << module << "\n";
  out << "module.dim = " << m.dim << "\n";
  auto witness_lines = [&](const QuotientWitness& w, const std::string& pre) {
    out << pre << "rewrite_steps = " << w.rewrite_steps << "\n";
    out << pre << "synthetic = " << flag(w.synthetic) << "\n";
    out << pre << "carrier.simplices = " << w.carrier.pair.total().size() << "\n";
    out << pre << "carrier.degree = " << w.carrier.degree << "\n";
    out << pre << "carrier.twist = " << w.carrier.twist << "\n";
    out << pre << "copies = " << w.copies << "\n";
    out << pre << "source.simplices = " << w.source.pair.total().size() << "\n";
    out << pre << "source.degree = " << w.source.degree << "\n";
    for (const auto& c : w.certificates) out << pre << "certificate." << key(c.label) << " = " << flag(c.ok) << "\n";
    out << pre << "surjective = " << flag(w.surjective) << "\n";
    out << pre << "equivariant = " << flag(w.equivariant) << "\n";
  };
  bool ok;
  if (mode == "quotient") {
    QuotientWitness w = quotient_presentation(rep, m);
    witness_lines(w, "");
    out << "map = " << matrix_value(w.map) << "\n";
    ok = w.verified();
  } else {
    SubWitness s = sub_presentation(rep, m);
    witness_lines(s.dual, "dual.");
    out << "carrier_constructed = " << flag(s.carrier_constructed) << "\n";
    out << "injective = " << flag(s.injective) << "\n";
    out << "equivariant = " << flag(s.equivariant) << "\n";
    out << "map = " << matrix_value(s.map) << "\n";
    ok = s.verified();
  }
  out << "verified = " << flag(ok) << "\n";
  return ok ? kExitPass : kExitVerification;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pairs of simplicial complexes, quiver representations and their commutants"};
  app.require_subcommand(1);

  fs::path file;
  std::optional<int> degree;
  auto* coh = app.add_subcommand("cohomology", "Relative rational cohomology of a pair file");
  coh->add_option("pair", file, "pair document")->required();
  coh->add_option("--degree,-n", degree, "single degree with its basis");

  std::string op;
  std::vector<fs::path> inputs;
  std::optional<fs::path> output;
  auto* build = app.add_subcommand("build", "Build a pair from pair or map files");
  build->add_option("--op", op, "wedge|smash|cone|suspend|cylinder|pushout")->required();
  build->add_option("inputs", inputs, "pair files, or map files for cylinder and pushout")->required();
  build->add_option("-o,--output", output, "write the pair document here instead of stdout");

  auto* comm = app.add_subcommand("commutant", "Commutant basis and structure constants");
  comm->add_option("quiver", file, "quiver document")->required();

  bool verify = false;
  auto* norm = app.add_subcommand("normalize", "Rewrite chain to a single object");
  norm->add_option("quiver", file, "quiver document")->required();
  norm->add_flag("--verify", verify, "exit 1 unless every step verifies");

  std::string module = "regular", mode = "quotient";
  auto* pres = app.add_subcommand("present", "Quotient or sub presentation of a module");
  pres->add_option("quiver", file, "quiver document")->required();
  pres->add_option("--module", module, "regular | zero | object:<id> | module file");
  pres->add_option("--mode", mode, "quotient | sub");

  fs::path corpus = "corpus";
  std::uint64_t seed = 1;
  auto* self = app.add_subcommand("selftest", "Run the invariant suite over a corpus");
  self->add_option("--corpus", corpus, "corpus directory or manifest");
  self->add_option("--seed", seed, "random seed; NORIQ_SEED overrides it");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (*coh) return cmd_cohomology(file, degree, out);
    if (*build) return cmd_build(op, inputs, output, out);
    if (*comm) return cmd_commutant(file, out);
    if (*norm) return cmd_normalize(file, verify, out);
    if (*pres) return cmd_present(file, module, mode, out);
    if (const char* env = std::getenv("NORIQ_SEED")) {
      try {
        seed = std::stoull(env);
      } catch (const std::exception&) {
        throw InputError(std::string("NORIQ_SEED is not an unsigned integer: ") + env);
      }
    }
    return cmd_selftest(corpus, seed, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const QuiverError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const TopologyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace noriq::cli
