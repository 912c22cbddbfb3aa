// Runs every acceptance criterion once and prints one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "noriq_cli/generators.hpp"
#include "noriq_cli/io.hpp"
#include "oracle/oracle.hpp"

using namespace noriq;
namespace fs = std::filesystem;

namespace {

const fs::path corpus = NORIQ_CORPUS_DIR;

using Rng = gen::Rng;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Outcome additivity() {
  Outcome o;
  Rng rng(1001);
  for (int t = 0; t < 50; ++t) {
    SuspensionWitness w = SuspensionWitness::of(gen::random_suspension_base(rng, 150));
    if (w.pair.total().size() > 150) o.fail("suspension too large in case " + std::to_string(t));
    Zigzag f = gen::random_endo_zigzag(rng, w, 1), g = gen::random_endo_zigzag(rng, w, 1);
    Zigzag s = cogroup_sum(f, g, w);
    for (int n = 0; n <= top_degree(w.pair); ++n)
      if (zz_induced(s, n) != zz_induced(f, n) + zz_induced(g, n))
        o.fail("case " + std::to_string(t) + " degree " + std::to_string(n));
  }
  return o;
}

std::vector<SPair> corpus_pairs() {
  std::vector<SPair> out;
  for (const auto& e : cli::load_manifest(corpus / "manifest.json").entries)
    if (e.kind == "pair") out.push_back(cli::load_pair(e.path));
  Rng rng(1002);
  for (int t = 0; t < 20; ++t) out.push_back(gen::random_pair(rng, 6, 2));
  return out;
}

Outcome suspension_criterion() {
  Outcome o;
  std::size_t k = 0;
  for (const SPair& p : corpus_pairs()) {
    SPair s = suspension(p);
    for (int n = 0; n <= top_degree(p) + 1; ++n) {
      std::size_t d = cohomology_dim(p, n);
      if (cohomology_dim(s, n + 1) != d) o.fail("dims differ, pair " + std::to_string(k) + " n " + std::to_string(n));
      RatMatrix iso = suspension_iso(p, n);
      if (d != 0 && !is_invertible(iso)) o.fail("not invertible, pair " + std::to_string(k));
    }
    if (cohomology_dim(s, 0) != 0) o.fail("suspension has H^0, pair " + std::to_string(k));
    ++k;
  }
  return o;
}

Outcome realization() {
  Outcome o;
  Rng rng(1003);
  for (int t = 0; t < 25; ++t) {
    std::size_t d = 1 + gen::below(rng, 4);
    IntMatrix alpha = gen::random_int_matrix(rng, d, d, 3);
    WedgeRealization r = realize_matrix_on_wedge(alpha, d);
    if (!is_invertible(r.phi) || r.phi * alpha.to_rational() != zz_induced(r.map, 1) * r.phi)
      o.fail("alpha " + alpha.to_rational().str());
  }
  return o;
}

Outcome puppe() {
  Outcome o;
  Rng rng(1004);
  for (int t = 0; t < 25; ++t) {
    Triple tr = gen::random_triple(rng, 5, 2);
    Zigzag connector = puppe_connector(tr);
    for (int n = 1; n <= top_degree(tr.pair_xy()) + 1; ++n)
      if (zz_induced(connector, n) * suspension_iso(tr.pair_yz(), n - 1) != connecting_map(tr, n))
        o.fail("triple " + std::to_string(t) + " degree " + std::to_string(n));
  }
  return o;
}

Outcome commutant_oracle() {
  Outcome o;
  Rng rng(1005);
  for (int t = 0; t < 60; ++t) {
    std::size_t d = 1 + gen::below(rng, 4), count = gen::below(rng, 4);
    std::vector<QMorphism> ms;
    std::vector<oracle::Mat> endos;
    for (std::size_t k = 0; k < count; ++k) {
      RatMatrix m = gen::random_structured_matrix(rng, d, d);
      ms.push_back(QMorphism::with_matrix("s" + std::to_string(k), MorphismKind::A, "a", "a", m));
      endos.push_back(oracle::from(m));
    }
    Commutant c = commutant(QuiverRep({QObject::abstract_object("a", d)}, ms));
    oracle::Mat flat;
    for (const auto& x : c.basis()) {
      std::vector<oracle::Q> row;
      for (const auto& e : x[0].entries()) row.push_back(oracle::from(e));
      flat.push_back(row);
    }
    if (oracle::rank(flat, d * d) != flat.size()) o.fail("basis not independent, case " + std::to_string(t));
    if (oracle::canonical_span(flat, d * d) != oracle::commutant_flat(d, endos)) o.fail("case " + std::to_string(t));
  }
  return o;
}

Outcome clone_equivalence() {
  Outcome o;
  Rng rng(1006);
  for (int t = 0; t < 30; ++t) {
    QuiverRep rep = t % 3 == 2 ? gen::random_geometric_quiver(rng, {2, 2, t % 2 == 0, t % 4 == 0})
                               : gen::random_abstract_quiver(rng, {4, 8, 5, 3, 2});
    std::size_t dim = commutant(rep).dim();
    QuiverRep current = rep;
    auto apply = [&](RewriteResult (*step)(const QuiverRep&)) {
      RewriteResult r = step(current);
      if (!r.equivalent || !r.verified()) o.fail(r.step + " not equivalent, case " + std::to_string(t));
      if (commutant(r.reduced).dim() != dim) o.fail(r.step + " changed dim, case " + std::to_string(t));
      current = r.reduced;
    };
    // Each rewrite runs at least once, including on inputs where it is the identity.
    do apply(clone_twist); while (current.distinct_twists().size() > 1);
    do apply(clone_degree); while (current.distinct_degrees().size() > 1);
    apply(reduce_to_single_object);
    if (current.objects().size() != 1) o.fail("not reduced to one object, case " + std::to_string(t));
  }
  return o;
}

Outcome kernel_image() {
  Outcome o;
  Rng rng(1007);
  for (int t = 0; t < 35; ++t) {
    gen::MapFamily fam = gen::random_map_family(rng);
    KernelImagePresentation k = kernel_image_presentation(fam.maps, fam.degree, fam.target);
    std::vector<Subspace> kernels;
    for (const auto& f : fam.maps) kernels.push_back(kernel_basis(zz_induced(f, fam.degree)));
    Subspace expected = intersect(kernels, cohomology_dim(fam.target, fam.degree));
    if (!k.exact() || image_basis(zz_induced(k.map, fam.degree)) != expected) o.fail("family " + std::to_string(t));
  }
  return o;
}

Outcome commutator() {
  Outcome o;
  Rng rng(1008);
  for (int t = 0; t < 24; ++t) {
    SuspensionWitness w = SuspensionWitness::of(points_pair(1 + gen::below(rng, 3)));
    std::vector<Zigzag> endos;
    std::size_t count = 1 + gen::below(rng, 2);
    for (std::size_t k = 0; k < count; ++k) endos.push_back(gen::random_endo_zigzag(rng, w, 1));
    CommutatorSuspension cs = commutator_suspension(w.pair, 1, endos);
    for (std::size_t k = 0; k < endos.size(); ++k)
      if (!commutator_identity(cs, k)) o.fail("case " + std::to_string(t) + " endo " + std::to_string(k));
  }
  return o;
}

Outcome presentations() {
  Outcome o;
  Rng rng(1009);
  auto start = std::chrono::steady_clock::now();
  for (int t = 0; t < 12; ++t) {
    QuiverRep rep = t % 4 == 3 ? gen::random_geometric_quiver(rng, {2, 2, false, false})
                               : gen::random_abstract_quiver(rng, {4, 8, 5, 2, 2});
    if (rep.objects().size() > 4 || rep.total_dim() > 8) o.fail("generator exceeded bounds");
    Commutant c = commutant(rep);
    std::vector<ModuleOverCommutant> modules{regular_module(c), module_from_object(c, rep.objects()[0].id)};
    for (const auto& m : modules) {
      if (!quotient_presentation(rep, m).verified()) o.fail("quotient, case " + std::to_string(t));
      if (!sub_presentation(rep, m).verified()) o.fail("sub, case " + std::to_string(t));
    }
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > 300) o.fail("took " + std::to_string(seconds) + " s");
  return o;
}

std::string capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  status = pclose(pipe);
  return out;
}

Outcome selftest_determinism() {
  Outcome o;
  std::string cmd = std::string("\"") + NORIQ_CLI_PATH + "\" selftest --seed 20261015 --corpus \"" + corpus.string() + "\"";
  int s1 = 0, s2 = 0;
  std::string a = capture(cmd, s1), b = capture(cmd, s2);
  if (a.empty()) o.fail("no output");
  if (a != b) o.fail("outputs differ");
  if (s1 != 0 || s2 != 0) o.fail("selftest exit status " + std::to_string(s1));
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"cogroup_additivity", additivity},     {"suspension_iso", suspension_criterion},
      {"realize_matrix_on_wedge", realization}, {"puppe_connector", puppe},
      {"commutant_vs_flattened", commutant_oracle}, {"clone_equivalence", clone_equivalence},
      {"kernel_image_exactness", kernel_image}, {"commutator_suspension", commutator},
      {"presentations", presentations},     {"selftest_determinism", selftest_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << i + 1 << " " << criteria[i].first << ": " << (o.pass ? "PASS" : "FAIL");
    if (!o.pass) std::cout << " (" << o.detail << ")";
    std::cout << std::endl;
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
