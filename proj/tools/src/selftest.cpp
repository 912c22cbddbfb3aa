#include <functional>
#include <ostream>

#include "noriq_cli/checks.hpp"
#include "noriq_cli/commands.hpp"

namespace noriq::cli {
namespace {

std::uint32_t fnv1a(const std::string& s) {
  std::uint32_t h = 2166136261u;
  for (unsigned char c : s) {
    h ^= c;
    h *= 16777619u;
  }
  return h;
}

// Independent of entry order, so adding an entry never shifts the others.
gen::Rng entry_rng(std::uint64_t seed, const std::string& name) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), fnv1a(name)};
  return gen::Rng(seq);
}

using Case = std::function<bool(gen::Rng&, std::size_t)>;

Case random_suite(const std::string& suite) {
  if (suite == "additivity")
    return [](gen::Rng& rng, std::size_t) {
      SuspensionWitness w = SuspensionWitness::of(gen::random_suspension_base(rng, 150));
      Zigzag f = gen::random_endo_zigzag(rng, w, 1);
      Zigzag g = gen::random_endo_zigzag(rng, w, 1);
      return check_cogroup_additivity(w, f, g);
    };
  if (suite == "suspension") return [](gen::Rng& rng, std::size_t) { return check_suspension(gen::random_pair(rng)); };
  if (suite == "realization")
    return [](gen::Rng& rng, std::size_t) {
      std::size_t d = 1 + gen::below(rng, 4);
      return check_realization(gen::random_int_matrix(rng, d, d, 3));
    };
  if (suite == "puppe")
    return [](gen::Rng& rng, std::size_t) {
      Triple t = gen::random_triple(rng, 5, 2);
      return check_puppe(t) && check_long_exact(t);
    };
  if (suite == "commutant")
    return [](gen::Rng& rng, std::size_t) {
      return check_commutant(gen::random_abstract_quiver(rng, {3, 6, 4, 2, 2}));
    };
  if (suite == "rewrites")
    return [](gen::Rng& rng, std::size_t i) {
      if (i % 3 == 2) {
        gen::GeometricQuiverOptions opt{2, 2, gen::coin(rng), gen::coin(rng)};
        return check_rewrites(gen::random_geometric_quiver(rng, opt));
      }
      return check_rewrites(gen::random_abstract_quiver(rng, {4, 8, 5, 2, 2}));
    };
  if (suite == "kernel_image")
    return [](gen::Rng& rng, std::size_t) { return check_kernel_image(gen::random_map_family(rng)); };
  if (suite == "commutator")
    return [](gen::Rng& rng, std::size_t) {
      SuspensionWitness w = SuspensionWitness::of(points_pair(1 + gen::below(rng, 2)));
      std::vector<Zigzag> endos;
      std::size_t k = 1 + gen::below(rng, 2);
      for (std::size_t j = 0; j < k; ++j) endos.push_back(gen::random_endo_zigzag(rng, w, 1));
      return check_commutator(w.pair, 1, endos);
    };
  if (suite == "presentations")
    return [](gen::Rng& rng, std::size_t i) {
      if (i % 4 == 3) return check_presentations(gen::random_geometric_quiver(rng, {1, 2, false, false}));
      return check_presentations(gen::random_abstract_quiver(rng, {4, 8, 5, 1, 1}));
    };
  return nullptr;
}

struct Tally {
  std::size_t checks = 0, failed = 0;
  std::ostream& out;

  void record(const std::string& key, const std::function<bool()>& check) {
    ++checks;
    bool ok = false;
    std::string error;
    try {
      ok = check();
    } catch (const std::exception& e) {
      error = e.what();
    }
    if (!ok) ++failed;
    out << "check." << key << " = " << (ok ? "PASS" : "FAIL") << "\n";
    if (!error.empty()) out << "error." << key << " = " << error << "\n";
  }
};

void pair_checks(const ManifestEntry& e, Tally& t) {
  SPair p = load_pair(e.path);
  if (auto it = e.params.find("dims"); it != e.params.end()) {
    std::vector<std::size_t> want = it->get<std::vector<std::size_t>>();
    t.record(e.name + ".dims", [&] {
      for (std::size_t n = 0; n < want.size(); ++n)
        if (cohomology_dim(p, static_cast<int>(n)) != want[n]) return false;
      return true;
    });
  }
  t.record(e.name + ".suspension", [&] { return check_suspension(p); });
  t.record(e.name + ".kunneth", [&] {
    SPair s = smash(p, interval_pair());
    for (int n = 0; n <= top_degree(p); ++n)
      if (!is_invertible(kunneth_iso(p, interval_pair(), n + 1))) return false;
    return cohomology_dim(s, 0) == 0;
  });
  if (e.params.value("puppe", true))
    t.record(e.name + ".puppe", [&] {
      Triple tr = cone_suspension_triple(p);
      return check_puppe(tr) && check_long_exact(tr);
    });
}

void quiver_checks(const ManifestEntry& e, Tally& t) {
  QuiverRep rep = load_quiver(e.path);
  if (auto it = e.params.find("commutant_dim"); it != e.params.end()) {
    std::size_t want = it->get<std::size_t>();
    t.record(e.name + ".commutant_dim", [&] { return commutant(rep).dim() == want; });
  }
  t.record(e.name + ".commutant", [&] { return check_commutant(rep); });
  t.record(e.name + ".rewrites", [&] { return check_rewrites(rep); });
  if (e.params.value("present", true)) t.record(e.name + ".presentations", [&] { return check_presentations(rep); });
}

}  // namespace

int cmd_selftest(const fs::path& corpus, std::uint64_t seed, std::ostream& out) {
  fs::path manifest = fs::is_directory(corpus) ? corpus / "manifest.json" : corpus;
  if (!fs::exists(corpus)) throw InputError(corpus.string() + ": no such corpus");
  Manifest m;
  if (fs::exists(manifest)) m = load_manifest(manifest);
  // Resolve every document before running anything, so input errors never leave a partial report.
  for (const auto& e : m.entries) {
    if (e.kind == "pair") load_pair(e.path);
    if (e.kind == "map") load_map(e.path);
    if (e.kind == "quiver") load_quiver(e.path);
    if (e.kind == "random" && !random_suite(e.params.value("suite", std::string())))
      throw InputError(manifest.string() + ": entry '" + e.name + "' has an unknown random suite");
  }

  out << "seed = " << seed << "\n";
  out << "entries = " << m.entries.size() << "\n";
  Tally t{0, 0, out};
  for (const auto& e : m.entries) {
    if (e.kind == "pair") {
      pair_checks(e, t);
    } else if (e.kind == "map") {
      PairMap f = load_map(e.path);
      t.record(e.name + ".functorial", [&] { return check_map(f); });
    } else if (e.kind == "quiver") {
      quiver_checks(e, t);
    } else {
      Case c = random_suite(e.params.value("suite", std::string()));
      std::size_t count = e.params.value("count", std::size_t{10});
      gen::Rng rng = entry_rng(seed, e.name);
      for (std::size_t i = 0; i < count; ++i) t.record(e.name + "." + std::to_string(i), [&] { return c(rng, i); });
    }
  }
  out << "checks = " << t.checks << "\n";
  out << "failed = " << t.failed << "\n";
  out << "status = " << (t.failed == 0 ? "PASS" : "FAIL") << "\n";
  return t.failed == 0 ? kExitPass : kExitVerification;
}

}  // namespace noriq::cli
