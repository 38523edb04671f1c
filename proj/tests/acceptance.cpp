// One line per acceptance criterion. Exit status is nonzero if any fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "jordan/bounds.hpp"
#include "jordan/cli.hpp"
#include "jordan/dsl.hpp"
#include "jordan/finite_group.hpp"
#include "jordan/json_io.hpp"
#include "jordan/root_system.hpp"
#include "jordan/semisimple.hpp"
#include "oracles.hpp"

using namespace jordan;
using json::Json;

namespace {

// Collects mismatches; an empty list means the criterion holds.
struct Check {
  std::vector<std::string> failures;

  template <class A, class B>
  void eq(A const& got, B const& want, std::string const& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      failures.push_back(s.str());
    }
  }
  void that(bool ok, std::string const& what) {
    if (!ok) failures.push_back(what);
  }
};

std::ostream& operator<<(std::ostream& o, BoundValue const& v) { return o << v.str(); }
std::ostream& operator<<(std::ostream& o, ExtNat const& v) { return o << v.str(); }
std::ostream& operator<<(std::ostream& o, BoundTriple const& t) { return o << t.str(); }
std::ostream& operator<<(std::ostream& o, FiniteAbelianGroup const& g) { return o << g.str(); }

finite::PermGroup group(std::string const& name) {
  return finite::load_perm_group(std::filesystem::path(JORDAN_DATA_DIR) / "groups" / (name + ".perm"));
}

// The classification table, transcribed independently of the library.
struct Row {
  std::vector<std::uint64_t> center;
  std::int64_t dim;
  int rank;
};

Row table_row(roots::Family f, std::int64_t l) {
  switch (f) {
    case roots::Family::A: return {{static_cast<std::uint64_t>(l + 1)}, l * (l + 2), int(l)};
    case roots::Family::B:
    case roots::Family::C: return {{2}, l * (2 * l + 1), int(l)};
    case roots::Family::D:
      if (l % 2 == 0) return {{2, 2}, l * (2 * l - 1), int(l)};
      return {{4}, l * (2 * l - 1), int(l)};
    case roots::Family::E: return l == 6 ? Row{{3}, 78, 6} : l == 7 ? Row{{2}, 133, 7} : Row{{}, 248, 8};
    case roots::Family::F: return {{}, 52, 4};
    case roots::Family::G: return {{}, 14, 2};
  }
  return {};
}

void catalog_fidelity(Check& c) {
  std::size_t rows = 0;
  for (auto f : {roots::Family::A, roots::Family::B, roots::Family::C, roots::Family::D, roots::Family::E,
                 roots::Family::F, roots::Family::G})
    for (int l = 1; l <= 8; ++l) {
      if (!roots::SimpleType::admissible(f, l)) continue;
      roots::SimpleType t(f, l);
      auto want = table_row(f, l);
      auto got = roots::catalog_entry(t);
      c.eq(got.center, FiniteAbelianGroup(want.center), t.name() + " center");
      c.eq(got.dim, want.dim, t.name() + " dim");
      c.eq(got.rank, want.rank, t.name() + " rank");
      ++rows;
    }
  // A1..A8, B2..B8, C3..C8, D4..D8, E6..E8, F4, G2
  c.eq(rows, std::size_t{8 + 7 + 6 + 5 + 3 + 1 + 1}, "rows checked");
}

void table_inequalities(Check& c) {
  for (auto t : roots::admissible_types(50)) {
    auto e = roots::catalog_entry(t);
    std::int64_t z = static_cast<std::int64_t>(e.center.order());
    c.that(z <= e.rank + 1 && e.rank + 1 < e.dim && e.dim < 4 * std::int64_t(e.rank) * e.rank, t.name());
  }
}

void weyl_cross_check(Check& c) {
  for (auto t : roots::admissible_types(8)) {
    auto rs = roots::root_system(t);
    c.eq(roots::weyl_dim(*rs, rs->adjoint_weight()), BigInt(roots::catalog_entry(t).dim), t.name());
  }
}

void center_orders(Check& c) {
  for (int n = 1; n <= 12; ++n) {
    std::uint64_t biggest = 1;
    for (auto const& row : semisimple::enumeration_table(n)) biggest = std::max<std::uint64_t>(biggest, row.quotient.order());
    c.eq(semisimple::max_center_order(n), biggest, "max center order at " + std::to_string(n));
    c.that(BigInt(static_cast<unsigned long>(biggest)) <= jordan::pow(BigInt(n), static_cast<unsigned long>(n)),
           "|Z| <= n^n at n = " + std::to_string(n));
  }
}

void n_values(Check& c) {
  std::vector<std::int64_t> want{0, 0, 0, 3, 3, 3, 6, 6, 8};
  for (int n = 0; n <= 8; ++n) c.eq(semisimple::n_of(n), want[static_cast<std::size_t>(n)], "N(" + std::to_string(n) + ")");
  // oracle: brute-force minimal faithful dimension on every class of dim <= 10
  std::vector<std::int64_t> oracle_n(11, 0);
  for (auto const& row : semisimple::enumeration_table(10)) {
    auto answer = row.faithful.dim;
    auto found = oracle::brute_force_min_faithful(row.cls, std::max<std::int64_t>(2 * answer, 1));
    c.that(found == answer, "oracle disagrees on " + row.cls.name());
    for (auto n = row.dim; n <= 10; ++n) oracle_n[static_cast<std::size_t>(n)] = std::max(oracle_n[static_cast<std::size_t>(n)], answer);
  }
  for (int n = 0; n <= 8; ++n) c.eq(oracle_n[static_cast<std::size_t>(n)], want[static_cast<std::size_t>(n)], "oracle N(" + std::to_string(n) + ")");
  c.eq(semisimple::n_of(16), std::int64_t{15}, "N(16)");
}

void constants(Check& c) {
  c.eq(bounds::cn_bound(1), BigInt(14), "C_1");
  c.eq(bounds::cn_bound(2), BigInt(390624), "C_2");
  std::vector<long> mink{2, 24, 48, 5760};
  for (std::uint64_t n = 1; n <= 4; ++n) c.eq(bounds::minkowski_bound(n), BigInt(mink[n - 1]), "M(" + std::to_string(n) + ")");
}

void connected_closed_form(Check& c) {
  for (int n = 0; n <= 6; ++n) {
    auto pipeline = bounds::connected_pipeline(n, n);
    auto closed = bounds::connected_closed_form(n, n);
    c.eq(pipeline.triple.j, closed, "pipeline vs closed form at " + std::to_string(n));
    c.eq(bounds::j_connected(n).triple.j, closed, "j_connected at " + std::to_string(n));
    c.eq(bounds::replay(pipeline.trace), pipeline.triple, "replay at " + std::to_string(n));
  }
  c.eq(bounds::j_connected(2).triple.j, BoundValue::power(4, 24), "J(2)");
}

Json run_json(std::vector<std::string> args) {
  std::ostringstream out, err;
  args.insert(args.begin(), "--json");
  if (run_cli(args, out, err) != 0) throw Error("command failed: " + err.str());
  auto j = Json::parse(out.str());
  j.erase("command");
  return j;
}

void aut0(Check& c) {
  auto one = bounds::j_aut0(1);
  c.eq(one.triple.j, BoundValue(bounds::cn_bound(3)) * BoundValue::power(256, 2816), "J_aut0(1)");
  c.eq(bounds::rkf_aut0(1), ExtNat(11), "Rk_f aut0(1)");
  c.eq(one.triple.rkf, ExtNat(11), "Rk_f in the aut0(1) triple");
  for (std::string n : {"1", "2"})
    c.that(run_json({"bound", "bir", "--dim", n}) == run_json({"bound", "aut0", "--dim", n}), "bir differs from aut0 at " + n);
  c.eq(bounds::rkf_aut0(2), ExtNat(39), "Rk_f aut0(2)");
}

void finite_oracle(Check& c) {
  c.eq(finite::jordan_index(group("a5")), 12u, "index A5");
  c.eq(finite::jordan_index(group("s4")), 6u, "index S4");
  c.eq(finite::jordan_index(group("q8")), 2u, "index Q8");
  c.eq(finite::jordan_constant_exact(group("a5")), 12u, "constant A5");
  c.eq(finite::jordan_constant_exact(group("s4")), 6u, "constant S4");
  for (auto const& entry : std::filesystem::directory_iterator(std::filesystem::path(JORDAN_DATA_DIR) / "groups")) {
    auto g = finite::load_perm_group(entry.path());
    if (g.order() > 200) continue;
    std::vector<oracle::RawPerm> gens;
    for (auto const& p : g.generators()) gens.push_back(p.images());
    if (gens.empty()) gens.push_back(finite::Permutation::identity(g.degree()).images());
    c.eq(finite::max_abelian_order(g), oracle::max_commuting_set(oracle::raw_closure(gens)),
         "max abelian of " + entry.path().filename().string());
  }
  c.eq(finite::verify_bound(group("sl2_5"), finite::BoundContext::parse("gl:2")).str(), std::string("12 <= 390624 PASS"),
       "verify SL(2,5) in GL_2");
}

void dsl_checks(Check& c) {
  std::mt19937 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    auto e = oracle::random_expr(rng, 3);
    if (!(dsl::parse(dsl::print(e)) == e)) c.that(false, "round trip of " + dsl::print(e));
  }
  for (int d = 0; d <= 10; ++d)
    for (int r = 0; r <= 10; ++r) {
      auto text = "extension(unipotent(" + std::to_string(d) + "), torus(" + std::to_string(r) + "))";
      c.eq(dsl::evaluate(dsl::parse(text)).triple, BoundTriple{BoundValue(), ExtNat(r), ExtNat::infinity()}, text);
    }
  for (int i = 0; i < 200; ++i) {
    auto e = oracle::random_expr(rng, 2, true);
    auto d = dsl::evaluate(e);
    c.eq(bounds::replay(d.trace), d.triple, "replay of " + dsl::print(e));
    c.eq(d.trace.result(), d.triple, "trace result of " + dsl::print(e));
  }
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "catalog fidelity", 1, catalog_fidelity},
      {2, "table inequalities up to rank 50", 1, table_inequalities},
      {3, "Weyl dimension at the adjoint weight", 5, weyl_cross_check},
      {4, "center orders bounded by n^n for n <= 12", 10, center_orders},
      {5, "N(n) values with oracle confirmation", 60, n_values},
      {6, "C_n and Minkowski constants", 1, constants},
      {7, "connected closed form equals the pipeline", 5, connected_closed_form},
      {8, "automorphism group bounds", 60, aut0},
      {9, "finite group oracle", 120, finite_oracle},
      {10, "DSL round trip, evaluation and replay", 30, dsl_checks},
  };
  int failed = 0;
  for (auto const& cr : criteria) {
    Check check;
    auto start = std::chrono::steady_clock::now();
    try {
      cr.body(check);
    } catch (std::exception const& e) {
      check.failures.push_back(std::string("threw: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.limit_seconds) {
      std::ostringstream s;
      s << "took " << secs << " s, limit " << cr.limit_seconds << " s";
      check.failures.push_back(s.str());
    }
    bool ok = check.failures.empty();
    failed += !ok;
    std::ostringstream line;
    line.precision(3);
    line << (ok ? "PASS" : "FAIL") << " [" << cr.id << "] " << cr.name << " (" << std::fixed << secs << " s)";
    for (auto const& f : check.failures) line << "; " << f;
    std::cout << line.str() << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
