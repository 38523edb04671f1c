#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <map>

#include "jordan/bounds.hpp"
#include "jordan/error.hpp"
#include "jordan/finite_group.hpp"
#include "oracles.hpp"

using namespace jordan;
using namespace jordan::finite;

namespace {

PermGroup group(std::string const& name) { return load_perm_group(std::filesystem::path(JORDAN_DATA_DIR) / "groups" / (name + ".perm")); }

PermGroup gens(std::size_t degree, std::vector<std::string> const& cycles) {
  std::vector<Permutation> ps;
  for (auto const& c : cycles) ps.push_back(Permutation::parse(c, degree));
  return closure(std::move(ps));
}

std::vector<oracle::RawPerm> raw(PermGroup const& g) {
  std::vector<oracle::RawPerm> out;
  for (auto const& p : g.generators()) out.push_back(p.images());
  if (out.empty()) out.push_back(Permutation::identity(g.degree()).images());
  return out;
}

std::vector<std::string> const corpus{"trivial", "z6", "klein", "z2xz4xz3", "s3", "d8", "q8", "d10",
                                      "a4", "s4", "a5", "s5", "sl2_5"};

}  // namespace

TEST_CASE("permutations") {
  auto p = Permutation::parse("(1 2 3)(4 5)", 5);
  CHECK(p.str() == "(1 2 3)(4 5)");
  CHECK((p * p.inverse()).is_identity());
  CHECK(Permutation::parse("()", 3).is_identity());
  CHECK(Permutation::parse(" (3 1) ", 3).str() == "(1 3)");
  // apply the right factor first
  auto a = Permutation::parse("(1 2)", 3), b = Permutation::parse("(2 3)", 3);
  CHECK((a * b).str() == "(1 2 3)");
  CHECK_THROWS_AS(Permutation::parse("(1 4)", 3), InvalidArgument);
  CHECK_THROWS_AS(Permutation::parse("(1 2)(2 3)", 3), InvalidArgument);
  CHECK_THROWS_AS(Permutation::parse("(1 2", 3), InvalidArgument);
  CHECK_THROWS_AS(Permutation::from_images({0, 0}), InvalidArgument);
}

TEST_CASE("closure orders") {
  CHECK(gens(3, {"(1 2)", "(1 2 3)"}).order() == 6);
  CHECK(gens(5, {"(1 2 3 4 5)", "(1 2 3)"}).order() == 60);
  CHECK(gens(4, {"(1 2)(3 4)", "(1 3)(2 4)"}).order() == 4);
  std::map<std::string, std::size_t> orders{{"trivial", 1}, {"z6", 6},  {"klein", 4}, {"z2xz4xz3", 24}, {"s3", 6},
                                            {"d8", 8},      {"q8", 8},  {"d10", 10},  {"a4", 12},       {"s4", 24},
                                            {"a5", 60},     {"s5", 120}, {"sl2_5", 120}};
  for (auto const& [name, order] : orders) {
    CAPTURE(name);
    CHECK(group(name).order() == order);
    CHECK(group(name).order() == oracle::raw_closure(raw(group(name))).size());
  }
}

TEST_CASE("closure cap reports a lower bound") {
  Caps caps;
  caps.closure_order = 100;
  try {
    group("s5").order(caps);
    FAIL("expected a cap breach");
  } catch (CapExceeded const& e) {
    CHECK(e.module() == "finite-groups");
    REQUIRE(e.lower_bound());
    CHECK(std::stoul(*e.lower_bound()) > 100);
    CHECK(std::stoul(*e.lower_bound()) <= 120);
  }
}

TEST_CASE("orders divide the Minkowski bound of the degree") {
  // a permutation group of degree d sits in GL_d(Q)
  for (auto const& name : corpus) {
    auto g = group(name);
    CAPTURE(name);
    CHECK(bounds::minkowski_bound(g.degree()) % g.order() == 0);
  }
}

TEST_CASE("max abelian order agrees with the commuting-clique oracle") {
  for (auto const& name : corpus) {
    auto g = group(name);
    CAPTURE(name);
    CHECK(max_abelian_order(g) == oracle::max_commuting_set(oracle::raw_closure(raw(g))));
  }
  CHECK(max_abelian_order(group("a5")) == 5);
  CHECK(max_abelian_order(group("s4")) == 4);
  CHECK(max_abelian_order(group("sl2_5")) == 10);
  CHECK(max_abelian_order(group("z2xz4xz3")) == 24);
}

TEST_CASE("jordan indices and constants") {
  CHECK(jordan_index(group("a5")) == 12);
  CHECK(jordan_index(group("s4")) == 6);
  CHECK(jordan_index(group("q8")) == 2);
  CHECK(jordan_index(group("z6")) == 1);
  CHECK(jordan_constant_exact(group("a5")) == 12);
  CHECK(jordan_constant_exact(group("s4")) == 6);
  CHECK(jordan_constant_exact(group("z6")) == 1);
  for (auto const& name : corpus) {
    auto g = group(name);
    CAPTURE(name);
    CHECK(jordan_constant_exact(g) >= jordan_index(g));
  }
}

TEST_CASE("subgroup lattice agrees with the two-generator scan") {
  // every subgroup of these groups is 2-generated
  std::map<std::string, std::size_t> counts{{"s3", 6}, {"d8", 10}, {"q8", 6}, {"a4", 10},
                                            {"s4", 30}, {"a5", 59}, {"s5", 156}, {"sl2_5", 76}};
  for (auto const& [name, count] : counts) {
    auto g = group(name);
    CAPTURE(name);
    auto scan = oracle::two_generated_scan(raw(g));
    CHECK(subgroup_count(g) == count);
    CHECK(scan.subgroups == count);
    CHECK(jordan_constant_exact(g) == scan.jordan_constant);
  }
}

TEST_CASE("constant cap carries the index as a lower bound") {
  Caps caps;
  caps.subgroup_enum_order = 50;
  try {
    jordan_constant_exact(group("a5"), caps);
    FAIL("expected a cap breach");
  } catch (CapExceeded const& e) {
    CHECK(e.lower_bound() == std::optional<std::string>("12"));
  }
}

TEST_CASE("finite product properties") {
  std::vector<std::string> small{"s3", "klein", "q8", "z6", "d8", "a4"};
  for (auto const& x : small)
    for (auto const& y : small) {
      auto g1 = group(x), g2 = group(y);
      auto prod = direct_product(g1, g2);
      CAPTURE(x);
      CAPTURE(y);
      REQUIRE(prod.order() == g1.order() * g2.order());
      if (prod.order() <= 2000) CHECK(jordan_constant_exact(prod) <= jordan_constant_exact(g1) * jordan_constant_exact(g2));
      if (g1.is_abelian() && g2.is_abelian()) CHECK(rkf_abelian(prod) <= rkf_abelian(g1) + rkf_abelian(g2));
    }
}

TEST_CASE("abelian invariants") {
  CHECK(rkf_abelian(group("z6")) == 1);
  CHECK(rkf_abelian(group("klein")) == 2);
  CHECK(abelian_invariants(group("z2xz4xz3")) == FiniteAbelianGroup({2, 12}));
  CHECK(rkf_abelian(group("z2xz4xz3")) == 2);
  CHECK(rkf_abelian(group("trivial")) == 0);
  CHECK_THROWS_AS(rkf_abelian(group("s3")), InvalidArgument);
}

TEST_CASE("verify bound") {
  auto r = verify_bound(group("sl2_5"), BoundContext::parse("gl:2"));
  CHECK(r.index == 12);
  CHECK(r.constant == std::optional<std::uint64_t>(12));
  CHECK(r.pass);
  CHECK(r.str() == "12 <= 390624 PASS");
  auto a5 = verify_bound(group("a5"), BoundContext::parse("gl:3"));
  CHECK(a5.pass);
  CHECK(a5.bound == BoundValue(bounds::cn_bound(3)));
  CHECK(verify_bound(group("trivial"), BoundContext::parse("connected:1")).str() == "1 <= 1 PASS");
  CHECK(verify_bound(group("s4"), BoundContext::parse("connected:1")).str() == "6 <= 1 FAIL");
  CHECK(verify_bound(group("a5"), BoundContext::parse("aut0:1")).pass);
  CHECK_THROWS_AS(BoundContext::parse("gl"), InvalidArgument);
  CHECK_THROWS_AS(BoundContext::parse("sl:2"), InvalidArgument);
  CHECK(BoundContext::parse("aut0:2").str() == "aut0:2");
}

TEST_CASE("group file errors name the line") {
  CHECK_THROWS_WITH_AS(parse_perm_group("# c\ndegree 3\n(1 5)\n"), doctest::Contains("line 3"), InvalidArgument);
  CHECK_THROWS_WITH_AS(parse_perm_group("(1 2)\n"), doctest::Contains("line 1"), InvalidArgument);
  CHECK_THROWS_AS(parse_perm_group("# nothing\n"), InvalidArgument);
  auto g = parse_perm_group("degree 4  # square\n(1 2 3 4)  # rotation\n(1 3)\n");
  CHECK(g.order() == 8);
}
