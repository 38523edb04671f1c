#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "jordan/bounds.hpp"
#include "jordan/dsl.hpp"
#include "jordan/error.hpp"
#include "oracles.hpp"

using namespace jordan;
using namespace jordan::dsl;

namespace {

BoundTriple eval(std::string_view text) { return evaluate(parse(text)).triple; }

BoundTriple triple(BoundValue j, ExtNat rkf, ExtNat bd) { return {std::move(j), std::move(rkf), std::move(bd)}; }

}  // namespace

TEST_CASE("parse examples") {
  auto t = parse("torus(2)");
  CHECK(t.kind == NodeKind::torus);
  CHECK(t.param == 2);
  auto e = parse("extension(unipotent(3), torus(2))");
  CHECK(e.kind == NodeKind::extension);
  REQUIRE(e.children.size() == 2);
  CHECK(e.children[0].kind == NodeKind::unipotent);
  CHECK(e.children[1].kind == NodeKind::torus);
  auto p = parse("product(semisimple([A1], adjoint), abelian_variety(1))");
  CHECK(p.kind == NodeKind::product);
  CHECK(p.children[0].types.size() == 1);
  CHECK(p.children[0].isogeny == std::vector<Isogeny>{Isogeny::adjoint});
  for (auto text : {"torus(2)", "extension(unipotent(3), torus(2))", "product(semisimple([A1], adjoint), abelian_variety(1))",
                    "semisimple([B2, A1], [sc, adjoint])", "product(finite(6), gl_q(3), gl(2))"})
    CHECK(print(parse(text)) == text);
}

TEST_CASE("whitespace and comments") {
  auto a = parse("  # leading comment\n extension (\n unipotent ( 3 ) ,# inner\n torus(2) )  \n# trailing");
  CHECK(a == parse("extension(unipotent(3), torus(2))"));
  CHECK(parse("semisimple([A1,A1],sc)") == parse("semisimple( [ A1 , A1 ] , [sc, sc] )"));
}

TEST_CASE("parse errors carry positions") {
  auto fails_at = [](std::string_view text, std::size_t line, std::size_t column) {
    try {
      parse(text);
    } catch (ParseError const& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
      return;
    }
    FAIL("no error for " << text);
  };
  fails_at("torus(2", 1, 8);
  fails_at("torsu(2)", 1, 1);
  fails_at("torus(x)", 1, 7);
  fails_at("product(torus(1))", 1, 17);
  fails_at("extension(torus(1), torus(2), torus(3))", 1, 29);
  fails_at("gl(129)", 1, 4);
  fails_at("gl_q(0)", 1, 6);
  fails_at("finite(0)", 1, 8);
  fails_at("connected(65)", 1, 11);
  fails_at("aut0(5)", 1, 6);
  fails_at("aut0(0)", 1, 6);
  fails_at("semisimple([B1], sc)", 1, 13);
  fails_at("semisimple([A1, A2], [sc])", 1, 22);
  fails_at("semisimple([A1], isogenous)", 1, 18);
  fails_at("semisimple([], sc)", 1, 13);
  fails_at("torus(2)\ntorus(3)", 2, 1);
  fails_at("torus(1) $", 1, 10);
  fails_at("", 1, 1);
  fails_at("torus(99999999999999999999999)", 1, 7);
}

TEST_CASE("evaluation examples") {
  CHECK(eval("torus(2)") == triple(1, 2, ExtNat::infinity()));
  auto e = evaluate(parse("extension(unipotent(3), torus(2))"));
  CHECK(e.triple == triple(1, 2, ExtNat::infinity()));
  CHECK(e.trace.steps().back().note == "J from torsion_free_normal");
  CHECK(eval("product(finite(6), abelian_variety(1))") == triple(6, 4, ExtNat::infinity()));
  CHECK(eval("connected(2)").j == BoundValue::power(4, 24));
  CHECK(eval("aut0(1)") == eval("bir_connected(1)"));
  CHECK(eval("aut0(1)").rkf == ExtNat(11));
  CHECK(eval("semisimple([A2], adjoint)") == bounds::leaf_triple(bounds::LeafKind::semisimple, 8).triple);
  CHECK(eval("product(gl_q(1), gl_q(1))") == triple(4, 2, 4));
}

TEST_CASE("semisimple leaves build the right class") {
  auto c = isogeny_class(parse("semisimple([A3, A1], [adjoint, sc])"));
  CHECK(c.base.name() == "A1xA3");
  CHECK(semisimple::quotient_center(c) == FiniteAbelianGroup::cyclic(2));
  CHECK(semisimple::min_faithful_dim(c) == 2 + 15);
}

TEST_CASE("finite(1) is neutral") {
  for (auto text : {"torus(3)", "gl_q(2)", "finite(12)", "semisimple([G2], sc)", "product(finite(3), torus(1))",
                    "extension(finite(2), torus(2))", "connected(3)"}) {
    CAPTURE(text);
    auto inner = eval(text);
    CHECK(eval("extension(finite(1), " + std::string(text) + ")") == inner);
    CHECK(eval("extension(" + std::string(text) + ", finite(1))") == inner);
  }
}

TEST_CASE("products are order independent") {
  CHECK(eval("product(finite(6), torus(2), gl_q(2))") == eval("product(gl_q(2), finite(6), torus(2))"));
  CHECK(eval("product(connected(2), semisimple([A1], sc))") == eval("product(semisimple([A1], sc), connected(2))"));
}

TEST_CASE("random round trips") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    auto e = oracle::random_expr(rng, 3);
    auto text = print(e);
    CAPTURE(text);
    CHECK(parse(text) == e);
  }
}

TEST_CASE("traces replay and end in the result") {
  std::mt19937 rng(99);
  for (int i = 0; i < 60; ++i) {
    auto e = oracle::random_expr(rng, 2, true);
    CAPTURE(print(e));
    auto d = evaluate(e);
    CHECK(d.trace.result() == d.triple);
    CHECK(bounds::replay(d.trace) == d.triple);
    CHECK(evaluate(e).triple == d.triple);
  }
}

TEST_CASE("cap breaches name the node") {
  Caps caps;
  caps.search_dim = 2;
  try {
    evaluate(parse("product(torus(1), extension(finite(2), semisimple([A2], adjoint)))"), caps);
    FAIL("expected a cap breach");
  } catch (CapExceeded const& e) {
    CHECK(e.detail().find("/product[1]/extension[1]/semisimple") != std::string::npos);
    CHECK(std::string(e.what()).find("cap exceeded") == std::string(e.what()).rfind("cap exceeded"));
  }
  CHECK_THROWS_AS(evaluate(parse("aut0(4)")), CapExceeded);
}
