#include "doctest.h"

#include "graded/builders.hpp"
#include "graded/cli.hpp"
#include "graded/error.hpp"
#include "graded/io.hpp"

using namespace graded;

namespace {

PrimeField f2(2), f3(3);
RationalField q;

template <class A>
std::string round_trip(const A& a) {
  auto text = dump_json(algebra_to_json(a));
  auto back = algebra_from_json(Json::parse(text));
  return std::visit([](const auto& b) { return dump_json(algebra_to_json(b)); }, back);
}

ErrorKind kind_of(const Json& j) {
  try {
    algebra_from_json(j);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

Json m3_json() { return algebra_to_json(m3_example(f2)); }

}  // namespace

TEST_CASE("json round trip is byte-identical") {
  auto a = m3_example(f2);
  CHECK(round_trip(a) == dump_json(algebra_to_json(a)));
  auto b = m3_example(q);
  CHECK(round_trip(b) == dump_json(algebra_to_json(b)));
  auto c = galois_skew_example(3, 2);
  CHECK(round_trip(c) == dump_json(algebra_to_json(c)));
  Rng rng(11);
  auto s3 = FiniteGroup::symmetric3();
  auto t = twisted_group_algebra(q, s3, random_coboundary(q, s3, rng));
  CHECK(round_trip(t) == dump_json(algebra_to_json(t)));
}

TEST_CASE("json input accepts indices and omitted meta") {
  auto j = m3_json();
  j.erase("meta");
  for (auto& e : j["structure"]) {
    e[0] = e[0].get<std::string>() == "0" ? 0 : 1;
    e[2] = e[2].get<std::string>() == "0" ? 0 : 1;
  }
  auto a = algebra_from_json(j);
  REQUIRE(std::holds_alternative<GradedAlgebra<PrimeField>>(a));
  auto& alg = std::get<GradedAlgebra<PrimeField>>(a);
  CHECK(alg.dim() == 9);
  CHECK(validate_algebra(alg).ok);
}

TEST_CASE("malformed json is rejected as invalid input") {
  CHECK(kind_of(Json::object()) == ErrorKind::InvalidInput);
  auto j = m3_json();
  j["field"]["type"] = "R";
  CHECK(kind_of(j) == ErrorKind::InvalidInput);
  j = m3_json();
  j["unit"] = Json::array({1, 0});
  CHECK(kind_of(j) == ErrorKind::InvalidInput);
  j = m3_json();
  j["structure"][0][4][0] = 2;
  CHECK(kind_of(j) == ErrorKind::InvalidInput);
  j = m3_json();
  j["structure"].push_back(j["structure"][0]);
  CHECK(kind_of(j) == ErrorKind::InvalidInput);
  j = m3_json();
  j["structure"][0][1] = 17;
  CHECK(kind_of(j) == ErrorKind::InvalidInput);
  j = m3_json();
  j["components"].erase("1");
  CHECK(kind_of(j) == ErrorKind::InvalidInput);
  j = m3_json();
  j["group"]["names"] = 3;
  CHECK(kind_of(j) == ErrorKind::InvalidInput);
  j = algebra_to_json(m3_example(q));
  j["unit"][0] = "1/0";
  CHECK(kind_of(j) == ErrorKind::InvalidInput);
}

TEST_CASE("cli build kinds") {
  cli::BuildRequest r;
  r.kind = "group-algebra";
  r.field = "GF(3)";
  r.group = "s3";
  auto a = std::get<GradedAlgebra<PrimeField>>(algebra_from_json(cli::build(r)));
  CHECK(a.dim() == 6);
  CHECK(a.field().order() == 3);

  r = {};
  r.kind = "skew-group";
  r.field = "q";
  r.base = "diag2";
  r.action = "swap";
  CHECK(std::holds_alternative<GradedAlgebra<RationalField>>(algebra_from_json(cli::build(r))));

  r = {};
  r.kind = "skew-group";
  r.base = "field";
  r.n = 3;
  r.action = "frobenius";
  auto s = std::get<GradedAlgebra<PrimeField>>(algebra_from_json(cli::build(r)));
  CHECK(s.dim() == 9);

  r = {};
  r.kind = "crossed-product";
  r.p = 2;
  r.n = 2;
  r.c = 1;
  CHECK(std::get<GradedAlgebra<PrimeField>>(algebra_from_json(cli::build(r))).dim() == 4);

  r = {};
  r.kind = "crossed-product";
  r.field = "q";
  r.group = "z3";
  r.seed = 4;
  CHECK(dump_json(cli::build(r)) == dump_json(cli::build(r)));

  r = {};
  r.kind = "skew-group";
  r.field = "q";
  r.base = "field";
  CHECK_THROWS_AS(cli::build(r), Error);
  r = {};
  r.kind = "m3";
  r.field = "gf4";
  CHECK_THROWS_AS(cli::build(r), Error);
  r.field = "banana";
  CHECK_THROWS_AS(cli::build(r), Error);
}

TEST_CASE("cli check exit codes") {
  AnyAlgebra m3 = m3_example(f2);
  SearchOptions opts;
  CHECK(cli::check(m3, "valid", opts).exit_code == cli::kHolds);
  CHECK(cli::check(m3, "strong", opts).exit_code == cli::kHolds);
  CHECK(cli::check(m3, "simple", opts).exit_code == cli::kHolds);
  CHECK(cli::check(m3, "controlled", opts).exit_code == cli::kFails);
  CHECK(cli::check(m3, "crossed-product", opts).exit_code == cli::kFails);
  CHECK(cli::check(m3, "no-such-property", opts).exit_code == cli::kError);
  CHECK(cli::check(m3, "picard-injective", opts).exit_code == cli::kHolds);
  // Not strongly graded.
  AnyAlgebra trunc = truncated_polynomial(f2, 2, 3);
  auto pic = cli::check(trunc, "picard-injective", opts);
  CHECK(pic.exit_code == cli::kError);
  CHECK(pic.report["error"] == "invalid-input");

  AnyAlgebra bad = square_zero_extension(matrix_algebra(f3, 1), Matrix<PrimeField>::identity(f3, 1));
  auto broken = algebra_to_json(std::get<GradedAlgebra<PrimeField>>(bad));
  broken["unit"][0] = 2;
  auto b = algebra_from_json(broken);
  CHECK(cli::check(b, "valid", opts).exit_code == cli::kFails);
  CHECK(cli::check(b, "strong", opts).exit_code == cli::kError);

  AnyAlgebra g = galois_skew_example(2, 2);
  auto sub = cli::check(g, "subrings", opts);
  CHECK(sub.exit_code == cli::kHolds);
  CHECK(sub.report["details"]["count"] == 2);
}

TEST_CASE("cli reports are deterministic") {
  AnyAlgebra a = galois_skew_example(3, 2);
  SearchOptions opts;
  opts.seed = 9;
  for (const char* p : {"controlled", "crossed-product", "necessary"}) {
    auto x = cli::check(a, p, opts);
    auto y = cli::check(a, p, opts);
    CHECK(dump_json(x.report) == dump_json(y.report));
    CHECK(x.text == y.text);
    CHECK(x.report["seed"] == 9);
  }
}

TEST_CASE("cli oracle") {
  AnyAlgebra m3 = m3_example(f2);
  OracleOptions o;
  auto r = cli::oracle(m3, "ideals", o);
  REQUIRE(r.exit_code == cli::kHolds);
  CHECK(r.report["details"]["count"] == 2);
  CHECK(r.report["details"]["identity_component_count"] == 4);
  CHECK(cli::oracle(m3, "controlled", o).exit_code == cli::kFails);
  CHECK(cli::oracle(AnyAlgebra(galois_skew_example(2, 2)), "controlled", o).exit_code == cli::kHolds);
  CHECK(cli::oracle(AnyAlgebra(m3_example(q)), "ideals", o).exit_code == cli::kError);
  CHECK(cli::oracle(m3, "everything", o).exit_code == cli::kError);
}
