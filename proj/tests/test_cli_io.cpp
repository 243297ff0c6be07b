#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "futile/commands.hpp"
#include "futile/errors.hpp"

using namespace futile;

namespace {

std::string simple_case(const std::string& base, const std::string& algebra) {
  return R"({"format_version": 1, "id": "t", "base": )" + base + R"(, "algebra": )" + algebra + "}";
}

std::vector<std::filesystem::path> corpus_files(const std::string& ext) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(FUTILE_CORPUS_DIR))
    if (e.path().extension() == ext) out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parse_case examples") {
  CaseDescription c = parse_case(simple_case(R"({"kind": "Q"})", R"({"kind": "quotient_poly", "modulus": "x^3"})"));
  auto A = std::get<StructAlgebra<RationalField>>(build_algebra(c));
  CHECK(A.dim() == 3);

  c = parse_case(simple_case(R"({"kind": "Fp", "p": 2})", R"({"kind": "matrix_algebra", "size": 2})"));
  CHECK(std::get<StructAlgebra<PrimeField>>(build_algebra(c)).dim() == 4);

  // e1 * e1 = e2 and e2 * e1 = 0 breaks (e1 e1) e1 = e1 (e1 e1) only through e1*e2 = e1.
  std::string bad = R"({"kind": "structure_constants", "dim": 3, "unit": ["1", "0", "0"], "table": [
      [["1","0","0"], ["0","1","0"], ["0","0","1"]],
      [["0","1","0"], ["0","0","1"], ["0","1","0"]],
      [["0","0","1"], ["0","0","0"], ["0","0","0"]]]})";
  try {
    parse_case(simple_case(R"({"kind": "Q"})", bad));
    FAIL("expected a ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("associativity fails on basis triple") != std::string::npos);
  }
}

TEST_CASE("parse_case errors are located") {
  try {
    parse_case("{\n  \"format_version\": 1,\n  \"id\": \"x\" \"base\"\n}");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.col() > 1);
  }
  try {
    parse_case(simple_case(R"({"kind": "Q"})", R"({"kind": "quotient_poly", "modulus": "x^^3"})"));
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("algebra.modulus", 0) == 0);
    CHECK(e.col() == 3);
  }
  CHECK_THROWS_WITH_AS(parse_case(simple_case(R"({"kind": "Q"})", R"({"kind": "quotient_poly", "modulo": "x"})")),
                       doctest::Contains("unknown field 'modulo'"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_case(simple_case(R"({"kind": "Fp", "p": 4})", R"({"kind": "matrix_algebra", "size": 2})")),
                       doctest::Contains("base.p"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_case(simple_case(R"({"kind": "Q"})",
                                              R"({"kind": "structure_constants", "dim": 1, "unit": [1.5], "table": [[["1"]]]})")),
                       doctest::Contains("algebra.unit[0]"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_case(simple_case(R"({"kind": "Z"})", R"({"kind": "quotient_poly", "modulus": "2*x^2 - 1"})")),
                       doctest::Contains("integers"), ValidationError);
  CHECK_THROWS_AS(parse_case(simple_case(
                      R"({"kind": "LocalArtinian", "algebra": {"kind": "quotient_poly", "modulus": "t^2"}})",
                      R"({"kind": "quotient_poly", "modulus": "t*x^2 - 1"})")),
                  NotAField);
}

TEST_CASE("towers over a local base embed the base") {
  CaseDescription c = parse_case(simple_case(
      R"({"kind": "LocalArtinian", "ground": "Q", "algebra": {"kind": "quotient_poly", "modulus": "t^2"}})",
      R"({"kind": "quotient_poly", "modulus": "x^2 - t"})"));
  auto RA = std::get<RelativeAlgebra<RationalField>>(build_algebra(c));
  CHECK(RA.base.dim() == 2);
  CHECK(RA.amb.dim() == 4);
  CHECK(RA.max_ideal.dim() == 1);
  // x^2 equals the image of t.
  Vec<RationalField> x = RA.amb.basis(2), t = RA.amb.basis(1);
  CHECK(RA.amb.multiply(x, x) == t);
}

TEST_CASE("a degree one level reduces the variable") {
  CaseDescription c = parse_case(simple_case(R"({"kind": "Q"})",
                                             R"({"kind": "tower", "levels": [{"var": "y", "modulus": "2*y - 3"},
                                                 {"var": "z", "modulus": "z^2 - y"}]})"));
  auto A = std::get<StructAlgebra<RationalField>>(build_algebra(c));
  REQUIRE(A.dim() == 2);
  Vec<RationalField> z = A.basis(1);
  CHECK(A.multiply(z, z) == A.scalar(Rational(3, 2)));
}

TEST_CASE("corpus round trip") {
  auto files = corpus_files(".case");
  CHECK(files.size() >= 40);
  std::set<std::string> tags;
  for (const auto& f : files) {
    CAPTURE(f.string());
    CaseDescription c = load_case(f.string());
    std::string text = serialize_case(c);
    CaseDescription again = parse_case(text);
    CHECK(again == c);
    CHECK(serialize_case(again) == text);
    CHECK(c.id == f.parent_path().filename().string() + "/" + f.stem().string());
    CHECK(c.asserts.verdict.has_value());
    CHECK(!c.anchor.empty());
    tags.insert(f.parent_path().filename().string());
  }
  CHECK(tags == std::set<std::string>{tags::kCommutator, tags::kInfiniteField, tags::kFieldExtension,
                                      tags::kLocalArtinian, tags::kInteger, tags::kFiniteBase});
}

TEST_CASE("report round trip on the golden files") {
  for (const auto& f : corpus_files(".expected")) {
    CAPTURE(f.string());
    std::string text = slurp(f);
    ReportDocument doc = parse_report(text);
    CHECK(serialize_report(doc) == text);
    CHECK(parse_report(serialize_report(doc)) == doc);
    REQUIRE(doc.report.has_value());
    CHECK(!doc.report->certificate.kind.empty());
  }
  ReportDocument d;
  d.case_id = "x";
  d.command = "sample";
  d.elapsed_us = 17;
  d.sampling = SamplingSummary{10, 2, 3, 1, 8, true, false, {{1, 1}, {10, 1}}, {{1, 1}}, {{{"1", "0"}}}};
  CHECK(parse_report(serialize_report(d)) == d);
  CHECK_THROWS_AS(parse_report("{\"format_version\": 1}"), ValidationError);
  CHECK_THROWS_AS(parse_report("{"), ParseError);
}

TEST_CASE("run_command examples") {
  CaseDescription cubic = parse_case(simple_case(R"({"kind": "Q"})", R"({"kind": "quotient_poly", "modulus": "x^3"})"));
  ReportDocument d = run_command("decide", cubic);
  REQUIRE(d.report);
  CHECK(d.report->verdict == Verdict::Futile);
  CHECK(d.report->theorem == tags::kInfiniteField);
  CHECK(d.report->certificate.generator == std::vector<std::string>{"0", "1", "0"});

  CaseDescription f2 = parse_case(simple_case(R"({"kind": "Fp", "p": 2})", R"({"kind": "quotient_poly", "modulus": "x^3"})"));
  d = run_command("enumerate", f2);
  REQUIRE(d.enumeration);
  CHECK(d.enumeration->count == 3);
  CHECK(d.enumeration->members.size() == 3);

  CaseDescription quartic = parse_case(simple_case(R"({"kind": "Q"})", R"({"kind": "quotient_poly", "modulus": "x^4"})"));
  d = run_command("oracle-compare", quartic);
  CHECK(d.report->verdict == Verdict::NotFutile);
  REQUIRE(d.oracle);
  CHECK(d.oracle->kind == "sampling");
  CHECK(d.oracle->sampling->diverged);
  CHECK(d.oracle->agreement);

  CHECK_THROWS_AS(run_command("enumerate", cubic), InapplicableCommand);
  CHECK_THROWS_AS(run_command("sample", f2), InapplicableCommand);
  CHECK_THROWS_AS(run_command("bogus", f2), InapplicableCommand);
  CaseDescription mat = parse_case(simple_case(R"({"kind": "Q"})", R"({"kind": "matrix_algebra", "size": 2})"));
  CHECK_THROWS_AS(run_command("factor", mat), InapplicableCommand);
}

TEST_CASE("factor command") {
  CaseDescription c = parse_case(simple_case(R"({"kind": "Q"})", R"J({"kind": "quotient_poly", "modulus": "2*(x^2 + 1)^2*(x - 1)"})J"));
  ReportDocument d = run_command("factor", c);
  REQUIRE(d.factorization);
  CHECK(d.factorization->unit == "2");
  CHECK(d.factorization->factors ==
        std::vector<std::pair<std::string, unsigned>>{{"x - 1", 1}, {"x^2 + 1", 2}});
  CHECK(d.factorization->reexpands);

  c = parse_case(simple_case(R"({"kind": "Fp", "p": 2})", R"({"kind": "quotient_poly", "modulus": "x^4 + x"})"));
  d = run_command("factor", c);
  CHECK(d.factorization->factors.size() == 3);
  CHECK(d.factorization->reexpands);
}

TEST_CASE("reports are deterministic and timing is opt-in") {
  CaseDescription c = parse_case(simple_case(R"({"kind": "Q"})", R"J({"kind": "quotient_poly", "modulus": "(x^2 + 1)^2"})J"));
  CommandOptions o;
  o.trials = 64;
  CHECK(serialize_report(run_command("oracle-compare", c, o)) == serialize_report(run_command("oracle-compare", c, o)));
  CHECK(!run_command("decide", c, o).elapsed_us);
  o.timing = true;
  CHECK(run_command("decide", c, o).elapsed_us);
}

TEST_CASE("check_asserts") {
  CaseDescription c = parse_case(R"({"format_version": 1, "id": "t", "base": {"kind": "Fp", "p": 2},
      "algebra": {"kind": "quotient_poly", "modulus": "x^3"},
      "asserts": {"verdict": "NotFutile", "theorem": "finite-base", "count": 4}})");
  auto problems = check_asserts(c, run_command("oracle-compare", c));
  REQUIRE(problems.size() == 2);
  CHECK(problems[0] == "verdict Futile, expected NotFutile");
  CHECK(problems[1] == "count 3, expected 4");
}

TEST_CASE("batch flags golden mismatches") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "futile_batch_test";
  fs::remove_all(dir);
  fs::create_directories(dir / "finite-base");
  {
    std::ofstream(dir / "finite-base" / "c.case")
        << simple_case(R"({"kind": "Fp", "p": 2})", R"({"kind": "quotient_poly", "modulus": "x^2"})");
  }
  BatchResult r = run_batch(dir.string(), {}, false);
  REQUIRE(r.entries.size() == 1);
  CHECK(r.failure);
  r = run_batch(dir.string(), {}, true);
  CHECK(!r.failure);
  CHECK(r.entries[0].status == "updated");
  r = run_batch(dir.string(), {}, false);
  CHECK(!r.failure);
  CHECK(r.entries[0].status == "ok");
  { std::ofstream(dir / "finite-base" / "c.expected", std::ios::app) << " "; }
  r = run_batch(dir.string(), {}, false);
  CHECK(r.failure);
  CHECK(r.entries[0].status == "mismatch");
  fs::remove_all(dir);
}
