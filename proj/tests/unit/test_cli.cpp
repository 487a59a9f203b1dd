#include "helpers.hpp"
#include "posethom/commands.hpp"
#include "posethom/document.hpp"
#include "posethom/report.hpp"

#include <filesystem>
#include <fstream>

using namespace posethom;

namespace {

const char* kE1 = R"({"points": ["a", "b", "c"], "cover": {"U1": ["a", "c"], "U2": ["b", "c"]}})";

const char* kE1Functor = R"({
  "points": ["a", "b", "c"],
  "cover": {"U1": ["a", "c"], "U2": ["b", "c"]},
  "functor": {
    "direction": "covariant",
    "ranks": {"[U1]": 1, "[U2]": 1, "[U1,U2]": 1},
    "maps": {"[U1] < [U1,U2]": [[2]], "[U2] < [U1,U2]": [[3]]}
  }
})";

std::string write_temp(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "posethom-unit";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string e3_text() {
  SpaceDocument doc;
  RawSpace raw;
  raw.cover = {{"U1", {}}, {"U2", {}}, {"U3", {}}};
  for (int m = 1; m < 8; ++m) {
    std::string name = "p";
    for (int i = 0; i < 3; ++i) {
      if (m >> i & 1) name += std::to_string(i + 1);
    }
    raw.points.push_back(name);
    for (int i = 0; i < 3; ++i) {
      if (m >> i & 1) raw.cover[static_cast<std::size_t>(i)].second.push_back(name);
    }
  }
  doc.space = raw;
  return emit_document(doc);
}

}  // namespace

TEST_CASE("load_space on E1") {
  const auto ls = load_space_text(kE1);
  CHECK(ls.space.point_count() == 3);
  CHECK(ls.space.cover_count() == 2);
  CHECK_FALSE(ls.functor);
  CHECK_FALSE(ls.topology);
}

TEST_CASE("load_space errors") {
  try {
    (void)load_space_text(R"({"points": ["a", "b"], "cover": {"U1": ["a"]}})");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ValidationError);
    CHECK(e.cause() == ErrorCode::UncoveredPoint);
    CHECK(std::string(e.what()).find("'b'") != std::string::npos);
  }
  try {
    (void)load_space_text("{\n  \"points\": [\"a\",\n  }");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(error_of([] { (void)load_space_text(R"({"points": ["a"], "cover": {"U1": ["a"]}, "colour": 1})"); }) ==
        ErrorCode::UnknownField);
  CHECK(error_of([] { (void)parse_document(R"({"functor": {"direction": "covariant", "ranks": {}, "extra": 0}})"); }) ==
        ErrorCode::UnknownField);
  CHECK(error_of([] { (void)load_space_text(R"({"cover": {"U1": ["a"]}})"); }) == ErrorCode::ParseError);
}

TEST_CASE("functor sections resolve against the quotient") {
  const auto ls = load_space_text(kE1Functor);
  REQUIRE(ls.functor);
  CHECK(ls.functor->variance == Variance::Covariant);
  CHECK(ls.functor->rank_of == std::vector<std::size_t>{1, 1, 1});
  CHECK(ls.functor->map_on.at({0, 2}) == make_matrix(1, 1, {2}));
  CHECK(ls.functor->map_on.at({1, 2}) == make_matrix(1, 1, {3}));
  CHECK(error_of([&] { (void)validate_functor(ls.quotient.poset, *ls.functor); }) == std::nullopt);

  // Keys are sets; order inside the brackets is free.
  CHECK(resolve_signature_key(ls.space, ls.quotient, "[U2, U1]") == 2);
  CHECK(error_of([&] { (void)resolve_signature_key(ls.space, ls.quotient, "[U3]"); }) == ErrorCode::UnknownSignature);

  std::string unknown = kE1Functor;
  unknown.replace(unknown.find("\"[U2]\": 1"), 9, "\"[U9]\": 1");
  try {
    (void)load_space_text(unknown);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ValidationError);
    CHECK(e.cause() == ErrorCode::UnknownSignature);
  }
  // Round trip of the functor section.
  const auto back = describe_functor(*ls.functor, ls.space, ls.quotient);
  CHECK(resolve_functor(back, ls.space, ls.quotient).map_on == ls.functor->map_on);
}

TEST_CASE("topology sections") {
  const auto ls = load_space_text(
      R"({"points": ["a", "b", "c"], "cover": {"U1": ["a", "c"], "U2": ["b", "c"]}, "topology": [[], ["a", "b", "c"]]})");
  REQUIRE(ls.topology);
  CHECK(ls.topology->opens().size() == 2);
  try {
    (void)load_space_text(R"({"points": ["a"], "cover": {"U1": ["a"]}, "topology": [["a"]]})");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.cause() == ErrorCode::InvalidTopology);
  }
}

TEST_CASE("random space generation") {
  const auto a = emit_document(generate_random_space(9, 7, 3, true));
  const auto b = emit_document(generate_random_space(9, 7, 3, true));
  CHECK(a == b);
  const auto s = validate_space(*generate_random_space(9, 7, 3, true).space);
  CHECK(is_h_surjective(s));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    CHECK(error_of([&] { (void)validate_space(*generate_random_space(seed, 1 + seed % 10, 1 + seed % 4, false).space); }) ==
          std::nullopt);
  }
  CHECK(error_of([] { (void)generate_random_space(1, 6, 3, true); }) == ErrorCode::InfeasibleRequest);
  CHECK(error_of([] { (void)generate_random_space(1, 0, 3, false); }) == ErrorCode::InfeasibleRequest);
  // Generated documents parse back to the same document.
  const auto doc = generate_random_space(3, 9, 3, false);
  CHECK(emit_document(parse_document(emit_document(doc))) == emit_document(doc));
}

TEST_CASE("reports round-trip and render tables") {
  const auto path = write_temp("e1.json", kE1);
  const auto out = run_command({"homology", path, "--format", "machine"});
  REQUIRE(out.exit_code == 0);
  REQUIRE(out.report);
  CHECK(parse_machine_report(out.output) == *out.report);

  const auto text = emit_report(*out.report, ReportFormat::Text);
  CHECK(text.find("degree") != std::string::npos);
  CHECK(text.find("betti") != std::string::npos);
  CHECK(text.find("torsion") != std::string::npos);

  const auto& t = out.report->tables.front();
  CHECK(t.rows.size() == 2);
  CHECK(t.rows[0].betti == 1);
  CHECK(t.rows[1].betti == 0);
}

TEST_CASE("grading note on a non-surjective space") {
  const auto path = write_temp("nonsurj.json", R"({"points": ["a", "d"], "cover": {"U1": ["a", "d"], "U2": ["d"], "U3": ["d"]}})");
  const auto out = run_command({"inspect", path});
  REQUIRE(out.report);
  CHECK_FALSE(out.report->flags.at("h_surjective"));
  CHECK_FALSE(out.report->flags.at("graded"));
  bool noted = false;
  for (const auto& n : out.report->notes) noted = noted || n.find("2^|U|-1") != std::string::npos;
  CHECK(noted);
}

TEST_CASE("command pipelines") {
  const auto e1 = write_temp("e1.json", kE1);
  const auto e3 = write_temp("e3.json", e3_text());
  const auto constant = write_temp("const.json", R"({"functor": {"direction": "covariant",
      "ranks": {"[U1]": 1, "[U2]": 1, "[U1,U2]": 1},
      "maps": {"[U1] < [U1,U2]": [[1]], "[U2] < [U1,U2]": [[1]]}}})");

  auto out = run_command({"homology", e3, "--folkman=max"});
  REQUIRE(out.exit_code == 0);
  CHECK(out.report->tables[0].rows[0].betti == 1);
  CHECK(out.report->tables[0].rows[1].betti == 1);

  out = run_command({"coloured", e1, "--functor", constant, "--strict"});
  REQUIRE(out.exit_code == 0);
  CHECK(out.report->tables[0].rows[0].betti == 0);
  CHECK(out.report->tables[0].rows[1].betti == 1);

  out = run_command({"coloured", e1, "--functor", "constant", "--strict", "--max-degree", "3"});
  CHECK(out.exit_code == 0);

  out = run_command({"functor-cohomology", e1, "--functor", constant});
  CHECK(out.exit_code == 1);
  CHECK(out.report->error->code == "WrongDirection");

  out = run_command({"cellular", e3, "--functor", "constant"});
  CHECK(out.exit_code == 0);
  CHECK(out.report->flags.at("agrees"));

  out = run_command({"nerve-homology", e3, "--max-degree", "3"});
  CHECK(out.exit_code == 0);
  CHECK(out.report->flags.at("agrees_with_order_complex"));

  out = run_command({"stratified-check", e1, "--topology", "indiscrete"});
  CHECK(out.exit_code == 0);
  CHECK_FALSE(out.report->flags.at("continuous"));
  CHECK(out.report->listings.count("witness") == 1);

  out = run_command({"poset", e1, "--folkman=min"});
  CHECK(out.exit_code == 1);
  CHECK(out.report->error->code == "NoUniqueExtremum");

  const auto two_max = write_temp("twomax.json", R"({"points": ["a", "b"], "cover": {"U1": ["a"], "U2": ["b"]}})");
  out = run_command({"coloured", two_max, "--functor", "constant", "--strict"});
  CHECK(out.exit_code == 1);
  CHECK(out.report->error->code == "NoUniqueMax");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_command({}).exit_code == 2);
  CHECK(run_command({"frobnicate"}).exit_code == 2);
  CHECK(run_command({"homology"}).exit_code == 2);
  CHECK(run_command({"homology", "x.json", "--format", "xml"}).exit_code == 2);
  CHECK(run_command({"generate", "--seed", "1"}).exit_code == 2);
  const auto e1 = write_temp("e1.json", kE1);
  CHECK(run_command({"coloured", e1, "--functor", "constant"}).exit_code == 2);  // weak needs --max-degree
  CHECK(run_command({"--help"}).exit_code == 0);
}

TEST_CASE("generate is deterministic through the command line") {
  const auto a = run_command({"generate", "--seed", "5", "--points", "9", "--sets", "3", "--surjective"});
  const auto b = run_command({"generate", "--seed", "5", "--points", "9", "--sets", "3", "--surjective"});
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(is_h_surjective(load_space_text(a.output).space));
}
