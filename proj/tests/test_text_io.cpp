#include "catch_amalgamated.hpp"

#include <sstream>

#include <json.hpp>

#include "actsep/catalog.hpp"
#include "actsep/families.hpp"
#include "actsep/text_io.hpp"

using namespace actsep;

namespace {

  NamedMonoid parse_monoid_text(std::string const& text) {
    std::istringstream in(text);
    return parse_monoid(in);
  }

  std::size_t parse_error_line(std::string const& text) {
    try {
      parse_monoid_text(text);
    } catch (ParseError const& e) {
      return e.line;
    }
    return 0;
  }

}  // namespace

TEST_CASE("monoid text format is exact", "[text]") {
  std::ostringstream out;
  write_monoid(out, "z2", *cyclic_group(2));
  CHECK(out.str()
        == "monoid z2\norder 2\nidentity 0\nlabels e g\ntable\n0 1\n1 0\n");

  auto nm = parse_monoid_text(
      "# a comment\n\nmonoid z2   # trailing\norder 2\nidentity 0\ntable\n"
      "0 1\n1 0\n");
  CHECK(nm.name == "z2");
  CHECK(nm.monoid->table() == cyclic_group(2)->table());
  CHECK_FALSE(nm.monoid->has_labels());
}

TEST_CASE("monoids round-trip through text", "[text]") {
  for (auto const& [name, m] : monoid_catalog()) {
    std::ostringstream out;
    write_monoid(out, name, *m);
    auto back = parse_monoid_text(out.str());
    CHECK(back.name == name);
    CHECK(back.monoid->table() == m->table());
    CHECK(back.monoid->labels() == m->labels());
    std::ostringstream again;
    write_monoid(again, name, *back.monoid);
    CHECK(again.str() == out.str());
  }
}

TEST_CASE("malformed monoid files", "[text]") {
  CHECK(parse_error_line("monoid x\norder two\n") == 2);
  CHECK(parse_error_line("group x\n") == 1);
  CHECK(parse_error_line("monoid x\norder 2\nidentity 0\ntable\n0 1\n1\n") == 6);
  CHECK(parse_error_line("monoid x\norder 2\nidentity 0\ntable\n0 1\n") == 5);
  CHECK(parse_error_line(
            "monoid x\norder 1\nidentity 0\ntable\n0\nextra\n") == 6);
  CHECK_THROWS_AS(
      parse_monoid_text("monoid x\norder 2\nidentity 1\ntable\n0 1\n1 1\n"),
      BadIdentity);
  CHECK_THROWS_AS(
      parse_monoid_text(
          "monoid x\norder 3\nidentity 0\ntable\n0 1 2\n1 2 0\n2 1 0\n"),
      NotAssociative);
}

TEST_CASE("acts round-trip through text", "[text]") {
  NamedMonoid m{"null3", adjoin_identity({{1, 1}, {1, 1}}, {"s", "0"})};
  for (auto const& a : act_corpus(m.monoid, 3)) {
    std::ostringstream out;
    write_act(out, "a", "null3", *a);
    std::istringstream in(out.str());
    auto back = parse_act(in, m);
    CHECK(back.monoid_name == "null3");
    CHECK(back.act->table() == a->table());
  }
  std::istringstream wrong("act a\nmonoid other\nsize 1\ntable\n0 0 0\n");
  CHECK_THROWS_AS(parse_act(wrong, m), ParseError);
  std::istringstream bad("act a\nmonoid null3\nsize 2\ntable\n1 1 0\n1 1 1\n");
  CHECK_THROWS_AS(parse_act(bad, m), IdentityLawViolation);
}

TEST_CASE("partial structures round-trip through text", "[text]") {
  auto bz = build_family("bz_window", {{"w", 4}});
  std::ostringstream mo, ao;
  write_partial_monoid(mo, "bzm", *bz.partial_monoid);
  write_partial_act(ao, "bz", "bzm", *bz.partial_act);
  CHECK(mo.str().rfind("partialmonoid bzm\n", 0) == 0);
  CHECK(ao.str().rfind("partialact bz\n", 0) == 0);
  CHECK(ao.str().find(" - ") != std::string::npos);

  std::istringstream mi(mo.str()), ai(ao.str());
  auto pm = parse_partial_monoid(mi);
  auto pa = parse_partial_act(ai, pm);
  CHECK(pm.monoid->table() == bz.partial_monoid->table());
  CHECK(pa.act->table() == bz.partial_act->table());
  CHECK(pa.act->labels() == bz.partial_act->labels());
}

TEST_CASE("congruences and certificates", "[text]") {
  auto r   = regular_act(adjoin_identity({{1, 1}, {1, 1}}));
  auto rho = principal_closure(r, {{2, 1}});
  std::ostringstream out;
  write_congruence(out, "reg", rho);
  CHECK(out.str() == "congruence reg\nclasses 2\n0\n1 2\n");
  std::istringstream in(out.str());
  CHECK(parse_congruence(in, r) == rho);

  std::istringstream bad("congruence reg\nclasses 2\n0 1\n2\n");
  CHECK_THROWS_AS(parse_congruence(bad, r), NotCompatible);

  auto cert = separate(r, 1, {2});
  REQUIRE(cert);
  std::ostringstream c;
  write_certificate(c, "reg", *cert);
  CHECK(c.str() == "separates 1 from 2\ncongruence reg\nclasses 3\n0\n1\n2\n");
}

TEST_CASE("text and JSON reports carry the same facts", "[text]") {
  auto koz = build_family("kozhukhov", {{"n", 2}});
  for (auto c : {Condition::rf, Condition::wss, Condition::sss, Condition::cs}) {
    auto rep = check_condition(koz.act, c);
    std::ostringstream text;
    write_report(text, "koz", rep);
    auto j = nlohmann::json::parse(report_json("koz", rep));

    std::istringstream lines(text.str());
    std::string        word;
    lines >> word >> word;
    CHECK(word == j["condition"].get<std::string>());
    lines >> word >> word;
    CHECK(word == j["act"].get<std::string>());
    lines >> word >> word;
    CHECK((word == "true") == j["holds"].get<bool>());
    std::size_t count = 0;
    lines >> word >> count;
    REQUIRE(count == j["instances"].size());
    std::string line;
    std::getline(lines, line);
    for (auto const& inst : j["instances"]) {
      std::getline(lines, line);
      std::string expect = "instance " + std::to_string(inst["element"].get<Index>())
                           + " from";
      for (auto x : inst["forbidden"]) {
        expect += " " + std::to_string(x.get<Index>());
      }
      expect += " index " + std::to_string(inst["index"].get<std::size_t>());
      CHECK(line == expect);
      CHECK(inst["blocks"].size() == inst["index"].get<std::size_t>());
    }
    CHECK(j["counterexample"].is_null());
  }
}
