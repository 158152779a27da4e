#include <catch2/catch_amalgamated.hpp>

#include "twistkit/twistkit.hpp"

using namespace twistkit;

namespace {

const char* kTrefoil = "X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n";
const char* kHopf = "X 1 3 2 4\nX 3 1 4 2\n";
const char* kFigure8 = "X 4 1 5 2\nX 2 8 3 7\nX 8 5 1 6\nX 6 4 7 3\n";

std::vector<int> signs(const LinkDiagram& d) {
  std::vector<int> s;
  for (const auto& x : d.crossings) s.push_back(x.sign);
  return s;
}

}  // namespace

TEST_CASE("trefoil parses", "[diagram]") {
  LinkDiagram d = parse_pd(kTrefoil);
  CHECK(d.crossings.size() == 3);
  CHECK(signs(d) == std::vector<int>{1, 1, 1});
  CHECK(d.arc_count == 6);
  CHECK(component_count(d) == 1);
  for (int lab = 1; lab <= 6; ++lab) CHECK(d.component_of_arc[std::size_t(lab)] == 0);
}

TEST_CASE("trefoil wirtinger presentation", "[diagram]") {
  GroupPresentation p = wirtinger(parse_pd(kTrefoil));
  CHECK(p.gens == 3);
  CHECK(p.components == 1);
  CHECK(p.component_of_generator == std::vector<int>{0, 0, 0});
  REQUIRE(p.relators.size() == 3);
  CHECK(p.relators[0] == FreeWord{{1, 1}, {2, 1}, {0, -1}, {2, -1}});
  CHECK(p.relators[1] == FreeWord{{2, 1}, {0, 1}, {1, -1}, {0, -1}});
  CHECK(p.relators[2] == FreeWord{{0, 1}, {1, 1}, {2, -1}, {1, -1}});
}

TEST_CASE("relabeled trefoil parses the same way", "[diagram]") {
  // all labels shifted by one along the strand
  LinkDiagram d = parse_pd("X 2 5 3 6\nX 4 1 5 2\nX 6 3 1 4\n");
  CHECK(signs(d) == std::vector<int>{1, 1, 1});
  CHECK(component_count(d) == 1);
  GroupPresentation p = wirtinger(d);
  CHECK(p.gens == 3);
  CHECK(p.relators.size() == 3);
}

TEST_CASE("hopf link parses", "[diagram]") {
  LinkDiagram d = parse_pd(kHopf);
  CHECK(signs(d) == std::vector<int>{-1, -1});
  CHECK(component_count(d) == 2);
  CHECK(d.component_of_arc[1] == 0);
  CHECK(d.component_of_arc[2] == 0);
  CHECK(d.component_of_arc[3] == 1);
  CHECK(d.component_of_arc[4] == 1);

  GroupPresentation p = wirtinger(d);
  CHECK(p.gens == 2);
  CHECK(p.components == 2);
  CHECK(p.component_of_generator == std::vector<int>{0, 1});
  REQUIRE(p.relators.size() == 2);
  CHECK(p.relators[0] == FreeWord{{0, 1}, {1, -1}, {0, -1}, {1, 1}});
  CHECK(p.relators[1] == FreeWord{{1, 1}, {0, -1}, {1, -1}, {0, 1}});
}

TEST_CASE("positive hopf variant", "[diagram]") {
  LinkDiagram d = parse_pd("X 1 4 2 3\nX 3 2 4 1\n");
  CHECK(signs(d) == std::vector<int>{1, 1});
  CHECK(component_count(d) == 2);
}

TEST_CASE("figure eight signs", "[diagram]") {
  LinkDiagram d = parse_pd(kFigure8);
  CHECK(signs(d) == std::vector<int>{1, -1, 1, -1});
  CHECK(component_count(d) == 1);
  GroupPresentation p = wirtinger(d);
  CHECK(p.gens == 4);
  CHECK(p.relators.size() == 4);
}

TEST_CASE("positive kink", "[diagram]") {
  LinkDiagram d = parse_pd("X 1 2 2 1\n");
  CHECK(signs(d) == std::vector<int>{1});
  CHECK(component_count(d) == 1);
  GroupPresentation p = wirtinger(d);
  CHECK(p.gens == 1);
  REQUIRE(p.relators.size() == 1);
  CHECK(p.relators[0] == FreeWord{{0, 1}, {0, 1}, {0, -1}, {0, -1}});
}

TEST_CASE("negative kink", "[diagram]") {
  LinkDiagram d = parse_pd("X 1 1 2 2\n");
  CHECK(signs(d) == std::vector<int>{-1});
  CHECK(component_count(d) == 1);
}

TEST_CASE("components header appends circles", "[diagram]") {
  LinkDiagram d = parse_pd("components 1\n");
  CHECK(d.crossings.empty());
  CHECK(d.arc_count == 1);
  CHECK(component_count(d) == 1);
  GroupPresentation p = wirtinger(d);
  CHECK(p.gens == 1);
  CHECK(p.relators.empty());
  CHECK(p.component_of_generator == std::vector<int>{0});

  LinkDiagram d3 = parse_pd("components 3\n");
  CHECK(component_count(d3) == 3);
  CHECK(wirtinger(d3).gens == 3);

  LinkDiagram mixed = parse_pd("components 1\nX 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n");
  CHECK(component_count(mixed) == 2);
  CHECK(mixed.arc_count == 7);
  CHECK(mixed.component_of_arc[7] == 1);
  GroupPresentation p2 = wirtinger(mixed);
  CHECK(p2.gens == 4);
  CHECK(p2.relators.size() == 3);
  CHECK(p2.component_of_generator == std::vector<int>{0, 0, 0, 1});
}

TEST_CASE("comments and separators", "[diagram]") {
  LinkDiagram d = parse_pd("# a trefoil\nX 1, 4, 2, 5\n\nX 3 6 4 1  # inline note\nX\t5 2 6 3\n");
  CHECK(d.crossings.size() == 3);
  CHECK(signs(d) == std::vector<int>{1, 1, 1});
}

TEST_CASE("orientation fallback when propagation stalls", "[diagram]") {
  // two-crossing clasp where one strand is always over: both over
  // orientations are consistent, the numbering rule picks one
  LinkDiagram d = parse_pd("X 1 3 2 4\nX 2 4 1 3\n");
  CHECK(signs(d) == std::vector<int>{1, 1});
  CHECK(component_count(d) == 2);
  CHECK(d.component_of_arc[1] == 0);
  CHECK(d.component_of_arc[3] == 1);

  // mirror arrangement falls back to the opposite over orientation
  LinkDiagram m = parse_pd("X 1 4 2 3\nX 2 3 1 4\n");
  CHECK(signs(m) == std::vector<int>{-1, -1});
  CHECK(component_count(m) == 2);
}

TEST_CASE("parse errors carry kind and line", "[diagram]") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_pd(text);
    } catch (const pd_parse_error& e) {
      return e.kind;
    }
    return pd_error_kind::malformed_line;  // unreachable in these cases
  };

  CHECK_THROWS_AS(parse_pd(""), pd_parse_error);
  CHECK(kind_of("") == pd_error_kind::malformed_line);

  CHECK(kind_of("X 1 2 3\n") == pd_error_kind::malformed_line);
  CHECK(kind_of("Y 1 2 3 4\n") == pd_error_kind::malformed_line);
  CHECK(kind_of("X 1 2 2 x\n") == pd_error_kind::malformed_line);
  CHECK(kind_of("X 0 2 2 1\n") == pd_error_kind::malformed_line);
  CHECK(kind_of("components\n") == pd_error_kind::malformed_line);

  CHECK(kind_of("X 1 2 3 4\n") == pd_error_kind::arc_multiplicity);
  CHECK(kind_of("X 1 2 2 1\nX 1 2 2 1\n") == pd_error_kind::arc_multiplicity);

  // the same label consumed twice as an incoming under arc
  CHECK(kind_of("X 1 2 3 4\nX 1 4 3 2\n") == pd_error_kind::inconsistent_tracing);

  // consistent claims but labels out of order along a component
  CHECK(kind_of("X 1 2 3 4\nX 2 1 4 3\n") == pd_error_kind::inconsistent_tracing);

  try {
    parse_pd("X 1 2 2 1\nX 1 2 2 1\n");
    FAIL("expected pd_parse_error");
  } catch (const pd_parse_error& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("presentation validation rejects bad input", "[diagram]") {
  GroupPresentation p;
  p.gens = 1;
  p.components = 1;
  p.component_of_generator = {0};
  p.relators.push_back(FreeWord{{0, 1}, {0, -1}});
  CHECK_NOTHROW(validate_presentation(p));

  GroupPresentation bad = p;
  bad.relators.push_back(FreeWord{{1, 1}});
  CHECK_THROWS_AS(validate_presentation(bad), std::invalid_argument);

  GroupPresentation bad2 = p;
  bad2.relators.push_back(FreeWord{{0, 2}});
  CHECK_THROWS_AS(validate_presentation(bad2), std::invalid_argument);

  GroupPresentation bad3 = p;
  bad3.component_of_generator = {};
  CHECK_THROWS_AS(validate_presentation(bad3), std::invalid_argument);

  GroupPresentation bad4 = p;
  bad4.component_of_generator = {1};
  CHECK_THROWS_AS(validate_presentation(bad4), std::invalid_argument);
}

TEST_CASE("free word helpers", "[diagram]") {
  FreeWord w = FreeWord::gen(2).append(0, -1).append(1, 1);
  CHECK(w.size() == 3);
  CHECK(phi(w) == 1);
  FreeWord inv = w.inverse();
  CHECK(inv == FreeWord{{1, -1}, {0, 1}, {2, -1}});
  CHECK(phi(inv) == -1);
  CHECK(FreeWord().empty());
  CHECK(phi(FreeWord()) == 0);
}
