#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "pathsys/path_system.hpp"

using namespace pathsys;

namespace {

PathSystem parse(const std::string& text) {
  std::istringstream in(text);
  return read_path_system(in);
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

const char* const kTriangle =
    "pathsystem v1\n"
    "vertices 3 labels 0 1 2\n"
    "edge 0 1\n"
    "edge 1 2\n"
    "edge 0 2\n";

}  // namespace

TEST_SUITE("pathsys") {

TEST_CASE("Paley construction examples") {
  const PathSystem ps = build_paley_system(PrimeField(29));
  CHECK(ps.path(0, 1) == Path{0, 1});
  CHECK(ps.path(0, 3) == Path{0, 1, 2, 3});
  CHECK(ps.path(0, 8) == Path{0, 4, 8});
  // Difference -3 reorients so the 3-path starts at the larger label.
  CHECK(ps.path_from(3, 0) == Path{3, 2, 1, 0});
  CHECK(ps.path_from(26, 0) == Path{26, 27, 28, 0});
  CHECK_THROWS_AS(build_paley_system(PrimeField(13)), InputError);
  CHECK_THROWS_AS(build_paley_system(PrimeField(5)), InputError);
}

TEST_CASE("Paley paths have the expected shape") {
  for (std::uint64_t p : {29u, 53u, 101u}) {
    const PrimeField pf(p);
    const PathSystem ps = build_paley_system(pf);
    CHECK(ps.paths().size() == p * (p - 1) / 2);
    for (const auto& path : ps.paths()) {
      const std::int64_t d = pf.sub(path.back(), path.front());
      if (path.size() == 2) {
        CHECK(pf.is_residue(d));
      } else if (path.size() == 4) {
        CHECK((d == 3 || d == static_cast<std::int64_t>(p) - 3));
        const std::int64_t step = pf.sub(path[1], path[0]);
        CHECK((step == 1 || step == static_cast<std::int64_t>(p) - 1));
        CHECK(pf.sub(path[2], path[1]) == step);
        CHECK(pf.sub(path[3], path[2]) == step);
      } else {
        REQUIRE(path.size() == 3);
        CHECK(pf.is_nonresidue(d));
        CHECK(pf.sub(path[1], path[0]) == pf.div(d, 2));
        CHECK(pf.sub(path[2], path[1]) == pf.div(d, 2));
        CHECK(pf.is_residue(pf.div(d, 2)));
      }
    }
  }
}

TEST_CASE("consistency of the constructed systems") {
  for (std::uint64_t p : {29u, 53u}) {
    const PathSystem ps = build_paley_system(PrimeField(p));
    CHECK(is_consistent(ps).consistent);
    CHECK(oracle::consistent(ps));
  }
  const PathSystem pet = petersen_fixture();
  CHECK(is_consistent(pet).consistent);
  CHECK(oracle::consistent(pet));
}

TEST_CASE("tampered systems are reported with a witness") {
  const PathSystem pet = petersen_fixture();
  // (2,3,8) is the native 2-path; P_{1,7} does not pass through 2 and 8.
  const PathSystem swapped = pet.with_path({2, 3, 8});
  CHECK(is_consistent(swapped).consistent);
  CHECK(oracle::consistent(swapped));

  // P_{2,8} = (2,1,6,8) contains 1-6-8, so replacing P_{1,8} breaks it.
  const PathSystem broken = pet.with_path({1, 2, 3, 8});
  const auto report = is_consistent(broken);
  REQUIRE_FALSE(report.consistent);
  CHECK_FALSE(oracle::consistent(broken));
  const auto& v = *report.violation;
  const auto from = std::find(v.path.begin(), v.path.end(), v.x);
  const auto to = std::find(v.path.begin(), v.path.end(), v.y);
  REQUIRE(from != v.path.end());
  REQUIRE(to != v.path.end());
  const Path span = from < to ? Path(from, to + 1) : Path(to, from + 1);
  CHECK(oracle::equal_up_to_reversal(span, v.subpath));
  CHECK_FALSE(oracle::equal_up_to_reversal(v.subpath, v.stored));
  CHECK(oracle::equal_up_to_reversal(v.stored, broken.path(v.x, v.y)));

  const PathSystem file = read_path_system_file(PATHSYS_TEST_DATA "/inconsistent.pathsys");
  CHECK_FALSE(is_consistent(file).consistent);
  CHECK_FALSE(oracle::consistent(file));
}

TEST_CASE("consistency agrees with the brute-force checker on random systems") {
  std::mt19937 rng(99);
  int inconsistent = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 4 + trial % 4, 0.6);
    // Random path per pair, consistent or not.
    std::vector<Path> paths;
    for (std::size_t i = 0; i < g.order(); ++i) {
      for (std::size_t j = i + 1; j < g.order(); ++j) {
        auto all = oracle::simple_paths(g, g.vertices()[i], g.vertices()[j], g.order());
        paths.push_back(all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)]);
      }
    }
    const PathSystem ps(g, paths);
    const bool expected = oracle::consistent(ps);
    inconsistent += !expected;
    CHECK(is_consistent(ps).consistent == expected);
  }
  CHECK(inconsistent > 0);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracle::random_connected_graph(rng, 5 + trial % 3, 0.5);
    const auto ps = oracle::random_consistent_system(rng, g);
    REQUIRE(ps.has_value());
    CHECK(oracle::consistent(*ps));
    CHECK(is_consistent(*ps).consistent);
  }
}

TEST_CASE("cyclic symmetry") {
  CHECK(check_cyclic_symmetry(build_paley_system(PrimeField(29))));
  CHECK(check_cyclic_symmetry(build_paley_system(PrimeField(53))));
  const PathSystem ps = build_paley_system(PrimeField(29));
  // 0 -> 4 -> 3 is a valid path (4 and 1 are residues) but breaks the orbit.
  REQUIRE(ps.graph().adjacent(0, 4));
  REQUIRE(ps.graph().adjacent(4, 3));
  CHECK_FALSE(check_cyclic_symmetry(ps.with_path({0, 4, 3})));
  CHECK_THROWS_AS(check_cyclic_symmetry(petersen_fixture()), InputError);
}

TEST_CASE("restriction to vertex subsets") {
  const PathSystem pet = petersen_fixture();
  const auto outer = restrict(pet, {1, 2, 3, 4, 5});
  REQUIRE(outer.system.has_value());
  CHECK(outer.system->graph().size() == 5);
  CHECK(outer.system->path(1, 3) == Path{1, 2, 3});
  CHECK(outer.system->path(2, 5) == Path{2, 1, 5});

  const auto spoke = restrict(pet, {1, 6});
  REQUIRE(spoke.system.has_value());
  CHECK(spoke.system->path(1, 6) == Path{1, 6});

  const auto fail = restrict(build_paley_system(PrimeField(29)), {0, 1, 3});
  CHECK_FALSE(fail.system.has_value());
  REQUIRE(fail.escaping_pair.has_value());
  CHECK(*fail.escaping_pair == std::pair<Vertex, Vertex>{0, 3});

  CHECK(*restrict(pet, pet.graph().vertices()).system == pet);
  CHECK_THROWS_AS(restrict(pet, {}), InputError);
}

TEST_CASE("Petersen fixture") {
  const PathSystem pet = petersen_fixture();
  CHECK(pet.graph().order() == 10);
  CHECK(pet.graph().size() == 15);
  CHECK(pet.path(1, 3) == Path{1, 2, 3});
  CHECK(pet.path_from(2, 8) == Path{2, 1, 6, 8});
  CHECK(pet.path_from(1, 7) == Path{1, 5, 10, 7});
  CHECK(pet.path_from(3, 9) == Path{3, 2, 7, 9});
  CHECK(pet.path_from(4, 10) == Path{4, 3, 8, 10});
  CHECK(pet.path_from(5, 6) == Path{5, 4, 9, 6});
  std::size_t long_paths = 0;
  for (const auto& p : pet.paths()) long_paths += p.size() == 4;
  CHECK(long_paths == 5);
  CHECK(read_path_system_file(PATHSYS_DATA_DIR "/petersen.pathsys") == pet);
}

TEST_CASE("text format round trip") {
  for (const PathSystem& ps : {petersen_fixture(), build_paley_system(PrimeField(29))}) {
    std::ostringstream out;
    write_path_system(out, ps);
    CHECK(parse(out.str()) == ps);
    CHECK(out.str() == to_text(ps));
  }
  const PathSystem tree = read_path_system_file(PATHSYS_TEST_DATA "/tree.pathsys");
  CHECK(tree.order() == 4);
  CHECK(tree.path(3, 4) == Path{3, 2, 4});
}

TEST_CASE("loader errors carry line numbers") {
  const std::string triangle = kTriangle;
  const std::string ok = triangle + "path 0 1 : 0 1\npath 1 2 : 1 2\npath 0 2 : 0 2\n";
  CHECK(parse(ok).order() == 3);
  CHECK(parse("# leading comment\n" + ok + "   # trailing\n").order() == 3);

  CHECK(parse_error_line("pathsys v2\n") == 1);
  CHECK(parse_error_line(triangle + "path 0 1 : 0 1\npath 1 0 : 1 0\n") == 7);
  CHECK(parse_error_line(triangle + "path 0 1 : 0 1\npath 1 2 : 1 2\n") == 7);
  CHECK(parse_error_line(triangle + "path 0 1 : 0 2 1 0\n") == 6);
  CHECK(parse_error_line(triangle + "path 0 1 : 0 1\npath 1 2 : 1 2\npath 0 2 : 0 1 0 2\n") == 8);
  CHECK(parse_error_line("pathsystem v1\nvertices 2 labels 0 1\nedge 0 5\n") == 3);
  CHECK(parse_error_line("pathsystem v1\nvertices 2 labels 0 1\nedge 0 1\nedge 1 0\n") == 4);
  CHECK(parse_error_line("pathsystem v1\nvertices 2 labels 0 1\nedge 0 1\npath 0 1 : 1 0\n") == 4);
  CHECK(parse_error_line("pathsystem v1\nvertices 2 labels 0 x\n") == 2);
  CHECK(parse_error_line("pathsystem v1\nvertices 2 labels 0 1\nbogus\n") == 3);

  CHECK_THROWS_WITH_AS(read_path_system_file(PATHSYS_TEST_DATA "/missing_pair.pathsys"),
                       doctest::Contains("pair {1,4} has no path"), ParseError);
  CHECK_THROWS_WITH_AS(read_path_system_file(PATHSYS_TEST_DATA "/bad_edge.pathsys"), doctest::Contains("line 6"),
                       ParseError);
  CHECK_THROWS_AS(read_path_system_file(PATHSYS_TEST_DATA "/no_such_file.pathsys"), InputError);
}

}  // TEST_SUITE
