#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "arcs/collineation.hpp"
#include "arcs/errors.hpp"
#include "arcs/search.hpp"
#include "oracles/oracles.hpp"

using namespace arcs;

namespace {

Collineation from_ref(const Plane& plane, const oracle::RefElement& g) {
  return make_collineation(plane, g.m, g.frob);
}

std::vector<PointIndex> image_of_line(const Plane& plane, const Collineation& g, LineIndex l) {
  std::vector<PointIndex> pts(plane.points_on(l).begin(), plane.points_on(l).end());
  return apply_sorted(plane, g, pts);
}

// Every group axiom on a stabilizer, plus Lagrange for the element orders and
// for the order inside the whole group.
void check_subgroup(const Plane& plane, const Stabilizer& st, GroupKind kind) {
  const auto& els = st.elements;
  std::set<Collineation> set(els.begin(), els.end());
  REQUIRE(set.size() == els.size());
  REQUIRE(st.structure.order == els.size());
  CHECK(set.count(identity_collineation()));
  for (const auto& a : els) {
    REQUIRE(set.count(inverse(plane, a)));
    CHECK(st.structure.order % element_order(plane, a) == 0);
    for (const auto& b : els) REQUIRE(set.count(compose(plane, a, b)));
  }
  CHECK(group_order(plane.q(), kind) % st.structure.order == 0);
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(group_order(2, GroupKind::PGL) == 168);
  CHECK(group_order(3, GroupKind::PGL) == 5616);
  CHECK(group_order(4, GroupKind::PGammaL) == 2 * group_order(4, GroupKind::PGL));
  CHECK(group_order(32, GroupKind::PGammaL) > group_order(31, GroupKind::PGL));
  CHECK(group_order(31, GroupKind::PGL) == 31ull * 31 * 31 * (31 * 31 * 31 - 1) * (31 * 31 - 1));
}

TEST_CASE("q=2: the 168 invertible matrices form PGL(3,2), transitive on points") {
  auto field = Field::build(2, 1);
  Plane plane(field);
  auto all = oracle::all_elements(field, false);
  REQUIRE(all.size() == 168);
  std::set<Collineation> distinct;
  std::set<PointIndex> orbit;
  for (const auto& g : all) {
    auto c = from_ref(plane, g);
    distinct.insert(c);
    orbit.insert(apply(plane, c, 0));
  }
  CHECK(distinct.size() == 168);
  CHECK(orbit.size() == 7);
}

TEST_CASE("apply agrees with the reference action, composition and inverse") {
  std::mt19937_64 rng(11);
  for (auto [p, h] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}}) {
    auto field = Field::build(p, h);
    Plane plane(field);
    oracle::RefPlane ref(field);
    for (int trial = 0; trial < 40; ++trial) {
      auto a = random_collineation(plane, GroupKind::PGammaL, rng);
      auto b = random_collineation(plane, GroupKind::PGammaL, rng);
      auto ab = compose(plane, a, b);
      auto ai = inverse(plane, a);
      CHECK(is_identity(compose(plane, a, ai)));
      CHECK(is_identity(compose(plane, ai, a)));
      for (PointIndex x = 0; x < plane.size(); ++x) {
        REQUIRE(apply(plane, a, x) == oracle::act(ref, {a.matrix, a.frob}, x));
        REQUIRE(apply(plane, ab, x) == apply(plane, a, apply(plane, b, x)));
      }
      const int ord = element_order(plane, a);
      Collineation pw = a;
      for (int k = 1; k < ord; ++k) {
        CHECK(!is_identity(pw));
        pw = compose(plane, a, pw);
      }
      CHECK(is_identity(pw));
    }
  }
}

TEST_CASE("collineations map lines onto lines, q <= 9") {
  std::mt19937_64 rng(5);
  for (auto [p, h] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    Plane plane(Field::build(p, h));
    std::set<std::vector<PointIndex>> lines;
    for (LineIndex l = 0; l < plane.size(); ++l) {
      std::vector<PointIndex> pts(plane.points_on(l).begin(), plane.points_on(l).end());
      std::sort(pts.begin(), pts.end());
      lines.insert(pts);
    }
    for (int trial = 0; trial < 10; ++trial) {
      auto g = random_collineation(plane, GroupKind::PGammaL, rng);
      for (LineIndex l = 0; l < plane.size(); ++l) REQUIRE(lines.count(image_of_line(plane, g, l)));
    }
  }
}

TEST_CASE("make_collineation validates and normalizes") {
  Plane plane(Field::build(5, 1));
  CHECK_THROWS_AS(make_collineation(plane, Matrix{{{1, 2, 3}, {2, 4, 1}, {3, 1, 4}}}), Error);
  auto g = make_collineation(plane, Matrix{{{2, 0, 0}, {0, 2, 0}, {0, 0, 2}}});
  CHECK(is_identity(g));
  auto h = make_collineation(plane, Matrix{{{0, 3, 0}, {1, 0, 0}, {0, 0, 4}}});
  CHECK(h.matrix[0][1] == 1);
  CHECK(parse_group("pgammal") == GroupKind::PGammaL);
  CHECK_THROWS_AS(parse_group("gl"), Error);
}

TEST_CASE("frame_map") {
  Plane plane(Field::build(5, 1));
  auto frame = plane.standard_frame();
  CHECK(is_identity(frame_map(plane, frame)));

  auto swapped = frame;
  std::swap(swapped[0], swapped[1]);
  auto s = frame_map(plane, swapped);
  CHECK(!is_identity(s));
  CHECK(element_order(plane, s) == 2);

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> pick(0, int(plane.size()) - 1);
  std::set<Collineation> maps;
  std::set<std::array<PointIndex, 4>> seen;
  int frames = 0;
  while (frames < 100) {
    std::array<PointIndex, 4> f{};
    for (auto& x : f) x = PointIndex(pick(rng));
    bool general = true;
    for (int i = 0; i < 4 && general; ++i)
      for (int j = i + 1; j < 4 && general; ++j) {
        if (f[i] == f[j]) general = false;
        for (int k = j + 1; k < 4 && general; ++k)
          if (f[i] != f[k] && f[j] != f[k] && plane.collinear(f[i], f[j], f[k])) general = false;
      }
    if (!general) {
      CHECK_THROWS_AS(frame_map(plane, f), Error);
      continue;
    }
    ++frames;
    auto g = frame_map(plane, f);
    for (int i = 0; i < 4; ++i) REQUIRE(apply(plane, g, f[i]) == frame[i]);
    maps.insert(g);
    seen.insert(f);
  }
  // Distinct ordered frames never share a map.
  CHECK(maps.size() == seen.size());

  // Sharp transitivity: the 24 orderings of the frame give 24 distinct maps
  // and these make up its stabilizer.
  std::array<int, 4> perm{0, 1, 2, 3};
  std::set<Collineation> perms;
  do {
    perms.insert(frame_map(plane, {frame[perm[0]], frame[perm[1]], frame[perm[2]], frame[perm[3]]}));
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(perms.size() == 24);
  auto st = stabilizer(plane, std::vector<PointIndex>(frame.begin(), frame.end()), GroupKind::PGL);
  CHECK(st.structure.order == 24);
  CHECK(std::set<Collineation>(st.elements.begin(), st.elements.end()) == perms);
  CHECK(st.structure.name.rfind("other(24;", 0) == 0);
}

TEST_CASE("canonical forms: 4-arcs, witnesses, small sets and errors") {
  Plane plane(Field::build(7, 1));
  Canonizer canon(plane, GroupKind::PGL);
  auto frame = plane.standard_frame();
  std::vector<PointIndex> frame_set(frame.begin(), frame.end());
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    auto g = random_collineation(plane, GroupKind::PGL, rng);
    auto moved = apply_sorted(plane, g, frame_set);
    auto cf = canon.canonicalize(moved);
    CHECK(cf.canon == frame_set);
    CHECK(apply_sorted(plane, cf.witness, moved) == cf.canon);
  }
  CHECK(canon.canonical(std::vector<PointIndex>{40}) == std::vector<PointIndex>{0});
  CHECK(canon.canonical(std::vector<PointIndex>{40, 12}) == std::vector<PointIndex>{0, 1});
  std::vector<PointIndex> triangle{0, 1, PointIndex(plane.q() + 1)};
  CHECK(canon.canonical(std::vector<PointIndex>{frame[3], frame[1], frame[2]}) == triangle);
  auto small = canon.canonicalize(std::vector<PointIndex>{frame[3], 30, 44});
  CHECK(apply_sorted(plane, small.witness, std::vector<PointIndex>{frame[3], 30, 44}) == small.canon);

  CHECK_THROWS_AS(canonicalize(plane, std::vector<PointIndex>{}, GroupKind::PGL), Error);
  CHECK_THROWS_AS(canonicalize(plane, std::vector<PointIndex>{1, 1, 2, 3}, GroupKind::PGL), Error);
  // Five points of one line have no general-position quadruple.
  auto line = plane.points_on(0);
  std::vector<PointIndex> collinear(line.begin(), line.begin() + 5);
  CHECK_THROWS_AS(canonicalize(plane, collinear, GroupKind::PGL), Error);
  CHECK_THROWS_AS(stabilizer(plane, collinear, GroupKind::PGL), Error);
}

TEST_CASE("canonical form invariance: 20 random elements per representative") {
  struct Case {
    int p, h;
    GroupKind kind;
  };
  std::mt19937_64 rng(17);
  for (auto c : {Case{7, 1, GroupKind::PGL}, Case{2, 3, GroupKind::PGL}, Case{2, 3, GroupKind::PGammaL},
                 Case{3, 2, GroupKind::PGammaL}}) {
    Plane plane(Field::build(c.p, c.h));
    SearchConfig cfg;
    cfg.group = c.kind;
    cfg.classification_threshold = plane.q() + 2;
    Canonizer canon(plane, c.kind);
    for (const auto& level : classify(plane, cfg))
      for (std::size_t i = 0; i < level.count(); ++i) {
        std::vector<PointIndex> rep(level.representatives[i].begin(), level.representatives[i].end());
        REQUIRE(canon.canonical(rep) == rep);
        for (int t = 0; t < 20; ++t) {
          auto g = random_collineation(plane, c.kind, rng);
          auto moved = apply_sorted(plane, g, rep);
          auto cf = canon.canonicalize(moved);
          REQUIRE(cf.canon == rep);
          REQUIRE(apply_sorted(plane, cf.witness, moved) == rep);
        }
      }
  }
}

TEST_CASE("stabilizers match brute force over the whole group for q=3 and q=4") {
  for (auto [p, h] : std::vector<std::pair<int, int>>{{3, 1}, {2, 2}}) {
    auto field = Field::build(p, h);
    Plane plane(field);
    for (GroupKind kind : {GroupKind::PGL, GroupKind::PGammaL}) {
      if (h == 1 && kind == GroupKind::PGammaL) continue;
      std::vector<Collineation> group;
      for (const auto& g : oracle::all_elements(field, kind == GroupKind::PGammaL)) group.push_back(from_ref(plane, g));
      REQUIRE(group.size() == group_order(plane.q(), kind));
      SearchConfig cfg;
      cfg.group = kind;
      cfg.classification_threshold = plane.q() + 2;
      std::uint64_t orbit_sum = 0;
      for (const auto& level : classify(plane, cfg))
        for (std::size_t i = 0; i < level.count(); ++i) {
          std::vector<PointIndex> rep(level.representatives[i].begin(), level.representatives[i].end());
          std::set<Collineation> brute;
          for (const auto& g : group)
            if (apply_sorted(plane, g, rep) == rep) brute.insert(g);
          auto st = stabilizer(plane, rep, kind);
          CHECK(std::set<Collineation>(st.elements.begin(), st.elements.end()) == brute);
          check_subgroup(plane, st, kind);
          if (level.size == 6) orbit_sum += group.size() / st.structure.order;
        }
      // q=4: the 6-arcs are the hyperovals, and there are 168 of them.
      if (p == 2) CHECK(orbit_sum == 168);
    }
  }
}

TEST_CASE("structure names") {
  auto field = Field::build(7, 1);
  Plane plane(field);
  auto frame = plane.standard_frame();
  std::vector<PointIndex> fs(frame.begin(), frame.end());
  auto full = stabilizer(plane, fs, GroupKind::PGL).elements;

  auto name_of = [&](std::vector<Collineation> gens) { return describe_group(plane, generate_group(plane, gens)).name; };
  auto perm_map = [&](std::array<int, 4> perm) {
    return frame_map(plane, {frame[perm[0]], frame[perm[1]], frame[perm[2]], frame[perm[3]]});
  };
  const auto swap01 = perm_map({1, 0, 2, 3});
  const auto swap23 = perm_map({0, 1, 3, 2});
  const auto cycle3 = perm_map({1, 2, 0, 3});
  const auto cycle4 = perm_map({1, 2, 3, 0});

  CHECK(name_of({identity_collineation()}) == "trivial");
  CHECK(name_of({swap01}) == "Z2");
  CHECK(name_of({cycle3}) == "Z3");
  CHECK(name_of({cycle4}) == "Z4");
  CHECK(name_of({swap01, swap23}) == "Z2xZ2");
  CHECK(name_of({cycle3, swap01}) == "S3");
  CHECK(describe_group(plane, full).element_orders == std::map<int, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}});

  auto gens = generators(plane, full);
  CHECK(gens.size() <= 3);
  CHECK(generate_group(plane, gens).size() == 24);
}

TEST_CASE("stabilizer closure and Lagrange on classified representatives") {
  for (auto [p, h, kind] : std::vector<std::tuple<int, int, GroupKind>>{
           {5, 1, GroupKind::PGL}, {7, 1, GroupKind::PGL}, {2, 3, GroupKind::PGL}, {2, 3, GroupKind::PGammaL}}) {
    Plane plane(Field::build(p, h));
    SearchConfig cfg;
    cfg.group = kind;
    cfg.classification_threshold = plane.q() + 2;
    for (const auto& level : classify(plane, cfg))
      for (std::size_t i = 0; i < level.count(); ++i) {
        std::vector<PointIndex> rep(level.representatives[i].begin(), level.representatives[i].end());
        check_subgroup(plane, stabilizer(plane, rep, kind), kind);
      }
  }
}
