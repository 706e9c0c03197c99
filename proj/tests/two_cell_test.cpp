#include <doctest.h>

#include "pathkit/checks.hpp"

using namespace pathkit;

namespace {

Term t(const char* s) { return parse_term(s); }
Path p(const char* s) { return parse_path(s); }

const PathPosition kRoot{};
const PathPosition kFirst{{PathStep::First}};
const PathPosition kSecond{{PathStep::Second}};

Generator gen(std::uint64_t seed, std::size_t depth = 4) {
  GeneratorConfig cfg;
  cfg.seed = seed;
  cfg.max_path_depth = depth;
  return Generator(cfg);
}

RwSequence one_step(const Path& from, const char* rule, const PathPosition& at = kRoot) {
  Path to = rw_apply(from, at, rule);
  return mk_sequence({from, to}, {{at, rule, Direction::Forward, from, to}});
}

/// N_0 = z, N_{k+1} = (\x.x) N_k.
Term tower(int k) {
  Term n = t("z");
  for (int i = 0; i < k; ++i) n = Term::app(t("\\x.x"), n);
  return n;
}

SequenceError::Kind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const SequenceError& e) {
    return e.kind();
  }
  FAIL("expected a SequenceError");
  return SequenceError::Kind::Empty;
}

}  // namespace

TEST_CASE("mk_sequence") {
  Path sr = p("sigma(rho(a))");
  RwSequence s = mk_sequence({sr, p("rho(a)")}, {{kRoot, "sr", Direction::Forward, sr, p("rho(a)")}});
  CHECK(s.length() == 1);
  CHECK(s.boundary() == Endpoints{t("a"), t("a")});

  RwSequence id = mk_sequence({sr}, {});
  CHECK(id.is_identity());
  CHECK(id == RwSequence::identity(sr));

  using K = SequenceError::Kind;
  Path forged = p("tau(rho(a), rho(a))");
  CHECK(kind_of([&] { mk_sequence({sr, forged}, {{kRoot, "sr", Direction::Forward, sr, forged}}); }) ==
        K::StepMismatch);
  CHECK(kind_of([&] { mk_sequence({sr, forged}, {{kRoot, "sr", Direction::Forward, sr, p("rho(a)")}}); }) ==
        K::StepMismatch);
  CHECK(kind_of([&] { mk_sequence({}, {}); }) == K::Empty);
  CHECK(kind_of([&] { mk_sequence({sr, sr}, {}); }) == K::LengthMismatch);

  // A reversed step: entries[1] rewrites to entries[0].
  RwSequence back = mk_sequence({p("rho(a)"), sr}, {{kRoot, "sr", Direction::Reverse, p("rho(a)"), sr}});
  CHECK(back.last() == sr);

  // A rule that moves endpoints is caught.
  RuleSet bad = RuleSet::standard();
  bad.add({"drift", [](const Path& q) -> std::optional<Path> {
             if (q.is(PathKind::Rho) && q.term() == Term::free("a")) return Path::rho(Term::free("b"));
             return std::nullopt;
           }});
  CHECK(kind_of([&] {
          mk_sequence({p("rho(a)"), p("rho(b)")},
                      {{kRoot, "drift", Direction::Forward, p("rho(a)"), p("rho(b)")}}, bad);
        }) == K::EndpointDrift);
}

TEST_CASE("infer_sequence and sequence_of_steps") {
  Path r = p("beta((\\x.x) z)");
  RwSequence s = infer_sequence({Path::sigma(Path::sigma(r)), r, Path::tau(r, p("rho(z)"))});
  REQUIRE(s.length() == 2);
  CHECK(s.steps()[0].rule == "ss");
  CHECK(s.steps()[0].direction == Direction::Forward);
  CHECK(s.steps()[1].rule == "trr");
  CHECK(s.steps()[1].direction == Direction::Reverse);
  CHECK(sequence_of_steps(s.first(), s.steps()) == s);
  CHECK(sequence_of_steps(r, {}) == RwSequence::identity(r));
  CHECK_THROWS_AS(infer_sequence({r, p("rho((\\x.x) z)")}), SequenceError);
}

TEST_CASE("vcomp and reverse2") {
  Path r = p("beta((\\x.x) z)");
  RwSequence id = RwSequence::identity(r);
  CHECK(vcomp(id, id) == id);
  RwSequence ss = one_step(Path::sigma(Path::sigma(r)), "ss");
  CHECK(vcomp(ss, id) == ss);
  CHECK(vcomp(RwSequence::identity(ss.first()), ss) == ss);
  CHECK(kind_of([&] { vcomp(id, ss); }) == SequenceError::Kind::JunctionMismatch);

  CHECK(reverse2(id) == id);
  RwSequence sr = one_step(p("sigma(rho(a))"), "sr");
  RwSequence back = reverse2(sr);
  CHECK(back.first() == p("rho(a)"));
  CHECK(back.last() == p("sigma(rho(a))"));
  CHECK(back.steps()[0].direction == Direction::Reverse);
  CHECK(back.steps()[0].rule == "sr");
  CHECK(mk_sequence(back.entries(), back.steps()) == back);
}

TEST_CASE("property: vertical composition is strictly associative, unital and invertible") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Generator g = gen(sample_seed(30, i));
    RwSequence x = g.walk(g.path(), g.below(4));
    RwSequence y = g.walk(x.last(), g.below(4));
    RwSequence z = g.walk(y.last(), g.below(4));
    INFO(print_sequence(x));
    CHECK(vcomp(vcomp(x, y), z) == vcomp(x, vcomp(y, z)));
    CHECK(vcomp(RwSequence::identity(x.first()), x) == x);
    CHECK(vcomp(x, RwSequence::identity(x.last())) == x);
    CHECK(reverse2(reverse2(x)) == x);
    CHECK(reverse2(vcomp(x, y)) == vcomp(reverse2(y), reverse2(x)));
    // The round trip collapses to the identity modulo cancellation.
    CHECK(cd2_canonicalize(vcomp(x, reverse2(x))) == RwSequence::identity(x.first()));
    RwSequence checked = mk_sequence(vcomp(x, y).entries(), vcomp(x, y).steps());
    CHECK(checked.length() == x.length() + y.length());
  }
}

TEST_CASE("hcomp") {
  Path s = p("sigma(sigma(beta((\\x.x) z)))");
  Path r = p("sigma(rho(z))");
  RwSequence alpha = one_step(s, "ss");
  RwSequence theta = one_step(r, "sr");
  RwSequence h = hcomp(alpha, theta);
  REQUIRE(h.entries().size() == 3);
  CHECK(h.entries()[0] == Path::tau(s, r));
  CHECK(h.entries()[1] == Path::tau(alpha.last(), r));
  CHECK(h.entries()[2] == Path::tau(alpha.last(), theta.last()));
  CHECK(h.steps()[0].position == kFirst);
  CHECK(h.steps()[1].position == kSecond);
  CHECK(mk_sequence(h.entries(), h.steps()) == h);

  CHECK(hcomp(RwSequence::identity(s), RwSequence::identity(r)) ==
        RwSequence::identity(Path::tau(s, r)));

  RwSequence whisker = hcomp(alpha, RwSequence::identity(r));
  CHECK(whisker.entries() == std::vector<Path>{Path::tau(s, r), Path::tau(alpha.last(), r)});

  CHECK(kind_of([&] { hcomp(theta, alpha); }) == SequenceError::Kind::Composability);
}

TEST_CASE("property: hcomp has len(alpha) + len(theta) - 1 entries") {
  for (std::uint64_t i = 0; i < 300; ++i) {
    Generator g = gen(sample_seed(31, i));
    Path s = g.path();
    Path r = g.path_from(target(s), 4);
    RwSequence alpha = g.walk(s, g.below(4));
    RwSequence theta = g.walk(r, g.below(4));
    RwSequence h = hcomp(alpha, theta);
    CHECK(h.entries().size() == alpha.entries().size() + theta.entries().size() - 1);
    CHECK(h.first() == Path::tau(alpha.first(), theta.first()));
    CHECK(h.last() == Path::tau(alpha.last(), theta.last()));
    CHECK(h.boundary() == Endpoints{source(s), target(r)});
    CHECK(mk_sequence(h.entries(), h.steps()) == h);
  }
}

TEST_CASE("cd2_canonicalize") {
  // tau(s, t) with s |> s' inside the first component and t |> t' inside the second.
  Path s = p("sigma(sigma(beta((\\x.x) z)))");
  Path s2 = p("beta((\\x.x) z)");
  Path t1 = p("sigma(rho(z))");
  Path t2 = p("rho(z)");
  RwSequence second_first = infer_sequence({Path::tau(s, t1), Path::tau(s, t2), Path::tau(s2, t2)});
  RwSequence first_first = infer_sequence({Path::tau(s, t1), Path::tau(s2, t1), Path::tau(s2, t2)});
  CHECK(cd2_canonicalize(second_first) == first_first);
  CHECK(cd2_canonicalize(first_first) == first_first);

  RwSequence id = RwSequence::identity(s);
  CHECK(cd2_canonicalize(id) == id);

  RwSequence sr = one_step(p("sigma(rho(a))"), "sr");
  CHECK(cd2_canonicalize(vcomp(sr, reverse2(sr))) == RwSequence::identity(sr.first()));
}

TEST_CASE("property: cd2_canonicalize is idempotent and sound") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    Generator g = gen(sample_seed(32, i));
    Path s = g.path();
    Path r = g.path_from(target(s), 4);
    RwSequence x = g.coin() ? g.walk(Path::tau(s, r), 1 + g.below(6))
                            : hcomp(g.walk(s, g.below(4)), g.walk(r, g.below(4)));
    RwSequence c = cd2_canonicalize(x);
    INFO(print_sequence(x));
    CHECK(cd2_canonicalize(c) == c);
    CHECK(c.first() == x.first());
    CHECK(c.last() == x.last());
    CHECK(c.length() <= x.length());
    CHECK(mk_sequence(c.entries(), c.steps()) == c);
    for (std::size_t k = 0; k + 1 < c.length(); ++k) {
      const PathPosition& a = c.steps()[k].position;
      const PathPosition& b = c.steps()[k + 1].position;
      CHECK_FALSE((a.disjoint(b) && b < a));
    }
  }
}

TEST_CASE("coherence components") {
  Path s = p("beta((\\x.x) ((\\x.x) z))");
  Path r = p("beta((\\x.x) z)");
  Path u = p("rho(z)");
  RwSequence assoc = coherence_component(CoherenceKind::Assoc, Path::tau(s, Path::tau(r, u)));
  CHECK(assoc.entries() == std::vector<Path>{Path::tau(s, Path::tau(r, u)), Path::tau(Path::tau(s, r), u)});
  CHECK(assoc.steps()[0].rule == "tt");
  CHECK(assoc.steps()[0].direction == Direction::Reverse);
  CHECK(mk_sequence(assoc.entries(), assoc.steps()) == assoc);

  Path rho_a = p("rho((\\x.x) ((\\x.x) z))");
  RwSequence right = coherence_component(CoherenceKind::RightUnit, Path::tau(rho_a, s));
  CHECK(right.entries() == std::vector<Path>{Path::tau(rho_a, s), s});
  CHECK(right.steps()[0].rule == "tlr");

  RwSequence left = coherence_component(CoherenceKind::LeftUnit, Path::tau(r, u));
  CHECK(left.last() == r);
  CHECK(left.steps()[0].rule == "trr");

  using K = SequenceError::Kind;
  CHECK(kind_of([&] { coherence_component(CoherenceKind::Assoc, p("rho(a)")); }) == K::ShapeMismatch);
  CHECK(kind_of([&] { coherence_component(CoherenceKind::LeftUnit, Path::tau(s, r)); }) == K::ShapeMismatch);
  CHECK(kind_of([&] { coherence_component(CoherenceKind::RightUnit, Path::tau(r, u)); }) == K::ShapeMismatch);
}

TEST_CASE("pentagon on chained beta-steps") {
  Path s = Path::beta(tower(4));
  Path r = Path::beta(tower(3));
  Path q = Path::beta(tower(2));
  Path u = Path::beta(tower(1));
  CellRoutes routes = pentagon_routes(s, r, q, u);
  Path end = Path::tau(Path::tau(Path::tau(s, r), q), u);
  CHECK(routes.expected_end == end);
  CHECK(routes.left.last() == end);
  CHECK(routes.right.last() == end);
  CHECK(routes.left.first() == Path::tau(s, Path::tau(r, Path::tau(q, u))));
  CHECK(routes.left.length() == 2);
  CHECK(routes.right.length() == 3);
  CHECK(mk_sequence(routes.right.entries(), routes.right.steps()) == routes.right);

  CheckReport rep = check_pentagon(s, r, q, u);
  CHECK(rep.passed());
  CHECK(rep.oracle_confirmed == 1);
  CHECK(rep.oracle_unknown == 0);
}

TEST_CASE("triangle on atomic beta-steps") {
  Path s = Path::beta(tower(2));
  Path r = Path::beta(tower(1));
  CellRoutes routes = triangle_routes(r, s);
  CHECK(routes.left.first() == Path::tau(s, Path::tau(Path::rho(tower(1)), r)));
  CHECK(routes.left.last() == Path::tau(s, r));
  CHECK(routes.right.last() == Path::tau(s, r));
  CheckReport rep = check_triangle(r, s);
  CHECK(rep.passed());
  CHECK(rep.oracle_confirmed == 1);
}

TEST_CASE("pentagon and triangle on reflexivities") {
  Path z = Path::rho(t("z"));
  CHECK(check_pentagon(z, z, z, z).passed());
  CHECK(check_triangle(z, z).passed());
}

TEST_CASE("print_sequence") {
  RwSequence sr = one_step(p("sigma(rho(a))"), "sr");
  CHECK(print_sequence(sr) == "sigma(rho(a))\n  |> sr @ root\nrho(a)");
  CHECK(print_sequence(reverse2(sr)) == "rho(a)\n  <| sr @ root\nsigma(rho(a))");
}
