#include "support/sampling.hpp"

#include "tmon/zone.hpp"

#include <doctest.h>

using namespace tmon;
using tmon::testing::contains;

namespace {

// x is index 1, y is index 2.
constexpr std::size_t X = 1, Y = 2;

raw_t le(std::int64_t v) { return bound::make(v, false); }
raw_t lt(std::int64_t v) { return bound::make(v, true); }

Zone eq(std::size_t dim, std::size_t i, std::int64_t v)
{
  return Zone(dim).constrain(i, 0, le(v)).constrain(0, i, le(-v));
}

const std::vector<std::string> names{"x", "y"};

} // namespace

TEST_CASE("bound encoding orders strict before non-strict")
{
  CHECK(lt(3) < le(3));
  CHECK(le(3) < lt(4));
  CHECK(le(100) < bound::infinity);
  CHECK(bound::add(le(2), lt(3)) == lt(5));
  CHECK(bound::add(le(2), bound::infinity) == bound::infinity);
  CHECK(bound::negate(lt(3)) == le(-3));
  CHECK(bound::value(lt(-4)) == -4);
  CHECK(bound::to_string(lt(7)) == "<7");
}

TEST_CASE("canonical form tightens through transitivity")
{
  const Zone z = Zone(3).constrain(X, 0, le(5)).constrain(Y, X, le(3));
  CHECK(z.upper(Y) == le(8));
  CHECK(Zone(2).constrain(X, 0, le(2)).constrain(0, X, le(-3)).is_empty());

  std::vector<raw_t> m(9, bound::infinity);
  m[0] = m[4] = m[8] = bound::le_zero;
  m[X * 3 + 0] = le(5);
  m[Y * 3 + X] = le(3);
  const Zone built = Zone::from_matrix(3, m);
  CHECK(built == z);
  std::vector<raw_t> again(9);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      again[i * 3 + j] = built.at(i, j);
  CHECK(Zone::from_matrix(3, again) == built);
}

TEST_CASE("up removes upper bounds and keeps differences")
{
  const Zone z0 = Zone::zero(3);
  const Zone u = z0.up();
  CHECK(u.to_string(names) == "x-y==0");
  CHECK(u.up() == u);

  const Zone p = eq(3, X, 3).intersect(eq(3, Y, 1));
  const Zone pu = p.up();
  CHECK(pu.lower(X) == le(-3));
  CHECK(pu.at(X, Y) == le(2));
  CHECK(pu.at(Y, X) == le(-2));
  CHECK(bound::is_infinite(pu.upper(X)));
}

TEST_CASE("down clips at zero")
{
  const Zone z = Zone(2).constrain(X, 0, le(3)).constrain(0, X, le(-2));
  CHECK(z.down() == Zone(2).constrain(X, 0, le(3)));

  const Zone d = Zone(3).constrain(X, Y, le(2)).constrain(Y, X, le(-2)).constrain(0, X, le(-3)).down();
  CHECK(d.lower(X) == le(-2));
  CHECK(d.at(X, Y) == le(2));
  CHECK(Zone::zero(3).down() == Zone::zero(3));
}

TEST_CASE("strict past makes upper bounds strict")
{
  const Zone z = eq(2, X, 0);
  CHECK(z.past(DelayMode::positive).is_empty());
  const Zone w = Zone(2).constrain(X, 0, le(4));
  CHECK(w.past(DelayMode::positive).upper(X) == lt(4));
  // A signed clock loses its lower bound.
  const Zone s = eq(3, X, 2).intersect(eq(3, Y, 0));
  const Zone ps = s.past(DelayMode::non_negative, clock_bit(Y));
  CHECK(ps.lower(X) == bound::le_zero);
  CHECK(ps.upper(Y) == bound::le_zero);
  CHECK(bound::is_infinite(ps.lower(Y)) == false);
  CHECK(ps.lower(Y) == le(2));
}

TEST_CASE("up_interval applies one uniform delay")
{
  const Zone u = Zone::zero(3).up_interval(1, 2);
  CHECK(u.to_string(names) == "x>=1 & x<=2 & y>=1 & y<=2 & x-y==0");
  CHECK(eq(2, X, 10).up_interval(40, 40) == eq(2, X, 50));
}

TEST_CASE("free and reset")
{
  const Zone p = eq(3, X, 1).intersect(eq(3, Y, 2));
  CHECK(p.free(clock_bit(X)) == eq(3, Y, 2));
  CHECK(p.free(0) == p);
  CHECK(p.free(clock_bit(X) | clock_bit(Y)) == Zone(3));
  CHECK(eq(3, X, 5).intersect(eq(3, Y, 5)).reset(clock_bit(X)) == eq(3, X, 0).intersect(eq(3, Y, 5)));
  CHECK(p.reset(0) == p);
  CHECK(Zone(3).reset(clock_bit(X) | clock_bit(Y)) == Zone::zero(3));
}

TEST_CASE("intersect and includes")
{
  CHECK(Zone(2).constrain(X, 0, le(2)).intersect(Zone(2).constrain(0, X, lt(-3))).is_empty());
  const Zone z = Zone(2).constrain(X, 0, le(7));
  CHECK(z.intersect(Zone(2)) == z);
  CHECK(Zone(2).constrain(0, X, le(-1)).intersect(Zone(2).constrain(X, 0, le(1))) == eq(2, X, 1));
  CHECK(Zone(2).includes(z));
  CHECK_FALSE(Zone(2).constrain(X, 0, le(2)).includes(Zone(2).constrain(X, 0, le(3))));
  CHECK(z.includes(z));
  CHECK(z.includes(Zone::empty(2)));
  CHECK_FALSE(Zone::empty(2).includes(z));
}

TEST_CASE("clock insertion and projection")
{
  const Zone z = eq(2, X, 4);
  const Zone plain = z.add_clock(false);
  CHECK(plain.dim() == 3);
  CHECK(plain.lower(2) == bound::le_zero);
  const Zone signed_clock = z.add_clock(true);
  CHECK(bound::is_infinite(signed_clock.lower(2)));
  CHECK(signed_clock.remove_clock(2) == z);
  const Zone two = eq(3, X, 1).intersect(eq(3, Y, 3));
  CHECK(two.remove_clock(X) == eq(2, 1, 3));
  CHECK(two.is_point());
  CHECK_FALSE(two.up().is_point());
}

TEST_CASE("relax_lower gives the downward closure in one clock")
{
  const Zone z = eq(3, X, 2).intersect(eq(3, Y, 0)).add_clock(true).constrain(3, 0, bound::le_zero);
  const Zone d = eq(3, X, 2).intersect(eq(3, Y, 0)).add_clock(true).constrain(3, 0, le(-5)).relax_lower(clock_bit(3));
  CHECK(z.includes(d));
  CHECK(bound::is_infinite(d.lower(3)));
  CHECK(d.upper(3) == le(-5));
}

TEST_CASE("rendering")
{
  CHECK(Zone(3).to_string(names) == "true");
  CHECK(Zone::empty(3).to_string(names) == "false");
  CHECK(Zone(3).constrain(X, 0, le(5)).constrain(Y, X, lt(3)).to_string(names) == "x<=5 & y<8 & y-x<3");
  CHECK(Zone::zero(2).to_string() == "x1==0");
}

TEST_CASE("reset and free agree on sampled points")
{
  // free(Z and x=0, x) holds exactly the points whose x-reset lies in Z and x=0.
  std::mt19937_64 rng(7);
  for (int k = 0; k < 200; ++k) {
    const Zone z = tmon::testing::random_zone(rng, 3, 4).constrain(X, 0, bound::le_zero);
    const Zone f = z.free(clock_bit(X));
    for (const auto& p : tmon::testing::grid(3, 10)) {
      auto r = p;
      r[X] = 0;
      CHECK(contains(f, p, 2) == contains(z, r, 2));
    }
  }
}
