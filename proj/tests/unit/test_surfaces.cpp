#include <doctest.h>

#include "fano64/errors.hpp"
#include "fano64/surfaces.hpp"

using namespace fano64;

TEST_CASE("intersection form on F_n") {
  for (int n = 0; n <= 6; ++n) {
    const auto s = BaseSurface::hirzebruch(n);
    const auto h = SurfaceClass::on_ruled(s, 1, 0);
    const auto l = SurfaceClass::on_ruled(s, 0, 1);
    CHECK(intersect(h, h) == -n);
    CHECK(intersect(h, l) == 1);
    CHECK(intersect(l, l) == 0);
    CHECK(k_squared(s) == 8);
    CHECK(canonical_class(s) == SurfaceClass::on_ruled(s, -2, -(n + 2)));
  }
  const auto p2 = BaseSurface::plane();
  CHECK(k_squared(p2) == 9);
  CHECK(intersect(SurfaceClass::on_plane(2), SurfaceClass::on_plane(3)) == 6);
}

TEST_CASE("pairing is symmetric and bilinear") {
  const auto s = BaseSurface::hirzebruch(3);
  for (int a1 = -3; a1 <= 3; ++a1) {
    for (int b1 = -3; b1 <= 3; ++b1) {
      const auto x = SurfaceClass::on_ruled(s, a1, b1);
      const auto y = SurfaceClass::on_ruled(s, b1 - a1, a1 + 2);
      const auto z = SurfaceClass::on_ruled(s, 1, -b1);
      CHECK(intersect(x, y) == intersect(y, x));
      CHECK(intersect(x + z, y) == intersect(x, y) + intersect(z, y));
      CHECK(intersect(Integer(-4) * x, y) == -4 * intersect(x, y));
    }
  }
}

TEST_CASE("nef classes pair non-negatively") {
  for (int n = 0; n <= 4; ++n) {
    const auto s = BaseSurface::hirzebruch(n);
    for (int a1 = -4; a1 <= 4; ++a1) {
      for (int b1 = -4; b1 <= 10; ++b1) {
        const auto x = SurfaceClass::on_ruled(s, a1, b1);
        if (!is_nef(x)) continue;
        CHECK(intersect(x, x) >= 0);
        for (const auto& g : nef_cone_generators(s)) CHECK(intersect(x, g) >= 0);
        CHECK(intersect(x, SurfaceClass::on_ruled(s, 1, 0)) >= 0);
        CHECK(intersect(x, SurfaceClass::on_ruled(s, 0, 1)) >= 0);
      }
    }
  }
  CHECK(is_nef(SurfaceClass::on_plane(0)));
  CHECK_FALSE(is_nef(SurfaceClass::on_plane(-1)));
  CHECK_FALSE(is_nef(SurfaceClass::on_ruled(BaseSurface::hirzebruch(1), 1, 0)));
  CHECK(is_nef(SurfaceClass::on_ruled(BaseSurface::hirzebruch(0), 1, 0)));
}

TEST_CASE("names and parsing") {
  CHECK(BaseSurface::parse("P2").is_plane());
  CHECK(BaseSurface::parse("P1xP1") == BaseSurface::hirzebruch(0));
  CHECK(BaseSurface::parse("F4").n() == 4);
  CHECK(BaseSurface::hirzebruch(2).name() == "F2");
  CHECK_THROWS_AS(BaseSurface::parse("F"), UsageError);
  CHECK_THROWS_AS(BaseSurface::parse("F-1"), UsageError);
  CHECK_THROWS_AS(BaseSurface::parse("P3"), UsageError);
  const auto f2 = BaseSurface::hirzebruch(2);
  CHECK(SurfaceClass::on_ruled(f2, -2, -4).str() == "-2h-4l");
  CHECK(SurfaceClass::on_plane(3).str() == "3L");
  CHECK(SurfaceClass::zero(f2).str() == "0");
}

TEST_CASE("mixing surfaces is rejected") {
  const auto x = SurfaceClass::on_ruled(BaseSurface::hirzebruch(1), 1, 0);
  const auto y = SurfaceClass::on_ruled(BaseSurface::hirzebruch(2), 1, 0);
  CHECK_THROWS_AS(intersect(x, y), UsageError);
  CHECK_THROWS_AS(x + y, UsageError);
  CHECK_THROWS_AS(SurfaceClass::on_ruled(BaseSurface::plane(), 1, 0), UsageError);
  CHECK_THROWS_AS(SurfaceClass::of(BaseSurface::plane(), 1, 1), UsageError);
}
