#include "fano64/surfaces.hpp"

#include <charconv>

#include "fano64/errors.hpp"

namespace fano64 {

namespace {

void require_same_surface(const SurfaceClass& x, const SurfaceClass& y) {
  if (x.surface() != y.surface()) {
    throw UsageError("classes live on different surfaces: " + x.surface().name() + " vs " +
                     y.surface().name());
  }
}

void append_term(std::string& out, const Integer& coeff, const char* symbol) {
  if (coeff == 0) return;
  if (coeff < 0) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  const Integer mag = abs(coeff);
  if (mag != 1) out += mag.str();
  out += symbol;
}

}  // namespace

BaseSurface BaseSurface::hirzebruch(int n) {
  if (n < 0) throw UsageError("Hirzebruch surface F_n needs n >= 0");
  return BaseSurface(Kind::Hirzebruch, n);
}

BaseSurface BaseSurface::parse(std::string_view name) {
  if (name == "P2") return plane();
  if (name == "P1xP1") return hirzebruch(0);
  if (name.size() >= 2 && name.front() == 'F') {
    int n = 0;
    const auto digits = name.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && n >= 0) return hirzebruch(n);
  }
  throw UsageError("unknown base surface '" + std::string(name) + "' (expected P2, P1xP1 or F<n>)");
}

std::string BaseSurface::name() const {
  return is_plane() ? std::string("P2") : "F" + std::to_string(n_);
}

SurfaceClass SurfaceClass::on_plane(Integer a) { return {BaseSurface::plane(), std::move(a), 0}; }

SurfaceClass SurfaceClass::on_ruled(const BaseSurface& s, Integer a, Integer b) {
  if (s.is_plane()) throw UsageError("h/l coordinates are only defined on F_n");
  return {s, std::move(a), std::move(b)};
}

SurfaceClass SurfaceClass::of(const BaseSurface& s, Integer a, Integer b) {
  if (s.is_plane()) {
    if (b != 0) throw UsageError("classes on P2 have a single coefficient");
    return on_plane(std::move(a));
  }
  return on_ruled(s, std::move(a), std::move(b));
}

SurfaceClass operator+(const SurfaceClass& x, const SurfaceClass& y) {
  require_same_surface(x, y);
  return {x.surface_, x.a_ + y.a_, x.b_ + y.b_};
}

SurfaceClass operator-(const SurfaceClass& x, const SurfaceClass& y) {
  require_same_surface(x, y);
  return {x.surface_, x.a_ - y.a_, x.b_ - y.b_};
}

std::string SurfaceClass::str() const {
  std::string out;
  if (surface_.is_plane()) {
    append_term(out, a_, "L");
  } else {
    append_term(out, a_, "h");
    append_term(out, b_, "l");
  }
  return out.empty() ? "0" : out;
}

Integer intersect(const SurfaceClass& d1, const SurfaceClass& d2) {
  require_same_surface(d1, d2);
  if (d1.surface().is_plane()) return d1.a() * d2.a();
  const Integer n = d1.surface().n();
  return -n * d1.a() * d2.a() + d1.a() * d2.b() + d1.b() * d2.a();
}

SurfaceClass canonical_class(const BaseSurface& s) {
  if (s.is_plane()) return SurfaceClass::on_plane(-3);
  return SurfaceClass::on_ruled(s, -2, -(s.n() + 2));
}

Integer k_squared(const BaseSurface& s) {
  const auto k = canonical_class(s);
  return intersect(k, k);
}

std::vector<SurfaceClass> nef_cone_generators(const BaseSurface& s) {
  if (s.is_plane()) return {SurfaceClass::on_plane(1)};
  return {SurfaceClass::on_ruled(s, 0, 1), SurfaceClass::on_ruled(s, 1, s.n())};
}

bool is_nef(const SurfaceClass& d) {
  if (d.surface().is_plane()) return d.a() >= 0;
  // a h + b l = a (h + n l) + (b - a n) l
  return d.a() >= 0 && d.b() >= d.a() * d.surface().n();
}

}  // namespace fano64
