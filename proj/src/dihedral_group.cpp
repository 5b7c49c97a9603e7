#include "htg/dihedral_group.hpp"

#include <array>

#include "htg/colored_htg.hpp"

namespace htg {

namespace {

long long floor_mod(long long a, long long b) {
  const long long r = a % b;
  return r < 0 ? r + b : r;
}

long long floor_div(long long a, long long b) {
  return (a - floor_mod(a, b)) / b;
}

}  // namespace

int GroupSpec::ell() const {
  return static_cast<int>(floor_mod(2LL * carry - m, n()));
}

std::string GroupElement::to_string() const {
  return "x^" + std::to_string(j) + " y^" + std::to_string(i) + " t^" +
         std::to_string(eps);
}

GroupSpec group_spec(const HtgParams& p) {
  GroupSpec spec;
  spec.m = p.m();
  spec.half_n = p.n() / 2;
  spec.carry = ((p.ell() + p.m()) / 2) % spec.half_n;
  return spec;
}

HtgParams params_of(const GroupSpec& spec) {
  return validate_params(spec.m, spec.n(), spec.ell());
}

GroupElement make_element(const GroupSpec& spec, long long j, long long i,
                          int eps) {
  // y^i = y^r (y^m)^q = y^r x^(q*carry) with i = q*m + r.
  const long long q = floor_div(i, spec.m);
  const long long r = i - q * spec.m;
  GroupElement e;
  e.j = static_cast<int>(floor_mod(j + q * spec.carry, spec.half_n));
  e.i = static_cast<int>(r);
  e.eps = eps & 1;
  return e;
}

GroupElement generator_t(const GroupSpec&) { return {0, 0, 1}; }

GroupElement generator_x(const GroupSpec& spec) {
  return make_element(spec, 1, 0, 0);
}

GroupElement generator_y(const GroupSpec& spec) {
  return make_element(spec, 0, 1, 0);
}

GroupElement multiply(const GroupSpec& spec, const GroupElement& a,
                      const GroupElement& b) {
  // t^eps conjugation inverts the abelian part of b.
  const long long sign = a.eps ? -1 : 1;
  return make_element(spec, static_cast<long long>(a.j) + sign * b.j,
                      static_cast<long long>(a.i) + sign * b.i, a.eps ^ b.eps);
}

GroupElement inverse(const GroupSpec& spec, const GroupElement& a) {
  if (a.eps) return a;  // every x^j y^i t is an involution
  return make_element(spec, -static_cast<long long>(a.j),
                      -static_cast<long long>(a.i), 0);
}

GroupElement power(const GroupSpec& spec, const GroupElement& a, long long k) {
  const GroupElement base = k < 0 ? inverse(spec, a) : a;
  GroupElement result = identity_element();
  for (long long step = 0, count = k < 0 ? -k : k; step < count; ++step) {
    result = multiply(spec, result, base);
  }
  return result;
}

int element_order(const GroupSpec& spec, const GroupElement& a) {
  GroupElement acc = a;
  int k = 1;
  while (acc != identity_element()) {
    acc = multiply(spec, acc, a);
    ++k;
  }
  return k;
}

std::size_t element_index(const GroupSpec& spec, const GroupElement& a) {
  return (static_cast<std::size_t>(a.i) * spec.half_n + a.j) * 2 + a.eps;
}

GroupElement element_at(const GroupSpec& spec, std::size_t index) {
  GroupElement e;
  e.eps = static_cast<int>(index % 2);
  index /= 2;
  e.j = static_cast<int>(index % spec.half_n);
  e.i = static_cast<int>(index / spec.half_n);
  return e;
}

std::vector<GroupElement> all_elements(const GroupSpec& spec) {
  std::vector<GroupElement> out;
  out.reserve(spec.order());
  for (std::size_t k = 0; k < static_cast<std::size_t>(spec.order()); ++k) {
    out.push_back(element_at(spec, k));
  }
  return out;
}

ColoredHtg cayley_colored_graph(const GroupSpec& spec) {
  const GroupElement t = generator_t(spec);
  const std::array<GroupElement, 3> connection = {
      t, multiply(spec, t, generator_x(spec)),
      multiply(spec, t, generator_y(spec))};

  const auto elements = all_elements(spec);
  std::vector<std::array<Vertex, 3>> by_color(elements.size());
  for (std::size_t v = 0; v < elements.size(); ++v) {
    for (int c = 0; c < 3; ++c) {
      by_color[v][c] = static_cast<Vertex>(
          element_index(spec, multiply(spec, elements[v], connection[c])));
    }
  }
  return ColoredHtg(params_of(spec), std::move(by_color), elements);
}

}  // namespace htg
