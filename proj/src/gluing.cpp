#include "stargray/gluing.hpp"

#include <algorithm>
#include <stdexcept>

#include "stargray/tree.hpp"

namespace stargray {

GluingPair make_gluing_pair(std::string_view x) {
  if (!is_pullable(x))
    throw std::invalid_argument("gluing pair needs x = u0v011: " +
                                std::string(x));
  GluingPair p;
  p.x = std::string(x);
  p.y = pull(x);
  const int n = static_cast<int>(x.size() / 2);
  if (n >= 4 && p.x == star(n))
    throw std::invalid_argument("the star / footed-star pair is excluded");
  auto [u, v01] = decompose_u0v1(x);
  p.u = u;
  p.v = v01.substr(0, v01.size() - 2);
  return p;
}

std::vector<GluingPair> gluing_pairs(int n) {
  std::vector<GluingPair> out;
  const std::string s = star(n);
  for (const auto& w : dyck_words(n)) {
    if (!is_pullable(w)) continue;
    if (n >= 4 && w == s) continue;
    out.push_back(make_gluing_pair(w));
  }
  return out;
}

Hexagon hexagon(const GluingPair& p) {
  Hexagon h;
  h.x[0] = Bitstring("0" + p.x);
  for (int i = 1; i < 7; ++i) h.x[i] = f(h.x[i - 1]);
  h.y0 = Bitstring("0" + p.y);
  h.y1 = f(h.y0);
  const int m = static_cast<int>(p.x.size()) + 1;
  h.p1 = static_cast<int>(p.u.size()) + 2;
  h.p2 = m - 2;
  h.p3 = m - 1;
  return h;
}

GluingCycle gluing_cycle(const GluingPair& p, int i) {
  Hexagon h = hexagon(p);
  const int m = static_cast<int>(p.x.size()) + 1;
  GluingCycle c;
  c.rotation = ((i % m) + m) % m;
  const std::array<Bitstring, 6> base = {h.x[0], h.y1,   h.y0,
                                         h.x[5], h.x[6], h.x[1]};
  const std::array<int, 6> flips = {h.p2, h.p3, h.p1, h.p2, h.p3, h.p1};
  for (int k = 0; k < 6; ++k) {
    c.vertices[k] = rotate(base[k], c.rotation);
    c.flips[k] = wrap_position(flips[k] + c.rotation, m);
  }
  return c;
}

ExplicitGluingSet::ExplicitGluingSet(const std::vector<GluingPair>& pairs) {
  for (const auto& p : pairs) insert(p);
}

void ExplicitGluingSet::insert(const GluingPair& p) {
  xs_.insert(p.x);
  ys_.insert(p.y);
}

bool ExplicitGluingSet::in_x(std::string_view w) const {
  return xs_.find(w) != xs_.end();
}

bool ExplicitGluingSet::in_y(std::string_view w) const {
  return ys_.find(w) != ys_.end();
}

RoleSet roles(const MiddleVertex& v, const GluingMembership& g) {
  RoleSet r = 0;
  const std::string& t = v.dyck;
  std::string t1 = rho_inv(t);
  std::string t2 = rho_inv(t1);
  std::string t3 = rho_inv(t2);
  if (v.side == Side::A) {
    if (g.in_x(t)) r |= role_bit(Role::x0);
    if (g.in_y(t)) r |= role_bit(Role::y0);
    if (g.in_x(t1)) r |= role_bit(Role::x2);
    if (g.in_x(t2)) r |= role_bit(Role::x4);
    if (g.in_x(t3)) r |= role_bit(Role::x6);
  } else {
    if (g.in_x(t1)) r |= role_bit(Role::x1);
    if (g.in_y(t1)) r |= role_bit(Role::y1);
    if (g.in_x(t2)) r |= role_bit(Role::x3);
    if (g.in_x(t3)) r |= role_bit(Role::x5);
  }
  return r;
}

namespace {

// Frame offsets of the hexagon roles relative to the hexagon of 0x.
int role_offset(Role r) {
  switch (r) {
    case Role::x5:
      return 2;
    case Role::x6:
      return 3;
    default:
      return 0;
  }
}

Bitstring jump(const MiddleVertex& v, Role role, int pos) {
  const long m = static_cast<long>(v.word.size());
  long idx = (pos - 1 + role_offset(role) - v.ell) % m;
  if (idx < 0) idx += m;
  return v.word.flipped(static_cast<std::size_t>(idx));
}

int first_position(std::string_view x) {
  return static_cast<int>(decompose_u0v1(x).first.size()) + 2;
}

}  // namespace

Bitstring glued_step(const MiddleVertex& v, bool& forward,
                     const GluingMembership& g) {
  const int m = static_cast<int>(v.word.size());
  const std::string& t = v.dyck;
  if (forward) {
    if (v.side == Side::A) {
      if (g.in_x(t)) return jump(v, Role::x0, m - 2);
      if (g.in_y(t)) {
        forward = false;
        return jump(v, Role::y0, first_position(push(t)));
      }
    } else {
      std::string x = rho_pow(t, -3);
      if (g.in_x(x)) {
        forward = false;
        return jump(v, Role::x5, first_position(x));
      }
    }
    return f(v);
  }
  if (v.side == Side::B) {
    std::string w = rho_inv(t);
    if (g.in_x(w)) {
      forward = true;
      return jump(v, Role::x1, m - 1);
    }
    if (g.in_y(w)) return jump(v, Role::y1, m - 2);
  } else {
    std::string x = rho_pow(t, -3);
    if (g.in_x(x)) {
      forward = true;
      return jump(v, Role::x6, m - 1);
    }
  }
  return f_inv(v);
}

bool positive_direction(const MiddleVertex& v, const GluingMembership& g) {
  const RoleSet reversed = role_bit(Role::x1) | role_bit(Role::x2) |
                           role_bit(Role::x3) | role_bit(Role::x4) |
                           role_bit(Role::x5);
  return (roles(v, g) & reversed) == 0;
}

PeriodicPath graft(const GluingPair& p) {
  if (canonical_word(p.x) == canonical_word(p.y))
    throw std::invalid_argument("graft needs two different plane trees");
  ExplicitGluingSet g({p});
  const Bitstring start("0" + p.x);
  const int m = static_cast<int>(start.size());
  PeriodicPath path;
  path.flips.modulus = m;
  MiddleVertex v = dyck_align(start);
  const MiddleVertex first = v;
  bool forward = true;
  while (true) {
    path.vertices.push_back(v.word);
    Bitstring next = glued_step(v, forward, g);
    path.flips.entries.push_back(
        static_cast<int>(v.word.single_difference(next)) + 1);
    v = dyck_align(next);
    if (v.side == first.side && v.dyck == first.dyck) {
      path.flips.shift = ((v.ell - first.ell) % m + m) % m;
      break;
    }
    if (path.vertices.size() > static_cast<std::size_t>(4 * m * m))
      throw std::logic_error("grafted path does not close");
  }
  path.kappa = static_cast<int>(path.vertices.size());
  return path;
}

namespace {

using Edge = std::pair<Bitstring, Bitstring>;

Edge edge(const Bitstring& a, const Bitstring& b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::vector<Edge> f_edges(const Hexagon& h, int i) {
  return {edge(rotate(h.x[0], i), rotate(h.x[1], i)),
          edge(rotate(h.x[5], i), rotate(h.x[6], i)),
          edge(rotate(h.y0, i), rotate(h.y1, i))};
}

std::vector<Edge> reversed_path(const Hexagon& h, int i) {
  std::vector<Edge> out;
  for (int k = 1; k < 5; ++k)
    out.push_back(edge(rotate(h.x[k], i), rotate(h.x[k + 1], i)));
  return out;
}

bool contains(const std::vector<Edge>& es, const Edge& e) {
  return std::find(es.begin(), es.end(), e) != es.end();
}

}  // namespace

Relation relation(const GluingPair& p, int i, const GluingPair& q, int j) {
  const std::string px = canonical_word(p.x), py = canonical_word(p.y);
  const std::string qx = canonical_word(q.x), qy = canonical_word(q.y);
  if (px == py || qx == qy)
    throw std::invalid_argument("relation needs pairs joining two trees");
  if (std::minmax(px, py) == std::minmax(qx, qy))
    throw std::invalid_argument("relation needs pairs joining other trees");
  const int m = static_cast<int>(p.x.size()) + 1;
  Hexagon hp = hexagon(p), hq = hexagon(q);
  Relation r;
  auto fp = f_edges(hp, i), fq = f_edges(hq, j);
  for (const auto& e : fp)
    if (contains(fq, e)) r.compatible = false;
  r.nested = contains(reversed_path(hq, j),
                      edge(rotate(hp.y0, i), rotate(hp.y1, i)));
  r.interleaved = contains(reversed_path(hp, i),
                           edge(rotate(hq.x[0], j), rotate(hq.x[1], j)));
  const int d = (((i - j) % m) + m) % m;
  r.nested_algebraic = d == m - 1 && q.x == rho_inv(p.y);
  r.interleaved_algebraic = d == 2 % m && q.x == rho_pow(p.x, 2);
  return r;
}

}  // namespace stargray
