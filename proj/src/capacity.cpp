#include "twic/capacity.hpp"

#include <algorithm>
#include <optional>

namespace twic {

std::string to_string(RegimeLabel r) {
  switch (r) {
    case RegimeLabel::CENTRAL: return "CENTRAL";
    case RegimeLabel::R1: return "R1";
    case RegimeLabel::R2: return "R2";
    case RegimeLabel::R3: return "R3";
    case RegimeLabel::R4: return "R4";
    case RegimeLabel::R5: return "R5";
    case RegimeLabel::R3_MIRROR: return "R3_MIRROR";
    case RegimeLabel::R4_MIRROR: return "R4_MIRROR";
    case RegimeLabel::R5_MIRROR: return "R5_MIRROR";
  }
  return "?";
}

std::string to_string(InteractionClass c) {
  switch (c) {
    case InteractionClass::NO_FEEDBACK_GAIN: return "NO_FEEDBACK_GAIN";
    case InteractionClass::FEEDBACK_BUT_NO_INTERACTION_GAIN:
      return "FEEDBACK_BUT_NO_INTERACTION_GAIN";
    case InteractionClass::INTERACTION_GAIN: return "INTERACTION_GAIN";
    case InteractionClass::PERFECT_FEEDBACK_ACHIEVABLE:
      return "PERFECT_FEEDBACK_ACHIEVABLE";
  }
  return "?";
}

int c_pf(int n, int m) { return std::max(2 * n - m, m); }

int c_no(int n, int m) {
  return std::min({2 * std::max(n - m, m), std::max(2 * n - m, m), 2 * n});
}

namespace {

std::optional<RatePair> intersect(const Constraint& p, const Constraint& q) {
  // Solve p.a R + p.b Rb = p.c, q.a R + q.b Rb = q.c.
  const std::int64_t det =
      std::int64_t(p.a) * q.b - std::int64_t(p.b) * q.a;
  if (det == 0) return std::nullopt;
  const std::int64_t rn = std::int64_t(p.c) * q.b - std::int64_t(p.b) * q.c;
  const std::int64_t bn = std::int64_t(p.a) * q.c - std::int64_t(p.c) * q.a;
  return RatePair(Rat(rn, det), Rat(bn, det));
}

std::vector<RatePair> feasible_corner_points(const std::vector<Constraint>& cs) {
  std::vector<RatePair> pts;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      auto p = intersect(cs[i], cs[j]);
      if (!p) continue;
      bool ok = true;
      for (const auto& c : cs) {
        if (!c.satisfied(*p)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      bool dup = false;
      for (const auto& q : pts) {
        if (q == *p) {
          dup = true;
          break;
        }
      }
      if (!dup) pts.push_back(*p);
    }
  }
  return pts;
}

Rat cross(const RatePair& o, const RatePair& a, const RatePair& b) {
  return (a.r_fwd - o.r_fwd) * (b.r_bwd - o.r_bwd) -
         (a.r_bwd - o.r_bwd) * (b.r_fwd - o.r_fwd);
}

// Monotone-chain hull; returns the corners counterclockwise. Collinear
// interior points are dropped so every output satisfies >= 2 constraints
// with equality.
std::vector<RatePair> hull_ccw(std::vector<RatePair> pts) {
  std::sort(pts.begin(), pts.end(), [](const RatePair& a, const RatePair& b) {
    if (a.r_fwd != b.r_fwd) return a.r_fwd < b.r_fwd;
    return a.r_bwd < b.r_bwd;
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<RatePair> h(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && !(cross(h[k - 2], h[k - 1], pts[i]) > Rat(0))) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
    while (k >= t && !(cross(h[k - 2], h[k - 1], pts[i]) > Rat(0))) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

} // namespace

std::vector<RatePair> enumerate_vertices(const std::vector<Constraint>& cs) {
  // Boundedness guard: the caller's systems always include R<=c and Rb<=c
  // caps (possibly via sum bounds); detect an unbounded system by probing a
  // far point along each axis.
  {
    const RatePair far_r(Rat(1'000'000'000), Rat(0));
    const RatePair far_b(Rat(0), Rat(1'000'000'000));
    bool capped_r = false, capped_b = false;
    for (const auto& c : cs) {
      if (!c.satisfied(far_r)) capped_r = true;
      if (!c.satisfied(far_b)) capped_b = true;
    }
    if (!capped_r || !capped_b)
      throw std::invalid_argument("enumerate_vertices: unbounded system");
  }
  auto pts = feasible_corner_points(cs);
  auto h = hull_ccw(std::move(pts));
  // Rotate so (0,0) comes first (the caller guarantees it is feasible).
  const RatePair origin(Rat(0), Rat(0));
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h[i] == origin) {
      std::rotate(h.begin(), h.begin() + static_cast<std::ptrdiff_t>(i), h.end());
      break;
    }
  }
  return h;
}

RegionSpec region(const ChannelParams& p) {
  RegionSpec rs;
  const int cf = c_pf(p.n, p.m);
  const int cb = c_pf(p.n_b, p.m_b);
  const int cut = 2 * (p.n + p.n_b);
  const int cut2 = 2 * std::max(p.n - p.m, p.m) +
                   2 * std::max(p.n_b - p.m_b, p.m_b);
  rs.constraints = {
      {1, 0, cf},   {0, 1, cb},  {1, 1, cut},
      {1, 1, cut2}, {-1, 0, 0},  {0, -1, 0},
  };
  rs.vertices = enumerate_vertices(rs.constraints);
  return rs;
}

namespace {

enum class Bucket { WEAK, MID, STRONG };

Bucket bucket(const Ratio& a) {
  if (a.inactive()) return Bucket::MID;
  if (a.greater_than(Rat(2))) return Bucket::STRONG;
  if (a.less_than(Rat(2, 3))) return Bucket::WEAK;
  return Bucket::MID;
}

} // namespace

RegimeLabel classify_regime(const ChannelParams& p) {
  const Bucket f = bucket(p.alpha());
  const Bucket b = bucket(p.alpha_b());
  if (f == Bucket::MID && b == Bucket::MID) return RegimeLabel::CENTRAL;
  if (f == Bucket::STRONG && b == Bucket::STRONG) return RegimeLabel::R1;
  if (f == Bucket::WEAK && b == Bucket::WEAK) return RegimeLabel::R2;
  if (f == Bucket::STRONG && b == Bucket::MID) return RegimeLabel::R3;
  if (f == Bucket::MID && b == Bucket::STRONG) return RegimeLabel::R3_MIRROR;
  if (f == Bucket::WEAK && b == Bucket::MID) return RegimeLabel::R4;
  if (f == Bucket::MID && b == Bucket::WEAK) return RegimeLabel::R4_MIRROR;
  if (f == Bucket::WEAK && b == Bucket::STRONG) return RegimeLabel::R5;
  return RegimeLabel::R5_MIRROR; // STRONG forward, WEAK backward
}

Corollary1Result corollary1_holds(const ChannelParams& p) {
  const int cf = c_pf(p.n, p.m), cnf = c_no(p.n, p.m);
  const int cb = c_pf(p.n_b, p.m_b), cnb = c_no(p.n_b, p.m_b);
  Corollary1Result r;
  const bool fwd_weak = p.alpha().less_than(Rat(2, 3));
  const bool fwd_strong = p.alpha().greater_than(Rat(2));
  const bool bwd_weak = p.alpha_b().less_than(Rat(2, 3));
  const bool bwd_strong = p.alpha_b().greater_than(Rat(2));
  if (fwd_weak && bwd_strong && cf - cnf <= 2 * p.m_b - cb &&
      cb - cnb <= 2 * p.n - cf) {
    r.holds = true;
    r.case_tag = 'I';
  } else if (bwd_weak && fwd_strong && cb - cnb <= 2 * p.m - cf &&
             cf - cnf <= 2 * p.n_b - cb) {
    r.holds = true;
    r.case_tag = 'J';
  }
  return r;
}

InteractionClass classify_interaction(const ChannelParams& p) {
  const int cf = c_pf(p.n, p.m), cnf = c_no(p.n, p.m);
  const int cb = c_pf(p.n_b, p.m_b), cnb = c_no(p.n_b, p.m_b);
  const bool gain_f = cf > cnf;
  const bool gain_b = cb > cnb;
  if (!gain_f && !gain_b) return InteractionClass::NO_FEEDBACK_GAIN;
  if (gain_f && gain_b && corollary1_holds(p).holds)
    return InteractionClass::PERFECT_FEEDBACK_ACHIEVABLE;
  // Interaction gain is a polytope question: does the region contain a
  // point dominating (C_no, C_no~) strictly in some coordinate?
  auto cs = region(p).constraints;
  cs.push_back({-1, 0, -cnf});
  cs.push_back({0, -1, -cnb});
  for (const auto& v : feasible_corner_points(cs)) {
    if (v.r_fwd > Rat(cnf) || v.r_bwd > Rat(cnb))
      return InteractionClass::INTERACTION_GAIN;
  }
  return InteractionClass::FEEDBACK_BUT_NO_INTERACTION_GAIN;
}

} // namespace twic
