#ifndef TWIC_CAPACITY_HPP
#define TWIC_CAPACITY_HPP

#include <string>
#include <vector>

#include "twic/channel.hpp"
#include "twic/rational.hpp"

namespace twic {

struct RatePair {
  Rat r_fwd;
  Rat r_bwd;

  RatePair() = default;
  RatePair(Rat f, Rat b) : r_fwd(f), r_bwd(b) {}

  friend bool operator==(const RatePair& a, const RatePair& b) {
    return a.r_fwd == b.r_fwd && a.r_bwd == b.r_bwd;
  }
  friend bool operator!=(const RatePair& a, const RatePair& b) {
    return !(a == b);
  }
};

// Half plane a*R + b*Rb <= c with integer coefficients.
struct Constraint {
  int a = 0;
  int b = 0;
  int c = 0;

  bool satisfied(const RatePair& p) const {
    return Rat(a) * p.r_fwd + Rat(b) * p.r_bwd <= Rat(c);
  }
};

struct RegionSpec {
  std::vector<Constraint> constraints;
  std::vector<RatePair> vertices; // counterclockwise, starting at (0,0)

  bool contains(const RatePair& p) const {
    for (const auto& c : constraints)
      if (!c.satisfied(p)) return false;
    return true;
  }
  bool is_vertex(const RatePair& p) const {
    for (const auto& v : vertices)
      if (v == p) return true;
    return false;
  }
};

enum class RegimeLabel {
  CENTRAL,
  R1,
  R2,
  R3,
  R4,
  R5,
  R3_MIRROR,
  R4_MIRROR,
  R5_MIRROR,
};

enum class InteractionClass {
  NO_FEEDBACK_GAIN,
  FEEDBACK_BUT_NO_INTERACTION_GAIN,
  INTERACTION_GAIN,
  PERFECT_FEEDBACK_ACHIEVABLE,
};

std::string to_string(RegimeLabel r);
std::string to_string(InteractionClass c);

// Sum capacity with perfect feedback: max(2n - m, m).
int c_pf(int n, int m);

// Sum capacity without interaction: min{2 max(n-m, m), max(2n-m, m), 2n}.
int c_no(int n, int m);

// The outer-bound region on (R, Rb) as half planes plus its exact vertex set.
RegionSpec region(const ChannelParams& p);

// 2-D half-plane intersection. The system must be bounded and contain (0,0).
std::vector<RatePair> enumerate_vertices(const std::vector<Constraint>& cs);

RegimeLabel classify_regime(const ChannelParams& p);

struct Corollary1Result {
  bool holds = false;
  char case_tag = '-'; // 'I', 'J' (case II), or '-'
};
Corollary1Result corollary1_holds(const ChannelParams& p);

InteractionClass classify_interaction(const ChannelParams& p);

} // namespace twic

#endif
