#ifndef TWIC_CHANNEL_HPP
#define TWIC_CHANNEL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "twic/rational.hpp"

namespace twic {

// One node's bit column in one slot. Index 0 is the top (most significant)
// level; the figures are drawn top-to-bottom the same way.
using SignalVector = std::vector<std::uint8_t>;

struct InvalidSignal : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interference-to-signal ratio m/n with the two degenerate conventions:
// m>0, n=0 is +infinity; m=0, n=0 is "inactive" (a dead direction).
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  bool inactive() const { return num == 0 && den == 0; }
  bool infinite() const { return num > 0 && den == 0; }

  // Comparisons against finite thresholds; inactive compares like the
  // central band (callers treat a dead direction as central, see below).
  bool less_than(const Rat& t) const {
    if (infinite() || inactive()) return false;
    return Rat(num, den) < t;
  }
  bool greater_than(const Rat& t) const {
    if (infinite()) return true;
    if (inactive()) return false;
    return Rat(num, den) > t;
  }

  std::string str() const {
    if (inactive()) return "0/0";
    if (infinite()) return "inf";
    return Rat(num, den).str();
  }
};

// The channel quadruple (n, m, n_b, m_b): forward direct/cross level counts
// and their backward counterparts.
struct ChannelParams {
  int n = 0;
  int m = 0;
  int n_b = 0;
  int m_b = 0;

  ChannelParams() = default;
  ChannelParams(int n_, int m_, int nb_, int mb_)
      : n(n_), m(m_), n_b(nb_), m_b(mb_) {
    if (n < 0 || m < 0 || n_b < 0 || m_b < 0)
      throw std::invalid_argument("ChannelParams: negative level count");
  }

  int q_fwd() const { return n > m ? n : m; }
  int q_bwd() const { return n_b > m_b ? n_b : m_b; }

  Ratio alpha() const { return make_ratio(m, n); }
  Ratio alpha_b() const { return make_ratio(m_b, n_b); }
  Ratio gamma() const { return make_ratio(n_b, n); }

 private:
  static Ratio make_ratio(int num, int den) {
    Ratio r;
    if (den == 0) {
      r.num = num > 0 ? 1 : 0;
      r.den = 0;
    } else {
      const std::int64_t g = std::gcd(num, den);
      r.num = g ? num / g : 0;
      r.den = g ? den / g : 1;
      if (r.den == 0) r.den = 1;
      if (num == 0) {
        r.num = 0;
        r.den = 1;
      }
    }
    return r;
  }
};

// Received column for one direction of one IC: the direct signal shifted
// down by q-n XORed with the cross signal shifted down by q-m.
SignalVector transfer(const SignalVector& x_direct, const SignalVector& x_cross,
                      int n, int m);

// Top m bits of x (the part visible at the unintended receiver).
SignalVector visible_part(const SignalVector& x, int m);

inline SignalVector zero_signal(int q) {
  return SignalVector(static_cast<std::size_t>(q), 0);
}

} // namespace twic

#endif
