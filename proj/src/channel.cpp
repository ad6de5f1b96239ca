#include "twic/channel.hpp"

namespace twic {

SignalVector transfer(const SignalVector& x_direct, const SignalVector& x_cross,
                      int n, int m) {
  const int q = n > m ? n : m;
  if (static_cast<int>(x_direct.size()) != q ||
      static_cast<int>(x_cross.size()) != q) {
    throw InvalidSignal("transfer: expected length " + std::to_string(q) +
                        ", got " + std::to_string(x_direct.size()) + " and " +
                        std::to_string(x_cross.size()));
  }
  SignalVector y(static_cast<std::size_t>(q), 0);
  const int sd = q - n; // down-shift applied to the direct signal
  const int sc = q - m; // down-shift applied to the cross signal
  for (int i = 0; i < q; ++i) {
    std::uint8_t v = 0;
    if (i - sd >= 0 && i - sd < q) v ^= x_direct[static_cast<std::size_t>(i - sd)] & 1u;
    if (i - sc >= 0 && i - sc < q) v ^= x_cross[static_cast<std::size_t>(i - sc)] & 1u;
    y[static_cast<std::size_t>(i)] = v;
  }
  return y;
}

SignalVector visible_part(const SignalVector& x, int m) {
  if (m < 0 || m > static_cast<int>(x.size()))
    throw std::invalid_argument("visible_part: m out of range");
  return SignalVector(x.begin(), x.begin() + m);
}

} // namespace twic
