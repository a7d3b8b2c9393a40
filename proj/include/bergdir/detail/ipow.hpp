#pragma once

namespace bergdir::detail {

/// x^k by repeated squaring; x^0 = 1 for every x, including zero.
template <typename T>
T ipow(T x, int k) {
  T out(1);
  while (k > 0) {
    if (k & 1) out *= x;
    x *= x;
    k >>= 1;
  }
  return out;
}

}  // namespace bergdir::detail
