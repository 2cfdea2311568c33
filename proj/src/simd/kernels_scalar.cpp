#include "repcount/simd/kernels.hpp"

namespace repcount::simd {

  namespace {
    constexpr size_t N = kExponentBytes;

    void add(uint8_t const* a, uint8_t const* b, uint8_t* out) {
      for (size_t i = 0; i < N; ++i) {
        out[i] = static_cast<uint8_t>(a[i] + b[i]);
      }
    }

    void sub(uint8_t const* a, uint8_t const* b, uint8_t* out) {
      for (size_t i = 0; i < N; ++i) {
        out[i] = static_cast<uint8_t>(a[i] - b[i]);
      }
    }

    void lcm(uint8_t const* a, uint8_t const* b, uint8_t* out) {
      for (size_t i = 0; i < N; ++i) {
        out[i] = a[i] > b[i] ? a[i] : b[i];
      }
    }

    bool divides(uint8_t const* a, uint8_t const* b) {
      for (size_t i = 0; i < N; ++i) {
        if (a[i] > b[i]) {
          return false;
        }
      }
      return true;
    }

    bool coprime(uint8_t const* a, uint8_t const* b) {
      for (size_t i = 0; i < N; ++i) {
        if (a[i] != 0 && b[i] != 0) {
          return false;
        }
      }
      return true;
    }

    int first_diff(uint8_t const* a, uint8_t const* b) {
      for (size_t i = 0; i < N; ++i) {
        if (a[i] != b[i]) {
          return static_cast<int>(i);
        }
      }
      return -1;
    }

    int last_diff(uint8_t const* a, uint8_t const* b) {
      for (size_t i = N; i-- > 0;) {
        if (a[i] != b[i]) {
          return static_cast<int>(i);
        }
      }
      return -1;
    }

    uint32_t prefix_sum(uint8_t const* a, size_t k) {
      uint32_t s = 0;
      for (size_t i = 0; i < k && i < N; ++i) {
        s += a[i];
      }
      return s;
    }

    size_t find_divisor(uint8_t const* base,
                        ptrdiff_t         stride,
                        size_t         count,
                        uint8_t const* t) {
      for (size_t i = 0; i < count; ++i) {
        if (divides(base + static_cast<ptrdiff_t>(i) * stride, t)) {
          return i;
        }
      }
      return count;
    }

    void add_batch(uint8_t const* src,
                   ptrdiff_t         src_stride,
                   size_t         count,
                   uint8_t const* m,
                   uint8_t*       dst,
                   ptrdiff_t         dst_stride) {
      for (size_t i = 0; i < count; ++i) {
        add(src + static_cast<ptrdiff_t>(i) * src_stride, m, dst + static_cast<ptrdiff_t>(i) * dst_stride);
      }
    }

    constexpr MonomialKernels kScalar{"scalar",
                                      add,
                                      sub,
                                      lcm,
                                      divides,
                                      coprime,
                                      first_diff,
                                      last_diff,
                                      prefix_sum,
                                      find_divisor,
                                      add_batch};
  }  // namespace

  MonomialKernels const& scalar_kernels() {
    return kScalar;
  }

}  // namespace repcount::simd
