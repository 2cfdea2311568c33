// Compiled with -mavx2; only reached after the dispatcher has confirmed
// CPU support.

#include "repcount/simd/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>

namespace repcount::simd {

  namespace {
    static_assert(kExponentBytes == 64, "AVX2 kernels assume 2x32 bytes");

    inline __m256i lo(uint8_t const* p) {
      return _mm256_loadu_si256(reinterpret_cast<__m256i const*>(p));
    }
    inline __m256i hi(uint8_t const* p) {
      return _mm256_loadu_si256(reinterpret_cast<__m256i const*>(p + 32));
    }
    inline void store(uint8_t* p, __m256i l, __m256i h) {
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), l);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(p + 32), h);
    }

    // Bit i set when byte i of a equals byte i of b.
    inline uint64_t eq_mask(uint8_t const* a, uint8_t const* b) {
      auto l = static_cast<uint32_t>(
          _mm256_movemask_epi8(_mm256_cmpeq_epi8(lo(a), lo(b))));
      auto h = static_cast<uint32_t>(
          _mm256_movemask_epi8(_mm256_cmpeq_epi8(hi(a), hi(b))));
      return static_cast<uint64_t>(l) | (static_cast<uint64_t>(h) << 32);
    }

    void add(uint8_t const* a, uint8_t const* b, uint8_t* out) {
      store(out,
            _mm256_add_epi8(lo(a), lo(b)),
            _mm256_add_epi8(hi(a), hi(b)));
    }

    void sub(uint8_t const* a, uint8_t const* b, uint8_t* out) {
      store(out,
            _mm256_sub_epi8(lo(a), lo(b)),
            _mm256_sub_epi8(hi(a), hi(b)));
    }

    void lcm(uint8_t const* a, uint8_t const* b, uint8_t* out) {
      store(out,
            _mm256_max_epu8(lo(a), lo(b)),
            _mm256_max_epu8(hi(a), hi(b)));
    }

    inline bool divides_impl(uint8_t const* a, uint8_t const* b) {
      __m256i bl = lo(b);
      __m256i bh = hi(b);
      __m256i l  = _mm256_cmpeq_epi8(_mm256_max_epu8(lo(a), bl), bl);
      __m256i h  = _mm256_cmpeq_epi8(_mm256_max_epu8(hi(a), bh), bh);
      return _mm256_movemask_epi8(_mm256_and_si256(l, h)) == -1;
    }

    bool divides(uint8_t const* a, uint8_t const* b) {
      return divides_impl(a, b);
    }

    bool coprime(uint8_t const* a, uint8_t const* b) {
      __m256i zero = _mm256_setzero_si256();
      __m256i l    = _mm256_cmpeq_epi8(_mm256_min_epu8(lo(a), lo(b)), zero);
      __m256i h    = _mm256_cmpeq_epi8(_mm256_min_epu8(hi(a), hi(b)), zero);
      return _mm256_movemask_epi8(_mm256_and_si256(l, h)) == -1;
    }

    int first_diff(uint8_t const* a, uint8_t const* b) {
      uint64_t diff = ~eq_mask(a, b);
      return diff == 0 ? -1 : __builtin_ctzll(diff);
    }

    int last_diff(uint8_t const* a, uint8_t const* b) {
      uint64_t diff = ~eq_mask(a, b);
      return diff == 0 ? -1 : 63 - __builtin_clzll(diff);
    }

    uint32_t prefix_sum(uint8_t const* a, size_t k) {
      if (k > kExponentBytes) {
        k = kExponentBytes;
      }
      __m256i const iota_lo = _mm256_setr_epi8(0,  1,  2,  3,  4,  5,  6,  7,
                                               8,  9,  10, 11, 12, 13, 14, 15,
                                               16, 17, 18, 19, 20, 21, 22, 23,
                                               24, 25, 26, 27, 28, 29, 30, 31);
      __m256i const iota_hi = _mm256_add_epi8(iota_lo, _mm256_set1_epi8(32));
      __m256i       limit   = _mm256_set1_epi8(static_cast<char>(k));
      __m256i       ml      = _mm256_cmpgt_epi8(limit, iota_lo);
      __m256i       mh      = _mm256_cmpgt_epi8(limit, iota_hi);
      __m256i       zero    = _mm256_setzero_si256();
      __m256i       sl = _mm256_sad_epu8(_mm256_and_si256(lo(a), ml), zero);
      __m256i       sh = _mm256_sad_epu8(_mm256_and_si256(hi(a), mh), zero);
      __m256i       s  = _mm256_add_epi64(sl, sh);
      __m128i       t  = _mm_add_epi64(_mm256_castsi256_si128(s),
                                _mm256_extracti128_si256(s, 1));
      t                = _mm_add_epi64(t, _mm_unpackhi_epi64(t, t));
      return static_cast<uint32_t>(_mm_cvtsi128_si64(t));
    }

    size_t find_divisor(uint8_t const* base,
                        ptrdiff_t         stride,
                        size_t         count,
                        uint8_t const* t) {
      __m256i tl = lo(t);
      __m256i th = hi(t);
      for (size_t i = 0; i < count; ++i) {
        uint8_t const* d = base + static_cast<ptrdiff_t>(i) * stride;
        __m256i        l = _mm256_cmpeq_epi8(_mm256_max_epu8(lo(d), tl), tl);
        __m256i        h = _mm256_cmpeq_epi8(_mm256_max_epu8(hi(d), th), th);
        if (_mm256_movemask_epi8(_mm256_and_si256(l, h)) == -1) {
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
      __m256i ml = lo(m);
      __m256i mh = hi(m);
      for (size_t i = 0; i < count; ++i) {
        uint8_t const* s = src + static_cast<ptrdiff_t>(i) * src_stride;
        store(dst + static_cast<ptrdiff_t>(i) * dst_stride,
              _mm256_add_epi8(lo(s), ml),
              _mm256_add_epi8(hi(s), mh));
      }
    }

    constexpr MonomialKernels kAvx2{"avx2",
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

  MonomialKernels const* avx2_kernels_unchecked() {
    return &kAvx2;
  }

}  // namespace repcount::simd

#else

namespace repcount::simd {
  MonomialKernels const* avx2_kernels_unchecked() {
    return nullptr;
  }
}  // namespace repcount::simd

#endif
