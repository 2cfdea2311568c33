#pragma once

// Exponent-vector kernels. A monomial is a fixed block of kExponentBytes
// unsigned 8-bit exponents; every kernel below works on whole blocks, so the
// unused tail of a block must be zero.
//
// Two implementations exist: a portable scalar reference and an AVX2 variant.
// The active table is chosen once at startup from the CPU feature bits and can
// be overridden with REPCOUNT_SIMD=scalar|avx2 or select_kernels().

#include <cstddef>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace repcount::simd {

  inline constexpr size_t kExponentBytes = 64;

  struct MonomialKernels {
    char const* name;

    // out = a + b (bytewise, no saturation; callers bound the degree).
    void (*add)(uint8_t const* a, uint8_t const* b, uint8_t* out);
    // out = a - b; requires b <= a componentwise.
    void (*sub)(uint8_t const* a, uint8_t const* b, uint8_t* out);
    // out = max(a, b).
    void (*lcm)(uint8_t const* a, uint8_t const* b, uint8_t* out);
    // a <= b componentwise.
    bool (*divides)(uint8_t const* a, uint8_t const* b);
    // min(a, b) == 0 componentwise.
    bool (*coprime)(uint8_t const* a, uint8_t const* b);
    // Index of the first / last differing byte, or -1 when equal.
    int (*first_diff)(uint8_t const* a, uint8_t const* b);
    int (*last_diff)(uint8_t const* a, uint8_t const* b);
    // Sum of bytes [0, k).
    uint32_t (*prefix_sum)(uint8_t const* a, size_t k);
    // First i < count with block(base + i*stride) dividing t, else count.
    size_t (*find_divisor)(uint8_t const* base,
                           ptrdiff_t         stride,
                           size_t         count,
                           uint8_t const* t);
    // dst[i] = src[i] + m for count blocks laid out with the given strides.
    void (*add_batch)(uint8_t const* src,
                      ptrdiff_t         src_stride,
                      size_t         count,
                      uint8_t const* m,
                      uint8_t*       dst,
                      ptrdiff_t         dst_stride);
  };

  MonomialKernels const& scalar_kernels();
  // nullptr when the binary was built without AVX2 support or the CPU lacks it.
  MonomialKernels const* avx2_kernels();

  MonomialKernels const& active_kernels();
  // Returns false (and leaves the selection unchanged) for an unknown or
  // unsupported name.
  bool select_kernels(std::string_view name);
  std::vector<MonomialKernels const*> available_kernels();

  namespace detail {
    extern MonomialKernels const* g_active;
  }

}  // namespace repcount::simd
