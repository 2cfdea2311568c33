#include <cstdlib>
#include <string>

#include "repcount/simd/kernels.hpp"

namespace repcount::simd {

  MonomialKernels const* avx2_kernels_unchecked();

  namespace {
    bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
      __builtin_cpu_init();
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    }

    MonomialKernels const* initial_selection() {
      MonomialKernels const* best = avx2_kernels();
      if (char const* env = std::getenv("REPCOUNT_SIMD")) {
        std::string want(env);
        if (want == "scalar") {
          return &scalar_kernels();
        }
        if (want == "avx2" && best != nullptr) {
          return best;
        }
      }
      return best != nullptr ? best : &scalar_kernels();
    }
  }  // namespace

  namespace detail {
    MonomialKernels const* g_active = initial_selection();
  }

  MonomialKernels const* avx2_kernels() {
    static MonomialKernels const* k
        = cpu_has_avx2() ? avx2_kernels_unchecked() : nullptr;
    return k;
  }

  MonomialKernels const& active_kernels() {
    return *detail::g_active;
  }

  bool select_kernels(std::string_view name) {
    for (auto const* k : available_kernels()) {
      if (name == k->name) {
        detail::g_active = k;
        return true;
      }
    }
    return false;
  }

  std::vector<MonomialKernels const*> available_kernels() {
    std::vector<MonomialKernels const*> out{&scalar_kernels()};
    if (auto const* k = avx2_kernels()) {
      out.push_back(k);
    }
    return out;
  }

}  // namespace repcount::simd
