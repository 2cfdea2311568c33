#pragma once

#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace repcount {

  struct ResourceLimits {
    double max_seconds    = 300.0;
    // Cap on the total degree of any polynomial entering a Groebner basis.
    unsigned max_degree   = 60;
    size_t   max_basis    = 20000;

    static ResourceLimits unlimited() {
      return {1e12, 255, static_cast<size_t>(-1)};
    }
  };

  // Thrown when a computation gives up because of a resource limit. The
  // result is inconclusive, never wrong.
  class ResourceLimitExceeded : public std::runtime_error {
   public:
    enum class Kind { time, degree, basis_size };

    ResourceLimitExceeded(Kind kind, std::string const& what)
        : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    [[nodiscard]] char const* kind_name() const noexcept {
      switch (kind_) {
        case Kind::time:
          return "time";
        case Kind::degree:
          return "degree";
        case Kind::basis_size:
          return "basis_size";
      }
      return "?";
    }

   private:
    Kind kind_;
  };

  class Budget {
   public:
    using clock = std::chrono::steady_clock;

    Budget() : Budget(ResourceLimits{}) {}
    explicit Budget(ResourceLimits limits)
        : limits_(limits),
          deadline_(limits.max_seconds >= 1e11
                        ? clock::time_point::max()
                        : clock::now()
                              + std::chrono::duration_cast<clock::duration>(
                                  std::chrono::duration<double>(
                                      limits.max_seconds))) {}

    static Budget const& unlimited() {
      static Budget const b(ResourceLimits::unlimited());
      return b;
    }

    [[nodiscard]] ResourceLimits const& limits() const noexcept {
      return limits_;
    }

    void check_time() const {
      if (deadline_ != clock::time_point::max() && clock::now() > deadline_) {
        throw ResourceLimitExceeded(
            ResourceLimitExceeded::Kind::time,
            "wall-clock budget of " + std::to_string(limits_.max_seconds)
                + " s exhausted");
      }
    }

    void check_degree(unsigned degree) const {
      if (degree > limits_.max_degree) {
        throw ResourceLimitExceeded(
            ResourceLimitExceeded::Kind::degree,
            "polynomial of degree " + std::to_string(degree)
                + " exceeds the degree cap "
                + std::to_string(limits_.max_degree));
      }
    }

    void check_basis_size(size_t size) const {
      if (size > limits_.max_basis) {
        throw ResourceLimitExceeded(
            ResourceLimitExceeded::Kind::basis_size,
            "basis size " + std::to_string(size) + " exceeds the cap "
                + std::to_string(limits_.max_basis));
      }
    }

   private:
    ResourceLimits    limits_;
    clock::time_point deadline_;
  };

}  // namespace repcount
