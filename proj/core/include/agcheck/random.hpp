#ifndef AGCHECK_RANDOM_HPP_
#define AGCHECK_RANDOM_HPP_

#include <cstdint>  // for uint64_t
#include <random>   // for mt19937_64

namespace agcheck {

  //! The splitmix64 finalizer, used to derive independent per-index seeds.
  constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  //! mt19937_64 with a portable bounded draw.  The standard distributions
  //! are implementation defined, so they are not used where streams must be
  //! reproducible across platforms.
  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    Rng(std::uint64_t seed, std::uint64_t index)
        : _engine(splitmix64(splitmix64(seed) ^ index)) {}

    //! Uniform in [0, n); n must be positive.
    std::uint64_t below(std::uint64_t n) {
      std::uint64_t const limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
      std::uint64_t       x;
      do {
        x = _engine();
      } while (x >= limit);
      return x % n;
    }

    std::uint64_t operator()() {
      return _engine();
    }

   private:
    std::mt19937_64 _engine;
  };

}  // namespace agcheck

#endif  // AGCHECK_RANDOM_HPP_
